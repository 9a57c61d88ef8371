// SPDX-License-Identifier: Apache-2.0
//
// Scan configuration: JSON schema, --set overrides, validation and the
// conversion from laboratory units into library objects.
//
//   {
//     "mode":     "profile" | "ratio" | "sweep" | "point",
//     "electron": { "E_i_MeV" | "v_i", "theta_i_deg", "phi_i_deg", "theta_f_deg", "phi_f_deg" },
//     "target":   { "Z" },
//     "field":    { "omega1_eV", "omega2_eV", "eta01", "eta02", "tau_ps", "delta_deg", "rho",
//                   "delta1", "delta2" },
//     "scan":     { "variable", "min", "max", "points", "spacing", "observable", "beta" },
//     "output":   { "path", "format", "precision" }
//   }
#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ensb/constants.hpp"
#include "ensb/errors.hpp"
#include "ensb/kinematics.hpp"
#include "ensb/profile.hpp"
#include "ensb/resonant.hpp"
#include "ensb/waves.hpp"

namespace ensb::cli {

using json = nlohmann::ordered_json;

enum class Mode
{
    profile,
    ratio,
    sweep,
    point,
};

enum class Spacing
{
    linear,
    log,
};

enum class Format
{
    csv,
    json,
};

struct ElectronConfig
{
    std::optional<double> energy_MeV;
    std::optional<double> velocity;
    double theta_i_deg{163.0};
    double phi_i_deg{0.0};
    double theta_f_deg{10.0};
    double phi_f_deg{0.0};
};

struct FieldConfig
{
    double omega1_eV{2.35};
    double omega2_eV{1.0};
    double eta01{0.1};
    double eta02{0.1};
    double tau_ps{0.1};
    double delta_deg{0.0};
    double rho{default_rho};
    int delta1{1};
    int delta2{-1};
};

struct ScanSpec
{
    std::string variable;
    double min{0};
    double max{0};
    int points{0};
    Spacing spacing{Spacing::linear};
    std::string observable{"ratio"};
    double beta{0.0};  //!< resonance parameter for the profile/xsec observables of a sweep
};

struct OutputSpec
{
    std::string path;
    Format format{Format::csv};
    int precision{12};
};

struct ScanConfig
{
    Mode mode{Mode::point};
    ElectronConfig electron;
    double z{1.0};
    FieldConfig field;
    ScanSpec scan;
    OutputSpec output;
};

inline std::vector<std::string> const& sweep_variables()
{
    static std::vector<std::string> const v{"E_i_MeV",   "v_i",   "theta_i_deg", "theta_f_deg", "omega1_eV",
                                            "omega2_eV", "eta01", "eta02",       "tau_ps",      "rho"};
    return v;
}

inline std::vector<std::string> const& sweep_observables()
{
    static std::vector<std::string> const v{"ratio", "profile", "width", "xsec"};
    return v;
}

inline char const* to_string(Mode m)
{
    switch (m)
    {
        case Mode::profile: return "profile";
        case Mode::ratio: return "ratio";
        case Mode::sweep: return "sweep";
        case Mode::point: return "point";
    }
    return "point";
}

inline char const* to_string(Spacing s) { return s == Spacing::log ? "log" : "linear"; }
inline char const* to_string(Format f) { return f == Format::json ? "json" : "csv"; }

inline std::optional<Mode> parse_mode(std::string const& s)
{
    if (s == "profile")
        return Mode::profile;
    if (s == "ratio")
        return Mode::ratio;
    if (s == "sweep")
        return Mode::sweep;
    if (s == "point" || s == "single-point")
        return Mode::point;
    return std::nullopt;
}

//---------------------------------------------------------------------------//
// Raw JSON handling
//---------------------------------------------------------------------------//

namespace detail {

//! Reads typed fields out of one JSON object and records every violation.
class Reader
{
  public:
    Reader(json const& obj, std::string prefix, std::vector<std::string>& errors)
        : obj_(obj), prefix_(std::move(prefix)), errors_(errors)
    {
    }

    void allow(std::vector<std::string> const& keys)
    {
        if (!obj_.is_object())
            return;
        for (auto it = obj_.begin(); it != obj_.end(); ++it)
            if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
                errors_.push_back("unknown key '" + prefix_ + it.key() + "'");
    }

    void number(char const* key, double& out)
    {
        if (auto v = optional_number(key))
            out = *v;
    }

    std::optional<double> optional_number(char const* key)
    {
        if (!obj_.contains(key) || obj_[key].is_null())
            return std::nullopt;
        auto const& v = obj_[key];
        if (!v.is_number())
        {
            errors_.push_back(prefix_ + key + " must be a number, got " + v.dump());
            return std::nullopt;
        }
        return v.get<double>();
    }

    void integer(char const* key, int& out)
    {
        if (!obj_.contains(key))
            return;
        auto const& v = obj_[key];
        if (!v.is_number_integer())
        {
            errors_.push_back(prefix_ + key + " must be an integer, got " + v.dump());
            return;
        }
        out = v.get<int>();
    }

    void string(char const* key, std::string& out)
    {
        if (!obj_.contains(key))
            return;
        auto const& v = obj_[key];
        if (!v.is_string())
        {
            errors_.push_back(prefix_ + key + " must be a string, got " + v.dump());
            return;
        }
        out = v.get<std::string>();
    }

  private:
    json const& obj_;
    std::string prefix_;
    std::vector<std::string>& errors_;
};

inline json const& section(json const& root, char const* key, std::vector<std::string>& errors)
{
    static json const empty = json::object();
    if (!root.contains(key))
        return empty;
    if (!root[key].is_object())
    {
        errors.push_back(std::string("'") + key + "' must be an object");
        return empty;
    }
    return root[key];
}

//! Parse "value" as JSON when possible, otherwise keep it as a string.
inline json parse_scalar(std::string const& text)
{
    try
    {
        return json::parse(text);
    }
    catch (json::parse_error const&)
    {
        return text;
    }
}

}  // namespace detail

//! Apply "a.b=value" overrides on top of a raw configuration.
inline void apply_overrides(json& root, std::vector<std::string> const& sets)
{
    std::vector<std::string> errors;
    for (auto const& s : sets)
    {
        auto const eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
        {
            errors.push_back("override '" + s + "' is not of the form key=value");
            continue;
        }
        std::string const path = s.substr(0, eq);
        json* node = &root;
        std::size_t start = 0;
        bool ok = true;
        while (true)
        {
            auto const dot = path.find('.', start);
            std::string const key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
            if (key.empty())
            {
                errors.push_back("override '" + s + "' has an empty key");
                ok = false;
                break;
            }
            if (!node->is_object())
                *node = json::object();
            node = &(*node)[key];
            if (dot == std::string::npos)
                break;
            start = dot + 1;
        }
        if (ok)
            *node = detail::parse_scalar(s.substr(eq + 1));
    }
    if (!errors.empty())
        throw ConfigError(errors);
}

inline json load_json_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError({"cannot open config file '" + path + "'"});
    try
    {
        return json::parse(in);
    }
    catch (json::parse_error const& e)
    {
        throw ConfigError({"config file '" + path + "' is not valid JSON: " + e.what()});
    }
}

//---------------------------------------------------------------------------//
// Validation
//---------------------------------------------------------------------------//

//! Default grid for a mode; sweep has none and must name its variable.
inline void apply_mode_defaults(ScanSpec& s, Mode mode)
{
    if (mode == Mode::profile && s.variable.empty())
    {
        s.variable = "beta";
        s.min = -4.0;
        s.max = 4.0;
        s.points = 401;
        s.spacing = Spacing::linear;
    }
    else if (mode == Mode::ratio && s.variable.empty())
    {
        s.variable = "v_i";
        s.min = 0.05;
        s.max = 0.9;
        s.points = 100;
        s.spacing = Spacing::log;
    }
}

inline LaserWave make_wave(double omega_eV, double eta0, int delta, double tau_ps)
{
    return {omega_eV * units::eV, eta0, delta, tau_ps * units::ps, Envelope::gaussian};
}

inline TwoWaveField make_field(FieldConfig const& f)
{
    return {make_wave(f.omega1_eV, f.eta01, f.delta1, f.tau_ps), make_wave(f.omega2_eV, f.eta02, f.delta2, f.tau_ps),
            f.delta_deg * units::degree};
}

inline ElectronState make_electron(ElectronConfig const& e)
{
    double const th = e.theta_i_deg * units::degree;
    double const ph = e.phi_i_deg * units::degree;
    if (e.velocity)
        return ElectronState::from_velocity(*e.velocity, th, ph);
    return ElectronState::from_energy(e.energy_MeV.value_or(1.02) * units::MeV, th, ph);
}

inline ResonantSetup make_setup(ScanConfig const& c)
{
    return interference_setup(make_electron(c.electron), c.electron.theta_f_deg * units::degree,
                              c.electron.phi_f_deg * units::degree, make_field(c.field), c.z, c.field.rho);
}

//! Physical and structural checks; returns every violation and any warnings.
inline Validation validate(ScanConfig const& c)
{
    Validation v;
    auto& err = v.errors;
    auto const& e = c.electron;
    if (e.energy_MeV && e.velocity)
        err.push_back("electron: give either E_i_MeV or v_i, not both");
    if (e.energy_MeV && !(*e.energy_MeV * units::MeV > electron_mass))
        err.push_back("electron.E_i_MeV must exceed the rest mass " + ensb::detail::fmt(electron_mass / units::MeV)
                      + " MeV, got " + ensb::detail::fmt(*e.energy_MeV));
    if (e.velocity && !(*e.velocity > 0.0 && *e.velocity < 1.0))
        err.push_back("electron.v_i must lie in (0, 1), got " + ensb::detail::fmt(*e.velocity));
    auto polar = [&](char const* name, double deg) {
        if (!(deg >= 0.0 && deg <= 180.0))
            err.push_back(std::string("electron.") + name + " must lie in [0, 180], got " + ensb::detail::fmt(deg));
    };
    polar("theta_i_deg", e.theta_i_deg);
    polar("theta_f_deg", e.theta_f_deg);
    if (!std::isfinite(e.phi_i_deg) || !std::isfinite(e.phi_f_deg))
        err.push_back("electron azimuths must be finite");
    if (!(c.z > 0.0))
        err.push_back("target.Z must be positive, got " + ensb::detail::fmt(c.z));
    if (!(c.field.rho > 0.0) || !std::isfinite(c.field.rho))
        err.push_back("field.rho must be positive, got " + ensb::detail::fmt(c.field.rho));

    auto const& f = c.field;
    LaserWave const w1 = make_wave(f.omega1_eV, f.eta01, f.delta1, f.tau_ps);
    LaserWave const w2 = make_wave(f.omega2_eV, f.eta02, f.delta2, f.tau_ps);
    v.merge(w1.validate(), "field wave1: ");
    v.merge(w2.validate(), "field wave2: ");
    if (f.omega1_eV > 0.0 && f.omega2_eV > 0.0 && !(f.omega1_eV > f.omega2_eV))
        err.push_back("field.omega1_eV must exceed field.omega2_eV, got " + ensb::detail::fmt(f.omega1_eV)
                      + " <= " + ensb::detail::fmt(f.omega2_eV));
    if (!std::isfinite(f.delta_deg))
        err.push_back("field.delta_deg must be finite");
    if (!(f.delta1 == 1 && f.delta2 == -1) && (f.delta1 == 1 || f.delta1 == -1) && (f.delta2 == 1 || f.delta2 == -1))
        v.warnings.push_back("only delta1 = -delta2 = 1 has resonant cross sections; observables will be null");

    auto const& s = c.scan;
    if (c.mode != Mode::point)
    {
        if (s.points < 2)
            err.push_back("scan.points must be at least 2, got " + std::to_string(s.points));
        if (!(s.min < s.max))
            err.push_back("scan.min must be below scan.max, got [" + ensb::detail::fmt(s.min) + ", "
                          + ensb::detail::fmt(s.max) + "]");
        if (s.spacing == Spacing::log && !(s.min > 0.0))
            err.push_back("log spacing needs scan.min > 0, got " + ensb::detail::fmt(s.min));
    }
    if (c.mode == Mode::profile && s.variable != "beta")
        err.push_back("profile scans run over 'beta', got '" + s.variable + "'");
    if (c.mode == Mode::ratio && s.variable != "v_i")
        err.push_back("ratio scans run over 'v_i', got '" + s.variable + "'");
    if (c.mode == Mode::sweep)
    {
        auto const& vars = sweep_variables();
        if (std::find(vars.begin(), vars.end(), s.variable) == vars.end())
            err.push_back("scan.variable '" + s.variable + "' is not sweepable");
        auto const& obs = sweep_observables();
        if (std::find(obs.begin(), obs.end(), s.observable) == obs.end())
            err.push_back("scan.observable '" + s.observable + "' is unknown");
    }
    if (!std::isfinite(s.beta))
        err.push_back("scan.beta must be finite");
    if (c.output.precision < 1 || c.output.precision > 17)
        err.push_back("output.precision must lie in [1, 17], got " + std::to_string(c.output.precision));
    return v;
}

//---------------------------------------------------------------------------//
// JSON <-> ScanConfig
//---------------------------------------------------------------------------//

/*!
 * Build a validated configuration from raw JSON. A mode given by the caller
 * (the subcommand) wins over, and must agree with, the file's "mode".
 */
inline ScanConfig parse_config(json const& root, std::optional<Mode> forced_mode = std::nullopt,
                               std::vector<std::string>* warnings = nullptr)
{
    std::vector<std::string> errors;
    if (!root.is_object())
        throw ConfigError({"configuration must be a JSON object"});
    ScanConfig c;

    detail::Reader top(root, "", errors);
    top.allow({"mode", "electron", "target", "field", "scan", "output"});
    std::string mode_name;
    top.string("mode", mode_name);
    std::optional<Mode> file_mode;
    if (!mode_name.empty())
    {
        file_mode = parse_mode(mode_name);
        if (!file_mode)
            errors.push_back("mode '" + mode_name + "' is unknown");
    }
    if (forced_mode && file_mode && *forced_mode != *file_mode)
        errors.push_back(std::string("config mode '") + to_string(*file_mode) + "' conflicts with subcommand '"
                         + to_string(*forced_mode) + "'");
    c.mode = forced_mode ? *forced_mode : file_mode.value_or(Mode::point);

    detail::Reader el(detail::section(root, "electron", errors), "electron.", errors);
    el.allow({"E_i_MeV", "v_i", "theta_i_deg", "phi_i_deg", "theta_f_deg", "phi_f_deg"});
    c.electron.energy_MeV = el.optional_number("E_i_MeV");
    c.electron.velocity = el.optional_number("v_i");
    el.number("theta_i_deg", c.electron.theta_i_deg);
    el.number("phi_i_deg", c.electron.phi_i_deg);
    el.number("theta_f_deg", c.electron.theta_f_deg);
    el.number("phi_f_deg", c.electron.phi_f_deg);
    if (!c.electron.energy_MeV && !c.electron.velocity)
        c.electron.energy_MeV = 1.02;

    detail::Reader tg(detail::section(root, "target", errors), "target.", errors);
    tg.allow({"Z"});
    tg.number("Z", c.z);

    detail::Reader fd(detail::section(root, "field", errors), "field.", errors);
    fd.allow({"omega1_eV", "omega2_eV", "eta01", "eta02", "tau_ps", "delta_deg", "rho", "delta1", "delta2"});
    fd.number("omega1_eV", c.field.omega1_eV);
    fd.number("omega2_eV", c.field.omega2_eV);
    fd.number("eta01", c.field.eta01);
    fd.number("eta02", c.field.eta02);
    fd.number("tau_ps", c.field.tau_ps);
    fd.number("delta_deg", c.field.delta_deg);
    fd.number("rho", c.field.rho);
    fd.integer("delta1", c.field.delta1);
    fd.integer("delta2", c.field.delta2);

    json const& scan = detail::section(root, "scan", errors);
    detail::Reader sc(scan, "scan.", errors);
    sc.allow({"variable", "min", "max", "points", "spacing", "observable", "beta"});
    apply_mode_defaults(c.scan, c.mode);
    sc.string("variable", c.scan.variable);
    sc.number("min", c.scan.min);
    sc.number("max", c.scan.max);
    sc.integer("points", c.scan.points);
    std::string spacing = to_string(c.scan.spacing);
    sc.string("spacing", spacing);
    if (spacing == "log")
        c.scan.spacing = Spacing::log;
    else if (spacing == "linear")
        c.scan.spacing = Spacing::linear;
    else
        errors.push_back("scan.spacing must be 'linear' or 'log', got '" + spacing + "'");
    sc.string("observable", c.scan.observable);
    sc.number("beta", c.scan.beta);

    detail::Reader out(detail::section(root, "output", errors), "output.", errors);
    out.allow({"path", "format", "precision"});
    out.string("path", c.output.path);
    std::string format = to_string(c.output.format);
    out.string("format", format);
    if (format == "csv")
        c.output.format = Format::csv;
    else if (format == "json")
        c.output.format = Format::json;
    else
        errors.push_back("output.format must be 'csv' or 'json', got '" + format + "'");
    out.integer("precision", c.output.precision);

    auto v = validate(c);
    errors.insert(errors.end(), v.errors.begin(), v.errors.end());
    if (!errors.empty())
        throw ConfigError(errors);
    if (warnings)
        *warnings = v.warnings;
    return c;
}

//! Fully resolved configuration; feeding it back reproduces the run.
inline json to_json(ScanConfig const& c)
{
    json j;
    j["mode"] = to_string(c.mode);
    json e;
    if (c.electron.velocity)
        e["v_i"] = *c.electron.velocity;
    else
        e["E_i_MeV"] = c.electron.energy_MeV.value_or(1.02);
    e["theta_i_deg"] = c.electron.theta_i_deg;
    e["phi_i_deg"] = c.electron.phi_i_deg;
    e["theta_f_deg"] = c.electron.theta_f_deg;
    e["phi_f_deg"] = c.electron.phi_f_deg;
    j["electron"] = e;
    j["target"] = {{"Z", c.z}};
    j["field"] = {{"omega1_eV", c.field.omega1_eV}, {"omega2_eV", c.field.omega2_eV}, {"eta01", c.field.eta01},
                  {"eta02", c.field.eta02},         {"tau_ps", c.field.tau_ps},       {"delta_deg", c.field.delta_deg},
                  {"rho", c.field.rho},             {"delta1", c.field.delta1},       {"delta2", c.field.delta2}};
    if (c.mode != Mode::point)
        j["scan"] = {{"variable", c.scan.variable}, {"min", c.scan.min},
                     {"max", c.scan.max},           {"points", c.scan.points},
                     {"spacing", to_string(c.scan.spacing)}, {"observable", c.scan.observable},
                     {"beta", c.scan.beta}};
    j["output"] = {{"format", to_string(c.output.format)}, {"precision", c.output.precision}};
    return j;
}

}  // namespace ensb::cli
