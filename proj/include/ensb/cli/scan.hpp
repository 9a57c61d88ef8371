// SPDX-License-Identifier: Apache-2.0
//
// Grid scans over one configuration variable. Rows are evaluated
// concurrently and assembled in grid order; a failing cell becomes a null
// marker and the row records why.
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ensb/cli/config.hpp"
#include "ensb/emission.hpp"
#include "ensb/errors.hpp"
#include "ensb/kinematics.hpp"
#include "ensb/profile.hpp"
#include "ensb/resonant.hpp"
#include "ensb/version.hpp"
#include "ensb/waves.hpp"

namespace ensb::cli {

using Cell = std::optional<double>;

struct Row
{
    std::vector<Cell> cells;
    std::string status{"ok"};
};

struct ScanResult
{
    json meta;
    std::vector<std::string> columns;
    std::vector<Row> rows;

    [[nodiscard]] std::size_t failed_rows() const
    {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(),
                                                      [](Row const& r) { return r.status != "ok"; }));
    }
};

//! Grid points in ascending order; log spacing is geometric.
[[nodiscard]] inline std::vector<double> make_grid(ScanSpec const& s)
{
    std::vector<double> g(static_cast<std::size_t>(s.points));
    int const last = s.points - 1;
    for (int k = 0; k <= last; ++k)
    {
        double const t = static_cast<double>(k) / last;
        g[k] = s.spacing == Spacing::log ? std::exp(std::log(s.min) + t * (std::log(s.max) - std::log(s.min)))
                                         : s.min + t * (s.max - s.min);
    }
    g.front() = s.min;
    g.back() = s.max;
    return g;
}

//! Copy of the configuration with one scan variable set.
[[nodiscard]] inline ScanConfig with_value(ScanConfig c, std::string const& var, double x)
{
    if (var == "E_i_MeV")
    {
        c.electron.energy_MeV = x;
        c.electron.velocity.reset();
    }
    else if (var == "v_i")
    {
        c.electron.velocity = x;
        c.electron.energy_MeV.reset();
    }
    else if (var == "theta_i_deg")
        c.electron.theta_i_deg = x;
    else if (var == "theta_f_deg")
        c.electron.theta_f_deg = x;
    else if (var == "omega1_eV")
        c.field.omega1_eV = x;
    else if (var == "omega2_eV")
        c.field.omega2_eV = x;
    else if (var == "eta01")
        c.field.eta01 = x;
    else if (var == "eta02")
        c.field.eta02 = x;
    else if (var == "tau_ps")
        c.field.tau_ps = x;
    else if (var == "rho")
        c.field.rho = x;
    else if (var == "beta")
        c.scan.beta = x;
    return c;
}

//---------------------------------------------------------------------------//
// Column sets
//---------------------------------------------------------------------------//

struct Column
{
    std::string name;
    std::function<double(ScanConfig const&)> eval;
};

namespace detail {

inline double omega_tau(ScanConfig const& c, int j)
{
    return quasimono_margin((j == 1 ? c.field.omega1_eV : c.field.omega2_eV) * units::eV, c.field.tau_ps * units::ps);
}

inline double profile_at(ScanConfig const& c, Channel ch)
{
    return profile_res({c.scan.beta, c.field.rho, ch.s1, ch.s2});
}

inline ChannelResonance resonance(ScanConfig const& c, Channel ch) { return channel_resonance(make_setup(c), ch); }

//! omega' at the scan's beta for channel (1,0).
inline double omega_prime_10(ScanConfig const& c)
{
    auto const r = resonance(c, channel_10);
    return frequency_at_beta(c.scan.beta, r.omega_res, r.omega, c.field.tau_ps * units::ps);
}

}  // namespace detail

[[nodiscard]] inline std::vector<Column> profile_columns()
{
    return {
        {"omega_prime_over_res",
         [](ScanConfig const& c) { return 1.0 - 2.0 * c.scan.beta / detail::omega_tau(c, 1); }},
        {"P_res_10", [](ScanConfig const& c) { return detail::profile_at(c, channel_10); }},
        {"P_res_11", [](ScanConfig const& c) { return detail::profile_at(c, channel_11); }},
        {"gaussian", [](ScanConfig const& c) { return profile_gaussian(c.scan.beta); }},
    };
}

[[nodiscard]] inline std::vector<Column> ratio_columns()
{
    return {
        {"R10_closed", [](ScanConfig const& c) { return ratio_closed_form(make_setup(c), channel_10); }},
        {"R10_direct", [](ScanConfig const& c) { return ratio_direct(make_setup(c), channel_10); }},
        {"R01", [](ScanConfig const& c) { return ratio_closed_form(make_setup(c), channel_01); }},
        {"R_res",
         [](ScanConfig const& c) {
             auto const s = make_setup(c);
             return ratio_closed_form(s, channel_10) + ratio_closed_form(s, channel_01);
         }},
    };
}

[[nodiscard]] inline std::vector<Column> width_columns()
{
    return {
        {"omega_res_10_eV", [](ScanConfig const& c) { return detail::resonance(c, channel_10).omega_res; }},
        {"Gamma_10_eV", [](ScanConfig const& c) { return detail::resonance(c, channel_10).transit_width; }},
        {"omega_res_01_eV", [](ScanConfig const& c) { return detail::resonance(c, channel_01).omega_res; }},
        {"Gamma_01_eV", [](ScanConfig const& c) { return detail::resonance(c, channel_01).transit_width; }},
    };
}

[[nodiscard]] inline std::vector<Column> xsec_columns()
{
    auto summed = [](Channel ch) {
        return [ch](ScanConfig const& c) {
            return resonant_summed_xsec(make_setup(c), detail::omega_prime_10(c), {ch}).value;
        };
    };
    return {
        {"summed_10", summed(channel_10)},
        {"summed_01", summed(channel_01)},
        {"summed_11", summed(channel_11)},
        {"integrated", [](ScanConfig const& c) { return resonant_integrated_xsec(make_setup(c)).value; }},
    };
}

[[nodiscard]] inline std::vector<Column> sweep_columns(std::string const& observable)
{
    if (observable == "profile")
        return {{"P_res_10", [](ScanConfig const& c) { return detail::profile_at(c, channel_10); }},
                {"P_res_11", [](ScanConfig const& c) { return detail::profile_at(c, channel_11); }}};
    if (observable == "width")
        return width_columns();
    if (observable == "xsec")
        return xsec_columns();
    return ratio_columns();
}

[[nodiscard]] inline std::vector<Column> point_columns()
{
    auto cols = std::vector<Column>{
        {"omega1_tau", [](ScanConfig const& c) { return detail::omega_tau(c, 1); }},
        {"omega2_tau", [](ScanConfig const& c) { return detail::omega_tau(c, 2); }},
        {"a_i", [](ScanConfig const& c) { return a_parameter(make_electron(c.electron)); }},
        {"theta_prime_deg",
         [](ScanConfig const& c) { return units::to_degrees(interference_photon_angle(make_electron(c.electron)).theta); }},
        {"omega_res_11_eV", [](ScanConfig const& c) { return detail::resonance(c, channel_11).omega_res; }},
        {"dW_10", [](ScanConfig const& c) { return detail::resonance(c, channel_10).emission.value; }},
        {"dW_11", [](ScanConfig const& c) { return detail::resonance(c, channel_11).emission.value; }},
    };
    for (auto&& group : {width_columns(), ratio_columns(), xsec_columns()})
        cols.insert(cols.end(), group.begin(), group.end());
    return cols;
}

//---------------------------------------------------------------------------//
// Evaluation
//---------------------------------------------------------------------------//

namespace detail {

inline std::string describe(std::exception const& e)
{
    char const* kind = "error";
    if (dynamic_cast<SingularityError const*>(&e))
        kind = "singular";
    else if (dynamic_cast<ConvergenceError const*>(&e))
        kind = "convergence";
    else if (dynamic_cast<CapabilityError const*>(&e))
        kind = "capability";
    else if (dynamic_cast<ConfigError const*>(&e))
        kind = "config";
    else if (dynamic_cast<DomainError const*>(&e))
        kind = "domain";
    return std::string(kind) + ": " + e.what();
}

inline Row evaluate_row(ScanConfig const& c, std::optional<double> x, std::vector<Column> const& columns)
{
    Row row;
    if (x)
        row.cells.push_back(*x);
    for (auto const& col : columns)
    {
        try
        {
            double const v = col.eval(c);
            row.cells.push_back(std::isfinite(v) ? Cell{v} : Cell{});
            if (!std::isfinite(v) && row.status == "ok")
                row.status = col.name + ": non-finite value";
        }
        catch (std::exception const& e)
        {
            row.cells.push_back(std::nullopt);
            if (row.status == "ok")
                row.status = col.name + ": " + describe(e);
        }
    }
    return row;
}

//! Run f(k) for k in [0, n) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads == 1)
    {
        for (std::size_t k = 0; k < n; ++k)
            f(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < n; k = next++)
                f(k);
        });
    for (auto& th : pool)
        th.join();
}

}  // namespace detail

[[nodiscard]] inline json make_meta(ScanConfig const& c, std::vector<std::string> const& warnings)
{
    json m;
    m["tool"] = "ensb";
    m["version"] = version_string;
    m["config"] = to_json(c);
    json derived;
    derived["omega1_tau"] = detail::omega_tau(c, 1);
    derived["omega2_tau"] = detail::omega_tau(c, 2);
    m["derived"] = derived;
    m["warnings"] = warnings;
    return m;
}

/*!
 * Evaluate the configured scan. The scan variable is the first column
 * except in point mode, which yields a single row.
 */
[[nodiscard]] inline ScanResult run(ScanConfig const& c, unsigned threads = 1,
                                    std::vector<std::string> const& warnings = {})
{
    ScanResult out;
    out.meta = make_meta(c, warnings);
    std::vector<Column> columns;
    switch (c.mode)
    {
        case Mode::profile: columns = profile_columns(); break;
        case Mode::ratio: columns = ratio_columns(); break;
        case Mode::sweep: columns = sweep_columns(c.scan.observable); break;
        case Mode::point: columns = point_columns(); break;
    }
    if (c.mode == Mode::point)
    {
        for (auto const& col : columns)
            out.columns.push_back(col.name);
        out.rows.push_back(detail::evaluate_row(c, std::nullopt, columns));
        return out;
    }
    out.columns.push_back(c.scan.variable);
    for (auto const& col : columns)
        out.columns.push_back(col.name);
    auto const grid = make_grid(c.scan);
    out.rows.resize(grid.size());
    detail::parallel_for(grid.size(), threads, [&](std::size_t k) {
        out.rows[k] = detail::evaluate_row(with_value(c, c.scan.variable, grid[k]), grid[k], columns);
    });
    return out;
}

}  // namespace ensb::cli
