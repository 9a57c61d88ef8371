// SPDX-License-Identifier: Apache-2.0
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "ensb/cli/config.hpp"
#include "ensb/cli/output.hpp"
#include "ensb/cli/scan.hpp"

using namespace ensb::cli;
namespace fs = std::filesystem;

namespace {

json peak_raw()
{
    return json::parse(R"({
        "mode": "point",
        "electron": {"E_i_MeV": 1.02, "theta_i_deg": 163, "theta_f_deg": 10},
        "field": {"omega1_eV": 2.35, "omega2_eV": 1.0, "eta01": 0.1, "eta02": 0.1, "tau_ps": 0.1}
    })");
}

std::vector<std::string> violations_of(json const& raw, std::optional<Mode> mode = std::nullopt)
{
    try
    {
        (void)parse_config(raw, mode);
    }
    catch (ensb::ConfigError const& e)
    {
        return e.violations();
    }
    return {};
}

bool mentions(std::vector<std::string> const& v, std::string const& needle)
{
    return std::any_of(v.begin(), v.end(), [&](auto const& s) { return s.find(needle) != std::string::npos; });
}

std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult
{
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::string const& args)
{
    static int counter = 0;
    auto const dir = fs::temp_directory_path() / ("ensb_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto const out = dir / ("out" + std::to_string(counter) + ".txt");
    auto const err = dir / ("err" + std::to_string(counter++) + ".txt");
    std::string const cmd = std::string(ENSB_EXE) + " " + args + " >" + out.string() + " 2>" + err.string();
    int const status = std::system(cmd.c_str());
    int const code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

std::string sample(char const* name) { return std::string(ENSB_SAMPLES) + "/" + name; }

}  // namespace

//---------------------------------------------------------------------------//
// Configuration
//---------------------------------------------------------------------------//

TEST(Config, ReferenceParses)
{
    std::vector<std::string> warnings;
    auto const c = parse_config(peak_raw(), std::nullopt, &warnings);
    EXPECT_EQ(c.mode, Mode::point);
    EXPECT_TRUE(warnings.empty());
    auto const meta = make_meta(c, warnings);
    EXPECT_NEAR(meta["derived"]["omega1_tau"].get<double>(), 357.0, 0.5);
    EXPECT_NEAR(meta["derived"]["omega2_tau"].get<double>(), 152.0, 0.5);
}

TEST(Config, DefaultsAndModes)
{
    auto const c = parse_config(json::object());
    EXPECT_EQ(c.mode, Mode::point);
    EXPECT_DOUBLE_EQ(*c.electron.energy_MeV, 1.02);
    EXPECT_DOUBLE_EQ(c.field.omega1_eV, 2.35);
    auto const p = parse_config(json::object(), Mode::profile);
    EXPECT_EQ(p.scan.variable, "beta");
    EXPECT_EQ(p.scan.points, 401);
    auto const r = parse_config(json::object(), Mode::ratio);
    EXPECT_EQ(r.scan.variable, "v_i");
    EXPECT_EQ(r.scan.spacing, Spacing::log);
    EXPECT_TRUE(mentions(violations_of(json::object(), Mode::sweep), "not sweepable"));
    EXPECT_TRUE(mentions(violations_of(json{{"mode", "ratio"}}, Mode::profile), "conflicts"));
}

TEST(Config, RejectsStrongField)
{
    auto raw = peak_raw();
    raw["field"]["eta01"] = 0.5;
    EXPECT_TRUE(mentions(violations_of(raw), "eta"));
}

TEST(Config, RejectsFrequencyOrder)
{
    auto raw = peak_raw();
    raw["field"]["omega2_eV"] = 3.0;
    EXPECT_TRUE(mentions(violations_of(raw), "omega1_eV must exceed"));
}

TEST(Config, RejectsUnknownKeys)
{
    auto raw = peak_raw();
    raw["field"]["omega3_eV"] = 1.0;
    raw["extra"] = true;
    auto const v = violations_of(raw);
    EXPECT_TRUE(mentions(v, "omega3_eV"));
    EXPECT_TRUE(mentions(v, "extra"));
}

TEST(Config, ListsEveryViolation)
{
    auto raw = peak_raw();
    raw["field"]["eta01"] = 0.5;
    raw["field"]["omega2_eV"] = 3.0;
    raw["electron"]["theta_f_deg"] = 200;
    raw["target"] = {{"Z", -1}};
    raw["output"] = {{"precision", 40}};
    auto const v = violations_of(raw);
    EXPECT_GE(v.size(), 5u);
    EXPECT_TRUE(mentions(v, "theta_f_deg"));
    EXPECT_TRUE(mentions(v, "target.Z"));
    EXPECT_TRUE(mentions(v, "precision"));
}

TEST(Config, TypeErrors)
{
    auto raw = peak_raw();
    raw["field"]["tau_ps"] = "long";
    raw["field"]["delta1"] = 0.5;
    auto const v = violations_of(raw);
    EXPECT_TRUE(mentions(v, "tau_ps"));
    EXPECT_TRUE(mentions(v, "delta1"));
    raw = peak_raw();
    raw["electron"]["v_i"] = 0.3;
    EXPECT_TRUE(mentions(violations_of(raw), "not both"));
}

TEST(Config, Overrides)
{
    auto raw = peak_raw();
    apply_overrides(raw, {"field.tau_ps=0.2", "electron.theta_f_deg=30", "output.format=json", "target.Z=79"});
    auto const c = parse_config(raw);
    EXPECT_DOUBLE_EQ(c.field.tau_ps, 0.2);
    EXPECT_DOUBLE_EQ(c.electron.theta_f_deg, 30.0);
    EXPECT_EQ(c.output.format, Format::json);
    EXPECT_DOUBLE_EQ(c.z, 79.0);
    EXPECT_THROW(apply_overrides(raw, {"novalue"}), ensb::ConfigError);
    EXPECT_THROW(apply_overrides(raw, {"a..b=1"}), ensb::ConfigError);
}

TEST(Config, EchoRoundTrips)
{
    auto raw = peak_raw();
    raw.erase("mode");
    raw["output"] = {{"path", "somewhere.csv"}};
    auto const c = parse_config(raw, Mode::ratio);
    auto const echo = to_json(c);
    EXPECT_FALSE(echo["output"].contains("path"));
    auto const again = parse_config(echo);
    EXPECT_EQ(to_json(again), echo);
}

//---------------------------------------------------------------------------//
// Scans
//---------------------------------------------------------------------------//

TEST(Scan, Grid)
{
    auto const lin = make_grid({"beta", -4.0, 4.0, 401, Spacing::linear});
    ASSERT_EQ(lin.size(), 401u);
    EXPECT_EQ(lin.front(), -4.0);
    EXPECT_EQ(lin.back(), 4.0);
    EXPECT_NEAR(lin[200], 0.0, 1e-15);
    EXPECT_NEAR(lin[1] - lin[0], 0.02, 1e-14);
    auto const lg = make_grid({"v_i", 0.05, 0.9, 100, Spacing::log});
    EXPECT_EQ(lg.front(), 0.05);
    EXPECT_EQ(lg.back(), 0.9);
    EXPECT_NEAR(lg[1] / lg[0], lg[99] / lg[98], 1e-12);
}

TEST(Scan, DeterministicAcrossThreadCounts)
{
    auto const c = parse_config(json{{"scan", {{"points", 24}}}}, Mode::ratio);
    std::ostringstream a, b;
    write_csv(a, run(c, 1), 12);
    write_csv(b, run(c, 7), 12);
    EXPECT_EQ(a.str(), b.str());
}

TEST(Scan, ProfileColumns)
{
    auto const c = parse_config(json{{"scan", {{"min", -1.0}, {"max", 1.0}, {"points", 3}}}}, Mode::profile);
    auto const r = run(c);
    ASSERT_EQ(r.columns.size(), 5u);
    EXPECT_EQ(r.columns[0], "beta");
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_NEAR(*r.rows[1].cells[2], 0.920211543920, 1e-10);
    EXPECT_NEAR(*r.rows[1].cells[4], 1.0, 1e-15);
    EXPECT_EQ(r.failed_rows(), 0u);
}

TEST(Scan, NullMarkersForFailingCells)
{
    // backward scattering at theta_f = theta_i is inside the small-angle gate
    auto raw = json{{"electron", {{"theta_f_deg", 163.0}}}, {"scan", {{"points", 3}}}};
    auto const r = run(parse_config(raw, Mode::ratio));
    EXPECT_EQ(r.failed_rows(), 3u);
    for (auto const& row : r.rows)
    {
        EXPECT_FALSE(row.cells[1].has_value());
        EXPECT_NE(row.status.find("singular"), std::string::npos);
    }
    std::ostringstream os;
    write_csv(os, r, 12);
    EXPECT_NE(os.str().find(",null,"), std::string::npos);
    auto const j = to_json(r, 12);
    EXPECT_TRUE(j["rows"][0]["values"][1].is_null());
}

TEST(Scan, SweepVariables)
{
    auto raw = json{{"scan",
                     {{"variable", "tau_ps"}, {"min", 0.1}, {"max", 0.2}, {"points", 2}, {"observable", "width"}}}};
    auto const r = run(parse_config(raw, Mode::sweep));
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_NEAR(*r.rows[0].cells[2] / *r.rows[1].cells[2], 2.0, 1e-12);
    EXPECT_EQ(r.failed_rows(), 0u);
}

//---------------------------------------------------------------------------//
// Output
//---------------------------------------------------------------------------//

TEST(Output, Precision)
{
    EXPECT_EQ(format_number(1.0 / 3.0, 12), "0.333333333333");
    EXPECT_EQ(format_number(1.0996e-18, 5), "1.0996e-18");
    EXPECT_EQ(format_number(-2.0, 12), "-2");
}

TEST(Output, JsonRoundTrip)
{
    auto const c = parse_config(json{{"scan", {{"points", 4}}}, {"output", {{"precision", 17}}}}, Mode::ratio);
    auto const r = run(c);
    std::ostringstream os;
    write_json(os, r, 17);
    auto const j = json::parse(os.str());
    EXPECT_EQ(j["columns"].size(), r.columns.size());
    ASSERT_EQ(j["rows"].size(), 4u);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t col = 0; col < r.columns.size(); ++col)
            EXPECT_EQ(j["rows"][k]["values"][col].get<double>(), *r.rows[k].cells[col]);
    EXPECT_EQ(j["meta"]["config"], to_json(c));
}

TEST(Output, CsvHeader)
{
    auto const r = run(parse_config(json{{"scan", {{"points", 2}}}}, Mode::ratio));
    std::ostringstream os;
    write_csv(os, r, 12);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# ensb 1.0.0");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# config: ", 0), 0u);
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# derived: ", 0), 0u);
    std::getline(in, line);
    EXPECT_EQ(line, "v_i,R10_closed,R10_direct,R01,R_res,status");
}

//---------------------------------------------------------------------------//
// Executable
//---------------------------------------------------------------------------//

TEST(Executable, ExitCodes)
{
    EXPECT_EQ(run_cli("--version").code, 0);
    EXPECT_EQ(run_cli("point").code, 0);
    EXPECT_EQ(run_cli("point --set field.eta01=0.5").code, 2);
    EXPECT_EQ(run_cli("point --bogus").code, 2);
    EXPECT_EQ(run_cli("point --config /nonexistent/file.json").code, 2);
    EXPECT_EQ(run_cli("point --set electron.theta_f_deg=163").code, 3);
    EXPECT_EQ(run_cli("point --output /nonexistent/dir/out.csv").code, 1);
}

TEST(Executable, ConfigErrorsListed)
{
    auto const r = run_cli("point --set field.eta01=0.5 --set field.omega2_eV=3 --set target.Z=0");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("eta"), std::string::npos);
    EXPECT_NE(r.err.find("omega1_eV must exceed"), std::string::npos);
    EXPECT_NE(r.err.find("target.Z"), std::string::npos);
}

TEST(Executable, ModeFromConfigFile)
{
    auto const a = run_cli("--config " + sample("enhancement_thf30.json") + " --threads 2");
    auto const b = run_cli("ratio --config " + sample("enhancement_thf30.json") + " --threads 1");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("v_i,R10_closed"), std::string::npos);
}

TEST(Executable, OutputFileMatchesStdout)
{
    auto const path = fs::temp_directory_path() / ("ensb_cli_out_" + std::to_string(::getpid()) + ".json");
    auto const to_file = run_cli("point --format json --output " + path.string());
    auto const to_stdout = run_cli("point --format json");
    EXPECT_EQ(to_file.code, 0);
    EXPECT_EQ(slurp(path), to_stdout.out);
    auto const j = json::parse(to_stdout.out);
    EXPECT_EQ(j["rows"][0]["status"], "ok");
    fs::remove(path);
}

TEST(Executable, PartialFailuresReported)
{
    auto const r = run_cli("sweep --set scan.variable=theta_f_deg --set scan.min=157 --set scan.max=169 "
                           "--set scan.points=7 --set scan.observable=ratio");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("null"), std::string::npos);
    EXPECT_NE(r.err.find("rows carry null markers"), std::string::npos);
}
