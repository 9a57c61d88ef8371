// SPDX-License-Identifier: Apache-2.0
//
// ensb: profile, ratio, sweep and point calculations from a JSON config.
//
//   ensb ratio --config enhancement.json --set electron.theta_f_deg=30 --output r.csv
//   ensb --config enhancement.json            (mode taken from the file)
//
// Exit codes: 0 success, 1 I/O or unexpected failure, 2 configuration error,
// 3 numerical error.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ensb/cli/config.hpp"
#include "ensb/cli/output.hpp"
#include "ensb/cli/scan.hpp"
#include "ensb/errors.hpp"
#include "ensb/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

unsigned resolve_threads(std::optional<unsigned> flag)
{
    if (flag)
        return *flag;
    if (char const* env = std::getenv("ENSB_THREADS"))
    {
        try
        {
            int const n = std::stoi(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        }
        catch (std::exception const&)
        {
        }
        std::cerr << "ensb: ignoring invalid ENSB_THREADS='" << env << "'\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace ensb::cli;

    CLI::App app{"Resonant spontaneous bremsstrahlung in two pulsed laser waves"};
    app.set_version_flag("--version", std::string("ensb ") + ensb::version_string);
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string config_path;
    std::vector<std::string> sets;
    std::string output_path;
    std::string format;
    std::optional<unsigned> threads;
    app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    app.add_option("--set", sets, "override, e.g. field.tau_ps=0.2 (repeatable)");
    app.add_option("--output", output_path, "output file (default: stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "worker threads (default: ENSB_THREADS or all cores)")
        ->check(CLI::PositiveNumber);

    app.add_subcommand("profile", "resonance peak profile over beta");
    app.add_subcommand("ratio", "enhancement over the Bethe-Heitler baseline versus v_i");
    app.add_subcommand("sweep", "one observable set over a configuration variable");
    app.add_subcommand("point", "every observable at one configuration");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }

    std::optional<Mode> mode;
    if (!app.get_subcommands().empty())
        mode = parse_mode(app.get_subcommands().front()->get_name());
    ScanConfig cfg;
    std::vector<std::string> warnings;
    try
    {
        json raw = config_path.empty() ? json::object() : load_json_file(config_path);
        apply_overrides(raw, sets);
        if (!output_path.empty())
            raw["output"]["path"] = output_path;
        if (!format.empty())
            raw["output"]["format"] = format;
        cfg = parse_config(raw, mode, &warnings);
    }
    catch (ensb::ConfigError const& e)
    {
        std::cerr << "ensb: invalid configuration\n";
        for (auto const& v : e.violations())
            std::cerr << "  - " << v << '\n';
        return exit_config;
    }
    for (auto const& w : warnings)
        std::cerr << "ensb: warning: " << w << '\n';

    ScanResult result;
    try
    {
        result = run(cfg, resolve_threads(threads), warnings);
    }
    catch (ensb::Error const& e)
    {
        std::cerr << "ensb: " << e.what() << '\n';
        return exit_numerical;
    }

    try
    {
        if (cfg.output.path.empty())
            write(std::cout, result, cfg.output);
        else
            write_file(result, cfg.output);
    }
    catch (std::exception const& e)
    {
        std::cerr << "ensb: " << e.what() << '\n';
        return exit_failure;
    }

    std::size_t const failed = result.failed_rows();
    if (failed == 0)
        return exit_ok;
    std::cerr << "ensb: " << failed << " of " << result.rows.size() << " rows carry null markers\n";
    for (auto const& row : result.rows)
        if (row.status != "ok")
        {
            std::cerr << "ensb: first failure: " << row.status << '\n';
            break;
        }
    return cfg.mode == Mode::point || failed == result.rows.size() ? exit_numerical : exit_ok;
}
