// Scenario-driven front end: `emshift run <scenario> [--output] [--format]`.
//
// Exit codes: 0 success, 2 scenario validation failure, 3 domain failure.
// Failures also print one JSON error record on stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "emshift/runner.hpp"
#include "emshift/scenario.hpp"

namespace
{
constexpr int exit_validation = 2;
constexpr int exit_domain = 3;

void report(std::string const& kind, std::string const& message,
            nlohmann::json extra = nlohmann::json::object())
{
    nlohmann::json rec = std::move(extra);
    rec["error"] = kind;
    rec["message"] = message;
    std::cerr << rec.dump() << '\n';
}

int run(std::string const& path, std::string const& output,
        std::string const& format, bool verbose)
{
    using namespace emshift::cli;

    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        report("validation", "cannot read scenario file '" + path + "'");
        return exit_validation;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    Scenario scenario;
    try
    {
        scenario = parse_scenario(buf.str());
    }
    catch (ScenarioError const& e)
    {
        auto diags = nlohmann::json::array();
        for (auto const& d : e.diagnostics())
        {
            diags.push_back({{"line", d.line}, {"message", d.message}});
        }
        report("validation", "invalid scenario '" + path + "'",
               {{"diagnostics", diags}});
        return exit_validation;
    }

    if (!output.empty())
    {
        scenario.output.path = output;
    }
    if (!format.empty())
    {
        scenario.output.format
            = format == "json" ? OutputFormat::json : OutputFormat::csv;
    }
    if (verbose)
    {
        std::cerr << "# kind: " << to_string(scenario.kind) << '\n';
        if (scenario.sweep)
        {
            std::cerr << "# sweep: " << scenario.sweep->parameter << " over "
                      << scenario.sweep->points << " points\n";
        }
    }

    ResultTable table;
    try
    {
        table = run_scenario(scenario);
    }
    catch (SweepPointError const& e)
    {
        report("domain", e.what(),
               {{"sweep_index", e.index()}, {"sweep_value", e.value()}});
        return exit_domain;
    }
    catch (emshift::DomainError const& e)
    {
        report("domain", e.what());
        return exit_domain;
    }

    std::string const text
        = scenario.output.format == OutputFormat::json
              ? to_json(table, scenario).dump(2) + "\n"
              : to_csv(table);
    if (scenario.output.path.empty())
    {
        std::cout << text;
    }
    else
    {
        std::ofstream out(scenario.output.path, std::ios::binary);
        out << text;
        if (!out)
        {
            report("io", "cannot write '" + scenario.output.path + "'");
            return 1;
        }
    }
    if (verbose)
    {
        std::cerr << "# rows: " << table.rows.size() << '\n';
    }
    return 0;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Electron mass-shift scenarios"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Evaluate a scenario file");
    std::string path;
    std::string output;
    std::string format;
    bool verbose = false;
    run_cmd->add_option("scenario", path, "Scenario file")->required();
    run_cmd->add_option("--output", output, "Write results to this path");
    run_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_flag("--verbose", verbose, "Progress on stderr");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        return app.exit(e);
    }
    return run(path, output, format, verbose);
}
