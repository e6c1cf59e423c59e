// cotwist: scenario runner and built-in verification suites for the
// torus-cocycle-twisted symbolic engine.

#include "cotwist/engine.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace cotwist;

namespace {

void add_common_flags(CLI::App* cmd, EngineOptions& opt, bool& json, std::string& convention) {
    cmd->add_option("--convention", convention, "cocycle sign convention: flip|verbatim")
        ->check(CLI::IsMember({"flip", "verbatim"}))
        ->default_val("flip");
    cmd->add_flag("--classical", opt.classical, "force zeta = 1 (theta = 0)");
    cmd->add_option("--jobs", opt.jobs, "parallel checks")->default_val(1);
    cmd->add_option("--max-charge", opt.max_charge, "largest ADHM charge accepted")
        ->default_val(3);
    cmd->add_flag("--json", json, "emit the JSON report");
    cmd->add_flag("--timing", opt.timing, "include wall times (report no longer byte-stable)");
}

int emit(const RunReport& report, bool json, const EngineOptions& opt) {
    std::cout << (json ? report.json(opt.timing) : report.text(opt.timing));
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for torus-cocycle-twisted algebras"};
    app.require_subcommand(1);

    EngineOptions opt;
    bool json = false;
    std::string convention = "flip";
    std::string adhm_reading = "derived";

    std::string scenario_path;
    auto* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("file", scenario_path, "scenario file")->required();
    add_common_flags(run, opt, json, convention);
    run->add_option("--adhm-reading", adhm_reading, "relation reading: derived|literal")
        ->check(CLI::IsMember({"derived", "literal"}));

    std::string suite_name;
    std::vector<std::string> suite_args;
    auto* suite = app.add_subcommand("suite", "run a built-in suite");
    suite->add_option("name", suite_name, "suite name")->required();
    suite->add_option("args", suite_args, "suite arguments");
    add_common_flags(suite, opt, json, convention);
    suite->add_option("--adhm-reading", adhm_reading, "relation reading: derived|literal")
        ->check(CLI::IsMember({"derived", "literal"}));

    int charge = 1;
    std::string exps = "0,1";
    auto* adhm = app.add_subcommand("adhm", "deformed ADHM suite for a given charge");
    adhm->add_option("--charge", charge, "instanton charge k")->default_val(1);
    adhm->add_option("--exps", exps, "coinvariant exponents r1,r2")->default_val("0,1");
    add_common_flags(adhm, opt, json, convention);
    adhm->add_option("--adhm-reading", adhm_reading, "relation reading: derived|literal")
        ->check(CLI::IsMember({"derived", "literal"}));

    auto* suites = app.add_subcommand("suites", "list the built-in suites");

    CLI11_PARSE(app, argc, argv);

    opt.convention = (convention == "verbatim") ? Convention::verbatim : Convention::flip;
    opt.adhm_reading =
        (adhm_reading == "literal") ? AdhmReading::literal : AdhmReading::derived;

    try {
        if (run->parsed()) return emit(run_scenario_file(scenario_path, opt), json, opt);
        if (suite->parsed()) return emit(run_suite(suite_name, suite_args, opt), json, opt);
        if (adhm->parsed()) {
            auto comma = exps.find(',');
            if (comma == std::string::npos) {
                std::cerr << "error: --exps expects r1,r2\n";
                return 2;
            }
            std::vector<std::string> args = {std::to_string(charge), exps.substr(0, comma),
                                             exps.substr(comma + 1)};
            return emit(run_suite("adhm", args, opt), json, opt);
        }
        if (suites->parsed()) {
            for (const auto& s : builtin_suites()) std::cout << s << '\n';
            return 0;
        }
    } catch (const ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
