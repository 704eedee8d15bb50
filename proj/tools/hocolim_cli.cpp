// Command-line front end for the manifest DSL.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hocolim/dsl/runner.hpp"

namespace {

using namespace hocolim;
using namespace hocolim::dsl;

std::string read_input(const std::string& path) {
    std::stringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) fail(ErrorKind::Syntax, "cannot read '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

int emit(const std::vector<Report>& reports, bool json) {
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.ok();
    if (json) {
        if (reports.size() == 1) {
            std::cout << to_json(reports.front()).dump(2) << "\n";
        } else {
            auto all = nlohmann::ordered_json::array();
            for (const auto& r : reports) all.push_back(to_json(r));
            std::cout << all.dump(2) << "\n";
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << to_text(reports[i]);
    }
    return ok ? 0 : kPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homotopy colimits and limits of chain complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::string file;
    app.add_flag("--json", json, "Print the JSON report instead of text");
    app.add_option("-f,--file", file, "Manifest to read (default: standard input)");

    auto* run_cmd = app.add_subcommand("run", "Run the commands listed in a manifest");
    run_cmd->add_option("file", file, "Manifest path");

    std::string name;
    int lo = 0, hi = 0, level = 0;
    std::vector<CLI::App*> windowed;
    const std::vector<std::pair<std::string, std::string>> verbs{
        {"homology", "Homology of a named complex on [LO, HI]"},
        {"hocolim", "Homotopy colimit of a named diagram on [LO, HI]"},
        {"holim", "Homotopy limit of a named diagram on [LO, HI]"},
        {"realize", "Realization of a named simplicial object on [LO, HI]"}};
    for (const auto& [verb, help] : verbs) {
        auto* sub = app.add_subcommand(verb, help);
        sub->add_option("name", name)->required();
        sub->add_option("lo", lo)->required();
        sub->add_option("hi", hi)->required();
        windowed.push_back(sub);
    }
    auto* bar_cmd = app.add_subcommand("bar", "Ranks of the bar construction through LEVEL");
    bar_cmd->add_option("name", name)->required();
    bar_cmd->add_option("level", level)->required();
    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a named matrix");
    snf_cmd->add_option("name", name)->required();

    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = kDefaultTrials;
    auto* props_cmd = app.add_subcommand("verify-props", "Run the randomized property suite");
    props_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    props_cmd->add_option("--trials", trials, "Trials per property")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (props_cmd->parsed()) return emit({verify_props_report(seed, trials)}, json);
        auto manifest = parse(read_input(file));
        if (run_cmd->parsed()) return emit(run(manifest), json);
        CommandDecl c;
        c.arguments.push_back(name);
        if (bar_cmd->parsed()) {
            c.verb = "bar";
            c.arguments.push_back(std::to_string(level));
        } else if (snf_cmd->parsed()) {
            c.verb = "snf";
        } else {
            for (auto* sub : windowed)
                if (sub->parsed()) c.verb = sub->get_name();
            c.arguments.push_back(std::to_string(lo));
            c.arguments.push_back(std::to_string(hi));
        }
        manifest.commands = {c};
        return emit(run(manifest), json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
}
