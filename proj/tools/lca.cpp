#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcadual/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw lcadual::UsageError("cannot open document \"" + path + "\"");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

int emit(const lcadual::RunResult& result) {
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_code;
}

std::vector<lcadual::Property> parse_property_list(const std::string& list) {
    std::vector<lcadual::Property> out;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) continue;
        const std::string name = item.substr(begin, end - begin + 1);
        const auto p = lcadual::property_from_name(name);
        if (!p) {
            throw lcadual::UsageError(
                "unknown property \"" + name +
                "\" (expected pre-injective, surjective, post-surjective or injective)");
        }
        out.push_back(*p);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact linear cellular automata over group rings: adjoints, evolution, "
        "pairings and witness-producing duality analysis"};
    app.require_subcommand(1);

    std::string document_path = "-";
    unsigned steps = 1;
    std::string config_name;
    std::string properties_list;
    unsigned radius = 0;
    bool radius_set = false;
    std::size_t ball_cap = lcadual::kDefaultBallCap;
    std::size_t finite_cap = lcadual::kDefaultFiniteCap;
    std::string demo_name;
    std::string field_name = "F2";
    bool self_check = false;

    auto* adjoint =
        app.add_subcommand("adjoint", "print the document with the adjoint automaton");
    adjoint->add_option("document", document_path, "document file, or - for stdin");

    auto* evolve = app.add_subcommand("evolve", "apply the automaton to a configuration");
    evolve->add_option("document", document_path, "document file, or - for stdin");
    evolve->add_option("--steps", steps, "number of evolution steps")->capture_default_str();
    evolve->add_option("--config", config_name, "configuration name (default: c)");

    auto* pair_cmd =
        app.add_subcommand("pair", "evaluate the pairing of configs omega and c");
    pair_cmd->add_option("document", document_path, "document file, or - for stdin");

    auto* analyze = app.add_subcommand("analyze", "run the property checks with witnesses");
    analyze->add_option("document", document_path, "document file, or - for stdin");
    analyze->add_option("--radius", radius, "window radius (default: document or group default)")
        ->each([&](const std::string&) { radius_set = true; });
    analyze->add_option("--properties", properties_list,
                        "comma-separated list of properties to check");
    analyze->add_option("--ball-cap", ball_cap, "ball-size cap")->capture_default_str();

    auto* verify = app.add_subcommand(
        "verify-finite", "verify the four duality equations exactly on a finite group");
    verify->add_option("document", document_path, "document file, or - for stdin");
    verify->add_option("--cap", finite_cap, "cap on n*|G|")->capture_default_str();

    auto* demo = app.add_subcommand("demo", "run a gallery automaton and its analysis");
    demo->add_option("name", demo_name, "gallery entry name")->required();
    demo->add_option("--field", field_name, "coefficient field")->capture_default_str();
    demo->add_flag("--self-check", self_check,
                   "compare against the expected verdicts; nonzero exit on mismatch");

    CLI11_PARSE(app, argc, argv);

    try {
        if (demo->parsed()) {
            return emit(lcadual::run_demo(demo_name, {field_name, self_check}));
        }
        const auto doc = lcadual::parse_document(read_input(document_path));
        if (adjoint->parsed()) return emit(lcadual::run_adjoint(doc));
        if (evolve->parsed()) return emit(lcadual::run_evolve(doc, steps, config_name));
        if (pair_cmd->parsed()) return emit(lcadual::run_pair(doc));
        if (analyze->parsed()) {
            lcadual::AnalyzeOptions options;
            if (radius_set) options.radius = radius;
            options.properties = parse_property_list(properties_list);
            options.ball_cap = ball_cap;
            return emit(lcadual::run_analyze(doc, options));
        }
        if (verify->parsed()) return emit(lcadual::run_verify_finite(doc, finite_cap));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
