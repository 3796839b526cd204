#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "famval/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"famval - European payoff valuation under families of probability measures"};
    app.require_subcommand(1);

    famval::CommandOptions options;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"price", "Bid/mid/ask quotes per instrument"},
        {"forward", "Implied and cash-and-carry forward values"},
        {"parity", "Put-call parity residual per strike"},
        {"delta", "Static hedge report per instrument"},
        {"profit", "Uncovered minimal expected profit per instrument"},
        {"calibrate", "Rescale the grid to satisfy the spot condition"},
        {"axioms", "Run the criterion axiom harness"},
    };

    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--scenario", options.scenario_path, "Scenario JSON file")->required();
        sub->add_option("--format", options.format, "Output format: text or json");
        if (name == "calibrate") {
            sub->add_option("--out", options.out_path, "Path for the calibrated scenario");
        }
        if (name == "axioms") {
            sub->add_option("--seed", options.seed, "Base seed for generated cases");
            sub->add_option("--cases", options.cases, "Number of generated cases");
        }
        sub->callback([&options, name = name] { options.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    return famval::run_command(options, std::cout, std::cerr);
}
