// Command-line analyzer for linear dynamical systems x -> Ax over Z_q and
// products of such rings.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Analyzer for linear dynamical systems over Z_q"};
    app.require_subcommand(1);

    zqdyn::cli::CommandOptions opts;
    std::string input;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", input, "system description file")->required();
        sub->add_option("--format", opts.format, "report format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--max-period", opts.max_period, "cap for the eventual-period search");
        sub->add_option("--oracle-cap", opts.oracle_cap, "state-space cap for enumeration");
        sub->add_flag("--early-exit", opts.early_exit,
                      "stop powering as soon as the running power is fixed");
        return sub;
    };

    add_common(app.add_subcommand("lfps", "decide whether the system is a fixed point system"));
    add_common(app.add_subcommand("stabilize", "print A^B and the minimal fixed exponent"));
    add_common(app.add_subcommand("charpoly", "print the characteristic polynomial"));
    add_common(app.add_subcommand("cycles", "print the eventual period and cycle table"));
    add_common(app.add_subcommand("crosscheck", "compare analysis against brute-force enumeration"));
    auto* pg = add_common(app.add_subcommand("phase-graph", "export the functional graph as DOT"));
    pg->add_option("-o,--output", opts.output_path, "write DOT here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return zqdyn::cli::kExitInvalid;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    return zqdyn::cli::run_command(sub, input, opts, std::cout, std::cerr);
}
