#include <iostream>

#include <CLI11.hpp>

#include "ngsum/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "ngsum: staircase matrix classes, spectral-radius bounds, and exhaustive\n"
        "verification that rho(G) + rho(complement) is maximized by complete split graphs"};
    app.require_subcommand(1);

    ngsum::CliConfig cfg;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--graph6", cfg.graph6, "inline graph6 string");
        sub->add_option("--profile", cfg.profile, "profile JSON {\"n\":..,\"mu\":[..]} or @file");
        sub->add_option("--edges", cfg.edges_path, "edge-list file, one 'u v' per line, 1-indexed");
    };
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "write output to a file instead of stdout");
    };

    auto* bounds = app.add_subcommand("bounds", "bound report for one graph");
    add_input(bounds);
    add_common(bounds, {"text", "json"});

    auto* params = app.add_subcommand("params", "the six parameters of one staircase matrix");
    add_input(params);
    add_common(params, {"text", "json"});

    auto* verify = app.add_subcommand("verify", "sweep for the maximum of rho(G)+rho(Gbar)");
    verify->add_option("--n", cfg.n, "graph order")->required();
    verify->add_option("--space", cfg.space, "search space")
        ->check(CLI::IsMember({"all", "staircase"}))
        ->capture_default_str();
    verify->add_flag("--allow-n8", cfg.allow_n8, "opt in to the 2^28-graph sweep at n=8");
    verify->add_option("--parallel", cfg.parallel, "worker count (default NG_PARALLEL or 1)");
    add_common(verify, {"text", "json", "csv"});

    auto* enumerate = app.add_subcommand("enumerate", "stream staircase profiles");
    enumerate->add_option("--n", cfg.n, "order")->required();
    enumerate->add_option("--class", cfg.klass, "sym: S*_s(n), star: S*(n)")
        ->check(CLI::IsMember({"sym", "star"}))
        ->capture_default_str();
    add_common(enumerate, {"text", "json", "g6"});

    auto* certificate = app.add_subcommand("certificate", "the 6x6 final-case certificate sweep");
    certificate->add_option("--kmax", cfg.k_max, "largest k")->required();
    certificate->add_option("--parallel", cfg.parallel, "worker count (default NG_PARALLEL or 1)");
    add_common(certificate, {"text", "json", "csv"});

    auto* rho0 = app.add_subcommand("rho0", "conjectured maxima over a range of orders");
    rho0->add_option("--from", cfg.from, "first order (>= 3)");
    rho0->add_option("--to", cfg.to, "last order");
    add_common(rho0, {"text", "json", "csv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    cfg.command = app.get_subcommands().front()->get_name();
    return ngsum::run(cfg, std::cout, std::cerr);
}
