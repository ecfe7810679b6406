#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cayfact/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"k-isomorphic factorizations of complete graphs over finite groups"};
    app.require_subcommand(1);

    cayfact::RunConfig cfg;

    const std::string group_help = "group JSON, e.g. '{\"kind\":\"elementary_product\",\"blocks\":[[5,1]]}' "
                                   "or '{\"kind\":\"small_table\",\"name\":\"Q8\"}', or @file";
    const std::string format_help = "output format: json | dot | edgelist | text";

    CLI::App* decide = app.add_subcommand("decide", "decide whether the group has the k-factorization property");
    decide->add_option("--group", cfg.group_arg, group_help)->required();
    decide->add_option("--k", cfg.k, "number of factors (>= 2)")->required();
    decide->add_option("--format", cfg.format, format_help);

    CLI::App* construct = app.add_subcommand("construct", "build a verified factorization with witnesses");
    construct->add_option("--group", cfg.group_arg, group_help)->required();
    construct->add_option("--k", cfg.k, "number of factors (>= 2)")->required();
    construct->add_option("--format", cfg.format, format_help);
    construct->add_option("--out", cfg.out_dir, "output directory (default .)");

    CLI::App* verify = app.add_subcommand("verify", "check a factorization certificate");
    verify->add_option("certificate", cfg.cert_path, "certificate JSON file")->required();
    verify->add_option("--format", cfg.format, format_help);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search on a small group (order <= 10)");
    oracle->add_option("--group", cfg.group_arg, group_help)->required();
    oracle->add_option("--k", cfg.k, "number of factors (>= 2)")->required();
    oracle->add_option("--budget", cfg.budget, "search-node budget (default 10^7)");
    oracle->add_option("--format", cfg.format, format_help);
    oracle->add_option("--out", cfg.out_dir, "output directory for a found certificate (default .)");

    CLI::App* census = app.add_subcommand("census", "print the element-order census");
    census->add_option("--group", cfg.group_arg, group_help)->required();
    census->add_option("--format", cfg.format, format_help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cayfact::exit_ok : cayfact::exit_input_error;
    }

    if (decide->parsed()) return cayfact::cmd_decide(cfg, std::cout, std::cerr);
    if (construct->parsed()) return cayfact::cmd_construct(cfg, std::cout, std::cerr);
    if (verify->parsed()) return cayfact::cmd_verify(cfg, std::cout, std::cerr);
    if (oracle->parsed()) return cayfact::cmd_oracle(cfg, std::cout, std::cerr);
    if (census->parsed()) return cayfact::cmd_census(cfg, std::cout, std::cerr);
    return cayfact::exit_input_error;
}
