#include <iostream>

#include "CLI11.hpp"
#include "fphom/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"fphom: exact homological algebra over F_p"};
    app.require_subcommand(1);
    fphom::RunConfig cfg;
    std::string format = "table";
    int pu = 0;
    for (const auto& name : fphom::cli_commands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", cfg.input, "JSON input file");
        sub->add_option("-p,--prime", cfg.p, "prime")->capture_default_str();
        sub->add_option("-n,--cap", cfg.cap, "degree cap (<= 64)")->capture_default_str();
        sub->add_option("--smax", cfg.s_max, "largest homological degree")->capture_default_str();
        sub->add_option("--qmax", cfg.q_max, "largest AQ degree")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        sub->add_option("--format", format, "table, json or csv")->capture_default_str();
        sub->add_option("-o,--out", cfg.output, "write the report to a file");
        sub->add_option("--trials", cfg.trials, "randomized trials per axiom")->capture_default_str();
        sub->add_option("--vertex-degree", cfg.vertex_degree, "degree of vertex generators")->capture_default_str();
        sub->add_flag("--abelian", cfg.abelian, "trivial operations on Sym(V)");
        if (name == "emss")
            sub->add_option("--pu", pu, "use the projective unitary group PU(n) data");
    }
    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    std::string command;
    for (const auto* sub : app.get_subcommands()) {
        command = sub->get_name();
        cfg.p_given = sub->count("--prime") > 0;
    }
    fphom::RunResult r;
    try {
        cfg.format = fphom::output_format_from_string(format);
        if (pu > 0)
            cfg.projective_unitary = pu;
        r = fphom::run(command, cfg);
    }
    catch (const std::exception& e) {
        r.exit_code = 2;
        r.error = e.what();
    }
    if (!r.error.empty())
        std::cerr << r.error << '\n';
    if (cfg.output.empty())
        std::cout << r.output;
    return r.exit_code;
}
