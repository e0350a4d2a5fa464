#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bkwasym/cli.hpp"

namespace cli = bkwasym::cli;

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic complexity exponents for BKW-style LWE solvers"};
    app.set_config("--config", "", "Read options from a key = value file");
    app.require_subcommand(1);

    std::optional<std::string> cache;
    app.add_option("--lambda-cache", cache,
                   "CSV cache for the lambda table (loaded if present, written otherwise)");

    cli::ExponentOptions exp_opts;
    auto* exp_cmd = app.add_subcommand("exponent", "Optimized complexity exponent for one point");
    exp_cmd->add_option("--cq", exp_opts.cq, "Modulus exponent: q = n^cq")->required();
    exp_cmd->add_option("--cs", exp_opts.cs, "Noise exponent: sigma = n^cs")->required();
    exp_cmd->add_option("--alg", exp_opts.algorithm,
                        "plain|coded|lattice|sieve-g1|sieve-const|sieve-arith");
    exp_cmd->add_option("--samples", exp_opts.samples, "exponential|polynomial");
    exp_cmd->add_option("--compute", exp_opts.compute, "classical|quantum");
    exp_cmd->add_flag("--json", exp_opts.json, "Emit JSON instead of plain text");

    cli::LambdaOptions lam_opts;
    auto* lam_cmd = app.add_subcommand("lambda", "Sieving cost exponent lambda(gamma)");
    lam_cmd->add_option("--gamma", lam_opts.gamma, "Reduction factor in (0, sqrt(2)]")->required();
    lam_cmd->add_option("--compute", lam_opts.compute, "classical|quantum");

    auto* tab_cmd = app.add_subcommand("table1", "Exponent table at cq=2, cs=1.5 (Markdown)");

    cli::SweepOptions sweep_opts;
    auto* sweep_cmd = app.add_subcommand("sweep", "Constant-vs-arithmetic sweep over (cq, cs)");
    sweep_cmd->add_option("--cq-min", sweep_opts.cq_min);
    sweep_cmd->add_option("--cq-max", sweep_opts.cq_max);
    sweep_cmd->add_option("--cq-steps", sweep_opts.cq_steps);
    sweep_cmd->add_option("--cs-min", sweep_opts.cs_min);
    sweep_cmd->add_option("--cs-max", sweep_opts.cs_max, "Defaults to cq-max - 0.05");
    sweep_cmd->add_option("--cs-steps", sweep_opts.cs_steps);
    sweep_cmd->add_option("--samples", sweep_opts.samples, "exponential|polynomial");
    sweep_cmd->add_option("--compute", sweep_opts.compute, "classical|quantum");
    sweep_cmd->add_option("--out", sweep_opts.out_path, "Output CSV path");
    sweep_cmd->add_option("--threads", sweep_opts.threads, "Worker threads (0 = all cores)");

    cli::OracleOptions oracle_opts;
    auto* ora_cmd = app.add_subcommand("oracle", "Finite-n schedule check against the asymptotics");
    ora_cmd->add_option("--cq", oracle_opts.cq);
    ora_cmd->add_option("--cs", oracle_opts.cs);
    ora_cmd->add_option("--alg", oracle_opts.algorithm, "sieve-g1|sieve-const|sieve-arith");
    ora_cmd->add_option("--samples", oracle_opts.samples, "exponential|polynomial");
    ora_cmd->add_option("--compute", oracle_opts.compute, "classical|quantum");
    ora_cmd->add_option("--log2n", oracle_opts.log2n, "log2 of the LWE dimension n");
    ora_cmd->add_option("--alpha", oracle_opts.alpha_override,
                        "Override the optimized coded-step fraction alpha");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? cli::kOk : cli::kUsageError;
    }

    try {
        bkwasym::SieveCostModel model = cli::obtain_model(cache);
        if (exp_cmd->parsed())
            return cli::run_exponent(exp_opts, model, std::cout, std::cerr);
        if (lam_cmd->parsed()) return cli::run_lambda(lam_opts, model, std::cout, std::cerr);
        if (tab_cmd->parsed()) return cli::run_table1(model, std::cout, std::cerr);
        if (sweep_cmd->parsed()) return cli::run_sweep(sweep_opts, model, std::cout, std::cerr);
        if (ora_cmd->parsed()) return cli::run_oracle(oracle_opts, model, std::cout, std::cerr);
    } catch (const bkwasym::InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kComputationError;
    }
    return cli::kUsageError;
}
