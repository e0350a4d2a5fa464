#include "bkwasym/cli.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bkwasym/closed_forms.hpp"
#include "bkwasym/discrete_oracle.hpp"
#include "bkwasym/solvers.hpp"

namespace bkwasym::cli {

namespace {

std::string fmt6(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << v;
    return s.str();
}

struct ResultRow {
    double cq = 0.0, cs = 0.0;
    std::string compute, samples, algorithm;
    double exponent = std::nan("");
    double alpha = std::nan("");
    double gamma_s = std::nan("");
    double gamma_f = std::nan("");
    std::string status = "ok";
};

constexpr const char* kCsvHeader = "cq,cs,compute,samples,algorithm,exponent,alpha,gamma_s,gamma_f,status";

void write_csv_row(std::ostream& out, const ResultRow& r) {
    out << fmt6(r.cq) << ',' << fmt6(r.cs) << ',' << r.compute << ',' << r.samples << ','
        << r.algorithm << ',' << fmt6(r.exponent) << ',' << fmt6(r.alpha) << ','
        << fmt6(r.gamma_s) << ',' << fmt6(r.gamma_f) << ',' << r.status << '\n';
}

ResultRow result_row(const ExponentOptions& opts, const ExponentResult& res) {
    ResultRow row;
    row.cq = opts.cq;
    row.cs = opts.cs;
    row.compute = opts.compute;
    row.samples = opts.samples;
    row.algorithm = opts.algorithm;
    row.exponent = res.c;
    row.alpha = res.alpha_opt;
    row.gamma_s = res.schedule_opt.gamma_s;
    row.gamma_f = res.schedule_opt.gamma_f;
    return row;
}

}  // namespace

AlgorithmKind parse_algorithm(const std::string& name) {
    if (name == "plain") return AlgorithmKind::plain_bkw();
    if (name == "coded") return AlgorithmKind::coded_bkw();
    if (name == "lattice") return AlgorithmKind::lattice();
    if (name == "sieve-g1") return AlgorithmKind::sieve(GammaSchedule::fixed_one());
    if (name == "sieve-const") return AlgorithmKind::sieve(GammaSchedule::constant(1.0));
    if (name == "sieve-arith") return AlgorithmKind::sieve(GammaSchedule::arithmetic(1.0, 1.0));
    throw InvalidParams("unknown algorithm '" + name +
                        "' (expected plain|coded|lattice|sieve-g1|sieve-const|sieve-arith)");
}

ComputeModel parse_compute(const std::string& name) {
    if (name == "classical") return ComputeModel::classical;
    if (name == "quantum") return ComputeModel::quantum;
    throw InvalidParams("unknown compute model '" + name + "'");
}

SampleRegime parse_samples(const std::string& name) {
    if (name == "exponential") return SampleRegime::exponential;
    if (name == "polynomial") return SampleRegime::polynomial;
    throw InvalidParams("unknown sample regime '" + name + "'");
}

SieveCostModel obtain_model(const std::optional<std::string>& cache, std::size_t grid_size) {
    if (cache && std::filesystem::exists(*cache)) return SieveCostModel::load_csv(*cache);
    SieveCostModel model = SieveCostModel::build(grid_size);
    if (cache) model.save_csv(*cache);
    return model;
}

int run_exponent(const ExponentOptions& opts, const SieveCostModel& model, std::ostream& out,
                 std::ostream& err) {
    ExponentResult res;
    try {
        ProblemParams params{opts.cq, opts.cs};
        Scenario scenario{parse_compute(opts.compute), parse_samples(opts.samples)};
        validate(params, scenario);
        res = solve(params, scenario, parse_algorithm(opts.algorithm), model);
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputationError;
    }

    ResultRow row = result_row(opts, res);
    if (opts.json) {
        nlohmann::ordered_json j{{"cq", fmt6(row.cq)},
                                 {"cs", fmt6(row.cs)},
                                 {"compute", row.compute},
                                 {"samples", row.samples},
                                 {"algorithm", row.algorithm},
                                 {"exponent", fmt6(row.exponent)},
                                 {"alpha", fmt6(row.alpha)},
                                 {"gamma_s", fmt6(row.gamma_s)},
                                 {"gamma_f", fmt6(row.gamma_f)},
                                 {"status", row.status}};
        out << j.dump(2) << '\n';
    } else {
        out << "c = " << fmt6(row.exponent) << '\n';
        out << "alpha = " << fmt6(row.alpha) << '\n';
        out << "gamma_s = " << fmt6(row.gamma_s) << '\n';
        out << "gamma_f = " << fmt6(row.gamma_f) << '\n';
    }
    return kOk;
}

int run_lambda(const LambdaOptions& opts, const SieveCostModel& model, std::ostream& out,
               std::ostream& err) {
    try {
        const double lambda = model.lambda(opts.gamma, parse_compute(opts.compute));
        out << "lambda = " << fmt6(lambda) << '\n';
        return kOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

int run_table1(const SieveCostModel& model, std::ostream& out, std::ostream& err) {
    const ProblemParams regev{2.0, 1.5};
    const char* schedule_names[3] = {"gamma = 1", "gamma constant", "gamma arithmetic"};
    const GammaSchedule schedules[3] = {GammaSchedule::fixed_one(), GammaSchedule::constant(1.0),
                                        GammaSchedule::arithmetic(1.0, 1.0)};
    try {
        out << "| Samples | Schedule | Classical | Quantum |\n";
        out << "|---|---|---|---|\n";
        for (SampleRegime samples : {SampleRegime::exponential, SampleRegime::polynomial}) {
            for (int i = 0; i < 3; ++i) {
                out << "| " << to_string(samples) << " | " << schedule_names[i] << " |";
                for (ComputeModel compute : {ComputeModel::classical, ComputeModel::quantum}) {
                    ExponentResult res = solve(regev, Scenario{compute, samples},
                                               AlgorithmKind::sieve(schedules[i]), model);
                    out << ' ' << fmt6(res.c) << " |";
                }
                out << '\n';
            }
        }
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputationError;
    }
}

namespace {

struct SweepPoint {
    double cq, cs;
    std::vector<ResultRow> rows;
};

void sweep_point(SweepPoint& point, const SweepOptions& opts, const SieveCostModel& model) {
    ExponentOptions base;
    base.cq = point.cq;
    base.cs = point.cs;
    base.samples = opts.samples;
    base.compute = opts.compute;

    ProblemParams params{point.cq, point.cs};
    Scenario scenario{parse_compute(opts.compute), parse_samples(opts.samples)};

    auto skipped = [&](const char* alg) {
        ResultRow row;
        row.cq = point.cq;
        row.cs = point.cs;
        row.compute = opts.compute;
        row.samples = opts.samples;
        row.algorithm = alg;
        row.status = "skipped";
        return row;
    };

    try {
        validate(params, scenario);
    } catch (const InvalidParams&) {
        point.rows = {skipped("sieve-const"), skipped("sieve-arith"), skipped("improvement")};
        return;
    }

    try {
        base.algorithm = "sieve-const";
        ExponentResult cres =
            solve(params, scenario, AlgorithmKind::sieve(GammaSchedule::constant(1.0)), model);
        point.rows.push_back(result_row(base, cres));

        base.algorithm = "sieve-arith";
        ExponentResult ares =
            solve(params, scenario, AlgorithmKind::sieve(GammaSchedule::arithmetic(1.0, 1.0)), model);
        point.rows.push_back(result_row(base, ares));

        ResultRow imp = skipped("improvement");
        imp.status = "ok";
        imp.exponent = cres.c - ares.c;
        point.rows.push_back(imp);
    } catch (const std::exception&) {
        point.rows = {skipped("sieve-const"), skipped("sieve-arith"), skipped("improvement")};
        for (auto& row : point.rows) row.status = "infeasible";
    }
}

}  // namespace

int run_sweep(const SweepOptions& opts, const SieveCostModel& model, std::ostream& out,
              std::ostream& err) {
    if (opts.cq_steps < 2 || opts.cs_steps < 2) {
        err << "error: sweep requires at least 2 steps per axis\n";
        return kUsageError;
    }
    try {
        parse_compute(opts.compute);
        parse_samples(opts.samples);
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    const double cs_max = opts.cs_max.value_or(opts.cq_max - 0.05);
    std::vector<SweepPoint> points;
    for (std::size_t i = 0; i < opts.cq_steps; ++i) {
        const double cq = opts.cq_min + (opts.cq_max - opts.cq_min) * static_cast<double>(i) /
                                            static_cast<double>(opts.cq_steps - 1);
        for (std::size_t j = 0; j < opts.cs_steps; ++j) {
            const double cs = opts.cs_min + (cs_max - opts.cs_min) * static_cast<double>(j) /
                                                static_cast<double>(opts.cs_steps - 1);
            points.push_back({cq, cs, {}});
        }
    }

    // Worker pool over grid points; rows are written in grid order afterwards,
    // so the output file does not depend on completion order.
    std::size_t threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    threads = std::max<std::size_t>(1, std::min(threads, points.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= points.size()) return;
                sweep_point(points[k], opts, model);
            }
        });
    }
    for (auto& t : pool) t.join();

    std::ofstream file(opts.out_path);
    if (!file) {
        err << "error: cannot open " << opts.out_path << " for writing\n";
        return kComputationError;
    }
    file << kCsvHeader << '\n';
    for (const auto& point : points)
        for (const auto& row : point.rows) write_csv_row(file, row);
    out << "wrote " << points.size() << " grid points to " << opts.out_path << '\n';
    return kOk;
}

int run_oracle(const OracleOptions& opts, const SieveCostModel& model, std::ostream& out,
               std::ostream& err) {
    try {
        ProblemParams params{opts.cq, opts.cs};
        Scenario scenario{parse_compute(opts.compute), parse_samples(opts.samples)};
        validate(params, scenario);
        AlgorithmKind kind = parse_algorithm(opts.algorithm);
        if (kind.tag != AlgorithmKind::Tag::sieve)
            throw InvalidParams("oracle supports sieve algorithms only");

        ExponentResult asym = solve(params, scenario, kind, model);
        double alpha = asym.alpha_opt;
        if (opts.alpha_override) alpha = *opts.alpha_override;
        double c_asym = asym.c;
        if (opts.alpha_override) {
            // Re-evaluate the asymptotic objective at the overridden alpha.
            ObjectiveContext ctx = ObjectiveContext::make(params, scenario, model);
            c_asym = objective_t2(alpha, asym.schedule_opt.gamma_s, asym.schedule_opt.gamma_f, ctx);
        }

        OracleResult disc = solve_c_discrete(alpha, asym.schedule_opt.gamma_s,
                                             asym.schedule_opt.gamma_f, params, scenario, model,
                                             opts.log2n);
        out << "c_asymptotic = " << fmt6(c_asym) << '\n';
        out << "c_discrete = " << fmt6(disc.c_discrete) << '\n';
        out << "relative_gap = " << fmt6(std::fabs(disc.c_discrete - c_asym) / c_asym) << '\n';
        return kOk;
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputationError;
    }
}

}  // namespace bkwasym::cli
