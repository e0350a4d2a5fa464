#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bkwasym/core.hpp"
#include "bkwasym/sieve_model.hpp"

namespace bkwasym::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kUsageError = 2;

/// Parses plain|coded|lattice|sieve-g1|sieve-const|sieve-arith.
AlgorithmKind parse_algorithm(const std::string& name);
ComputeModel parse_compute(const std::string& name);
SampleRegime parse_samples(const std::string& name);

/// Obtains the lambda table: loads `cache` when it exists, otherwise builds
/// the table (and saves it when a cache path was given).
SieveCostModel obtain_model(const std::optional<std::string>& cache, std::size_t grid_size = 1024);

struct ExponentOptions {
    double cq = 0.0;
    double cs = 0.0;
    std::string algorithm = "sieve-const";
    std::string samples = "exponential";
    std::string compute = "classical";
    bool json = false;
};

int run_exponent(const ExponentOptions& opts, const SieveCostModel& model, std::ostream& out,
                 std::ostream& err);

struct LambdaOptions {
    double gamma = 1.0;
    std::string compute = "classical";
};

int run_lambda(const LambdaOptions& opts, const SieveCostModel& model, std::ostream& out,
               std::ostream& err);

int run_table1(const SieveCostModel& model, std::ostream& out, std::ostream& err);

struct SweepOptions {
    double cq_min = 1.0;
    double cq_max = 3.0;
    std::size_t cq_steps = 41;
    double cs_min = 0.55;
    // Defaults to cq_max - 0.05 when unset; grid points with cs >= cq are
    // emitted as skipped rows either way.
    std::optional<double> cs_max;
    std::size_t cs_steps = 41;
    std::string samples = "exponential";
    std::string compute = "classical";
    std::string out_path = "sweep.csv";
    std::size_t threads = 0;  // 0 = hardware concurrency
};

int run_sweep(const SweepOptions& opts, const SieveCostModel& model, std::ostream& out,
              std::ostream& err);

struct OracleOptions {
    double cq = 2.0;
    double cs = 1.5;
    std::string algorithm = "sieve-const";
    std::string samples = "exponential";
    std::string compute = "classical";
    double log2n = 256.0;
    std::optional<double> alpha_override;
};

int run_oracle(const OracleOptions& opts, const SieveCostModel& model, std::ostream& out,
               std::ostream& err);

}  // namespace bkwasym::cli
