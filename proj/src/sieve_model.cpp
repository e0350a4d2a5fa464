#include "bkwasym/sieve_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace bkwasym {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

double cap_exponent(double a) {
    if (!(a > 0.0) || a > kPi / 2.0 + 1e-12)
        throw DomainError("cap_exponent: angle must lie in (0, pi/2]");
    return std::log2(std::sin(std::min(a, kPi / 2.0)));
}

double wedge_exponent(double a, double b, double t) {
    if (!(a > 0.0) || a >= kPi / 2.0 || !(b > 0.0) || b >= kPi / 2.0)
        throw DomainError("wedge_exponent: cap angles must lie in (0, pi/2)");
    if (!(t > 0.0) || t > kPi / 2.0 + 1e-12)
        throw DomainError("wedge_exponent: separation must lie in (0, pi/2]");
    const double ca = std::cos(a), cb = std::cos(b), ct = std::cos(t);
    const double st = std::sin(t);
    const double arg = 1.0 - (ca * ca + cb * cb - 2.0 * ca * cb * ct) / (st * st);
    if (arg <= 0.0) return kNegInf;
    return 0.5 * std::log2(arg);
}

namespace {

// Per-point cost exponent of the filtered nearest-neighbour search, relative
// to the list size, as a function of the filter cap angle.
//
// m        filter-count exponent: enough filters that a reducing pair (at
//          angle theta) shares one.
// insert   filters touched per inserted/queried vector.
// scan     expected bucket-scan work per query: relevant filters times the
//          expected bucket occupancy. The quantum model runs Grover over the
//          scanned candidate stream, halving the exponent.
double per_point_cost(double alpha_filter, double theta, double list_exp, ComputeModel compute) {
    const double shared = wedge_exponent(alpha_filter, alpha_filter, theta);
    if (shared == kNegInf) return std::numeric_limits<double>::infinity();
    const double m = -shared;
    const double cap = cap_exponent(alpha_filter);
    const double insert = m + cap;
    double scan = list_exp + m + 2.0 * cap;
    if (compute == ComputeModel::quantum) scan *= 0.5;
    return std::max({insert, scan, 0.0});
}

}  // namespace

LambdaPoint lambda_at_detail(double gamma, ComputeModel compute) {
    if (!(gamma > 0.0) || gamma > kSqrt2 + 1e-12)
        throw DomainError("lambda_at: gamma must lie in (0, sqrt(2)]");
    const double theta = 2.0 * std::asin(std::min(gamma, kSqrt2) / 2.0);
    if (gamma >= kSqrt2 - 1e-12) {
        // theta = pi/2: unit list size, zero cost.
        return {0.0, {theta, kPi / 2.0}};
    }
    const double list_exp = -std::log2(std::sin(theta));

    const double lo = theta / 2.0 + 1e-9;
    const double hi = kPi / 2.0 - 1e-9;
    auto cost = [&](double a) { return per_point_cost(a, theta, list_exp, compute); };

    // Bracketing scan, then golden-section refinement.
    constexpr int kScan = 256;
    int best_i = 0;
    double best_v = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kScan; ++i) {
        double a = lo + (hi - lo) * i / kScan;
        double v = cost(a);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, best_i - 1) / kScan;
    double b = lo + (hi - lo) * std::min(kScan, best_i + 1) / kScan;
    constexpr double kGolden = 0.6180339887498949;
    while (b - a > 1e-9) {
        double x1 = b - kGolden * (b - a);
        double x2 = a + kGolden * (b - a);
        if (cost(x1) < cost(x2))
            b = x2;
        else
            a = x1;
    }
    const double opt = 0.5 * (a + b);
    return {list_exp + cost(opt), {theta, opt}};
}

// ---------------------------------------------------------------------------
// SieveCostModel

SieveCostModel::SieveCostModel(std::vector<double> grid, std::vector<double> classical,
                               std::vector<double> quantum)
    : grid_(grid), classical_(grid, std::move(classical)), quantum_(std::move(grid), std::move(quantum)) {
    check_calibration();
}

void SieveCostModel::check_calibration() const {
    const double lc1 = classical_(1.0);
    const double lq1 = quantum_(1.0);
    if (std::fabs(lc1 - 0.292) > 1e-3 || std::fabs(lq1 - 0.265) > 1e-3)
        throw DomainError("sieve cost model fails calibration at gamma = 1");
    const auto& lc = classical_.values();
    const auto& lq = quantum_.values();
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        if (i > 0 && lc[i] > lc[i - 1] + 1e-9)
            throw DomainError("classical lambda must be non-increasing in gamma");
        if (i > 0 && lq[i] > lq[i - 1] + 1e-9)
            throw DomainError("quantum lambda must be non-increasing in gamma");
        if (lq[i] > lc[i] + 1e-9)
            throw DomainError("quantum lambda must not exceed classical lambda");
    }
}

SieveCostModel SieveCostModel::build(std::size_t grid_size) {
    if (grid_size < 64) throw DomainError("SieveCostModel::build: grid_size >= 64 required");
    std::vector<double> grid(grid_size), lc(grid_size), lq(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        double g = kGammaGridLo + (kSqrt2 - kGammaGridLo) * static_cast<double>(i) /
                                      static_cast<double>(grid_size - 1);
        if (i + 1 == grid_size) g = kSqrt2;
        grid[i] = g;
        lc[i] = lambda_at(g, ComputeModel::classical);
        lq[i] = lambda_at(g, ComputeModel::quantum);
    }
    return SieveCostModel(std::move(grid), std::move(lc), std::move(lq));
}

double SieveCostModel::lambda(double gamma, ComputeModel compute) const {
    if (!(gamma >= kGammaGridLo) || gamma > kSqrt2 + 1e-12)
        throw DomainError("SieveCostModel::lambda: gamma outside tabulated range [0.05, sqrt(2)]");
    gamma = std::min(gamma, kSqrt2);
    return compute == ComputeModel::classical ? classical_(gamma) : quantum_(gamma);
}

void SieveCostModel::save_csv(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open " + path.string() + " for writing");
    out << "gamma,lambda_classical,lambda_quantum\n";
    out.precision(12);
    const auto& lc = classical_.values();
    const auto& lq = quantum_.values();
    for (std::size_t i = 0; i < grid_.size(); ++i)
        out << grid_[i] << ',' << lc[i] << ',' << lq[i] << '\n';
}

SieveCostModel SieveCostModel::load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "gamma,lambda_classical,lambda_quantum")
        throw DomainError("bad lambda table header in " + path.string());
    std::vector<double> grid, lc, lq;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double g, c, q;
        char comma1, comma2;
        if (!(row >> g >> comma1 >> c >> comma2 >> q) || comma1 != ',' || comma2 != ',')
            throw DomainError("bad lambda table row: " + line);
        grid.push_back(g);
        lc.push_back(c);
        lq.push_back(q);
    }
    if (grid.size() < 64) throw DomainError("lambda table too small in " + path.string());
    return SieveCostModel(std::move(grid), std::move(lc), std::move(lq));
}

}  // namespace bkwasym
