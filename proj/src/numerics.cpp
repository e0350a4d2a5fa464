#include "bkwasym/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace bkwasym {

// ---------------------------------------------------------------------------
// PchipCurve

PchipCurve::PchipCurve(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw DomainError("PchipCurve needs >= 2 matching nodes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1])) throw DomainError("PchipCurve nodes must be strictly increasing");

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }

    slope_.assign(n, 0.0);
    // Interior tangents: weighted harmonic mean where the secants agree in
    // sign, zero otherwise (Fritsch-Carlson).
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] > 0.0) {
            double w1 = 2.0 * h[i] + h[i - 1];
            double w2 = h[i] + 2.0 * h[i - 1];
            slope_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // One-sided endpoint tangents, clipped to preserve shape.
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0)) return 3.0 * d0;
        return s;
    };
    if (n == 2) {
        slope_[0] = slope_[1] = delta[0];
    } else {
        slope_[0] = endpoint(h[0], h[1], delta[0], delta[1]);
        slope_[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    }
}

double PchipCurve::operator()(double t) const {
    if (x_.empty()) throw DomainError("PchipCurve is empty");
    const double eps = 1e-12 * (x_.back() - x_.front());
    if (t < x_.front() - eps || t > x_.back() + eps)
        throw DomainError("PchipCurve evaluation outside data range");
    t = std::clamp(t, x_.front(), x_.back());

    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
    if (i + 1 >= x_.size()) i = x_.size() - 2;

    const double h = x_[i + 1] - x_[i];
    const double s = (t - x_[i]) / h;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    return h00 * y_[i] + h * h10 * slope_[i] + h01 * y_[i + 1] + h * h11 * slope_[i + 1];
}

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod quadrature

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEstimate {
    double kronrod;
    double error;
};

PanelEstimate gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - half * kKronrodNodes[i]);
        fv[14 - i] = f(c + half * kKronrodNodes[i]);
    }
    fv[7] = f(c);
    for (double v : fv)
        if (!std::isfinite(v)) throw NonFiniteIntegrand("integrand returned a non-finite value");

    double kron = kKronrodWeights[7] * fv[7];
    for (int i = 0; i < 7; ++i) kron += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
    double gauss = kGaussWeights[3] * fv[7];
    for (int i = 0; i < 3; ++i) gauss += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    return {kron * half, std::fabs(kron - gauss) * half};
}

}  // namespace

double integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
    if (!(lo <= hi)) throw DomainError("integrate requires lo <= hi");
    if (lo == hi) return 0.0;

    struct Segment {
        double a, b, value, error;
    };
    PanelEstimate first = gk15(f, lo, hi);
    std::deque<Segment> segs{{lo, hi, first.kronrod, first.error}};
    double total_error = first.error;
    std::uint64_t splits = 0;

    while (total_error > spec.abs_tol) {
        // Split the segment with the largest error estimate.
        auto worst = std::max_element(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
            return x.error < y.error;
        });
        if (++splits > spec.max_subdivisions)
            throw ToleranceNotReached("integrate: subdivision budget exhausted");
        Segment s = *worst;
        double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b)
            throw ToleranceNotReached("integrate: interval no longer splittable");
        PanelEstimate left = gk15(f, s.a, mid);
        PanelEstimate right = gk15(f, mid, s.b);
        *worst = {s.a, mid, left.kronrod, left.error};
        segs.push_back({mid, s.b, right.kronrod, right.error});
        total_error += left.error + right.error - s.error;
    }

    double sum = 0.0;
    for (const Segment& s : segs) sum += s.value;
    return sum;
}

// ---------------------------------------------------------------------------
// Cumulative integral

CumulativeIntegral::CumulativeIntegral(std::vector<double> grid, std::vector<double> values)
    : curve_(std::move(grid), std::move(values)) {}

CumulativeIntegral cumulative(const Integrand& f, double T, std::size_t grid_points,
                              const QuadratureSpec& spec) {
    if (!(T > 0.0)) throw DomainError("cumulative requires T > 0");
    if (grid_points < 65) throw DomainError("cumulative requires >= 65 grid points");

    QuadratureSpec panel = spec;
    panel.abs_tol = 10.0 * spec.abs_tol / static_cast<double>(grid_points);

    std::vector<double> grid(grid_points), values(grid_points);
    grid[0] = 0.0;
    values[0] = 0.0;
    for (std::size_t i = 1; i < grid_points; ++i) {
        grid[i] = T * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        values[i] = values[i - 1] + integrate(f, grid[i - 1], grid[i], panel);
    }
    return CumulativeIntegral(std::move(grid), std::move(values));
}

// ---------------------------------------------------------------------------
// Box-constrained derivative-free minimization

namespace {

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

struct NelderMeadOutcome {
    std::vector<double> arg;
    double value;
    bool converged;
};

NelderMeadOutcome nelder_mead(const BoxObjective& f, std::vector<double> x0,
                              const std::vector<double>& lower, const std::vector<double>& upper,
                              const MinimizerSpec& spec, std::uint64_t& evals) {
    const std::size_t dim = x0.size();
    auto project = [&](std::vector<double>& x) {
        for (std::size_t i = 0; i < dim; ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
    };
    auto eval = [&](std::vector<double>& x) {
        project(x);
        ++evals;
        double v = f(x);
        return std::isfinite(v) ? v : kPenalty;
    };

    struct Vertex {
        std::vector<double> x;
        double v;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(dim + 1);
    project(x0);
    simplex.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<double> x = x0;
        double step = 0.05 * (upper[i] - lower[i]);
        x[i] = (x[i] + step <= upper[i]) ? x[i] + step : x[i] - step;
        simplex.push_back({x, eval(x)});
    }

    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) {
            return a.v < b.v;
        });
    };
    order();

    bool converged = false;
    for (std::uint64_t iter = 0; iter < spec.max_iters; ++iter) {
        double diameter = 0.0;
        for (std::size_t i = 1; i <= dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                diameter = std::max(diameter, std::fabs(simplex[i].x[j] - simplex[0].x[j]));
        double spread = std::fabs(simplex[dim].v - simplex[0].v);
        if (diameter <= spec.param_tol && spread <= spec.objective_tol) {
            converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i].x[j];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double coeff) {
            std::vector<double> x(dim);
            for (std::size_t j = 0; j < dim; ++j)
                x[j] = centroid[j] + coeff * (centroid[j] - simplex[dim].x[j]);
            return x;
        };

        std::vector<double> xr = blend(1.0);
        double vr = eval(xr);
        if (vr < simplex[0].v) {
            std::vector<double> xe = blend(2.0);
            double ve = eval(xe);
            if (ve < vr)
                simplex[dim] = {std::move(xe), ve};
            else
                simplex[dim] = {std::move(xr), vr};
        } else if (vr < simplex[dim - 1].v) {
            simplex[dim] = {std::move(xr), vr};
        } else {
            double coeff = (vr < simplex[dim].v) ? 0.5 : -0.5;
            std::vector<double> xc = blend(coeff);
            double vc = eval(xc);
            if (vc < std::min(vr, simplex[dim].v)) {
                simplex[dim] = {std::move(xc), vc};
            } else {
                // Shrink toward the best vertex.
                for (std::size_t i = 1; i <= dim; ++i) {
                    for (std::size_t j = 0; j < dim; ++j)
                        simplex[i].x[j] = simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
                    simplex[i].v = eval(simplex[i].x);
                }
            }
        }
        order();
    }
    return {simplex[0].x, simplex[0].v, converged};
}

}  // namespace

MinimizeResult minimize_box(const BoxObjective& f, const std::vector<double>& lower,
                            const std::vector<double>& upper, const MinimizerSpec& spec,
                            const std::vector<std::vector<double>>& extra_starts) {
    const std::size_t dim = lower.size();
    if (dim == 0 || upper.size() != dim) throw DomainError("minimize_box: bad box");
    for (std::size_t i = 0; i < dim; ++i)
        if (!(lower[i] < upper[i])) throw DomainError("minimize_box: lower < upper required");
    if (spec.multistart_grid.empty()) throw DomainError("minimize_box: empty multistart grid");

    std::vector<std::vector<double>> starts = extra_starts;
    std::vector<std::size_t> counts(dim);
    for (std::size_t i = 0; i < dim; ++i)
        counts[i] = spec.multistart_grid[std::min(i, spec.multistart_grid.size() - 1)];

    // Cell-centred lattice of start points, enumerated in row-major order.
    std::vector<std::size_t> idx(dim, 0);
    for (;;) {
        std::vector<double> x(dim);
        for (std::size_t i = 0; i < dim; ++i)
            x[i] = lower[i] + (upper[i] - lower[i]) * (static_cast<double>(idx[i]) + 0.5) /
                                  static_cast<double>(counts[i]);
        starts.push_back(std::move(x));
        std::size_t d = 0;
        while (d < dim && ++idx[d] == counts[d]) idx[d++] = 0;
        if (d == dim) break;
    }

    std::uint64_t evals = 0;
    bool any_feasible = false;
    MinimizeResult best;
    best.value = std::numeric_limits<double>::infinity();
    for (const auto& start : starts) {
        if (start.size() != dim) throw DomainError("minimize_box: start point has wrong dimension");
        NelderMeadOutcome out = nelder_mead(f, start, lower, upper, spec, evals);
        if (out.value < kPenalty * 0.1) any_feasible = true;
        bool better = out.value < best.value ||
                      (out.value == best.value && lex_less(out.arg, best.arg));
        if (better) {
            best.arg = out.arg;
            best.value = out.value;
            best.converged = out.converged;
        }
    }
    best.objective_evals = evals;
    if (!any_feasible) throw NoFeasiblePoint("minimize_box: all probes hit the penalty value");
    return best;
}

}  // namespace bkwasym
