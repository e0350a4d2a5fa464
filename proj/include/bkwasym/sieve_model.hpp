#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "bkwasym/core.hpp"
#include "bkwasym/numerics.hpp"

namespace bkwasym {

/// Per-dimension log2 of the relative volume of a spherical cap of angle a.
/// Always <= 0; 0 exactly at a = pi/2.
double cap_exponent(double a);

/// Per-dimension log2 of the relative volume of the intersection of two caps
/// of angles a and b whose centres are t apart. Returns -infinity when the
/// caps have asymptotically empty intersection.
double wedge_exponent(double a, double b, double t);

/// Target reduction angle and filter cap angle of the nearest-neighbour
/// filter structure underlying lambda_at.
struct FilterGeometry {
    double theta;         // reduction angle, theta = 2*arcsin(gamma/2)
    double alpha_filter;  // cap angle of the insertion/query filters
};

struct LambdaPoint {
    double lambda;
    FilterGeometry geometry;
};

/// Sieving complexity exponent lambda(gamma) with the optimizing filter
/// geometry. Direct computation; see SieveCostModel for the tabulated form.
LambdaPoint lambda_at_detail(double gamma, ComputeModel compute);

inline double lambda_at(double gamma, ComputeModel compute) {
    return lambda_at_detail(gamma, compute).lambda;
}

/// Tabulated lambda(gamma) for both compute models over a uniform grid on
/// [0.05, sqrt(2)], with monotone piecewise-cubic interpolation between grid
/// points. Immutable after construction; lookups are reentrant.
class SieveCostModel {
  public:
    static SieveCostModel build(std::size_t grid_size = 1024);

    double lambda(double gamma, ComputeModel compute) const;

    const std::vector<double>& gamma_grid() const { return grid_; }
    const std::vector<double>& lambda_classical() const { return classical_.values(); }
    const std::vector<double>& lambda_quantum() const { return quantum_.values(); }

    /// CSV persistence: header `gamma,lambda_classical,lambda_quantum`, one
    /// row per grid point, 12 significant digits.
    void save_csv(const std::filesystem::path& path) const;
    static SieveCostModel load_csv(const std::filesystem::path& path);

  private:
    SieveCostModel(std::vector<double> grid, std::vector<double> classical,
                   std::vector<double> quantum);
    void check_calibration() const;

    std::vector<double> grid_;
    PchipCurve classical_;
    PchipCurve quantum_;
};

/// Lower end of the tabulated gamma range; lambda diverges as gamma -> 0 and
/// the solvers' objectives blow up well before this point.
inline constexpr double kGammaGridLo = 0.05;

}  // namespace bkwasym
