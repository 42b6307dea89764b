#pragma once

// Energy density L = 1/2 d dbar ln det M and Gaussian curvature
// K = -(1/L) d dbar ln L of holomorphic maps, constant-curvature
// certification and a numeric Euler-Lagrange residual.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "grasscurv/grassmann.hpp"

namespace grasscurv {

struct ScanPoint {
  cplx x;
  double density = 0.0;
  /// NaN where the metric degenerates.
  double curvature = 0.0;
};

struct CurvatureReport {
  bool constant = false;
  std::optional<int> r;
  std::optional<double> kappa;
  std::vector<ScanPoint> scan;
  double tol = 0.0;
};

BiRational energy_density(const BiPoly& det_m);

/// Evaluates K at x from the exact partial derivatives of L's numerator and
/// denominator. Throws DegenerateMetric where L(x) <= metric_tol.
double gauss_curvature(const BiRational& density, cplx x, double metric_tol = 1e-13);

/// Precomputed partials of L for repeated pointwise evaluation.
class MetricField {
 public:
  explicit MetricField(const BiPoly& det_m);
  explicit MetricField(BiRational density);

  const BiRational& density() const noexcept { return l_; }
  double density_at(cplx x) const;
  double curvature_at(cplx x, double metric_tol = 1e-13) const;

 private:
  BiRational l_;
  BiPoly nz_, nw_, nzw_, dz_, dw_, dzw_;
};

/// steps x steps Cartesian grid over [a,b]^2, row-major in (re, im).
std::vector<ScanPoint> scan_grid(const BiPoly& det_m, double a, double b, int steps);

/// Binomial match plus curvature == 4/r at five pseudo-random points of the
/// disk |x| <= 2 (derived from seed). The default 5 x 5 scan over [-2,2]^2 is
/// always attached.
CurvatureReport constant_curvature_check(const BiPoly& det_m, double tol, std::uint64_t seed = 42);

/// Orthonormalized frame and its covariant derivatives at a point.
struct SigmaFieldPoint {
  cplx x;
  Eigen::MatrixXcd z;      // n x m, Z^dagger Z = I
  Eigen::MatrixXcd a;      // m x m, from iA = Z^dagger dZ
  Eigen::MatrixXcd dz;     // DZ = dZ - Z (Z^dagger dZ)
  Eigen::MatrixXcd dbarz;  // Dbar Z = dbar Z - Z (Z^dagger dbar Z)
};

/// Field values from a five-point stencil of spacing h around x.
SigmaFieldPoint sigma_field_point(const GrassmannFrame& frame, cplx x, double h);

/// Max-entry norm of Dbar D Z + Z (DZ)^dagger DZ, with derivatives of the
/// Gram-Schmidt normalized frame taken by central differences of step h.
double euler_lagrange_residual(const GrassmannFrame& frame, cplx x, double h);

}  // namespace grasscurv
