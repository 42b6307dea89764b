#include "grasscurv/curvature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace grasscurv {

BiRational energy_density(const BiPoly& det_m) {
  BiRational l = rational_log_laplacian(det_m);
  l.num *= 0.5;
  return l;
}

MetricField::MetricField(const BiPoly& det_m) : MetricField(energy_density(det_m)) {}

MetricField::MetricField(BiRational density) : l_(std::move(density)) {
  nz_ = partial_z(l_.num);
  nw_ = partial_zbar(l_.num);
  nzw_ = partial_zbar(nz_);
  dz_ = partial_z(l_.den);
  dw_ = partial_zbar(l_.den);
  dzw_ = partial_zbar(dz_);
}

double MetricField::density_at(cplx x) const { return eval_real(l_, x); }

double MetricField::curvature_at(cplx x, double metric_tol) const {
  const double l = density_at(x);
  if (!(l > metric_tol)) throw Error(ErrorCode::DegenerateMetric, "energy density vanishes; curvature undefined");

  const cplx n = l_.num(x), d = l_.den(x);
  const cplx nz = nz_(x), nw = nw_(x), nzw = nzw_(x);
  const cplx dz = dz_(x), dw = dw_(x), dzw = dzw_(x);
  const cplx d2 = d * d;
  // quotient rule on L = N / D
  const cplx top_z = nz * d - n * dz;
  const cplx lz = top_z / d2;
  const cplx lw = (nw * d - n * dw) / d2;
  const cplx lzw = (nzw * d + nz * dw - nw * dz - n * dzw) / d2 - 2.0 * top_z * dw / (d2 * d);
  const cplx k = -(l * lzw - lz * lw) / (l * l * l);
  return k.real();
}

double gauss_curvature(const BiRational& density, cplx x, double metric_tol) {
  return MetricField(density).curvature_at(x, metric_tol);
}

std::vector<ScanPoint> scan_grid(const BiPoly& det_m, double a, double b, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidInput, "grid needs at least one step");
  const MetricField field(det_m);
  std::vector<ScanPoint> out;
  out.reserve(static_cast<std::size_t>(steps) * steps);
  const double dx = steps > 1 ? (b - a) / (steps - 1) : 0.0;
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      const cplx x(a + i * dx, a + j * dx);
      ScanPoint p{x, field.density_at(x), std::numeric_limits<double>::quiet_NaN()};
      try {
        p.curvature = field.curvature_at(x);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateMetric) throw;
      }
      out.push_back(p);
    }
  }
  return out;
}

CurvatureReport constant_curvature_check(const BiPoly& det_m, double tol, std::uint64_t seed) {
  if (det_m.empty()) throw Error(ErrorCode::ZeroPolynomial, "Gram determinant is identically zero");
  CurvatureReport report;
  report.tol = tol;
  report.scan = scan_grid(det_m, -2.0, 2.0, 5);

  const auto match = binomial_match(det_m, tol);
  if (!match || match->r < 1) return report;

  const MetricField field(det_m);
  const double kappa = 4.0 / match->r;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    const double rad = 2.0 * std::sqrt(unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const cplx x = std::polar(rad, phi);
    if (std::abs(field.curvature_at(x) - kappa) > tol) return report;
  }
  report.constant = true;
  report.r = match->r;
  report.kappa = kappa;
  return report;
}

SigmaFieldPoint sigma_field_point(const GrassmannFrame& frame, cplx x, double h) {
  const cplx ih(0.0, h);
  const Eigen::MatrixXcd z0 = orthonormal_frame_at(frame, x);
  const Eigen::MatrixXcd zxp = orthonormal_frame_at(frame, x + h);
  const Eigen::MatrixXcd zxm = orthonormal_frame_at(frame, x - h);
  const Eigen::MatrixXcd zyp = orthonormal_frame_at(frame, x + ih);
  const Eigen::MatrixXcd zym = orthonormal_frame_at(frame, x - ih);

  const Eigen::MatrixXcd d1 = (zxp - zxm) / (2.0 * h);
  const Eigen::MatrixXcd d2 = (zyp - zym) / (2.0 * h);
  const cplx half_i(0.0, 0.5);
  const Eigen::MatrixXcd dz = 0.5 * d1 - half_i * d2;
  const Eigen::MatrixXcd dbz = 0.5 * d1 + half_i * d2;

  const Eigen::MatrixXcd a = z0.adjoint() * dz;
  const Eigen::MatrixXcd abar = z0.adjoint() * dbz;
  return {x, z0, cplx(0.0, -1.0) * a, dz - z0 * a, dbz - z0 * abar};
}

double euler_lagrange_residual(const GrassmannFrame& frame, cplx x, double h) {
  if (!(h >= 1e-6 && h <= 1e-3)) throw Error(ErrorCode::InvalidInput, "stencil step must lie in [1e-6, 1e-3]");
  const cplx ih(0.0, h);
  const Eigen::MatrixXcd z0 = orthonormal_frame_at(frame, x);
  const Eigen::MatrixXcd zxp = orthonormal_frame_at(frame, x + h);
  const Eigen::MatrixXcd zxm = orthonormal_frame_at(frame, x - h);
  const Eigen::MatrixXcd zyp = orthonormal_frame_at(frame, x + ih);
  const Eigen::MatrixXcd zym = orthonormal_frame_at(frame, x - ih);

  const cplx half_i(0.0, 0.5);
  const Eigen::MatrixXcd d1 = (zxp - zxm) / (2.0 * h);
  const Eigen::MatrixXcd d2 = (zyp - zym) / (2.0 * h);
  const Eigen::MatrixXcd dz = 0.5 * d1 - half_i * d2;
  const Eigen::MatrixXcd dbz = 0.5 * d1 + half_i * d2;
  // d dbar = Laplacian / 4
  const Eigen::MatrixXcd ddbz = (zxp + zxm + zyp + zym - 4.0 * z0) / (4.0 * h * h);

  const Eigen::MatrixXcd a = z0.adjoint() * dz;       // Z^dagger dZ
  const Eigen::MatrixXcd abar = z0.adjoint() * dbz;   // Z^dagger dbar Z
  const Eigen::MatrixXcd dbar_a = dz.adjoint() * dz + z0.adjoint() * ddbz;

  const Eigen::MatrixXcd cov = dz - z0 * a;                                // DZ
  const Eigen::MatrixXcd dbar_cov = ddbz - dbz * a - z0 * dbar_a;          // dbar(DZ)
  const Eigen::MatrixXcd el = dbar_cov - cov * abar + z0 * (cov.adjoint() * cov);
  return el.cwiseAbs().maxCoeff();
}

}  // namespace grasscurv
