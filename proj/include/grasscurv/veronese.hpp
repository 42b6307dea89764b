#pragma once

#include <vector>

#include <Eigen/Dense>

#include "grasscurv/grassmann.hpp"

namespace grasscurv {

struct VeroneseSpec {
  int n = 2;
  int m = 1;

  /// Power r of the Veronese Gram determinant, m(n-m) = dim G(m,n).
  int r_max() const noexcept { return m * (n - m); }
  void validate() const;
};

/// f = (1, sqrt(C(n-1,1)) x, ..., sqrt(C(n-1,k)) x^k, ..., x^(n-1)).
GrassmannFrame veronese_cp(int n);

/// Columns f, f', ..., f^(m-1).
GrassmannFrame veronese_frame(const VeroneseSpec& spec);

/// Closed-form Macfarlane matrix K_V of the Veronese curve in G(m,n).
MacfarlaneMap veronese_macfarlane(const VeroneseSpec& spec);

/// Values of f, P+ f, ..., P+^k f at x, where P+ g = dg - (g^dagger dg / |g|^2) g.
///
/// Derivatives of the non-holomorphic iterates are taken exactly by truncated
/// Taylor arithmetic in (x, conj x) around the point, so no finite
/// differences enter.
std::vector<Eigen::VectorXcd> pplus_orbit(const GrassmannFrame& f, int k, cplx x);

}  // namespace grasscurv
