#pragma once

#include <random>
#include <string>
#include <vector>

#include "grasscurv/grassmann.hpp"

namespace fixtures {

struct Witness {
  std::string name;
  int r = 0;
  grasscurv::PlueckerVector pv;
};

/// Explicit G(2,4) and G(2,5) constant-curvature solutions given as Pluecker
/// data in display order 12, 23, 13, 24, 14, ...
std::vector<Witness> reference_witnesses();

/// Build a Pluecker vector from (coefficient, power) pairs in display order.
grasscurv::PlueckerVector from_display(int n, const std::vector<std::pair<double, int>>& terms);

grasscurv::HoloPoly random_poly(std::mt19937_64& rng, int max_degree);
grasscurv::GrassmannFrame random_frame(std::mt19937_64& rng, int n, int m, int max_degree);
grasscurv::MacfarlaneMap random_macfarlane(std::mt19937_64& rng, int n, int m, int max_degree);
/// 1 + sum |p_i|^2: Hermitian and strictly positive.
grasscurv::BiPoly random_hermitian(std::mt19937_64& rng);
grasscurv::cplx random_point(std::mt19937_64& rng, double radius);

/// Known approximate G(2,6), r = 7 solution, given to 7 digits.
struct SevenDigitPoint {
  std::vector<grasscurv::cplx> alpha;
  std::vector<grasscurv::cplx> beta;
};
SevenDigitPoint seven_digit_g26_point();

}  // namespace fixtures
