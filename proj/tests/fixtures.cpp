#include "fixtures.hpp"

#include <cmath>

#include "grasscurv/document.hpp"

namespace fixtures {

using grasscurv::cplx;
using grasscurv::HoloPoly;

grasscurv::PlueckerVector from_display(int n, const std::vector<std::pair<double, int>>& terms) {
  const auto order = grasscurv::display_order_g2(n);
  const auto tuples = grasscurv::index_tuples(n, 2);
  std::vector<HoloPoly> entries(tuples.size());
  for (std::size_t q = 0; q < order.size(); ++q) {
    const auto pos = static_cast<std::size_t>(std::lower_bound(tuples.begin(), tuples.end(), order[q]) - tuples.begin());
    if (terms.at(q).first != 0.0) entries[pos] = HoloPoly::monomial(terms[q].first, terms[q].second);
  }
  return grasscurv::PlueckerVector(n, 2, std::move(entries));
}

std::vector<Witness> reference_witnesses() {
  const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s6 = std::sqrt(6.0);
  std::vector<Witness> out;
  out.push_back({"Z6 r=3", 3, from_display(4, {{1, 0}, {-std::sqrt(8.0 / 3.0), 1}, {1 / s3, 1}, {-s3, 2}, {0, 0}, {-1, 3}})});
  out.push_back({"Z6 r=4", 4, from_display(4, {{1, 0}, {-2, 1}, {s3, 2}, {-s3, 2}, {2, 3}, {1, 4}})});
  out.push_back({"Z10 r=5 (first)", 5,
                 from_display(5, {{1, 0}, {-s5, 1}, {s5, 2}, {-s5, 2}, {7 / s5, 3}, {0, 0}, {1 / s5, 3}, {2, 4}, {1, 4}, {1, 5}})});
  out.push_back({"Z10 r=5 (second)", 5,
                 from_display(5, {{1, 0}, {-1, 1}, {2, 1}, {-1 / s5, 2}, {7 / s5, 2}, {0, 0}, {s5, 3}, {s5, 3}, {s5, 4}, {1, 5}})});
  out.push_back({"Z10 r=6", 6,
                 from_display(5, {{1, 0}, {s6, 1}, {s6, 2}, {3, 2}, {4, 3}, {2, 3}, {3, 4}, {-s6, 4}, {-s6, 5}, {-1, 6}})});
  return out;
}

HoloPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<cplx> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = {g(rng), g(rng)};
  return HoloPoly(std::move(c));
}

grasscurv::GrassmannFrame random_frame(std::mt19937_64& rng, int n, int m, int max_degree) {
  std::vector<HoloPoly> e;
  for (int i = 0; i < n * m; ++i) e.push_back(random_poly(rng, max_degree));
  return grasscurv::GrassmannFrame(n, m, std::move(e));
}

grasscurv::MacfarlaneMap random_macfarlane(std::mt19937_64& rng, int n, int m, int max_degree) {
  std::vector<HoloPoly> e;
  for (int i = 0; i < (n - m) * m; ++i) e.push_back(random_poly(rng, max_degree));
  return grasscurv::MacfarlaneMap(n, m, std::move(e));
}

grasscurv::BiPoly random_hermitian(std::mt19937_64& rng) {
  grasscurv::BiPoly h = grasscurv::BiPoly::constant(1.0);
  for (int i = 0; i < 3; ++i) {
    const HoloPoly p = random_poly(rng, 3);
    h += grasscurv::mul_conj(p, p);
  }
  return h;
}

cplx random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

SevenDigitPoint seven_digit_g26_point() {
  const double b4 = -0.1926106;
  return {{std::sqrt(7.0), -4.5562275, 1.0 / b4, 0.0}, {-0.4907042, 2.8363697, 2.6842282, b4}};
}

}  // namespace fixtures
