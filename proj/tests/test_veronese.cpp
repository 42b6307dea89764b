#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "grasscurv/curvature.hpp"
#include "grasscurv/veronese.hpp"

using namespace grasscurv;

TEST_CASE("CP^{n-1} Veronese has det M = (1+|x|^2)^(n-1)") {
  for (int n = 2; n <= 10; ++n) {
    const GrassmannFrame f = veronese_cp(n);
    CHECK(f.m() == 1);
    const auto m = binomial_match(gram_det(f), 1e-12);
    REQUIRE(m.has_value());
    CHECK(m->r == n - 1);
    CHECK(m->c == doctest::Approx(1.0));
  }
}

TEST_CASE("derivative frames reach r = m(n-m)") {
  for (auto [m, n] : {std::pair{1, 4}, {2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}, {4, 7}}) {
    const VeroneseSpec spec{n, m};
    const GrassmannFrame f = veronese_frame(spec);
    CHECK(f.columns_independent());
    const auto match = binomial_match(gram_det(f), 1e-10);
    REQUIRE(match.has_value());
    CHECK(match->r == spec.r_max());
  }
}

TEST_CASE("every G(m,n) with n <= 8") {
  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m < n; ++m) {
      const VeroneseSpec spec{n, m};
      const auto match = binomial_match(gram_det(veronese_frame(spec)), 1e-9);
      REQUIRE_MESSAGE(match.has_value(), "m=", m, " n=", n);
      CHECK(match->r == spec.r_max());
      CHECK(match->c > 0.0);
      const BiPoly dk = macfarlane_gram_det(veronese_macfarlane(spec));
      const BiPoly dd = macfarlane_gram_det(duality_transpose(veronese_macfarlane(spec)));
      CHECK((dk - dd).max_abs_coeff() <= 1e-12 * dk.max_abs_coeff());
    }
}

TEST_CASE("closed-form K for G(2,4)") {
  const MacfarlaneMap k = veronese_macfarlane({4, 2});
  const double s3 = std::sqrt(3.0);
  CHECK(std::abs(k.k(0, 0).coeff(2) + s3) < 1e-14);
  CHECK(k.k(0, 0).degree() == 2);
  CHECK(k.k(0, 1) == HoloPoly::monomial(2.0, 1));
  CHECK(k.k(1, 0) == HoloPoly::monomial(-2.0, 3));
  CHECK(std::abs(k.k(1, 1).coeff(2) - s3) < 1e-14);
  const auto match = binomial_match(macfarlane_gram_det(k), 1e-12);
  REQUIRE(match.has_value());
  CHECK(match->r == 4);
  CHECK(match->c == doctest::Approx(1.0));
}

TEST_CASE("closed form is normalized with c = 1 and matches the frame up to gauge") {
  std::mt19937_64 rng(41);
  for (auto [m, n] : {std::pair{1, 3}, {2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}, {2, 7}, {3, 7}}) {
    const VeroneseSpec spec{n, m};
    const BiPoly dk = macfarlane_gram_det(veronese_macfarlane(spec));
    const auto mk = binomial_match(dk, 1e-11);
    REQUIRE_MESSAGE(mk.has_value(), "m=", m, " n=", n);
    CHECK(mk->r == spec.r_max());
    CHECK(mk->c == doctest::Approx(1.0).epsilon(1e-12));
    const MetricField a(dk), b(gram_det(veronese_frame(spec)));
    for (int t = 0; t < 5; ++t) {
      const cplx x = fixtures::random_point(rng, 1.5);
      CHECK(std::abs(a.density_at(x) - b.density_at(x)) <= 1e-10 * b.density_at(x));
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(veronese_frame({3, 3}), Error);
  CHECK_THROWS_AS(veronese_frame({3, 0}), Error);
  CHECK_THROWS_AS(veronese_cp(1), Error);
  CHECK(VeroneseSpec{6, 3}.r_max() == 9);
}

TEST_CASE("P+ orbit is orthogonal and carries the energy density") {
  std::mt19937_64 rng(43);
  for (int n : {3, 4, 6}) {
    const GrassmannFrame f = veronese_cp(n);
    const BiRational ddlog = rational_log_laplacian(gram_det(f));
    for (int t = 0; t < 4; ++t) {
      const cplx x = fixtures::random_point(rng, 1.2);
      const auto orbit = pplus_orbit(f, n - 1, x);
      REQUIRE(orbit.size() == static_cast<std::size_t>(n));
      for (std::size_t a = 0; a < orbit.size(); ++a)
        for (std::size_t b = a + 1; b < orbit.size(); ++b) {
          const double scale = orbit[a].norm() * orbit[b].norm();
          CHECK(std::abs(orbit[a].dot(orbit[b])) <= 1e-10 * scale);
        }
      // d dbar ln |f|^2 = |P+ f|^2 / |f|^2
      const double lhs = eval_real(ddlog, x);
      CHECK(std::abs(lhs - orbit[1].squaredNorm() / orbit[0].squaredNorm()) <= 1e-10 * lhs);
      // first step is the holomorphic projection f' - (f^dagger f' / |f|^2) f
      const Eigen::VectorXcd f0 = f.evaluate(x).col(0);
      const Eigen::VectorXcd f1 = f.derivative().evaluate(x).col(0);
      const Eigen::VectorXcd p1 = f1 - (f0.dot(f1) / f0.squaredNorm()) * f0;
      CHECK((p1 - orbit[1]).norm() <= 1e-12 * p1.norm());
    }
  }
  CHECK_THROWS_AS(pplus_orbit(veronese_cp(3), 3, cplx(0.2, 0.1)), Error);
}

TEST_CASE("P+ orbit of a generic curve") {
  std::mt19937_64 rng(47);
  const GrassmannFrame f = fixtures::random_frame(rng, 5, 1, 4);
  const cplx x(0.3, -0.2);
  const auto orbit = pplus_orbit(f, 3, x);
  for (std::size_t a = 0; a < orbit.size(); ++a)
    for (std::size_t b = a + 1; b < orbit.size(); ++b)
      CHECK(std::abs(orbit[a].dot(orbit[b])) <= 1e-9 * orbit[a].norm() * orbit[b].norm());
}
