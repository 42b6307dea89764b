#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "grasscurv/curvature.hpp"
#include "grasscurv/search.hpp"

using namespace grasscurv;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

bool has_branch(const std::vector<ExponentAssignment>& all, std::vector<int> r, int s1) {
  return std::any_of(all.begin(), all.end(), [&](const ExponentAssignment& a) {
    return a.r == r && a.s1 == s1 && std::none_of(a.alpha_zero.begin(), a.alpha_zero.end(), [](bool b) { return b; }) &&
           std::none_of(a.beta_zero.begin(), a.beta_zero.end(), [](bool b) { return b; });
  });
}

}  // namespace

TEST_CASE("ansatz monomials for G(2,4)") {
  const MonomialAnsatz a = build_ansatz(4, {1, 3}, 2);
  const auto mono = a.monomials();
  REQUIRE(mono.size() == 6);
  // 12, 13, 14, 23, 24, 34
  CHECK(mono[0].power == 0);
  CHECK(mono[1].power == 2);  // beta1 x^s1
  CHECK(mono[2].power == 4);  // beta2 x^(r2+s1-1)
  CHECK(mono[3].power == 1);  // alpha1 x
  CHECK(mono[4].power == 3);  // alpha2 x^r2
  CHECK(mono[5].power == 5);  // gamma12
  CHECK(a.max_power() == 5);
  CHECK(a.alpha_kind(0) == SlotKind::RealNonneg);
  CHECK(a.beta_kind(0) == SlotKind::RealNonneg);
  CHECK(a.beta_kind(1) == SlotKind::Complex);
}

TEST_CASE("G(2,4), r = 5 constraint system") {
  const ConstraintSystem sys = constraints_from_ansatz(build_ansatz(4, {1, 3}, 2), 5);
  CHECK(sys.dim() == 5);
  REQUIRE(sys.equations().size() == 6);
  for (const auto& eq : sys.equations()) {
    CHECK(eq.terms.size() == 1);
    CHECK(eq.rhs == binomial(5, eq.power));
  }
  // alpha1^2 = beta2^2 = 5, alpha2^2 = beta1^2 = 10 leave gamma12^2 != 1
  const double a1 = std::sqrt(5.0), b2 = std::sqrt(5.0), a2 = std::sqrt(10.0), b1 = std::sqrt(10.0);
  const Eigen::VectorXd p = sys.point_from({a1, a2}, {b1, b2});
  const Eigen::VectorXd res = sys.residuals(p);
  for (int k = 0; k < 5; ++k) CHECK(std::abs(res(k)) < 1e-12);
  CHECK(std::abs(res(5)) > 1.0);

  const ProbeResult probe = infeasibility_probe(sys, {100, 42});
  CHECK(probe.floor > 1e-2);
  CHECK(probe.verdict.find("not a proof") != std::string::npos);
}

TEST_CASE("ansatz validation") {
  CHECK(code_of([] { build_ansatz(4, {2, 3}, 1); }) == ErrorCode::BadExponents);
  CHECK_NOTHROW(build_ansatz(4, {2, 3}, 1, {}, {}, true));
  CHECK(code_of([] { build_ansatz(4, {1, 3, 4}, 1); }) == ErrorCode::BadExponents);
  CHECK(code_of([] { build_ansatz(5, {1, 3, 2}, 1); }) == ErrorCode::BadExponents);
  CHECK(code_of([] { build_ansatz(4, {1, 2}, 0); }) == ErrorCode::BadExponents);
  CHECK(code_of([] { build_ansatz(3, {1}, 1); }) == ErrorCode::BadExponents);
  CHECK(code_of([] { constraints_from_ansatz(build_ansatz(4, {1, 2}, 2), 5); }) == ErrorCode::PowerMismatch);
}

TEST_CASE("structural zeros") {
  // alpha2 = beta2 = 0 empties row 2 and kills gamma12
  const MonomialAnsatz a = build_ansatz(4, {1, 1}, 1, {false, true}, {false, true});
  CHECK(a.monomials()[5].structural_zero);
  CHECK(a.max_power() == 1);
  // alpha2 = beta1 = 0 leaves gamma12 = alpha1 beta2
  const MonomialAnsatz b = build_ansatz(4, {1, 1}, 1, {false, true}, {true, false});
  CHECK_FALSE(b.monomials()[5].structural_zero);
  CHECK(b.max_power() == 2);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_exponents(4, 5).size() == 1);
  CHECK(enumerate_exponents(5, 9).empty());
  // r = C(n,2) - 1 would need all powers distinct, impossible for n = 6
  CHECK(enumerate_exponents(6, 14).empty());
  const auto r7 = enumerate_exponents(5, 7);
  CHECK(has_branch(r7, {1, 2, 4}, 2));
  CHECK(has_branch(r7, {1, 2, 3}, 3));
  CHECK(enumerate_exponents(5, 7) == r7);
  for (const auto& b : r7) {
    CHECK(b.r.front() == 1);
    CHECK(MonomialAnsatz(b).max_power() == 7);
  }
  const auto relaxed = enumerate_exponents(4, 4, {true});
  CHECK(relaxed.size() >= enumerate_exponents(4, 4).size());
}

TEST_CASE("n = 4 keeps one branch per transposition pair") {
  for (int r = 1; r <= 5; ++r) {
    const auto all = enumerate_exponents(4, r);
    std::set<std::pair<int, int>> seen;
    for (const auto& b : all)
      if (std::none_of(b.alpha_zero.begin(), b.alpha_zero.end(), [](bool z) { return z; }) &&
          std::none_of(b.beta_zero.begin(), b.beta_zero.end(), [](bool z) { return z; }))
        seen.insert({b.r[1], b.s1});
    for (const auto& [r2, s1] : seen)
      if (r2 != s1) CHECK_FALSE(seen.count({s1, r2}));
  }
}

TEST_CASE("Levenberg-Marquardt is monotone") {
  const ConstraintSystem sys = constraints_from_ansatz(build_ansatz(5, {1, 2, 2}, 2), 5);
  Eigen::VectorXd start = Eigen::VectorXd::Constant(sys.dim(), 0.7);
  std::vector<double> trace;
  const Eigen::VectorXd x = levenberg_marquardt(sys, start, {}, &trace);
  REQUIRE_FALSE(trace.empty());
  CHECK(trace.front() <= sys.residual(start));
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1]);
  CHECK(sys.residual(x) == trace.back());
}

TEST_CASE("multistart is deterministic in the seed") {
  const ConstraintSystem sys = constraints_from_ansatz(build_ansatz(4, {1, 2}, 2), 4);
  const SolveOutcome a = solve_multistart(sys, 20, 42);
  const SolveOutcome b = solve_multistart(sys, 20, 42);
  CHECK(a.status == SolveStatus::Solved);
  CHECK(a.residual <= kCertifyTol);
  CHECK(a.best_point == b.best_point);
  CHECK(a.restarts_used == b.restarts_used);
  const SolveOutcome c = solve_multistart(sys, 20, 7);
  CHECK(c.status == SolveStatus::Solved);
  CHECK_THROWS_AS(solve_multistart(sys, 0, 1), Error);
}

TEST_CASE("seven-digit G(2,6) point nearly satisfies the r = 7 system") {
  const MonomialAnsatz a = build_ansatz(6, {1, 2, 3, 3}, 2, {false, false, false, true}, {});
  const ConstraintSystem sys = constraints_from_ansatz(a, 7);
  const auto pt = fixtures::seven_digit_g26_point();
  const Eigen::VectorXd p = sys.point_from(pt.alpha, pt.beta);
  CHECK(sys.residual(p) < 1e-4);
  const BiPoly det = macfarlane_gram_det(sys.to_map(p));
  CHECK(binomial_match(det, 1e-3).has_value());
}

TEST_CASE("known witnesses certify") {
  for (int n = 3; n <= 6; ++n)
    for (int r = 1; r <= 2 * (n - 2); ++r) {
      const auto w = known_witness(n, r);
      if (!w) continue;
      CHECK(certification_residual(w->first, r) <= kCertifyTol);
      CHECK(w->first.n() == n);
    }
  REQUIRE(known_witness(4, 4).has_value());
  CHECK(known_witness(4, 4)->second == "veronese");
  CHECK_FALSE(known_witness(4, 5).has_value());
}

TEST_CASE("classification of G(2,4)") {
  const auto rows = classify(4, 1, 5, {100, 42});
  REQUIRE(rows.size() == 5);
  for (int r = 1; r <= 4; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r - 1)];
    CHECK(row.status == SolveStatus::Solved);
    CHECK(row.residual <= kCertifyTol);
    CHECK(row.kappa == doctest::Approx(4.0 / r));
    REQUIRE(row.witness.has_value());
    const auto rep = constant_curvature_check(macfarlane_gram_det(*row.witness), 1e-8);
    CHECK(rep.constant);
    CHECK(rep.r == r);
  }
  CHECK(rows[4].status == SolveStatus::ResidualFloor);
  CHECK(rows[4].residual > 1e-2);
  CHECK_FALSE(rows[4].branches.empty());
  for (const auto& t : rows[4].branches) CHECK(t.restarts == 100);
}

TEST_CASE("probe with no admissible branch") {
  const ProbeResult p = infeasibility_probe(5, 9, {10, 1});
  CHECK(p.trace.empty());
  CHECK(std::isinf(p.floor));
  CHECK(p.verdict == "no admissible exponent branch");
}

TEST_CASE("equation left-hand sides sum to det M on the unit circle") {
  std::mt19937_64 rng(59);
  for (const auto& branch : enumerate_exponents(5, 6)) {
    const ConstraintSystem sys(MonomialAnsatz(branch), 6);
    Eigen::VectorXd p(sys.dim());
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = std::normal_distribution<double>(0.0, 1.5)(rng);
    const double at_circle = eval_real(macfarlane_gram_det(sys.to_map(p)), std::polar(1.0, 0.7));
    CHECK(std::abs(sys.lhs(p).sum() - at_circle) <= 1e-10 * at_circle);
  }
  const ConstraintSystem sys = constraints_from_ansatz(build_ansatz(5, {1, 2, 3}, 2), 6);
  const SolveOutcome o = solve_multistart(sys, 100, 42);
  REQUIRE(o.status == SolveStatus::Solved);
  CHECK(sys.lhs(o.best_point).sum() == doctest::Approx(64.0).epsilon(1e-9));
  // solved points round-trip to c = 1 and the target r
  const auto m = binomial_match(macfarlane_gram_det(sys.to_map(o.best_point)), 1e-8);
  REQUIRE(m.has_value());
  CHECK(m->r == 6);
  CHECK(std::abs(m->c - 1.0) <= 1e-8);
}
