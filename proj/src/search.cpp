#include "grasscurv/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "grasscurv/curvature.hpp"
#include "grasscurv/veronese.hpp"

namespace grasscurv {

namespace {

std::vector<bool> sized_or_false(std::vector<bool> v, std::size_t n, const char* what) {
  if (v.empty()) return std::vector<bool>(n, false);
  if (v.size() != n) throw Error(ErrorCode::BadExponents, std::string(what) + " pattern has the wrong length");
  return v;
}

bool pair_structural_zero(const ExponentAssignment& a, int i, int j) {
  const auto i_ = static_cast<std::size_t>(i);
  const auto j_ = static_cast<std::size_t>(j);
  return (a.alpha_zero[i_] || a.beta_zero[j_]) && (a.alpha_zero[j_] || a.beta_zero[i_]);
}

// Fills `powers` (one per lexicographic coordinate) and flags; returns false
// on the first violation of the enumeration rules.
bool admissible(const ExponentAssignment& a, int target_r, std::vector<char>& covered) {
  const int k = a.n - 2;
  covered.assign(static_cast<std::size_t>(target_r) + 1, 0);
  int max_power = 0;
  auto mark = [&](int p) {
    max_power = std::max(max_power, p);
    if (p <= target_r) covered[static_cast<std::size_t>(p)] = 1;
  };
  mark(0);
  for (int i = 0; i < k; ++i) {
    const auto i_ = static_cast<std::size_t>(i);
    if (!a.beta_zero[i_]) mark(a.r[i_] + a.s1 - 1);
    if (!a.alpha_zero[i_]) mark(a.r[i_]);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!pair_structural_zero(a, i, j)) mark(a.r[static_cast<std::size_t>(i)] + a.r[static_cast<std::size_t>(j)] + a.s1 - 1);
  if (max_power != target_r) return false;
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

// G(2,4): K -> K^T maps (r2, s1, a1 b1 a2 b2) to (s1, r2, a1 a2 b1 b2).
ExponentAssignment transposed_g24(const ExponentAssignment& a) {
  ExponentAssignment t = a;
  t.r = {1, a.s1};
  t.s1 = a.r[1];
  t.alpha_zero = {a.alpha_zero[0], a.beta_zero[0]};
  t.beta_zero = {a.alpha_zero[1], a.beta_zero[1]};
  return t;
}

auto branch_key(const ExponentAssignment& a) { return std::tie(a.r, a.s1, a.alpha_zero, a.beta_zero); }

cplx monomial_value(const PlueckerMonomial& mono, const std::vector<cplx>& alpha, const std::vector<cplx>& beta) {
  if (mono.structural_zero) return {};
  if (mono.i == 0 && mono.j == 1) return 1.0;
  if (mono.i == 0) return beta[static_cast<std::size_t>(mono.j - 2)];
  if (mono.i == 1) return -alpha[static_cast<std::size_t>(mono.j - 2)];
  const auto i = static_cast<std::size_t>(mono.i - 2);
  const auto j = static_cast<std::size_t>(mono.j - 2);
  return alpha[i] * beta[j] - alpha[j] * beta[i];
}

}  // namespace

std::string ExponentAssignment::label() const {
  std::ostringstream os;
  os << "r=(";
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ") s1=" << s1;
  std::string pinned;
  for (std::size_t i = 0; i < alpha_zero.size(); ++i)
    if (alpha_zero[i]) pinned += " alpha" + std::to_string(i + 1);
  for (std::size_t i = 0; i < beta_zero.size(); ++i)
    if (beta_zero[i]) pinned += " beta" + std::to_string(i + 1);
  if (!pinned.empty()) os << " zero:" << pinned;
  return os.str();
}

// ---------------------------------------------------------------------------
// MonomialAnsatz

MonomialAnsatz::MonomialAnsatz(ExponentAssignment a) : a_(std::move(a)) {
  if (a_.n < 4) throw Error(ErrorCode::BadExponents, "the G(2,n) ansatz needs n >= 4");
  const auto k = static_cast<std::size_t>(a_.n - 2);
  if (a_.r.size() != k) throw Error(ErrorCode::BadExponents, "need n-2 exponents r_i");
  a_.alpha_zero = sized_or_false(std::move(a_.alpha_zero), k, "alpha");
  a_.beta_zero = sized_or_false(std::move(a_.beta_zero), k, "beta");
  if (a_.s1 < 1) throw Error(ErrorCode::BadExponents, "s1 must be >= 1");
  for (std::size_t i = 0; i < k; ++i) {
    if (a_.r[i] < 1) throw Error(ErrorCode::BadExponents, "exponents r_i must be >= 1");
    if (i > 0 && a_.r[i] < a_.r[i - 1]) throw Error(ErrorCode::BadExponents, "exponents r_i must be nondecreasing");
  }
  if (2 * a_.r.back() + a_.s1 > kDegreeCap) throw Error(ErrorCode::BadExponents, "exponents exceed the degree cap");
}

SlotKind MonomialAnsatz::alpha_kind(int i) const {
  return a_.alpha_zero.at(static_cast<std::size_t>(i)) ? SlotKind::PinnedZero : SlotKind::RealNonneg;
}

SlotKind MonomialAnsatz::beta_kind(int i) const {
  if (a_.beta_zero.at(static_cast<std::size_t>(i))) return SlotKind::PinnedZero;
  return i == 0 ? SlotKind::RealNonneg : SlotKind::Complex;
}

std::vector<PlueckerMonomial> MonomialAnsatz::monomials() const {
  std::vector<PlueckerMonomial> out;
  for (int i = 0; i < a_.n; ++i)
    for (int j = i + 1; j < a_.n; ++j) {
      PlueckerMonomial m{i, j, 0, false};
      if (i == 0 && j == 1) {
        m.power = 0;
      } else if (i == 0) {
        m.power = s(j - 2);
        m.structural_zero = a_.beta_zero[static_cast<std::size_t>(j - 2)];
      } else if (i == 1) {
        m.power = r(j - 2);
        m.structural_zero = a_.alpha_zero[static_cast<std::size_t>(j - 2)];
      } else {
        m.power = r(i - 2) + r(j - 2) + a_.s1 - 1;
        m.structural_zero = pair_structural_zero(a_, i - 2, j - 2);
      }
      out.push_back(m);
    }
  return out;
}

int MonomialAnsatz::max_power() const {
  int p = 0;
  for (const auto& m : monomials())
    if (!m.structural_zero) p = std::max(p, m.power);
  return p;
}

MacfarlaneMap MonomialAnsatz::to_map(const std::vector<cplx>& alpha, const std::vector<cplx>& beta) const {
  const int k = a_.n - 2;
  std::vector<HoloPoly> entries;
  entries.reserve(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    const auto i_ = static_cast<std::size_t>(i);
    entries.push_back(a_.alpha_zero[i_] ? HoloPoly{} : HoloPoly::monomial(alpha[i_], r(i)));
    entries.push_back(a_.beta_zero[i_] ? HoloPoly{} : HoloPoly::monomial(beta[i_], s(i)));
  }
  return MacfarlaneMap(a_.n, 2, std::move(entries));
}

MonomialAnsatz build_ansatz(int n, std::vector<int> r, int s1, std::vector<bool> alpha_zero,
                            std::vector<bool> beta_zero, bool relax_r1) {
  if (!relax_r1 && (r.empty() || r.front() != 1)) throw Error(ErrorCode::BadExponents, "r_1 must be 1");
  return MonomialAnsatz(ExponentAssignment{n, std::move(r), s1, std::move(alpha_zero), std::move(beta_zero)});
}

std::vector<ExponentAssignment> enumerate_exponents(int n, int target_r, EnumerateOptions opts) {
  std::vector<ExponentAssignment> out;
  if (n < 4 || target_r < 1) return out;
  const int k = n - 2;
  const int cap = std::min(target_r, kDegreeCap / 3);

  std::vector<int> r(static_cast<std::size_t>(k));
  std::vector<char> covered;
  ExponentAssignment a;
  a.n = n;
  a.alpha_zero.assign(static_cast<std::size_t>(k), false);
  a.beta_zero.assign(static_cast<std::size_t>(k), false);

  auto visit_exponents = [&]() {
    for (int s1 = 1; s1 <= cap; ++s1) {
      a.r = r;
      a.s1 = s1;
      // the largest power any pattern can reach
      int top = std::max(r.back(), r.back() + s1 - 1);
      if (k >= 2) top = std::max(top, r[static_cast<std::size_t>(k - 2)] + r.back() + s1 - 1);
      if (top < target_r) continue;
      for (unsigned mask = 0; mask < (1u << (2 * k)); ++mask) {
        bool canonical = true;
        for (int i = 0; i < k; ++i) {
          const auto i_ = static_cast<std::size_t>(i);
          a.alpha_zero[i_] = (mask >> i) & 1u;
          a.beta_zero[i_] = (mask >> (k + i)) & 1u;
          if (a.alpha_zero[i_] && a.beta_zero[i_]) {
            const int least = (i == 0) ? 1 : r[i_ - 1];
            if (r[i_] != least) canonical = false;
          }
        }
        if (!canonical || !admissible(a, target_r, covered)) continue;
        if (n == 4 && branch_key(transposed_g24(a)) < branch_key(a)) continue;
        out.push_back(a);
      }
    }
  };

  // nondecreasing r_1..r_k within [1, cap]
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == k) {
      visit_exponents();
      return;
    }
    int lo = (i == 0) ? 1 : r[static_cast<std::size_t>(i - 1)];
    int hi = (i == 0 && !opts.relax_r1) ? 1 : cap;
    for (int v = lo; v <= hi; ++v) {
      r[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

// ---------------------------------------------------------------------------
// ConstraintSystem

ConstraintSystem::ConstraintSystem(MonomialAnsatz ansatz, int target_r)
    : ansatz_(std::move(ansatz)), target_r_(target_r), monomials_(ansatz_.monomials()) {
  if (ansatz_.max_power() != target_r) {
    throw Error(ErrorCode::PowerMismatch, "ansatz reaches power " + std::to_string(ansatz_.max_power()) +
                                              ", target is " + std::to_string(target_r));
  }
  const int k = ansatz_.n() - 2;
  for (int i = 0; i < k; ++i)
    if (ansatz_.alpha_kind(i) != SlotKind::PinnedZero) unknowns_.push_back({true, i, false, "alpha" + std::to_string(i + 1)});
  for (int i = 0; i < k; ++i) {
    const SlotKind kind = ansatz_.beta_kind(i);
    const std::string name = "beta" + std::to_string(i + 1);
    if (kind == SlotKind::RealNonneg) unknowns_.push_back({false, i, false, name});
    if (kind == SlotKind::Complex) {
      unknowns_.push_back({false, i, false, name + "_re"});
      unknowns_.push_back({false, i, true, name + "_im"});
    }
  }
  for (int p = 0; p <= target_r; ++p) {
    Equation eq{p, binomial(target_r, p), {}};
    for (std::size_t t = 0; t < monomials_.size(); ++t)
      if (!monomials_[t].structural_zero && monomials_[t].power == p) eq.terms.push_back(static_cast<int>(t));
    equations_.push_back(std::move(eq));
  }
}

double ConstraintSystem::max_rhs() const noexcept {
  double m = 0.0;
  for (const auto& e : equations_) m = std::max(m, e.rhs);
  return m;
}

void ConstraintSystem::coefficients(const Eigen::VectorXd& point, std::vector<cplx>& alpha,
                                    std::vector<cplx>& beta) const {
  const auto k = static_cast<std::size_t>(ansatz_.n() - 2);
  alpha.assign(k, cplx{});
  beta.assign(k, cplx{});
  for (std::size_t u = 0; u < unknowns_.size(); ++u) {
    const Unknown& un = unknowns_[u];
    auto& slot = un.is_alpha ? alpha[static_cast<std::size_t>(un.index)] : beta[static_cast<std::size_t>(un.index)];
    if (un.imag) slot.imag(point(static_cast<Eigen::Index>(u)));
    else slot.real(point(static_cast<Eigen::Index>(u)));
  }
}

Eigen::VectorXd ConstraintSystem::point_from(const std::vector<cplx>& alpha, const std::vector<cplx>& beta) const {
  Eigen::VectorXd p(dim());
  for (std::size_t u = 0; u < unknowns_.size(); ++u) {
    const Unknown& un = unknowns_[u];
    const cplx v = un.is_alpha ? alpha.at(static_cast<std::size_t>(un.index)) : beta.at(static_cast<std::size_t>(un.index));
    p(static_cast<Eigen::Index>(u)) = un.imag ? v.imag() : v.real();
  }
  return p;
}

Eigen::VectorXd ConstraintSystem::lhs(const Eigen::VectorXd& point) const {
  std::vector<cplx> alpha, beta;
  coefficients(point, alpha, beta);
  Eigen::VectorXd out(static_cast<Eigen::Index>(equations_.size()));
  for (std::size_t e = 0; e < equations_.size(); ++e) {
    double acc = 0.0;
    for (const int t : equations_[e].terms) acc += std::norm(monomial_value(monomials_[static_cast<std::size_t>(t)], alpha, beta));
    out(static_cast<Eigen::Index>(e)) = acc;
  }
  return out;
}

Eigen::VectorXd ConstraintSystem::residuals(const Eigen::VectorXd& point) const {
  Eigen::VectorXd out = lhs(point);
  for (std::size_t e = 0; e < equations_.size(); ++e) out(static_cast<Eigen::Index>(e)) -= equations_[e].rhs;
  return out;
}

double ConstraintSystem::residual(const Eigen::VectorXd& point) const { return residuals(point).squaredNorm(); }

MacfarlaneMap ConstraintSystem::to_map(const Eigen::VectorXd& point) const {
  std::vector<cplx> alpha, beta;
  coefficients(point, alpha, beta);
  return ansatz_.to_map(alpha, beta);
}

ConstraintSystem constraints_from_ansatz(const MonomialAnsatz& ansatz, int target_r) {
  return ConstraintSystem(ansatz, target_r);
}

// ---------------------------------------------------------------------------
// Solver

const char* to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::ResidualFloor: return "residual_floor";
    case SolveStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

namespace {

Eigen::MatrixXd central_jacobian(const ConstraintSystem& sys, const Eigen::VectorXd& x, double fd_step) {
  const Eigen::Index dim = x.size();
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(sys.equations().size()), dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    // the residuals are quartic, so this is close to exact
    const double step = fd_step * std::max(1.0, std::abs(x(j)));
    Eigen::VectorXd xp = x, xm = x;
    xp(j) += step;
    xm(j) -= step;
    jac.col(j) = (sys.residuals(xp) - sys.residuals(xm)) / (2 * step);
  }
  return jac;
}

// Damped Newton on |e|^2 with the second-order term sum_k e_k H_k kept.
// Gauss-Newton crawls near roots where the constraint surfaces are tangent
// (the Jacobian drops rank there); the full Hessian does not.
void newton_polish(const ConstraintSystem& sys, Eigen::VectorXd& x, Eigen::VectorXd& e, double& f,
                   const LevenbergMarquardtOptions& opts, std::vector<double>* trace) {
  const Eigen::Index dim = x.size();
  const double h = 1e-4;
  double lambda = 1e-6;
  for (int it = 0; it < opts.max_iterations && f > opts.stop_residual; ++it) {
    const Eigen::MatrixXd jac = central_jacobian(sys, x, opts.fd_step);
    Eigen::MatrixXd hess = jac.transpose() * jac;
    // second differences of each residual, exact up to O(h^2) for quartics
    for (Eigen::Index a = 0; a < dim; ++a)
      for (Eigen::Index b = a; b < dim; ++b) {
        auto at = [&](double sa, double sb) {
          Eigen::VectorXd y = x;
          y(a) += sa;
          y(b) += sb;
          return sys.residuals(y);
        };
        const Eigen::VectorXd d2 = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
        hess(a, b) += e.dot(d2);
        hess(b, a) = hess(a, b);
      }
    const Eigen::VectorXd grad = jac.transpose() * e;

    bool accepted = false;
    while (lambda < 1e16) {
      Eigen::MatrixXd damped = hess;
      damped.diagonal().array() += lambda * (1.0 + hess.diagonal().array().abs());
      const Eigen::VectorXd delta = damped.ldlt().solve(-grad);
      const Eigen::VectorXd en = sys.residuals(x + delta);
      const double fn = en.squaredNorm();
      if (std::isfinite(fn) && fn < f) {
        x += delta;
        e = en;
        f = fn;
        lambda = std::max(lambda * 0.1, 1e-15);
        accepted = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!accepted) return;
    if (trace) trace->push_back(f);
  }
}

}  // namespace

Eigen::VectorXd levenberg_marquardt(const ConstraintSystem& sys, Eigen::VectorXd x,
                                    const LevenbergMarquardtOptions& opts, std::vector<double>* trace) {
  const Eigen::Index dim = x.size();
  if (dim == 0) return x;
  Eigen::VectorXd e = sys.residuals(x);
  double f = e.squaredNorm();
  double lambda = 1e-3;

  for (int it = 0; it < opts.max_iterations && f > opts.stop_residual; ++it) {
    const Eigen::MatrixXd jac = central_jacobian(sys, x, opts.fd_step);
    const Eigen::MatrixXd normal = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * e;

    bool accepted = false;
    Eigen::VectorXd delta;
    while (lambda < 1e16) {
      Eigen::MatrixXd damped = normal;
      damped.diagonal().array() += lambda * (normal.diagonal().array() + 1e-9);
      delta = damped.ldlt().solve(-grad);
      const Eigen::VectorXd xn = x + delta;
      const Eigen::VectorXd en = sys.residuals(xn);
      const double fn = en.squaredNorm();
      if (std::isfinite(fn) && fn < f) {
        x = xn;
        e = en;
        f = fn;
        lambda = std::max(lambda * 0.25, 1e-15);
        accepted = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!accepted) break;
    if (trace) trace->push_back(f);
    if (delta.norm() <= 1e-15 * (1.0 + x.norm())) break;
  }
  if (f > opts.stop_residual && f < opts.polish_below) newton_polish(sys, x, e, f, opts, trace);
  return x;
}

SolveOutcome solve_multistart(const ConstraintSystem& sys, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw Error(ErrorCode::InvalidInput, "need at least one restart");
  SolveOutcome out;
  out.seed = seed;
  out.residual = std::numeric_limits<double>::infinity();

  if (sys.dim() == 0) {
    out.best_point = Eigen::VectorXd(0);
    out.residual = sys.residual(out.best_point);
    out.restarts_used = 1;
    out.status = out.residual <= kCertifyTol ? SolveStatus::Solved : SolveStatus::Degenerate;
    return out;
  }

  const double upper = std::sqrt(sys.max_rhs());
  for (int t = 0; t < restarts; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, upper);
    Eigen::VectorXd start(sys.dim());
    for (Eigen::Index j = 0; j < start.size(); ++j) start(j) = unit(rng);

    const Eigen::VectorXd x = levenberg_marquardt(sys, start);
    const double f = sys.residual(x);
    out.restarts_used = t + 1;
    // strict < keeps the earliest start on ties
    if (std::isfinite(f) && f < out.residual) {
      out.residual = f;
      out.best_point = x;
    }
    if (out.residual <= kCertifyTol) break;
  }
  if (out.best_point.size() == 0) {
    out.status = SolveStatus::Degenerate;
  } else {
    out.status = out.residual <= kCertifyTol ? SolveStatus::Solved : SolveStatus::ResidualFloor;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Probes and classification

namespace {

const char* kNonProof = "no solution found above floor (numerical evidence, not a proof)";

}  // namespace

ProbeResult infeasibility_probe(const ConstraintSystem& sys, const ProbeBudget& budget) {
  const SolveOutcome o = solve_multistart(sys, budget.restarts, budget.seed);
  ProbeResult res;
  res.floor = o.residual;
  res.trace.push_back({sys.ansatz().exponents(), o.status, o.residual, o.restarts_used});
  res.verdict = o.status == SolveStatus::Solved ? "solution found" : kNonProof;
  return res;
}

ProbeResult infeasibility_probe(int n, int target_r, const ProbeBudget& budget) {
  ProbeResult res;
  res.floor = std::numeric_limits<double>::infinity();
  bool any_solved = false;
  for (const auto& branch : enumerate_exponents(n, target_r)) {
    const ConstraintSystem sys(MonomialAnsatz(branch), target_r);
    // full budget per branch: no early exit across branches
    const SolveOutcome o = solve_multistart(sys, budget.restarts, budget.seed);
    res.trace.push_back({branch, o.status, o.residual, o.restarts_used});
    res.floor = std::min(res.floor, o.residual);
    any_solved = any_solved || o.status == SolveStatus::Solved;
  }
  if (res.trace.empty()) res.verdict = "no admissible exponent branch";
  else res.verdict = any_solved ? "solution found" : kNonProof;
  return res;
}

double certification_residual(const MacfarlaneMap& map, int r) {
  const BiPoly det = macfarlane_gram_det(map);
  double acc = 0.0;
  for (const auto& [key, c] : det.terms()) {
    const double want = key.first == key.second ? binomial(r, key.first) : 0.0;
    acc += std::norm(c - want);
  }
  for (int k = 0; k <= r; ++k)
    if (det.coeff(k, k) == cplx{}) acc += binomial(r, k) * binomial(r, k);
  return acc;
}

std::optional<std::pair<MacfarlaneMap, std::string>> known_witness(int n, int r) {
  if (n < 3 || r < 1) return std::nullopt;
  if (r == 2 * (n - 2)) return std::pair{veronese_macfarlane({n, 2}), std::string("veronese")};
  if (n == 3) {
    if (r != 1) return std::nullopt;
    // G(2,3) is dual to CP^2; the line (1, x, 0) gives r = 1.
    return std::pair{duality_transpose(embed_pad(veronese_macfarlane({2, 1}))), std::string("dual")};
  }
  if (r <= 2 * (n - 3)) {
    auto lower = known_witness(n - 1, r);
    if (lower) return std::pair{embed_pad(lower->first), std::string("embedded")};
  }
  return std::nullopt;
}

ClassifyRow solve_rank(int n, int r, const ClassifyOptions& opts) {
  ClassifyRow row;
  row.r = r;
  row.kappa = 4.0 / r;
  row.status = SolveStatus::ResidualFloor;
  row.source = "none";
  row.residual = std::numeric_limits<double>::infinity();

  for (const auto& branch : enumerate_exponents(n, r)) {
    const ConstraintSystem sys(MonomialAnsatz(branch), r);
    const SolveOutcome o = solve_multistart(sys, opts.restarts, opts.seed);
    row.branches.push_back({branch, o.status, o.residual, o.restarts_used});
    if (o.status != SolveStatus::Solved) {
      row.residual = std::min(row.residual, o.residual);
      continue;
    }
    MacfarlaneMap map = sys.to_map(o.best_point);
    const CurvatureReport rep = constant_curvature_check(macfarlane_gram_det(map), 1e-8, opts.seed);
    if (rep.constant && rep.r == r) {
      row.status = SolveStatus::Solved;
      row.source = "search";
      row.residual = certification_residual(map, r);
      row.witness = std::move(map);
      row.witness_branch = branch;
      for (int u = 0; u < sys.dim(); ++u) row.point.emplace_back(sys.unknowns()[static_cast<std::size_t>(u)].name, o.best_point(u));
      break;
    }
  }
  return row;
}

std::vector<ClassifyRow> classify(int n, int r_min, int r_max, const ClassifyOptions& opts) {
  std::vector<ClassifyRow> rows;
  for (int r = std::max(1, r_min); r <= r_max; ++r) {
    ClassifyRow row = solve_rank(n, r, opts);
    if (row.status != SolveStatus::Solved) {
      if (auto known = known_witness(n, r)) {
        row.status = SolveStatus::Solved;
        row.source = known->second;
        row.residual = certification_residual(known->first, r);
        row.witness = std::move(known->first);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace grasscurv
