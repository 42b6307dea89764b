#pragma once

// Constant-curvature search in G(2,n) over the monomial ansatz
//
//   K_i1 = alpha_i x^r_i,   K_i2 = beta_i x^s_i,   s_i = r_i + s_1 - 1,
//
// whose Pluecker coordinates are single monomials
//
//   p_12 = 1,  p_1i = beta x^s,  p_2i = -alpha x^r,
//   p_ij = (alpha_i beta_j - alpha_j beta_i) x^(r_i + r_j + s_1 - 1).
//
// Matching sum |p|^2 to (1+|x|^2)^R groups the monomials by power and gives
// one quadratic equation per power. Residual floors reported here are
// evidence of infeasibility, never a proof.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grasscurv/grassmann.hpp"

namespace grasscurv {

enum class SlotKind { RealNonneg, Complex, PinnedZero };

/// Exponents and zero pattern of one ansatz branch. Index i is 0-based.
struct ExponentAssignment {
  int n = 4;
  std::vector<int> r;           // r_1..r_{n-2}
  int s1 = 1;
  std::vector<bool> alpha_zero; // pinned alpha_i = 0
  std::vector<bool> beta_zero;  // pinned beta_i = 0

  std::string label() const;
  friend bool operator==(const ExponentAssignment&, const ExponentAssignment&) = default;
};

/// One Pluecker coordinate of the ansatz as a monomial.
struct PlueckerMonomial {
  int i = 0;  // 0-based row indices, i < j
  int j = 1;
  int power = 0;
  bool structural_zero = false;
};

class MonomialAnsatz {
 public:
  explicit MonomialAnsatz(ExponentAssignment a);

  int n() const noexcept { return a_.n; }
  const ExponentAssignment& exponents() const noexcept { return a_; }
  int r(int i) const { return a_.r.at(static_cast<std::size_t>(i)); }
  int s(int i) const { return r(i) + a_.s1 - 1; }
  SlotKind alpha_kind(int i) const;
  SlotKind beta_kind(int i) const;

  /// All C(n,2) coordinates in lexicographic order.
  std::vector<PlueckerMonomial> monomials() const;
  /// Highest power among coordinates that are not structurally zero.
  int max_power() const;

  /// K built from concrete coefficient values.
  MacfarlaneMap to_map(const std::vector<cplx>& alpha, const std::vector<cplx>& beta) const;

 private:
  ExponentAssignment a_;
};

/// Throws BadExponents unless r_1 = 1 <= r_2 <= ... and s_1 >= 1.
MonomialAnsatz build_ansatz(int n, std::vector<int> r, int s1, std::vector<bool> alpha_zero = {},
                            std::vector<bool> beta_zero = {}, bool relax_r1 = false);

struct EnumerateOptions {
  /// Allow r_1 > 1 (off by default).
  bool relax_r1 = false;
};

/// All branches whose structural maximum power is target_r and whose
/// nonzero coordinates cover every power 0..target_r. Rows pinned entirely
/// to zero carry the smallest admissible exponent; for n = 4 only one
/// representative of each transposition pair is kept.
std::vector<ExponentAssignment> enumerate_exponents(int n, int target_r, EnumerateOptions opts = {});

struct Unknown {
  bool is_alpha = true;
  int index = 0;
  bool imag = false;
  std::string name;
};

struct Equation {
  int power = 0;
  double rhs = 0.0;
  std::vector<int> terms;  // indices into the ansatz monomial list
};

class ConstraintSystem {
 public:
  ConstraintSystem(MonomialAnsatz ansatz, int target_r);

  const MonomialAnsatz& ansatz() const noexcept { return ansatz_; }
  int target_r() const noexcept { return target_r_; }
  const std::vector<Unknown>& unknowns() const noexcept { return unknowns_; }
  const std::vector<Equation>& equations() const noexcept { return equations_; }
  int dim() const noexcept { return static_cast<int>(unknowns_.size()); }
  double max_rhs() const noexcept;

  /// Left-hand side minus right-hand side, one entry per equation.
  Eigen::VectorXd residuals(const Eigen::VectorXd& point) const;
  /// Left-hand sides alone.
  Eigen::VectorXd lhs(const Eigen::VectorXd& point) const;
  /// Sum of squared equation violations.
  double residual(const Eigen::VectorXd& point) const;

  void coefficients(const Eigen::VectorXd& point, std::vector<cplx>& alpha, std::vector<cplx>& beta) const;
  /// Point from coefficient values; entries for pinned slots are ignored.
  Eigen::VectorXd point_from(const std::vector<cplx>& alpha, const std::vector<cplx>& beta) const;
  MacfarlaneMap to_map(const Eigen::VectorXd& point) const;

 private:
  MonomialAnsatz ansatz_;
  int target_r_;
  std::vector<PlueckerMonomial> monomials_;
  std::vector<Unknown> unknowns_;
  std::vector<Equation> equations_;
};

/// Throws PowerMismatch unless the ansatz's structural maximum power is target_r.
ConstraintSystem constraints_from_ansatz(const MonomialAnsatz& ansatz, int target_r);

enum class SolveStatus { Solved, ResidualFloor, Degenerate };
const char* to_string(SolveStatus s) noexcept;

inline constexpr double kCertifyTol = 1e-10;

struct SolveOutcome {
  SolveStatus status = SolveStatus::Degenerate;
  Eigen::VectorXd best_point;
  double residual = 0.0;
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

struct LevenbergMarquardtOptions {
  int max_iterations = 300;
  double fd_step = 1e-7;
  double stop_residual = 1e-26;
  // a Newton polish runs when the damped Gauss-Newton phase ends below this
  double polish_below = 1e-3;
};

/// Damped least squares from one start; the residual never increases.
/// Returns the final point; `trace` receives the residual after each
/// accepted step when given.
Eigen::VectorXd levenberg_marquardt(const ConstraintSystem& sys, Eigen::VectorXd start,
                                    const LevenbergMarquardtOptions& opts = {},
                                    std::vector<double>* trace = nullptr);

/// Restarts from uniform points in [0, sqrt(max rhs)]^dim; stops at the first
/// start that certifies (residual <= kCertifyTol). Deterministic in seed.
SolveOutcome solve_multistart(const ConstraintSystem& sys, int restarts, std::uint64_t seed);

struct BranchTrace {
  ExponentAssignment branch;
  SolveStatus status = SolveStatus::Degenerate;
  double floor = 0.0;
  int restarts = 0;
};

struct ProbeBudget {
  int restarts = 100;
  std::uint64_t seed = 42;
};

struct ProbeResult {
  double floor = 0.0;
  std::vector<BranchTrace> trace;
  /// Always "no solution found above floor"-style wording; never a proof.
  std::string verdict;
};

/// Minimizes every enumerated branch for (n, target_r) with the full restart
/// budget and reports the global floor.
ProbeResult infeasibility_probe(int n, int target_r, const ProbeBudget& budget);
ProbeResult infeasibility_probe(const ConstraintSystem& sys, const ProbeBudget& budget);

struct ClassifyOptions {
  int restarts = 100;
  std::uint64_t seed = 42;
};

struct ClassifyRow {
  int r = 0;
  double kappa = 0.0;
  SolveStatus status = SolveStatus::Degenerate;
  /// "search", "veronese", "embedded" or "none".
  std::string source;
  /// Certification residual of the witness, or the best floor when unsolved.
  double residual = 0.0;
  std::optional<MacfarlaneMap> witness;
  std::optional<ExponentAssignment> witness_branch;
  /// Solver point of a search witness, by unknown name.
  std::vector<std::pair<std::string, double>> point;
  std::vector<BranchTrace> branches;
};

/// Sum of squared deviations of det(I + K^dagger K) from (1+|x|^2)^r.
double certification_residual(const MacfarlaneMap& map, int r);

/// Witness known without search: Veronese at r = 2(n-2), or an embedding of a
/// G(2,n-1) witness (down to G(2,3), the dual of CP^2 curves).
std::optional<std::pair<MacfarlaneMap, std::string>> known_witness(int n, int r);

/// Ansatz search alone for one r: branches in enumeration order until one
/// certifies and re-verifies as constant curvature 4/r.
ClassifyRow solve_rank(int n, int r, const ClassifyOptions& opts = {});

/// solve_rank for each r, falling back to known_witness when the search
/// finds nothing.
std::vector<ClassifyRow> classify(int n, int r_min, int r_max, const ClassifyOptions& opts = {});

}  // namespace grasscurv
