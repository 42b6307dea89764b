#pragma once

// Polynomial algebra in x and conj(x).
//
// HoloPoly holds a polynomial in x alone (a component of a holomorphic map).
// BiPoly holds a sparse polynomial sum c_jk x^j conj(x)^k; products
// p(x) conj(q(x)) and sums of such products (Gram determinants) are Hermitian,
// c_kj = conj(c_jk), and evaluate to real numbers. Derivatives of Hermitian
// polynomials are generally not Hermitian, so the type does not enforce it.

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grasscurv/error.hpp"

namespace grasscurv {

using cplx = std::complex<double>;

/// Maximum degree per variable of any stored polynomial.
inline constexpr int kDegreeCap = 64;

class HoloPoly {
 public:
  HoloPoly() = default;
  explicit HoloPoly(std::vector<cplx> coeffs);

  static HoloPoly constant(cplx c);
  static HoloPoly monomial(cplx c, int degree);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return c_; }
  cplx coeff(int j) const noexcept;
  double max_abs_coeff() const noexcept;

  cplx operator()(cplx x) const noexcept;
  HoloPoly derivative() const;

  HoloPoly& operator+=(const HoloPoly& o);
  HoloPoly& operator-=(const HoloPoly& o);
  HoloPoly& operator*=(cplx s);

  friend HoloPoly operator+(HoloPoly a, const HoloPoly& b) { return a += b; }
  friend HoloPoly operator-(HoloPoly a, const HoloPoly& b) { return a -= b; }
  friend HoloPoly operator*(HoloPoly a, cplx s) { return a *= s; }
  friend HoloPoly operator*(cplx s, HoloPoly a) { return a *= s; }
  friend HoloPoly operator-(HoloPoly a) { return a *= -1.0; }
  friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
  friend bool operator==(const HoloPoly&, const HoloPoly&) = default;

 private:
  void trim();
  std::vector<cplx> c_;
};

class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (power of x, power of conj(x))
  using Terms = std::map<Key, cplx>;

  BiPoly() = default;
  explicit BiPoly(Terms terms);

  static BiPoly constant(cplx c);
  /// (1 + |x|^2)^r expanded with binomial coefficients.
  static BiPoly binomial_power(int r);

  const Terms& terms() const noexcept { return t_; }
  cplx coeff(int j, int k) const noexcept;
  void add_term(int j, int k, cplx c);

  bool empty() const noexcept { return t_.empty(); }
  /// True when every coefficient magnitude is <= tol.
  bool is_zero(double tol = 0.0) const noexcept;
  /// coeff(k,j) == conj(coeff(j,k)) within rel_tol * max |coeff|.
  bool is_hermitian(double rel_tol = 1e-12) const noexcept;
  int degree_z() const noexcept;
  int degree_zbar() const noexcept;
  double max_abs_coeff() const noexcept;

  cplx operator()(cplx x) const noexcept;
  /// Sum of |c_jk| |x|^(j+k): the magnitude scale of an evaluation at x.
  double scale_at(cplx x) const noexcept;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(cplx s);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, cplx s) { return a *= s; }
  friend BiPoly operator*(cplx s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  Terms t_;
};

/// Rational function num/den of two bivariate polynomials.
struct BiRational {
  BiPoly num;
  BiPoly den;

  cplx operator()(cplx x) const;
};

/// p(x) * conj(q(x)), coefficient (j,k) = p_j conj(q_k).
BiPoly mul_conj(const HoloPoly& p, const HoloPoly& q);

/// Formal d/dx holding conj(x) fixed.
BiPoly partial_z(const BiPoly& h);
/// Formal d/dconj(x) holding x fixed.
BiPoly partial_zbar(const BiPoly& h);

/// d dbar ln h = (h d dbar h - dh dbar h) / h^2. Throws ZeroPolynomial for h == 0.
BiRational rational_log_laplacian(const BiPoly& h);

/// Real value of a Hermitian polynomial at x. Throws InvalidInput if the
/// imaginary part is not negligible.
double eval_real(const BiPoly& h, cplx x);
/// Real value of a rational function. Throws PoleAtPoint near zeros of den.
double eval_real(const BiRational& f, cplx x);

struct BinomialMatch {
  int r = 0;
  double c = 0.0;
};

/// Tests h == c (1+|x|^2)^r with r the top diagonal degree and c = coeff(0,0).
std::optional<BinomialMatch> binomial_match(const BiPoly& h, double tol);

/// Binomial coefficient as a double (exact for the sizes used here).
double binomial(int n, int k) noexcept;

}  // namespace grasscurv
