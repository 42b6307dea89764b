#include "grasscurv/polyhermite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace grasscurv {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::DegenerateAtPoint: return "DegenerateAtPoint";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadExponents: return "BadExponents";
    case ErrorCode::PowerMismatch: return "PowerMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void check_degree(int d) {
  if (d > kDegreeCap) {
    throw Error(ErrorCode::DegreeOverflow,
                "degree " + std::to_string(d) + " exceeds cap " + std::to_string(kDegreeCap));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// HoloPoly

HoloPoly::HoloPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  trim();
  check_degree(degree());
}

HoloPoly HoloPoly::constant(cplx c) { return HoloPoly(std::vector<cplx>{c}); }

HoloPoly HoloPoly::monomial(cplx c, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative monomial degree");
  check_degree(degree);
  std::vector<cplx> v(static_cast<std::size_t>(degree) + 1, cplx{});
  v.back() = c;
  return HoloPoly(std::move(v));
}

void HoloPoly::trim() {
  while (!c_.empty() && c_.back() == cplx{}) c_.pop_back();
}

cplx HoloPoly::coeff(int j) const noexcept {
  if (j < 0 || j >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(j)];
}

double HoloPoly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

cplx HoloPoly::operator()(cplx x) const noexcept {
  cplx acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

HoloPoly HoloPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = static_cast<double>(j) * c_[j];
  return HoloPoly(std::move(d));
}

HoloPoly& HoloPoly::operator+=(const HoloPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

HoloPoly& HoloPoly::operator-=(const HoloPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

HoloPoly& HoloPoly::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  check_degree(a.degree() + b.degree());
  std::vector<cplx> out(a.c_.size() + b.c_.size() - 1, cplx{});
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return HoloPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(Terms terms) {
  for (const auto& [key, c] : terms) add_term(key.first, key.second, c);
}

BiPoly BiPoly::constant(cplx c) {
  BiPoly p;
  p.add_term(0, 0, c);
  return p;
}

BiPoly BiPoly::binomial_power(int r) {
  if (r < 0) throw Error(ErrorCode::InvalidInput, "negative binomial power");
  check_degree(r);
  BiPoly p;
  for (int k = 0; k <= r; ++k) p.add_term(k, k, binomial(r, k));
  return p;
}

cplx BiPoly::coeff(int j, int k) const noexcept {
  auto it = t_.find({j, k});
  return it == t_.end() ? cplx{} : it->second;
}

void BiPoly::add_term(int j, int k, cplx c) {
  if (j < 0 || k < 0) throw Error(ErrorCode::InvalidInput, "negative exponent");
  check_degree(std::max(j, k));
  if (c == cplx{}) return;
  auto [it, inserted] = t_.try_emplace({j, k}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) t_.erase(it);
  }
}

bool BiPoly::is_zero(double tol) const noexcept {
  return std::all_of(t_.begin(), t_.end(), [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

bool BiPoly::is_hermitian(double rel_tol) const noexcept {
  const double tol = rel_tol * max_abs_coeff();
  for (const auto& [key, c] : t_) {
    if (std::abs(coeff(key.second, key.first) - std::conj(c)) > tol) return false;
  }
  return true;
}

int BiPoly::degree_z() const noexcept {
  int d = -1;
  for (const auto& kv : t_) d = std::max(d, kv.first.first);
  return d;
}

int BiPoly::degree_zbar() const noexcept {
  int d = -1;
  for (const auto& kv : t_) d = std::max(d, kv.first.second);
  return d;
}

double BiPoly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& kv : t_) m = std::max(m, std::abs(kv.second));
  return m;
}

cplx BiPoly::operator()(cplx x) const noexcept {
  if (t_.empty()) return {};
  const int dz = degree_z();
  const int dw = degree_zbar();
  std::vector<cplx> pz(static_cast<std::size_t>(dz) + 1), pw(static_cast<std::size_t>(dw) + 1);
  pz[0] = pw[0] = 1.0;
  for (int j = 1; j <= dz; ++j) pz[j] = pz[j - 1] * x;
  for (int k = 1; k <= dw; ++k) pw[k] = pw[k - 1] * std::conj(x);
  cplx acc{};
  for (const auto& [key, c] : t_) acc += c * pz[key.first] * pw[key.second];
  return acc;
}

double BiPoly::scale_at(cplx x) const noexcept {
  const double a = std::abs(x);
  double s = 0.0;
  for (const auto& [key, c] : t_) s += std::abs(c) * std::pow(a, key.first + key.second);
  return s;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [key, c] : o.t_) add_term(key.first, key.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [key, c] : o.t_) add_term(key.first, key.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(cplx s) {
  if (s == cplx{}) {
    t_.clear();
    return *this;
  }
  for (auto& kv : t_) kv.second *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.empty() || b.empty()) return {};
  check_degree(a.degree_z() + b.degree_z());
  check_degree(a.degree_zbar() + b.degree_zbar());
  BiPoly out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

cplx BiRational::operator()(cplx x) const { return num(x) / den(x); }

// ---------------------------------------------------------------------------
// Free operations

BiPoly mul_conj(const HoloPoly& p, const HoloPoly& q) {
  BiPoly out;
  const auto pc = p.coeffs();
  const auto qc = q.coeffs();
  for (std::size_t j = 0; j < pc.size(); ++j)
    for (std::size_t k = 0; k < qc.size(); ++k)
      out.add_term(static_cast<int>(j), static_cast<int>(k), pc[j] * std::conj(qc[k]));
  return out;
}

BiPoly partial_z(const BiPoly& h) {
  BiPoly out;
  for (const auto& [key, c] : h.terms())
    if (key.first > 0) out.add_term(key.first - 1, key.second, static_cast<double>(key.first) * c);
  return out;
}

BiPoly partial_zbar(const BiPoly& h) {
  BiPoly out;
  for (const auto& [key, c] : h.terms())
    if (key.second > 0) out.add_term(key.first, key.second - 1, static_cast<double>(key.second) * c);
  return out;
}

BiRational rational_log_laplacian(const BiPoly& h) {
  if (h.empty()) throw Error(ErrorCode::ZeroPolynomial, "log of the zero polynomial");
  const BiPoly hz = partial_z(h);
  const BiPoly hw = partial_zbar(h);
  const BiPoly hzw = partial_zbar(hz);
  return {h * hzw - hz * hw, h * h};
}

double eval_real(const BiPoly& h, cplx x) {
  const cplx v = h(x);
  if (std::abs(v.imag()) >= 1e-9 * (1.0 + std::abs(v.real()))) {
    throw Error(ErrorCode::InvalidInput, "polynomial value is not real; is it Hermitian?");
  }
  return v.real();
}

double eval_real(const BiRational& f, cplx x) {
  const cplx d = f.den(x);
  if (f.den.empty() || std::abs(d) <= 1e-14 * f.den.scale_at(x)) {
    throw Error(ErrorCode::PoleAtPoint, "denominator vanishes");
  }
  const cplx v = f.num(x) / d;
  if (std::abs(v.imag()) >= 1e-9 * (1.0 + std::abs(v.real()))) {
    throw Error(ErrorCode::InvalidInput, "rational value is not real");
  }
  return v.real();
}

std::optional<BinomialMatch> binomial_match(const BiPoly& h, double tol) {
  if (h.empty()) return std::nullopt;
  const cplx c00 = h.coeff(0, 0);
  const double c = c00.real();
  if (!(c > 0.0) || std::abs(c00.imag()) > tol * c) return std::nullopt;

  int r = 0;
  for (const auto& [key, v] : h.terms())
    if (key.first == key.second && std::abs(v) > tol * c) r = std::max(r, key.first);

  for (int k = 0; k <= r; ++k)
    if (std::abs(h.coeff(k, k) - c * binomial(r, k)) > tol * c) return std::nullopt;
  for (const auto& [key, v] : h.terms()) {
    if (key.first == key.second && key.first <= r) continue;
    if (std::abs(v) > tol * c) return std::nullopt;
  }
  return BinomialMatch{r, c};
}

double binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return std::round(b);
}

}  // namespace grasscurv
