#include "grasscurv/veronese.hpp"

#include <cmath>
#include <string>

namespace grasscurv {

namespace {

// Truncated Taylor series in two independent variables (u, w) standing for
// x and conj(x) around a base point: c(a,b) = d^a dbar^b s / (a! b!).
class Series2 {
 public:
  explicit Series2(int order) : k_(order), c_(static_cast<std::size_t>((order + 1) * (order + 1))) {}

  cplx& operator()(int a, int b) { return c_[static_cast<std::size_t>(a * (k_ + 1) + b)]; }
  cplx operator()(int a, int b) const { return c_[static_cast<std::size_t>(a * (k_ + 1) + b)]; }
  int order() const { return k_; }

  Series2 operator+(const Series2& o) const {
    Series2 r(k_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  Series2 operator-(const Series2& o) const {
    Series2 r(k_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  Series2 operator*(const Series2& o) const {
    Series2 r(k_);
    for (int a = 0; a <= k_; ++a)
      for (int b = 0; b <= k_; ++b) {
        cplx acc{};
        for (int a1 = 0; a1 <= a; ++a1)
          for (int b1 = 0; b1 <= b; ++b1) acc += (*this)(a1, b1) * o(a - a1, b - b1);
        r(a, b) = acc;
      }
    return r;
  }

  Series2 reciprocal() const {
    const cplx s0 = (*this)(0, 0);
    Series2 r(k_);
    for (int a = 0; a <= k_; ++a)
      for (int b = 0; b <= k_; ++b) {
        cplx acc = (a == 0 && b == 0) ? cplx(1.0) : cplx{};
        for (int a1 = 0; a1 <= a; ++a1)
          for (int b1 = 0; b1 <= b; ++b1)
            if (a1 != 0 || b1 != 0) acc -= (*this)(a1, b1) * r(a - a1, b - b1);
        r(a, b) = acc / s0;
      }
    return r;
  }

  /// d/du; the top row becomes invalid and is zeroed.
  Series2 d() const {
    Series2 r(k_);
    for (int a = 0; a < k_; ++a)
      for (int b = 0; b <= k_; ++b) r(a, b) = static_cast<double>(a + 1) * (*this)(a + 1, b);
    return r;
  }

  /// Series of the complex-conjugate function.
  Series2 conj() const {
    Series2 r(k_);
    for (int a = 0; a <= k_; ++a)
      for (int b = 0; b <= k_; ++b) r(a, b) = std::conj((*this)(b, a));
    return r;
  }

 private:
  int k_;
  std::vector<cplx> c_;
};

using SeriesVec = std::vector<Series2>;

SeriesVec pplus(const SeriesVec& g) {
  const int order = g.front().order();
  SeriesVec dg;
  dg.reserve(g.size());
  for (const auto& s : g) dg.push_back(s.d());
  Series2 inner(order), norm2(order);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Series2 gc = g[i].conj();
    inner = inner + gc * dg[i];
    norm2 = norm2 + gc * g[i];
  }
  const Series2 ratio = inner * norm2.reciprocal();
  SeriesVec out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(dg[i] - ratio * g[i]);
  return out;
}

}  // namespace

void VeroneseSpec::validate() const {
  if (n < 2 || m < 1 || m >= n) {
    throw Error(ErrorCode::BadDimension,
                "Veronese curve needs n >= 2 and 1 <= m < n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
}

GrassmannFrame veronese_cp(int n) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "veronese_cp needs n >= 2");
  std::vector<HoloPoly> col;
  col.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) col.push_back(HoloPoly::monomial(std::sqrt(binomial(n - 1, k)), k));
  return GrassmannFrame(n, 1, std::move(col));
}

GrassmannFrame veronese_frame(const VeroneseSpec& spec) {
  spec.validate();
  const GrassmannFrame f = veronese_cp(spec.n);
  std::vector<std::vector<HoloPoly>> cols;
  std::vector<HoloPoly> col(f.entries().begin(), f.entries().end());
  for (int j = 0; j < spec.m; ++j) {
    cols.push_back(col);
    for (auto& p : col) p = p.derivative();
  }
  return GrassmannFrame::from_columns(cols);
}

MacfarlaneMap veronese_macfarlane(const VeroneseSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int m = spec.m;
  std::vector<HoloPoly> k;
  k.reserve(static_cast<std::size_t>(n - m) * m);
  for (int i = 1; i <= n - m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
      const double ratio = static_cast<double>(m - j + 1) / (m - j + i);
      const double roots = std::sqrt(binomial(n - 1, i + m - 1)) / std::sqrt(binomial(n - 1, j - 1));
      const double coeff = sign * ratio * roots * binomial(i + m - 1, m) * binomial(m, j - 1);
      k.push_back(HoloPoly::monomial(coeff, i - j + m));
    }
  }
  return MacfarlaneMap(n, m, std::move(k));
}

std::vector<Eigen::VectorXcd> pplus_orbit(const GrassmannFrame& f, int k, cplx x) {
  if (f.m() != 1) throw Error(ErrorCode::BadDimension, "pplus_orbit expects a single-column frame");
  if (k < 0 || k > f.n() - 1) throw Error(ErrorCode::InvalidInput, "pplus_orbit needs 0 <= k <= n-1");

  // f(x + u) = sum_a f^(a)(x)/a! u^a; no dependence on conj(x).
  SeriesVec g;
  g.reserve(static_cast<std::size_t>(f.n()));
  for (int i = 0; i < f.n(); ++i) {
    Series2 s(k);
    HoloPoly p = f.at(i, 0);
    double fact = 1.0;
    for (int a = 0; a <= k; ++a) {
      s(a, 0) = p(x) / fact;
      p = p.derivative();
      fact *= (a + 1);
    }
    g.push_back(std::move(s));
  }

  std::vector<Eigen::VectorXcd> out;
  for (int step = 0; step <= k; ++step) {
    Eigen::VectorXcd v(f.n());
    for (int i = 0; i < f.n(); ++i) v(i) = g[static_cast<std::size_t>(i)](0, 0);
    if (v.norm() < 1e-12) throw Error(ErrorCode::DegenerateAtPoint, "P+ iterate vanishes at point");
    out.push_back(std::move(v));
    if (step < k) g = pplus(g);
  }
  return out;
}

}  // namespace grasscurv
