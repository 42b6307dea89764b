#include "grasscurv/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace grasscurv {

namespace {

// Laplace expansion down the columns of an m x m matrix whose rows are
// `rows` and whose entries come from at(row, col).
template <class P, class At>
P laplace_det(const At& at, const std::vector<int>& rows, int col, std::vector<char>& used, const P& one) {
  const int m = static_cast<int>(rows.size());
  if (col == m) return one;
  P acc{};
  int sign = 1;
  for (int t = 0; t < m; ++t) {
    if (used[t]) continue;
    const auto& entry = at(rows[t], col);
    if (!entry.empty_like()) {
      used[t] = 1;
      P sub = laplace_det(at, rows, col + 1, used, one);
      used[t] = 0;
      P term = entry.value() * sub;
      if (sign > 0) acc += term; else acc -= term;
    }
    sign = -sign;
  }
  return acc;
}

// Thin adapters so one expansion routine handles both polynomial types.
struct HoloRef {
  const HoloPoly* p;
  bool empty_like() const { return p->is_zero(); }
  const HoloPoly& value() const { return *p; }
};
struct BiRef {
  const BiPoly* p;
  bool empty_like() const { return p->empty(); }
  const BiPoly& value() const { return *p; }
};

HoloPoly holo_det(const std::vector<HoloPoly>& a, int m, const std::vector<int>& rows) {
  std::vector<char> used(rows.size(), 0);
  auto at = [&](int r, int c) { return HoloRef{&a[static_cast<std::size_t>(r) * m + c]}; };
  return laplace_det<HoloPoly>(at, rows, 0, used, HoloPoly::constant(1.0));
}

BiPoly bi_det(const std::vector<BiPoly>& a, int m) {
  std::vector<int> rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) rows[i] = i;
  std::vector<char> used(rows.size(), 0);
  auto at = [&](int r, int c) { return BiRef{&a[static_cast<std::size_t>(r) * m + c]}; };
  return laplace_det<BiPoly>(at, rows, 0, used, BiPoly::constant(1.0));
}

void check_shape(int n, int m) {
  if (m < 1 || n <= m) {
    throw Error(ErrorCode::BadDimension,
                "need 1 <= m < n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
}

std::vector<int> iota_rows(int m) {
  std::vector<int> rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) rows[i] = i;
  return rows;
}

}  // namespace

std::vector<IndexTuple> index_tuples(int n, int m) {
  std::vector<IndexTuple> out;
  if (m < 0 || m > n) return out;
  IndexTuple t(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int i = m - 1;
    while (i >= 0 && t[i] == n - m + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < m; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// GrassmannFrame

GrassmannFrame::GrassmannFrame(int n, int m, std::vector<HoloPoly> entries)
    : n_(n), m_(m), e_(std::move(entries)) {
  if (m < 1 || n < m) throw Error(ErrorCode::BadDimension, "frame needs 1 <= m <= n");
  if (e_.size() != static_cast<std::size_t>(n) * m) {
    throw Error(ErrorCode::InvalidInput, "frame entry count does not match n*m");
  }
}

GrassmannFrame GrassmannFrame::from_columns(const std::vector<std::vector<HoloPoly>>& columns) {
  if (columns.empty()) throw Error(ErrorCode::BadDimension, "frame without columns");
  const int m = static_cast<int>(columns.size());
  const int n = static_cast<int>(columns.front().size());
  std::vector<HoloPoly> e(static_cast<std::size_t>(n) * m);
  for (int c = 0; c < m; ++c) {
    if (static_cast<int>(columns[c].size()) != n) throw Error(ErrorCode::InvalidInput, "ragged frame columns");
    for (int r = 0; r < n; ++r) e[static_cast<std::size_t>(r) * m + c] = columns[c][r];
  }
  return GrassmannFrame(n, m, std::move(e));
}

std::size_t GrassmannFrame::index(int row, int col) const {
  if (row < 0 || row >= n_ || col < 0 || col >= m_) throw Error(ErrorCode::InvalidInput, "frame index out of range");
  return static_cast<std::size_t>(row) * m_ + col;
}

Eigen::MatrixXcd GrassmannFrame::evaluate(cplx x) const {
  Eigen::MatrixXcd z(n_, m_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < m_; ++c) z(r, c) = e_[static_cast<std::size_t>(r) * m_ + c](x);
  return z;
}

GrassmannFrame GrassmannFrame::derivative() const {
  std::vector<HoloPoly> d;
  d.reserve(e_.size());
  for (const auto& p : e_) d.push_back(p.derivative());
  return GrassmannFrame(n_, m_, std::move(d));
}

bool GrassmannFrame::columns_independent() const {
  static const cplx probes[] = {{0.3, 0.1}, {-0.7, 0.45}, {1.1, -0.6}};
  for (const cplx x : probes) {
    const Eigen::MatrixXcd z = evaluate(x);
    const Eigen::MatrixXcd g = z.adjoint() * z;
    if (!(g.determinant().real() > 1e-10)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// MacfarlaneMap

MacfarlaneMap::MacfarlaneMap(int n, int m, std::vector<HoloPoly> k_entries)
    : n_(n), m_(m), k_(std::move(k_entries)) {
  check_shape(n, m);
  if (k_.size() != static_cast<std::size_t>(n - m) * m) {
    throw Error(ErrorCode::InvalidInput, "K entry count does not match (n-m)*m");
  }
}

std::size_t MacfarlaneMap::index(int row, int col) const {
  if (row < 0 || row >= n_ - m_ || col < 0 || col >= m_) throw Error(ErrorCode::InvalidInput, "K index out of range");
  return static_cast<std::size_t>(row) * m_ + col;
}

GrassmannFrame MacfarlaneMap::to_frame() const {
  std::vector<HoloPoly> e(static_cast<std::size_t>(n_) * m_);
  for (int i = 0; i < m_; ++i) e[static_cast<std::size_t>(i) * m_ + i] = HoloPoly::constant(1.0);
  std::copy(k_.begin(), k_.end(), e.begin() + static_cast<std::ptrdiff_t>(m_) * m_);
  return GrassmannFrame(n_, m_, std::move(e));
}

// ---------------------------------------------------------------------------
// PlueckerVector

PlueckerVector::PlueckerVector(int n, int m, std::vector<HoloPoly> entries)
    : n_(n), m_(m), tuples_(index_tuples(n, m)), e_(std::move(entries)) {
  if (m < 1 || n < m) throw Error(ErrorCode::BadDimension, "Pluecker vector needs 1 <= m <= n");
  if (e_.size() != tuples_.size()) {
    throw Error(ErrorCode::InvalidInput, "Pluecker entry count must be C(n,m) = " + std::to_string(tuples_.size()));
  }
}

std::size_t PlueckerVector::position(const IndexTuple& tuple) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple);
  if (it == tuples_.end() || *it != tuple) throw Error(ErrorCode::InvalidInput, "not a canonical index tuple");
  return static_cast<std::size_t>(it - tuples_.begin());
}

// ---------------------------------------------------------------------------
// Operations

PlueckerVector pluecker_minors(const GrassmannFrame& frame) {
  std::vector<HoloPoly> e(frame.entries().begin(), frame.entries().end());
  std::vector<HoloPoly> minors;
  for (const auto& t : index_tuples(frame.n(), frame.m())) minors.push_back(holo_det(e, frame.m(), t));
  return PlueckerVector(frame.n(), frame.m(), std::move(minors));
}

BiPoly gram_det(const PlueckerVector& pv) {
  BiPoly acc;
  for (const auto& p : pv.entries()) acc += mul_conj(p, p);
  return acc;
}

BiPoly gram_det(const GrassmannFrame& frame) { return gram_det(pluecker_minors(frame)); }

BiPoly gram_matrix_det(const GrassmannFrame& frame) {
  const int m = frame.m();
  std::vector<BiPoly> g(static_cast<std::size_t>(m) * m);
  // (Z^dagger Z)_ab = sum_i conj(z_ia) z_ib
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < frame.n(); ++i) g[static_cast<std::size_t>(a) * m + b] += mul_conj(frame.at(i, b), frame.at(i, a));
  return bi_det(g, m);
}

// Cauchy-Binet on the stacked frame (I; K). Every diagonal coefficient is a sum of
// squares, which loses far less than the cofactor expansion of I + K^dagger K.
BiPoly macfarlane_gram_det(const MacfarlaneMap& map) { return gram_det(map.to_frame()); }

MacfarlaneMap duality_transpose(const MacfarlaneMap& map) {
  const int rows = map.rows();
  const int m = map.m();
  std::vector<HoloPoly> kt(static_cast<std::size_t>(rows) * m);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < m; ++j) kt[static_cast<std::size_t>(j) * rows + i] = map.k(i, j);
  return MacfarlaneMap(map.n(), rows, std::move(kt));
}

MacfarlaneMap duality_transpose(const GrassmannFrame& frame) { return duality_transpose(to_macfarlane(frame)); }

MacfarlaneMap to_macfarlane(const GrassmannFrame& frame) {
  const int n = frame.n();
  const int m = frame.m();
  check_shape(n, m);
  std::vector<HoloPoly> top(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) top[static_cast<std::size_t>(r) * m + c] = frame.at(r, c);

  const HoloPoly det = holo_det(top, m, iota_rows(m));
  const cplx d0 = det.coeff(0);
  for (int j = 1; j <= det.degree(); ++j) {
    if (std::abs(det.coeff(j)) > 1e-12 * std::max(1.0, std::abs(d0))) {
      throw Error(ErrorCode::InvalidInput, "top block determinant is not constant; no polynomial Macfarlane form");
    }
  }
  if (std::abs(d0) < 1e-300) throw Error(ErrorCode::InvalidInput, "top block is singular");

  // inverse = adj(top) / det, adj_ij = (-1)^(i+j) minor(j, i)
  std::vector<HoloPoly> inv(static_cast<std::size_t>(m) * m);
  if (m == 1) {
    inv[0] = HoloPoly::constant(1.0 / d0);
  } else {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        std::vector<HoloPoly> sub;
        for (int r = 0; r < m; ++r) {
          if (r == j) continue;
          for (int c = 0; c < m; ++c)
            if (c != i) sub.push_back(top[static_cast<std::size_t>(r) * m + c]);
        }
        HoloPoly cof = holo_det(sub, m - 1, iota_rows(m - 1));
        const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
        inv[static_cast<std::size_t>(i) * m + j] = cof * cplx(sign / d0);
      }
    }
  }

  std::vector<HoloPoly> k(static_cast<std::size_t>(n - m) * m);
  for (int r = 0; r < n - m; ++r)
    for (int c = 0; c < m; ++c) {
      HoloPoly acc;
      for (int t = 0; t < m; ++t) acc += frame.at(m + r, t) * inv[static_cast<std::size_t>(t) * m + c];
      k[static_cast<std::size_t>(r) * m + c] = std::move(acc);
    }
  return MacfarlaneMap(n, m, std::move(k));
}

MacfarlaneMap macfarlane_from_pluecker(const PlueckerVector& pv) {
  const int n = pv.n();
  const int m = pv.m();
  check_shape(n, m);
  const HoloPoly& lead = pv.at(iota_rows(m));
  if (lead.degree() != 0) {
    throw Error(ErrorCode::InvalidInput, "leading Pluecker coordinate must be a nonzero constant");
  }
  const cplx c = lead.coeff(0);
  std::vector<HoloPoly> k(static_cast<std::size_t>(n - m) * m);
  for (int i = m; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      IndexTuple t;
      for (int j = 0; j < m; ++j)
        if (j != a) t.push_back(j);
      t.push_back(i);
      const double sign = ((m - 1 - a) % 2 == 0) ? 1.0 : -1.0;
      k[static_cast<std::size_t>(i - m) * m + a] = pv.at(t) * cplx(sign / c);
    }
  }
  return MacfarlaneMap(n, m, std::move(k));
}

GrassmannFrame embed_pad(const GrassmannFrame& frame) {
  std::vector<HoloPoly> e(frame.entries().begin(), frame.entries().end());
  e.resize(e.size() + static_cast<std::size_t>(frame.m()));
  return GrassmannFrame(frame.n() + 1, frame.m(), std::move(e));
}

MacfarlaneMap embed_pad(const MacfarlaneMap& map) {
  std::vector<HoloPoly> k(map.k_entries().begin(), map.k_entries().end());
  k.resize(k.size() + static_cast<std::size_t>(map.m()));
  return MacfarlaneMap(map.n() + 1, map.m(), std::move(k));
}

PlueckerVector embed_pad(const PlueckerVector& pv) {
  std::vector<HoloPoly> e;
  for (const auto& t : index_tuples(pv.n() + 1, pv.m())) {
    if (t.back() == pv.n()) e.emplace_back();
    else e.push_back(pv.at(t));
  }
  return PlueckerVector(pv.n() + 1, pv.m(), std::move(e));
}

bool pluecker_relations_check(const PlueckerVector& pv, double rel_tol) {
  if (pv.m() != 2) throw Error(ErrorCode::UnsupportedRank, "Pluecker relations are checked for m = 2 only");
  const int n = pv.n();
  auto p = [&](int a, int b) -> const HoloPoly& { return pv.at({a, b}); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const HoloPoly t1 = p(i, j) * p(k, l);
          const HoloPoly t2 = p(i, k) * p(j, l);
          const HoloPoly t3 = p(i, l) * p(j, k);
          const double scale = std::max({1.0, t1.max_abs_coeff(), t2.max_abs_coeff(), t3.max_abs_coeff()});
          if ((t1 - t2 + t3).max_abs_coeff() > rel_tol * scale) return false;
        }
  return true;
}

Eigen::MatrixXcd orthonormal_frame_at(const GrassmannFrame& frame, cplx x) {
  Eigen::MatrixXcd z = frame.evaluate(x);
  for (int c = 0; c < z.cols(); ++c) {
    for (int prev = 0; prev < c; ++prev) z.col(c) -= z.col(prev).dot(z.col(c)) * z.col(prev);
    const double nrm = z.col(c).norm();
    if (nrm < 1e-12) throw Error(ErrorCode::DegenerateAtPoint, "frame columns dependent at point");
    z.col(c) /= nrm;
  }
  return z;
}

double gram_schmidt_check(const GrassmannFrame& frame, std::span<const cplx> points) {
  const BiPoly det = gram_det(frame);
  double worst = 0.0;
  for (const cplx x : points) {
    Eigen::MatrixXcd z = frame.evaluate(x);
    double product = 1.0;
    for (int c = 0; c < z.cols(); ++c) {
      const Eigen::VectorXcd orig = z.col(c);
      for (int prev = 0; prev < c; ++prev) {
        z.col(c) -= (z.col(prev).dot(orig) / z.col(prev).squaredNorm()) * z.col(prev);
      }
      const double nrm = z.col(c).norm();
      if (nrm < 1e-12) throw Error(ErrorCode::DegenerateAtPoint, "intermediate Gram-Schmidt norm vanishes");
      product *= nrm * nrm;
    }
    const double expect = eval_real(det, x);
    worst = std::max(worst, std::abs(product - expect) / std::abs(expect));
  }
  return worst;
}

GrassmannFrame right_multiply(const GrassmannFrame& frame, const Eigen::MatrixXcd& g) {
  const int m = frame.m();
  if (g.rows() != m || g.cols() != m) throw Error(ErrorCode::InvalidInput, "gauge matrix must be m x m");
  std::vector<HoloPoly> e(static_cast<std::size_t>(frame.n()) * m);
  for (int r = 0; r < frame.n(); ++r)
    for (int c = 0; c < m; ++c) {
      HoloPoly acc;
      for (int t = 0; t < m; ++t) acc += frame.at(r, t) * g(t, c);
      e[static_cast<std::size_t>(r) * m + c] = std::move(acc);
    }
  return GrassmannFrame(frame.n(), m, std::move(e));
}

}  // namespace grasscurv
