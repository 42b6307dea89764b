#pragma once

// Holomorphic maps into the Grassmannian G(m,n) in two parametrizations:
//
//   GrassmannFrame  n x m matrix of holomorphic polynomials (columns f_1..f_m)
//   MacfarlaneMap   gauge-fixed frame (I_m ; K) with K an (n-m) x m matrix
//
// plus the Pluecker vector of m x m minors, Gram determinants, duality,
// embedding and numeric cross-checks.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "grasscurv/polyhermite.hpp"

namespace grasscurv {

/// Strictly increasing 0-based row indices (i_1 < ... < i_m).
using IndexTuple = std::vector<int>;

/// All m-subsets of {0..n-1} in lexicographic order.
std::vector<IndexTuple> index_tuples(int n, int m);

class GrassmannFrame {
 public:
  /// entries are row-major, n*m of them.
  GrassmannFrame(int n, int m, std::vector<HoloPoly> entries);
  static GrassmannFrame from_columns(const std::vector<std::vector<HoloPoly>>& columns);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const HoloPoly& at(int row, int col) const { return e_[index(row, col)]; }
  std::span<const HoloPoly> entries() const noexcept { return e_; }

  Eigen::MatrixXcd evaluate(cplx x) const;
  /// Entry-wise formal derivative of the frame.
  GrassmannFrame derivative() const;

  /// Gram determinant > 1e-10 at three fixed generic points.
  bool columns_independent() const;

  friend bool operator==(const GrassmannFrame&, const GrassmannFrame&) = default;

 private:
  std::size_t index(int row, int col) const;
  int n_;
  int m_;
  std::vector<HoloPoly> e_;
};

class MacfarlaneMap {
 public:
  /// k_entries are row-major, (n-m)*m of them.
  MacfarlaneMap(int n, int m, std::vector<HoloPoly> k_entries);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int rows() const noexcept { return n_ - m_; }
  const HoloPoly& k(int row, int col) const { return k_[index(row, col)]; }
  std::span<const HoloPoly> k_entries() const noexcept { return k_; }

  /// The stacked frame (I_m ; K).
  GrassmannFrame to_frame() const;

  friend bool operator==(const MacfarlaneMap&, const MacfarlaneMap&) = default;

 private:
  std::size_t index(int row, int col) const;
  int n_;
  int m_;
  std::vector<HoloPoly> k_;
};

class PlueckerVector {
 public:
  /// entries in lexicographic index-tuple order, C(n,m) of them.
  PlueckerVector(int n, int m, std::vector<HoloPoly> entries);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::span<const HoloPoly> entries() const noexcept { return e_; }
  const std::vector<IndexTuple>& tuples() const noexcept { return tuples_; }
  /// Position of a (sorted, 0-based) tuple in the canonical order.
  std::size_t position(const IndexTuple& tuple) const;
  const HoloPoly& at(const IndexTuple& tuple) const { return e_[position(tuple)]; }

 private:
  int n_;
  int m_;
  std::vector<IndexTuple> tuples_;
  std::vector<HoloPoly> e_;
};

PlueckerVector pluecker_minors(const GrassmannFrame& frame);

/// det(Z^dagger Z) as the sum of |p_I|^2 over all Pluecker minors.
BiPoly gram_det(const GrassmannFrame& frame);
BiPoly gram_det(const PlueckerVector& pv);
/// det(Z^dagger Z) by cofactor expansion of the m x m Gram matrix.
BiPoly gram_matrix_det(const GrassmannFrame& frame);
/// det(I_m + K^dagger K).
BiPoly macfarlane_gram_det(const MacfarlaneMap& map);

/// K -> K^T, a map into G(n-m, n).
MacfarlaneMap duality_transpose(const MacfarlaneMap& map);
/// Normalizes to Macfarlane form first; the top m x m block must have a
/// nonzero constant determinant.
MacfarlaneMap duality_transpose(const GrassmannFrame& frame);

/// Frame -> (I_m ; K) with K = bottom * top^{-1}. Throws InvalidInput unless
/// det(top block) is a nonzero constant.
MacfarlaneMap to_macfarlane(const GrassmannFrame& frame);
/// Normalizes by the leading minor p_{1..m}, which must be a nonzero constant.
MacfarlaneMap macfarlane_from_pluecker(const PlueckerVector& pv);

GrassmannFrame embed_pad(const GrassmannFrame& frame);
MacfarlaneMap embed_pad(const MacfarlaneMap& map);
PlueckerVector embed_pad(const PlueckerVector& pv);

/// Quadratic Pluecker relations p_ij p_kl - p_ik p_jl + p_il p_jk = 0 for
/// all i<j<k<l, coefficientwise to rel_tol. Only m = 2 is supported.
bool pluecker_relations_check(const PlueckerVector& pv, double rel_tol = 1e-10);

/// Max relative discrepancy between a numeric Gram-Schmidt norm product and
/// the polynomial Gram determinant over the given points.
double gram_schmidt_check(const GrassmannFrame& frame, std::span<const cplx> points);

/// Frame * G for a constant invertible m x m matrix G.
GrassmannFrame right_multiply(const GrassmannFrame& frame, const Eigen::MatrixXcd& g);

/// Numeric Gram-Schmidt orthonormalization of the frame's columns at x.
Eigen::MatrixXcd orthonormal_frame_at(const GrassmannFrame& frame, cplx x);

}  // namespace grasscurv
