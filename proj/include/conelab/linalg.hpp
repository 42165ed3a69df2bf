#pragma once

// Exact rank and kernel computation over the rationals.
//
// Every matrix is first scaled row by row to an integer matrix (row scaling
// preserves rank and null space) and then reduced with fraction-free
// (Bareiss) elimination. Pivots are chosen per column as the nonzero entry
// of smallest magnitude, which keeps intermediate minors small on the
// evaluation and derivative matrices used downstream.

#include "conelab/exact.hpp"

#include <vector>

namespace conelab {

using RowMatrixZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Echelon {
  RowMatrixZ rows;                 // upper echelon form, zero rows at the bottom
  std::vector<Index> pivot_cols;   // one per nonzero row, strictly increasing

  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

/// Row-scales a rational matrix to coprime integer rows.
RowMatrixZ integer_rows(const MatrixQ& m);

/// Fraction-free echelon form. Consumes its argument.
Echelon bareiss_echelon(RowMatrixZ m);

Index rank_integer(RowMatrixZ m);

/// Null space basis from an echelon form: one vector per free column, in
/// increasing column order, with a 1 in that column and zeros in the other
/// free columns (the reduced-echelon convention).
std::vector<VectorQ> kernel_from_echelon(const Echelon& e, Index cols);

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, Integer>) {
    return rank_integer(RowMatrixZ(m));
  } else {
    return rank_integer(integer_rows(m.template cast<Rational>()));
  }
}

template <typename Derived>
std::vector<VectorQ> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon e;
  if constexpr (std::is_same_v<Scalar, Integer>)
    e = bareiss_echelon(RowMatrixZ(m));
  else
    e = bareiss_echelon(integer_rows(m.template cast<Rational>()));
  return kernel_from_echelon(e, m.cols());
}

/// Scales a rational vector to coprime integers with the same direction and
/// sign. The zero vector is returned unchanged.
VectorZ primitive(const VectorQ& v);

}  // namespace conelab
