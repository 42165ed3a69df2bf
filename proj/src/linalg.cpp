#include "conelab/linalg.hpp"

#include <gmp.h>

namespace conelab {

namespace {

mpz_ptr raw(Integer& z) { return z.backend().data(); }
mpz_srcptr raw(const Integer& z) { return z.backend().data(); }

}  // namespace

RowMatrixZ integer_rows(const MatrixQ& m) {
  RowMatrixZ out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      const Integer& d = denominator(m(i, j));
      if (d != 1) mpz_lcm(raw(lcm), raw(lcm), raw(d));
    }
    Integer g = 0;
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = numerator(m(i, j)) * (lcm / denominator(m(i, j)));
      mpz_gcd(raw(g), raw(g), raw(out(i, j)));
    }
    if (g > 1)
      for (Index j = 0; j < m.cols(); ++j) mpz_divexact(raw(out(i, j)), raw(out(i, j)), raw(g));
  }
  return out;
}

Echelon bareiss_echelon(RowMatrixZ a) {
  Echelon result;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Integer prev = 1;
  Integer tmp;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best = -1;
    std::size_t best_size = 0;
    for (Index i = r; i < rows; ++i) {
      if (mpz_sgn(raw(a(i, c))) == 0) continue;
      const std::size_t size = mpz_sizeinbase(raw(a(i, c)), 2);
      if (best < 0 || size < best_size) {
        best = i;
        best_size = size;
      }
    }
    if (best < 0) continue;
    if (best != r) a.row(best).swap(a.row(r));

    const Integer& pivot = a(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const Integer factor = a(i, c);
      const bool zero_factor = mpz_sgn(raw(factor)) == 0;
      for (Index j = c + 1; j < cols; ++j) {
        mpz_mul(raw(tmp), raw(pivot), raw(a(i, j)));
        if (!zero_factor) mpz_submul(raw(tmp), raw(factor), raw(a(r, j)));
        mpz_divexact(raw(a(i, j)), raw(tmp), raw(prev));
      }
      mpz_set_ui(raw(a(i, c)), 0);
    }
    prev = pivot;
    result.pivot_cols.push_back(c);
    ++r;
  }
  result.rows = std::move(a);
  return result;
}

Index rank_integer(RowMatrixZ m) { return bareiss_echelon(std::move(m)).rank(); }

std::vector<VectorQ> kernel_from_echelon(const Echelon& e, Index cols) {
  const Index r = e.rank();
  // Reduced row echelon form of the pivot rows, over Q.
  MatrixQ rref(r, cols);
  for (Index i = 0; i < r; ++i) {
    const Rational pivot(e.rows(i, e.pivot_cols[i]));
    for (Index j = 0; j < cols; ++j) rref(i, j) = Rational(e.rows(i, j)) / pivot;
  }
  for (Index k = r - 1; k >= 0; --k) {
    const Index pc = e.pivot_cols[k];
    for (Index i = 0; i < k; ++i) {
      const Rational f = rref(i, pc);
      if (f == 0) continue;
      for (Index j = pc; j < cols; ++j)
        if (rref(k, j) != 0) rref(i, j) -= f * rref(k, j);
    }
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index pc : e.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;

  std::vector<VectorQ> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorQ v = VectorQ::Zero(cols);
    v(f) = 1;
    for (Index k = 0; k < r; ++k) v(e.pivot_cols[k]) = -rref(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

VectorZ primitive(const VectorQ& v) {
  Integer lcm = 1;
  for (Index i = 0; i < v.size(); ++i) {
    const Integer& d = denominator(v(i));
    if (d != 1) mpz_lcm(raw(lcm), raw(lcm), raw(d));
  }
  VectorZ out(v.size());
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    out(i) = numerator(v(i)) * (lcm / denominator(v(i)));
    mpz_gcd(raw(g), raw(g), raw(out(i)));
  }
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) mpz_divexact(raw(out(i)), raw(out(i)), raw(g));
  return out;
}

}  // namespace conelab
