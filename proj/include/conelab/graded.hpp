#pragma once

// Forms, monomial bases and the graded pieces of ideals of points, all
// computed as ranks and kernels of explicit evaluation matrices.

#include "conelab/projective.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace conelab {

using Exponent = std::array<int, 4>;

/// Monomials of one degree in num_vars variables, graded-lex with
/// x0 > x1 > x2 > x3 (within one degree, lex order: x0^d comes first).
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(int num_vars, int degree);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  Index size() const { return static_cast<Index>(exponents_.size()); }
  const Exponent& operator[](Index i) const { return exponents_[static_cast<std::size_t>(i)]; }
  const std::vector<Exponent>& exponents() const { return exponents_; }

  /// Position of an exponent, or -1.
  Index index_of(const Exponent& e) const;

  friend bool operator==(const MonomialBasis& a, const MonomialBasis& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_;
  }

 private:
  int num_vars_ = 0;
  int degree_ = 0;
  std::vector<Exponent> exponents_;
  std::map<Exponent, Index> lookup_;
};

class Form {
 public:
  Form() = default;
  Form(MonomialBasis basis, VectorQ coefficients);

  static Form zero(int num_vars, int degree);

  const MonomialBasis& basis() const { return basis_; }
  const VectorQ& coefficients() const { return coefficients_; }
  int degree() const { return basis_.degree(); }
  int num_vars() const { return basis_.num_vars(); }
  bool is_zero() const { return coefficients_.isZero(); }

  /// Coefficient of the monomial with the given exponent (0 if absent).
  Rational coefficient(const Exponent& e) const;

  Rational operator()(const ProjPoint& p) const;
  Rational evaluate(const VectorQ& p) const;

  /// Partial derivative in variable var.
  Form derivative(int var) const;

  Form operator*(const Form& other) const;
  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  Form operator*(const Rational& s) const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.basis_ == b.basis_ && a.coefficients_ == b.coefficients_;
  }

 private:
  MonomialBasis basis_;
  VectorQ coefficients_;
};

/// Builds a form from (coefficient, exponent) terms; like terms add up.
Form make_form(int num_vars, int degree, const std::vector<std::pair<Rational, Exponent>>& terms);

/// Row of partial derivative d^alpha evaluated at p, indexed by basis(degree).
VectorQ derivative_row(const MonomialBasis& basis, const Exponent& alpha, const VectorQ& p);

struct FatPoint {
  ProjPoint point;
  int multiplicity = 0;
};

/// One evaluation row per configuration point, then (if present) one row per
/// partial derivative of order exactly m-1 at the fat point, binom(m-1+n, n)
/// of them; the lower orders follow by Euler's relation. Columns follow
/// MonomialBasis(n+1, d).
MatrixQ condition_matrix(const PointConfig& cfg, int d, const std::optional<FatPoint>& fat = {});

Index ideal_dim(const PointConfig& cfg, int d);

/// dim of degree-d forms through cfg vanishing to order m at P.
Index fat_ideal_dim(const PointConfig& cfg, const ProjPoint& p, int m, int d);

/// Same number as fat_ideal_dim, computed after a change of coordinates
/// that moves P to [1,0,...,0], where vanishing to order m at P just means
/// the monomials with x0-exponent > d-m are absent. Much smaller matrices.
Index fat_ideal_dim_at_vertex(const PointConfig& cfg, const ProjPoint& p, int m, int d);

Index hilbert_function(const PointConfig& cfg, int t);

using HVector = std::vector<Index>;

HVector h_vector(const PointConfig& cfg);

struct CIVerdict {
  std::pair<int, int> type{0, 0};
  bool certified = false;
  std::optional<std::pair<Form, Form>> certificate;
  int trials_used = 0;
};

struct GenericityProtocol {
  std::uint64_t seed = 42;
  int trials = 3;
  std::uint64_t height = 1000;
};

/// The degree-t piece of (F, G): rows F*m for monomials m of degree t-a,
/// then G*m for degree t-b.
MatrixQ ideal_piece(const Form& f, const Form& g, int t);

/// True iff F and G vanish on cfg and (F,G) has colength |cfg| in degrees
/// a+b-2 and a+b-1. Sound: two consecutive equal values force F, G coprime,
/// and a coprime pair through |cfg| = ab points defines exactly them.
bool validate_ci_certificate(const PointConfig& cfg, const Form& f, const Form& g);

/// Planar complete intersection test of type (a, b), a <= b. A certified
/// verdict carries the pair (F, G) as an exact certificate.
CIVerdict is_complete_intersection(const PointConfig& cfg, int a, int b,
                                   const GenericityProtocol& protocol);

/// Removes subset_indices (a CI of type (a, c)) from a CI of type (a, b)
/// and tests the complement for type (a, b - c).
CIVerdict residual_ci_check(const PointConfig& cfg, const std::vector<std::size_t>& subset_indices,
                            int a, int b, int c, const GenericityProtocol& protocol);

/// Largest m such that every partial of order < m vanishes at P.
int multiplicity_at(const Form& f, const ProjPoint& p);

}  // namespace conelab
