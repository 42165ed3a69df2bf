#pragma once

// Points, lines and incidence in projective 2- and 3-space.

#include "conelab/exact.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conelab {

/// A point of P^n in canonical form: coprime integer coordinates whose first
/// nonzero entry is positive. Two representatives of the same point compare
/// equal.
class ProjPoint {
 public:
  ProjPoint() = default;

  /// Canonicalizes; throws Error{InvalidArgument} on the zero vector.
  explicit ProjPoint(const VectorQ& coords);
  explicit ProjPoint(const VectorZ& coords);
  ProjPoint(std::initializer_list<long> coords);

  Index ambient_dim() const { return coords_.size() - 1; }
  Index size() const { return coords_.size(); }
  const VectorZ& coords() const { return coords_; }
  const Integer& operator[](Index i) const { return coords_(i); }
  VectorQ rational() const { return coords_.cast<Rational>(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

  std::string str() const;

 private:
  VectorZ coords_;
};

class PointConfig {
 public:
  PointConfig() = default;

  /// Throws Error{DuplicatePoint} if two points coincide and
  /// Error{InvalidArgument} on mixed or unsupported dimensions.
  PointConfig(int ambient_dim, std::vector<ProjPoint> points, std::string label = {});

  int ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<ProjPoint>& points() const& { return points_; }
  // Keeps `for (auto& p : named("F4").config.points())` valid.
  std::vector<ProjPoint> points() && { return std::move(points_); }
  const ProjPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::string& label() const { return label_; }

  bool contains(const ProjPoint& p) const;

  /// Same point set, ignoring order and label.
  bool same_set(const PointConfig& other) const;

  PointConfig subset(const std::vector<std::size_t>& indices, std::string label = {}) const;
  PointConfig without(const std::vector<std::size_t>& indices, std::string label = {}) const;

  /// Stacked coordinates, one point per row.
  MatrixZ matrix() const;

 private:
  int ambient_dim_ = 3;
  std::vector<ProjPoint> points_;
  std::string label_;
};

/// Rank of the stacked coordinate vectors.
Index span_rank(const std::vector<const ProjPoint*>& points);
Index span_rank(const PointConfig& cfg);

/// True if the configuration spans less than all of P^n.
bool is_degenerate(const PointConfig& cfg);

struct Line {
  ProjPoint first;
  ProjPoint second;
  std::vector<std::size_t> members;  // sorted indices into the configuration

  bool contains(const ProjPoint& p) const;
};

/// Maximal collinear subsets with at least min_size points (min_size >= 2),
/// sorted lexicographically by member indices.
std::vector<Line> maximal_lines(const PointConfig& cfg, std::size_t min_size);

/// Every maximal collinear subset with at least k >= 3 points.
std::vector<Line> collinear_subsets(const PointConfig& cfg, std::size_t k);

struct GeneralPositionVerdict {
  bool general = true;
  std::vector<std::size_t> witness;  // a collinear triple or coplanar quadruple
};

GeneralPositionVerdict is_linear_general_position(const PointConfig& cfg);

bool lines_skew(const Line& l1, const Line& l2);

/// Family A holds a lines with b points each, family B holds b lines with a
/// points each.
struct GridWitness {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Line> family_a;
  std::vector<Line> family_b;
};

/// Partitions the configuration into `count` pairwise-skew lines, each a
/// maximal collinear subset with at least min_size points. First cover in
/// lexicographic search order, or nothing.
std::optional<std::vector<Line>> skew_line_cover(const PointConfig& cfg, std::size_t count,
                                                 std::size_t min_size = 2);

/// Re-checks every grid invariant against the configuration.
bool validate_grid(const PointConfig& cfg, const GridWitness& w);

/// Searches the factorizations |cfg| = a*b with 2 <= a <= b, smallest a first.
/// Lines are drawn from the maximal collinear subsets; four coplanar points
/// are not a (2,2)-grid because their lines cannot be skew.
std::optional<GridWitness> detect_grid(const PointConfig& cfg);

/// Image of each point under a rank-3 screen map P^3 -> P^2 whose kernel is
/// the center. Throws CenterOnSecant, BadScreen.
PointConfig project(const PointConfig& cfg, const ProjPoint& center, const MatrixQ& screen);

/// Throws SingularTransform when the matrix is not invertible.
PointConfig apply_transform(const PointConfig& cfg, const MatrixQ& transform);

/// Random point of P^n with integer coordinates in [-height, height].
ProjPoint sample_point(Rng& rng, int ambient_dim, std::uint64_t height);

/// Random 3x4 screen with kernel spanned by the center.
MatrixQ sample_screen(Rng& rng, const ProjPoint& center, std::uint64_t height);

}  // namespace conelab
