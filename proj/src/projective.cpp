#include "conelab/projective.hpp"

#include "conelab/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace conelab {

// ---------------------------------------------------------------------------
// ProjPoint

namespace {

VectorZ canonical(VectorZ v) {
  Index lead = -1;
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0 && lead < 0) lead = i;
    g = gcd(g, v(i));
  }
  if (lead < 0) throw Error(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
  if (v(lead) < 0) g = -g;
  if (g != 1)
    for (Index i = 0; i < v.size(); ++i) v(i) /= g;
  return v;
}

}  // namespace

ProjPoint::ProjPoint(const VectorQ& coords) : coords_(canonical(primitive(coords))) {}

ProjPoint::ProjPoint(const VectorZ& coords) : coords_(canonical(coords)) {}

ProjPoint::ProjPoint(std::initializer_list<long> coords) {
  VectorZ v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (long c : coords) v(i++) = c;
  coords_ = canonical(std::move(v));
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords_.size() != b.coords_.size()) return false;
  for (Index i = 0; i < a.coords_.size(); ++i)
    if (a.coords_(i) != b.coords_(i)) return false;
  return true;
}

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
  for (Index i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_(i) < b.coords_(i)) return std::strong_ordering::less;
    if (b.coords_(i) < a.coords_(i)) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << '[';
  for (Index i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_(i);
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// PointConfig

PointConfig::PointConfig(int ambient_dim, std::vector<ProjPoint> points, std::string label)
    : ambient_dim_(ambient_dim), points_(std::move(points)), label_(std::move(label)) {
  if (ambient_dim_ != 2 && ambient_dim_ != 3)
    throw Error(ErrorKind::InvalidArgument, "ambient dimension must be 2 or 3");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].ambient_dim() != ambient_dim_)
      throw Error(ErrorKind::InvalidArgument,
                  "point " + std::to_string(i) + " has the wrong number of coordinates");
    for (std::size_t j = 0; j < i; ++j)
      if (points_[i] == points_[j])
        throw Error(ErrorKind::DuplicatePoint, "points " + std::to_string(j) + " and " +
                                                   std::to_string(i) + " coincide");
  }
}

bool PointConfig::contains(const ProjPoint& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

bool PointConfig::same_set(const PointConfig& other) const {
  if (ambient_dim_ != other.ambient_dim_ || size() != other.size()) return false;
  std::set<ProjPoint> a(points_.begin(), points_.end());
  std::set<ProjPoint> b(other.points_.begin(), other.points_.end());
  return a == b;
}

PointConfig PointConfig::subset(const std::vector<std::size_t>& indices, std::string label) const {
  std::vector<ProjPoint> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(points_.at(i));
  return PointConfig(ambient_dim_, std::move(pts), std::move(label));
}

PointConfig PointConfig::without(const std::vector<std::size_t>& indices, std::string label) const {
  std::vector<bool> drop(points_.size(), false);
  for (std::size_t i : indices) drop.at(i) = true;
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (!drop[i]) pts.push_back(points_[i]);
  return PointConfig(ambient_dim_, std::move(pts), std::move(label));
}

MatrixZ PointConfig::matrix() const {
  MatrixZ m(static_cast<Index>(points_.size()), ambient_dim_ + 1);
  for (std::size_t i = 0; i < points_.size(); ++i) m.row(static_cast<Index>(i)) = points_[i].coords().transpose();
  return m;
}

Index span_rank(const std::vector<const ProjPoint*>& points) {
  if (points.empty()) return 0;
  RowMatrixZ m(static_cast<Index>(points.size()), points.front()->size());
  for (std::size_t i = 0; i < points.size(); ++i) m.row(static_cast<Index>(i)) = points[i]->coords().transpose();
  return rank_integer(std::move(m));
}

Index span_rank(const PointConfig& cfg) {
  if (cfg.empty()) return 0;
  return rank_integer(RowMatrixZ(cfg.matrix()));
}

bool is_degenerate(const PointConfig& cfg) { return span_rank(cfg) < cfg.ambient_dim() + 1; }

// ---------------------------------------------------------------------------
// Incidence

namespace {

// The 2x2 minors of two spanning vectors; r lies on their line iff every
// 3x3 minor of (p, q, r) vanishes.
class LineMinors {
 public:
  LineMinors(const ProjPoint& p, const ProjPoint& q) : n_(p.size()), minors_(n_ * n_) {
    for (Index a = 0; a < n_; ++a)
      for (Index b = a + 1; b < n_; ++b) minors_[a * n_ + b] = p[a] * q[b] - p[b] * q[a];
  }

  bool contains(const ProjPoint& r) const {
    for (Index a = 0; a < n_; ++a)
      for (Index b = a + 1; b < n_; ++b)
        for (Index c = b + 1; c < n_; ++c)
          if (r[a] * m(b, c) - r[b] * m(a, c) + r[c] * m(a, b) != 0) return false;
    return true;
  }

 private:
  const Integer& m(Index a, Index b) const { return minors_[a * n_ + b]; }

  Index n_;
  std::vector<Integer> minors_;
};

Integer det4(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
  Eigen::Matrix<Integer, 4, 4> m;
  m.row(0) = a.coords().transpose();
  m.row(1) = b.coords().transpose();
  m.row(2) = c.coords().transpose();
  m.row(3) = d.coords().transpose();
  // Laplace expansion along the first row through 2x2 minors of rows 2,3.
  Integer result = 0;
  auto minor2 = [&](Index r0, Index c0, Index c1) {
    return m(r0, c0) * m(r0 + 1, c1) - m(r0, c1) * m(r0 + 1, c0);
  };
  // Sum over complementary column pairs (Laplace on rows {0,1} vs {2,3}).
  const Index pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const int sign[6] = {1, -1, 1, 1, -1, 1};
  for (int k = 0; k < 6; ++k) {
    const Index c0 = pairs[k][0], c1 = pairs[k][1];
    const Index d0 = pairs[5 - k][0], d1 = pairs[5 - k][1];
    result += sign[k] * minor2(0, c0, c1) * minor2(2, d0, d1);
  }
  return result;
}

}  // namespace

bool Line::contains(const ProjPoint& p) const { return LineMinors(first, second).contains(p); }

std::vector<Line> maximal_lines(const PointConfig& cfg, std::size_t min_size) {
  std::vector<Line> lines;
  const std::size_t n = cfg.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const LineMinors line(cfg[i], cfg[j]);
      std::vector<std::size_t> members{i, j};
      bool first_pair = true;
      for (std::size_t k = 0; k < n && first_pair; ++k) {
        if (k == i || k == j || !line.contains(cfg[k])) continue;
        // Each line is reported once, from its two smallest members.
        if (k < j) first_pair = false;
        else members.push_back(k);
      }
      if (!first_pair || members.size() < min_size) continue;
      std::sort(members.begin(), members.end());
      lines.push_back(Line{cfg[i], cfg[j], std::move(members)});
    }
  }
  std::sort(lines.begin(), lines.end(),
            [](const Line& a, const Line& b) { return a.members < b.members; });
  return lines;
}

std::vector<Line> collinear_subsets(const PointConfig& cfg, std::size_t k) {
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "collinear subsets need k >= 3");
  return maximal_lines(cfg, k);
}

GeneralPositionVerdict is_linear_general_position(const PointConfig& cfg) {
  if (cfg.ambient_dim() != 3)
    throw Error(ErrorKind::InvalidArgument, "linear general position is checked in P^3");
  const std::size_t n = cfg.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const LineMinors line(cfg[i], cfg[j]);
      for (std::size_t k = j + 1; k < n; ++k)
        if (line.contains(cfg[k])) return {false, {i, j, k}};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (det4(cfg[i], cfg[j], cfg[k], cfg[l]) == 0) return {false, {i, j, k, l}};
  return {};
}

bool lines_skew(const Line& l1, const Line& l2) {
  if (l1.first.size() != 4 || l2.first.size() != 4)
    throw Error(ErrorKind::InvalidArgument, "skewness is defined for lines in P^3");
  return det4(l1.first, l1.second, l2.first, l2.second) != 0;
}

// ---------------------------------------------------------------------------
// Grids

namespace {

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

std::size_t common_count(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t c = 0;
  for (std::size_t x : a)
    if (std::binary_search(b.begin(), b.end(), x)) ++c;
  return c;
}

// Exact cover of {0..n-1} by `count` pairwise-skew candidate lines. Calls
// `accept` on each complete cover; stops when it returns true.
template <typename Accept>
bool skew_cover(const std::vector<Line>& candidates, std::size_t n, std::size_t count,
                std::vector<std::size_t>& chosen, std::vector<bool>& covered, Accept&& accept) {
  if (chosen.size() == count) {
    for (bool c : covered)
      if (!c) return false;
    return accept(chosen);
  }
  std::size_t first_free = 0;
  while (first_free < n && covered[first_free]) ++first_free;
  if (first_free == n) return false;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const Line& line = candidates[c];
    if (!std::binary_search(line.members.begin(), line.members.end(), first_free)) continue;
    bool ok = true;
    for (std::size_t m : line.members) ok = ok && !covered[m];
    for (std::size_t prior : chosen) ok = ok && lines_skew(candidates[prior], line);
    if (!ok) continue;
    for (std::size_t m : line.members) covered[m] = true;
    chosen.push_back(c);
    if (skew_cover(candidates, n, count, chosen, covered, accept)) return true;
    chosen.pop_back();
    for (std::size_t m : line.members) covered[m] = false;
  }
  return false;
}

std::vector<Line> lines_of_size(const std::vector<Line>& census, std::size_t size) {
  std::vector<Line> out;
  for (const Line& l : census)
    if (l.members.size() == size) out.push_back(l);
  return out;
}

}  // namespace

std::optional<std::vector<Line>> skew_line_cover(const PointConfig& cfg, std::size_t count,
                                                 std::size_t min_size) {
  if (cfg.ambient_dim() != 3) throw Error(ErrorKind::InvalidArgument, "skew covers live in P^3");
  if (count == 0 || cfg.empty()) return std::nullopt;
  const std::vector<Line> candidates = maximal_lines(cfg, std::max<std::size_t>(min_size, 2));
  std::optional<std::vector<Line>> found;
  std::vector<std::size_t> chosen;
  std::vector<bool> covered(cfg.size(), false);
  skew_cover(candidates, cfg.size(), count, chosen, covered, [&](const std::vector<std::size_t>& pick) {
    std::vector<Line> lines;
    for (std::size_t c : pick) lines.push_back(candidates[c]);
    found = std::move(lines);
    return true;
  });
  return found;
}

bool validate_grid(const PointConfig& cfg, const GridWitness& w) {
  if (cfg.ambient_dim() != 3 || w.a < 2 || w.a > w.b || w.a * w.b != cfg.size()) return false;
  if (w.family_a.size() != w.a || w.family_b.size() != w.b) return false;
  auto check_family = [&](const std::vector<Line>& family, std::size_t per_line) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      const Line& l = family[i];
      if (l.members.size() != per_line) return false;
      for (std::size_t m : l.members)
        if (m >= cfg.size() || !l.contains(cfg[m])) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (!lines_skew(family[j], l)) return false;
    }
    return true;
  };
  if (!check_family(w.family_a, w.b) || !check_family(w.family_b, w.a)) return false;
  std::vector<int> hits(cfg.size(), 0);
  for (const Line& la : w.family_a)
    for (const Line& lb : w.family_b) {
      if (common_count(la.members, lb.members) != 1) return false;
      for (std::size_t m : la.members)
        if (std::binary_search(lb.members.begin(), lb.members.end(), m)) ++hits[m];
    }
  // Every configuration point is exactly one intersection point.
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::optional<GridWitness> detect_grid(const PointConfig& cfg) {
  if (cfg.ambient_dim() != 3)
    throw Error(ErrorKind::InvalidArgument, "grid detection needs a configuration in P^3");
  const std::size_t n = cfg.size();
  if (n < 4) throw Error(ErrorKind::InvalidArgument, "grid detection needs at least 4 points");
  const std::vector<Line> census = maximal_lines(cfg, 2);

  for (std::size_t a = 2; a * a <= n; ++a) {
    if (n % a != 0) continue;
    const std::size_t b = n / a;
    const std::vector<Line> cand_a = lines_of_size(census, b);
    const std::vector<Line> cand_b_all = lines_of_size(census, a);
    if (cand_a.size() < a || cand_b_all.size() < b) continue;

    std::optional<GridWitness> found;
    std::vector<std::size_t> chosen_a;
    std::vector<bool> covered_a(n, false);
    skew_cover(cand_a, n, a, chosen_a, covered_a, [&](const std::vector<std::size_t>& fam_a) {
      std::vector<Line> family_a;
      for (std::size_t c : fam_a) family_a.push_back(cand_a[c]);
      std::vector<Line> cand_b;
      for (const Line& l : cand_b_all) {
        bool meets_all = true;
        for (const Line& la : family_a) meets_all = meets_all && common_count(l.members, la.members) == 1;
        if (meets_all) cand_b.push_back(l);
      }
      std::vector<std::size_t> chosen_b;
      std::vector<bool> covered_b(n, false);
      return skew_cover(cand_b, n, b, chosen_b, covered_b, [&](const std::vector<std::size_t>& fam_b) {
        GridWitness w{a, b, family_a, {}};
        for (std::size_t c : fam_b) w.family_b.push_back(cand_b[c]);
        std::sort(w.family_a.begin(), w.family_a.end(),
                  [](const Line& x, const Line& y) { return x.members < y.members; });
        std::sort(w.family_b.begin(), w.family_b.end(),
                  [](const Line& x, const Line& y) { return x.members < y.members; });
        if (!validate_grid(cfg, w)) return false;
        found = std::move(w);
        return true;
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Maps

PointConfig project(const PointConfig& cfg, const ProjPoint& center, const MatrixQ& screen) {
  if (cfg.ambient_dim() != 3 || center.size() != 4)
    throw Error(ErrorKind::InvalidArgument, "projection is from P^3");
  if (screen.rows() != 3 || screen.cols() != 4)
    throw Error(ErrorKind::BadScreen, "screen must be a 3x4 matrix");
  if (rank(screen) != 3) throw Error(ErrorKind::BadScreen, "screen must have rank 3");
  const VectorQ image_of_center = screen * center.rational();
  if (!image_of_center.isZero()) throw Error(ErrorKind::BadScreen, "screen kernel must be the center");

  std::vector<ProjPoint> images;
  images.reserve(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const VectorQ v = screen * cfg[i].rational();
    if (v.isZero())
      throw Error(ErrorKind::CenterOnSecant, "center coincides with point " + std::to_string(i));
    ProjPoint img(v);
    for (std::size_t j = 0; j < images.size(); ++j)
      if (images[j] == img)
        throw Error(ErrorKind::CenterOnSecant, "center lies on the secant through points " +
                                                   std::to_string(j) + " and " + std::to_string(i));
    images.push_back(std::move(img));
  }
  return PointConfig(2, std::move(images), cfg.label().empty() ? "" : "proj(" + cfg.label() + ")");
}

PointConfig apply_transform(const PointConfig& cfg, const MatrixQ& transform) {
  const Index n = cfg.ambient_dim() + 1;
  if (transform.rows() != n || transform.cols() != n)
    throw Error(ErrorKind::InvalidArgument, "transform has the wrong size");
  if (rank(transform) < n) throw Error(ErrorKind::SingularTransform, "transform is singular");
  std::vector<ProjPoint> pts;
  pts.reserve(cfg.size());
  for (const ProjPoint& p : cfg.points()) pts.emplace_back(VectorQ(transform * p.rational()));
  return PointConfig(cfg.ambient_dim(), std::move(pts), cfg.label());
}

ProjPoint sample_point(Rng& rng, int ambient_dim, std::uint64_t height) {
  VectorQ v(ambient_dim + 1);
  do {
    for (Index i = 0; i < v.size(); ++i) v(i) = sample_rational(rng, height);
  } while (v.isZero());
  return ProjPoint(v);
}

MatrixQ sample_screen(Rng& rng, const ProjPoint& center, std::uint64_t height) {
  Index lead = 0;
  while (center[lead] == 0) ++lead;
  const VectorQ c = center.rational();
  MatrixQ screen(3, 4);
  do {
    for (Index i = 0; i < 3; ++i) {
      VectorQ r(4);
      for (Index j = 0; j < 4; ++j) r(j) = sample_rational(rng, height);
      // c_lead * r - (r.c) e_lead annihilates c.
      VectorQ s = c(lead) * r;
      s(lead) -= r.dot(c);
      screen.row(i) = s.transpose();
    }
  } while (rank(screen) != 3);
  return screen;
}

}  // namespace conelab
