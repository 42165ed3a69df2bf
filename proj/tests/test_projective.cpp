#include "conelab/catalog.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace conelab;

namespace {

Line line_through(const ProjPoint& a, const ProjPoint& b) { return Line{a, b, {}}; }

std::set<std::vector<std::size_t>> member_sets(const std::vector<Line>& lines) {
  std::set<std::vector<std::size_t>> out;
  for (const Line& l : lines) out.insert(l.members);
  return out;
}

MatrixQ random_invertible(Rng& rng, int n) {
  for (;;) {
    MatrixQ t = oracle::random_matrix(rng, n, n, 3);
    if (oracle::rank(t) == n) return t;
  }
}

}  // namespace

TEST_CASE("canonical form is scaling invariant and idempotent") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    VectorQ v(4);
    for (Index k = 0; k < 4; ++k) v(k) = Rational(rng.between(-9, 9), rng.between(1, 5));
    if (v.isZero()) continue;
    const ProjPoint p(v);
    const Rational lambda(rng.between(1, 7) * (i % 2 ? 1 : -1), rng.between(1, 7));
    CHECK(ProjPoint(VectorQ(v * lambda)) == p);
    CHECK(ProjPoint(p.rational()) == p);
    Integer g = 0;
    for (Index k = 0; k < 4; ++k) g = gcd(g, p[k]);
    CHECK(g == 1);
    Index first = 0;
    while (p[first] == 0) ++first;
    CHECK(p[first] > 0);
  }
  VectorQ half(4);
  half << Rational(1, 2), 1, 0, 0;
  CHECK(ProjPoint(half) == ProjPoint({1, 2, 0, 0}));
  CHECK(ProjPoint({-2, 4, 0, -6}) == ProjPoint({1, -2, 0, 3}));
  CHECK_THROWS_AS(ProjPoint({0, 0, 0, 0}), Error);
}

TEST_CASE("configurations reject duplicates") {
  CHECK_THROWS_AS(PointConfig(3, {{1, 0, 0, 0}, {2, 0, 0, 0}}), Error);
  try {
    PointConfig(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {-3, 0, 0, 0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicatePoint);
  }
}

TEST_CASE("collinearity census matches brute force on the catalog") {
  for (const std::string& name : catalog_names()) {
    const PointConfig cfg = named(name).config;
    for (std::size_t k : {3u, 4u, 5u}) {
      CAPTURE(name);
      CAPTURE(k);
      const auto lines = collinear_subsets(cfg, k);
      CHECK(member_sets(lines) == oracle::collinear_sets(cfg, k));
      for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i - 1].members < lines[i].members);
      for (const Line& l : lines)
        for (std::size_t m : l.members) CHECK(l.contains(cfg[m]));
    }
  }
}

TEST_CASE("published collinearity counts") {
  const PointConfig f4 = named("F4").config;
  CHECK(collinear_subsets(f4, 4).size() == 18);
  CHECK(collinear_subsets(f4, 5).empty());
  for (const Line& l : collinear_subsets(f4, 4)) CHECK(l.members.size() == 4);
  const PointConfig d4 = named("D4").config;
  CHECK(collinear_subsets(d4, 3).size() == 16);
  CHECK(collinear_subsets(d4, 4).empty());
  CHECK(collinear_subsets(named("Z2").config, 4).size() == 4);
}

TEST_CASE("collinear k must be at least 3") {
  CHECK_THROWS_AS(collinear_subsets(named("D4").config, 2), Error);
}

TEST_CASE("incidence is invariant under projective transformations") {
  Rng rng(11);
  for (const char* name : {"F4", "D4", "Z2"}) {
    const PointConfig cfg = named(name).config;
    const PointConfig moved = apply_transform(cfg, random_invertible(rng, 4));
    CHECK(member_sets(collinear_subsets(moved, 3)) == member_sets(collinear_subsets(cfg, 3)));
  }
}

TEST_CASE("linear general position") {
  const PointConfig frame(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}});
  CHECK(is_linear_general_position(frame).general);

  const auto f4 = is_linear_general_position(named("F4").config);
  CHECK_FALSE(f4.general);
  REQUIRE(f4.witness.size() == 3);
  std::vector<ProjPoint> triple;
  for (std::size_t i : f4.witness) triple.push_back(named("F4").config[i]);
  CHECK(oracle::collinear(triple));

  const PointConfig repeated(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK_FALSE(is_linear_general_position(repeated).general);

  const PointConfig coplanar(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}});
  const auto v = is_linear_general_position(coplanar);
  CHECK_FALSE(v.general);
  CHECK(v.witness.size() == 4);
}

TEST_CASE("skew lines") {
  const Line a = line_through({1, 0, 0, 0}, {0, 1, 0, 0});
  const Line b = line_through({0, 0, 1, 0}, {0, 0, 0, 1});
  CHECK(lines_skew(a, b));
  CHECK_FALSE(lines_skew(a, line_through({1, 0, 0, 0}, {0, 0, 1, 0})));
  // Coplanar, disjoint in the given points but meeting in the plane x3 = 0.
  CHECK_FALSE(lines_skew(line_through({1, 0, 0, 0}, {0, 1, 0, 0}), line_through({0, 0, 1, 0}, {1, 1, 1, 0})));
}

TEST_CASE("grid detection on generated grids") {
  Rng rng(17);
  for (auto [a, b] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 4}, {2, 5}}) {
    const PointConfig grid = make_grid(a, b, rng);
    const auto w = detect_grid(grid);
    REQUIRE(w.has_value());
    CHECK(w->a == static_cast<std::size_t>(a));
    CHECK(w->b == static_cast<std::size_t>(b));
    CHECK(validate_grid(grid, *w));
    for (std::size_t i = 0; i < w->family_a.size(); ++i)
      for (std::size_t j = i + 1; j < w->family_a.size(); ++j) CHECK(lines_skew(w->family_a[i], w->family_a[j]));
  }
  const PointConfig explicit_grid = make_grid(GridParameters{{{1, 0}, {0, 1}, {1, 1}}, {{1, 0}, {0, 1}, {1, -1}}});
  CHECK(detect_grid(explicit_grid).has_value());
}

TEST_CASE("validate_grid rejects a corrupted witness") {
  Rng rng(23);
  const PointConfig grid = make_grid(3, 3, rng);
  auto w = detect_grid(grid);
  REQUIRE(w);
  std::swap(w->family_a[0], w->family_b[0]);
  CHECK_FALSE(validate_grid(grid, *w));
}

TEST_CASE("catalog configurations are not grids") {
  for (const char* name : {"F4", "D4", "Z1", "Z2", "Z4"}) CHECK_FALSE(detect_grid(named(name).config).has_value());
}

TEST_CASE("four coplanar points are not a (2,2)-grid") {
  const PointConfig square(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}});
  CHECK_FALSE(detect_grid(square).has_value());
  // Four points in general position in P^3 are a (2,2)-grid.
  const PointConfig tetra(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(detect_grid(tetra).has_value());
}

TEST_CASE("projection from a sampled center") {
  Rng rng(29);
  const PointConfig grid = make_grid(3, 3, rng);
  const ProjPoint center = sample_point(rng, 3, 1000);
  const MatrixQ screen = sample_screen(rng, center, 1000);
  CHECK(oracle::rank(screen) == 3);
  CHECK((screen * center.rational()).isZero());
  const PointConfig image = project(grid, center, screen);
  CHECK(image.size() == grid.size());
  CHECK(image.ambient_dim() == 2);
  CHECK(h_vector(image) == HVector{1, 2, 3, 2, 1});
  for (int t = 0; t <= 5; ++t) CHECK(hilbert_function(image, t) == oracle::hilbert(image, t));
}

TEST_CASE("the image's invariants do not depend on the screen") {
  Rng rng(31);
  for (const char* name : {"F4", "Z2", "D4"}) {
    const PointConfig cfg = named(name).config;
    const ProjPoint center = sample_point(rng, 3, 1000);
    const PointConfig first = project(cfg, center, sample_screen(rng, center, 1000));
    const PointConfig second = project(cfg, center, sample_screen(rng, center, 1000));
    CHECK(h_vector(first) == h_vector(second));
  }
}

TEST_CASE("projection errors") {
  const PointConfig cfg(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  const ProjPoint on_secant{1, 1, 0, 0};
  Rng rng(1);
  const MatrixQ screen = sample_screen(rng, on_secant, 10);
  try {
    project(cfg, on_secant, screen);
    FAIL("expected CenterOnSecant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CenterOnSecant);
  }
  const ProjPoint center{0, 0, 0, 1};
  MatrixQ bad = MatrixQ::Zero(3, 4);
  bad(0, 0) = 1;
  bad(1, 1) = 1;
  bad(2, 3) = 1;  // does not kill the center
  try {
    project(cfg, center, bad);
    FAIL("expected BadScreen");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadScreen);
  }
}

TEST_CASE("sampled centers avoid secants of every catalog entry") {
  const GenericityProtocol protocol;
  for (const std::string& name : catalog_names()) {
    const auto result = projection_ci_property(named(name).config, protocol);
    CHECK(result.trials.size() == static_cast<std::size_t>(protocol.trials));
    for (const auto& t : result.trials) CHECK(t.image.size() == named(name).config.size());
  }
}

TEST_CASE("projective transformations") {
  const PointConfig d4 = named("D4").config;
  CHECK(apply_transform(d4, MatrixQ::Identity(4, 4)).points() == d4.points());
  MatrixQ singular = MatrixQ::Identity(4, 4);
  singular(3, 3) = 0;
  try {
    apply_transform(d4, singular);
    FAIL("expected SingularTransform");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularTransform);
  }
  const MatrixQ m = z4_to_d4_matrix();
  CHECK(apply_transform(named("Z4").config, m).same_set(d4));
  CHECK(apply_transform(d4, m).same_set(named("Z4").config));
}

TEST_CASE("skew line covers") {
  Rng rng(37);
  const PointConfig cfg = random_config(kind::OnSkewLines{{4, 3, 3}, 0}, rng);
  const auto cover = skew_line_cover(cfg, 3);
  REQUIRE(cover);
  std::size_t total = 0;
  for (const Line& l : *cover) total += l.members.size();
  CHECK(total == cfg.size());
  CHECK_FALSE(skew_line_cover(cfg, 2).has_value());
}
