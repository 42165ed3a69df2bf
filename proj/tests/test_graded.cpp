#include "conelab/catalog.hpp"
#include "conelab/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace conelab;

namespace {

/// d^alpha x^e evaluated at p, written out directly.
Rational derivative_value(const std::vector<int>& e, const Exponent& alpha, const VectorQ& p) {
  Rational v = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (alpha[i] > e[i]) return 0;
    for (int k = 0; k < alpha[i]; ++k) v *= e[i] - k;
    v *= oracle::power(p(static_cast<Index>(i)), e[i] - alpha[i]);
  }
  return v;
}

/// Forms of degree d through cfg with multiplicity m at p, from first principles.
Index oracle_fat_dim(const PointConfig& cfg, const ProjPoint& p, int m, int d) {
  const auto mons = oracle::monomials(4, d);
  std::vector<Exponent> orders;
  for (int a = 0; a < m; ++a)
    for (const auto& e : oracle::monomials(4, a)) orders.push_back({e[0], e[1], e[2], e[3]});
  MatrixQ rows(static_cast<Index>(cfg.size() + orders.size()), static_cast<Index>(mons.size()));
  for (std::size_t i = 0; i < cfg.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j)
      rows(static_cast<Index>(i), static_cast<Index>(j)) = derivative_value(mons[j], Exponent{}, cfg[i].rational());
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j)
      rows(static_cast<Index>(cfg.size() + i), static_cast<Index>(j)) = derivative_value(mons[j], orders[i], p.rational());
  return static_cast<Index>(mons.size()) - oracle::rank(rows);
}

PointConfig random_points(Rng& rng, int ambient, std::size_t n, std::int64_t h = 6) {
  std::vector<ProjPoint> pts;
  while (pts.size() < n) {
    const ProjPoint p = sample_point(rng, ambient, static_cast<std::uint64_t>(h));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return PointConfig(ambient, pts);
}

Form linear(std::initializer_list<long> c) {
  std::vector<std::pair<Rational, Exponent>> terms;
  int i = 0;
  for (long v : c) {
    Exponent e{};
    e[static_cast<std::size_t>(i++)] = 1;
    terms.push_back({Rational(v), e});
  }
  return make_form(4, 1, terms);
}

}  // namespace

TEST_CASE("monomial bases") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) {
      const MonomialBasis b(n, d);
      CHECK(b.size() == binomial_small(d + n - 1, n - 1));
      for (Index i = 0; i < b.size(); ++i) {
        CHECK(b.index_of(b[i]) == i);
        int sum = 0;
        for (int v : b[i]) sum += v;
        CHECK(sum == d);
        if (i > 0) CHECK(b[i - 1] > b[i]);
      }
    }
  const MonomialBasis cubic(4, 3);
  CHECK(cubic[0] == Exponent{3, 0, 0, 0});
  CHECK(cubic[1] == Exponent{2, 1, 0, 0});
  CHECK(cubic[cubic.size() - 1] == Exponent{0, 0, 0, 3});
  CHECK(cubic.index_of({1, 1, 1, 1}) == -1);
}

TEST_CASE("condition matrix shapes") {
  const PointConfig one(3, {{2, -1, 0, 5}});
  const MatrixQ m = condition_matrix(one, 1);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 4);
  // Columns x0, x1, x2, x3 in that order.
  CHECK(m(0, 0) == 2);
  CHECK(m(0, 1) == -1);
  CHECK(m(0, 2) == 0);
  CHECK(m(0, 3) == 5);

  const ProjPoint p{1, 2, 3, 4};
  CHECK(condition_matrix(PointConfig(), 3, FatPoint{p, 3}).rows() == 10);
  for (int mult = 1; mult <= 7; ++mult)
    CHECK(condition_matrix(one, 6, FatPoint{p, mult}).rows() == 1 + binomial_small(mult + 2, 3));
}

TEST_CASE("order of vanishing above the degree kills everything") {
  Rng rng(41);
  for (int d = 0; d <= 5; ++d) {
    const ProjPoint p = sample_point(rng, 3, 50);
    CHECK(fat_ideal_dim(PointConfig(), p, d + 1, d) == 0);
    CHECK(fat_ideal_dim_at_vertex(PointConfig(), p, d + 1, d) == 0);
  }
}

TEST_CASE("ideal dimensions") {
  Rng rng(43);
  CHECK(ideal_dim(make_grid(3, 3, rng), 3) == 11);
  for (int d = 0; d <= 6; ++d) CHECK(ideal_dim(PointConfig(), d) == binomial_small(d + 3, 3));
  CHECK(ideal_dim(named("F4").config, 6) == 60);
}

TEST_CASE("ideal dimension agrees with the evaluation oracle") {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const int ambient = trial % 3 == 0 ? 2 : 3;
    const PointConfig cfg = random_points(rng, ambient, static_cast<std::size_t>(rng.between(1, 14)), 4);
    for (int d = 0; d <= 4; ++d) {
      CHECK(ideal_dim(cfg, d) == oracle::ideal_dim(cfg, d));
      CHECK(hilbert_function(cfg, d) == oracle::hilbert(cfg, d));
    }
  }
  for (const char* name : {"D4", "Z2"})
    for (int d = 1; d <= 4; ++d) CHECK(ideal_dim(named(name).config, d) == oracle::ideal_dim(named(name).config, d));
}

TEST_CASE("fat dimensions: derivative rows, vertex coordinates and the oracle agree") {
  Rng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const PointConfig cfg = random_points(rng, 3, static_cast<std::size_t>(rng.between(0, 12)), 5);
    const ProjPoint p = sample_point(rng, 3, 20);
    if (cfg.contains(p)) continue;
    const int d = static_cast<int>(rng.between(1, 5));
    const int m = static_cast<int>(rng.between(1, d + 1));
    CAPTURE(trial);
    const Index direct = fat_ideal_dim(cfg, p, m, d);
    CHECK(direct == fat_ideal_dim_at_vertex(cfg, p, m, d));
    CHECK(direct == oracle_fat_dim(cfg, p, m, d));
  }
  // Vertices with vanishing leading coordinates exercise the coordinate change.
  const PointConfig d4 = named("D4").config;
  for (const ProjPoint& p : {ProjPoint{0, 0, 3, 7}, ProjPoint{0, 1, 0, 0}, ProjPoint{0, 2, -5, 1}})
    for (int d = 2; d <= 4; ++d) CHECK(fat_ideal_dim(d4, p, d, d) == fat_ideal_dim_at_vertex(d4, p, d, d));
}

TEST_CASE("multiplicity zero means no conditions at the point") {
  const PointConfig d4 = named("D4").config;
  const ProjPoint p{3, 1, 4, 1};
  for (int d = 1; d <= 4; ++d) {
    CHECK(fat_ideal_dim(d4, p, 0, d) == ideal_dim(d4, d));
    CHECK(fat_ideal_dim_at_vertex(d4, p, 0, d) == ideal_dim(d4, d));
  }
}

TEST_CASE("published cone dimensions of F4 by both routes") {
  const PointConfig f4 = named("F4").config;
  const ProjPoint p = sample_vertices(f4, GenericityProtocol{}).front();
  const Index table[] = {0, 1, 3, 7, 13, 21};
  for (int d = 3; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(fat_ideal_dim_at_vertex(f4, p, d, d) == table[d - 3]);
    CHECK(fat_ideal_dim(f4, p, d, d) == table[d - 3]);
  }
}

TEST_CASE("four coplanar points admit the expected quadric cones") {
  const PointConfig planar(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}});
  CHECK(fat_ideal_dim(planar, ProjPoint{3, -2, 5, 7}, 2, 2) == 2);
}

TEST_CASE("h-vectors") {
  Rng rng(59);
  CHECK(h_vector(make_grid(3, 3, rng)) == HVector{1, 3, 5});
  const PointConfig collinear(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {1, 2, 0, 0}, {1, 3, 0, 0}});
  CHECK(h_vector(collinear) == HVector{1, 1, 1, 1, 1});
  CHECK(h_vector(PointConfig(3, {{1, 2, 3, 4}})) == HVector{1});
  CHECK(h_vector(PointConfig()).empty());

  const PointConfig z_prime = random_config(kind::OnSkewLines{{5, 5, 5}, 1}, rng);
  CHECK(z_prime.size() == 16);
  CHECK(h_vector(z_prime) == HVector{1, 3, 6, 3, 3});
}

TEST_CASE("complete intersection certificates") {
  const GenericityProtocol protocol;
  Rng rng(61);
  const PointConfig grid = make_grid(3, 3, rng);
  const ProjPoint center = sample_point(rng, 3, 1000);
  const PointConfig image = project(grid, center, sample_screen(rng, center, 1000));
  const CIVerdict v = is_complete_intersection(image, 3, 3, protocol);
  REQUIRE(v.certified);
  REQUIRE(v.certificate);
  CHECK(validate_ci_certificate(image, v.certificate->first, v.certificate->second));

  // Independent re-check of the certificate.
  const Form& f = v.certificate->first;
  const Form& g = v.certificate->second;
  for (const ProjPoint& p : image.points()) {
    CHECK(f(p) == 0);
    CHECK(g(p) == 0);
  }
  for (int t : {4, 5}) CHECK(oracle::rank(ideal_piece(f, g, t)) == binomial_small(t + 2, 2) - 9);

  const PointConfig f4_image = [&] {
    const ProjPoint c = sample_point(rng, 3, 1000);
    return project(named("F4").config, c, sample_screen(rng, c, 1000));
  }();
  const CIVerdict f4 = is_complete_intersection(f4_image, 4, 6, protocol);
  CHECK(f4.certified);
  CHECK(f4.type == std::pair{4, 6});
}

TEST_CASE("random planar points are not a complete intersection") {
  Rng rng(67);
  const PointConfig nine = random_points(rng, 2, 9, 1000);
  REQUIRE(h_vector(nine) == HVector{1, 2, 3, 3});
  const CIVerdict v = is_complete_intersection(nine, 3, 3, GenericityProtocol{});
  CHECK_FALSE(v.certified);
  CHECK(v.trials_used == 3);
  CHECK_FALSE(v.certificate.has_value());
}

TEST_CASE("complete intersection preconditions") {
  Rng rng(71);
  const PointConfig nine = random_points(rng, 2, 9, 1000);
  try {
    is_complete_intersection(nine, 2, 5, GenericityProtocol{});
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  try {
    is_complete_intersection(nine, 1, 9, GenericityProtocol{});
    FAIL("expected NoFormAvailable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoFormAvailable);
  }
}

TEST_CASE("a certificate for the wrong points does not validate") {
  const PointConfig a(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  const CIVerdict v = is_complete_intersection(a, 2, 2, GenericityProtocol{});
  REQUIRE(v.certified);
  const PointConfig b(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 3}});
  CHECK_FALSE(validate_ci_certificate(b, v.certificate->first, v.certificate->second));
}

TEST_CASE("residual complete intersections") {
  const GenericityProtocol protocol;
  Rng rng(73);

  // Two lines with four points each, a planar CI of type (2,4).
  const PointConfig two_lines(2, {{1, 0, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {1, 0, -1}, {1, 1, -1}, {1, 2, -1}, {1, 3, -1}});
  REQUIRE(is_complete_intersection(two_lines, 2, 4, protocol).certified);
  REQUIRE(h_vector(two_lines) == HVector{1, 2, 2, 2, 1});
  const CIVerdict rest = residual_ci_check(two_lines, {0, 1, 2, 3}, 4, 2, 1, protocol);
  CHECK(rest.certified);
  CHECK(rest.type == std::pair{1, 4});
  CHECK(h_vector(two_lines.without({0, 1, 2, 3})) == HVector{1, 1, 1, 1});

  const PointConfig f4 = named("F4").config;
  const ProjPoint c = sample_point(rng, 3, 1000);
  const PointConfig image = project(f4, c, sample_screen(rng, c, 1000));
  const auto quad = collinear_subsets(f4, 4).front().members;
  const CIVerdict v = residual_ci_check(image, quad, 4, 6, 1, protocol);
  CHECK(v.certified);
  CHECK(v.type == std::pair{4, 5});

  const PointConfig z2 = named("Z2").config;
  const PointConfig z2_image = project(z2, c, sample_screen(rng, c, 1000));
  for (const Line& l : collinear_subsets(z2, 4)) {
    const CIVerdict r = residual_ci_check(z2_image, l.members, 4, 4, 1, protocol);
    CHECK(r.certified);
    CHECK(r.type == std::pair{3, 4});
  }
}

TEST_CASE("multiplicity at a point") {
  const ProjPoint p{1, 1, 1, 1};
  const Form through_p = linear({1, -1, 0, 0}) * linear({0, 0, 1, -1});
  CHECK(multiplicity_at(through_p, p) == 2);
  CHECK(multiplicity_at(linear({1, 0, 0, 0}), p) == 0);
  CHECK(multiplicity_at(linear({1, -1, 0, 0}) * linear({1, 0, -1, 0}) * linear({0, 0, 1, -1}), p) == 3);
  CHECK_THROWS_AS(multiplicity_at(Form::zero(4, 3), p), Error);
}

TEST_CASE("form arithmetic against direct evaluation") {
  Rng rng(79);
  const Form f = linear({1, 2, -1, 3}) * linear({0, 1, 1, -2}) + linear({2, 0, 0, 1}) * linear({1, 1, 1, 1});
  for (int i = 0; i < 10; ++i) {
    VectorQ x(4);
    for (Index k = 0; k < 4; ++k) x(k) = Rational(rng.between(-9, 9), rng.between(1, 3));
    const Rational l1 = x(0) + 2 * x(1) - x(2) + 3 * x(3);
    const Rational l2 = x(1) + x(2) - 2 * x(3);
    const Rational l3 = 2 * x(0) + x(3);
    const Rational l4 = x(0) + x(1) + x(2) + x(3);
    CHECK(f.evaluate(x) == l1 * l2 + l3 * l4);
    // d/dx3 of the same expression
    CHECK(f.derivative(3).evaluate(x) == 3 * l2 - 2 * l1 + l4 + l3);
  }
}
