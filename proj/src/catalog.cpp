#include "conelab/catalog.hpp"

#include "conelab/catalog_data.hpp"
#include "conelab/config_io.hpp"
#include "conelab/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace conelab {

namespace {

struct EntrySpec {
  std::string_view name;
  std::string_view provenance;
  std::uint64_t hash;
  std::vector<KnownFact> facts;
};

const std::vector<EntrySpec>& entry_specs() {
  static const std::vector<EntrySpec> specs = {
      {"F4", "24 points from the F4 root system", 0x623ad2180f6682cbULL,
       {{"size", "24"},
        {"collinear>=4", "18"},
        {"collinear>=5", "0"},
        {"grid", "none"},
        {"cone_dims:3-8", "0,1,3,7,13,21"},
        {"clamped_expected:3-8", "0,0,0,4,12,21"},
        {"unexpected:3-8", "4,5,6,7"},
        {"projection_ci", "(4,6)"}}},
      {"D4", "Z3, 12 points from the D4 root system", 0xb56b254ac0c9c553ULL,
       {{"size", "12"},
        {"collinear>=3", "16"},
        {"collinear>=4", "0"},
        {"grid", "none"},
        {"unexpected:3-4", "3,4"},
        {"projection_ci", "(3,4)"}}},
      {"Z1", "20 points of F4 after removing a collinear quadruple", 0x0ac5065a15719d92ULL,
       {{"size", "20"}, {"grid", "none"}, {"projection_ci", "(4,5)"}}},
      {"Z2", "16 points of Z1 after removing a second collinear quadruple", 0x265c22b9bd94efbaULL,
       {{"size", "16"}, {"collinear>=4", "4"}, {"grid", "none"}, {"projection_ci", "(4,4)"}}},
      {"Z4", "12 points projectively equivalent to D4", 0x1338d829696f8a01ULL,
       {{"size", "12"}, {"grid", "none"}, {"projection_ci", "(3,4)"}}},
      {"B4", "16 B4 root directions e_i and e_i +- e_j (chosen convention)", 0xff571560bcfe992bULL,
       {{"size", "16"}, {"projection_ci", "none"}}},
  };
  return specs;
}

std::string canonical_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "Z3" || upper == "Z_3") return "D4";
  if (upper == "ZF4" || upper == "Z_F4") return "F4";
  return upper;
}

std::string join(const std::vector<long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

std::pair<int, int> parse_range(const std::string& property) {
  const auto colon = property.find(':');
  const auto dash = property.find('-', colon);
  return {std::stoi(property.substr(colon + 1, dash - colon - 1)), std::stoi(property.substr(dash + 1))};
}

std::string format_type(const std::optional<std::pair<int, int>>& t) {
  if (!t) return "none";
  return "(" + std::to_string(t->first) + "," + std::to_string(t->second) + ")";
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& s : entry_specs()) names.emplace_back(s.name);
  return names;
}

CatalogEntry named(std::string_view name) {
  const std::string key = canonical_name(name);
  for (const auto& spec : entry_specs()) {
    if (spec.name != key) continue;
    const auto file = std::find_if(catalog_data::kFiles.begin(), catalog_data::kFiles.end(),
                                   [&](const auto& f) { return f.name == key; });
    CatalogEntry entry{key, parse_config(file->text, key), std::string(spec.provenance), spec.facts, spec.hash};
    if (spec.hash != 0 && config_hash(entry.config) != spec.hash)
      throw Error(ErrorKind::Parse, "catalog file for " + key + " does not match its expected hash");
    return entry;
  }
  throw Error(ErrorKind::UnknownName, "unknown configuration '" + std::string(name) + "'");
}

std::vector<FactCheck> verify_known_facts(const CatalogEntry& entry, const GenericityProtocol& protocol) {
  const PointConfig& cfg = entry.config;
  std::vector<FactCheck> checks;
  std::map<std::pair<int, int>, std::vector<ConeReport>> tables;
  auto table = [&](const std::string& property) -> const std::vector<ConeReport>& {
    const auto range = parse_range(property);
    auto it = tables.find(range);
    if (it == tables.end()) it = tables.emplace(range, cone_table(cfg, range.first, range.second, protocol)).first;
    return it->second;
  };

  for (const KnownFact& fact : entry.known_facts) {
    std::string observed;
    const std::string& p = fact.property;
    if (p == "size") {
      observed = std::to_string(cfg.size());
    } else if (p.rfind("collinear>=", 0) == 0) {
      observed = std::to_string(collinear_subsets(cfg, std::stoul(p.substr(11))).size());
    } else if (p == "grid") {
      const auto w = detect_grid(cfg);
      observed = w ? format_type(std::make_pair(static_cast<int>(w->a), static_cast<int>(w->b))) : "none";
    } else if (p.rfind("cone_dims:", 0) == 0) {
      std::vector<long> v;
      for (const auto& r : table(p)) v.push_back(static_cast<long>(r.actual_dim));
      observed = join(v);
    } else if (p.rfind("clamped_expected:", 0) == 0) {
      std::vector<long> v;
      for (const auto& r : table(p)) v.push_back(r.clamped_expected);
      observed = join(v);
    } else if (p.rfind("unexpected:", 0) == 0) {
      std::vector<long> v;
      for (const auto& r : table(p))
        if (r.unexpected) v.push_back(r.d);
      observed = join(v);
    } else if (p == "projection_ci") {
      observed = format_type(projection_ci_property(cfg, protocol).type);
    } else {
      observed = "unknown property";
    }
    checks.push_back(FactCheck{fact, observed, observed == fact.value});
  }
  return checks;
}

MatrixQ z4_to_d4_matrix() {
  MatrixQ m(4, 4);
  m << 1, 0, 0, 1,
       1, 0, 0, -1,
       0, 1, 1, 0,
       0, 1, -1, 0;
  return m;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

bool proportional(const P1Point& x, const P1Point& y) { return x.first * y.second == x.second * y.first; }

void require_distinct(const std::vector<P1Point>& params) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i].first == 0 && params[i].second == 0)
      throw Error(ErrorKind::DegenerateParameters, "zero ruling parameter");
    for (std::size_t j = 0; j < i; ++j)
      if (proportional(params[i], params[j]))
        throw Error(ErrorKind::DegenerateParameters, "repeated ruling parameter");
  }
}

std::vector<P1Point> random_p1_points(std::size_t count, Rng& rng, std::uint64_t height) {
  std::vector<P1Point> out;
  const auto h = static_cast<std::int64_t>(height);
  for (int attempts = 0; out.size() < count; ++attempts) {
    if (attempts > 10000) throw Error(ErrorKind::DegenerateParameters, "could not draw distinct parameters");
    P1Point p{rng.between(-h, h), rng.between(-h, h)};
    if (p.first == 0 && p.second == 0) continue;
    if (std::any_of(out.begin(), out.end(), [&](const P1Point& q) { return proportional(p, q); })) continue;
    out.push_back(p);
  }
  return out;
}

VectorZ combine(const P1Point& t, const ProjPoint& p, const ProjPoint& q) {
  return Integer(t.first) * p.coords() + Integer(t.second) * q.coords();
}

// Random lines in P^3 that are pairwise skew, each as two spanning points.
std::vector<std::pair<ProjPoint, ProjPoint>> random_skew_lines(std::size_t count, Rng& rng,
                                                               std::uint64_t height) {
  std::vector<std::pair<ProjPoint, ProjPoint>> lines;
  for (int attempts = 0; lines.size() < count; ++attempts) {
    if (attempts > 10000) throw Error(ErrorKind::DegenerateParameters, "could not draw skew lines");
    ProjPoint p = sample_point(rng, 3, height);
    ProjPoint q = sample_point(rng, 3, height);
    if (p == q) continue;
    Line candidate{p, q, {}};
    bool ok = true;
    for (const auto& [u, v] : lines) ok = ok && lines_skew(Line{u, v, {}}, candidate);
    if (ok) lines.emplace_back(std::move(p), std::move(q));
  }
  return lines;
}

bool on_any(const std::vector<std::pair<ProjPoint, ProjPoint>>& lines, const ProjPoint& p) {
  return std::any_of(lines.begin(), lines.end(), [&](const auto& l) { return Line{l.first, l.second, {}}.contains(p); });
}

}  // namespace

PointConfig make_grid(const GridParameters& params) {
  if (params.first.size() < 2 || params.second.size() < params.first.size())
    throw Error(ErrorKind::InvalidArgument, "grid shape must satisfy 2 <= a <= b");
  require_distinct(params.first);
  require_distinct(params.second);
  std::vector<ProjPoint> pts;
  for (const auto& [s, t] : params.first)
    for (const auto& [u, v] : params.second) pts.push_back(ProjPoint{s * u, s * v, t * u, t * v});
  const std::string label = "grid(" + std::to_string(params.first.size()) + "," +
                            std::to_string(params.second.size()) + ")";
  return PointConfig(3, std::move(pts), label);
}

PointConfig make_grid(int a, int b, Rng& rng, std::uint64_t height) {
  if (a < 2 || b < a) throw Error(ErrorKind::InvalidArgument, "grid shape must satisfy 2 <= a <= b");
  if (a >= 3) {
    GridParameters params{random_p1_points(static_cast<std::size_t>(a), rng, height),
                          random_p1_points(static_cast<std::size_t>(b), rng, height)};
    return make_grid(params);
  }
  // (2,b): b points on each of two skew lines, the j-th points joined.
  const auto lines = random_skew_lines(2, rng, height);
  const auto s1 = random_p1_points(static_cast<std::size_t>(b), rng, height);
  const auto s2 = random_p1_points(static_cast<std::size_t>(b), rng, height);
  std::vector<ProjPoint> pts;
  for (const auto& t : s1) pts.emplace_back(combine(t, lines[0].first, lines[0].second));
  for (const auto& t : s2) pts.emplace_back(combine(t, lines[1].first, lines[1].second));
  return PointConfig(3, std::move(pts), "grid(2," + std::to_string(b) + ")");
}

PointConfig random_config(const ConfigKind& kind, Rng& rng, std::uint64_t height) {
  constexpr int kMaxAttempts = 10000;
  return std::visit(
      [&](const auto& k) -> PointConfig {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, kind::GeneralPosition>) {
          std::vector<ProjPoint> pts;
          for (int attempts = 0; pts.size() < k.n; ++attempts) {
            if (attempts > kMaxAttempts) throw Error(ErrorKind::DegenerateParameters, "general position sampling failed");
            ProjPoint p = sample_point(rng, 3, height);
            std::vector<ProjPoint> trial = pts;
            trial.push_back(p);
            if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
            if (is_linear_general_position(PointConfig(3, trial)).general) pts = std::move(trial);
          }
          return PointConfig(3, std::move(pts), "general(" + std::to_string(k.n) + ")");
        } else if constexpr (std::is_same_v<K, kind::OnSkewLines>) {
          std::vector<std::pair<ProjPoint, ProjPoint>> lines;
          std::vector<ProjPoint> pts;
          for (int attempts = 0;; ++attempts) {
            if (attempts > kMaxAttempts) throw Error(ErrorKind::DegenerateParameters, "skew line sampling failed");
            lines = random_skew_lines(k.counts.size(), rng, height);
            pts.clear();
            bool clash = false;
            for (std::size_t i = 0; i < lines.size() && !clash; ++i)
              for (const auto& t : random_p1_points(k.counts[i], rng, height)) {
                ProjPoint p(combine(t, lines[i].first, lines[i].second));
                // A point on two of the lines would change the incidence structure.
                clash = std::find(pts.begin(), pts.end(), p) != pts.end() ||
                        on_any({lines.begin(), lines.begin() + i}, p) || on_any({lines.begin() + i + 1, lines.end()}, p);
                if (clash) break;
                pts.push_back(std::move(p));
              }
            if (!clash) break;
          }
          std::string label = "skew(";
          for (std::size_t i = 0; i < k.counts.size(); ++i) label += (i ? "," : "") + std::to_string(k.counts[i]);
          for (std::size_t e = 0, attempts = 0; e < k.extra; ++attempts) {
            if (attempts > kMaxAttempts) throw Error(ErrorKind::DegenerateParameters, "extra point sampling failed");
            ProjPoint p = sample_point(rng, 3, height);
            if (std::find(pts.begin(), pts.end(), p) != pts.end() || on_any(lines, p)) continue;
            pts.push_back(std::move(p));
            ++e;
          }
          label += ")+" + std::to_string(k.extra);
          return PointConfig(3, std::move(pts), label);
        } else if constexpr (std::is_same_v<K, kind::Planar>) {
          std::array<ProjPoint, 3> frame;
          do {
            for (auto& f : frame) f = sample_point(rng, 3, height);
          } while (span_rank({&frame[0], &frame[1], &frame[2]}) != 3);
          std::vector<ProjPoint> pts;
          for (int attempts = 0; pts.size() < k.n; ++attempts) {
            if (attempts > kMaxAttempts) throw Error(ErrorKind::DegenerateParameters, "planar sampling failed");
            VectorZ v = VectorZ::Zero(4);
            for (const auto& f : frame) v += Integer(rng.between(-static_cast<std::int64_t>(height),
                                                                 static_cast<std::int64_t>(height))) * f.coords();
            if (v.isZero()) continue;
            ProjPoint p(v);
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
          }
          return PointConfig(3, std::move(pts), "planar(" + std::to_string(k.n) + ")");
        } else {
          const PointConfig grid = make_grid(k.a, k.b, rng, height);
          if (k.keep > grid.size()) throw Error(ErrorKind::InvalidArgument, "cannot keep more points than the grid has");
          std::vector<std::size_t> idx(grid.size());
          std::iota(idx.begin(), idx.end(), 0);
          for (std::size_t i = 0; i < k.keep; ++i) std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
          idx.resize(k.keep);
          std::sort(idx.begin(), idx.end());
          return grid.subset(idx, "ongrid(" + std::to_string(k.a) + "," + std::to_string(k.b) + ";" +
                                      std::to_string(k.keep) + ")");
        }
      },
      kind);
}

// ---------------------------------------------------------------------------
// Quartic cones

Form b3_plane_quartic(int i, const std::array<Rational, 4>& a) {
  if (i < 0 || i > 3) throw Error(ErrorKind::InvalidArgument, "plane index must be 0..3");
  std::array<int, 3> v{};
  for (int x = 0, n = 0; x < 4; ++x)
    if (x != i) v[static_cast<std::size_t>(n++)] = x;
  const int j = v[0], k = v[1], l = v[2];
  const Rational &aj = a[static_cast<std::size_t>(j)], &ak = a[static_cast<std::size_t>(k)],
                 &al = a[static_cast<std::size_t>(l)];
  auto mono = [&](int pj, int pk, int pl) {
    Exponent e{};
    e[static_cast<std::size_t>(j)] = pj;
    e[static_cast<std::size_t>(k)] = pk;
    e[static_cast<std::size_t>(l)] = pl;
    return e;
  };
  const Form f = make_form(4, 4,
                           {
                               {3 * aj * (ak * ak - al * al), mono(2, 1, 1)},
                               {3 * ak * (al * al - aj * aj), mono(1, 2, 1)},
                               {3 * al * (aj * aj - ak * ak), mono(1, 1, 2)},
                               {aj * aj * aj, mono(0, 3, 1)},
                               {-aj * aj * aj, mono(0, 1, 3)},
                               {ak * ak * ak, mono(1, 0, 3)},
                               {-ak * ak * ak, mono(3, 0, 1)},
                               {al * al * al, mono(3, 1, 0)},
                               {-al * al * al, mono(1, 3, 0)},
                           });
  if (f.is_zero()) throw Error(ErrorKind::ZeroForm, "plane quartic vanishes identically");
  return f;
}

Form f4_quartic_cone(const ProjPoint& q) {
  if (q.size() != 4) throw Error(ErrorKind::InvalidArgument, "vertex must be a point of P^3");
  const std::array<Rational, 4> a{Rational(q[0]), Rational(q[1]), Rational(q[2]), Rational(q[3])};
  auto part = [&](int i) {
    try {
      return b3_plane_quartic(i, a);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroForm) throw;
      return Form::zero(4, 4);
    }
  };
  const Form f = part(0) * (-a[0]) + part(1) * a[1] + part(2) * (-a[2]) + part(3) * a[3];
  if (f.is_zero()) throw Error(ErrorKind::ZeroForm, "quartic cone vanishes identically at this vertex");
  return f;
}

}  // namespace conelab
