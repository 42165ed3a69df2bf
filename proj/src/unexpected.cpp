#include "conelab/unexpected.hpp"

#include <algorithm>

namespace conelab {

namespace {

constexpr std::uint64_t kVertexTag = 0x766572746578ULL;
constexpr std::uint64_t kProjectionTag = 0x70726f6aULL;

void require_cone_input(const PointConfig& cfg) {
  if (cfg.ambient_dim() != 3) throw Error(ErrorKind::InvalidArgument, "cone properties are defined in P^3");
  if (cfg.size() < 4) throw Error(ErrorKind::InvalidArgument, "cone properties need at least 4 points");
}

ConeReport report_from_dims(const PointConfig& cfg, int d, std::vector<Index> dims, bool planar) {
  ConeReport r;
  r.d = d;
  r.trial_dims = std::move(dims);
  r.actual_dim = *std::min_element(r.trial_dims.begin(), r.trial_dims.end());
  r.consistent = std::all_of(r.trial_dims.begin(), r.trial_dims.end(),
                             [&](Index v) { return v == r.trial_dims.front(); });
  r.expected_dim = static_cast<long>(ideal_dim(cfg, d)) - binomial_small(d + 2, 3);
  r.clamped_expected = std::max(0L, r.expected_dim);
  r.unexpected = r.actual_dim > r.clamped_expected;
  r.defect = static_cast<long>(r.actual_dim) - r.expected_dim;
  r.planar = planar;
  if (r.unexpected && r.clamped_expected == 0 && !planar && d >= 2)
    r.improper_witness = skew_line_cover(cfg, static_cast<std::size_t>(d));
  return r;
}

}  // namespace

std::vector<ProjPoint> sample_vertices(const PointConfig& cfg, const GenericityProtocol& protocol) {
  if (protocol.trials < 1) throw Error(ErrorKind::InvalidArgument, "protocol needs at least one trial");
  const Rng root(protocol.seed);
  std::vector<ProjPoint> vertices;
  for (int t = 0; t < protocol.trials; ++t) {
    Rng rng = root.fork(kVertexTag, static_cast<std::uint64_t>(t));
    ProjPoint p;
    do {
      p = sample_point(rng, cfg.ambient_dim(), protocol.height);
    } while (cfg.contains(p));
    vertices.push_back(std::move(p));
  }
  return vertices;
}

ConeReport cone_property(const PointConfig& cfg, int d, const GenericityProtocol& protocol) {
  return cone_table(cfg, d, d, protocol).front();
}

std::vector<ConeReport> cone_table(const PointConfig& cfg, int d_min, int d_max,
                                   const GenericityProtocol& protocol) {
  require_cone_input(cfg);
  if (d_min < 1 || d_max < d_min) throw Error(ErrorKind::InvalidArgument, "degree range must satisfy 1 <= dmin <= dmax");
  const bool planar = is_degenerate(cfg);
  const std::vector<ProjPoint> vertices = sample_vertices(cfg, protocol);
  std::vector<ConeReport> table;
  for (int d = d_min; d <= d_max; ++d) {
    std::vector<Index> dims;
    for (const ProjPoint& p : vertices) dims.push_back(fat_ideal_dim_at_vertex(cfg, p, d, d));
    table.push_back(report_from_dims(cfg, d, std::move(dims), planar));
  }
  return table;
}

long cone_defect(const PointConfig& cfg, int d, const GenericityProtocol& protocol) {
  return cone_property(cfg, d, protocol).defect;
}

std::vector<std::pair<int, int>> factorizations(std::size_t n) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 2; a * a <= n; ++a)
    if (n % a == 0) out.emplace_back(static_cast<int>(a), static_cast<int>(n / a));
  return out;
}

ProjectionCIResult projection_ci_property(const PointConfig& cfg, const GenericityProtocol& protocol,
                                          std::optional<std::pair<int, int>> type_hint) {
  if (cfg.ambient_dim() != 3) throw Error(ErrorKind::InvalidArgument, "projection starts in P^3");
  if (protocol.trials < 1) throw Error(ErrorKind::InvalidArgument, "protocol needs at least one trial");
  ProjectionCIResult result;
  if (type_hint) {
    auto [a, b] = *type_hint;
    if (a > b) std::swap(a, b);
    result.tested_types = {{a, b}};
  } else {
    result.tested_types = factorizations(cfg.size());
    if (result.tested_types.empty())
      throw Error(ErrorKind::InvalidArgument, "configuration size has no factorization a*b with 2 <= a <= b");
  }

  const Rng root(protocol.seed);
  for (int t = 0; t < protocol.trials; ++t) {
    Rng rng = root.fork(kProjectionTag, static_cast<std::uint64_t>(t));
    ProjectionTrial trial;
    for (int attempt = 0;; ++attempt) {
      trial.center = sample_point(rng, 3, protocol.height);
      if (cfg.contains(trial.center)) continue;
      trial.screen = sample_screen(rng, trial.center, protocol.height);
      try {
        trial.image = project(cfg, trial.center, trial.screen);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CenterOnSecant || attempt >= 1) throw;
      }
    }
    for (const auto& [a, b] : result.tested_types) {
      try {
        trial.verdicts.push_back(is_complete_intersection(trial.image, a, b, protocol));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoFormAvailable) throw;
        CIVerdict none;
        none.type = {a, b};
        trial.verdicts.push_back(none);
      }
    }
    result.trials.push_back(std::move(trial));
  }

  for (std::size_t k = 0; k < result.tested_types.size(); ++k) {
    bool all = true;
    bool any = false;
    for (const ProjectionTrial& trial : result.trials) {
      all = all && trial.verdicts[k].certified;
      any = any || trial.verdicts[k].certified;
    }
    if (all != any) result.consistent = false;
    if (all && !result.type) result.type = result.tested_types[k];
  }
  return result;
}

CC2Verdict classify_cc2(const PointConfig& cfg) {
  if (cfg.ambient_dim() != 3) throw Error(ErrorKind::InvalidArgument, "C(2) classification is in P^3");
  if (cfg.size() < 6) throw Error(ErrorKind::Degenerate, "C(2) classification needs at least 6 points");
  if (is_degenerate(cfg)) throw Error(ErrorKind::Degenerate, "configuration lies in a plane");
  const std::vector<Line> lines = collinear_subsets(cfg, 3);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& l1 = lines[i];
      const Line& l2 = lines[j];
      if (l1.members.size() + l2.members.size() != cfg.size()) continue;
      std::vector<std::size_t> all;
      std::merge(l1.members.begin(), l1.members.end(), l2.members.begin(), l2.members.end(),
                 std::back_inserter(all));
      if (std::adjacent_find(all.begin(), all.end()) != all.end()) continue;
      if (!lines_skew(l1, l2)) continue;
      return CC2Verdict{true, std::make_pair(l1, l2)};
    }
  return {};
}

}  // namespace conelab
