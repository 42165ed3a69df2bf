#pragma once

// Unexpected cone properties C(d), cone defects and the property that a
// general plane projection is a complete intersection.
//
// "General" points and planes are realized by seeded sampling. The generic
// value of dim [I_Z cap I_P^d]_d is upper semicontinuous in P, so the
// minimum over trials is reported and any disagreement between trials is
// surfaced through `consistent`.

#include "conelab/graded.hpp"

#include <optional>
#include <vector>

namespace conelab {

struct ConeReport {
  int d = 0;
  Index actual_dim = 0;        // min over trials of dim [I_Z cap I_P^d]_d
  long expected_dim = 0;       // dim [I_Z]_d - binom(d+2,3), unclamped
  long clamped_expected = 0;   // max(0, expected_dim)
  bool unexpected = false;     // actual_dim > clamped_expected
  long defect = 0;             // actual_dim - expected_dim
  std::vector<Index> trial_dims;
  bool consistent = true;      // every trial gave the same value
  bool planar = false;         // degenerate input; C(d) cannot hold
  // Present when C(d) holds with zero expected cones and Z is covered by d
  // pairwise skew lines of the configuration (an improper C(d)).
  std::optional<std::vector<Line>> improper_witness;
};

/// The sampled vertices for a protocol: one point per trial, avoiding cfg.
/// Shared by every degree of a table.
std::vector<ProjPoint> sample_vertices(const PointConfig& cfg, const GenericityProtocol& protocol);

ConeReport cone_property(const PointConfig& cfg, int d, const GenericityProtocol& protocol);

std::vector<ConeReport> cone_table(const PointConfig& cfg, int d_min, int d_max,
                                   const GenericityProtocol& protocol);

long cone_defect(const PointConfig& cfg, int d, const GenericityProtocol& protocol);

struct ProjectionTrial {
  ProjPoint center;
  MatrixQ screen;
  PointConfig image;
  std::vector<CIVerdict> verdicts;  // one per tested type, in test order
};

struct ProjectionCIResult {
  std::optional<std::pair<int, int>> type;  // certified in every trial
  std::vector<std::pair<int, int>> tested_types;
  std::vector<ProjectionTrial> trials;
  bool consistent = true;  // each tested type got the same verdict in every trial
};

/// Factorizations n = a*b with 2 <= a <= b, smallest a first.
std::vector<std::pair<int, int>> factorizations(std::size_t n);

/// Projects from sampled centers onto sampled screens and tests the hinted
/// type, or every factorization of |cfg|. A center on a secant is resampled
/// once per trial before the error propagates.
ProjectionCIResult projection_ci_property(const PointConfig& cfg, const GenericityProtocol& protocol,
                                          std::optional<std::pair<int, int>> type_hint = {});

struct CC2Verdict {
  bool satisfies = false;
  std::optional<std::pair<Line, Line>> lines;
};

/// Combinatorial C(2) test: Z lies on two skew lines with at least three
/// points on each. Throws Degenerate for planar input or fewer than 6 points.
CC2Verdict classify_cc2(const PointConfig& cfg);

}  // namespace conelab
