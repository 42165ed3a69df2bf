#pragma once

// Built-in configurations, generators for grids and random families, and the
// explicit quartic cone through the F4 configuration.

#include "conelab/graded.hpp"
#include "conelab/unexpected.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace conelab {

struct KnownFact {
  std::string property;
  std::string value;
};

struct CatalogEntry {
  std::string name;
  PointConfig config;
  std::string provenance;
  std::vector<KnownFact> known_facts;
  std::uint64_t expected_hash = 0;
};

/// F4, D4 (alias Z3), Z1, Z2, Z4, B4. Throws Error{UnknownName}. The embedded
/// point file is checked against its expected hash on every load.
CatalogEntry named(std::string_view name);

std::vector<std::string> catalog_names();

struct FactCheck {
  KnownFact fact;
  std::string observed;
  bool ok = false;
};

/// Recomputes every known fact of an entry.
std::vector<FactCheck> verify_known_facts(const CatalogEntry& entry, const GenericityProtocol& protocol);

/// The matrix that exchanges Z4 and D4.
MatrixQ z4_to_d4_matrix();

// ---------------------------------------------------------------------------
// Generators

/// Points of P^1 as integer pairs (s:t).
using P1Point = std::pair<long, long>;

struct GridParameters {
  std::vector<P1Point> first;   // a ruling parameters (family A)
  std::vector<P1Point> second;  // b ruling parameters (family B)
};

/// Grid on the quadric x0*x3 = x1*x2 through the Segre points
/// [s*u, s*v, t*u, t*v]. Throws DegenerateParameters on repeated parameters.
PointConfig make_grid(const GridParameters& params);

/// a >= 3: random ruling parameters on the standard quadric. a == 2: two
/// random skew lines with b points each, joined pointwise by the second
/// family.
PointConfig make_grid(int a, int b, Rng& rng, std::uint64_t height = 100);

namespace kind {
struct GeneralPosition {
  std::size_t n;
};
/// Points on pairwise skew random lines, counts[i] on line i, plus
/// `extra` random points off those lines.
struct OnSkewLines {
  std::vector<std::size_t> counts;
  std::size_t extra = 0;
};
struct Planar {
  std::size_t n;
};
/// `keep` random points of a random (a,b)-grid.
struct OnGridLines {
  int a;
  int b;
  std::size_t keep;
};
}  // namespace kind

using ConfigKind = std::variant<kind::GeneralPosition, kind::OnSkewLines, kind::Planar, kind::OnGridLines>;

/// Throws DegenerateParameters when the constraints keep failing.
PointConfig random_config(const ConfigKind& kind, Rng& rng, std::uint64_t height = 100);

// ---------------------------------------------------------------------------
// The quartic cone through Z_F4

/// Quartic in the three variables other than x_i that vanishes on the B3
/// configuration of that coordinate plane and is triple at (a_j : a_k : a_l).
/// Throws ZeroForm when every coefficient vanishes.
Form b3_plane_quartic(int i, const std::array<Rational, 4>& a);

/// -a0 f0 + a1 f1 - a2 f2 + a3 f3 for Q = (a0:a1:a2:a3); vanishes on Z_F4
/// and to order 4 at Q.
Form f4_quartic_cone(const ProjPoint& q);

}  // namespace conelab
