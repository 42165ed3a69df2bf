#pragma once

// Point configuration text format: one point per line, whitespace-separated
// rationals ("n" or "n/d", d > 0), '#' starts a comment line, blank lines
// are ignored, and every point has the same number of coordinates (3 or 4).

#include "conelab/projective.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace conelab {

/// Throws Error{Parse} (message carries the line number) or
/// Error{DuplicatePoint} (message carries both indices).
PointConfig parse_config(std::string_view text, std::string label = {});

/// Canonical integer coordinates, one point per line, no comments.
std::string serialize_config(const PointConfig& cfg);

/// FNV-1a over serialize_config(cfg).
std::uint64_t config_hash(const PointConfig& cfg);

}  // namespace conelab
