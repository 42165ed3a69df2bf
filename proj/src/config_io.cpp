#include "conelab/config_io.hpp"

#include <sstream>

namespace conelab {

PointConfig parse_config(std::string_view text, std::string label) {
  std::vector<ProjPoint> points;
  std::vector<std::size_t> line_of_point;
  Index width = -1;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<Rational> coords;
    std::string token;
    try {
      while (fields >> token) coords.push_back(parse_rational(token));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
    const auto n = static_cast<Index>(coords.size());
    if (n != 3 && n != 4)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 3 or 4 coordinates, got " +
                                        std::to_string(n));
    if (width >= 0 && n != width)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": coordinate count differs from line " +
                                        std::to_string(line_of_point.front()));
    width = n;
    VectorQ v(n);
    for (Index i = 0; i < n; ++i) v(i) = coords[static_cast<std::size_t>(i)];
    if (v.isZero()) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": zero vector");
    ProjPoint p(v);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j] == p)
        throw Error(ErrorKind::DuplicatePoint, "point " + std::to_string(points.size()) + " (line " +
                                                   std::to_string(line_no) + ") repeats point " + std::to_string(j) +
                                                   " (line " + std::to_string(line_of_point[j]) + ")");
    points.push_back(std::move(p));
    line_of_point.push_back(line_no);
  }
  if (width < 0) throw Error(ErrorKind::Parse, "no points in input");
  return PointConfig(static_cast<int>(width - 1), std::move(points), std::move(label));
}

std::string serialize_config(const PointConfig& cfg) {
  std::string out;
  for (const ProjPoint& p : cfg.points()) {
    for (Index i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      out += p[i].str();
    }
    out += '\n';
  }
  return out;
}

std::uint64_t config_hash(const PointConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_config(cfg)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace conelab
