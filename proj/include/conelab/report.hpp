#pragma once

// Request handling and report serialization behind the conelab command line.

#include "conelab/catalog.hpp"
#include "conelab/config_io.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

namespace conelab {

enum class OutputFormat { Text, Json, Csv };

enum class Command { Analyze, Hilbert, Grid, Project, Collinear, CC2, Defect, Catalog, VerifyAppendix };

struct AnalysisRequest {
  Command command = Command::Analyze;
  std::string source;  // catalog name or path to a point file; may be empty for catalog/verify-appendix
  int d_min = 1;
  int d_max = 8;
  GenericityProtocol protocol;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::pair<int, int>> type_hint;
  std::size_t min_collinear = 3;
  bool strict = false;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInput = 2;
inline constexpr int kInconsistent = 3;
}  // namespace exit_code

/// Catalog names win over file paths; "F4" never reads a file named F4.
PointConfig load_source(const std::string& source);

RunResult run(const AnalysisRequest& request);

nlohmann::json to_json(const ProjPoint& p);
nlohmann::json to_json(const Line& line);
nlohmann::json to_json(const ConeReport& r);
nlohmann::json to_json(const GridWitness& w);
nlohmann::json to_json(const CIVerdict& v);
nlohmann::json to_json(const ProjectionCIResult& r);
nlohmann::json config_json(const PointConfig& cfg);

/// Coefficients in graded-lex order as "p/q" strings.
nlohmann::json form_to_json(const Form& f);
Form form_from_json(const nlohmann::json& j, int num_vars, int degree);

/// One column per degree; rows "d", "dim", "expected" and an "unexp." marker
/// row.
std::string format_cone_table(const std::vector<ConeReport>& table);

}  // namespace conelab
