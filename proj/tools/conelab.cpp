#include "conelab/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

std::pair<int, int> parse_type(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--type", "expected a,b");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--type", "expected a,b");
  }
}

}  // namespace

int main(int argc, char** argv) {
  using conelab::Command;
  CLI::App app{"Unexpected cones and projection complete intersections of finite point sets in P^3"};
  app.require_subcommand(1);

  conelab::AnalysisRequest req;
  std::string format = "text";
  std::string type;
  std::uint64_t height = req.protocol.height;
  int trials = req.protocol.trials;

  struct Spec {
    const char* name;
    Command command;
    const char* help;
    bool needs_source;
  };
  const Spec specs[] = {
      {"analyze", Command::Analyze, "cone dimensions against expected counts", true},
      {"hilbert", Command::Hilbert, "Hilbert function and h-vector", true},
      {"grid", Command::Grid, "detect an (a,b)-grid structure", true},
      {"project", Command::Project, "complete intersection type of general projections", true},
      {"collinear", Command::Collinear, "maximal collinear subsets", true},
      {"cc2", Command::CC2, "combinatorial C(2) classification", true},
      {"defect", Command::Defect, "cone defects", true},
      {"catalog", Command::Catalog, "list built-in configurations or print one", false},
      {"verify-appendix", Command::VerifyAppendix, "recompute the facts of the built-in configurations", false},
  };
  std::map<CLI::App*, Command> commands;
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    commands[sub] = s.command;
    if (s.command != Command::VerifyAppendix) {
      auto* opt = sub->add_option("source", req.source, "catalog name or point file");
      if (s.needs_source) opt->required();
    }
    sub->add_option("--seed", req.protocol.seed, "random seed")->capture_default_str();
    sub->add_option("--trials", trials, "independent trials")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--height", height, "coordinate height of sampled points")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    sub->add_flag("--strict", req.strict, "exit 3 when trials disagree");
    if (s.command == Command::Analyze || s.command == Command::Defect) {
      sub->add_option("--dmin", req.d_min, "smallest degree")->capture_default_str();
      sub->add_option("--dmax", req.d_max, "largest degree")->capture_default_str();
    }
    if (s.command == Command::Project) sub->add_option("--type", type, "test only the CI type a,b");
    if (s.command == Command::Collinear) sub->add_option("--k", req.min_collinear, "minimum points per line")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
    if (!type.empty()) req.type_hint = parse_type(type);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : conelab::exit_code::kInput;
  }

  for (const auto& [sub, command] : commands)
    if (sub->parsed()) req.command = command;
  req.protocol.trials = trials;
  req.protocol.height = height;
  req.format = format == "json" ? conelab::OutputFormat::Json
               : format == "csv" ? conelab::OutputFormat::Csv
                                 : conelab::OutputFormat::Text;

  const conelab::RunResult result = conelab::run(req);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "conelab: " << result.error << '\n';
  return result.exit_code;
}
