#include "conelab/report.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace conelab {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

json to_json(const ProjPoint& p) {
  json coords = json::array();
  for (Index i = 0; i < p.size(); ++i) coords.push_back(p[i].str());
  return coords;
}

json to_json(const Line& line) {
  return json{{"members", line.members}, {"span", json::array({to_json(line.first), to_json(line.second)})}};
}

json to_json(const ConeReport& r) {
  json j{{"d", r.d},
         {"actual", r.actual_dim},
         {"expected", r.expected_dim},
         {"clamped_expected", r.clamped_expected},
         {"unexpected", r.unexpected},
         {"defect", r.defect},
         {"trial_dims", r.trial_dims},
         {"consistent", r.consistent},
         {"planar", r.planar}};
  if (r.improper_witness) {
    json lines = json::array();
    for (const Line& l : *r.improper_witness) lines.push_back(to_json(l));
    j["improper_witness"] = lines;
  } else {
    j["improper_witness"] = nullptr;
  }
  return j;
}

json to_json(const GridWitness& w) {
  json a = json::array();
  json b = json::array();
  for (const Line& l : w.family_a) a.push_back(to_json(l));
  for (const Line& l : w.family_b) b.push_back(to_json(l));
  return json{{"a", w.a}, {"b", w.b}, {"family_a", a}, {"family_b", b}};
}

json form_to_json(const Form& f) {
  json coeffs = json::array();
  for (Index i = 0; i < f.coefficients().size(); ++i) coeffs.push_back(format_rational(f.coefficients()(i)));
  return coeffs;
}

Form form_from_json(const json& j, int num_vars, int degree) {
  MonomialBasis basis(num_vars, degree);
  if (!j.is_array() || static_cast<Index>(j.size()) != basis.size())
    throw Error(ErrorKind::Parse, "form needs " + std::to_string(basis.size()) + " coefficients");
  VectorQ c(basis.size());
  for (Index i = 0; i < basis.size(); ++i) c(i) = parse_rational(j.at(static_cast<std::size_t>(i)).get<std::string>());
  return Form(std::move(basis), std::move(c));
}

json to_json(const CIVerdict& v) {
  json j{{"type", {v.type.first, v.type.second}},
         {"certified", v.certified},
         {"trials_used", v.trials_used}};
  if (v.certificate)
    j["certificate"] = json{{"F", form_to_json(v.certificate->first)}, {"G", form_to_json(v.certificate->second)}};
  else
    j["certificate"] = nullptr;
  return j;
}

json to_json(const ProjectionCIResult& r) {
  json tested = json::array();
  for (const auto& [a, b] : r.tested_types) tested.push_back({a, b});
  json trials = json::array();
  for (const ProjectionTrial& t : r.trials) {
    json verdicts = json::array();
    for (const CIVerdict& v : t.verdicts) verdicts.push_back(to_json(v));
    trials.push_back(json{{"center", to_json(t.center)}, {"verdicts", verdicts}});
  }
  json j{{"tested_types", tested}, {"trials", trials}, {"consistent", r.consistent}};
  j["type"] = r.type ? json{r.type->first, r.type->second} : json(nullptr);
  return j;
}

json config_json(const PointConfig& cfg) {
  return json{{"name", cfg.label()}, {"size", cfg.size()}, {"ambient_dim", cfg.ambient_dim()}};
}

// ---------------------------------------------------------------------------
// Text helpers

namespace {

std::string type_str(std::pair<int, int> t) {
  return "(" + std::to_string(t.first) + "," + std::to_string(t.second) + ")";
}

std::string members_str(const std::vector<std::size_t>& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + "}";
}

std::string hvector_str(const HVector& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + std::to_string(h[i]);
  return out + ")";
}

std::string header(const PointConfig& cfg) {
  return "config " + (cfg.label().empty() ? std::string("<unnamed>") : cfg.label()) + " (" +
         std::to_string(cfg.size()) + " points in P^" + std::to_string(cfg.ambient_dim()) + ")\n";
}

json protocol_json(const GenericityProtocol& p) {
  return json{{"seed", p.seed}, {"trials", p.trials}, {"height", p.height}};
}

json base_report(const PointConfig& cfg, const GenericityProtocol& p) {
  return json{{"config", config_json(cfg)}, {"protocol", protocol_json(p)}};
}

}  // namespace

std::string format_cone_table(const std::vector<ConeReport>& table) {
  std::size_t width = 2;
  for (const ConeReport& r : table) {
    width = std::max(width, std::to_string(r.actual_dim).size());
    width = std::max(width, std::to_string(r.clamped_expected).size());
    width = std::max(width, std::to_string(r.d).size());
  }
  width = std::max<std::size_t>(width, 6);  // "unexp."
  std::ostringstream os;
  auto row = [&](const std::string& name, auto cell) {
    os << std::left << std::setw(9) << name << '|';
    for (const ConeReport& r : table) os << ' ' << std::right << std::setw(static_cast<int>(width)) << cell(r);
    os << '\n';
  };
  row("d", [](const ConeReport& r) { return std::to_string(r.d); });
  row("dim", [](const ConeReport& r) { return std::to_string(r.actual_dim); });
  row("expected", [](const ConeReport& r) { return std::to_string(r.clamped_expected); });
  row("", [](const ConeReport& r) { return std::string(r.unexpected ? "unexp." : ""); });
  return os.str();
}

// ---------------------------------------------------------------------------
// Driver

PointConfig load_source(const std::string& source) {
  if (source.empty()) throw Error(ErrorKind::Parse, "no configuration given");
  try {
    return named(source).config;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnknownName) throw;
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::Parse, "'" + source + "' is neither a catalog name nor a readable file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::filesystem::path(source).stem().string());
}

namespace {

struct Output {
  std::ostringstream text;
  json report;
  std::ostringstream csv;
  bool inconsistent = false;
};

void analyze(const PointConfig& cfg, const AnalysisRequest& req, Output& out) {
  const auto table = cone_table(cfg, req.d_min, req.d_max, req.protocol);
  out.text << header(cfg);
  if (table.front().planar) out.text << "note: configuration is degenerate (planar); no C(d) can hold\n";
  out.text << format_cone_table(table);
  json cones = json::array();
  out.csv << "d,actual,expected,clamped_expected,unexpected,defect,trial_dims\n";
  for (const ConeReport& r : table) {
    cones.push_back(to_json(r));
    std::string dims;
    for (std::size_t i = 0; i < r.trial_dims.size(); ++i) dims += (i ? ";" : "") + std::to_string(r.trial_dims[i]);
    out.csv << r.d << ',' << r.actual_dim << ',' << r.expected_dim << ',' << r.clamped_expected << ','
            << (r.unexpected ? "true" : "false") << ',' << r.defect << ',' << dims << '\n';
    if (!r.consistent) {
      out.inconsistent = true;
      out.text << "warning: trials disagree at d=" << r.d << '\n';
    }
    if (r.improper_witness) {
      out.text << "C(" << r.d << ") is improper: points lie on " << r.d << " skew lines";
      for (const Line& l : *r.improper_witness) out.text << ' ' << members_str(l.members);
      out.text << '\n';
    }
  }
  out.report["cones"] = cones;
}

void defect(const PointConfig& cfg, const AnalysisRequest& req, Output& out) {
  const auto table = cone_table(cfg, req.d_min, req.d_max, req.protocol);
  out.text << header(cfg);
  out.csv << "d,defect\n";
  json cones = json::array();
  for (const ConeReport& r : table) {
    out.text << "defect C(" << r.d << ") = " << r.defect << "  (actual " << r.actual_dim << ", expected "
             << r.expected_dim << ")\n";
    out.csv << r.d << ',' << r.defect << '\n';
    cones.push_back(to_json(r));
    if (!r.consistent) out.inconsistent = true;
  }
  out.report["cones"] = cones;
}

void hilbert(const PointConfig& cfg, Output& out) {
  const HVector h = h_vector(cfg);
  out.text << header(cfg) << "h-vector: " << hvector_str(h) << '\n';
  out.text << "hilbert function:";
  out.csv << "t,h,delta\n";
  Index total = 0;
  for (std::size_t t = 0; t < h.size(); ++t) {
    total += h[t];
    out.text << ' ' << total;
    out.csv << t << ',' << total << ',' << h[t] << '\n';
  }
  out.text << " (then " << cfg.size() << ")\n";
  out.report["h_vector"] = h;
}

void grid(const PointConfig& cfg, Output& out) {
  const auto w = detect_grid(cfg);
  out.text << header(cfg);
  out.csv << "a,b\n";
  if (!w) {
    out.text << "not a grid for any factorization of " << cfg.size() << '\n';
    out.report["grid"] = nullptr;
    return;
  }
  out.text << type_str({static_cast<int>(w->a), static_cast<int>(w->b)}) << "-grid\n";
  out.text << "  family A:";
  for (const Line& l : w->family_a) out.text << ' ' << members_str(l.members);
  out.text << "\n  family B:";
  for (const Line& l : w->family_b) out.text << ' ' << members_str(l.members);
  out.text << '\n';
  out.csv << w->a << ',' << w->b << '\n';
  out.report["grid"] = to_json(*w);
}

void project_cmd(const PointConfig& cfg, const AnalysisRequest& req, Output& out) {
  const auto r = projection_ci_property(cfg, req.protocol, req.type_hint);
  out.text << header(cfg);
  if (r.type) {
    out.text << "CI type " << type_str(*r.type) << ", certified\n";
  } else {
    out.text << "no complete intersection type certified (tested";
    for (const auto& t : r.tested_types) out.text << ' ' << type_str(t);
    out.text << ")\n";
  }
  if (!r.consistent) {
    out.inconsistent = true;
    out.text << "warning: trials disagree\n";
  }
  out.csv << "trial,a,b,certified,trials_used\n";
  for (std::size_t t = 0; t < r.trials.size(); ++t)
    for (const CIVerdict& v : r.trials[t].verdicts)
      out.csv << t << ',' << v.type.first << ',' << v.type.second << ',' << (v.certified ? "true" : "false") << ','
              << v.trials_used << '\n';
  out.report["projection_ci"] = to_json(r);
}

void collinear(const PointConfig& cfg, const AnalysisRequest& req, Output& out) {
  const auto lines = collinear_subsets(cfg, req.min_collinear);
  out.text << header(cfg) << lines.size() << " maximal collinear subsets with at least " << req.min_collinear
           << " points\n";
  json arr = json::array();
  out.csv << "size,members\n";
  for (const Line& l : lines) {
    out.text << "  " << l.members.size() << ' ' << members_str(l.members) << '\n';
    std::string m;
    for (std::size_t i = 0; i < l.members.size(); ++i) m += (i ? ";" : "") + std::to_string(l.members[i]);
    out.csv << l.members.size() << ',' << m << '\n';
    arr.push_back(to_json(l));
  }
  out.report["collinear"] = arr;
}

void cc2(const PointConfig& cfg, Output& out) {
  const CC2Verdict v = classify_cc2(cfg);
  out.text << header(cfg);
  out.csv << "satisfies\n" << (v.satisfies ? "true" : "false") << '\n';
  if (v.satisfies) {
    out.text << "satisfies C(2): skew lines " << members_str(v.lines->first.members) << " and "
             << members_str(v.lines->second.members) << '\n';
    out.report["cc2"] = json{{"satisfies", true},
                             {"lines", json::array({to_json(v.lines->first), to_json(v.lines->second)})}};
  } else {
    out.text << "does not satisfy C(2)\n";
    out.report["cc2"] = json{{"satisfies", false}, {"lines", nullptr}};
  }
}

void catalog_cmd(const AnalysisRequest& req, Output& out) {
  if (!req.source.empty()) {
    const CatalogEntry e = named(req.source);
    out.text << "# " << e.name << ": " << e.provenance << '\n' << serialize_config(e.config);
    out.csv << serialize_config(e.config);
    json pts = json::array();
    for (const ProjPoint& p : e.config.points()) pts.push_back(to_json(p));
    out.report = json{{"config", config_json(e.config)}, {"points", pts}};
    return;
  }
  json entries = json::array();
  out.csv << "name,size,provenance\n";
  for (const std::string& name : catalog_names()) {
    const CatalogEntry e = named(name);
    out.text << std::left << std::setw(4) << e.name << std::right << std::setw(4) << e.config.size() << "  "
             << e.provenance << '\n';
    out.csv << e.name << ',' << e.config.size() << ",\"" << e.provenance << "\"\n";
    entries.push_back(json{{"name", e.name}, {"size", e.config.size()}, {"provenance", e.provenance}});
  }
  out.report = json{{"catalog", entries}};
}

void verify_appendix(const AnalysisRequest& req, Output& out, bool& failed) {
  json checks = json::array();
  out.csv << "check,ok,observed\n";
  auto record = [&](const std::string& name, bool ok, const std::string& observed) {
    out.text << (ok ? "PASS " : "FAIL ") << name << (observed.empty() ? "" : " (observed " + observed + ")") << '\n';
    out.csv << '"' << name << "\"," << (ok ? "true" : "false") << ",\"" << observed << "\"\n";
    checks.push_back(json{{"check", name}, {"ok", ok}, {"observed", observed}});
    failed = failed || !ok;
  };
  for (const char* name : {"F4", "D4", "Z1", "Z2", "Z4"}) {
    const CatalogEntry e = named(name);
    for (const FactCheck& c : verify_known_facts(e, req.protocol))
      record(e.name + " " + c.fact.property + " = " + c.fact.value, c.ok, c.observed);
  }
  const PointConfig z4 = named("Z4").config;
  const PointConfig d4 = named("D4").config;
  const MatrixQ m = z4_to_d4_matrix();
  record("matrix sends Z4 to D4", apply_transform(z4, m).same_set(d4), "");
  record("matrix sends D4 to Z4", apply_transform(d4, m).same_set(z4), "");
  const PointConfig f4 = named("F4").config;
  const ProjPoint q = sample_vertices(f4, req.protocol).front();
  const Form f = f4_quartic_cone(q);
  bool vanishes = true;
  for (const ProjPoint& p : f4.points()) vanishes = vanishes && f(p) == 0;
  const int mult = multiplicity_at(f, q);
  record("quartic cone at Q=" + q.str() + " vanishes on F4 with multiplicity 4 at Q", vanishes && mult == 4,
         "multiplicity " + std::to_string(mult) + (vanishes ? ", vanishes" : ", does not vanish"));
  out.report = json{{"checks", checks}, {"protocol", protocol_json(req.protocol)}};
}

}  // namespace

RunResult run(const AnalysisRequest& req) {
  RunResult result;
  Output out;
  try {
    if (req.protocol.trials < 1) throw Error(ErrorKind::Parse, "--trials must be at least 1");
    if (req.protocol.height < 1) throw Error(ErrorKind::Parse, "--height must be at least 1");
    if (req.d_min < 1 || req.d_max < req.d_min) throw Error(ErrorKind::Parse, "degree range must satisfy 1 <= dmin <= dmax");
    bool failed = false;
    if (req.command == Command::Catalog) {
      catalog_cmd(req, out);
    } else if (req.command == Command::VerifyAppendix) {
      verify_appendix(req, out, failed);
    } else {
      const PointConfig cfg = load_source(req.source);
      out.report = base_report(cfg, req.protocol);
      switch (req.command) {
        case Command::Analyze: analyze(cfg, req, out); break;
        case Command::Defect: defect(cfg, req, out); break;
        case Command::Hilbert: hilbert(cfg, out); break;
        case Command::Grid: grid(cfg, out); break;
        case Command::Project: project_cmd(cfg, req, out); break;
        case Command::Collinear: collinear(cfg, req, out); break;
        case Command::CC2: cc2(cfg, out); break;
        default: break;
      }
    }
    switch (req.format) {
      case OutputFormat::Text: result.output = out.text.str(); break;
      case OutputFormat::Json: result.output = out.report.dump(2) + "\n"; break;
      case OutputFormat::Csv: result.output = out.csv.str(); break;
    }
    if (failed) {
      result.exit_code = exit_code::kInconsistent;
      result.error = "catalog verification failed";
    } else if (req.strict && out.inconsistent) {
      result.exit_code = exit_code::kInconsistent;
      result.error = "trials disagree (--strict)";
    }
  } catch (const Error& e) {
    const bool input = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::DuplicatePoint ||
                       e.kind() == ErrorKind::UnknownName;
    result.exit_code = input ? exit_code::kInput : exit_code::kFailure;
    result.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return result;
}

}  // namespace conelab
