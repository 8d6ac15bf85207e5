#include "surfint/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "surfint/catalog.hpp"
#include "surfint/definition.hpp"
#include "surfint/identities.hpp"

namespace surfint {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kDefaultFields{"yzx", "normal"};
const char* const kDefaultTangentField = "rotation";
const std::vector<std::string> kDefaultScalars{"x1x2", "x3sq"};
constexpr int kGaussBonnetIntegrandSamples = 200;
constexpr int kLiouvilleSamples = 512;

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string format_quantity(const Quantity& q) {
  if (const auto* d = std::get_if<double>(&q)) return format_number(*d);
  const Vec3& v = std::get<Vec3>(q);
  return "[" + format_number(v.x()) + " " + format_number(v.y()) + " " + format_number(v.z()) + "]";
}

// Splits at commas outside parentheses.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

SurfaceDefinition resolve_surface(const std::string& surface) {
  if (surface.empty()) throw UsageError("--surface is required");
  if (in_catalog(surface)) {
    const CatalogEntry& e = catalog_lookup(surface);
    return SurfaceDefinition{e.name, e.chart, {}, {}, e.singularities};
  }
  if (!std::filesystem::exists(surface))
    throw UsageError("'" + surface + "' is neither a catalog surface nor an existing definition file");
  return load_definition(surface);
}

struct ResolvedField {
  std::string name;
  std::optional<AmbientField> ambient;  // empty for the chart normal
  bool tangent = false;
};

ResolvedField resolve_field(const SurfaceDefinition& def, const std::string& spec) {
  if (spec == "normal" || spec == "N") return {"normal", std::nullopt, false};
  if (const NamedField* f = def.find_field(spec)) return {f->name, f->field, f->tangent};
  try {
    return {spec, preset_field(spec), false};
  } catch (const std::out_of_range&) {
  }
  const auto parts = split_top_level(spec);
  if (parts.size() != 3)
    throw UsageError("field '" + spec + "' is not a preset, a definition field, or an inline \"vx,vy,vz\"");
  try {
    return {spec, AmbientField::parse(parts[0], parts[1], parts[2], spec), false};
  } catch (const ExpressionError& e) {
    throw UsageError("field '" + spec + "': " + e.what());
  }
}

ScalarField resolve_scalar(const SurfaceDefinition& def, const std::string& spec) {
  if (const NamedScalar* s = def.find_scalar(spec)) return s->field;
  try {
    return preset_scalar(spec);
  } catch (const std::out_of_range&) {
  }
  try {
    return ScalarField::parse(spec, spec);
  } catch (const ExpressionError& e) {
    throw UsageError("scalar '" + spec + "': " + e.what());
  }
}

SurfaceField to_surface_field(const ResolvedField& f) {
  if (!f.ambient) return SurfaceField::normal();
  if (f.tangent) return SurfaceField::tangent(TangentField(*f.ambient));
  return SurfaceField::ambient(*f.ambient);
}

TangentField to_tangent_field(const ResolvedField& f) {
  if (!f.ambient) throw UsageError("the chart normal is not a tangent field");
  return TangentField(*f.ambient);
}

std::vector<std::string> selected_ids(const std::vector<std::string>& requested) {
  if (requested.empty()) throw UsageError("no --identity given (use --identity all)");
  for (const auto& id : requested)
    if (id != "all" && !is_identity_id(id)) throw UsageError("unknown identity '" + id + "'");
  std::vector<std::string> ids;
  for (const auto& id : identity_ids())
    for (const auto& r : requested)
      if (r == "all" || r == id) {
        ids.push_back(id);
        break;
      }
  return ids;
}

// Everything a checker needs, resolved before any computation starts.
struct Problem {
  SurfaceDefinition def;
  SurfaceField V;
  SurfaceField W;
  TangentField tangent;
  std::vector<SingularitySpec> singularities;
  ScalarField f;
  ScalarField g;
  Vec3 direction;
  std::uint64_t seed;
  CheckOptions options;
};

Problem resolve(const RunConfig& c) {
  SurfaceDefinition def = resolve_surface(c.surface);

  const std::string v_name = c.fields.size() > 0 ? c.fields[0] : kDefaultFields[0];
  const std::string w_name = c.fields.size() > 1 ? c.fields[1] : kDefaultFields[1];
  const std::string t_name = c.fields.empty() ? kDefaultTangentField : c.fields[0];
  const ResolvedField V = resolve_field(def, v_name);
  const ResolvedField W = resolve_field(def, w_name);
  const ResolvedField T = resolve_field(def, t_name);
  if (c.fields.size() > 2) throw UsageError("at most two --field values (V and W) are used");

  const std::string f_name = c.scalars.size() > 0 ? c.scalars[0] : kDefaultScalars[0];
  const std::string g_name = c.scalars.size() > 1 ? c.scalars[1] : kDefaultScalars[1];
  if (c.scalars.size() > 2) throw UsageError("at most two --scalar values (f and g) are used");

  CheckOptions options;
  if (c.panels) options.quadrature.panels_u = options.quadrature.panels_v = *c.panels;
  if (c.nodes) options.quadrature.nodes_per_panel = *c.nodes;
  if (c.boundary_panels) options.quadrature.boundary_panels = *c.boundary_panels;
  options.quadrature.execution = c.serial ? Execution::serial : Execution::parallel;
  try {
    options.quadrature.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.tolerance && !(*c.tolerance > 0.0)) throw UsageError("--tol must be positive");
  options.tolerance = c.tolerance;

  Vec3 direction = c.direction.value_or(Vec3(std::sin(0.3), 0.0, std::cos(0.3)));
  if (!(direction.norm() > 0.0)) throw UsageError("--direction must be nonzero");
  direction.normalize();

  std::vector<SingularitySpec> sings;
  if (const auto it = def.singularities.find(T.name); it != def.singularities.end()) sings = it->second;

  ScalarField f = resolve_scalar(def, f_name);
  ScalarField g = resolve_scalar(def, g_name);
  return Problem{std::move(def),
                 to_surface_field(V),
                 to_surface_field(W),
                 to_tangent_field(T),
                 std::move(sings),
                 std::move(f),
                 std::move(g),
                 direction,
                 c.seed,
                 options};
}

IdentityReport failed_record(const std::string& id, const Problem& p, const std::string& message) {
  IdentityReport r;
  r.id = id;
  r.lhs = r.rhs = std::nan("");
  r.residual = r.refined_residual = r.est_error = std::nan("");
  r.tolerance = p.options.tolerance.value_or(default_tolerance(id));
  r.spec = p.options.quadrature;
  r.status = Status::fail;
  r.note = message;
  return r;
}

std::string describe_exception(const std::exception& e) {
  std::string message = e.what();
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& inner) {
    message += ": " + describe_exception(inner);
  } catch (...) {
  }
  return message;
}

std::vector<IdentityReport> run_checks(const Problem& p, const std::vector<std::string>& ids) {
  const Chart& chart = p.def.chart;
  const CheckOptions& o = p.options;
  std::optional<std::array<IdentityReport, 4>> moments;
  std::optional<std::array<IdentityReport, 2>> minkowski;
  std::optional<std::array<IdentityReport, 2>> hessian;

  const std::map<std::string, std::function<IdentityReport()>> checkers{
      {"stokes-scalar", [&] { return check_stokes_scalar(chart, p.f, p.g, o); }},
      {"eq1", [&] { return check_stokes_vector(chart, p.V, p.W, o); }},
      {"eq3", [&] { return check_divergence_identity(chart, p.V, o); }},
      {"eq4", [&] { return check_curvature_identity(chart, p.V, o); }},
      {"liouville", [&] { return check_liouville(chart, p.direction, kLiouvilleSamples, o); }},
      {"gb-integrand",
       [&] { return check_gauss_bonnet_integrand(chart, kGaussBonnetIntegrandSamples, p.seed, o); }},
      {"gauss-bonnet", [&] { return check_gauss_bonnet(chart, o); }},
      {"unit-tangent", [&] { return check_unit_tangent_identity(chart, p.tangent, p.singularities, o); }},
      {"index", [&] { return check_index_identity(chart, p.tangent, p.singularities, o); }},
      {"poincare-hopf", [&] { return check_poincare_hopf(chart, p.tangent, p.singularities, o); }},
  };

  std::vector<IdentityReport> reports;
  for (const auto& id : ids) {
    try {
      if (id.starts_with("moment")) {
        if (!moments) moments = check_moment_identities(chart, o);
        reports.push_back((*moments)[id.back() - '1']);
      } else if (id.starts_with("minkowski")) {
        if (!minkowski) minkowski = check_minkowski(chart, o);
        reports.push_back((*minkowski)[id.back() - '1']);
      } else if (id.starts_with("hessian")) {
        if (!hessian) hessian = check_hessian_identities(chart, p.f, o);
        reports.push_back((*hessian)[id.back() - '1']);
      } else {
        reports.push_back(checkers.at(id)());
      }
    } catch (const std::exception& e) {
      reports.push_back(failed_record(id, p, describe_exception(e)));
    }
  }
  return reports;
}

nlohmann::ordered_json quantity_json(const Quantity& q) {
  if (const auto* d = std::get_if<double>(&q)) return *d;
  const Vec3& v = std::get<Vec3>(q);
  return nlohmann::ordered_json::array({v.x(), v.y(), v.z()});
}

struct Tally {
  int pass = 0, fail = 0, violated = 0;
};

Tally tally(const std::vector<IdentityReport>& reports) {
  Tally t;
  for (const auto& r : reports) {
    if (r.status == Status::pass) ++t.pass;
    if (r.status == Status::fail) ++t.fail;
    if (r.status == Status::hypothesis_violated) ++t.violated;
  }
  return t;
}

void write_json(std::ostream& os, const Problem& p, const std::vector<IdentityReport>& reports) {
  using nlohmann::ordered_json;
  const QuadratureSpec& q = p.options.quadrature;
  ordered_json doc;
  doc["surface"] = p.def.name;
  doc["chi"] = p.def.chart.euler_characteristic();
  doc["quadrature"] = {{"panels_u", q.panels_u},
                       {"panels_v", q.panels_v},
                       {"nodes_per_panel", q.nodes_per_panel},
                       {"boundary_panels", q.boundary_panels}};
  ordered_json records = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json rec;
    rec["identity"] = r.id;
    rec["lhs"] = quantity_json(r.lhs);
    rec["rhs"] = quantity_json(r.rhs);
    rec["residual"] = r.residual;
    rec["est_error"] = r.est_error;
    rec["tolerance"] = r.tolerance;
    rec["pass"] = r.passed();
    rec["status"] = std::string(to_string(r.status));
    rec["note"] = r.note;
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  const Tally t = tally(reports);
  doc["summary"] = {{"pass", t.pass}, {"fail", t.fail}, {"hypothesis_violated", t.violated}};
  os << doc.dump(2) << "\n";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& os, const std::vector<IdentityReport>& reports) {
  os << "identity,status,lhs,rhs,residual,est_error,tolerance,note\n";
  for (const auto& r : reports)
    os << r.id << ',' << to_string(r.status) << ',' << format_quantity(r.lhs) << ',' << format_quantity(r.rhs)
       << ',' << format_number(r.residual) << ',' << format_number(r.est_error) << ','
       << format_number(r.tolerance) << ',' << csv_escape(r.note) << '\n';
}

void write_text(std::ostream& os, const Problem& p, const std::vector<IdentityReport>& reports) {
  const QuadratureSpec& q = p.options.quadrature;
  os << "surface " << p.def.name << " (chi = " << p.def.chart.euler_characteristic() << "), " << q.panels_u
     << "x" << q.panels_v << " panels, " << q.nodes_per_panel << " nodes per panel, " << q.boundary_panels
     << " boundary panels\n";
  for (const auto& r : reports) {
    std::string id = r.id;
    id.resize(std::max<std::size_t>(id.size(), 14), ' ');
    std::string status(to_string(r.status));
    status.resize(std::max<std::size_t>(status.size(), 20), ' ');
    os << id << ' ' << status << "lhs=" << format_quantity(r.lhs) << "  rhs=" << format_quantity(r.rhs)
       << "  residual=" << format_number(r.residual) << "  est_error=" << format_number(r.est_error)
       << "  tol=" << format_number(r.tolerance);
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  const Tally t = tally(reports);
  os << reports.size() << " checks: " << t.pass << " pass, " << t.fail << " fail, " << t.violated
     << " hypothesis-violated\n";
}

void write_report(std::ostream& os, OutputFormat format, const Problem& p,
                  const std::vector<IdentityReport>& reports) {
  switch (format) {
    case OutputFormat::json:
      write_json(os, p, reports);
      break;
    case OutputFormat::csv:
      write_csv(os, reports);
      break;
    case OutputFormat::text:
      write_text(os, p, reports);
      break;
  }
}

void write_listing(std::ostream& os) {
  os << "surfaces:\n";
  for (const auto& e : catalog_list()) os << "  " << e.name << "  " << e.description << "\n";
  os << "fields:\n ";
  for (const auto& n : preset_field_names()) os << ' ' << n;
  os << " normal\nscalars:\n ";
  for (const auto& n : preset_scalar_names()) os << ' ' << n;
  os << "\nidentities:\n ";
  for (const auto& n : identity_ids()) os << ' ' << n;
  os << "\n";
}

}  // namespace

std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                                      std::ostream& err) {
  CLI::App app{"Numerically verify integral identities of surface patches in R^3.", "verify"};
  std::string format = "text";
  std::vector<double> direction;
  bool list = false;
  app.add_option("--surface", config.surface, "catalog surface name or definition file");
  app.add_option("--field", config.fields,
                 "field V, then W: preset, definition field, normal, or inline \"vx,vy,vz\"");
  app.add_option("--scalar", config.scalars, "scalar f, then g: preset, definition scalar, or expression");
  app.add_option("--identity", config.identities, "checker id or 'all' (repeatable, comma-separated)")
      ->delimiter(',');
  app.add_option("--panels", config.panels, "surface panels per parameter direction");
  app.add_option("--nodes", config.nodes, "Gauss-Legendre nodes per panel");
  app.add_option("--boundary-panels", config.boundary_panels, "panels per boundary segment");
  app.add_option("--tol", config.tolerance, "relative tolerance for every checker");
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", config.out, "write the report to this file");
  app.add_option("--seed", config.seed, "seed of the random gb-integrand sweep");
  app.add_option("--direction", direction, "Liouville reference direction C (three numbers)")->expected(3);
  app.add_flag("--serial", config.serial, "use the serial quadrature path");
  app.add_flag("--list", list, "list catalog surfaces, presets and checker ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  if (list) {
    write_listing(out);
    return kExitPass;
  }
  if (format == "json") config.format = OutputFormat::json;
  if (format == "csv") config.format = OutputFormat::csv;
  if (!direction.empty()) config.direction = Vec3(direction[0], direction[1], direction[2]);
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  std::optional<Problem> problem;
  try {
    ids = selected_ids(config.identities);
    problem.emplace(resolve(config));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DefinitionError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::vector<IdentityReport> reports = run_checks(*problem, ids);

  if (config.out.empty()) {
    write_report(out, config.format, *problem, reports);
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.out << "'\n";
      return kExitUsage;
    }
    write_report(file, config.format, *problem, reports);
  }

  bool failed = false;
  for (const auto& r : reports) {
    if (r.status != Status::fail) continue;
    failed = true;
    err << "FAIL " << r.id << ": residual " << format_number(r.residual) << ", tolerance "
        << format_number(r.tolerance);
    if (!r.note.empty()) err << " (" << r.note << ")";
    err << "\n";
  }
  return failed ? kExitFailure : kExitPass;
}

int verify_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const auto code = parse_command_line(argc, argv, config, out, err)) return *code;
  return run(config, out, err);
}

}  // namespace surfint
