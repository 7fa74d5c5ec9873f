#include "rinvex/report.hpp"

#include "rinvex/errors.hpp"
#include "rinvex/invexity.hpp"
#include "rinvex/monotonicity.hpp"
#include "rinvex/vvlip.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace rinvex {

using nlohmann::ordered_json;

namespace {

ordered_json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double read_number(const ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return kNaN;
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  if (j.is_null()) return kNaN;
  throw Error(ErrorCode::SchemaError, "expected a number, got " + j.dump());
}

ordered_json coords(const Point& p) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < p.dim(); ++i) out.push_back(p[i]);
  return out;
}

Point read_point(const ordered_json& j) {
  const auto values = j.get<std::vector<double>>();
  return Point{Eigen::Map<const Vec>(values.data(), static_cast<Eigen::Index>(values.size()))};
}

ordered_json witness_json(const Witness& w) {
  ordered_json out = ordered_json::object();
  if (w.u) out["u"] = coords(*w.u);
  if (w.v) out["v"] = coords(*w.v);
  if (w.s) out["s"] = *w.s;
  if (w.t) out["t"] = *w.t;
  return out;
}

Witness read_witness(const ordered_json& j) {
  Witness w;
  if (j.contains("u")) w.u = read_point(j["u"]);
  if (j.contains("v")) w.v = read_point(j["v"]);
  if (j.contains("s")) w.s = j["s"].get<double>();
  if (j.contains("t")) w.t = j["t"].get<double>();
  return w;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json out{{"status", to_string(v.status)},
                   {"delta_hat", number(v.delta_hat)},
                   {"worst_margin", number(v.worst_margin)},
                   {"witness", witness_json(v.witness)},
                   {"samples_evaluated", v.samples_evaluated},
                   {"skipped_degenerate", v.skipped_degenerate},
                   {"antecedent_hits", v.antecedent_hits}};
  if (!v.delta_witness.empty()) out["delta_witness"] = witness_json(v.delta_witness);
  if (v.probe_violations) out["probe_violations"] = *v.probe_violations;
  return out;
}

void fill_from_verdict(CheckRecord& r, const Verdict& v) {
  r.status = v.status;
  r.delta_hat = v.delta_hat;
  r.worst_margin = v.worst_margin;
  r.witness = v.witness;
  r.samples_evaluated = v.samples_evaluated;
  r.skipped_degenerate = v.skipped_degenerate;
  r.details["antecedent_hits"] = v.antecedent_hits;
  if (!v.delta_witness.empty()) r.details["delta_witness"] = witness_json(v.delta_witness);
  if (v.probe_violations) r.details["probe_violations"] = *v.probe_violations;
}

void fill_from_cross(CheckRecord& r, const CrossCheckReport& c) {
  r.status = c.status;
  ordered_json verdicts = ordered_json::object();
  for (const auto& [name, v] : c.verdicts) {
    verdicts[name] = verdict_json(v);
    r.samples_evaluated = std::max(r.samples_evaluated, v.samples_evaluated);
  }
  r.details["verdicts"] = verdicts;
  r.details["flags"] = c.flags;
  r.details["not_applicable"] = c.not_applicable;
  if (c.condition_c_satisfied) r.details["condition_c_satisfied"] = *c.condition_c_satisfied;
}

ordered_json index_set(const std::vector<std::size_t>& set, const std::vector<Point>& grid) {
  ordered_json out = ordered_json::array();
  for (auto i : set) out.push_back({{"index", i}, {"point", coords(grid[i])}});
  return out;
}

GeneralizedKind generalized_kind(const std::string& id) {
  if (id == "pseudo1") return GeneralizedKind::Pseudo1;
  if (id == "pseudo2") return GeneralizedKind::Pseudo2;
  if (id == "quasi1") return GeneralizedKind::Quasi1;
  return GeneralizedKind::Quasi2;
}

void dispatch(const ProblemInstance& p, const CheckItem& item, CheckRecord& r) {
  const Chart& chart = p.chart;
  const int m = p.strength.m;
  const CheckOptions opts = p.options();
  SampleScheme scheme = p.scheme;
  scheme.source = item.samples;
  const GeodesicMode mode = item.geodesic_mode.value_or(p.geodesic_override.value_or(GeodesicMode::EtaGeodesic));
  const std::string& id = item.check;

  const ScalarField h = p.objective(item.objective);
  const EtaMap eta = p.eta_map(item.objective);
  if (id == "preinvex" || id == "closure" || id == "infimal") r.details["geodesic_mode"] = to_string(mode);

  if (id == "invex") {
    fill_from_verdict(r, check_strongly_eta_invex(chart, h, eta, m, scheme, opts));
  } else if (id == "preinvex") {
    fill_from_verdict(r, check_strongly_preinvex(chart, h, eta, m, scheme, mode, opts));
  } else if (id == "geodesic_convex") {
    fill_from_verdict(r, check_strongly_geodesic_convex(chart, h, m, scheme, opts));
  } else if (id == "pseudo1" || id == "pseudo2" || id == "quasi1" || id == "quasi2") {
    fill_from_verdict(r, check_generalized_invex(chart, h, eta, m, generalized_kind(id), scheme, opts));
  } else if (id == "condition_c") {
    fill_from_verdict(r, check_condition_c_sampled(chart, eta, scheme, opts));
  } else if (id == "property_p") {
    fill_from_verdict(r, check_property_p_sampled(chart, eta, scheme, opts));
  } else if (id == "cross_preinvex_invex") {
    fill_from_cross(r, cross_check_preinvex_invex(chart, h, eta, m, scheme, opts));
  } else if (id == "monotone") {
    const VectorField x = fields::parse_vector_field(p.vector_field, chart, h);
    fill_from_verdict(r, check_monotone_vector_field(chart, x, scheme, opts));
  } else if (id == "eta_monotone" || id == "eta_pseudo_monotone") {
    const VectorField x = fields::parse_vector_field(p.vector_field, chart, h);
    const MonotoneKind kind = id == "eta_monotone" ? MonotoneKind::Strong : MonotoneKind::Pseudo;
    fill_from_verdict(r, check_invariant_eta_monotone(chart, x, eta, m, kind, scheme, opts));
  } else if (id == "cross_invex_monotone") {
    fill_from_cross(r, cross_check_invex_monotone(chart, h, eta, m, scheme, opts));
  } else if (id == "closure") {
    const auto family = p.family_fields();
    const std::vector<double> weights = p.weights.empty() ? std::vector<double>(family.size(), 1.0) : p.weights;
    const ClosureReport c = check_closure_theorems(chart, family, weights, eta, m, scheme, mode, opts);
    r.status = c.status;
    r.delta_hat = c.delta_min;
    r.worst_margin = std::min(c.sum.worst_margin, c.max.worst_margin);
    r.witness = c.sum.worst_margin <= c.max.worst_margin ? c.sum.witness : c.max.witness;
    r.samples_evaluated = c.sum.samples_evaluated;
    ordered_json members = ordered_json::array();
    for (const auto& v : c.members) members.push_back(verdict_json(v));
    r.details["members"] = members;
    r.details["delta_min"] = number(c.delta_min);
    r.details["sum_delta"] = number(c.sum_delta);
    r.details["weighted_sum"] = verdict_json(c.sum);
    r.details["pointwise_max"] = verdict_json(c.max);
    r.details["sum_violations"] = c.sum_violations;
    r.details["max_violations"] = c.max_violations;
  } else if (id == "infimal") {
    if (!p.bivariate) throw Error(ErrorCode::SchemaError, "check infimal needs a bivariate field");
    const InfimalReport c =
        check_infimal_preinvex(chart, fields::parse_bivariate(*p.bivariate), eta, m, scheme, mode, opts);
    r.status = c.status;
    r.delta_hat = c.psi.delta_hat;
    r.worst_margin = c.psi.worst_margin;
    r.witness = c.psi.witness;
    r.samples_evaluated = c.psi.samples_evaluated;
    r.skipped_degenerate = c.psi.skipped_degenerate;
    r.details["joint"] = verdict_json(c.joint);
    r.details["psi"] = verdict_json(c.psi);
  } else if (id == "strict_minimizer" || id == "vvlip") {
    if (!p.u_star) throw Error(ErrorCode::SchemaError, "check " + id + " needs u_star");
    const Point u_star = chart.point(*p.u_star);
    const auto candidates = candidate_points(chart, scheme);
    const MopProblem mop = p.mop();
    r.details["dominance"] = to_string(p.dominance);
    r.details["u_star"] = coords(u_star);
    if (id == "strict_minimizer") {
      if (p.locality) r.details["locality"] = *p.locality;
      fill_from_verdict(r, check_strict_minimizer(mop, u_star, candidates, p.locality, p.dominance, opts));
    } else {
      fill_from_verdict(r, check_vvlip_solution(mop, u_star, candidates, p.dominance, opts));
    }
  } else if (id == "scan") {
    SampleScheme grid_scheme = p.scheme;
    grid_scheme.grid_points_per_axis = p.scan_points;
    const auto grid = grid_points(chart, grid_scheme);
    const ScanResult s = scan_equivalence(p.mop(), grid, scheme, p.dominance, opts);
    r.status = s.status;
    r.samples_evaluated = grid.size();
    r.details["dominance"] = to_string(p.dominance);
    r.details["grid_size"] = grid.size();
    r.details["minimizer_set"] = index_set(s.minimizer_set, grid);
    r.details["vvlip_set"] = index_set(s.vvlip_set, grid);
    ordered_json dis = ordered_json::array();
    for (const auto& d : s.disagreements) {
      dis.push_back({{"index", d.index},
                     {"point", coords(d.point)},
                     {"claimed_by", d.claimed_by},
                     {"witness", witness_json(d.witness)}});
    }
    r.details["disagreements"] = dis;
    ordered_json pre = ordered_json::array();
    for (const auto& v : s.preconditions) pre.push_back(verdict_json(v));
    r.details["preconditions"] = pre;
  } else {
    throw Error(ErrorCode::SchemaError, "unknown check '" + id + "'");
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

ordered_json record_json(const CheckRecord& r) {
  ordered_json out{{"id", r.id},
                   {"label", r.label},
                   {"definition", r.definition},
                   {"status", to_string(r.status)},
                   {"delta_hat", number(r.delta_hat)},
                   {"worst_margin", number(r.worst_margin)},
                   {"witness", witness_json(r.witness)},
                   {"samples_evaluated", r.samples_evaluated},
                   {"skipped_degenerate", r.skipped_degenerate},
                   {"wall_time_ms", r.wall_time_ms}};
  out["expected"] = r.expected ? ordered_json(to_string(*r.expected)) : ordered_json(nullptr);
  out["as_expected"] = r.as_expected;
  out["details"] = r.details;
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

Status read_status(const ordered_json& j) {
  const auto name = j.get<std::string>();
  const auto s = status_from_string(name);
  if (!s) throw Error(ErrorCode::SchemaError, "unknown status '" + name + "'");
  return *s;
}

}  // namespace

CheckRecord run_check(const ProblemInstance& problem, const CheckItem& item) {
  CheckRecord r;
  r.id = item.check;
  r.label = item.label();
  r.definition = check_definition(item.check);
  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(problem, item, r);
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.error = e.what();
  }
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (problem.expectations_active && item.expect) r.expected = item.expect;
  r.as_expected = r.expected ? r.status == *r.expected : is_clean(r.status);
  return r;
}

Status overall_status(const std::vector<CheckRecord>& checks) {
  Status worst = Status::HoldsVacuously;
  int worst_severity = -1;
  for (const auto& r : checks) {
    if (severity(r.status) > worst_severity) {
      worst = r.status;
      worst_severity = severity(r.status);
    }
  }
  return worst;
}

ReportDocument run_suite(const ProblemInstance& problem) {
  ReportDocument doc;
  doc.timestamp = utc_timestamp();
  doc.problem = problem.to_json();
  for (const auto& item : problem.suite) doc.checks.push_back(run_check(problem, item));
  doc.overall_status = overall_status(doc.checks);
  doc.expectations_met = std::all_of(doc.checks.begin(), doc.checks.end(), [](const auto& r) { return r.as_expected; });
  doc.exit_code = doc.expectations_met ? kExitOk : kExitUnexpected;
  return doc;
}

ordered_json ReportDocument::to_json() const {
  ordered_json checks_json = ordered_json::array();
  for (const auto& r : checks) checks_json.push_back(record_json(r));
  return {{"schema", schema},
          {"tool_version", tool_version},
          {"timestamp", timestamp},
          {"problem", problem},
          {"checks", checks_json},
          {"overall_status", to_string(overall_status)},
          {"expectations_met", expectations_met},
          {"exit_code", exit_code}};
}

std::string ReportDocument::dump() const { return to_json().dump(2) + "\n"; }

ReportDocument report_from_json(const ordered_json& j) {
  try {
    ReportDocument doc;
    doc.schema = j.at("schema").get<std::string>();
    if (doc.schema != kReportSchema) throw Error(ErrorCode::SchemaError, "unsupported report schema '" + doc.schema + "'");
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.timestamp = j.at("timestamp").get<std::string>();
    doc.problem = j.at("problem");
    for (const auto& c : j.at("checks")) {
      CheckRecord r;
      r.id = c.at("id").get<std::string>();
      r.label = c.at("label").get<std::string>();
      r.definition = c.at("definition").get<std::string>();
      r.status = read_status(c.at("status"));
      r.delta_hat = read_number(c.at("delta_hat"));
      r.worst_margin = read_number(c.at("worst_margin"));
      r.witness = read_witness(c.at("witness"));
      r.samples_evaluated = c.at("samples_evaluated").get<std::size_t>();
      r.skipped_degenerate = c.at("skipped_degenerate").get<std::size_t>();
      r.wall_time_ms = c.at("wall_time_ms").get<double>();
      if (!c.at("expected").is_null()) r.expected = read_status(c["expected"]);
      r.as_expected = c.at("as_expected").get<bool>();
      r.details = c.at("details");
      if (c.contains("error")) r.error = c["error"].get<std::string>();
      doc.checks.push_back(std::move(r));
    }
    doc.overall_status = read_status(j.at("overall_status"));
    doc.expectations_met = j.at("expectations_met").get<bool>();
    doc.exit_code = j.at("exit_code").get<int>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("malformed report: ") + e.what());
  }
}

ReportDocument parse_report(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(j);
}

std::string witnesses_csv(const ReportDocument& report) {
  auto join = [](const std::optional<Point>& p) {
    if (!p) return std::string();
    std::ostringstream out;
    out << std::setprecision(17);
    for (int i = 0; i < p->dim(); ++i) out << (i ? ";" : "") << (*p)[i];
    return out.str();
  };
  std::ostringstream out;
  out << std::setprecision(17);
  out << "check,status,worst_margin,u,v,s,t\n";
  for (const auto& r : report.checks) {
    if (r.witness.empty()) continue;
    out << '"' << r.label << "\"," << to_string(r.status) << ',' << r.worst_margin << ',' << join(r.witness.u) << ','
        << join(r.witness.v) << ',';
    if (r.witness.s) out << *r.witness.s;
    out << ',';
    if (r.witness.t) out << *r.witness.t;
    out << '\n';
  }
  return out.str();
}

}  // namespace rinvex
