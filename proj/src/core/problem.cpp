#include "rinvex/problem.hpp"

#include "rinvex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace rinvex {

using nlohmann::ordered_json;

namespace {

struct CheckInfo {
  const char* id;
  const char* definition;
};

// clang-format off
const CheckInfo kChecks[] = {
    {"invex", "strongly eta-invex of order m: h(u) >= h(v) + dh_v(eta(u,v)) + delta |eta(u,v)|_v^m"},
    {"preinvex", "strongly geodesic preinvex of order m: h(r(s)) <= s h(u) + (1-s) h(v) - delta s(1-s) |eta(u,v)|_v^m"},
    {"geodesic_convex", "strongly geodesic convex of order m: h(r(s)) <= s h(u) + (1-s) h(v) - delta s(1-s) |r'(s)|^m"},
    {"pseudo1", "strongly pseudo eta-invex type 1: dh_v(eta) >= 0 => h(u) >= h(v) + delta |eta|^m"},
    {"pseudo2", "strongly pseudo eta-invex type 2: dh_v(eta) + delta |eta|^m >= 0 => h(u) >= h(v)"},
    {"quasi1", "strongly quasi eta-invex type 1: h(u) <= h(v) => dh_v(eta) + delta |eta|^m <= 0"},
    {"quasi2", "strongly quasi eta-invex type 2: h(u) <= h(v) + delta |eta|^m => dh_v(eta) <= 0"},
    {"condition_c", "Condition C: eta(v, r(s)) = -s P[eta(u,v)] and eta(r(1), r(s)) = (1-s) P[eta(u,v)] along r(s) = exp_v(s eta(u,v))"},
    {"property_p", "property (P): r'(t)(s-t) = eta(r(s), r(t)) along the geodesic r(0) = v, r(1) = u"},
    {"cross_preinvex_invex", "preinvex => eta-invex; eta-invex with Condition C => preinvex"},
    {"monotone", "monotone vector field: <r'(0), P_{u->v}[X(u)] - X(v)>_v >= 0"},
    {"eta_monotone", "strongly invariant eta-monotone of order m: <X(v),eta(u,v)>_v + <X(u),eta(v,u)>_u <= -delta (|eta(u,v)|^m + |eta(v,u)|^m)"},
    {"eta_pseudo_monotone", "strongly invariant pseudo eta-monotone of order m: <X(u),eta(v,u)>_u >= 0 => <X(v),eta(u,v)>_v <= -delta |eta(u,v)|^m"},
    {"cross_invex_monotone", "eta-invex => gradient strongly invariant eta-monotone; converses for integrable eta"},
    {"closure", "weighted sums and pointwise maxima of strongly preinvex functions are strongly preinvex"},
    {"infimal", "Psi(u) = inf_v F(u,v) is strongly preinvex when F is jointly strongly preinvex"},
    {"strict_minimizer", "strict eta-minimizer of order m: H(u) not< H(u*) + delta |eta(u,u*)|^m for all u"},
    {"vvlip", "VVLIP solution: (<grad h_i(u*), eta(u,u*)>)_i not< 0 for all u"},
    {"scan", "u* solves the VVLIP iff u* is a strict eta-minimizer of order m (objectives strongly eta-invex)"},
};
// clang-format on

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& token, const std::string& where) {
  try {
    size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    schema_error(where + ": expected a number, got '" + token + "'");
  }
}

std::vector<double> parse_numbers(std::string_view s, const std::string& where) {
  std::vector<double> out;
  for (const auto& token : split(s, ',')) {
    if (!token.empty()) out.push_back(parse_double(token, where));
  }
  return out;
}

Vec to_vec(const std::vector<double>& v) { return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())); }

std::vector<double> from_vec(const Vec& v) { return {v.data(), v.data() + v.size()}; }

SampleSource parse_source(std::string_view name) {
  if (name == "box") return SampleSource::Box;
  if (name == "explicit") return SampleSource::Explicit;
  schema_error("unknown sample source '" + std::string(name) + "' (box | explicit)");
}

const char* source_name(SampleSource s) { return s == SampleSource::Box ? "box" : "explicit"; }

void require_known_check(const std::string& id) {
  const auto& ids = known_checks();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) schema_error("unknown check '" + id + "'");
}

CheckItem item(std::string check, std::optional<Status> expect = std::nullopt,
               std::optional<GeodesicMode> mode = std::nullopt, SampleSource samples = SampleSource::Box) {
  CheckItem it;
  it.check = std::move(check);
  it.expect = expect;
  it.geodesic_mode = mode;
  it.samples = samples;
  return it;
}

std::vector<Interval> square_box(double lo, double hi, int dim) { return std::vector<Interval>(dim, {lo, hi}); }

// ---------------------------------------------------------------------------
// Built-in registry

ProblemInstance example_3_2() {
  ProblemInstance p;
  p.name = "example_3_2";
  p.description = "h = u1 + u2^2 on the positive orthant with eta(u,v) = (-1 - v1, -v2)";
  p.chart = Chart::positive_orthant2();
  p.objectives = {"u1_plus_u2sq"};
  p.eta = "ex32";
  p.strength = {0.0, 2};
  p.scheme.box = square_box(0.5, 5.0, 2);
  p.scheme.explicit_pairs = {{to_vec({0.25, 0.25}), to_vec({1.0 / 9.0, 1.0 / 9.0})}};
  p.u_star = to_vec({1.0, 1.0});
  p.suite = {
      item("invex", Status::Holds),
      item("preinvex", Status::Violated, GeodesicMode::ConnectingFromU, SampleSource::Explicit),
      item("preinvex", Status::Violated, GeodesicMode::EtaGeodesic),
      item("condition_c", Status::Violated),
      item("property_p", Status::Violated),
      item("cross_preinvex_invex", Status::Consistent),
      item("eta_monotone", Status::Holds),
      item("eta_pseudo_monotone", Status::HoldsVacuously),
      item("cross_invex_monotone", Status::Consistent),
      item("strict_minimizer", Status::Violated),
      item("vvlip", Status::Violated),
      item("scan", Status::Equivalent),
  };
  return p;
}

ProblemInstance example_3_3() {
  ProblemInstance p;
  p.name = "example_3_3";
  p.description = "h = ln u1 + (ln u2)^3 on the positive orthant with eta(u,v) = (-v1^2, 0)";
  p.chart = Chart::positive_orthant2();
  p.objectives = {"log_u1_plus_log_u2_cubed"};
  p.eta = "ex33";
  p.strength = {0.0, 2};
  p.scheme.box = square_box(0.5, 5.0, 2);
  p.scheme.explicit_pairs = {{to_vec({0.5, 0.5}), to_vec({1.0, std::exp(2.0)})}};
  p.suite = {
      item("invex", Status::Violated),
      item("pseudo1", Status::HoldsVacuously),
      item("preinvex", Status::Violated, GeodesicMode::EtaGeodesic),
      item("cross_preinvex_invex", Status::Consistent),
      item("cross_invex_monotone", Status::Consistent),
  };
  return p;
}

ProblemInstance example_3_4() {
  ProblemInstance p;
  p.name = "example_3_4";
  p.description = "h = u1^3 + ln u2 on the positive orthant with eta(u,v) = (-v1^2, -v2^2)";
  p.chart = Chart::positive_orthant2();
  p.objectives = {"u1cubed_plus_log_u2"};
  p.eta = "ex34";
  p.strength = {0.0, 2};
  p.scheme.box = square_box(0.5, 2.0, 2);
  p.scheme.explicit_pairs = {{to_vec({1.0, std::exp(-5.0)}), to_vec({1.0, 1.0})}};
  p.suite = {
      item("invex", Status::Violated),
      item("quasi1", Status::Holds),
      item("preinvex", Status::Violated, GeodesicMode::EtaGeodesic),
      item("cross_preinvex_invex", Status::Consistent),
      item("cross_invex_monotone", Status::Consistent),
  };
  return p;
}

ProblemInstance example_4_1_m2() {
  ProblemInstance p;
  p.name = "example_4_1_m2";
  p.description = "gradient field of h = u1 + u2^2 on the positive orthant with eta(u,v) = -grad h(v)";
  p.chart = Chart::positive_orthant2();
  p.objectives = {"u1_plus_u2sq"};
  p.eta = "grad_resolved";
  p.strength = {0.0, 2};
  p.scheme.box = square_box(0.5, 5.0, 2);
  p.suite = {
      item("eta_monotone", Status::Holds),
      item("invex", Status::Holds),
      item("cross_invex_monotone", Status::Consistent),
  };
  return p;
}

ProblemInstance euclidean_baseline() {
  ProblemInstance p;
  p.name = "euclidean_baseline";
  p.description = "h = |u|^2 on R^2 with eta(u,v) = u - v";
  p.chart = Chart::euclidean(2);
  p.objectives = {"sqnorm"};
  p.family = {"sqnorm", "sqdist(0.5,-0.5)"};
  p.weights = {1.0, 1.0};
  p.eta = "diff";
  p.bivariate = "sum_sqnorm";
  p.strength = {0.0, 2};
  p.scheme.box = square_box(-1.0, 1.0, 2);
  p.u_star = to_vec({0.0, 0.0});
  for (const auto& id : known_checks()) {
    Status expect = Status::Holds;
    if (id == "condition_c" || id == "property_p") expect = Status::Satisfied;
    if (id.rfind("cross_", 0) == 0) expect = Status::Consistent;
    if (id == "scan") expect = Status::Equivalent;
    p.suite.push_back(item(id, expect));
  }
  return p;
}

ProblemInstance vvlip_demo() {
  ProblemInstance p;
  p.name = "vvlip_demo";
  p.description = "H = (|u|^2, |u - (1,0)|^2) on R^2 with eta(u,v) = u - v";
  p.chart = Chart::euclidean(2);
  p.objectives = {"sqnorm", "sqdist(1,0)"};
  p.eta = "diff";
  p.strength = {0.0, 2};
  p.scheme.box = square_box(-1.0, 1.0, 2);
  p.u_star = to_vec({0.5, 0.0});
  p.suite = {
      item("invex", Status::Holds),
      item("closure", Status::Holds),
      item("strict_minimizer", Status::Holds),
      item("vvlip", Status::Holds),
      item("scan", Status::Equivalent),
  };
  return p;
}

using Factory = ProblemInstance (*)();

const std::vector<std::pair<std::string, Factory>>& registry() {
  static const std::vector<std::pair<std::string, Factory>> r{
      {"example_3_2", example_3_2},           {"example_3_3", example_3_3},
      {"example_3_4", example_3_4},           {"example_4_1_m2", example_4_1_m2},
      {"euclidean_baseline", euclidean_baseline}, {"vvlip_demo", vvlip_demo},
  };
  return r;
}

// ---------------------------------------------------------------------------
// JSON config

template <typename T>
T get_field(const ordered_json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    schema_error(where + "." + key + ": " + e.what());
  }
}

std::vector<Interval> parse_box_json(const ordered_json& j, int dim) {
  if (!j.is_array() || j.empty()) schema_error("scheme.box: expected [lo, hi] or [[lo, hi], ...]");
  if (j[0].is_number()) {
    if (j.size() != 2) schema_error("scheme.box: expected [lo, hi]");
    return square_box(j[0].get<double>(), j[1].get<double>(), dim);
  }
  std::vector<Interval> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& axis = j[i];
    if (!axis.is_array() || axis.size() != 2 || !axis[0].is_number() || !axis[1].is_number()) {
      schema_error("scheme.box[" + std::to_string(i) + "]: expected [lo, hi]");
    }
    out.push_back({axis[0].get<double>(), axis[1].get<double>()});
  }
  return out;
}

void apply_scheme_json(ProblemInstance& p, const ordered_json& j) {
  static const char* kKeys[] = {"box", "grid", "random_pairs", "seed", "s_grid", "explicit_pairs"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      schema_error("scheme." + key + ": unknown field");
    }
  }
  if (j.contains("box")) p.scheme.box = parse_box_json(j["box"], p.chart.dim());
  if (j.contains("grid")) p.scheme.grid_points_per_axis = get_field<int>(j, "grid", "scheme");
  if (j.contains("random_pairs")) p.scheme.random_pairs = get_field<int>(j, "random_pairs", "scheme");
  if (j.contains("seed")) p.scheme.seed = get_field<std::uint64_t>(j, "seed", "scheme");
  if (j.contains("s_grid")) p.scheme.s_grid = get_field<std::vector<double>>(j, "s_grid", "scheme");
  if (j.contains("explicit_pairs")) {
    p.scheme.explicit_pairs.clear();
    const auto& pairs = j["explicit_pairs"];
    if (!pairs.is_array()) schema_error("scheme.explicit_pairs: expected a list of [u, v]");
    for (size_t i = 0; i < pairs.size(); ++i) {
      const std::string where = "scheme.explicit_pairs[" + std::to_string(i) + "]";
      if (!pairs[i].is_array() || pairs[i].size() != 2) schema_error(where + ": expected [u, v]");
      try {
        p.scheme.explicit_pairs.emplace_back(to_vec(pairs[i][0].get<std::vector<double>>()),
                                             to_vec(pairs[i][1].get<std::vector<double>>()));
      } catch (const nlohmann::json::exception& e) {
        schema_error(where + ": " + e.what());
      }
    }
  }
}

CheckItem parse_item_json(const ordered_json& j, size_t index) {
  const std::string where = "suite[" + std::to_string(index) + "]";
  CheckItem it;
  if (j.is_string()) {
    it.check = j.get<std::string>();
    require_known_check(it.check);
    return it;
  }
  if (!j.is_object()) schema_error(where + ": expected a check id or an object");
  static const char* kKeys[] = {"check", "geodesic_mode", "samples", "expect", "objective"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      schema_error(where + "." + key + ": unknown field");
    }
  }
  it.check = get_field<std::string>(j, "check", where);
  require_known_check(it.check);
  if (j.contains("geodesic_mode")) {
    it.geodesic_mode = geodesic_mode_from_string(get_field<std::string>(j, "geodesic_mode", where));
  }
  if (j.contains("samples")) it.samples = parse_source(get_field<std::string>(j, "samples", where));
  if (j.contains("expect")) {
    const auto name = get_field<std::string>(j, "expect", where);
    it.expect = status_from_string(name);
    if (!it.expect) schema_error(where + ".expect: unknown status '" + name + "'");
  }
  if (j.contains("objective")) it.objective = get_field<int>(j, "objective", where);
  return it;
}

ProblemInstance from_json_config(const ordered_json& j) {
  if (!j.is_object()) schema_error("config: expected a JSON object");
  static const char* kKeys[] = {"name",     "base",         "description", "chart",    "objectives", "family",
                                "weights",  "eta",          "vector_field", "bivariate", "m",          "delta",
                                "scheme",   "u_star",       "locality",    "scan_points", "suite",     "tolerance",
                                "geodesic_mode", "dominance"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      schema_error("config." + key + ": unknown field");
    }
  }

  ProblemInstance p;
  if (j.contains("base")) {
    p = load_builtin(get_field<std::string>(j, "base", "config"));
  } else {
    p.name = "custom";
    p.suite.clear();
  }
  const std::string w = "config";
  if (j.contains("name")) p.name = get_field<std::string>(j, "name", w);
  if (j.contains("description")) p.description = get_field<std::string>(j, "description", w);
  if (j.contains("chart")) {
    p.chart = chart_from_name(get_field<std::string>(j, "chart", w));
    if (!j.contains("scheme") || !j["scheme"].contains("box")) {
      const double lo = p.chart.kind() == ChartKind::PositiveOrthant2 ? 0.5 : -1.0;
      const double hi = p.chart.kind() == ChartKind::PositiveOrthant2 ? 5.0 : 1.0;
      p.scheme.box = square_box(lo, hi, p.chart.dim());
    }
  }
  if (j.contains("objectives")) p.objectives = get_field<std::vector<std::string>>(j, "objectives", w);
  if (j.contains("family")) p.family = get_field<std::vector<std::string>>(j, "family", w);
  if (j.contains("weights")) p.weights = get_field<std::vector<double>>(j, "weights", w);
  if (j.contains("eta")) p.eta = get_field<std::string>(j, "eta", w);
  if (j.contains("vector_field")) p.vector_field = get_field<std::string>(j, "vector_field", w);
  if (j.contains("bivariate")) p.bivariate = get_field<std::string>(j, "bivariate", w);
  if (j.contains("m")) p.strength.m = get_field<int>(j, "m", w);
  if (j.contains("delta")) {
    p.strength.delta = get_field<double>(j, "delta", w);
    p.delta_given = true;
  }
  if (j.contains("scheme")) {
    if (!j["scheme"].is_object()) schema_error("config.scheme: expected an object");
    apply_scheme_json(p, j["scheme"]);
  }
  if (j.contains("u_star")) p.u_star = to_vec(get_field<std::vector<double>>(j, "u_star", w));
  if (j.contains("locality")) p.locality = get_field<double>(j, "locality", w);
  if (j.contains("scan_points")) p.scan_points = get_field<int>(j, "scan_points", w);
  if (j.contains("tolerance")) p.tolerance = get_field<double>(j, "tolerance", w);
  if (j.contains("geodesic_mode")) {
    p.geodesic_override = geodesic_mode_from_string(get_field<std::string>(j, "geodesic_mode", w));
  }
  if (j.contains("dominance")) p.dominance = dominance_mode_from_string(get_field<std::string>(j, "dominance", w));
  if (j.contains("suite")) {
    if (!j["suite"].is_array()) schema_error("config.suite: expected a list");
    p.suite.clear();
    for (size_t i = 0; i < j["suite"].size(); ++i) p.suite.push_back(parse_item_json(j["suite"][i], i));
  }
  return p;
}

// ---------------------------------------------------------------------------
// key = value config, translated to the JSON form

ordered_json kv_to_json(std::string_view text) {
  ordered_json j = ordered_json::object();
  ordered_json scheme = ordered_json::object();
  std::map<std::string, ordered_json> item_options;  // check id -> options
  std::vector<std::string> suite_order;
  bool has_suite = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string::npos) schema_error(where + ": expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const std::string at = where + " (" + key + ")";

    if (key == "name" || key == "base" || key == "description" || key == "chart" || key == "eta" ||
        key == "vector_field" || key == "bivariate" || key == "geodesic_mode" || key == "dominance") {
      j[key] = value;
    } else if (key == "objectives" || key == "family") {
      j[key] = split(value, ';');
    } else if (key == "weights" || key == "u_star") {
      j[key] = parse_numbers(value, at);
    } else if (key == "m" || key == "scan_points") {
      j[key] = static_cast<int>(parse_double(value, at));
    } else if (key == "delta" || key == "locality" || key == "tolerance") {
      j[key] = parse_double(value, at);
    } else if (key == "grid" || key == "random_pairs") {
      scheme[key] = static_cast<int>(parse_double(value, at));
    } else if (key == "seed") {
      try {
        scheme["seed"] = static_cast<std::uint64_t>(std::stoull(value));
      } catch (const std::exception&) {
        schema_error(at + ": expected an unsigned integer");
      }
    } else if (key == "s_grid") {
      scheme["s_grid"] = parse_numbers(value, at);
    } else if (key == "box") {
      ordered_json box = ordered_json::array();
      for (const auto& axis : split(value, ';')) {
        const auto nums = parse_numbers(axis, at);
        if (nums.size() != 2) schema_error(at + ": each axis needs lo,hi");
        box.push_back(nums);
      }
      scheme["box"] = box.size() == 1 ? box[0] : box;
    } else if (key == "pair") {
      const auto halves = split(value, '|');
      if (halves.size() != 2) schema_error(at + ": expected 'u1,u2 | v1,v2'");
      scheme["explicit_pairs"].push_back({parse_numbers(halves[0], at), parse_numbers(halves[1], at)});
    } else if (key == "suite") {
      has_suite = true;
      for (const auto& id : split(value, ',')) {
        if (id.empty()) continue;
        try {
          require_known_check(id);
        } catch (const Error& e) {
          schema_error(at + ": " + e.what());
        }
        suite_order.push_back(id);
      }
    } else if (key.rfind("check.", 0) == 0) {
      const auto parts = split(key, '.');
      if (parts.size() != 3) schema_error(at + ": expected check.<id>.<option>");
      const std::string& option = parts[2];
      if (option == "objective") {
        item_options[parts[1]][option] = static_cast<int>(parse_double(value, at));
      } else if (option == "geodesic_mode" || option == "samples" || option == "expect") {
        item_options[parts[1]][option] = value;
      } else {
        schema_error(at + ": unknown check option '" + option + "'");
      }
    } else {
      schema_error(at + ": unknown key");
    }
  }
  if (!scheme.empty()) j["scheme"] = scheme;
  if (has_suite) {
    ordered_json suite = ordered_json::array();
    for (const auto& id : suite_order) {
      ordered_json entry = {{"check", id}};
      if (auto it = item_options.find(id); it != item_options.end()) entry.update(it->second);
      suite.push_back(entry);
    }
    j["suite"] = suite;
  } else if (!item_options.empty()) {
    schema_error("check.* options given without a suite");
  }
  return j;
}

}  // namespace

std::string CheckItem::label() const {
  std::string out = check;
  std::vector<std::string> tags;
  if (geodesic_mode) tags.emplace_back(to_string(*geodesic_mode));
  if (samples == SampleSource::Explicit) tags.emplace_back("explicit");
  if (objective != 0) tags.push_back("objective " + std::to_string(objective));
  if (!tags.empty()) {
    out += '[';
    for (size_t i = 0; i < tags.size(); ++i) out += (i ? "," : "") + tags[i];
    out += ']';
  }
  return out;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : kChecks) out.emplace_back(c.id);
    return out;
  }();
  return ids;
}

std::string check_definition(std::string_view check) {
  for (const auto& c : kChecks) {
    if (check == c.id) return c.definition;
  }
  return {};
}

Chart chart_from_name(std::string_view name) {
  if (name == "positive_orthant2") return Chart::positive_orthant2();
  if (name.substr(0, 10) == "euclidean:") {
    const std::string dim(name.substr(10));
    try {
      return Chart::euclidean(std::stoi(dim));
    } catch (const std::exception&) {
      schema_error("bad Euclidean dimension '" + dim + "'");
    }
  }
  schema_error("unknown chart '" + std::string(name) + "'");
}

ScalarField ProblemInstance::objective(int index) const {
  if (index < 0 || index >= static_cast<int>(objectives.size())) {
    throw Error(ErrorCode::SchemaError, "objective index " + std::to_string(index) + " out of range");
  }
  return fields::parse(objectives[static_cast<size_t>(index)]);
}

std::vector<ScalarField> ProblemInstance::objective_fields() const {
  std::vector<ScalarField> out;
  for (const auto& name : objectives) out.push_back(fields::parse(name));
  return out;
}

std::vector<ScalarField> ProblemInstance::family_fields() const {
  std::vector<ScalarField> out;
  for (const auto& name : family.empty() ? objectives : family) out.push_back(fields::parse(name));
  return out;
}

EtaMap ProblemInstance::eta_map(int objective_index) const {
  return EtaMap::parse(eta, objective(objective_index), strength);
}

MopProblem ProblemInstance::mop() const { return {chart, objective_fields(), eta_map(0), strength}; }

CheckOptions ProblemInstance::options() const {
  CheckOptions o;
  o.tolerance = tolerance;
  if (delta_given) o.probe_delta = strength.delta;
  return o;
}

void ProblemInstance::validate() const {
  if (objectives.empty()) schema_error("problem '" + name + "' has no objectives");
  strength.validate();
  (void)objective_fields();
  (void)family_fields();
  (void)eta_map(0);
  (void)fields::parse_vector_field(vector_field, chart, objective(0));
  if (bivariate) (void)fields::parse_bivariate(*bivariate);
  const size_t family_size = family.empty() ? objectives.size() : family.size();
  if (!weights.empty() && weights.size() != family_size) schema_error("weights must match the closure family");
  if (!(tolerance >= 0.0)) schema_error("tolerance must be >= 0");
  if (scan_points < 1) schema_error("scan_points must be >= 1");
  scheme.validate(chart);
  if (u_star) {
    if (!chart.contains(*u_star)) throw Error(ErrorCode::DomainViolation, "u_star is outside " + chart.name());
  }
  if (locality && !(*locality > 0.0)) schema_error("locality must be > 0");
  for (const auto& it : suite) {
    require_known_check(it.check);
    if (it.objective < 0 || it.objective >= static_cast<int>(objectives.size())) {
      schema_error("check " + it.label() + " refers to a missing objective");
    }
    if ((it.check == "strict_minimizer" || it.check == "vvlip") && !u_star) {
      schema_error("check " + it.check + " needs u_star");
    }
    if (it.check == "infimal" && !bivariate) schema_error("check infimal needs a bivariate field");
  }
}

ordered_json ProblemInstance::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["description"] = description;
  j["chart"] = chart.name();
  j["objectives"] = objectives;
  if (!family.empty()) j["family"] = family;
  if (!weights.empty()) j["weights"] = weights;
  j["eta"] = eta;
  j["vector_field"] = vector_field;
  if (bivariate) j["bivariate"] = *bivariate;
  j["m"] = strength.m;
  if (delta_given) j["delta"] = strength.delta;
  ordered_json box = ordered_json::array();
  for (const auto& iv : scheme.box) box.push_back({iv.lo, iv.hi});
  ordered_json pairs = ordered_json::array();
  for (const auto& [u, v] : scheme.explicit_pairs) pairs.push_back({from_vec(u), from_vec(v)});
  j["scheme"] = {{"box", box},
                 {"grid", scheme.grid_points_per_axis},
                 {"random_pairs", scheme.random_pairs},
                 {"seed", scheme.seed},
                 {"s_grid", scheme.s_grid},
                 {"explicit_pairs", pairs}};
  if (u_star) j["u_star"] = from_vec(*u_star);
  if (locality) j["locality"] = *locality;
  j["scan_points"] = scan_points;
  j["tolerance"] = tolerance;
  if (geodesic_override) j["geodesic_mode"] = to_string(*geodesic_override);
  j["dominance"] = to_string(dominance);
  ordered_json suite_json = ordered_json::array();
  for (const auto& it : suite) {
    ordered_json e = {{"check", it.check}};
    if (it.geodesic_mode) e["geodesic_mode"] = to_string(*it.geodesic_mode);
    e["samples"] = source_name(it.samples);
    if (it.expect && expectations_active) e["expect"] = to_string(*it.expect);
    if (it.objective != 0) e["objective"] = it.objective;
    suite_json.push_back(e);
  }
  j["suite"] = suite_json;
  return j;
}

const std::vector<std::string>& builtin_problem_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, factory] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

ProblemInstance load_builtin(std::string_view name) {
  for (const auto& [n, factory] : registry()) {
    if (n == name) return factory();
  }
  throw Error(ErrorCode::UnknownProblem, "unknown problem '" + std::string(name) + "'");
}

ProblemInstance load_config(std::string_view text) {
  const std::string body = trim(text);
  ProblemInstance p;
  if (!body.empty() && body.front() == '{') {
    ordered_json j;
    try {
      j = ordered_json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      schema_error(std::string("config: invalid JSON: ") + e.what());
    }
    p = from_json_config(j);
  } else {
    p = from_json_config(kv_to_json(body));
  }
  p.validate();
  return p;
}

ProblemInstance load_problem(std::string_view source) {
  const std::string body = trim(source);
  const bool looks_like_name =
      !body.empty() && body.find_first_of("{=\n") == std::string::npos;
  if (looks_like_name) {
    ProblemInstance p = load_builtin(body);
    p.validate();
    return p;
  }
  return load_config(body);
}

void set_seed(ProblemInstance& p, std::uint64_t seed) { p.scheme.seed = seed; }

void set_grid(ProblemInstance& p, int points_per_axis) {
  if (points_per_axis < 0) throw Error(ErrorCode::InvalidArgument, "grid must be >= 0");
  p.scheme.grid_points_per_axis = points_per_axis;
}

void set_box(ProblemInstance& p, std::string_view spec) {
  const auto nums = parse_numbers(spec, "box");
  std::vector<Interval> box;
  if (nums.size() == 2) {
    box = square_box(nums[0], nums[1], p.chart.dim());
  } else if (nums.size() == 2 * static_cast<size_t>(p.chart.dim())) {
    for (size_t i = 0; i < nums.size(); i += 2) box.push_back({nums[i], nums[i + 1]});
  } else {
    throw Error(ErrorCode::InvalidArgument, "box needs lo,hi or one lo,hi pair per axis");
  }
  SampleScheme trial = p.scheme;
  trial.box = box;
  trial.validate(p.chart);
  p.scheme.box = std::move(box);
}

void set_order(ProblemInstance& p, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be a positive integer");
  p.strength.m = m;
  (void)p.eta_map(0);
}

void set_delta(ProblemInstance& p, double delta) {
  if (!(delta >= 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be >= 0");
  p.strength.delta = delta;
  p.delta_given = true;
}

void set_tolerance(ProblemInstance& p, double tolerance) {
  if (!(tolerance >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be >= 0");
  p.tolerance = tolerance;
}

void set_geodesic_mode(ProblemInstance& p, std::string_view mode) {
  try {
    p.geodesic_override = geodesic_mode_from_string(mode);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
}

void set_dominance_mode(ProblemInstance& p, std::string_view mode) {
  try {
    p.dominance = dominance_mode_from_string(mode);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
}

void set_suite(ProblemInstance& p, std::string_view csv) {
  std::vector<CheckItem> chosen;
  for (const auto& entry : split(csv, ',')) {
    if (entry.empty()) continue;
    const auto colon = entry.find(':');
    const std::string id = entry.substr(0, colon);
    std::optional<GeodesicMode> mode;
    try {
      require_known_check(id);
      if (colon != std::string::npos) mode = geodesic_mode_from_string(entry.substr(colon + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidArgument, e.what());
    }
    auto declared = std::find_if(p.suite.begin(), p.suite.end(), [&](const CheckItem& it) {
      return it.check == id && (!mode || it.geodesic_mode == mode);
    });
    CheckItem it = declared != p.suite.end() ? *declared : item(id, std::nullopt, mode);
    chosen.push_back(std::move(it));
  }
  if (chosen.empty()) throw Error(ErrorCode::InvalidArgument, "suite is empty");
  p.suite = std::move(chosen);
  p.expectations_active = false;
}

}  // namespace rinvex
