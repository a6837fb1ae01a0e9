#include "lflow/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "lflow/errors.hpp"

namespace lflow::cli {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "d", "theta_left", "theta_right", "flux", "custom_flux", "custom_param", "domain_margin",
      "nodes", "scheme", "dt", "cfl_safety", "t_end", "snapshot_every",
      "u0", "u0_value", "u0_slope", "u0_amplitude", "u0_table",
      "compat_strict", "compat_tol", "steady_eps", "stop_when_steady", "steady_snapshots",
      "retry_max", "scheme_tol", "decay_tail",
      "check_ut_bracket", "check_energy_monotone", "check_ut_sandwich", "check_sup_integral",
      "check_gradient_bound", "check_flux_identity", "check_decay", "check_c0_bound",
      "sweep_theta_left", "sweep_theta_right", "sweep_d", "sweep_symmetric", "threads",
      "trace_file", "profile_file", "translator_file", "summary_file", "plot_file", "plot"};
  return keys;
}

[[noreturn]] void field_error(const std::string& key, const std::string& what) {
  throw ParseError("field '" + key + "': " + what);
}

double get_number(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number()) field_error(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) field_error(key, "expected a finite number");
  return x;
}

bool get_bool(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_boolean()) field_error(key, "expected true or false");
  return v.get<bool>();
}

std::string get_string(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_string()) field_error(key, "expected a string");
  return v.get<std::string>();
}

long long get_integer(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) field_error(key, "expected an integer");
  return v.get<long long>();
}

std::vector<double> get_number_array(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_array()) field_error(key, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& item : v) {
    if (!item.is_number()) field_error(key, "expected an array of numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

template <class T, class Getter>
void maybe(const json& doc, const std::string& key, T& target, Getter get) {
  if (doc.contains(key)) target = get(doc, key);
}

ProfileTag parse_profile_tag(const std::string& name) {
  if (name == "constant") return ProfileTag::Constant;
  if (name == "linear") return ProfileTag::Linear;
  if (name == "cubic-blend") return ProfileTag::CubicBlend;
  if (name == "cosine-bump") return ProfileTag::CosineBump;
  if (name == "translator") return ProfileTag::Translator;
  if (name == "table") return ProfileTag::Table;
  field_error("u0", "unknown profile '" + name +
                        "' (expected constant, linear, cubic-blend, cosine-bump, translator, table)");
}

void validate_config(const RunConfig& cfg) {
  const ProblemSpec& s = cfg.spec;
  auto fail = [](const std::string& what) { throw ValidationError(what); };
  if (!(s.d > 0.0)) fail("d must satisfy d > 0");
  if (!(std::abs(s.theta_left) < 1.0)) fail("theta_left must satisfy |θ| < 1");
  if (!(std::abs(s.theta_right) < 1.0)) fail("theta_right must satisfy |θ| < 1");
  if (s.nodes < 3) fail("nodes must satisfy N >= 3");
  if (!(s.t_end >= 0.0)) fail("t_end must satisfy t_end >= 0");
  if (!(s.snapshot_every > 0.0)) fail("snapshot_every must be positive");
  if (!(cfg.decay_tail > 0.0 && cfg.decay_tail <= 1.0)) fail("decay_tail must lie in (0, 1]");
  if (!(cfg.scheme_tol >= 0.0)) fail("scheme_tol must be >= 0");
}

}  // namespace

FluxFunction make_flux(const std::string& name, const std::string& custom, double param,
                       double margin) {
  if (name == "mcf") return FluxFunction::mcf(margin);
  if (name == "heat") return FluxFunction::heat(margin);
  if (name == "custom") {
    if (custom.empty()) {
      throw ValidationError("flux 'custom' requires custom_flux (known: cubic)");
    }
    return FluxFunction::named_custom(custom, param, margin);
  }
  throw ParseError("field 'flux': unknown flux '" + name + "' (expected mcf, heat, custom)");
}

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << "line " << line << ", column " << col << ": malformed JSON";
    throw ParseError(msg.str());
  }
  if (!doc.is_object()) {
    throw ParseError("line 1: configuration must be a JSON object");
  }
  for (const auto& item : doc.items()) {
    if (!known_keys().contains(item.key())) {
      field_error(item.key(), "unknown key");
    }
  }
  for (const char* required : {"d", "theta_left", "theta_right"}) {
    if (!doc.contains(required)) field_error(required, "required key is missing");
  }

  RunConfig cfg;
  ProblemSpec& s = cfg.spec;
  s.d = get_number(doc, "d");
  s.theta_left = get_number(doc, "theta_left");
  s.theta_right = get_number(doc, "theta_right");
  s.t_end = 30.0;
  s.snapshot_every = 0.1;
  s.nodes = 201;

  maybe(doc, "flux", cfg.flux_name, get_string);
  maybe(doc, "custom_flux", cfg.custom_flux, get_string);
  maybe(doc, "custom_param", cfg.custom_param, get_number);
  double margin = kDefaultDomainMargin;
  maybe(doc, "domain_margin", margin, get_number);
  if (!(margin > 0.0 && margin < 1.0)) throw ValidationError("domain_margin must lie in (0, 1)");

  if (doc.contains("nodes")) {
    const long long n = get_integer(doc, "nodes");
    if (n < 3) throw ValidationError("nodes must satisfy N >= 3");
    s.nodes = static_cast<std::size_t>(n);
  }
  if (doc.contains("scheme")) {
    const std::string scheme = get_string(doc, "scheme");
    if (scheme == "explicit") {
      s.scheme = Scheme::Explicit;
    } else if (scheme == "semi-implicit") {
      s.scheme = Scheme::SemiImplicit;
    } else {
      field_error("scheme", "expected 'explicit' or 'semi-implicit'");
    }
  }
  double safety = 0.45;
  maybe(doc, "cfl_safety", safety, get_number);
  if (!(safety > 0.0)) throw ValidationError("cfl_safety must be positive");
  s.dt = TimeStepPolicy::cfl(safety);
  if (doc.contains("dt")) {
    const json& v = doc.at("dt");
    if (v.is_string() && v.get<std::string>() == "cfl") {
      s.dt = TimeStepPolicy::cfl(safety);
    } else if (v.is_number()) {
      const double dt = v.get<double>();
      if (!(dt > 0.0)) throw ValidationError("dt must be positive");
      s.dt = TimeStepPolicy::fixed(dt);
    } else {
      field_error("dt", "expected a positive number or \"cfl\"");
    }
  } else if (s.scheme == Scheme::SemiImplicit) {
    s.dt = TimeStepPolicy::fixed(1e-3);
  }
  maybe(doc, "t_end", s.t_end, get_number);
  maybe(doc, "snapshot_every", s.snapshot_every, get_number);

  if (doc.contains("u0")) s.u0.tag = parse_profile_tag(get_string(doc, "u0"));
  maybe(doc, "u0_value", s.u0.value, get_number);
  maybe(doc, "u0_slope", s.u0.slope, get_number);
  maybe(doc, "u0_amplitude", s.u0.amplitude, get_number);
  if (doc.contains("u0_table")) s.u0.table = get_number_array(doc, "u0_table");
  if (s.u0.tag == ProfileTag::Table && s.u0.table.size() != s.nodes) {
    throw ValidationError("u0_table must hold exactly 'nodes' samples");
  }

  maybe(doc, "compat_strict", s.compat_strict, get_bool);
  if (doc.contains("compat_tol")) s.compat_tol = get_number(doc, "compat_tol");
  maybe(doc, "steady_eps", s.steady_eps, get_number);
  maybe(doc, "stop_when_steady", s.stop_when_steady, get_bool);
  if (doc.contains("steady_snapshots")) {
    s.steady_snapshots = static_cast<int>(get_integer(doc, "steady_snapshots"));
  }
  if (doc.contains("retry_max")) s.retry_max = static_cast<int>(get_integer(doc, "retry_max"));
  maybe(doc, "scheme_tol", cfg.scheme_tol, get_number);
  maybe(doc, "decay_tail", cfg.decay_tail, get_number);

  maybe(doc, "check_ut_bracket", cfg.checks.ut_bracket, get_bool);
  maybe(doc, "check_energy_monotone", cfg.checks.energy_monotone, get_bool);
  maybe(doc, "check_ut_sandwich", cfg.checks.ut_sandwich, get_bool);
  maybe(doc, "check_sup_integral", cfg.checks.sup_integral, get_bool);
  maybe(doc, "check_gradient_bound", cfg.checks.gradient_bound, get_bool);
  maybe(doc, "check_flux_identity", cfg.checks.flux_identity, get_bool);
  maybe(doc, "check_decay", cfg.checks.decay, get_bool);
  maybe(doc, "check_c0_bound", cfg.checks.c0_bound, get_bool);

  for (const char* key : {"sweep_theta_left", "sweep_theta_right", "sweep_d"}) {
    if (doc.contains(key) && get_number_array(doc, key).empty()) {
      throw ValidationError(std::string(key) + " must not be empty");
    }
  }
  if (doc.contains("sweep_theta_left")) cfg.sweep.theta_left = get_number_array(doc, "sweep_theta_left");
  if (doc.contains("sweep_theta_right")) cfg.sweep.theta_right = get_number_array(doc, "sweep_theta_right");
  if (doc.contains("sweep_d")) cfg.sweep.d = get_number_array(doc, "sweep_d");
  maybe(doc, "sweep_symmetric", cfg.sweep.symmetric, get_bool);
  if (doc.contains("threads")) {
    const long long t = get_integer(doc, "threads");
    if (t < 0) throw ValidationError("threads must be >= 0");
    cfg.threads = static_cast<std::size_t>(t);
  }

  maybe(doc, "trace_file", cfg.trace_file, get_string);
  maybe(doc, "profile_file", cfg.profile_file, get_string);
  maybe(doc, "translator_file", cfg.translator_file, get_string);
  maybe(doc, "summary_file", cfg.summary_file, get_string);
  maybe(doc, "plot_file", cfg.plot_file, get_string);
  maybe(doc, "plot", cfg.plot, get_bool);

  validate_config(cfg);
  s.flux = make_flux(cfg.flux_name, cfg.custom_flux, cfg.custom_param, margin);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace lflow::cli
