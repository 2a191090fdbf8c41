#include "casimir/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace casimir {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError("config key '" + key + "': " + what);
}

void reject_unknown(const json& obj, const std::string& where, std::set<std::string> allowed) {
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) fail(where.empty() ? k : where + "." + k, "unknown key");
  }
}

double number(const json& obj, const std::string& key, const std::string& path, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path, "must be finite");
  return x;
}

double required_number(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) fail(path, "missing");
  return number(obj, key, path, 0.0);
}

std::vector<double> parse_grid(const json& root, const std::string& key) {
  if (!root.contains(key)) fail(key, "missing");
  const auto& v = root.at(key);
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail(key + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(v[i].get<double>());
    }
  } else if (v.is_object()) {
    reject_unknown(v, key, {"scale", "start", "stop", "count"});
    std::string scale = "linear";
    if (v.contains("scale")) {
      if (!v.at("scale").is_string()) fail(key + ".scale", "expected \"linear\" or \"log\"");
      scale = v.at("scale").get<std::string>();
    }
    if (scale != "linear" && scale != "log") fail(key + ".scale", "expected \"linear\" or \"log\"");
    const double start = required_number(v, "start", key + ".start");
    const double stop = required_number(v, "stop", key + ".stop");
    if (!v.contains("count") || !v.at("count").is_number_integer()) fail(key + ".count", "expected an integer");
    const long count = v.at("count").get<long>();
    if (count < 1) fail(key + ".count", "must be >= 1");
    if (count == 1) {
      if (start != stop) fail(key + ".count", "a single point needs start == stop");
      out.push_back(start);
    } else if (scale == "linear") {
      for (long i = 0; i < count; ++i) out.push_back(start + (stop - start) * double(i) / double(count - 1));
    } else {
      if (!(start > 0.0) || !(stop > 0.0)) fail(key + ".start", "log grid needs positive start and stop");
      const double l0 = std::log(start);
      const double l1 = std::log(stop);
      for (long i = 0; i < count; ++i) out.push_back(std::exp(l0 + (l1 - l0) * double(i) / double(count - 1)));
      out.front() = start;
      out.back() = stop;
    }
  } else {
    fail(key, "expected a number, an array or a sweep object");
  }
  if (out.empty()) fail(key, "grid is empty");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out[i]) || !(out[i] > 0.0)) fail(key, "values must be finite and > 0");
    if (i > 0 && !(out[i] > out[i - 1])) fail(key, "grid must be strictly increasing");
  }
  return out;
}

ResponseKind parse_response(const std::string& s) {
  if (s == "anomalous") return ResponseKind::AnomalousLimit;
  if (s == "nonlocal") return ResponseKind::NonlocalBoltzmann;
  if (s == "drude") return ResponseKind::LocalDrude;
  if (s == "plasma") return ResponseKind::LocalPlasma;
  fail("metal.response", "expected anomalous, nonlocal, drude or plasma");
}

RelaxationLaw parse_relaxation(const json& r) {
  const std::string where = "metal.relaxation";
  if (!r.is_object()) fail(where, "expected an object");
  if (!r.contains("law") || !r.at("law").is_string()) fail(where + ".law", "missing");
  const auto law = r.at("law").get<std::string>();
  if (law == "constant") {
    reject_unknown(r, where, {"law", "omega_tau"});
    return ConstantRelaxation{required_number(r, "omega_tau", where + ".omega_tau")};
  }
  if (law == "power") {
    reject_unknown(r, where, {"law", "omega_tau0", "T_ref", "exponent"});
    PowerLawRelaxation p;
    p.omega_tau0 = required_number(r, "omega_tau0", where + ".omega_tau0");
    p.T_ref = number(r, "T_ref", where + ".T_ref", p.T_ref);
    p.exponent = number(r, "exponent", where + ".exponent", p.exponent);
    return p;
  }
  if (law == "residual_power") {
    reject_unknown(r, where, {"law", "omega_res", "omega_tau0", "T_ref", "exponent"});
    ResidualPowerLawRelaxation p;
    p.omega_res = required_number(r, "omega_res", where + ".omega_res");
    p.omega_tau0 = required_number(r, "omega_tau0", where + ".omega_tau0");
    p.T_ref = number(r, "T_ref", where + ".T_ref", p.T_ref);
    p.exponent = number(r, "exponent", where + ".exponent", p.exponent);
    return p;
  }
  fail(where + ".law", "expected constant, power or residual_power");
}

MetalModel parse_metal(const json& root) {
  MetalModel m = gold_like();
  if (!root.contains("metal")) return m;
  const auto& j = root.at("metal");
  if (!j.is_object()) fail("metal", "expected an object");
  reject_unknown(j, "metal", {"omega_p", "v_F", "response", "relaxation"});
  m.omega_p = number(j, "omega_p", "metal.omega_p", m.omega_p);
  m.v_F = number(j, "v_F", "metal.v_F", m.v_F);
  if (j.contains("response")) {
    if (!j.at("response").is_string()) fail("metal.response", "expected a string");
    m.response = parse_response(j.at("response").get<std::string>());
  }
  if (j.contains("relaxation")) m.relaxation = parse_relaxation(j.at("relaxation"));
  try {
    m.validate();
  } catch (const DomainError& e) {
    fail("metal", e.what());
  }
  return m;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* to_string(ScenarioEngine engine) {
  switch (engine) {
    case ScenarioEngine::Matsubara:
      return "matsubara";
    case ScenarioEngine::AbelPlana:
      return "abel_plana";
    case ScenarioEngine::AsymptoticAuto:
      return "asymptotic_auto";
  }
  return "?";
}

Scenario parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(root, "",
                 {"metal", "separation_m", "temperature_K", "alpha_s", "alpha_p", "engine", "entropy_fd",
                  "tolerances", "finite_difference", "output"});

  Scenario sc;
  sc.metal = parse_metal(root);
  sc.separations = parse_grid(root, "separation_m");
  sc.temperatures = parse_grid(root, "temperature_K");

  sc.alpha.alpha_s = number(root, "alpha_s", "alpha_s", 0.0);
  if (!(sc.alpha.alpha_s >= 0.0 && sc.alpha.alpha_s <= 0.5)) fail("alpha_s", "must lie in [0, 0.5]");
  if (root.contains("alpha_p")) {
    const auto& ap = root.at("alpha_p");
    if (ap.is_string()) {
      if (ap.get<std::string>() != "computed") fail("alpha_p", "expected \"computed\" or a number");
    } else if (ap.is_number()) {
      sc.alpha.alpha_p = ap.get<double>();
      if (!std::isfinite(*sc.alpha.alpha_p)) fail("alpha_p", "must be finite");
    } else {
      fail("alpha_p", "expected \"computed\" or a number");
    }
  }

  if (root.contains("engine")) {
    const auto& e = root.at("engine");
    const std::string s = e.is_string() ? e.get<std::string>() : "";
    if (s == "matsubara") {
      sc.engine = ScenarioEngine::Matsubara;
    } else if (s == "abel_plana") {
      sc.engine = ScenarioEngine::AbelPlana;
    } else if (s == "asymptotic_auto") {
      sc.engine = ScenarioEngine::AsymptoticAuto;
    } else {
      fail("engine", "expected matsubara, abel_plana or asymptotic_auto");
    }
  }
  if (root.contains("entropy_fd")) {
    if (!root.at("entropy_fd").is_boolean()) fail("entropy_fd", "expected true or false");
    sc.entropy_fd = root.at("entropy_fd").get<bool>();
  }

  if (root.contains("tolerances")) {
    const auto& t = root.at("tolerances");
    if (!t.is_object()) fail("tolerances", "expected an object");
    reject_unknown(t, "tolerances", {"rel_tol", "abs_tol", "max_subdivisions"});
    sc.tolerances.rel_tol = number(t, "rel_tol", "tolerances.rel_tol", sc.tolerances.rel_tol);
    sc.tolerances.abs_tol = number(t, "abs_tol", "tolerances.abs_tol", sc.tolerances.abs_tol);
    if (t.contains("max_subdivisions")) {
      if (!t.at("max_subdivisions").is_number_integer()) fail("tolerances.max_subdivisions", "expected an integer");
      sc.tolerances.max_subdivisions = t.at("max_subdivisions").get<int>();
    }
    try {
      sc.tolerances.validate();
    } catch (const DomainError& e) {
      fail("tolerances", e.what());
    }
  }

  if (root.contains("finite_difference")) {
    const auto& f = root.at("finite_difference");
    if (!f.is_object()) fail("finite_difference", "expected an object");
    reject_unknown(f, "finite_difference", {"rel_step", "T_floor", "agreement"});
    auto& fd = sc.finite_difference;
    fd.rel_step = number(f, "rel_step", "finite_difference.rel_step", fd.rel_step);
    fd.T_floor = number(f, "T_floor", "finite_difference.T_floor", fd.T_floor);
    fd.agreement = number(f, "agreement", "finite_difference.agreement", fd.agreement);
    if (!(fd.rel_step > 0.0 && fd.rel_step < 0.5)) fail("finite_difference.rel_step", "must lie in (0, 0.5)");
    if (!(fd.T_floor >= 0.0)) fail("finite_difference.T_floor", "must be >= 0");
    if (!(fd.agreement > 0.0)) fail("finite_difference.agreement", "must be > 0");
  }
  switch (sc.engine) {
    case ScenarioEngine::Matsubara:
      sc.finite_difference.engine = DeltaFEngine::Direct;
      break;
    case ScenarioEngine::AbelPlana:
      sc.finite_difference.engine = DeltaFEngine::AbelPlana;
      break;
    case ScenarioEngine::AsymptoticAuto:
      sc.finite_difference.engine = DeltaFEngine::Auto;
      break;
  }

  if (root.contains("output")) {
    const auto& o = root.at("output");
    if (!o.is_object()) fail("output", "expected an object");
    reject_unknown(o, "output", {"path", "format"});
    if (o.contains("path")) {
      if (!o.at("path").is_string() || o.at("path").get<std::string>().empty()) {
        fail("output.path", "expected a non-empty string");
      }
      sc.output_path = o.at("path").get<std::string>();
    }
    if (o.contains("format")) {
      if (!o.at("format").is_string() || o.at("format").get<std::string>() != "csv") {
        fail("output.format", "only \"csv\" is supported");
      }
    }
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

ScenarioRow evaluate_point(const Scenario& sc, double a, double T) {
  ScenarioRow row;
  row.T = T;
  row.a = a;
  auto flag = [&](const char* status, const std::exception& e) {
    if (row.status == "ok") {
      row.status = status;
      row.message = e.what();
    } else {
      row.message += "; ";
      row.message += e.what();
    }
  };
  // Each stage records its own failure and the row carries on.
  auto guarded = [&](auto&& body) {
    try {
      body();
    } catch (const RegimeError& e) {
      flag("regime_error", e);
    } catch (const NonConvergence& e) {
      flag("nonconvergence", e);
    } catch (const StepTooLarge& e) {
      flag("step_too_large", e);
    } catch (const DomainError& e) {
      flag("domain_error", e);
    } catch (const std::exception& e) {
      flag("error", e);
    }
  };

  guarded([&] { row.regime = regime_report(sc.metal, a, T); });
  const double A = row.regime.A;

  EntropyMethod s_method = EntropyMethod::FiniteDifference;
  guarded([&] {
    bool use_small = false;
    bool use_large = false;
    if (sc.engine == ScenarioEngine::AsymptoticAuto) {
      use_small = A > 0.0 && A < kAutoSmallA;
      use_large = A > kAutoLargeA;
    }
    if (use_small) {
      row.engine = "asymptotic_small_A";
      row.delta_F = delta_f_small_A(sc.metal, a, T, sc.alpha);
      s_method = EntropyMethod::AsymptoticSmallA;
    } else if (use_large) {
      row.engine = "asymptotic_large_A";
      row.delta_F = delta_f_large_A(sc.metal, a, T, sc.alpha);
      s_method = EntropyMethod::AsymptoticLargeA;
    } else if (sc.engine == ScenarioEngine::Matsubara) {
      row.engine = "matsubara";
      const auto r = delta_f_direct(sc.metal, a, T, sc.alpha, sc.tolerances);
      row.delta_F = r.delta_F;
      row.delta_F_err = r.error_estimate;
    } else {
      row.engine = "abel_plana";
      const auto r = delta_f_abel_plana(sc.metal, a, T, sc.alpha, sc.tolerances);
      row.delta_F = r.delta_F;
      row.delta_F_err = r.error_estimate;
      row.s = r.s;
      row.p = r.p;
      row.has_breakdown = true;
    }
    row.has_delta_F = true;
  });

  if (s_method != EntropyMethod::FiniteDifference) {
    guarded([&] {
      row.S = entropy(sc.metal, a, T, sc.alpha, s_method, sc.tolerances, sc.finite_difference).S;
      row.S_method = to_string(s_method);
      row.has_S = true;
    });
  }
  const bool need_fd = sc.entropy_fd || s_method == EntropyMethod::FiniteDifference;
  if (need_fd) {
    guarded([&] {
      const auto e = entropy(sc.metal, a, T, sc.alpha, EntropyMethod::FiniteDifference, sc.tolerances,
                             sc.finite_difference);
      row.S_fd = e.S;
      row.S_fd_coarse = e.S_coarse;
      row.S_fd_fine = e.S_fine;
      row.has_S_fd = true;
      if (!row.has_S) {
        row.S = e.S;
        row.S_method = to_string(EntropyMethod::FiniteDifference);
        row.has_S = true;
      }
    });
  }
  return row;
}

std::vector<ScenarioRow> run_scenario(const Scenario& sc) {
  std::vector<ScenarioRow> rows;
  rows.reserve(sc.separations.size() * sc.temperatures.size());
  for (double a : sc.separations) {
    for (double T : sc.temperatures) rows.push_back(evaluate_point(sc, a, T));
  }
  return rows;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "T_K",          "a_m",        "tau",          "A",          "b",           "v_min",
      "leontovich_valid", "anomalous_valid", "small_A", "large_A", "engine",   "delta_F_J_m2",
      "delta_F_err",  "S_J_K_m2",   "S_method",     "S_fd_J_K_m2", "S_fd_coarse", "S_fd_fine",
      "s_half_G",     "s_int01",    "s_im_term",    "p_half_G",   "p_int01",     "p_im_term",
      "status",       "message"};
  return cols;
}

void write_csv(std::ostream& out, const std::vector<ScenarioRow>& rows) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  auto opt = [](bool has, double v) { return has ? fmt(v) : std::string(); };
  for (const auto& r : rows) {
    const bool have_regime = r.regime.tau > 0.0;
    std::vector<std::string> f = {
        fmt(r.T),
        fmt(r.a),
        opt(have_regime, r.regime.tau),
        opt(have_regime, r.regime.A),
        opt(have_regime, r.regime.b),
        opt(have_regime, r.regime.v_min),
        have_regime ? (r.regime.leontovich_valid ? "1" : "0") : "",
        have_regime ? (r.regime.anomalous_valid ? "1" : "0") : "",
        have_regime ? (r.regime.A < kAutoSmallA ? "1" : "0") : "",
        have_regime ? (r.regime.A > kAutoLargeA ? "1" : "0") : "",
        r.engine,
        opt(r.has_delta_F, r.delta_F),
        opt(r.has_delta_F, r.delta_F_err),
        opt(r.has_S, r.S),
        r.S_method,
        opt(r.has_S_fd, r.S_fd),
        opt(r.has_S_fd, r.S_fd_coarse),
        opt(r.has_S_fd, r.S_fd_fine),
        opt(r.has_breakdown, r.s.half_G),
        opt(r.has_breakdown, r.s.integral_01),
        opt(r.has_breakdown, r.s.im_term),
        opt(r.has_breakdown, r.p.half_G),
        opt(r.has_breakdown, r.p.integral_01),
        opt(r.has_breakdown, r.p.im_term),
        r.status,
        r.message};
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << csv_field(f[i]);
    out << '\n';
  }
}

}  // namespace casimir
