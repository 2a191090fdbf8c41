#pragma once

// Scenario sweeps: a JSON configuration in SI units is expanded into a
// (separation, temperature) grid and every point becomes one CSV row.
//
// Config keys (all optional except where noted):
//   metal          { omega_p, v_F, response, relaxation }   defaults: gold-like
//     response     "anomalous" | "nonlocal" | "drude" | "plasma"
//     relaxation   { law: "constant", omega_tau }
//                  { law: "power", omega_tau0, T_ref, exponent }
//                  { law: "residual_power", omega_res, omega_tau0, T_ref, exponent }
//   separation_m   number | [numbers] | { scale: "linear"|"log", start, stop, count }   required
//   temperature_K  same forms as separation_m                                          required
//   alpha_s        number in [0, 0.5], default 0
//   alpha_p        "computed" (default) | number
//   engine         "abel_plana" (default) | "matsubara" | "asymptotic_auto"
//   entropy_fd     bool, default true: also fill the finite-difference entropy column
//   tolerances     { rel_tol, abs_tol, max_subdivisions }
//   finite_difference { rel_step, T_floor, agreement }
//   output         { path (default "results.csv"), format: "csv" }
// Unknown keys are rejected.

#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/asymptotics.hpp"

namespace casimir {

enum class ScenarioEngine { Matsubara, AbelPlana, AsymptoticAuto };

const char* to_string(ScenarioEngine engine);

struct Scenario {
  MetalModel metal = gold_like();
  std::vector<double> separations;   // m, strictly increasing
  std::vector<double> temperatures;  // K, strictly increasing
  AlphaParameterization alpha;
  ScenarioEngine engine = ScenarioEngine::AbelPlana;
  bool entropy_fd = true;
  QuadratureSpec tolerances;
  FiniteDifferenceOptions finite_difference;
  std::string output_path = "results.csv";
  std::string output_format = "csv";
};

/// Throws ConfigError naming the offending key.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

/// asymptotic_auto thresholds.
inline constexpr double kAutoSmallA = 0.3;
inline constexpr double kAutoLargeA = 3.0;

struct ScenarioRow {
  double T = 0.0;
  double a = 0.0;
  RegimeReport regime;
  std::string engine;  // engine that produced delta_F
  double delta_F = 0.0;
  double delta_F_err = 0.0;
  double S = 0.0;
  std::string S_method;
  double S_fd = 0.0;
  double S_fd_coarse = 0.0;
  double S_fd_fine = 0.0;
  bool has_delta_F = false;
  bool has_S = false;
  bool has_S_fd = false;
  bool has_breakdown = false;
  PolarizationBreakdown s;
  PolarizationBreakdown p;
  std::string status = "ok";  // ok | regime_error | nonconvergence | step_too_large | domain_error | error
  std::string message;
};

/// Never throws for computational failures; they land in status/message.
ScenarioRow evaluate_point(const Scenario& scenario, double a, double T);

/// Rows in grid order: separations outer, temperatures inner.
std::vector<ScenarioRow> run_scenario(const Scenario& scenario);

/// Fixed column order; new columns are only ever appended.
const std::vector<std::string>& csv_columns();
void write_csv(std::ostream& out, const std::vector<ScenarioRow>& rows);

}  // namespace casimir
