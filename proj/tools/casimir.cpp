// casimir: run scenario sweeps, the acceptance suite, or print constants.
//
//   casimir run <config.json> [--out DIR]
//   casimir validate [--json] [--only ID ...] [--perturb-zeta3 D]
//   casimir constants [--json]
//
// Exit codes: 0 success, 1 validation failure, 2 config error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/scenario.hpp"
#include "casimir/validation.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& config, const std::string& out_dir) {
  casimir::Scenario sc;
  try {
    sc = casimir::load_scenario(config);
  } catch (const casimir::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  fs::path target = sc.output_path;
  if (!out_dir.empty()) target = fs::path(out_dir) / target.filename();
  std::error_code ec;
  if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
  std::ofstream file(target);
  if (!file) {
    std::cerr << "config error: cannot write output '" << target.string() << "' (key 'output.path')\n";
    return 2;
  }
  const auto rows = casimir::run_scenario(sc);
  casimir::write_csv(file, rows);
  std::size_t flagged = 0;
  for (const auto& r : rows) flagged += r.status != "ok";
  std::cout << "wrote " << rows.size() << " rows to " << target.string();
  if (flagged) std::cout << " (" << flagged << " flagged)";
  std::cout << '\n';
  return 0;
}

int constants(bool as_json) {
  const auto& k = casimir::asymptotic_constants();
  struct Item {
    const char* key;
    double value;
    const char* definition;
  };
  const Item items[] = {
      {"c_small_A", k.c_small_A, "C = -int_0^inf x ln(1 - r_s^2(1/x)) dx, r_s = -(1-F)/(1+F)"},
      {"bracket_small_A", k.bracket_small_A, "B = C (int_0^1 t^(2/3) dt - 1/2 + 2 I)"},
      {"p1", k.p1, "p1 = int_0^inf (1+t^2)^(-1/6) sin(atan(t)/3) / (e^(2 pi t) - 1) dt"},
      {"bose_I", k.bose_I, "I = int_0^inf (1+t^2)^(1/3) sin(2 atan(t)/3) / (e^(2 pi t) - 1) dt"},
  };
  if (as_json) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& it : items) doc[it.key] = {{"value", it.value}, {"definition", it.definition}};
    doc["zeta3"] = casimir::zeta3();
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& it : items) {
      std::printf("%-16s %.12f   %s\n", it.key, it.value, it.definition);
    }
    std::printf("%-16s %.12f\n", "zeta3", casimir::zeta3());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir free energy and entropy for metal plates with nonlocal impedances"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "evaluate a scenario config and write a CSV table");
  std::string config;
  std::string out_dir;
  run_cmd->add_option("config", config, "scenario JSON file")->required();
  run_cmd->add_option("--out", out_dir, "output directory (overrides the directory in output.path)");

  auto* val_cmd = app.add_subcommand("validate", "run the acceptance suite");
  bool val_json = false;
  std::vector<int> only;
  double perturb = 0.0;
  val_cmd->add_flag("--json", val_json, "machine-readable report");
  val_cmd->add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, casimir::kCriterionCount));
  val_cmd->add_option("--perturb-zeta3", perturb, "shift the reference zeta(3)");

  auto* const_cmd = app.add_subcommand("constants", "print the asymptotic constants");
  bool const_json = false;
  const_cmd->add_flag("--json", const_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run_cmd) return run(config, out_dir);
  if (*val_cmd) {
    casimir::ValidationOptions opt;
    opt.only = only;
    opt.zeta3_perturbation = perturb;
    const auto results = casimir::run_validation(opt);
    if (val_json) {
      std::cout << casimir::report_json(results) << '\n';
    } else {
      casimir::print_report(std::cout, results);
    }
    for (const auto& r : results) {
      if (!r.passed) return 1;
    }
    return 0;
  }
  return constants(const_json);
}
