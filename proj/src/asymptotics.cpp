#include "casimir/asymptotics.hpp"

#include <cstdio>

#include "casimir/physical_constants.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLargeACoefficient = 32.0 / (3.0 * 1.7320508075688772);

double bose(double t) { return std::expm1(2.0 * kPi * t); }

double entropy_prefactor(double a) { return si::k_B / (8.0 * kPi * a * a); }

void require_T(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("temperature must be finite and > 0");
}

double small_A_checked(const MetalModel& model, double a, double T) {
  require_T(T);
  const double A = parameter_A(model, a, T);
  if (!(A < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "small-A expansion needs A < 1, got A = %.4g", A);
    throw RegimeError(buf);
  }
  return A;
}

double large_A_checked(const MetalModel& model, double a, double T) {
  require_T(T);
  const double A = parameter_A(model, a, T);
  const double tau = dimensionless_tau(a, T);
  if (!(A > 1.0) || !(tau < kAbelPlanaTauLimit)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "large-A expansion needs A > 1 and tau < %.2g, got A = %.4g, tau = %.4g",
                  kAbelPlanaTauLimit, A, tau);
    throw RegimeError(buf);
  }
  return A;
}

}  // namespace

double constant_c_small_A(const QuadratureSpec& spec) {
  auto integrand = [](double x) {
    if (x == 0.0) return 0.0;
    const auto fg = special_values(1.0 / x);
    const double r = fg.one_minus_F / (1.0 + fg.F);
    const double r2 = r * r;
    // 1 - r^2 = 4F / (1 + F)^2 keeps the strongly reflecting end accurate.
    const double log_term = r2 < 0.5 ? std::log1p(-r2) : std::log(4.0 * fg.F / ((1.0 + fg.F) * (1.0 + fg.F)));
    return -x * log_term;
  };
  return integrate_semi_infinite(integrand, 0.0, spec).value;
}

double constant_bose_I(const QuadratureSpec& spec) {
  auto integrand = [](double t) {
    if (t == 0.0) return 1.0 / (3.0 * kPi);
    return std::cbrt(1.0 + t * t) * std::sin(2.0 / 3.0 * std::atan(t)) / bose(t);
  };
  return integrate_semi_infinite(integrand, 0.0, spec, 0.25).value;
}

double constant_p1(const QuadratureSpec& spec) {
  auto integrand = [](double t) {
    if (t == 0.0) return 1.0 / (6.0 * kPi);
    return std::pow(1.0 + t * t, -1.0 / 6.0) * std::sin(std::atan(t) / 3.0) / bose(t);
  };
  return integrate_semi_infinite(integrand, 0.0, spec, 0.25).value;
}

double bracket_small_A(const QuadratureSpec& spec) {
  const double c = constant_c_small_A(spec);
  const double power_mean = integrate_finite([](double t) { return std::pow(t, 2.0 / 3.0); }, 0.0, 1.0, spec).value;
  const double im = integrate_semi_infinite(
                        [](double t) {
                          if (t == 0.0) return 1.0 / (3.0 * kPi);
                          return std::pow(cdouble(1.0, t), 2.0 / 3.0).imag() / bose(t);
                        },
                        0.0, spec, 0.25)
                        .value;
  return c * (power_mean - 0.5 + 2.0 * im);
}

AsymptoticConstants compute_asymptotic_constants(const QuadratureSpec& spec) {
  return {constant_c_small_A(spec), bracket_small_A(spec), constant_p1(spec), constant_bose_I(spec)};
}

const AsymptoticConstants& asymptotic_constants() {
  static const AsymptoticConstants cached = compute_asymptotic_constants();
  return cached;
}

double delta_f_small_A(const MetalModel& model, double a, double T, const AlphaParameterization& alpha) {
  const double A = small_A_checked(model, a, T);
  const double z3 = zeta3();
  const double c1 = thomas_fermi_parameter(model, a);
  const double bracket = -alpha_total(alpha, model, a) * z3 + 0.5 * z3 * (1.0 - 8.0 * c1) +
                         asymptotic_constants().bracket_small_A * A * A;
  return free_energy_prefactor(a, T) * bracket;
}

double delta_f_large_A(const MetalModel& model, double a, double T, const AlphaParameterization& alpha) {
  const double A = large_A_checked(model, a, T);
  const double c1 = thomas_fermi_parameter(model, a);
  const double p1 = asymptotic_constants().p1;
  const double bracket =
      -alpha_total(alpha, model, a) + 1.0 - 4.0 * c1 - kLargeACoefficient * (1.0 - 2.0 * p1) / A;
  return free_energy_prefactor(a, T) * zeta3() * bracket;
}

double entropy_small_A(const MetalModel& model, double a, double T, const AlphaParameterization& alpha) {
  const double A = small_A_checked(model, a, T);
  const double z3 = zeta3();
  const double c1 = thomas_fermi_parameter(model, a);
  const double inner = -alpha_total(alpha, model, a) * z3 + 0.5 * z3 * (1.0 - 8.0 * c1) +
                       (5.0 / 3.0) * asymptotic_constants().bracket_small_A * A * A;
  return -entropy_prefactor(a) * inner;
}

double entropy_small_A(const MetalModel& model, double a, double T, double alpha_s) {
  return entropy_small_A(model, a, T, AlphaParameterization::computed(alpha_s));
}

double entropy_large_A(const MetalModel& model, double a, double T, const AlphaParameterization& alpha) {
  const double A = large_A_checked(model, a, T);
  const double c1 = thomas_fermi_parameter(model, a);
  const double p1 = asymptotic_constants().p1;
  const double inner =
      -alpha_total(alpha, model, a) + 1.0 - 4.0 * c1 - (2.0 / 3.0) * kLargeACoefficient * (1.0 - 2.0 * p1) / A;
  return -entropy_prefactor(a) * zeta3() * inner;
}

double entropy_large_A(const MetalModel& model, double a, double T, double alpha_s) {
  return entropy_large_A(model, a, T, AlphaParameterization::computed(alpha_s));
}

}  // namespace casimir
