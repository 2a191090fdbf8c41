#include "casimir/lifshitz.hpp"

#include <cstdio>
#include <limits>

#include "casimir/asymptotics.hpp"
#include "casimir/physical_constants.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.14159265358979323846;
// e^{-2 pi t} is below 1e-19 past this point.
constexpr double kBoseCutoff = 7.0;
constexpr double kMatsubaraReach = 30.0;

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

template <class S>
S expm1_any(S z) {
  if constexpr (std::is_floating_point_v<S>) {
    return std::expm1(z);
  } else {
    const double half = std::sin(0.5 * z.imag());
    return {std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * half * half, std::exp(z.real()) * std::sin(z.imag())};
  }
}

// ln(1 - r^2 e^-y) written as ln((1 - e^-y) + e^-y (1 - r^2)).
template <class S>
S log_factor(const Reflectivity& refl, Polarization pol, S xi, S y) {
  const auto sq = refl.squared(pol, xi, y);
  return std::log(-expm1_any(S(-y)) + std::exp(-y) * sq.one_minus_r2);
}

template <class V>
void accumulate(IntegralResult<V>& into, const IntegralResult<V>& part) {
  into.value += part.value;
  into.error_estimate += part.error_estimate;
  into.converged = into.converged && part.converged;
  into.evaluations += part.evaluations;
}

// [lower, lower + 1] with endpoint smoothing, then the tail.
template <class F>
auto integrate_from(F&& f, double lower, const QuadratureSpec& spec) {
  auto out = integrate_finite(f, lower, lower + 1.0, spec);
  accumulate(out, integrate_semi_infinite(f, lower + 1.0, spec));
  return out;
}

void require_geometry(double a, double T) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("separation must be finite and > 0");
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("temperature must be finite and > 0");
}

QuadratureSpec inner_spec(const QuadratureSpec& spec) { return spec.tightened(10.0); }

// Bound on |sum_{n > N} G(n tau)| for |r| <= 1.
double matsubara_tail_bound(double tau, long n) {
  const double x = tau * static_cast<double>(n);
  return (x + 2.0) * std::exp(-x) / (tau * -std::expm1(-x));
}

long default_n_max(double tau) { return static_cast<long>(std::ceil(kMatsubaraReach / tau)); }

}  // namespace

void AlphaParameterization::validate() const {
  if (!(alpha_s >= 0.0 && alpha_s <= 0.5)) throw DomainError("alpha_s must lie in [0, 0.5]");
  if (alpha_p && !std::isfinite(*alpha_p)) throw DomainError("alpha_p must be finite");
}

double alpha_p_computed(const MetalModel& model, double a) {
  const double correction = 8.0 * thomas_fermi_parameter(model, a);
  if (!(correction < 1.0)) throw DomainError("alpha_p_computed: Thomas-Fermi correction >= 1");
  return 0.5 * (1.0 - correction);
}

double alpha_total(const AlphaParameterization& alpha, const MetalModel& model, double a) {
  alpha.validate();
  return alpha.alpha_s + (alpha.alpha_p ? *alpha.alpha_p : alpha_p_computed(model, a));
}

double free_energy_prefactor(double a, double T) { return si::k_B * T / (8.0 * kPi * a * a); }

IntegralResult<double> g_function_result(Polarization pol, double xi, const Reflectivity& refl,
                                         const QuadratureSpec& spec) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw DomainError("g_function: xi must be finite and >= 0");
  auto f = [&](double y) { return y * log_factor(refl, pol, xi, y); };
  return integrate_from(f, xi, spec);
}

IntegralResult<cdouble> g_function_result(Polarization pol, cdouble z, const Reflectivity& refl,
                                          const QuadratureSpec& spec) {
  if (!(z.real() >= 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("g_function: complex argument needs finite Re z >= 0");
  }
  const double x0 = z.real();
  const double h = z.imag();
  IntegralResult<cdouble> out;
  if (h != 0.0) {
    // y = x0 + i s from s = h down to 0: dy = i ds.
    auto segment = [&](double s) {
      const cdouble y(x0, s);
      return cdouble(0.0, -1.0) * y * log_factor(refl, pol, z, y);
    };
    out = h > 0.0 ? integrate_finite(segment, 0.0, h, spec) : integrate_finite(segment, h, 0.0, spec);
    if (h < 0.0) out.value = -out.value;
  }
  auto ray = [&](double y) {
    const cdouble yc(y, 0.0);
    return yc * log_factor(refl, pol, z, yc);
  };
  accumulate(out, integrate_from(ray, x0, spec));
  return out;
}

double g_function(Polarization pol, double xi, const Reflectivity& refl, const QuadratureSpec& spec) {
  return g_function_result(pol, xi, refl, spec).value;
}

cdouble g_function(Polarization pol, cdouble z, const Reflectivity& refl, const QuadratureSpec& spec) {
  return g_function_result(pol, z, refl, spec).value;
}

double g_p_low_temperature(const MetalModel& model, double a) {
  const double correction = 8.0 * thomas_fermi_parameter(model, a);
  if (!(correction < 1.0)) throw DomainError("g_p_low_temperature: Thomas-Fermi correction >= 1");
  return -zeta3() * (1.0 - correction);
}

FreeEnergyTotal free_energy_total(const Reflectivity& refl, double a, double T, double alpha, long n_max,
                                  const QuadratureSpec& spec) {
  require_geometry(a, T);
  spec.validate();
  if (n_max < 0) throw DomainError("free_energy_total: n_max must be >= 1");
  const double tau = dimensionless_tau(a, T);
  const double pref = free_energy_prefactor(a, T);
  FreeEnergyTotal out;
  out.n_max = n_max == 0 ? default_n_max(tau) : n_max;
  CompensatedSum sum;
  double err = 0.0;
  for (long n = 1; n <= out.n_max; ++n) {
    const double xi = tau * static_cast<double>(n);
    for (Polarization pol : {Polarization::s, Polarization::p}) {
      const auto g = g_function_result(pol, xi, refl, spec);
      sum.add(g.value);
      err += g.error_estimate;
    }
  }
  const double total = sum.value();
  out.value = pref * (-alpha * zeta3() + total);
  out.error_estimate = pref * err;
  out.tail_estimate = pref * 2.0 * matsubara_tail_bound(tau, out.n_max);
  out.truncation_warning = out.tail_estimate > std::max(spec.abs_tol * pref, spec.rel_tol * std::abs(out.value));
  return out;
}

FreeEnergyTotal free_energy_total(const MetalModel& model, double a, double T, const AlphaParameterization& alpha,
                                  long n_max, const QuadratureSpec& spec) {
  const auto refl = Reflectivity::for_model(model, a, T, inner_spec(spec));
  return free_energy_total(refl, a, T, alpha_total(alpha, model, a), n_max, spec);
}

double FreeEnergyBreakdown::bracket() const { return -alpha * zeta3() + s.bracket() + p.bracket(); }

FreeEnergyBreakdown delta_f_abel_plana(const Reflectivity& refl, double a, double T, double alpha,
                                       const QuadratureSpec& spec) {
  require_geometry(a, T);
  spec.validate();
  FreeEnergyBreakdown out;
  out.tau = dimensionless_tau(a, T);
  if (!(out.tau < kAbelPlanaTauLimit)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "Abel-Plana evaluator needs tau < %.2g, got %.6g", kAbelPlanaTauLimit, out.tau);
    throw RegimeError(buf);
  }
  if (!refl.supports_complex()) {
    throw DomainError("reflectivity '" + refl.name() + "' cannot be evaluated at complex frequency");
  }
  out.prefactor = free_energy_prefactor(a, T);
  out.alpha = alpha;
  out.f0 = -alpha * out.prefactor * zeta3();
  const QuadratureSpec inner = inner_spec(spec);
  const double tau = out.tau;

  for (Polarization pol : {Polarization::s, Polarization::p}) {
    PolarizationBreakdown& br = pol == Polarization::s ? out.s : out.p;
    const auto g_tau = g_function_result(pol, tau, refl, inner);
    br.half_G = 0.5 * g_tau.value;
    // The inner G values are only good relative to |G|, so the outer
    // integrals are judged on that scale as well.
    QuadratureSpec outer = spec;
    outer.abs_tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(g_tau.value));
    const auto i01 = integrate_finite(
        [&](double t) { return g_function_result(pol, tau * t, refl, inner).value; }, 0.0, 1.0, outer);
    br.integral_01 = i01.value;
    const auto im = integrate_finite(
        [&](double t) {
          const cdouble z(tau, tau * t);
          return g_function_result(pol, z, refl, inner).value.imag() / std::expm1(2.0 * kPi * t);
        },
        0.0, kBoseCutoff, outer);
    br.im_term = 2.0 * im.value;
    const double inner_noise =
        inner.rel_tol * (std::abs(br.half_G) + std::abs(br.integral_01) + std::abs(br.im_term)) + 3.0 * inner.abs_tol;
    br.error_estimate = 0.5 * g_tau.error_estimate + i01.error_estimate + 2.0 * im.error_estimate + inner_noise;
  }
  out.delta_F = out.f0 + out.prefactor * (out.s.bracket() + out.p.bracket());
  out.error_estimate = out.prefactor * (out.s.error_estimate + out.p.error_estimate);
  return out;
}

FreeEnergyBreakdown delta_f_abel_plana(const MetalModel& model, double a, double T,
                                       const AlphaParameterization& alpha, const QuadratureSpec& spec) {
  const double total = alpha_total(alpha, model, a);
  const auto refl = Reflectivity::for_model(model, a, T, inner_spec(inner_spec(spec)));
  return delta_f_abel_plana(refl, a, T, total, spec);
}

DirectDeltaF delta_f_direct(const Reflectivity& refl, double a, double T, double alpha, const QuadratureSpec& spec) {
  require_geometry(a, T);
  spec.validate();
  DirectDeltaF out;
  out.tau = dimensionless_tau(a, T);
  const double tau = out.tau;
  const double reach = std::ceil(kMatsubaraReach / tau);
  if (!(reach <= static_cast<double>(kDirectMaxTerms))) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "direct Matsubara sum needs %.3g terms at tau = %.3g (limit %ld)", reach, tau,
                  kDirectMaxTerms);
    throw RegimeError(buf);
  }
  out.n_max = static_cast<long>(reach);
  out.prefactor = free_energy_prefactor(a, T);
  out.alpha = alpha;
  out.f0 = -alpha * out.prefactor * zeta3();
  const QuadratureSpec inner = inner_spec(spec);

  double err = 0.0;
  for (Polarization pol : {Polarization::s, Polarization::p}) {
    CompensatedSum sum;
    for (long n = 1; n <= out.n_max; ++n) {
      const auto g = g_function_result(pol, tau * static_cast<double>(n), refl, spec);
      sum.add(g.value);
      err += g.error_estimate;
    }
    const auto zero_t = integrate_from([&](double x) { return g_function_result(pol, x, refl, inner).value; }, 0.0,
                                       spec);
    err += (zero_t.error_estimate + inner.rel_tol * std::abs(zero_t.value)) / tau;
    err += matsubara_tail_bound(tau, out.n_max);
    if (pol == Polarization::s) {
      out.sum_s = sum.value();
      out.zero_T_s = zero_t.value / tau;
    } else {
      out.sum_p = sum.value();
      out.zero_T_p = zero_t.value / tau;
    }
  }
  const double bracket = (out.sum_s - out.zero_T_s) + (out.sum_p - out.zero_T_p);
  out.delta_F = out.f0 + out.prefactor * bracket;
  out.error_estimate = out.prefactor * err;
  return out;
}

DirectDeltaF delta_f_direct(const MetalModel& model, double a, double T, const AlphaParameterization& alpha,
                            const QuadratureSpec& spec) {
  const double total = alpha_total(alpha, model, a);
  const auto refl = Reflectivity::for_model(model, a, T, inner_spec(inner_spec(spec)));
  return delta_f_direct(refl, a, T, total, spec);
}

const char* to_string(DeltaFEngine engine) {
  switch (engine) {
    case DeltaFEngine::Direct:
      return "direct";
    case DeltaFEngine::AbelPlana:
      return "abel_plana";
    case DeltaFEngine::Auto:
      return "auto";
  }
  return "?";
}

DeltaFValue delta_f(const MetalModel& model, double a, double T, const AlphaParameterization& alpha,
                    DeltaFEngine engine, const QuadratureSpec& spec) {
  if (engine == DeltaFEngine::Auto) {
    engine = dimensionless_tau(a, T) < kAbelPlanaTauLimit ? DeltaFEngine::AbelPlana : DeltaFEngine::Direct;
  }
  if (engine == DeltaFEngine::AbelPlana) {
    const auto r = delta_f_abel_plana(model, a, T, alpha, spec);
    return {r.delta_F, r.error_estimate, engine};
  }
  const auto r = delta_f_direct(model, a, T, alpha, spec);
  return {r.delta_F, r.error_estimate, engine};
}

const char* to_string(EntropyMethod method) {
  switch (method) {
    case EntropyMethod::FiniteDifference:
      return "finite_difference";
    case EntropyMethod::AsymptoticSmallA:
      return "asymptotic_small_A";
    case EntropyMethod::AsymptoticLargeA:
      return "asymptotic_large_A";
  }
  return "?";
}

EntropyPoint entropy(const MetalModel& model, double a, double T, const AlphaParameterization& alpha,
                     EntropyMethod method, const QuadratureSpec& spec, const FiniteDifferenceOptions& fd) {
  EntropyPoint out;
  out.T = T;
  out.method = method;
  if (method == EntropyMethod::AsymptoticSmallA) {
    out.S = entropy_small_A(model, a, T, alpha);
    return out;
  }
  if (method == EntropyMethod::AsymptoticLargeA) {
    out.S = entropy_large_A(model, a, T, alpha);
    return out;
  }
  require_geometry(a, T);
  if (!(fd.rel_step > 0.0) || !(fd.T_floor >= 0.0) || !(fd.agreement > 0.0)) {
    throw DomainError("entropy: invalid finite-difference options");
  }
  const double h = std::max(fd.rel_step * T, fd.T_floor);
  if (!(h < T)) throw StepTooLarge("entropy: finite-difference step reaches T = 0");
  out.step = h;
  double worst_error = 0.0;
  auto df = [&](double t) {
    const auto v = delta_f(model, a, t, alpha, fd.engine, spec);
    worst_error = std::max(worst_error, v.error_estimate);
    return v.value;
  };
  out.S_coarse = -(df(T + h) - df(T - h)) / (2.0 * h);
  out.S_fine = -(df(T + 0.5 * h) - df(T - 0.5 * h)) / h;
  const double noise = 4.0 * worst_error / h;
  const double gap = std::abs(out.S_coarse - out.S_fine);
  if (gap > fd.agreement * std::abs(out.S_fine) + noise) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "entropy: step %.3g K too large, estimates %.6g and %.6g disagree", h,
                  out.S_coarse, out.S_fine);
    throw StepTooLarge(buf);
  }
  out.S = (4.0 * out.S_fine - out.S_coarse) / 3.0;
  return out;
}

}  // namespace casimir
