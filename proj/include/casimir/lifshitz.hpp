#pragma once

// Lifshitz free energy of two identical plates at separation a and
// temperature T, in the dimensionless form
//   F = F_0 + (kT / 8 pi a^2) sum_{n>=1} [G_s(n tau) + G_p(n tau)],
//   G_i(xi) = int_xi^inf y ln(1 - r_i^2(xi, y) e^-y) dy,
//   F_0 = -alpha (kT / 8 pi a^2) zeta(3),  alpha = alpha_s + alpha_p.
// The zero-frequency term is never derived from the reflectivity: alpha is
// always an explicit input.
//
// Delta F = F(T) - F(0) is available two ways:
//   abel_plana: F_0 + (kT/8pi a^2) sum_i [G_i(tau)/2 - int_0^1 G_i(tau t) dt
//                 - 2 int_0^inf Im G_i(tau + i tau t) / (e^{2 pi t} - 1) dt]
//   direct:     F_0 + (kT/8pi a^2) sum_i [sum_n G_i(n tau) - (1/tau) int_0^inf G_i]
// G at complex argument z keeps xi = z inside r and integrates y from z
// straight down to Re z and then along the real axis.

#include <optional>
#include <string>

#include "casimir/reflection.hpp"

namespace casimir {

struct AlphaParameterization {
  double alpha_s = 0.0;
  std::optional<double> alpha_p;  // empty: Thomas-Fermi value from the model

  static AlphaParameterization computed(double alpha_s) { return {alpha_s, std::nullopt}; }
  static AlphaParameterization fixed(double alpha_s, double alpha_p) { return {alpha_s, alpha_p}; }

  /// alpha_s must lie in [0, 1/2]; a fixed alpha_p must be finite.
  void validate() const;
};

/// alpha_p = (1 - (8/sqrt 3)(v_F/c)(omega_a/omega_p)) / 2.
double alpha_p_computed(const MetalModel& model, double a);
double alpha_total(const AlphaParameterization& alpha, const MetalModel& model, double a);

/// kT / (8 pi a^2), J/m^2.
double free_energy_prefactor(double a, double T);

// ---------------------------------------------------------------------------
// G functions

IntegralResult<double> g_function_result(Polarization pol, double xi, const Reflectivity& refl,
                                         const QuadratureSpec& spec = {});
IntegralResult<cdouble> g_function_result(Polarization pol, cdouble z, const Reflectivity& refl,
                                          const QuadratureSpec& spec = {});

/// Throws DomainError for xi < 0.
double g_function(Polarization pol, double xi, const Reflectivity& refl, const QuadratureSpec& spec = {});
cdouble g_function(Polarization pol, cdouble z, const Reflectivity& refl, const QuadratureSpec& spec = {});

/// -zeta(3) (1 - (8/sqrt 3)(v_F/c)(omega_a/omega_p)).
double g_p_low_temperature(const MetalModel& model, double a);

// ---------------------------------------------------------------------------
// Free energy

struct FreeEnergyTotal {
  double value = 0.0;           // J/m^2
  double error_estimate = 0.0;  // J/m^2, quadrature only
  double tail_estimate = 0.0;   // J/m^2, bound on the dropped n > n_max terms
  long n_max = 0;
  bool truncation_warning = false;
};

/// n_max = 0 picks ceil(30 / tau).
FreeEnergyTotal free_energy_total(const Reflectivity& refl, double a, double T, double alpha, long n_max = 0,
                                  const QuadratureSpec& spec = {});
FreeEnergyTotal free_energy_total(const MetalModel& model, double a, double T, const AlphaParameterization& alpha,
                                  long n_max = 0, const QuadratureSpec& spec = {});

struct PolarizationBreakdown {
  double half_G = 0.0;
  double integral_01 = 0.0;
  double im_term = 0.0;
  double error_estimate = 0.0;  // dimensionless

  double bracket() const { return half_G - integral_01 - im_term; }
};

struct FreeEnergyBreakdown {
  double tau = 0.0;
  double prefactor = 0.0;  // kT / 8 pi a^2, J/m^2
  double alpha = 0.0;
  double f0 = 0.0;  // J/m^2
  PolarizationBreakdown s;
  PolarizationBreakdown p;
  double delta_F = 0.0;         // J/m^2
  double error_estimate = 0.0;  // J/m^2

  /// Delta F / prefactor.
  double bracket() const;
};

/// Largest tau accepted by the Abel-Plana evaluator.
inline constexpr double kAbelPlanaTauLimit = 0.3;

/// Throws RegimeError for tau >= 0.3 and DomainError if the reflectivity has
/// no complex continuation.
FreeEnergyBreakdown delta_f_abel_plana(const Reflectivity& refl, double a, double T, double alpha,
                                       const QuadratureSpec& spec = {});
FreeEnergyBreakdown delta_f_abel_plana(const MetalModel& model, double a, double T,
                                       const AlphaParameterization& alpha, const QuadratureSpec& spec = {});

struct DirectDeltaF {
  double tau = 0.0;
  double prefactor = 0.0;
  double alpha = 0.0;
  double f0 = 0.0;
  long n_max = 0;
  double sum_s = 0.0;     // sum_{n<=n_max} G_s(n tau)
  double sum_p = 0.0;
  double zero_T_s = 0.0;  // (1/tau) int_0^inf G_s
  double zero_T_p = 0.0;
  double delta_F = 0.0;         // J/m^2
  double error_estimate = 0.0;  // J/m^2, including the truncation bound
};

/// Largest Matsubara count the direct evaluator will attempt.
inline constexpr long kDirectMaxTerms = 2000000;

/// Throws RegimeError when ceil(30/tau) exceeds kDirectMaxTerms.
DirectDeltaF delta_f_direct(const Reflectivity& refl, double a, double T, double alpha,
                            const QuadratureSpec& spec = {});
DirectDeltaF delta_f_direct(const MetalModel& model, double a, double T, const AlphaParameterization& alpha,
                            const QuadratureSpec& spec = {});

enum class DeltaFEngine { Direct, AbelPlana, Auto };

struct DeltaFValue {
  double value = 0.0;
  double error_estimate = 0.0;
  DeltaFEngine engine = DeltaFEngine::Auto;
};

/// Auto uses Abel-Plana for tau < 0.3 and the direct sum above.
DeltaFValue delta_f(const MetalModel& model, double a, double T, const AlphaParameterization& alpha,
                    DeltaFEngine engine, const QuadratureSpec& spec = {});

const char* to_string(DeltaFEngine engine);

// ---------------------------------------------------------------------------
// Entropy

enum class EntropyMethod { FiniteDifference, AsymptoticSmallA, AsymptoticLargeA };

const char* to_string(EntropyMethod method);

struct FiniteDifferenceOptions {
  double rel_step = 0.02;  // h = max(rel_step * T, T_floor)
  double T_floor = 1e-12;  // K
  double agreement = 0.02;  // allowed relative gap between the h and h/2 estimates
  DeltaFEngine engine = DeltaFEngine::Auto;
};

struct EntropyPoint {
  double T = 0.0;
  double S = 0.0;  // J/(K m^2)
  EntropyMethod method = EntropyMethod::FiniteDifference;
  // Finite-difference metadata; zero for the asymptotic methods.
  double step = 0.0;
  double S_coarse = 0.0;  // central difference with step h
  double S_fine = 0.0;    // central difference with step h/2
};

/// S = -d(Delta F)/dT. The finite-difference result is the Richardson
/// combination (4 S_fine - S_coarse) / 3; StepTooLarge is thrown when the two
/// central differences disagree beyond the allowed gap.
EntropyPoint entropy(const MetalModel& model, double a, double T, const AlphaParameterization& alpha,
                     EntropyMethod method, const QuadratureSpec& spec = {}, const FiniteDifferenceOptions& fd = {});

}  // namespace casimir
