#pragma once

// Metal parameters and dielectric response on the imaginary frequency axis.
//
// Frequencies are angular (rad/s), wave numbers in 1/m, temperatures in K.
// The nonlocal functions are the Boltzmann-equation results for a free
// electron gas (specular surface scattering is implied by the impedance
// relations that consume them; diffuse scattering is not modelled). They are
// physically meaningful for zeta < omega_p and k < k_F; k_F is not a model
// field and that bound is not enforced.

#include <cmath>
#include <complex>
#include <variant>

#include "casimir/errors.hpp"

namespace casimir {

enum class ResponseKind { LocalDrude, LocalPlasma, NonlocalBoltzmann, AnomalousLimit };

struct ConstantRelaxation {
  double omega_tau = 0.0;
};

/// omega_tau(T) = omega_tau0 * (T / T_ref)^exponent. exponent > 1 encodes a
/// relaxation rate that falls faster than linearly on cooling.
struct PowerLawRelaxation {
  double omega_tau0 = 0.0;
  double T_ref = 300.0;
  double exponent = 5.0;
};

/// Power law on top of a residual (impurity) rate that survives at T = 0.
struct ResidualPowerLawRelaxation {
  double omega_res = 0.0;
  double omega_tau0 = 0.0;
  double T_ref = 300.0;
  double exponent = 5.0;
};

using RelaxationLaw = std::variant<ConstantRelaxation, PowerLawRelaxation, ResidualPowerLawRelaxation>;

struct MetalModel {
  double omega_p = 0.0;  // plasma frequency, rad/s
  double v_F = 0.0;      // Fermi velocity, m/s
  RelaxationLaw relaxation = ConstantRelaxation{};
  ResponseKind response = ResponseKind::AnomalousLimit;

  /// Throws DomainError unless omega_p > 0, 0 < v_F < c and the relaxation
  /// law parameters are nonnegative.
  void validate() const;
};

/// Demonstration parameters: omega_p = 1.37e16 rad/s, v_F = 1.4e6 m/s and a
/// T^5 relaxation law reaching 5.32e13 rad/s at 300 K.
MetalModel gold_like(ResponseKind response = ResponseKind::AnomalousLimit);

template <class S>
struct DielectricPairT {
  S eps_l;
  S eps_t;
};
using DielectricPair = DielectricPairT<double>;

double relaxation_frequency(const MetalModel& model, double T);
double relaxation_frequency(const RelaxationLaw& law, double T);

namespace detail {

template <class S>
double magnitude(const S& s) {
  return std::abs(s);
}

// (v - atan v) / v^3 as a power series; used for small |v|.
template <class S>
S v_minus_atan_over_v3_series(S v) {
  const S v2 = v * v;
  S term = S(1.0);
  S sum = S(0.0);
  for (int k = 1; k <= 14; ++k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    sum += term * (sign / (2.0 * k + 1.0));
    term *= v2;
  }
  return sum;
}

inline constexpr double kSeriesRadius = 0.1;

}  // namespace detail

/// Longitudinal form factor f_l(v) with relax_ratio = omega_tau / zeta.
template <class S>
S nonlocal_f_l(S v, S relax_ratio) {
  if (detail::magnitude(v) < detail::kSeriesRadius) {
    const S d = detail::v_minus_atan_over_v3_series(v);
    return 3.0 * d / (1.0 + relax_ratio * v * v * d);
  }
  const S diff = v - std::atan(v);
  return 3.0 * diff / (v * v * (v + relax_ratio * diff));
}

/// Transverse form factor f_t(v).
template <class S>
S nonlocal_f_t(S v) {
  if (detail::magnitude(v) < detail::kSeriesRadius) {
    // 3 * sum_{m>=1} (-1)^{m+1} v^{2m-2} / (4 m^2 - 1)
    const S v2 = v * v;
    S term = S(1.0);
    S sum = S(0.0);
    for (int m = 1; m <= 14; ++m) {
      const double sign = (m % 2 == 1) ? 1.0 : -1.0;
      sum += term * (sign / (4.0 * m * m - 1.0));
      term *= v2;
    }
    return 3.0 * sum;
  }
  return 1.5 / (v * v * v) * ((1.0 + v * v) * std::atan(v) - v);
}

/// Boltzmann-theory permittivities at imaginary frequency zeta and wave
/// number k. Valid for complex arguments (analytic continuation).
template <class S>
DielectricPairT<S> dielectric_nonlocal_at(double omega_p, double v_F, double omega_tau, S zeta, S k) {
  const S denom = zeta + omega_tau;
  const S v = v_F * k / denom;
  const S relax_ratio = S(omega_tau) / zeta;
  const S scale = omega_p * omega_p / (zeta * denom);
  return {1.0 + scale * nonlocal_f_l(v, relax_ratio), 1.0 + scale * nonlocal_f_t(v)};
}

/// Anomalous-skin-effect (v >> 1) limit; omega_tau drops out.
template <class S>
DielectricPairT<S> dielectric_anomalous_at(double omega_p, double v_F, S zeta, S k) {
  constexpr double three_pi_over_4 = 0.75 * 3.14159265358979323846;
  const S ratio = omega_p / (v_F * k);
  return {1.0 + 3.0 * ratio * ratio, 1.0 + three_pi_over_4 * omega_p * omega_p / (zeta * v_F * k)};
}

template <class S>
S dielectric_drude_at(double omega_p, double omega_tau, S zeta) {
  return 1.0 + omega_p * omega_p / (zeta * (zeta + omega_tau));
}

DielectricPair dielectric_nonlocal(const MetalModel& model, double zeta, double k, double T);
DielectricPair dielectric_anomalous(const MetalModel& model, double zeta, double k);

/// LocalDrude: 1 + omega_p^2 / (zeta (zeta + omega_tau(T))).
/// LocalPlasma: 1 + omega_p^2 / zeta^2. Other response kinds are rejected.
double dielectric_local(const MetalModel& model, double zeta, double T);

}  // namespace casimir
