#pragma once

// Low-temperature closed forms for Delta F and S in the two anomalous-skin
// regimes, and the numerical constants they contain.
//
// Small A (A << 1):
//   Delta F = (kT/8pi a^2) [-alpha zeta(3) + zeta(3)(1 - 8 c1)/2 + B A^2]
// Large A (A >> 1, tau << 1):
//   Delta F = (kT/8pi a^2) zeta(3) [-alpha + 1 - 4 c1 - (32 / 3 sqrt 3)(1 - 2 p1) / A]
// with c1 = (1/sqrt 3)(v_F/c)(omega_a/omega_p) and
//   C  = -int_0^inf x ln(1 - r_s^2(1/x)) dx
//   I  = int_0^inf (1+t^2)^(1/3) sin((2/3) atan t) / (e^{2 pi t} - 1) dt
//   p1 = int_0^inf (1+t^2)^(-1/6) sin((1/3) atan t) / (e^{2 pi t} - 1) dt
//   B  = C (1/10 + 2 I)
// The O(A^3) and O(1/A^2) remainders are not included.

#include "casimir/lifshitz.hpp"

namespace casimir {

struct AsymptoticConstants {
  double c_small_A = 0.0;
  double bracket_small_A = 0.0;
  double p1 = 0.0;
  double bose_I = 0.0;
};

double constant_c_small_A(const QuadratureSpec& spec = {});
double constant_bose_I(const QuadratureSpec& spec = {});
double constant_p1(const QuadratureSpec& spec = {});

/// B from its own pieces: C times (int_0^1 t^(2/3) dt - 1/2 + 2 I), with the
/// t-integral of I taken over Im (1 + i t)^(2/3) directly.
double bracket_small_A(const QuadratureSpec& spec = {});

AsymptoticConstants compute_asymptotic_constants(const QuadratureSpec& spec = {});

/// Computed once with default tolerances and cached.
const AsymptoticConstants& asymptotic_constants();

/// Throws RegimeError for A >= 1.
double delta_f_small_A(const MetalModel& model, double a, double T, const AlphaParameterization& alpha);
/// Throws RegimeError for A <= 1 or tau >= 0.3.
double delta_f_large_A(const MetalModel& model, double a, double T, const AlphaParameterization& alpha);

/// Entropy closed forms (J/(K m^2)). The alpha_s overloads use the computed
/// alpha_p, which reduces them to
///   small A: (k/8pi a^2) [alpha_s zeta(3) - (5/3) B A^2]
///   large A: (k/8pi a^2) zeta(3) [alpha_s - 1/2 + (64 / 9 sqrt 3)(1 - 2 p1) / A]
double entropy_small_A(const MetalModel& model, double a, double T, const AlphaParameterization& alpha);
double entropy_small_A(const MetalModel& model, double a, double T, double alpha_s);
double entropy_large_A(const MetalModel& model, double a, double T, const AlphaParameterization& alpha);
double entropy_large_A(const MetalModel& model, double a, double T, double alpha_s);

}  // namespace casimir
