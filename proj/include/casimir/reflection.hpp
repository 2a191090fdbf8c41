#pragma once

// Reflection coefficients at imaginary frequency in the dimensionless
// variables xi = zeta / omega_a and y = 2a sqrt(zeta^2/c^2 + q^2), with
// omega_a = c / 2a.
//
// Every reflectivity is represented by the impedance ratio w = Z / Z_0 of the
// plate to the plane wave, with 1 - w carried separately so that weakly
// reflecting configurations keep their relative accuracy:
//   r_s = -(1 - w_s) / (1 + w_s),   r_p = (1 - w_p) / (1 + w_p).

#include <functional>
#include <string>

#include "casimir/impedance.hpp"

namespace casimir {

enum class Polarization { s, p };

const char* to_string(Polarization pol);

struct WaveImpedances {
  double z_s0 = 0.0;
  double z_p0 = 0.0;
};

/// z_s0 = xi / y and z_p0 = y / xi (infinite at xi = 0).
WaveImpedances wave_impedances(double xi, double y);

/// r_s = -(z0 - z)/(z0 + z), r_p = (z0 - z)/(z0 + z).
double reflection_from_impedance(double z0, double z, Polarization pol);

/// -(1 - F(1/x)) / (1 + F(1/x)), x = y / A.
double r_s_anomalous_dimensionless(double x);

/// 1 - 2u with u = (1/sqrt 3)(v_F/c)(omega_a/omega_p) y. Throws DomainError
/// once 2u >= 1.
double r_p_low_frequency(const MetalModel& model, double a, double y);
/// (1 - u) / (1 + u), the unexpanded form.
double r_p_low_frequency_rational(const MetalModel& model, double a, double y);

template <class S>
struct ImpedanceRatio {
  S w;
  S one_minus_w;
};

template <class S>
struct ReflectionSquared {
  S r2;
  S one_minus_r2;
};

template <class S>
ReflectionSquared<S> squared_from_ratio(const ImpedanceRatio<S>& ratio) {
  const S inv = 1.0 / (1.0 + ratio.w);
  const S r = ratio.one_minus_w * inv;
  return {r * r, 4.0 * ratio.w * inv * inv};
}

struct ReflectionPair {
  double r_s = 0.0;
  double r_p = 0.0;
  double xi = 0.0;
  double y = 0.0;
};

/// A reflection supplier for both polarizations, evaluated at real (xi, y)
/// and, where the model allows it, at complex arguments.
class Reflectivity {
 public:
  using RealFn = std::function<ImpedanceRatio<double>(Polarization, double, double)>;
  using ComplexFn = std::function<ImpedanceRatio<cdouble>(Polarization, cdouble, cdouble)>;

  Reflectivity(std::string name, RealFn real, ComplexFn complex = {});

  ImpedanceRatio<double> ratio(Polarization pol, double xi, double y) const;
  ImpedanceRatio<cdouble> ratio(Polarization pol, cdouble xi, cdouble y) const;
  ReflectionSquared<double> squared(Polarization pol, double xi, double y) const;
  ReflectionSquared<cdouble> squared(Polarization pol, cdouble xi, cdouble y) const;
  double coefficient(Polarization pol, double xi, double y) const;
  ReflectionPair pair(double xi, double y) const;

  bool supports_complex() const { return static_cast<bool>(complex_); }
  const std::string& name() const { return name_; }

  /// |r| = 1 for both polarizations.
  static Reflectivity perfect();
  /// r = 0.
  static Reflectivity none();
  /// Frequency- and momentum-independent r^2 per polarization.
  static Reflectivity constant_squared(double r2_s, double r2_p);
  /// Impedance-based reflectivity of a metal at separation a and
  /// temperature T (the temperature only enters through omega_tau). The
  /// spec is used for the inner wave-number integrals of the Boltzmann model.
  static Reflectivity for_model(const MetalModel& model, double a, double T, const QuadratureSpec& spec = {});
  /// s polarization from one source, p from the other.
  static Reflectivity combine(const Reflectivity& s_source, const Reflectivity& p_source);
  /// Real-argument supplier from a signed coefficient r(pol, xi, y).
  static Reflectivity from_coefficient(std::string name, std::function<double(Polarization, double, double)> r);

 private:
  std::string name_;
  RealFn real_;
  ComplexFn complex_;
};

}  // namespace casimir
