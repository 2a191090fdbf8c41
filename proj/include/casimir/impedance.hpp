#pragma once

// Surface impedances on the imaginary frequency axis.
//
// Impedances are dimensionless (in units of the vacuum impedance). The
// anomalous-limit pair is built from
//   F(b) = (2/pi) int_0^inf cosh^2 chi / (cosh^3 chi + b^3) dchi,
//   G(b) = (2/pi) int_0^inf sinh^2 chi / (cosh^3 chi + b^3) dchi.
// Both depend on b only through b^3. They are evaluated in closed form:
// with J(beta) = int_0^inf ds / (s^2 + 2 beta s + 1) and w_k the cube roots
// of unity,
//   F(b) = (2 / 3pi) sum_k J(b w_k),
//   F(b) - G(b) = (2 / 3pi b^2) sum_k w_k^-2 J(b w_k),
// switching to the Taylor series of J for |b| < 0.3. The quadrature forms
// are kept for cross-checks.
//
// The Boltzmann model is only meaningful for wave numbers below the Fermi
// wave number k_F. k_F is not a MetalModel field and nothing here checks it.

#include <array>
#include <complex>
#include <functional>

#include "casimir/material.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

using cdouble = std::complex<double>;

struct ImpedancePair {
  double z_s = 0.0;
  double z_p = 0.0;
  double zeta = 0.0;  // rad/s
  double q = 0.0;     // 1/m
};

struct RegimeReport {
  double v_min = 0.0;
  double b = 0.0;
  double A = 0.0;
  double tau = 0.0;
  bool leontovich_valid = false;
  bool anomalous_valid = false;
};

struct RegimeThresholds {
  double v_min = 10.0;
  double b = 10.0;
};

// ---------------------------------------------------------------------------
// Special functions

template <class S>
struct SpecialValues {
  S F;
  S one_minus_F;  // accurate for small b
  S G;
};

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr int kJSeriesTerms = 51;
inline constexpr double kSeriesB = 0.3;

// Taylor coefficients of J(beta) about 0.
inline const std::array<double, kJSeriesTerms>& j_series() {
  static const std::array<double, kJSeriesTerms> coeffs = [] {
    std::array<double, kJSeriesTerms> c{};
    c[0] = 0.5 * kPi;
    c[1] = -1.0;
    for (int m = 2; m < kJSeriesTerms; ++m) {
      const int n = m / 2;
      c[m] = (m % 2 == 0) ? c[m - 2] * (2.0 * n - 1.0) / (2.0 * n) : c[m - 2] * (2.0 * n) / (2.0 * n + 1.0);
    }
    return c;
  }();
  return coeffs;
}

inline cdouble j_closed(cdouble beta) {
  if (beta.real() < 0.5) return std::acos(beta) / std::sqrt(1.0 - beta * beta);
  if (std::abs(beta) > 1e100) return std::log(2.0 * beta) / beta;
  const cdouble inv2 = 1.0 / (beta * beta);
  const cdouble u = 1.0 - inv2;
  if (std::abs(u) < 0.1) {
    cdouble term = 1.0;
    cdouble sum = 0.0;
    for (int n = 0; n < 30; ++n) {
      sum += term / (2.0 * n + 1.0);
      term *= u;
    }
    return sum / beta;
  }
  const cdouble s = std::sqrt(u);
  const cdouble one_minus_s = inv2 / (1.0 + s);
  return 0.5 * (std::log(1.0 + s) - std::log(one_minus_s)) / (s * beta);
}

inline SpecialValues<cdouble> special_series(cdouble b) {
  const auto& j = j_series();
  const cdouble b3 = b * b * b;
  cdouble power = 1.0;
  cdouble tail = 0.0;  // sum_{l>=1} j_{3l} b^{3l}
  cdouble h = 0.0;
  for (int l = 0; 3 * l + 2 < kJSeriesTerms; ++l) {
    if (l > 0) tail += j[3 * l] * power;
    h += j[3 * l + 2] * power;
    power *= b3;
  }
  const double k = 2.0 / kPi;
  const cdouble one_minus_F = -k * tail;
  const cdouble F = 1.0 - one_minus_F;
  return {F, one_minus_F, F - k * h};
}

inline SpecialValues<cdouble> special_closed(cdouble b) {
  if (std::abs(b) < kSeriesB) return special_series(b);
  static const std::array<cdouble, 3> roots = {cdouble(1.0, 0.0), cdouble(-0.5, 0.8660254037844386),
                                               cdouble(-0.5, -0.8660254037844386)};
  cdouble sum_f = 0.0;
  cdouble sum_h = 0.0;
  for (const cdouble& w : roots) {
    const cdouble jw = j_closed(b * w);
    sum_f += jw;
    sum_h += jw / (w * w);
  }
  const cdouble F = (2.0 / (3.0 * kPi)) * sum_f;
  const cdouble H = (2.0 / (3.0 * kPi)) * sum_h / (b * b);
  return {F, 1.0 - F, F - H};
}

}  // namespace detail

SpecialValues<double> special_values(double b);
SpecialValues<cdouble> special_values(cdouble b);

/// Throws DomainError for b < 0.
double special_F(double b);
double special_G(double b);
cdouble special_F(cdouble b);
cdouble special_G(cdouble b);

/// Direct quadrature of the defining integrals (real or complex b).
double special_F_quadrature(double b, const QuadratureSpec& spec = {});
double special_G_quadrature(double b, const QuadratureSpec& spec = {});
cdouble special_F_quadrature(cdouble b, const QuadratureSpec& spec = {});
cdouble special_G_quadrature(cdouble b, const QuadratureSpec& spec = {});

/// 4 / (3 sqrt 3): large-b limit of b F(b) and b G(b).
inline constexpr double kLeontovichCoefficient = 0.76980035891950104;

// ---------------------------------------------------------------------------
// Dimensionless groupings

/// omega_a = c / 2a.
double omega_a(double a);
/// tau = 2 pi k T / (hbar omega_a).
double dimensionless_tau(double a, double T);
/// A^3 / tau = (3pi/4)(c/v_F)(omega_p/omega_a)^2, so A(xi)^3 = K xi.
double anomalous_scale(const MetalModel& model, double a);
/// A = (anomalous_scale * tau)^(1/3).
double parameter_A(const MetalModel& model, double a, double T);
/// (1/sqrt 3)(v_F/c)(omega_a/omega_p): the Thomas-Fermi term of the
/// p impedance is this times kappa^2 / xi.
double thomas_fermi_parameter(const MetalModel& model, double a);
/// b = (1/q) ((3pi/4) omega_p^2 zeta / (c^2 v_F))^(1/3).
double parameter_b(const MetalModel& model, double zeta, double q);

// ---------------------------------------------------------------------------
// Impedances

ImpedancePair impedance_anomalous(const MetalModel& model, double zeta, double q);
double impedance_leontovich(const MetalModel& model, double zeta);

/// Local Leontovich impedance sqrt(zeta omega_tau) / omega_p of the Drude
/// model in the normal skin effect regime.
double impedance_leontovich_local(const MetalModel& model, double zeta, double T);

/// Exact local impedances for a k-independent permittivity eps:
/// z_s = (zeta/c)/kappa, z_p = kappa c / (zeta eps), kappa = sqrt(q^2 + zeta^2 eps / c^2).
ImpedancePair impedance_local(double eps, double zeta, double q);

using DielectricSupplier = std::function<DielectricPair(double zeta, double k)>;

/// Wave-number integrals for an arbitrary (k-dependent) permittivity pair.
ImpedancePair impedance_exact(const DielectricSupplier& eps, double zeta, double q,
                              const QuadratureSpec& spec = {});

/// Same, with the permittivity picked by model.response: the Boltzmann
/// functions for NonlocalBoltzmann, their limits for AnomalousLimit and the
/// local functions otherwise.
ImpedancePair impedance_exact(const MetalModel& model, double zeta, double q, double T,
                              const QuadratureSpec& spec = {});

RegimeReport regime_report(const MetalModel& model, double a, double T,
                           const RegimeThresholds& thresholds = {});

namespace detail {

template <class S>
struct ExactIntegrals {
  S I_s;  // (2/pi) int cosh / (cosh^2 + X)
  S D_s;  // 1 - I_s, integrated directly while it is the small one
  S z_p;
};

// Integrals behind impedance_exact after k_z = q sinh chi, with
// X(chi) = x^2 eps_t(q cosh chi) and x = zeta / (c q):
//   z_s = x I_s
//   z_p = (2/pi) int [1 / (x eps_l cosh) + x sinh^2 / (cosh (cosh^2 + X))]
// eps(k) returns the permittivity pair at the fixed frequency. Works for
// complex x and q (continuation off the imaginary axis).
template <class S, class Eps>
ExactIntegrals<S> exact_integrals(const Eps& eps, S x, S q, bool need_s, bool need_p,
                                  const QuadratureSpec& spec) {
  constexpr double chi_max = 300.0;  // integrands are O(e^-chi)
  // Dielectric round-off limits how far these can be pushed; accept a result
  // within 100x of the requested tolerance, throw beyond that.
  QuadratureSpec soft = spec;
  soft.throw_on_failure = false;
  auto run = [&](auto&& f) -> S {
    const auto r = integrate_semi_infinite(f, 0.0, soft);
    if (!r.converged && spec.throw_on_failure &&
        r.error_estimate > 100.0 * std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value))) {
      throw NonConvergence("impedance integral did not converge", std::real(r.value), r.error_estimate);
    }
    return r.value;
  };
  const S x2 = x * x;
  const double norm = 2.0 / kPi;
  ExactIntegrals<S> out{S(0.0), S(0.0), S(0.0)};
  if (need_s) {
    auto deficit = [&](double chi) -> S {
      if (chi > chi_max) return S(0.0);
      const double c = std::cosh(chi);
      const S X = x2 * eps(q * c).eps_t;
      return X / (c * (c * c + X));
    };
    out.D_s = norm * run(deficit);
    if (std::abs(out.D_s) > 0.5) {
      auto direct = [&](double chi) -> S {
        if (chi > chi_max) return S(0.0);
        const double c = std::cosh(chi);
        return c / (c * c + x2 * eps(q * c).eps_t);
      };
      out.I_s = norm * run(direct);
      out.D_s = 1.0 - out.I_s;
    } else {
      out.I_s = 1.0 - out.D_s;
    }
  }
  if (need_p) {
    auto p_integrand = [&](double chi) -> S {
      if (chi > chi_max) return S(0.0);
      const double c = std::cosh(chi);
      const double sh = std::sinh(chi);
      const auto e = eps(q * c);
      return 1.0 / (x * e.eps_l * c) + x * (sh * sh) / (c * (c * c + x2 * e.eps_t));
    };
    out.z_p = norm * run(p_integrand);
  }
  return out;
}

}  // namespace detail

}  // namespace casimir
