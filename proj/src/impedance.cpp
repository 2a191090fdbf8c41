#include "casimir/impedance.hpp"

#include <limits>

#include "casimir/physical_constants.hpp"

namespace casimir {

namespace {

using detail::kPi;

void require_nonnegative_b(double b) {
  if (!(b >= 0.0)) throw DomainError("special function: b must be >= 0");
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) throw DomainError(std::string(what) + " must be finite and > 0");
}

template <class S>
S cube(S b) {
  return b * b * b;
}

// 1 / (cosh + b^3 / cosh^2) and its tanh^2 companion stay finite for any chi.
template <class S>
S f_integrand(S b3, double chi) {
  if (chi > 700.0) return S(0.0);
  const double c = std::cosh(chi);
  return 1.0 / (c + b3 / (c * c));
}

template <class S>
S g_integrand(S b3, double chi) {
  if (chi > 700.0) return S(0.0);
  const double c = std::cosh(chi);
  const double t = std::tanh(chi);
  return t * t / (c + b3 / (c * c));
}

DielectricSupplier supplier_for(const MetalModel& model, double T) {
  const double wp = model.omega_p;
  const double vf = model.v_F;
  switch (model.response) {
    case ResponseKind::NonlocalBoltzmann: {
      const double wt = relaxation_frequency(model, T);
      return [wp, vf, wt](double zeta, double k) { return dielectric_nonlocal_at(wp, vf, wt, zeta, k); };
    }
    case ResponseKind::AnomalousLimit:
      return [wp, vf](double zeta, double k) { return dielectric_anomalous_at(wp, vf, zeta, k); };
    case ResponseKind::LocalDrude:
    case ResponseKind::LocalPlasma: {
      const double wt = model.response == ResponseKind::LocalDrude ? relaxation_frequency(model, T) : 0.0;
      return [wp, wt](double zeta, double) {
        const double e = dielectric_drude_at(wp, wt, zeta);
        return DielectricPair{e, e};
      };
    }
  }
  throw DomainError("impedance_exact: unknown response kind");
}

}  // namespace

SpecialValues<double> special_values(double b) {
  require_nonnegative_b(b);
  const auto v = detail::special_closed(cdouble(b, 0.0));
  return {v.F.real(), v.one_minus_F.real(), v.G.real()};
}

SpecialValues<cdouble> special_values(cdouble b) { return detail::special_closed(b); }

double special_F(double b) { return special_values(b).F; }
double special_G(double b) { return special_values(b).G; }
cdouble special_F(cdouble b) { return special_values(b).F; }
cdouble special_G(cdouble b) { return special_values(b).G; }

double special_F_quadrature(double b, const QuadratureSpec& spec) {
  require_nonnegative_b(b);
  const double b3 = cube(b);
  return (2.0 / kPi) * integrate_semi_infinite([b3](double chi) { return f_integrand(b3, chi); }, 0.0, spec).value;
}

double special_G_quadrature(double b, const QuadratureSpec& spec) {
  require_nonnegative_b(b);
  const double b3 = cube(b);
  return (2.0 / kPi) * integrate_semi_infinite([b3](double chi) { return g_integrand(b3, chi); }, 0.0, spec).value;
}

cdouble special_F_quadrature(cdouble b, const QuadratureSpec& spec) {
  const cdouble b3 = cube(b);
  return (2.0 / kPi) * integrate_semi_infinite([b3](double chi) { return f_integrand(b3, chi); }, 0.0, spec).value;
}

cdouble special_G_quadrature(cdouble b, const QuadratureSpec& spec) {
  const cdouble b3 = cube(b);
  return (2.0 / kPi) * integrate_semi_infinite([b3](double chi) { return g_integrand(b3, chi); }, 0.0, spec).value;
}

double omega_a(double a) {
  require_positive(a, "separation a");
  return si::c / (2.0 * a);
}

double dimensionless_tau(double a, double T) {
  if (!(T >= 0.0)) throw DomainError("temperature must be >= 0");
  return 2.0 * kPi * si::k_B * T / (si::hbar * omega_a(a));
}

double anomalous_scale(const MetalModel& model, double a) {
  model.validate();
  const double ratio = model.omega_p / omega_a(a);
  return 0.75 * kPi * (si::c / model.v_F) * ratio * ratio;
}

double parameter_A(const MetalModel& model, double a, double T) {
  return std::cbrt(anomalous_scale(model, a) * dimensionless_tau(a, T));
}

double thomas_fermi_parameter(const MetalModel& model, double a) {
  model.validate();
  return (model.v_F / si::c) * (omega_a(a) / model.omega_p) / std::sqrt(3.0);
}

double parameter_b(const MetalModel& model, double zeta, double q) {
  model.validate();
  if (!(zeta >= 0.0)) throw DomainError("parameter_b: zeta must be >= 0");
  require_positive(q, "parameter_b: q");
  return std::cbrt(0.75 * kPi * model.omega_p * model.omega_p * zeta / (si::c * si::c * model.v_F)) / q;
}

ImpedancePair impedance_anomalous(const MetalModel& model, double zeta, double q) {
  require_positive(zeta, "impedance_anomalous: zeta");
  require_positive(q, "impedance_anomalous: q");
  const auto fg = special_values(parameter_b(model, zeta, q));
  const double x = zeta / (si::c * q);
  const double thomas_fermi = q * q / std::sqrt(3.0) * si::c * model.v_F / (zeta * model.omega_p);
  return {x * fg.F, thomas_fermi + x * fg.G, zeta, q};
}

double impedance_leontovich(const MetalModel& model, double zeta) {
  model.validate();
  require_positive(zeta, "impedance_leontovich: zeta");
  const double r = zeta / model.omega_p;
  return kLeontovichCoefficient * std::cbrt(4.0 / (3.0 * kPi) * (model.v_F / si::c) * r * r);
}

double impedance_leontovich_local(const MetalModel& model, double zeta, double T) {
  model.validate();
  require_positive(zeta, "impedance_leontovich_local: zeta");
  return std::sqrt(zeta * relaxation_frequency(model, T)) / model.omega_p;
}

ImpedancePair impedance_local(double eps, double zeta, double q) {
  require_positive(zeta, "impedance_local: zeta");
  if (!(q >= 0.0)) throw DomainError("impedance_local: q must be >= 0");
  if (!(eps > 0.0)) throw DomainError("impedance_local: eps must be > 0");
  const double kappa = std::sqrt(q * q + zeta * zeta * eps / (si::c * si::c));
  return {(zeta / si::c) / kappa, kappa * si::c / (zeta * eps), zeta, q};
}

ImpedancePair impedance_exact(const DielectricSupplier& eps, double zeta, double q, const QuadratureSpec& spec) {
  require_positive(zeta, "impedance_exact: zeta");
  require_positive(q, "impedance_exact: q");
  const double x = zeta / (si::c * q);
  auto at_k = [&](double k) { return eps(zeta, k); };
  const auto r = detail::exact_integrals<double>(at_k, x, q, true, true, spec);
  return {x * r.I_s, r.z_p, zeta, q};
}

ImpedancePair impedance_exact(const MetalModel& model, double zeta, double q, double T, const QuadratureSpec& spec) {
  model.validate();
  return impedance_exact(supplier_for(model, T), zeta, q, spec);
}

RegimeReport regime_report(const MetalModel& model, double a, double T, const RegimeThresholds& thresholds) {
  model.validate();
  require_positive(a, "regime_report: a");
  if (!(T >= 0.0)) throw DomainError("regime_report: T must be >= 0");
  RegimeReport r;
  r.tau = dimensionless_tau(a, T);
  r.A = std::cbrt(anomalous_scale(model, a) * r.tau);
  const double zeta1 = 2.0 * kPi * si::k_B * T / si::hbar;
  const double q = 1.0 / (2.0 * a);
  r.b = parameter_b(model, zeta1, q);
  const double denom = zeta1 + relaxation_frequency(model, T);
  r.v_min = denom > 0.0 ? model.v_F * q / denom : std::numeric_limits<double>::infinity();
  r.anomalous_valid = r.v_min > thresholds.v_min;
  r.leontovich_valid = r.anomalous_valid && r.b > thresholds.b;
  return r;
}

}  // namespace casimir
