#include "casimir/reflection.hpp"

#include <limits>

#include "casimir/physical_constants.hpp"

namespace casimir {

namespace {

template <class S>
S cube_root(S v) {
  if constexpr (std::is_floating_point_v<S>) {
    return std::cbrt(v);
  } else {
    if (v == S(0.0)) return S(0.0);
    return std::pow(v, 1.0 / 3.0);
  }
}

template <class S>
ImpedanceRatio<S> from_w(S w) {
  return {w, 1.0 - w};
}

// Ratio for a signed coefficient in the p convention.
ImpedanceRatio<double> ratio_from_r(double r) {
  return {(1.0 - r) / (1.0 + r), 2.0 * r / (1.0 + r)};
}

template <class S>
S kappa_of(S xi, S y) {
  return std::sqrt((y - xi) * (y + xi));
}

// 1 - y / kappa without cancellation.
template <class S>
S one_minus_y_over_kappa(S xi, S y, S kappa) {
  return -xi * xi / (kappa * (kappa + y));
}

struct AnomalousCore {
  double scale;         // A(xi)^3 = scale * xi
  double thomas_fermi;  // (1/sqrt 3)(v_F/c)(omega_a/omega_p)
};

template <class S>
ImpedanceRatio<S> anomalous_ratio(const AnomalousCore& core, Polarization pol, S xi, S y) {
  const S zero(0.0);
  if (y == zero) return from_w(S(pol == Polarization::s ? 1.0 : 0.0));
  const S kappa = kappa_of(xi, y);
  if (pol == Polarization::s) {
    if (xi == zero) return {S(1.0), zero};
    const S a_xi = cube_root(core.scale * xi);
    if (kappa == zero) return from_w(S(y * kLeontovichCoefficient / a_xi));
    const S b = a_xi / kappa;
    const auto fg = special_values(b);
    if (std::abs(b) < 1.0) {
      const S y_over_kappa = y / kappa;
      return {y_over_kappa * fg.F, one_minus_y_over_kappa(xi, y, kappa) + y_over_kappa * fg.one_minus_F};
    }
    return from_w(S(y * b * fg.F / a_xi));
  }
  S w = core.thomas_fermi * kappa * kappa / y;
  if (xi != zero) {
    const S a_xi = cube_root(core.scale * xi);
    if (kappa == zero) {
      w += xi * xi / y * kLeontovichCoefficient / a_xi;
    } else {
      const S b = a_xi / kappa;
      const auto fg = special_values(b);
      if (std::abs(b) < 1.0) {
        w += xi * xi / (y * kappa) * fg.G;
      } else {
        w += xi * xi / y * (b * fg.G) / a_xi;
      }
    }
  }
  return from_w(w);
}

struct LocalCore {
  double plasma2;  // (omega_p / omega_a)^2
  double relax;    // omega_tau / omega_a
};

template <class S>
ImpedanceRatio<S> local_ratio(const LocalCore& core, Polarization pol, S xi, S y) {
  const S zero(0.0);
  const S d = xi * (xi + core.relax);
  S extra;  // xi^2 (eps - 1)
  S inv_eps;
  if (d == zero) {
    extra = S(core.relax == 0.0 ? core.plasma2 : 0.0);
    inv_eps = zero;
  } else {
    extra = xi * xi * core.plasma2 / d;
    inv_eps = d / (d + core.plasma2);
  }
  const S K = std::sqrt(y * y + extra);
  if (pol == Polarization::s) {
    if (K == zero) return {S(1.0), zero};
    return {y / K, extra / (K * (K + y))};
  }
  if (y == zero) return from_w(zero);
  return from_w(S(K * inv_eps / y));
}

struct NonlocalCore {
  double omega_p;
  double v_F;
  double omega_tau;
  double omega_a;
  double two_a;
  QuadratureSpec spec;
};

template <class S>
ImpedanceRatio<S> nonlocal_ratio(const NonlocalCore& core, Polarization pol, S xi, S y) {
  const S zero(0.0);
  if (xi == zero) throw DomainError("Boltzmann reflectivity needs xi > 0");
  const S kappa = kappa_of(xi, y);
  if (kappa == zero) throw DomainError("Boltzmann reflectivity needs y != xi");
  const S zeta = xi * core.omega_a;
  const S q = kappa / core.two_a;
  const S x = xi / kappa;
  auto eps = [&](S k) { return dielectric_nonlocal_at(core.omega_p, core.v_F, core.omega_tau, zeta, k); };
  const bool is_s = pol == Polarization::s;
  const auto ints = detail::exact_integrals<S>(eps, x, q, is_s, !is_s, core.spec);
  if (is_s) {
    const S y_over_kappa = y / kappa;
    return {y_over_kappa * ints.I_s, one_minus_y_over_kappa(xi, y, kappa) + y_over_kappa * ints.D_s};
  }
  return from_w(S(ints.z_p * xi / y));
}

void require_spectral_point(double xi, double y) {
  if (!(xi >= 0.0) || !(y >= xi)) throw DomainError("reflectivity: requires y >= xi >= 0");
}

}  // namespace

const char* to_string(Polarization pol) { return pol == Polarization::s ? "s" : "p"; }

WaveImpedances wave_impedances(double xi, double y) {
  if (!(xi >= 0.0)) throw DomainError("wave_impedances: xi must be >= 0");
  if (!(y >= xi)) throw DomainError("wave_impedances: y must be >= xi");
  if (y == 0.0) throw DomainError("wave_impedances: xi and y are both zero");
  const double z_p0 = xi > 0.0 ? y / xi : std::numeric_limits<double>::infinity();
  return {xi / y, z_p0};
}

double reflection_from_impedance(double z0, double z, Polarization pol) {
  if (!(z0 >= 0.0) || !(z >= 0.0)) throw DomainError("reflection_from_impedance: impedances must be >= 0");
  if (z0 + z == 0.0) throw DomainError("reflection_from_impedance: z0 + z = 0");
  double r;
  if (std::isinf(z0)) {
    r = std::isinf(z) ? 0.0 : 1.0;
  } else {
    r = (z0 - z) / (z0 + z);
  }
  return pol == Polarization::s ? -r : r;
}

double r_s_anomalous_dimensionless(double x) {
  if (!(x > 0.0)) throw DomainError("r_s_anomalous_dimensionless: x must be > 0");
  const auto fg = special_values(1.0 / x);
  return -fg.one_minus_F / (1.0 + fg.F);
}

double r_p_low_frequency(const MetalModel& model, double a, double y) {
  if (!(y > 0.0)) throw DomainError("r_p_low_frequency: y must be > 0");
  const double correction = 2.0 * thomas_fermi_parameter(model, a) * y;
  if (!(correction < 1.0)) throw DomainError("r_p_low_frequency: correction >= 1, linearization invalid");
  return 1.0 - correction;
}

double r_p_low_frequency_rational(const MetalModel& model, double a, double y) {
  if (!(y > 0.0)) throw DomainError("r_p_low_frequency_rational: y must be > 0");
  const double u = thomas_fermi_parameter(model, a) * y;
  return (1.0 - u) / (1.0 + u);
}

Reflectivity::Reflectivity(std::string name, RealFn real, ComplexFn complex)
    : name_(std::move(name)), real_(std::move(real)), complex_(std::move(complex)) {
  if (!real_) throw DomainError("Reflectivity: a real-argument supplier is required");
}

ImpedanceRatio<double> Reflectivity::ratio(Polarization pol, double xi, double y) const {
  require_spectral_point(xi, y);
  return real_(pol, xi, y);
}

ImpedanceRatio<cdouble> Reflectivity::ratio(Polarization pol, cdouble xi, cdouble y) const {
  if (!complex_) throw DomainError("Reflectivity '" + name_ + "' has no complex continuation");
  return complex_(pol, xi, y);
}

ReflectionSquared<double> Reflectivity::squared(Polarization pol, double xi, double y) const {
  return squared_from_ratio(ratio(pol, xi, y));
}

ReflectionSquared<cdouble> Reflectivity::squared(Polarization pol, cdouble xi, cdouble y) const {
  return squared_from_ratio(ratio(pol, xi, y));
}

double Reflectivity::coefficient(Polarization pol, double xi, double y) const {
  const auto r = ratio(pol, xi, y);
  const double value = r.one_minus_w / (1.0 + r.w);
  return pol == Polarization::s ? -value : value;
}

ReflectionPair Reflectivity::pair(double xi, double y) const {
  return {coefficient(Polarization::s, xi, y), coefficient(Polarization::p, xi, y), xi, y};
}

Reflectivity Reflectivity::perfect() {
  return Reflectivity(
      "perfect", [](Polarization, double, double) { return ImpedanceRatio<double>{0.0, 1.0}; },
      [](Polarization, cdouble, cdouble) { return ImpedanceRatio<cdouble>{0.0, 1.0}; });
}

Reflectivity Reflectivity::none() {
  return Reflectivity(
      "none", [](Polarization, double, double) { return ImpedanceRatio<double>{1.0, 0.0}; },
      [](Polarization, cdouble, cdouble) { return ImpedanceRatio<cdouble>{1.0, 0.0}; });
}

Reflectivity Reflectivity::constant_squared(double r2_s, double r2_p) {
  for (double r2 : {r2_s, r2_p}) {
    if (!(r2 >= 0.0 && r2 <= 1.0)) throw DomainError("constant_squared: r^2 must lie in [0, 1]");
  }
  const auto s = ratio_from_r(std::sqrt(r2_s));
  const auto p = ratio_from_r(std::sqrt(r2_p));
  return Reflectivity(
      "constant",
      [s, p](Polarization pol, double, double) { return pol == Polarization::s ? s : p; },
      [s, p](Polarization pol, cdouble, cdouble) {
        const auto& r = pol == Polarization::s ? s : p;
        return ImpedanceRatio<cdouble>{r.w, r.one_minus_w};
      });
}

Reflectivity Reflectivity::for_model(const MetalModel& model, double a, double T, const QuadratureSpec& spec) {
  model.validate();
  spec.validate();
  const double wa = omega_a(a);
  switch (model.response) {
    case ResponseKind::AnomalousLimit: {
      const AnomalousCore core{anomalous_scale(model, a), thomas_fermi_parameter(model, a)};
      return Reflectivity(
          "anomalous",
          [core](Polarization pol, double xi, double y) { return anomalous_ratio(core, pol, xi, y); },
          [core](Polarization pol, cdouble xi, cdouble y) { return anomalous_ratio(core, pol, xi, y); });
    }
    case ResponseKind::LocalDrude:
    case ResponseKind::LocalPlasma: {
      const double relax = model.response == ResponseKind::LocalDrude ? relaxation_frequency(model, T) / wa : 0.0;
      const double ratio = model.omega_p / wa;
      const LocalCore core{ratio * ratio, relax};
      return Reflectivity(
          model.response == ResponseKind::LocalDrude ? "drude" : "plasma",
          [core](Polarization pol, double xi, double y) { return local_ratio(core, pol, xi, y); },
          [core](Polarization pol, cdouble xi, cdouble y) { return local_ratio(core, pol, xi, y); });
    }
    case ResponseKind::NonlocalBoltzmann: {
      const NonlocalCore core{model.omega_p, model.v_F, relaxation_frequency(model, T), wa, 2.0 * a, spec};
      return Reflectivity(
          "boltzmann",
          [core](Polarization pol, double xi, double y) { return nonlocal_ratio(core, pol, xi, y); },
          [core](Polarization pol, cdouble xi, cdouble y) { return nonlocal_ratio(core, pol, xi, y); });
    }
  }
  throw DomainError("for_model: unknown response kind");
}

Reflectivity Reflectivity::combine(const Reflectivity& s_source, const Reflectivity& p_source) {
  const Reflectivity s = s_source;
  const Reflectivity p = p_source;
  ComplexFn complex;
  if (s.supports_complex() && p.supports_complex()) {
    complex = [s, p](Polarization pol, cdouble xi, cdouble y) {
      return pol == Polarization::s ? s.ratio(pol, xi, y) : p.ratio(pol, xi, y);
    };
  }
  return Reflectivity(
      s.name() + "/" + p.name(),
      [s, p](Polarization pol, double xi, double y) {
        return pol == Polarization::s ? s.ratio(pol, xi, y) : p.ratio(pol, xi, y);
      },
      complex);
}

Reflectivity Reflectivity::from_coefficient(std::string name, std::function<double(Polarization, double, double)> r) {
  if (!r) throw DomainError("from_coefficient: empty supplier");
  return Reflectivity(std::move(name), [r](Polarization pol, double xi, double y) {
    const double value = r(pol, xi, y);
    if (!(std::abs(value) <= 1.0)) throw DomainError("from_coefficient: |r| exceeds 1");
    return ratio_from_r(pol == Polarization::s ? -value : value);
  });
}

}  // namespace casimir
