#include <doctest.h>

#include "casimir/reflection.hpp"

using namespace casimir;

TEST_CASE("perfect and transparent plates") {
  const auto p = Reflectivity::perfect();
  const auto n = Reflectivity::none();
  for (auto pol : {Polarization::s, Polarization::p}) {
    CHECK(p.squared(pol, 0.3, 1.0).r2 == doctest::Approx(1.0));
    CHECK(p.squared(pol, 0.3, 1.0).one_minus_r2 == doctest::Approx(0.0));
    CHECK(n.squared(pol, 0.3, 1.0).r2 == doctest::Approx(0.0));
  }
  CHECK(p.pair(0.3, 1.0).r_s == doctest::Approx(-1.0));
  CHECK(p.pair(0.3, 1.0).r_p == doctest::Approx(1.0));
}

TEST_CASE("reflection from impedance") {
  CHECK(reflection_from_impedance(1.0, 0.0, Polarization::p) == 1.0);
  CHECK(reflection_from_impedance(1.0, 0.0, Polarization::s) == -1.0);
  CHECK(reflection_from_impedance(1.0, 1.0, Polarization::p) == 0.0);
  const auto z = wave_impedances(0.5, 2.0);
  CHECK(z.z_s0 == doctest::Approx(0.25));
  CHECK(z.z_p0 == doctest::Approx(4.0));
}

TEST_CASE("anomalous dimensionless r_s") {
  CHECK(r_s_anomalous_dimensionless(1e-6) == doctest::Approx(-1.0).epsilon(1e-5));
  CHECK_THROWS_AS(r_s_anomalous_dimensionless(0.0), DomainError);
  double prev = -1.0;
  for (double x = 0.05; x < 50.0; x *= 1.5) {
    const double r = r_s_anomalous_dimensionless(x);
    CHECK(std::abs(r) <= 1.0);
    CHECK(r >= prev);
    prev = r;
  }
  CHECK(std::abs(r_s_anomalous_dimensionless(1e3)) < 1e-6);
}

TEST_CASE("low-frequency r_p") {
  const MetalModel m = gold_like();
  const double a = 200e-9;
  const double u = thomas_fermi_parameter(m, a);
  CHECK(u == doctest::Approx(1.47e-4).epsilon(0.01));
  CHECK(r_p_low_frequency(m, a, 1.0) == doctest::Approx(1.0 - 2.0 * u));
  CHECK(r_p_low_frequency_rational(m, a, 1.0) == doctest::Approx((1.0 - u) / (1.0 + u)));
  CHECK_THROWS_AS(r_p_low_frequency(m, a, 1.0 / u), DomainError);
}

TEST_CASE("squared_from_ratio keeps 1 - r^2 accurate") {
  const ImpedanceRatio<double> w{1e-12, 1.0 - 1e-12};
  const auto sq = squared_from_ratio(w);
  CHECK(sq.one_minus_r2 == doctest::Approx(4e-12).epsilon(1e-9));
  CHECK(sq.r2 + sq.one_minus_r2 == doctest::Approx(1.0));
}

TEST_CASE("anomalous model reflectivity against the impedance closed form") {
  const MetalModel m = gold_like();
  const double a = 1e-6;
  const auto refl = Reflectivity::for_model(m, a, 1.0);
  const double wa = omega_a(a);
  for (double xi : {1e-4, 1e-2, 0.5}) {
    for (double y : {1.0, 3.0}) {
      if (y <= xi) continue;
      const double zeta = xi * wa;
      const double q = std::sqrt(y * y - xi * xi) / (2.0 * a);
      const auto z = impedance_anomalous(m, zeta, q);
      const auto z0 = wave_impedances(xi, y);
      CAPTURE(xi);
      CAPTURE(y);
      CHECK(refl.coefficient(Polarization::s, xi, y) ==
            doctest::Approx(reflection_from_impedance(z0.z_s0, z.z_s, Polarization::s)).epsilon(1e-9));
      CHECK(refl.coefficient(Polarization::p, xi, y) ==
            doctest::Approx(reflection_from_impedance(z0.z_p0, z.z_p, Polarization::p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("plasma model reflectivity against Fresnel") {
  MetalModel m = gold_like(ResponseKind::LocalPlasma);
  const double a = 1e-6;
  const auto refl = Reflectivity::for_model(m, a, 1.0);
  const double xi = 0.3;
  const double y = 1.2;
  const double wa = omega_a(a);
  const double eps = dielectric_local(m, xi * wa, 1.0);
  const double k = std::sqrt(y * y + xi * xi * (eps - 1.0));
  CHECK(refl.coefficient(Polarization::p, xi, y) == doctest::Approx((eps * y - k) / (eps * y + k)).epsilon(1e-10));
  CHECK(refl.coefficient(Polarization::s, xi, y) == doctest::Approx((y - k) / (y + k)).epsilon(1e-10));
}

TEST_CASE("combine and constant reflectivities") {
  const auto mix = Reflectivity::combine(Reflectivity::perfect(), Reflectivity::none());
  CHECK(mix.squared(Polarization::s, 0.1, 1.0).r2 == doctest::Approx(1.0));
  CHECK(mix.squared(Polarization::p, 0.1, 1.0).r2 == doctest::Approx(0.0));
  const auto c = Reflectivity::constant_squared(0.25, 0.64);
  CHECK(c.squared(Polarization::s, 0.1, 1.0).r2 == doctest::Approx(0.25));
  CHECK(c.squared(Polarization::p, 0.1, 1.0).r2 == doctest::Approx(0.64));
}
