#include <doctest.h>

#include "casimir/impedance.hpp"

using namespace casimir;

TEST_CASE("F and G at the origin") {
  CHECK(special_F(0.0) == 1.0);
  CHECK(special_G(0.0) == 0.5);
}

TEST_CASE("closed forms agree with direct quadrature") {
  QuadratureSpec tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-15;
  for (double b : {0.01, 0.2, 0.299, 0.301, 0.7, 1.0, 3.0, 20.0, 300.0}) {
    CAPTURE(b);
    CHECK(special_F(b) == doctest::Approx(special_F_quadrature(b, tight)).epsilon(1e-10));
    CHECK(special_G(b) == doctest::Approx(special_G_quadrature(b, tight)).epsilon(1e-10));
  }
}

TEST_CASE("complex closed forms agree with quadrature") {
  QuadratureSpec tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-15;
  for (cdouble b : {cdouble(0.2, 0.1), cdouble(1.0, 0.5), cdouble(4.0, -2.0), cdouble(0.5, 1.5)}) {
    CAPTURE(b);
    CHECK(std::abs(special_F(b) - special_F_quadrature(b, tight)) < 1e-10 * std::abs(special_F(b)));
    CHECK(std::abs(special_G(b) - special_G_quadrature(b, tight)) < 1e-10 * std::abs(special_G(b)));
  }
}

TEST_CASE("1 - F is accurate where F is close to 1") {
  for (double b : {1e-4, 1e-3, 0.05, 0.29}) {
    const auto v = special_values(b);
    CAPTURE(b);
    CHECK(v.one_minus_F == doctest::Approx(1.0 - special_F_quadrature(b, QuadratureSpec{}.tightened(1000))).epsilon(1e-7));
  }
}

TEST_CASE("large-b asymptotics") {
  for (double b : {1e3, 1e4}) {
    CHECK(b * special_F(b) == doctest::Approx(kLeontovichCoefficient).epsilon(2.0 / b));
    CHECK(b * special_G(b) == doctest::Approx(kLeontovichCoefficient).epsilon(2.0 / b));
  }
}

TEST_CASE("F and G decrease with b") {
  double F = 2.0;
  double G = 2.0;
  for (double b = 0.01; b < 100.0; b *= 1.3) {
    CHECK(special_F(b) < F);
    CHECK(special_G(b) < G);
    F = special_F(b);
    G = special_G(b);
  }
}

// The closed form drops the vacuum 1 in eps, worth a few 1e-7 here.
TEST_CASE("exact impedance matches the anomalous closed form") {
  const MetalModel m = gold_like();
  for (double zeta : {1e6, 1e10, 1e13}) {
    for (double q : {1e5, 1e7}) {
      const auto exact = impedance_exact(m, zeta, q, 0.0, QuadratureSpec{}.tightened(100));
      const auto closed = impedance_anomalous(m, zeta, q);
      CAPTURE(zeta);
      CAPTURE(q);
      CHECK(exact.z_s == doctest::Approx(closed.z_s).epsilon(1e-6));
      CHECK(exact.z_p == doctest::Approx(closed.z_p).epsilon(1e-6));
    }
  }
}

TEST_CASE("anomalous z_s tends to the Leontovich value as q -> 0") {
  const MetalModel m = gold_like();
  const double zeta = 1e12;
  CHECK(impedance_anomalous(m, zeta, 1.0).z_s == doctest::Approx(impedance_leontovich(m, zeta)).epsilon(1e-4));
}

TEST_CASE("local impedance closed form") {
  const double eps = 1e4;
  const double zeta = 1e14;
  const double q = 1e6;
  const auto z = impedance_local(eps, zeta, q);
  CHECK(z.z_s * z.z_p == doctest::Approx(1.0 / eps));
}

TEST_CASE("A scales as T^(1/3) and a^(2/3) at fixed tau") {
  const MetalModel m = gold_like();
  const double a = 1e-6;
  CHECK(parameter_A(m, a, 8.0) == doctest::Approx(2.0 * parameter_A(m, a, 1.0)));
  const double tau = dimensionless_tau(a, 1.0);
  const double T8 = tau / dimensionless_tau(8.0 * a, 1.0);
  CHECK(parameter_A(m, 8.0 * a, T8) == doctest::Approx(4.0 * parameter_A(m, a, 1.0)));
}

TEST_CASE("regime report") {
  const MetalModel m = gold_like();
  const auto cold = regime_report(m, 1e-6, 1e-3);
  const auto warm = regime_report(m, 1e-6, 10.0);
  CHECK(cold.A < warm.A);
  CHECK(cold.tau < warm.tau);
  CHECK(cold.A == doctest::Approx(parameter_A(m, 1e-6, 1e-3)));
}
