#include <doctest.h>

#include "casimir/material.hpp"

using namespace casimir;

TEST_CASE("relaxation laws") {
  CHECK(relaxation_frequency(ConstantRelaxation{3.0}, 1.0) == 3.0);
  const PowerLawRelaxation p{5.32e13, 300.0, 5.0};
  CHECK(relaxation_frequency(p, 300.0) == doctest::Approx(5.32e13));
  CHECK(relaxation_frequency(p, 150.0) == doctest::Approx(5.32e13 / 32.0));
  const ResidualPowerLawRelaxation r{1e9, 5.32e13, 300.0, 5.0};
  CHECK(relaxation_frequency(r, 0.0) == doctest::Approx(1e9));
  CHECK(relaxation_frequency(r, 300.0) == doctest::Approx(5.32e13 + 1e9));
}

TEST_CASE("model validation") {
  MetalModel m = gold_like();
  CHECK_NOTHROW(m.validate());
  m.omega_p = -1.0;
  CHECK_THROWS_AS(m.validate(), DomainError);
  m = gold_like();
  m.v_F = 0.0;
  CHECK_THROWS_AS(m.validate(), DomainError);
}

TEST_CASE("nonlocal functions are continuous at the series switch") {
  for (double rel : {0.0, 0.3, 2.0}) {
    const double below = nonlocal_f_l(0.1 * (1 - 1e-12), rel);
    const double above = nonlocal_f_l(0.1 * (1 + 1e-12), rel);
    CHECK(below == doctest::Approx(above).epsilon(1e-9));
  }
  CHECK(nonlocal_f_t(0.1 * (1 - 1e-12)) == doctest::Approx(nonlocal_f_t(0.1 * (1 + 1e-12))).epsilon(1e-10));
  CHECK(nonlocal_f_t(1e-8) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nonlocal permittivity reduces to Drude at small k") {
  const MetalModel m = gold_like(ResponseKind::NonlocalBoltzmann);
  const double T = 300.0;
  const double zeta = 1e14;
  const auto e = dielectric_nonlocal(m, zeta, 1.0, T);
  MetalModel drude = m;
  drude.response = ResponseKind::LocalDrude;
  const double local = dielectric_local(drude, zeta, T);
  CHECK(e.eps_t == doctest::Approx(local).epsilon(1e-9));
  CHECK(e.eps_l == doctest::Approx(local).epsilon(1e-9));
}

TEST_CASE("nonlocal permittivity approaches the anomalous limit at large v") {
  const MetalModel m = gold_like(ResponseKind::NonlocalBoltzmann);
  const double zeta = 1e10;
  const double k = 1e9;  // v ~ 1e5
  const auto nl = dielectric_nonlocal(m, zeta, k, 0.0);
  const auto an = dielectric_anomalous(m, zeta, k);
  CHECK((nl.eps_t - 1.0) == doctest::Approx(an.eps_t - 1.0).epsilon(1e-4));
}

TEST_CASE("local permittivities") {
  MetalModel m = gold_like(ResponseKind::LocalPlasma);
  const double zeta = 1e15;
  CHECK(dielectric_local(m, zeta, 10.0) == doctest::Approx(1.0 + m.omega_p * m.omega_p / (zeta * zeta)));
  m.response = ResponseKind::AnomalousLimit;
  CHECK_THROWS_AS(dielectric_local(m, zeta, 10.0), DomainError);
}
