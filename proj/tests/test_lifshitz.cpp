#include <doctest.h>

#include "casimir/lifshitz.hpp"
#include "casimir/physical_constants.hpp"

using namespace casimir;

namespace {

constexpr double kPi = 3.14159265358979323846;

double polylog(int n, double z) {
  double sum = 0.0;
  double zk = z;
  for (int k = 1; k < 1000000 && zk > 1e-18; ++k) {
    sum += zk / std::pow(double(k), n);
    zk *= z;
  }
  return sum;
}

// Low-temperature free energy of ideal plates in units of kT / 8 pi a^2.
double ideal_bracket(double tau) { return -zeta3() * tau * tau / (4.0 * kPi * kPi) + tau * tau * tau / 360.0; }

double T_for_tau(double a, double tau) { return tau / dimensionless_tau(a, 1.0); }

}  // namespace

TEST_CASE("Li3(1/e) series") { CHECK(polylog(3, std::exp(-1.0)) == doctest::Approx(0.387003).epsilon(1e-5)); }

TEST_CASE("G for constant reflectivity is a polylog combination") {
  for (double r2 : {1.0, 0.81, 0.3, std::exp(-1.0)}) {
    const auto refl = Reflectivity::constant_squared(r2, r2);
    for (double xi : {0.0, 0.5, 1.0, 4.0}) {
      const double z = r2 * std::exp(-xi);
      const double expected = -(xi * polylog(2, z) + polylog(3, z));
      CAPTURE(r2);
      CAPTURE(xi);
      CHECK(g_function(Polarization::s, xi, refl) == doctest::Approx(expected).epsilon(1e-9));
      CHECK(g_function(Polarization::p, xi, refl) == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("low-frequency r_p reproduces the low-temperature G_p") {
  const MetalModel m = gold_like();
  const double a = 200e-9;
  const double y_max = 0.5 / thomas_fermi_parameter(m, a);
  const auto refl = Reflectivity::from_coefficient("low-frequency p", [&](Polarization, double, double y) {
    return y < y_max ? r_p_low_frequency(m, a, y) : 0.0;  // e^-y is far below resolution there
  });
  for (double tau : {1e-6, 1e-4, 1e-3}) {
    CAPTURE(tau);
    CHECK(g_function(Polarization::p, tau, refl) == doctest::Approx(g_p_low_temperature(m, a)).epsilon(1e-4));
  }
}

TEST_CASE("perfect reflector G(0) = -zeta(3)") {
  CHECK(g_function(Polarization::s, 0.0, Reflectivity::perfect()) == doctest::Approx(-zeta3()).epsilon(1e-10));
}

// The anomalous r_s vanishes only at xi = 0 itself, so the model is probed from xi > 0.
TEST_CASE("G is non-positive and nondecreasing in xi") {
  const auto model = Reflectivity::for_model(gold_like(), 1e-6, 1.0);
  for (const auto& refl : {Reflectivity::constant_squared(0.5, 0.9), model}) {
    for (auto pol : {Polarization::s, Polarization::p}) {
      double prev = -INFINITY;
      for (double xi = 0.05; xi < 20.0; xi += 0.7) {
        const double g = g_function(pol, xi, refl);
        CHECK(g <= 0.0);
        CHECK(g >= prev);
        prev = g;
      }
    }
  }
}

TEST_CASE("complex G on the real axis equals real G") {
  const auto refl = Reflectivity::for_model(gold_like(), 1e-6, 1.0);
  for (double xi : {1e-3, 0.2, 2.0}) {
    const cdouble g = g_function(Polarization::s, cdouble(xi, 0.0), refl);
    CHECK(g.real() == doctest::Approx(g_function(Polarization::s, xi, refl)).epsilon(1e-8));
    CHECK(std::abs(g.imag()) < 1e-12);
  }
  CHECK_THROWS_AS(g_function(Polarization::s, -1.0, refl), DomainError);
}

TEST_CASE("ideal-metal Delta F from both engines") {
  const double a = 1e-6;
  const auto perfect = Reflectivity::perfect();
  for (double tau : {1e-2, 0.1}) {
    const double T = T_for_tau(a, tau);
    const auto ap = delta_f_abel_plana(perfect, a, T, 1.0);
    const auto d = delta_f_direct(perfect, a, T, 1.0);
    CAPTURE(tau);
    CHECK(ap.bracket() == doctest::Approx(ideal_bracket(tau)).epsilon(1e-6));
    CHECK(std::abs(d.delta_F - ap.delta_F) <= d.error_estimate + ap.error_estimate);
  }
}

TEST_CASE("total free energy of ideal plates") {
  const double a = 1e-6;
  const double tau = 0.1;
  const double T = T_for_tau(a, tau);
  const auto total = free_energy_total(Reflectivity::perfect(), a, T, 1.0);
  const double e0 = -kPi * kPi * si::hbar * si::c / (720.0 * a * a * a);
  const double expected = e0 + free_energy_prefactor(a, T) * ideal_bracket(tau);
  CHECK(total.value == doctest::Approx(expected).epsilon(1e-7));
  CHECK_FALSE(total.truncation_warning);
}

TEST_CASE("dual path for the anomalous model") {
  const MetalModel m = gold_like();
  const double a = 1e-6;
  const double T = T_for_tau(a, 0.1);
  const auto alpha = AlphaParameterization::computed(0.0);
  const auto ap = delta_f_abel_plana(m, a, T, alpha);
  const auto d = delta_f_direct(m, a, T, alpha);
  CHECK(std::abs(d.delta_F - ap.delta_F) <= d.error_estimate + ap.error_estimate);
}

TEST_CASE("Delta F is linear in alpha_s") {
  const MetalModel m = gold_like();
  const double a = 1e-6;
  const double T = T_for_tau(a, 0.01);
  const double f0 = delta_f_abel_plana(m, a, T, AlphaParameterization::computed(0.0)).delta_F;
  const double f5 = delta_f_abel_plana(m, a, T, AlphaParameterization::computed(0.5)).delta_F;
  CHECK((f5 - f0) == doctest::Approx(-0.5 * zeta3() * free_energy_prefactor(a, T)).epsilon(1e-9));
}

TEST_CASE("alpha_p consistency") {
  const MetalModel m = gold_like();
  const double a = 200e-9;
  CHECK(alpha_p_computed(m, a) == doctest::Approx(-g_p_low_temperature(m, a) / (2.0 * zeta3())).epsilon(1e-14));
  CHECK(alpha_p_computed(m, a) == doctest::Approx(0.5 * (1.0 - 1.18e-3)).epsilon(1e-5));
  MetalModel slow = m;
  slow.v_F = 1e-6;
  CHECK(alpha_p_computed(slow, a) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(alpha_total(AlphaParameterization::fixed(0.25, 0.5), m, a) == 0.75);
  CHECK_THROWS_AS(AlphaParameterization::computed(0.6).validate(), DomainError);
}

TEST_CASE("bracket is invariant under (a, T, omega_p) -> (l a, T / l, omega_p / l)") {
  MetalModel m = gold_like();
  const double a = 1e-6;
  const double T = T_for_tau(a, 0.01);
  const auto alpha = AlphaParameterization::computed(0.0);
  const double base = delta_f_abel_plana(m, a, T, alpha).bracket();
  const double l = 3.0;
  m.omega_p /= l;
  const double scaled = delta_f_abel_plana(m, l * a, T / l, alpha).bracket();
  CHECK(scaled == doctest::Approx(base).epsilon(1e-7));
}

TEST_CASE("engine regimes") {
  const double a = 1e-6;
  const auto perfect = Reflectivity::perfect();
  CHECK_THROWS_AS(delta_f_abel_plana(perfect, a, T_for_tau(a, 0.5), 1.0), RegimeError);
  CHECK_THROWS_AS(delta_f_direct(perfect, a, T_for_tau(a, 1e-6), 1.0), RegimeError);
  const auto v = delta_f(gold_like(), a, T_for_tau(a, 0.5), AlphaParameterization::computed(0.0), DeltaFEngine::Auto);
  CHECK(v.engine == DeltaFEngine::Direct);
}

TEST_CASE("finite-difference entropy") {
  const MetalModel m = gold_like();
  const double a = 1e-6;
  const double T = T_for_tau(a, 0.05);
  const auto s = entropy(m, a, T, AlphaParameterization::computed(0.0), EntropyMethod::FiniteDifference);
  CHECK(s.S == doctest::Approx(s.S_fine).epsilon(0.01));
  CHECK(s.step == doctest::Approx(0.02 * T));
  FiniteDifferenceOptions huge;
  huge.rel_step = 2.0;
  CHECK_THROWS_AS(entropy(m, a, T, AlphaParameterization::computed(0.0), EntropyMethod::FiniteDifference, {}, huge),
                  StepTooLarge);
}
