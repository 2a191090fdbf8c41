#pragma once

// Adaptive Gauss-Kronrod integration over finite and semi-infinite real
// intervals, for real- or complex-valued integrands.
//
// The integrator is globally adaptive: the subinterval with the largest
// error estimate is bisected until the summed estimate meets
// max(abs_tol, rel_tol * |value|). Each subinterval is evaluated with the
// 15-point Kronrod rule and its embedded 7-point Gauss rule; the error model
// is the usual QUADPACK one (|K15 - G7| rescaled by the integrand variation,
// floored at 50 eps times the absolute integral).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  /// When false, an exhausted subdivision budget returns a result with
  /// converged == false instead of throwing NonConvergence.
  bool throw_on_failure = true;

  void validate() const;
  QuadratureSpec tightened(double factor) const;
};

template <class V>
struct IntegralResult {
  V value{};
  double error_estimate = 0.0;
  bool converged = true;
  int evaluations = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for Kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
bool is_finite_value(const V& v) {
  if constexpr (std::is_floating_point_v<V>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

template <class V>
struct Segment {
  double a;
  double b;
  V value;
  double error;
  friend bool operator<(const Segment& l, const Segment& r) { return l.error < r.error; }
};

template <class V, class F>
Segment<V> gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const V fc = f(centre);
  V kronrod = fc * kKronrodWeights[7];
  V gauss = fc * kGaussWeights[3];
  double abs_integral = std::abs(fc) * kKronrodWeights[7];
  std::array<V, 7> lo{};
  std::array<V, 7> hi{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    lo[j] = f(centre - dx);
    hi[j] = f(centre + dx);
    const V pair = lo[j] + hi[j];
    kronrod += pair * kKronrodWeights[j];
    abs_integral += (std::abs(lo[j]) + std::abs(hi[j])) * kKronrodWeights[j];
    if (j % 2 == 1) gauss += pair * kGaussWeights[j / 2];
  }
  const V mean = kronrod * 0.5;
  double variation = std::abs(fc - mean) * kKronrodWeights[7];
  for (std::size_t j = 0; j < 7; ++j) {
    variation += (std::abs(lo[j] - mean) + std::abs(hi[j] - mean)) * kKronrodWeights[j];
  }
  const double scale = std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  variation *= scale;
  abs_integral *= scale;
  if (variation != 0.0 && err != 0.0) {
    err = variation * std::min(1.0, std::pow(200.0 * err / variation, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * abs_integral);
  return {a, b, kronrod * half, err};
}

template <class V, class F>
IntegralResult<V> adaptive(F& f, double a, double b, const QuadratureSpec& spec) {
  auto checked = [&f](double x) -> V {
    const V v = f(x);
    if (!is_finite_value(v)) {
      throw NonConvergence("integrand returned a non-finite value at x = " + std::to_string(x));
    }
    return v;
  };
  IntegralResult<V> out;
  if (a == b) return out;

  std::priority_queue<Segment<V>> heap;
  heap.push(gauss_kronrod_15<V>(checked, a, b));
  V total = heap.top().value;
  double total_err = heap.top().error;
  int evaluations = 15;
  int segments = 1;
  bool stalled = false;

  auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
  while (total_err > target() && segments < spec.max_subdivisions) {
    Segment<V> worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b)) ||
        std::abs(worst.b - worst.a) <= 1e3 * std::numeric_limits<double>::epsilon() *
                                           std::max(std::abs(worst.a), std::abs(worst.b))) {
      stalled = true;
      break;
    }
    heap.pop();
    Segment<V> left = gauss_kronrod_15<V>(checked, worst.a, mid);
    Segment<V> right = gauss_kronrod_15<V>(checked, mid, worst.b);
    evaluations += 30;
    ++segments;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the segment list to shed accumulated update round-off.
  V sum{};
  double err_sum = 0.0;
  std::vector<Segment<V>> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Segment<V>& l, const Segment<V>& r) { return l.a < r.a; });
  for (const auto& s : all) {
    sum += s.value;
    err_sum += s.error;
  }
  out.value = sum;
  out.error_estimate = err_sum;
  out.evaluations = evaluations;
  out.converged = err_sum <= std::max(spec.abs_tol, spec.rel_tol * std::abs(sum));
  if (!out.converged && spec.throw_on_failure) {
    double shown = 0.0;
    if constexpr (std::is_floating_point_v<V>) {
      shown = sum;
    } else {
      shown = sum.real();
    }
    throw NonConvergence(std::string(stalled ? "integration stalled at machine resolution"
                                             : "subdivision budget exhausted") +
                             " (error estimate " + std::to_string(err_sum) + ")",
                         shown, err_sum);
  }
  return out;
}

template <class F>
using integrand_value_t = std::decay_t<std::invoke_result_t<F&, double>>;

}  // namespace detail

/// Integral of f over [a, b]. The interval is mapped through the cubic
/// t = a + (b - a)(3u^2 - 2u^3), whose vanishing Jacobian at both ends turns
/// integrable endpoint singularities of power type (t^-1/3 and milder) into
/// bounded integrands.
template <class F>
auto integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec = {})
    -> IntegralResult<detail::integrand_value_t<F>> {
  using V = detail::integrand_value_t<F>;
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate_finite: non-finite limit");
  if (a > b) throw DomainError("integrate_finite: lower limit exceeds upper limit");
  if (a == b) return {};
  const double width = b - a;
  auto mapped = [&](double u) -> V {
    const double w = 1.0 - u;
    const double x = (u < 0.5) ? a + width * u * u * (3.0 - 2.0 * u) : b - width * w * w * (3.0 - 2.0 * w);
    return f(x) * (6.0 * width * u * w);
  };
  return detail::adaptive<V>(mapped, 0.0, 1.0, spec);
}

/// Integral of f over [a, inf) via y = a + scale * t / (1 - t), t in [0, 1).
/// The whole tail is inside the mapped interval, so there is no truncation
/// term outside the error estimate. `scale` should be of the order of the
/// integrand's decay length.
template <class F>
auto integrate_semi_infinite(F&& f, double a, const QuadratureSpec& spec = {}, double scale = 1.0)
    -> IntegralResult<detail::integrand_value_t<F>> {
  using V = detail::integrand_value_t<F>;
  spec.validate();
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: lower limit is not finite");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("integrate_semi_infinite: scale must be positive");
  auto mapped = [&](double t) -> V {
    const double w = 1.0 - t;
    const double y = a + scale * t / w;
    if (!std::isfinite(y)) return V{};
    return f(y) * (scale / (w * w));
  };
  return detail::adaptive<V>(mapped, 0.0, 1.0, spec);
}

/// Apery's constant zeta(3), from a direct sum with an Euler-Maclaurin tail.
double zeta3();

}  // namespace casimir
