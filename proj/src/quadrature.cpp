#include "casimir/quadrature.hpp"

namespace casimir {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("QuadratureSpec: abs_tol must be >= 0");
  if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
  QuadratureSpec s = *this;
  s.rel_tol = std::max(rel_tol / factor, 1e-15);
  s.abs_tol = abs_tol / factor;
  return s;
}

double zeta3() {
  constexpr int n_terms = 100;
  double sum = 0.0;
  for (int n = n_terms; n >= 1; --n) {
    const double x = n;
    sum += 1.0 / (x * x * x);
  }
  // Euler-Maclaurin remainder for sum_{n > N} n^-3.
  const double N = n_terms;
  const double N2 = N * N;
  const double tail = 1.0 / (2.0 * N2) - 1.0 / (2.0 * N2 * N) + 1.0 / (4.0 * N2 * N2) -
                      1.0 / (12.0 * N2 * N2 * N2) + 1.0 / (12.0 * N2 * N2 * N2 * N2);
  return sum + tail;
}

}  // namespace casimir
