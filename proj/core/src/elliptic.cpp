#include "ellipsoid/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellipsoid/errors.hpp"

namespace ellipsoid {

namespace {

constexpr int kMaxDuplications = 100;

void check_carlson_tol(double rel_tol) {
  if (!(rel_tol > 0.0) || rel_tol >= 1.0)
    throw DomainError("carlson: rel_tol must lie in (0, 1)");
}

void check_amplitude(double phi, double m) {
  if (!std::isfinite(phi) || phi < 0.0 || phi > std::numbers::pi / 2)
    throw DomainError("elliptic: amplitude must lie in [0, pi/2]");
  if (!std::isfinite(m) || m < 0.0 || m > 1.0)
    throw DomainError("elliptic: parameter m must lie in [0, 1]");
}

} // namespace

// Carlson duplication.  The iteration quarters the spread of the arguments;
// once max|A0 - arg| / (4^n |A_n|) is small enough, a fifth-order Taylor
// expansion about the equal-argument point finishes the job with relative
// error below rel_tol.
double carlson_rf(double x, double y, double z, double rel_tol) {
  check_carlson_tol(rel_tol);
  if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z)))
    throw DomainError("carlson_rf: arguments must be finite");
  if (x < 0.0 || y < 0.0 || z < 0.0)
    throw DomainError("carlson_rf: arguments must be non-negative");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1)
    throw DomainError("carlson_rf: at most one argument may be zero");

  const double a0 = (x + y + z) / 3.0;
  const double q =
      std::pow(3.0 * rel_tol, -1.0 / 6.0) *
      std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z)});

  double a = a0;
  double fac = 1.0;
  int n = 0;
  while (fac * q > std::fabs(a)) {
    if (++n > kMaxDuplications)
      throw ConvergenceError("carlson_rf: duplication did not converge");
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sy * sz + sz * sx;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    fac *= 0.25;
  }

  // Taylor variables relative to the converged mean.
  const double xr = (a - x) / a;
  const double yr = (a - y) / a;
  const double zr = -(xr + yr);
  const double e2 = xr * yr - zr * zr;
  const double e3 = xr * yr * zr;
  return (1.0 + e2 * (-0.1 + e2 / 24.0 - 3.0 * e3 / 44.0) + e3 / 14.0) /
         std::sqrt(a);
}

double carlson_rd(double x, double y, double z, double rel_tol) {
  check_carlson_tol(rel_tol);
  if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z)))
    throw DomainError("carlson_rd: arguments must be finite");
  if (x < 0.0 || y < 0.0)
    throw DomainError("carlson_rd: x and y must be non-negative");
  if (x == 0.0 && y == 0.0)
    throw DomainError("carlson_rd: at most one of x, y may be zero");
  if (!(z > 0.0))
    throw DomainError("carlson_rd: z must be positive");

  const double a0 = (x + y + 3.0 * z) / 5.0;
  const double q =
      std::pow(0.25 * rel_tol, -1.0 / 6.0) *
      std::max({std::fabs(a0 - x), std::fabs(a0 - y), std::fabs(a0 - z)});

  double a = a0;
  double fac = 1.0;
  double tail = 0.0;
  int n = 0;
  while (fac * q > std::fabs(a)) {
    if (++n > kMaxDuplications)
      throw ConvergenceError("carlson_rd: duplication did not converge");
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sy * sz + sz * sx;
    tail += fac / (sz * (z + lambda));
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    a = 0.25 * (a + lambda);
    fac *= 0.25;
  }

  const double xr = (a - x) / a;
  const double yr = (a - y) / a;
  const double zr = -(xr + yr) / 3.0;
  const double e2 = xr * yr - 6.0 * zr * zr;
  const double e3 = (3.0 * xr * yr - 8.0 * zr * zr) * zr;
  const double e4 = 3.0 * (xr * yr - zr * zr) * zr * zr;
  const double e5 = xr * yr * zr * zr * zr;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 +
                        9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 -
                        9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return fac * series / (a * std::sqrt(a)) + 3.0 * tail;
}

double ellint_f(double phi, double m) {
  check_amplitude(phi, m);
  if (m == 1.0) {
    if (phi == std::numbers::pi / 2)
      throw DivergenceError("ellint_f: F(pi/2, 1) diverges");
    // Closed form avoids the Carlson logarithmic-singularity limit.
    return std::atanh(std::sin(phi));
  }
  const double s = std::sin(phi);
  if (s == 0.0) return 0.0;
  const double c = std::cos(phi);
  return s * carlson_rf(c * c, 1.0 - m * s * s, 1.0);
}

double ellint_e(double phi, double m) {
  check_amplitude(phi, m);
  if (m == 1.0) return std::sin(phi);
  const double s = std::sin(phi);
  if (s == 0.0) return 0.0;
  const double c = std::cos(phi);
  const double y = 1.0 - m * s * s;
  return s * (carlson_rf(c * c, y, 1.0) -
              m * s * s * carlson_rd(c * c, y, 1.0) / 3.0);
}

double ellint_k(double m) {
  if (!std::isfinite(m) || m < 0.0 || m > 1.0)
    throw DomainError("ellint_k: parameter m must lie in [0, 1]");
  if (m == 1.0) throw DivergenceError("ellint_k: K(1) diverges");
  return carlson_rf(0.0, 1.0 - m, 1.0);
}

double ellint_l(double m) {
  if (!std::isfinite(m) || m < 0.0 || m > 1.0)
    throw DomainError("ellint_l: parameter m must lie in [0, 1]");
  if (m == 1.0) return 1.0;
  if (m == 0.0) return std::numbers::pi / 2;
  return carlson_rf(0.0, 1.0 - m, 1.0) -
         m * carlson_rd(0.0, 1.0 - m, 1.0) / 3.0;
}

} // namespace ellipsoid
