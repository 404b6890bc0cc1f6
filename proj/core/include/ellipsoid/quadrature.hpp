#ifndef ELLIPSOID_QUADRATURE_HPP
#define ELLIPSOID_QUADRATURE_HPP

#include <cstdint>
#include <functional>

#include "ellipsoid/ellipsoid.hpp"
#include "ellipsoid/errors.hpp"

namespace ellipsoid {

/// Tolerance contract for the adaptive integrators.  rel_tol is measured
/// against the coarse whole-region estimate, abs_tol is the floor, and
/// max_subdivisions caps the bisection depth.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 20;
};

struct OracleResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

/// Thrown when the requested tolerance was not reached at the subdivision
/// cap; carries the best estimate obtained.
class ToleranceNotMetError : public Error {
public:
  ToleranceNotMetError(const std::string& what, OracleResult best)
      : Error(what), best_estimate(best) {}
  OracleResult best_estimate;
};

struct Interval {
  double lo;
  double hi;
};

struct Rect {
  Interval u;
  Interval v;
};

/// Whether the surface oracles integrate one octant and multiply by eight
/// (the integrands are reflection symmetric) or sweep the full chart.
enum class AngularDomain { octant, full };

/// Adaptive Gauss-Legendre quadrature (nested 7/15-point rules, recursive
/// bisection).  Deterministic for fixed inputs.
OracleResult integrate_1d(const std::function<double(double)>& f,
                          Interval range, const QuadratureSpec& spec);

/// Adaptive tensor-product Gauss-Legendre over a rectangle (7x7 vs 15x15
/// panels, quadrant subdivision).  Deterministic for fixed inputs.
OracleResult integrate_2d(const std::function<double(double, double)>& f,
                          Rect region, const QuadratureSpec& spec);

/// Surface area from the eccentric-anomaly surface integral
///   S = integral sqrt(b^2 c^2 cos^2 th + c^2 a^2 sin^2 th cos^2 ph
///                    + a^2 b^2 sin^2 th sin^2 ph) sin th  d th d ph.
/// Degenerate shapes are allowed; the integrand stays finite.
OracleResult area_by_eq_s(const Ellipsoid& e, const QuadratureSpec& spec,
                          AngularDomain domain = AngularDomain::octant);

/// Surface area from the central-angle form (a fourth-power quadratic form
/// over the squared second-power one).  Requires a, b, c > 0.
OracleResult area_by_eq_ss(const Ellipsoid& e, const QuadratureSpec& spec,
                           AngularDomain domain = AngularDomain::octant);

/// Surface area from the single integral
///   S = 2 pi b c + 2 b c * int_{a^2/b^2}^{a^2/c^2}
///       eta atan(sqrt(eta-1)) / (sqrt(eta-1) sqrt(a^2/c^2-eta)
///       sqrt(eta-a^2/b^2)) d eta,
/// with the endpoint singularities removed by the substitution
/// eta = a^2/c^2 - (a^2/c^2 - a^2/b^2) sin^2 tau.  Requires a > b > c > 0.
OracleResult area_by_eq_seta(const Ellipsoid& e, const QuadratureSpec& spec);

/// The solid-angle mean-value identity S/V = 3 mean(1/R): returns
/// S_est = a b c * integral sin Th / R(Th, Ph) d Th d Ph, which must equal
/// the surface area.  Requires a, b, c > 0.
OracleResult mean_inverse_radius_identity(
    const Ellipsoid& e, const QuadratureSpec& spec,
    AngularDomain domain = AngularDomain::octant);

/// S = integral R^3/H over solid angle: returns the integral of
/// R^3(Th,Ph)/H(Th,Ph) sin Th, which must equal the surface area.
/// Requires a, b, c > 0.
OracleResult r3_over_h_identity(const Ellipsoid& e,
                                const QuadratureSpec& spec,
                                AngularDomain domain = AngularDomain::octant);

/// Two-dimensional analogue: perimeter estimate
/// L_est = a b * int_0^{2 pi} d Ph / R(Ph) for the ellipse with semi-axes
/// a >= b > 0, which must equal the ellipse perimeter.
OracleResult ellipse_ratio_identity(double a, double b,
                                    const QuadratureSpec& spec);

} // namespace ellipsoid

#endif
