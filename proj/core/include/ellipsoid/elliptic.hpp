#ifndef ELLIPSOID_ELLIPTIC_HPP
#define ELLIPSOID_ELLIPTIC_HPP

// Legendre elliptic integrals of the first and second kind, incomplete and
// complete, in the parameter convention m = k^2 with m in [0, 1] and the
// amplitude restricted to the first quadrant.  All functions are pure and
// safe to call concurrently.

namespace ellipsoid {

/// Carlson symmetric integral R_F(x, y, z) =
///   (1/2) * integral_0^inf dt / sqrt((t+x)(t+y)(t+z)).
/// Requires x, y, z >= 0 with at most one of them zero.
double carlson_rf(double x, double y, double z, double rel_tol = 1e-15);

/// Carlson symmetric integral R_D(x, y, z) =
///   (3/2) * integral_0^inf dt / (sqrt((t+x)(t+y)) (t+z)^(3/2)).
/// Requires x, y >= 0 with at most one of them zero, and z > 0.
double carlson_rd(double x, double y, double z, double rel_tol = 1e-15);

/// Incomplete first kind: F(phi, m) = integral_0^phi dt / sqrt(1 - m sin^2 t).
/// phi in [0, pi/2], m in [0, 1].  Throws DivergenceError at (pi/2, 1).
double ellint_f(double phi, double m);

/// Incomplete second kind: E(phi, m) = integral_0^phi sqrt(1 - m sin^2 t) dt.
/// phi in [0, pi/2], m in [0, 1].
double ellint_e(double phi, double m);

/// Complete first kind K(m) = F(pi/2, m); diverges at m = 1.
double ellint_k(double m);

/// Complete second kind L(m) = E(pi/2, m); L(1) = 1.
double ellint_l(double m);

} // namespace ellipsoid

#endif
