#ifndef ELLIPSOID_AREA_HPP
#define ELLIPSOID_AREA_HPP

#include "ellipsoid/ellipsoid.hpp"

namespace ellipsoid {

/// Surface area with full degenerate dispatch: spheres, discs, bars and
/// points get their exact values, shapes of revolution their one-parameter
/// closed forms, and everything else the general elliptic-integral formula
///   S = 2 pi [ c^2 + b c^2 / sqrt(a^2 - c^2) F(asin e | m)
///            + b sqrt(a^2 - c^2) E(asin e | m) ].
double surface_area(const Ellipsoid& e);

/// The general closed form above, evaluated directly without dispatch.
/// Requires a > c > 0 (the revolution and degenerate limits are handled by
/// surface_area).
double surface_area_triaxial(const Ellipsoid& e);

/// Surface area as a function of the three independent parameters a, e, m:
///   S = 2 pi a^2 sqrt(1-e^2)/sqrt(1-m e^2)
///       [ sqrt(1-e^2) sqrt(1-m e^2) + (1-e^2) F(asin e | m)/e
///       + e E(asin e | m) ].
/// Requires a > 0, 0 <= e < 1, 0 <= m <= 1; the prefactor is indeterminate
/// at e = 1, which is rejected (use the disc/bar values instead).
double surface_area_newsurf(double a, double e, double m);

/// Prolate of revolution (b = c, rotation about the long axis):
///   S = 2 pi a^2 sqrt(1-e^2) [ sqrt(1-e^2) + asin(e)/e ].
double prolate_revolution_area(double a, double e);

/// Oblate of revolution (a = b, rotation about the short axis):
///   S = 2 pi a^2 [ 1 + (1-e^2) atanh(e)/e ].  Requires e < 1.
double oblate_revolution_area(double a, double e);

/// Perimeter of the ellipse with semi-axes a >= b >= 0, via the complete
/// second-kind integral: 4 a L(1 - b^2/a^2).
double ellipse_perimeter(double a, double b);

} // namespace ellipsoid

#endif
