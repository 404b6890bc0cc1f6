#include "ellipsoid/area.hpp"

#include <cmath>
#include <numbers>

#include "ellipsoid/elliptic.hpp"
#include "ellipsoid/errors.hpp"

namespace ellipsoid {

namespace {
constexpr double kPi = std::numbers::pi;
}

double prolate_revolution_area(double a, double e) {
  if (!(a > 0.0) || !std::isfinite(e) || e < 0.0 || e > 1.0)
    throw DomainError("prolate_revolution_area: need a > 0, e in [0, 1]");
  if (e == 0.0) return 4.0 * kPi * a * a;
  const double q = 1.0 - e * e;
  return 2.0 * kPi * a * a * std::sqrt(q) *
         (std::sqrt(q) + std::asin(e) / e);
}

double oblate_revolution_area(double a, double e) {
  if (!(a > 0.0) || !std::isfinite(e) || e < 0.0 || e >= 1.0)
    throw DomainError("oblate_revolution_area: need a > 0, e in [0, 1)");
  if (e == 0.0) return 4.0 * kPi * a * a;
  return 2.0 * kPi * a * a * (1.0 + (1.0 - e * e) * std::atanh(e) / e);
}

double surface_area_triaxial(const Ellipsoid& el) {
  const double a = el.a(), b = el.b(), c = el.c();
  if (!(c > 0.0) || !(a > c))
    throw DomainError("surface_area_triaxial: need a > c > 0");
  // Evaluated on the axis ratios so that scaling the shape scales the
  // result exactly quadratically (up to the rounding of the ratios).
  const double beta = b / a, gam = c / a;
  const double e2 = (1.0 - gam) * (1.0 + gam);
  const double e = std::sqrt(e2);
  const double m = std::clamp(
      (beta - gam) * (beta + gam) / (beta * beta * e2), 0.0, 1.0);
  const double phi = std::asin(e);
  const double unit = 2.0 * kPi *
                      (gam * gam + beta * gam * gam / e * ellint_f(phi, m) +
                       beta * e * ellint_e(phi, m));
  return a * a * unit;
}

double surface_area(const Ellipsoid& el) {
  const double a = el.a(), b = el.b(), c = el.c();
  switch (classify(el)) {
    case ShapeClass::Point:
    case ShapeClass::Bar:
      return 0.0;
    case ShapeClass::Sphere:
      return 4.0 * kPi * a * a;
    case ShapeClass::EllipticDisc:
    case ShapeClass::CircularDisc:
      return 2.0 * kPi * a * b;
    case ShapeClass::ProlateOfRevolution:
      return prolate_revolution_area(a, shape_params(el).e);
    case ShapeClass::OblateOfRevolution:
      return oblate_revolution_area(a, shape_params(el).e);
    case ShapeClass::GeneralProlate:
    case ShapeClass::GeneralSpheroid:
    case ShapeClass::GeneralOblate:
      return surface_area_triaxial(el);
  }
  throw Error("surface_area: unreachable");
}

double surface_area_newsurf(double a, double e, double m) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw DomainError("surface_area_newsurf: need a > 0");
  if (!std::isfinite(e) || e < 0.0 || e >= 1.0)
    throw DomainError(
        "surface_area_newsurf: e must lie in [0, 1); the prefactor is "
        "indeterminate at e = 1");
  if (!std::isfinite(m) || m < 0.0 || m > 1.0)
    throw DomainError("surface_area_newsurf: m must lie in [0, 1]");
  if (e == 0.0) return 4.0 * kPi * a * a;
  const double q = 1.0 - e * e;      // (c/a)^2
  const double qm = 1.0 - m * e * e; // (c/b)^2
  const double phi = std::asin(e);
  return 2.0 * kPi * a * a * std::sqrt(q) / std::sqrt(qm) *
         (std::sqrt(q) * std::sqrt(qm) + q * ellint_f(phi, m) / e +
          e * ellint_e(phi, m));
}

double ellipse_perimeter(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || b < 0.0 || a < b)
    throw DomainError("ellipse_perimeter: need a >= b >= 0");
  if (a == 0.0) return 0.0;
  const double m1 = (a - b) * (a + b) / (a * a);
  return 4.0 * a * ellint_l(m1);
}

} // namespace ellipsoid
