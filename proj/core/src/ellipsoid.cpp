#include "ellipsoid/ellipsoid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellipsoid/errors.hpp"

namespace ellipsoid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_point(const SurfacePoint& p) {
  if (!std::isfinite(p.theta) || p.theta < 0.0 || p.theta > std::numbers::pi)
    throw DomainError("surface point: theta must lie in [0, pi]");
  if (!std::isfinite(p.phi) || p.phi < 0.0 || p.phi >= kTwoPi)
    throw DomainError("surface point: phi must lie in [0, 2 pi)");
}

void check_central(double theta_c, double phi_c) {
  if (!std::isfinite(theta_c) || theta_c < 0.0 ||
      theta_c > std::numbers::pi)
    throw DomainError("central angles: Theta must lie in [0, pi]");
  if (!std::isfinite(phi_c) || phi_c < 0.0 || phi_c >= kTwoPi)
    throw DomainError("central angles: Phi must lie in [0, 2 pi)");
}

void require_nondegenerate(const Ellipsoid& e, const char* op) {
  if (e.is_degenerate())
    throw DegenerateShapeError(std::string(op) +
                               ": all semi-axes must be positive");
}

// Quadratic form b^2 c^2 cos^2 t + c^2 a^2 sin^2 t cos^2 p
//              + a^2 b^2 sin^2 t sin^2 p, shared by the central radius and
// the eccentric support height.
double cross_axis_form(const Ellipsoid& e, double t, double p) {
  const double a = e.a(), b = e.b(), c = e.c();
  const double st = std::sin(t), ct = std::cos(t);
  const double sp = std::sin(p), cp = std::cos(p);
  return b * b * c * c * ct * ct +
         st * st * (c * c * a * a * cp * cp + a * a * b * b * sp * sp);
}

} // namespace

Ellipsoid::Ellipsoid(double a, double b, double c) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)))
    throw DomainError("ellipsoid: semi-axes must be finite");
  if (a < 0.0 || b < 0.0 || c < 0.0)
    throw DomainError("ellipsoid: semi-axes must be non-negative");
  std::array<std::pair<double, int>, 3> tagged{
      {{a, 0}, {b, 1}, {c, 2}}};
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& l, const auto& r) {
                     return l.first > r.first;
                   });
  for (int i = 0; i < 3; ++i) {
    axes_[i] = tagged[i].first;
    perm_[i] = tagged[i].second;
  }
}

Ellipsoid make_ellipsoid(double a, double b, double c) {
  return Ellipsoid(a, b, c);
}

std::string_view to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::ProlateOfRevolution: return "prolate of revolution";
    case ShapeClass::GeneralProlate: return "general prolate";
    case ShapeClass::GeneralSpheroid: return "general spheroid";
    case ShapeClass::GeneralOblate: return "general oblate";
    case ShapeClass::OblateOfRevolution: return "oblate of revolution";
    case ShapeClass::EllipticDisc: return "elliptic disc";
    case ShapeClass::CircularDisc: return "circular disc";
    case ShapeClass::Bar: return "bar";
    case ShapeClass::Sphere: return "sphere";
    case ShapeClass::Point: return "point";
  }
  return "unknown";
}

Vec3 surface_position(const Ellipsoid& e, const SurfacePoint& p) {
  check_point(p);
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  const double sp = std::sin(p.phi), cp = std::cos(p.phi);
  return {e.a() * ct, e.b() * st * cp, e.c() * st * sp};
}

std::array<double, 2> central_angles(const Ellipsoid& e,
                                     const SurfacePoint& p) {
  const Vec3 r = surface_position(e, p);
  const double rn = norm(r);
  if (rn == 0.0)
    throw DegenerateShapeError("central_angles: point shape has no angles");
  const double theta_c = std::acos(std::clamp(r[0] / rn, -1.0, 1.0));
  double phi_c = std::atan2(r[2], r[1]);
  if (phi_c < 0.0) phi_c += kTwoPi;
  if (phi_c >= kTwoPi) phi_c = 0.0;
  return {theta_c, phi_c};
}

double radius_eccentric(const Ellipsoid& e, const SurfacePoint& p) {
  check_point(p);
  const double a = e.a(), b = e.b(), c = e.c();
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  const double sp = std::sin(p.phi), cp = std::cos(p.phi);
  return std::sqrt(a * a * ct * ct +
                   st * st * (b * b * cp * cp + c * c * sp * sp));
}

double radius_central(const Ellipsoid& e, double theta_c, double phi_c) {
  check_central(theta_c, phi_c);
  require_nondegenerate(e, "radius_central");
  return e.a() * e.b() * e.c() /
         std::sqrt(cross_axis_form(e, theta_c, phi_c));
}

double support_height_eccentric(const Ellipsoid& e, const SurfacePoint& p) {
  check_point(p);
  require_nondegenerate(e, "support_height_eccentric");
  return e.a() * e.b() * e.c() /
         std::sqrt(cross_axis_form(e, p.theta, p.phi));
}

double support_height_central(const Ellipsoid& e, double theta_c,
                              double phi_c) {
  check_central(theta_c, phi_c);
  require_nondegenerate(e, "support_height_central");
  const double a = e.a(), b = e.b(), c = e.c();
  const double st = std::sin(theta_c), ct = std::cos(theta_c);
  const double sp = std::sin(phi_c), cp = std::cos(phi_c);
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const double quad2 = cross_axis_form(e, theta_c, phi_c);
  const double quad4 =
      b2 * b2 * c2 * c2 * ct * ct +
      st * st * (c2 * c2 * a2 * a2 * cp * cp + a2 * a2 * b2 * b2 * sp * sp);
  return a * b * c * std::sqrt(quad2) / std::sqrt(quad4);
}

ShapeParams shape_params(const Ellipsoid& e) {
  if (e.is_point())
    throw DegenerateShapeError("shape_params: undefined for the point shape");
  const double a = e.a(), b = e.b(), c = e.c();
  ShapeParams sp{};
  sp.e = std::sqrt((a - c) * (a + c)) / a;
  sp.b_star = std::hypot(a, c) / std::numbers::sqrt2;
  sp.m_star = a * a / (a * a + c * c);
  if (a == c || b == 0.0) {
    // Sphere or bar: 0/0, any m in [0, 1] is consistent.
    sp.m = std::nullopt;
    sp.gamma = std::nullopt;
  } else {
    const double m =
        a * a * (b - c) * (b + c) / (b * b * (a - c) * (a + c));
    sp.m = std::clamp(m, 0.0, 1.0);
    sp.gamma = std::asin(std::sqrt(*sp.m));
  }
  return sp;
}

ShapeClass classify(const Ellipsoid& e, double rel_tol) {
  if (!(rel_tol >= 0.0) || rel_tol > 1e-6)
    throw DomainError("classify: rel_tol must lie in [0, 1e-6]");
  const double a = e.a(), b = e.b(), c = e.c();
  const double tol = rel_tol * a;
  const auto eq = [tol](double x, double y) { return x - y <= tol; };

  if (a == 0.0) return ShapeClass::Point;
  if (c == 0.0) {
    if (b == 0.0) return ShapeClass::Bar;
    return eq(a, b) ? ShapeClass::CircularDisc : ShapeClass::EllipticDisc;
  }
  if (eq(a, c)) return ShapeClass::Sphere;
  if (eq(b, c)) return ShapeClass::ProlateOfRevolution;
  if (eq(a, b)) return ShapeClass::OblateOfRevolution;
  // Strictly triaxial: split prolate/oblate at the spheroidal b*, which is
  // where m crosses m*.
  const double b_star = std::hypot(a, c) / std::numbers::sqrt2;
  if (std::fabs(b - b_star) <= tol) return ShapeClass::GeneralSpheroid;
  return b < b_star ? ShapeClass::GeneralProlate : ShapeClass::GeneralOblate;
}

double volume(const Ellipsoid& e) {
  return 4.0 * std::numbers::pi * e.a() * e.b() * e.c() / 3.0;
}

const std::array<ShapeClassSample, 10>& shape_class_samples() {
  static const std::array<ShapeClassSample, 10> samples{{
      {"prolate of revolution", 2.0, 1.0, 1.0,
       ShapeClass::ProlateOfRevolution},
      {"general prolate", 3.0, 1.5, 1.0, ShapeClass::GeneralProlate},
      {"general spheroid", 3.0, std::sqrt(5.0), 1.0,
       ShapeClass::GeneralSpheroid},
      {"general oblate", 3.0, 2.5, 1.0, ShapeClass::GeneralOblate},
      {"oblate of revolution", 2.0, 2.0, 1.0,
       ShapeClass::OblateOfRevolution},
      {"elliptic disc", 2.0, 1.0, 0.0, ShapeClass::EllipticDisc},
      {"circular disc", 2.0, 2.0, 0.0, ShapeClass::CircularDisc},
      {"bar", 1.0, 0.0, 0.0, ShapeClass::Bar},
      {"sphere", 1.0, 1.0, 1.0, ShapeClass::Sphere},
      {"point", 0.0, 0.0, 0.0, ShapeClass::Point},
  }};
  return samples;
}

} // namespace ellipsoid
