#include "ellipsoid/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellipsoid/errors.hpp"

namespace ellipsoid {

namespace {

void check_point(const SurfacePoint& p) {
  if (!std::isfinite(p.theta) || p.theta < 0.0 ||
      p.theta > std::numbers::pi)
    throw DomainError("surface point: theta must lie in [0, pi]");
  if (!std::isfinite(p.phi) || p.phi < 0.0 ||
      p.phi >= 2.0 * std::numbers::pi)
    throw DomainError("surface point: phi must lie in [0, 2 pi)");
}

void require_nondegenerate(const Ellipsoid& e, const char* op) {
  if (e.is_degenerate())
    throw DegenerateShapeError(std::string(op) +
                               ": all semi-axes must be positive");
}

// Chart basis vectors of the position map
// (a cos th, b sin th cos ph, c sin th sin ph).
Vec3 basis_theta(const Ellipsoid& e, double st, double ct, double sp,
                 double cp) {
  return {-e.a() * st, e.b() * ct * cp, e.c() * ct * sp};
}

Vec3 basis_phi(const Ellipsoid& e, double st, double sp, double cp) {
  return {0.0, -e.b() * st * sp, e.c() * st * cp};
}

Vec3 outward_normal(const Ellipsoid& e, double st, double ct, double sp,
                    double cp) {
  // cross(R_theta, R_phi) = sin th (bc cos th, ca sin th cos ph,
  //                                 ab sin th sin ph); outward for th in
  // (0, pi).
  const Vec3 n{e.b() * e.c() * ct, e.c() * e.a() * st * cp,
               e.a() * e.b() * st * sp};
  return normalized(n);
}

} // namespace

FundamentalForms fundamental_forms(const Ellipsoid& e,
                                   const SurfacePoint& p) {
  check_point(p);
  require_nondegenerate(e, "fundamental_forms");
  const double a = e.a(), b = e.b(), c = e.c();
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  const double sp = std::sin(p.phi), cp = std::cos(p.phi);
  FundamentalForms f{};
  f.U = a * a * st * st + ct * ct * (b * b * cp * cp + c * c * sp * sp);
  f.V = st * st * (b * b * sp * sp + c * c * cp * cp);
  f.W = -(b - c) * (b + c) * st * ct * sp * cp;
  f.kappa = a * b * c /
            std::sqrt(b * b * c * c * ct * ct +
                      st * st * (c * c * a * a * cp * cp +
                                 a * a * b * b * sp * sp));
  f.lambda = f.kappa * st * st;
  f.mu = 0.0;
  return f;
}

// Angles this close to {0, pi} are taken as the chart pole itself: the
// metric is singular there and the caller means the axis endpoint.
static bool at_chart_pole(double theta) { return std::sin(theta) < 1e-12; }

CurvatureReport principal_curvatures(const Ellipsoid& e,
                                     const SurfacePoint& p) {
  check_point(p);
  require_nondegenerate(e, "principal_curvatures");
  if (at_chart_pole(p.theta))
    throw PoleChartError(
        "principal_curvatures: chart is singular at theta in {0, pi}; "
        "evaluate curvatures_from_invariants at the axis endpoint");

  // The eigenproblem coefficients are evaluated in extended precision and
  // the discriminant in the cancellation-free form
  //   D = kappa^2 [ (V - U sin^2 th)^2 + (2 sin th W)^2 ],
  // which keeps the chi1 - chi2 gap accurate through umbilics even for
  // extreme axis ratios.
  const long double a = e.a(), b = e.b(), c = e.c();
  const long double st = sinl(p.theta), ct = cosl(p.theta);
  const long double sp = sinl(p.phi), cp = cosl(p.phi);
  const long double st2 = st * st, ct2 = ct * ct;
  const long double sp2 = sp * sp, cp2 = cp * cp;

  const long double U = a * a * st2 + ct2 * (b * b * cp2 + c * c * sp2);
  const long double V = st2 * (b * b * sp2 + c * c * cp2);
  const long double W = -(b - c) * (b + c) * st * ct * sp * cp;
  const long double kappa =
      a * b * c / sqrtl(b * b * c * c * ct2 +
                        st2 * (c * c * a * a * cp2 + a * a * b * b * sp2));
  const long double lambda = kappa * st2;

  // det(I) = sin^2 th (a^2 sin^2 th (b^2 sin^2 ph + c^2 cos^2 ph)
  //                    + b^2 c^2 cos^2 th), an exact rearrangement of
  // U V - W^2 that stays positive.
  const long double det =
      st2 * (a * a * st2 * (b * b * sp2 + c * c * cp2) +
             b * b * c * c * ct2);
  const long double sum_n = kappa * V + lambda * U;
  const long double prod_n = kappa * lambda;

  // V - U sin^2 th = sin^2 th [ -(b^2-c^2) cos 2ph
  //                  - sin^2 th ((a^2-b^2) cos^2 ph + (a^2-c^2) sin^2 ph) ]
  const long double bracket =
      -(b - c) * (b + c) * cosl(2.0L * p.phi) -
      st2 * ((a - b) * (a + b) * cp2 + (a - c) * (a + c) * sp2);
  const long double w_term = (b - c) * (b + c) * ct * sinl(2.0L * p.phi);
  const long double root_d = kappa * st2 * hypotl(bracket, w_term);

  const long double chi1_l = (sum_n + root_d) / (2.0L * det);
  const long double chi2_l = prod_n / (det * chi1_l);

  CurvatureReport rep{};
  rep.chi1 = static_cast<double>(chi1_l);
  rep.chi2 = static_cast<double>(chi2_l);
  rep.mean = static_cast<double>(0.5L * (chi1_l + chi2_l));
  rep.gaussian = static_cast<double>(chi1_l * chi2_l);
  rep.umbilic = (chi1_l - chi2_l) <= kUmbilicGap * chi1_l;

  const Vec3 r_theta =
      basis_theta(e, (double)st, (double)ct, (double)sp, (double)cp);
  const Vec3 r_phi = basis_phi(e, (double)st, (double)sp, (double)cp);
  const Vec3 n = outward_normal(e, (double)st, (double)ct, (double)sp,
                                (double)cp);

  if (rep.umbilic) {
    rep.dir1 = normalized(r_theta);
    rep.dir2 = normalized(cross(n, rep.dir1));
    return rep;
  }

  const double kap = (double)kappa, lam = (double)lambda;
  const double Ud = (double)U, Vd = (double)V, Wd = (double)W;
  // Null vector of [[kappa - chi U, -chi W], [-chi W, lambda - chi V]],
  // taken from the row with the larger norm.
  const auto null_vector = [&](double chi) -> std::array<double, 2> {
    const double p1 = kap - chi * Ud, q1 = -chi * Wd;
    const double p2 = -chi * Wd, q2 = lam - chi * Vd;
    if (p1 * p1 + q1 * q1 >= p2 * p2 + q2 * q2) return {q1, -p1};
    return {q2, -p2};
  };

  const auto to_space = [&](const std::array<double, 2>& d) {
    return Vec3{d[0] * r_theta[0] + d[1] * r_phi[0],
                d[0] * r_theta[1] + d[1] * r_phi[1],
                d[0] * r_theta[2] + d[1] * r_phi[2]};
  };

  rep.dir1 = normalized(to_space(null_vector(rep.chi1)));
  // The second direction completes the orthonormal tangent frame; its sign
  // follows the raw second eigenvector.
  const Vec3 ortho = normalized(cross(n, rep.dir1));
  const Vec3 raw2 = to_space(null_vector(rep.chi2));
  const double sgn = dot(raw2, ortho) < 0.0 ? -1.0 : 1.0;
  rep.dir2 = {sgn * ortho[0], sgn * ortho[1], sgn * ortho[2]};
  return rep;
}

double curvature_sum(const Ellipsoid& e, double radius, double height) {
  require_nondegenerate(e, "curvature_sum");
  if (!(radius > 0.0) || !(height > 0.0))
    throw DomainError("curvature_sum: R and H must be positive");
  const double a = e.a(), b = e.b(), c = e.c();
  const double h3 = height * height * height;
  return h3 * (a * a + b * b + c * c - radius * radius) /
         (a * a * b * b * c * c);
}

double curvature_product(const Ellipsoid& e, double height) {
  require_nondegenerate(e, "curvature_product");
  if (!(height > 0.0))
    throw DomainError("curvature_product: H must be positive");
  const double a = e.a(), b = e.b(), c = e.c();
  const double h2 = height * height;
  return h2 * h2 / (a * a * b * b * c * c);
}

std::array<double, 2> curvatures_from_invariants(const Ellipsoid& e,
                                                 double radius,
                                                 double height) {
  const double s = curvature_sum(e, radius, height);
  const double p = curvature_product(e, height);
  const double disc = std::max(0.0, s * s - 4.0 * p);
  const double chi1 = 0.5 * (s + std::sqrt(disc));
  return {chi1, p / chi1};
}

double directional_curvature(const Ellipsoid& e, const SurfacePoint& p,
                             double dtheta, double dphi) {
  if (dtheta == 0.0 && dphi == 0.0)
    throw DomainError("directional_curvature: direction must be nonzero");
  if (!std::isfinite(dtheta) || !std::isfinite(dphi))
    throw DomainError("directional_curvature: direction must be finite");
  if (at_chart_pole(p.theta))
    throw PoleChartError(
        "directional_curvature: chart is singular at theta in {0, pi}");
  const FundamentalForms f = fundamental_forms(e, p);
  const double second =
      f.kappa * dtheta * dtheta + 2.0 * f.mu * dtheta * dphi +
      f.lambda * dphi * dphi;
  const double first = f.U * dtheta * dtheta + 2.0 * f.W * dtheta * dphi +
                       f.V * dphi * dphi;
  return second / first;
}

UmbilicSet umbilics(const Ellipsoid& e) {
  const ShapeClass cls = classify(e);
  if (cls != ShapeClass::GeneralProlate &&
      cls != ShapeClass::GeneralSpheroid &&
      cls != ShapeClass::GeneralOblate)
    throw NonTriaxialError(
        "umbilics: isolated umbilics exist only for strictly triaxial "
        "shapes (a > b > c > 0)");
  const double a = e.a(), b = e.b(), c = e.c();
  const double denom = (a - c) * (a + c);
  const double x = a * std::sqrt((a - b) * (a + b) / denom);
  const double z = c * std::sqrt((b - c) * (b + c) / denom);
  UmbilicSet u{};
  u.points = {Vec3{x, 0.0, z}, Vec3{x, 0.0, -z}, Vec3{-x, 0.0, z},
              Vec3{-x, 0.0, -z}};
  u.radius = std::sqrt(a * a + c * c - b * b);
  u.height = a * c / b;
  u.curvature = a * c / (b * b * b);
  return u;
}

double gauss_bonnet_total(const Ellipsoid& e, const QuadratureSpec& spec) {
  require_nondegenerate(e, "gauss_bonnet_total");
  const double a = e.a(), b = e.b(), c = e.c();
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const auto integrand = [&](double th, double ph) {
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    const double q2 =
        b2 * c2 * ct * ct + st * st * (c2 * a2 * cp * cp + a2 * b2 * sp * sp);
    const double h = a * b * c / std::sqrt(q2);
    const double gauss = h * h * h * h / (a2 * b2 * c2);
    const double area_element =
        st * std::sqrt(a2 * st * st * (b2 * sp * sp + c2 * cp * cp) +
                       b2 * c2 * ct * ct);
    return gauss * area_element;
  };
  const OracleResult r = integrate_2d(
      integrand, {{0.0, std::numbers::pi / 2}, {0.0, std::numbers::pi / 2}},
      spec);
  return 8.0 * r.value;
}

} // namespace ellipsoid
