#ifndef ELLIPSOID_CURVATURE_HPP
#define ELLIPSOID_CURVATURE_HPP

#include <array>

#include "ellipsoid/ellipsoid.hpp"
#include "ellipsoid/quadrature.hpp"

namespace ellipsoid {

/// First fundamental form (U, V, W) and second fundamental form
/// (kappa, lambda, mu) in the eccentric-anomaly chart.  On this surface
/// mu = 0 identically and lambda = kappa sin^2(theta).
struct FundamentalForms {
  double U;
  double V;
  double W;
  double kappa;
  double lambda;
  double mu;
};

/// Principal curvatures chi1 >= chi2 with their unit tangent directions.
/// mean = (chi1 + chi2)/2 and gaussian = chi1 * chi2 (which equals
/// H^4 / (a^2 b^2 c^2)).  When chi1 and chi2 coincide to within the umbilic
/// threshold the directions are an arbitrary orthonormal tangent pair and
/// `umbilic` is set.
struct CurvatureReport {
  double chi1;
  double chi2;
  double mean;
  double gaussian;
  Vec3 dir1;
  Vec3 dir2;
  bool umbilic;
};

/// The four umbilical points of a strictly triaxial ellipsoid, where the
/// curvature is the same in every direction:
///   X = +/- a sqrt((a^2-b^2)/(a^2-c^2)), Y = 0,
///   Z = +/- c sqrt((b^2-c^2)/(a^2-c^2)),
/// with R = sqrt(a^2+c^2-b^2), H = a c / b and chi = a c / b^3.
struct UmbilicSet {
  std::array<Vec3, 4> points;
  double radius;
  double height;
  double curvature;
};

/// Relative gap below which the two principal curvatures are reported as an
/// umbilic (eigenvectors are numerically meaningless below this).
inline constexpr double kUmbilicGap = 1e-9;

FundamentalForms fundamental_forms(const Ellipsoid& e, const SurfacePoint& p);

/// Solves the generalized eigenproblem of the second form against the
/// metric.  Throws PoleChartError at theta in {0, pi}: the chart is
/// singular there; use curvatures_from_invariants with the axis-endpoint
/// R and H instead.
CurvatureReport principal_curvatures(const Ellipsoid& e,
                                     const SurfacePoint& p);

/// chi1 + chi2 = H^3 (a^2 + b^2 + c^2 - R^2) / (a^2 b^2 c^2).
double curvature_sum(const Ellipsoid& e, double radius, double height);

/// chi1 * chi2 = H^4 / (a^2 b^2 c^2).
double curvature_product(const Ellipsoid& e, double height);

/// Principal curvature pair {chi1, chi2} recovered from the chart-free sum
/// and product, given R and H at the point.  This is the evaluation path
/// for chart poles (axis endpoints).
std::array<double, 2> curvatures_from_invariants(const Ellipsoid& e,
                                                 double radius,
                                                 double height);

/// Normal curvature in the tangent direction (dtheta, dphi):
/// the ratio of the second form to the first form, which always lies in
/// [chi2, chi1].
double directional_curvature(const Ellipsoid& e, const SurfacePoint& p,
                             double dtheta, double dphi);

/// Throws NonTriaxialError unless a > b > c > 0 (up to the classifier's
/// tolerance): shapes of revolution have no isolated umbilics.
UmbilicSet umbilics(const Ellipsoid& e);

/// Integral of the curvature product over the whole surface; must equal
/// 4 pi for any ellipsoid (sphere topology).
double gauss_bonnet_total(const Ellipsoid& e, const QuadratureSpec& spec);

} // namespace ellipsoid

#endif
