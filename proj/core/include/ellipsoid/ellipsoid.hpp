#ifndef ELLIPSOID_ELLIPSOID_HPP
#define ELLIPSOID_ELLIPSOID_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ellipsoid {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

inline double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

inline Vec3 normalized(const Vec3& u) {
  const double n = norm(u);
  return {u[0] / n, u[1] / n, u[2] / n};
}

/// Triaxial ellipsoid with semi-axes ordered a >= b >= c >= 0.  Construction
/// sorts the input axes and records the permutation so callers can map
/// results back to their own axis labels.
class Ellipsoid {
public:
  /// axes[i] of the canonical frame came from input axis permutation()[i].
  Ellipsoid(double a, double b, double c);

  double a() const { return axes_[0]; }
  double b() const { return axes_[1]; }
  double c() const { return axes_[2]; }
  const std::array<double, 3>& axes() const { return axes_; }
  const std::array<int, 3>& permutation() const { return perm_; }

  bool is_point() const { return axes_[0] == 0.0; }
  bool is_degenerate() const { return axes_[2] == 0.0; }

private:
  std::array<double, 3> axes_;
  std::array<int, 3> perm_;
};

/// Surface point in eccentric anomalies: position is
/// (a cos(theta), b sin(theta) cos(phi), c sin(theta) sin(phi)),
/// theta in [0, pi], phi in [0, 2 pi).
struct SurfacePoint {
  double theta;
  double phi;
};

/// The ten-way shape taxonomy.
enum class ShapeClass : std::uint8_t {
  ProlateOfRevolution,
  GeneralProlate,
  GeneralSpheroid,
  GeneralOblate,
  OblateOfRevolution,
  EllipticDisc,
  CircularDisc,
  Bar,
  Sphere,
  Point,
};

std::string_view to_string(ShapeClass c);

/// Derived shape parameters.  m (and with it gamma) is indeterminate for
/// the sphere (a = c) and the bar (b = c = 0), where any value in [0, 1]
/// is consistent; those fields are then disengaged.
struct ShapeParams {
  double e;                      // sqrt(1 - c^2/a^2)
  std::optional<double> m;       // a^2 (b^2 - c^2) / (b^2 (a^2 - c^2))
  double b_star;                 // sqrt((a^2 + c^2) / 2)
  double m_star;                 // a^2 / (a^2 + c^2)
  std::optional<double> gamma;   // asin(sqrt(m))
};

/// A canonical representative of each taxonomy class, with its name.
struct ShapeClassSample {
  std::string_view name;
  double a, b, c;
  ShapeClass shape_class;
};

/// Validated construction; throws DomainError on negative or non-finite
/// input.  Equivalent to the Ellipsoid constructor.
Ellipsoid make_ellipsoid(double a, double b, double c);

/// Cartesian position of a surface point given in eccentric anomalies.
Vec3 surface_position(const Ellipsoid& e, const SurfacePoint& p);

/// Central angles (co-latitude Theta from the a-axis, longitude Phi from
/// the b-axis in the (b,c)-plane) of the same cartesian point.
std::array<double, 2> central_angles(const Ellipsoid& e,
                                     const SurfacePoint& p);

/// Radius R in eccentric anomalies:
/// R = sqrt(a^2 cos^2 th + b^2 sin^2 th cos^2 ph + c^2 sin^2 th sin^2 ph).
double radius_eccentric(const Ellipsoid& e, const SurfacePoint& p);

/// Radius R in central angles:
/// R = abc / sqrt(b^2 c^2 cos^2 Th + c^2 a^2 sin^2 Th cos^2 Ph
///                + a^2 b^2 sin^2 Th sin^2 Ph).  Needs a, b, c > 0.
double radius_central(const Ellipsoid& e, double theta_c, double phi_c);

/// Distance H from the centre to the tangent plane, eccentric anomalies.
double support_height_eccentric(const Ellipsoid& e, const SurfacePoint& p);

/// Distance H from the centre to the tangent plane, central angles.
double support_height_central(const Ellipsoid& e, double theta_c,
                              double phi_c);

/// Derived parameters (e, m, b*, m*, gamma); throws on the point shape.
ShapeParams shape_params(const Ellipsoid& e);

/// Classify per the taxonomy.  Axis equality is tested relative to the
/// largest axis (|x - y| <= rel_tol * a) so the result is scale invariant;
/// degenerate axes are compared exactly against zero.
ShapeClass classify(const Ellipsoid& e, double rel_tol = 1e-12);

/// 4 pi a b c / 3; zero for degenerate shapes.
double volume(const Ellipsoid& e);

/// Canonical examples of the ten taxonomy classes.
const std::array<ShapeClassSample, 10>& shape_class_samples();

} // namespace ellipsoid

#endif
