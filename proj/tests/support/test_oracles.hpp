// Independent numerical oracles for the test suites.  Everything here is
// deliberately implemented with different algorithms than the library under
// test: adaptive Simpson instead of Gauss-Legendre, AGM instead of Carlson,
// bisection instead of closed forms.
#ifndef ELLIPSOID_TEST_ORACLES_HPP
#define ELLIPSOID_TEST_ORACLES_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace test_oracle {

inline constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Adaptive Simpson quadrature.

template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // Stop at the requested tolerance, at the depth cap, or once the
  // correction sits below the local rounding noise (further splitting
  // cannot improve anything there).
  const double noise =
      1e-15 * (std::fabs(left) + std::fabs(right));
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol ||
      std::fabs(delta) <= noise)
    return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol = 1e-13,
                        int depth = 44) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

// ---------------------------------------------------------------------------
// Defining-integral oracles for the special functions.  The substitution
// t = tan^2(psi) maps [0, inf) to [0, pi/2] and keeps the integrand finite
// at both ends (for at most one zero argument).

inline double rf_defining(double x, double y, double z) {
  const auto g = [&](double psi) {
    const double t = std::tan(psi);
    const double t2 = t * t;
    const double sec2 = 1.0 + t2;
    if (t == 0.0) // limit at the origin; 1/sqrt(yz) when x = 0
      return x > 0.0 ? 0.0 : 1.0 / std::sqrt(y * z);
    return t * sec2 / std::sqrt((t2 + x) * (t2 + y) * (t2 + z));
  };
  return adaptive_simpson(g, 0.0, kPi / 2);
}

inline double rd_defining(double x, double y, double z) {
  const auto g = [&](double psi) {
    const double t = std::tan(psi);
    const double t2 = t * t;
    const double sec2 = 1.0 + t2;
    if (t == 0.0)
      return x > 0.0 ? 0.0 : 3.0 / (std::sqrt(y) * z * std::sqrt(z));
    return 3.0 * t * sec2 /
           (std::sqrt((t2 + x) * (t2 + y)) * (t2 + z) * std::sqrt(t2 + z));
  };
  return adaptive_simpson(g, 0.0, kPi / 2);
}

inline double f_defining(double phi, double m) {
  return adaptive_simpson(
      [m](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - m * s * s);
      },
      0.0, phi);
}

inline double e_defining(double phi, double m) {
  return adaptive_simpson(
      [m](double t) {
        const double s = std::sin(t);
        return std::sqrt(1.0 - m * s * s);
      },
      0.0, phi);
}

// Complete first kind by the arithmetic-geometric mean.
inline double agm_k(double m) {
  double a = 1.0, g = std::sqrt(1.0 - m);
  for (int i = 0; i < 60 && a - g > 2e-16 * a; ++i) {
    const double an = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = an;
  }
  return kPi / (2.0 * a);
}

// ---------------------------------------------------------------------------
// Cartesian-space oracles, independent of the library's angle formulas.

struct Axes {
  double a, b, c;
};

inline std::array<double, 3> position_from_eccentric(const Axes& ax,
                                                     double theta,
                                                     double phi) {
  return {ax.a * std::cos(theta), ax.b * std::sin(theta) * std::cos(phi),
          ax.c * std::sin(theta) * std::sin(phi)};
}

// Distance from the centre to the tangent plane at a surface point, from
// the gradient of the implicit equation.
inline double support_height_from_cartesian(const Axes& ax,
                                            const std::array<double, 3>& p) {
  const double gx = p[0] / (ax.a * ax.a);
  const double gy = p[1] / (ax.b * ax.b);
  const double gz = p[2] / (ax.c * ax.c);
  return 1.0 / std::sqrt(gx * gx + gy * gy + gz * gz);
}

// Radius along the central direction (Theta, Phi) by bisection on the
// implicit equation, no closed form involved.
inline double radius_by_bisection(const Axes& ax, double theta_c,
                                  double phi_c) {
  const double dx = std::cos(theta_c);
  const double dy = std::sin(theta_c) * std::cos(phi_c);
  const double dz = std::sin(theta_c) * std::sin(phi_c);
  const auto g = [&](double t) {
    const double x = t * dx / ax.a, y = t * dy / ax.b, z = t * dz / ax.c;
    return x * x + y * y + z * z - 1.0;
  };
  double lo = 0.0, hi = ax.a * (1.0 + 1e-12);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Deterministic RNG for seeded property tests.

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }
  // Log-uniform in [10^-decades, 1].
  double log_uniform_ratio(double decades) {
    return std::pow(10.0, -decades * uniform01());
  }
};

// Random semi-axes with a unit major axis and log-uniform ratios.
inline Axes random_axes(SplitMix64& rng, double decades = 3.0) {
  const double r1 = rng.log_uniform_ratio(decades);
  const double r2 = rng.log_uniform_ratio(decades);
  return {1.0, std::max(r1, r2), std::min(r1, r2)};
}

} // namespace test_oracle

#endif
