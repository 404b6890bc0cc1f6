#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ellipsoid/ellipsoid.hpp"
#include "ellipsoid/errors.hpp"
#include "support/test_oracles.hpp"

using namespace ellipsoid;
using test_oracle::SplitMix64;

namespace {
constexpr double kPi = std::numbers::pi;

// Frozen from the cartesian bisection/gradient oracles.
constexpr double kRc321 = 1.6483267673842683;     // R(3,2,1) at Th=Ph=pi/4
constexpr double kHc321pi3 = 1.0505556604592625;  // H(3,2,1) at Th=Ph=pi/3
} // namespace

TEST_CASE("construction sorts axes and records the permutation") {
  const Ellipsoid e(1, 2, 3);
  CHECK(e.a() == 3);
  CHECK(e.b() == 2);
  CHECK(e.c() == 1);
  CHECK(e.permutation() == std::array<int, 3>{2, 1, 0});

  const Ellipsoid s(2, 2, 2);
  CHECK(s.axes() == std::array<double, 3>{2, 2, 2});
  CHECK(s.permutation() == std::array<int, 3>{0, 1, 2});

  const Ellipsoid d = make_ellipsoid(3, 0, 2);
  CHECK(d.axes() == std::array<double, 3>{3, 2, 0});
  CHECK(d.permutation() == std::array<int, 3>{0, 2, 1});

  CHECK_THROWS_AS(Ellipsoid(-1, 1, 1), DomainError);
  CHECK_THROWS_AS(Ellipsoid(1, std::nan(""), 1), DomainError);
  CHECK_THROWS_AS(Ellipsoid(1, 1, std::numeric_limits<double>::infinity()),
                  DomainError);
}

TEST_CASE("radius in eccentric anomalies") {
  const Ellipsoid e(3, 2, 1);
  CHECK(radius_eccentric(e, {0.0, 0.0}) == doctest::Approx(3.0));
  CHECK(radius_eccentric(e, {kPi / 2, 0.0}) == doctest::Approx(2.0));
  CHECK(radius_eccentric(e, {kPi / 2, kPi / 2}) == doctest::Approx(1.0));
  const Ellipsoid s(1.7, 1.7, 1.7);
  SplitMix64 rng{3};
  for (int i = 0; i < 20; ++i) {
    const SurfacePoint p{rng.uniform(0, kPi), rng.uniform(0, 2 * kPi)};
    CHECK(radius_eccentric(s, p) == doctest::Approx(1.7).epsilon(1e-14));
  }
  CHECK_THROWS_AS(radius_eccentric(e, {-0.1, 0.0}), DomainError);
  CHECK_THROWS_AS(radius_eccentric(e, {0.1, 2 * kPi}), DomainError);
}

TEST_CASE("radius in central angles") {
  const Ellipsoid e(3, 2, 1);
  CHECK(radius_central(e, 0.0, 0.0) == doctest::Approx(3.0));
  CHECK(radius_central(e, kPi / 2, kPi / 2) == doctest::Approx(1.0));
  CHECK(radius_central(e, kPi / 4, kPi / 4) ==
        doctest::Approx(kRc321).epsilon(1e-14));
  // Bisection on the implicit equation along the ray, no formula involved.
  SplitMix64 rng{11};
  for (int i = 0; i < 30; ++i) {
    const auto ax = test_oracle::random_axes(rng, 2.0);
    const Ellipsoid re(ax.a, ax.b, ax.c);
    const double th = rng.uniform(0.0, kPi);
    const double ph = rng.uniform(0.0, 2 * kPi * 0.999);
    const double ref = test_oracle::radius_by_bisection(ax, th, ph);
    CHECK(radius_central(re, th, ph) == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK_THROWS_AS(radius_central(Ellipsoid(2, 1, 0), 0.3, 0.3),
                  DegenerateShapeError);
}

TEST_CASE("support height in eccentric anomalies") {
  const Ellipsoid e(3, 2, 1);
  CHECK(support_height_eccentric(e, {0.0, 0.0}) == doctest::Approx(3.0));
  const Ellipsoid s(0.4, 0.4, 0.4);
  CHECK(support_height_eccentric(s, {1.0, 2.0}) ==
        doctest::Approx(0.4).epsilon(1e-14));
  // Gradient-norm oracle from the cartesian point.
  SplitMix64 rng{12};
  for (int i = 0; i < 30; ++i) {
    const auto ax = test_oracle::random_axes(rng, 2.0);
    const Ellipsoid re(ax.a, ax.b, ax.c);
    const SurfacePoint p{rng.uniform(0.0, kPi), rng.uniform(0.0, 2 * kPi * 0.999)};
    const auto pos = test_oracle::position_from_eccentric(ax, p.theta, p.phi);
    const double ref = test_oracle::support_height_from_cartesian(ax, pos);
    CHECK(support_height_eccentric(re, p) ==
          doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK_THROWS_AS(support_height_eccentric(Ellipsoid(1, 0, 0), {0.3, 0.3}),
                  DegenerateShapeError);
}

TEST_CASE("support height in central angles") {
  const Ellipsoid e(3, 2, 1);
  CHECK(support_height_central(e, 0.0, 0.0) == doctest::Approx(3.0));
  CHECK(support_height_central(e, kPi / 2, 0.0) == doctest::Approx(2.0));
  CHECK(support_height_central(e, kPi / 3, kPi / 3) ==
        doctest::Approx(kHc321pi3).epsilon(1e-14));
  // Cartesian oracle: take the surface point along the central direction,
  // then the gradient norm there.
  SplitMix64 rng{13};
  for (int i = 0; i < 30; ++i) {
    const auto ax = test_oracle::random_axes(rng, 2.0);
    const Ellipsoid re(ax.a, ax.b, ax.c);
    const double th = rng.uniform(0.0, kPi);
    const double ph = rng.uniform(0.0, 2 * kPi * 0.999);
    const double r = test_oracle::radius_by_bisection(ax, th, ph);
    const std::array<double, 3> pos{r * std::cos(th),
                                    r * std::sin(th) * std::cos(ph),
                                    r * std::sin(th) * std::sin(ph)};
    const double ref = test_oracle::support_height_from_cartesian(ax, pos);
    CHECK(support_height_central(re, th, ph) ==
          doctest::Approx(ref).epsilon(1e-11));
  }
}

TEST_CASE("the two radius charts agree on the shared cartesian point") {
  SplitMix64 rng{14};
  for (int i = 0; i < 50; ++i) {
    const auto ax = test_oracle::random_axes(rng, 2.0);
    const Ellipsoid e(ax.a, ax.b, ax.c);
    const SurfacePoint p{rng.uniform(0.01, kPi - 0.01),
                         rng.uniform(0.0, 2 * kPi * 0.999)};
    const auto [th, ph] = central_angles(e, p);
    const double r1 = radius_eccentric(e, p);
    const double r2 = radius_central(e, th, ph);
    CHECK(std::fabs(r1 - r2) <= 1e-12 * r1);
    // H is steeper in the central angles than R, so the rounding of the
    // mapped (Theta, Phi) shows up amplified; allow for that sensitivity.
    const double h1 = support_height_eccentric(e, p);
    const double h2 = support_height_central(e, th, ph);
    CHECK(std::fabs(h1 - h2) <= 1e-10 * h1);
  }
}

TEST_CASE("bounds c <= R <= a and H <= R") {
  SplitMix64 rng{15};
  for (int i = 0; i < 100; ++i) {
    const auto ax = test_oracle::random_axes(rng);
    const Ellipsoid e(ax.a, ax.b, ax.c);
    const SurfacePoint p{rng.uniform(0.0, kPi), rng.uniform(0.0, 2 * kPi * 0.999)};
    const double r = radius_eccentric(e, p);
    const double h = support_height_eccentric(e, p);
    CHECK(r <= e.a() * (1 + 1e-14));
    CHECK(r >= e.c() * (1 - 1e-14));
    CHECK(h <= r * (1 + 1e-14));
  }
  // Equality of H and R exactly at the axis endpoints.
  const Ellipsoid e(3, 2, 1);
  for (const SurfacePoint p :
       {SurfacePoint{0.0, 0.0}, SurfacePoint{kPi, 0.0},
        SurfacePoint{kPi / 2, 0.0}, SurfacePoint{kPi / 2, kPi / 2}}) {
    const double r = radius_eccentric(e, p);
    const double h = support_height_eccentric(e, p);
    CHECK(std::fabs(r - h) <= 1e-14 * r);
  }
}

TEST_CASE("shape parameters") {
  SUBCASE("oblate m = 1") {
    const ShapeParams sp = shape_params(Ellipsoid(2, 2, 1));
    CHECK(sp.e == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    REQUIRE(sp.m.has_value());
    CHECK(*sp.m == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("prolate m = 0") {
    const ShapeParams sp = shape_params(Ellipsoid(2, 1, 1));
    CHECK(sp.e == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    REQUIRE(sp.m.has_value());
    CHECK(*sp.m == 0.0);
  }
  SUBCASE("triaxial 3-2-1") {
    const ShapeParams sp = shape_params(Ellipsoid(3, 2, 1));
    CHECK(sp.e == doctest::Approx(std::sqrt(8.0) / 3).epsilon(1e-15));
    REQUIRE(sp.m.has_value());
    CHECK(*sp.m == doctest::Approx(27.0 / 32.0).epsilon(1e-15));
    // Independent re-derivation.
    const double a = 3, b = 2, c = 1;
    const double m_ref =
        (a * a) * (b * b - c * c) / ((b * b) * (a * a - c * c));
    CHECK(*sp.m == doctest::Approx(m_ref).epsilon(1e-15));
    CHECK(sp.b_star == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(sp.m_star == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(*sp.gamma == doctest::Approx(std::asin(std::sqrt(*sp.m))));
  }
  SUBCASE("indeterminate cases") {
    CHECK_FALSE(shape_params(Ellipsoid(1, 1, 1)).m.has_value());
    CHECK_FALSE(shape_params(Ellipsoid(1, 0, 0)).m.has_value());
    CHECK(shape_params(Ellipsoid(2, 1, 0)).m.value() ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(shape_params(Ellipsoid(0, 0, 0)),
                    DegenerateShapeError);
  }
  SUBCASE("m range on random shapes") {
    SplitMix64 rng{16};
    for (int i = 0; i < 100; ++i) {
      const auto ax = test_oracle::random_axes(rng);
      const auto sp = shape_params(Ellipsoid(ax.a, ax.b, ax.c));
      REQUIRE(sp.m.has_value());
      CHECK(*sp.m >= 0.0);
      CHECK(*sp.m <= 1.0);
    }
  }
}

TEST_CASE("taxonomy golden rows") {
  for (const auto& s : shape_class_samples()) {
    CAPTURE(s.name);
    CHECK(classify(Ellipsoid(s.a, s.b, s.c)) == s.shape_class);
  }
  CHECK(classify(Ellipsoid(2, 1, 1)) == ShapeClass::ProlateOfRevolution);
  CHECK(classify(Ellipsoid(2, 2, 1)) == ShapeClass::OblateOfRevolution);
  CHECK(classify(Ellipsoid(3, std::sqrt(5.0), 1)) ==
        ShapeClass::GeneralSpheroid);
  CHECK(classify(Ellipsoid(1, 1, 1)) == ShapeClass::Sphere);
  CHECK(classify(Ellipsoid(2, 1, 0)) == ShapeClass::EllipticDisc);
  CHECK(classify(Ellipsoid(1, 0, 0)) == ShapeClass::Bar);
  CHECK(classify(Ellipsoid(0, 0, 0)) == ShapeClass::Point);
}

TEST_CASE("classification tolerance and scale invariance") {
  // Near-equal axes within the default tolerance collapse to the
  // revolution/sphere classes; with zero tolerance they stay distinct.
  CHECK(classify(Ellipsoid(1, 1, 1 - 1e-13)) == ShapeClass::Sphere);
  CHECK(classify(Ellipsoid(1, 1, 1 - 1e-13), 0.0) ==
        ShapeClass::OblateOfRevolution);
  CHECK(classify(Ellipsoid(1, 1 - 1e-13, 0.5)) ==
        ShapeClass::OblateOfRevolution);
  CHECK_THROWS_AS(classify(Ellipsoid(1, 1, 1), 1e-3), DomainError);

  SplitMix64 rng{17};
  for (int i = 0; i < 100; ++i) {
    const auto ax = test_oracle::random_axes(rng);
    const Ellipsoid e(ax.a, ax.b, ax.c);
    const double t = std::pow(10.0, rng.uniform(-8.0, 8.0));
    CHECK(classify(e) == classify(Ellipsoid(t * ax.a, t * ax.b, t * ax.c)));
  }
}

TEST_CASE("volume") {
  CHECK(volume(Ellipsoid(1, 1, 1)) == doctest::Approx(4 * kPi / 3));
  CHECK(volume(Ellipsoid(3, 2, 1)) == doctest::Approx(8 * kPi));
  CHECK(volume(Ellipsoid(2, 1, 0)) == 0.0);
}

TEST_CASE("central angle mapping round trip") {
  SplitMix64 rng{18};
  for (int i = 0; i < 40; ++i) {
    const auto ax = test_oracle::random_axes(rng, 2.0);
    const Ellipsoid e(ax.a, ax.b, ax.c);
    const SurfacePoint p{rng.uniform(0.01, kPi - 0.01),
                         rng.uniform(0.0, 2 * kPi * 0.999)};
    const Vec3 pos = surface_position(e, p);
    const auto [th, ph] = central_angles(e, p);
    const double r = radius_central(e, th, ph);
    CHECK(r * std::cos(th) == doctest::Approx(pos[0]).epsilon(1e-10));
    CHECK(r * std::sin(th) * std::cos(ph) ==
          doctest::Approx(pos[1]).epsilon(1e-10));
    CHECK(r * std::sin(th) * std::sin(ph) ==
          doctest::Approx(pos[2]).epsilon(1e-10));
  }
}
