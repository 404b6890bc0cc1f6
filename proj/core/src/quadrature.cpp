#include "ellipsoid/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace ellipsoid {

namespace {

constexpr double kPi = std::numbers::pi;

// Hard cap on stored panels, beyond the per-axis depth cap, so a hostile
// integrand degrades into an honest tolerance failure instead of unbounded
// work.
constexpr std::size_t kMaxPanels = 1u << 20;

template <int N>
struct GaussRule {
  std::array<double, N> node;
  std::array<double, N> weight;
};

// Nodes and weights on [-1, 1] by Newton iteration on the Legendre
// recurrence; converges to machine precision in a handful of steps.
template <int N>
GaussRule<N> make_gauss_rule() {
  GaussRule<N> rule{};
  for (int k = 0; k < N; ++k) {
    double x = std::cos(kPi * (k + 0.75) / (N + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= N; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = N * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) <= 4.0 * std::numeric_limits<double>::epsilon())
        break;
    }
    rule.node[k] = x;
    rule.weight[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule<7>& rule7() {
  static const GaussRule<7> r = make_gauss_rule<7>();
  return r;
}

const GaussRule<15>& rule15() {
  static const GaussRule<15> r = make_gauss_rule<15>();
  return r;
}

void check_spec(const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0))
    throw DomainError("quadrature: rel_tol must be positive");
  if (!(spec.abs_tol >= 0.0))
    throw DomainError("quadrature: abs_tol must be non-negative");
  if (spec.max_subdivisions < 1)
    throw DomainError("quadrature: max_subdivisions must be at least 1");
}

// Priority entry: worst error first, insertion index breaking ties, so the
// refinement order (and with it the result) is deterministic.
struct QueueEntry {
  double err;
  std::size_t idx;
  bool operator<(const QueueEntry& o) const {
    if (err != o.err) return err < o.err;
    return idx > o.idx;
  }
};

// ---------------------------------------------------------------------------
// 1-D engine

struct Segment {
  Interval range;
  double i15;
  double err;
  int depth;
  bool in_result = true; // cleared when the segment is split
};

template <class F>
Segment eval_segment(const F& f, Interval r, int depth,
                     std::int64_t& evals) {
  const double mid = 0.5 * (r.lo + r.hi);
  const double half = 0.5 * (r.hi - r.lo);
  const auto& r7 = rule7();
  const auto& r15 = rule15();
  double s7 = 0.0;
  for (int i = 0; i < 7; ++i)
    s7 += r7.weight[i] * f(mid + half * r7.node[i]);
  double s15 = 0.0;
  for (int i = 0; i < 15; ++i)
    s15 += r15.weight[i] * f(mid + half * r15.node[i]);
  evals += 22;
  s7 *= half;
  s15 *= half;
  return {r, s15, std::fabs(s15 - s7), depth};
}

template <class F>
OracleResult adaptive_1d(const F& f, Interval range,
                         const QuadratureSpec& spec) {
  check_spec(spec);
  if (!(range.hi > range.lo))
    throw DomainError("integrate_1d: empty or reversed interval");

  std::vector<Segment> segs;
  std::priority_queue<QueueEntry> queue;
  std::int64_t evals = 0;

  segs.push_back(eval_segment(f, range, 0, evals));
  queue.push({segs[0].err, 0});
  double value = segs[0].i15;
  double error = segs[0].err;

  while (!queue.empty()) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    // Always refine at least once: a lone coarse/fine agreement on the
    // whole interval is not trusted.
    if (error <= tol && segs.size() > 1) break;
    if (segs.size() >= kMaxPanels) break;
    const QueueEntry top = queue.top();
    queue.pop();
    const Segment parent = segs[top.idx];
    if (parent.depth >= spec.max_subdivisions)
      continue; // not refinable; it stays in the result as-is
    segs[top.idx].in_result = false;
    value -= parent.i15;
    error -= parent.err;
    const double mid = 0.5 * (parent.range.lo + parent.range.hi);
    const Interval halves[2] = {{parent.range.lo, mid},
                                {mid, parent.range.hi}};
    for (const Interval& h : halves) {
      Segment child = eval_segment(f, h, parent.depth + 1, evals);
      value += child.i15;
      error += child.err;
      queue.push({child.err, segs.size()});
      segs.push_back(child);
    }
  }

  // Deterministic final accumulation: sum surviving segments in insertion
  // order.
  OracleResult result{0.0, 0.0, evals};
  for (const Segment& s : segs) {
    if (!s.in_result) continue;
    result.value += s.i15;
    result.error_estimate += s.err;
  }
  const double tol =
      std::max(spec.abs_tol, spec.rel_tol * std::fabs(result.value));
  if (result.error_estimate > tol)
    throw ToleranceNotMetError(
        "integrate_1d: tolerance not met at subdivision cap", result);
  return result;
}

// ---------------------------------------------------------------------------
// 2-D engine

struct Panel {
  Rect rect;
  double i15;
  double err;
  double rough_u; // curvature of the u-marginal, drives split direction
  double rough_v;
  int depth_u;
  int depth_v;
  bool in_result = true;
};

template <class F>
Panel eval_panel(const F& f, Rect r, int du, int dv, std::int64_t& evals) {
  const double mu = 0.5 * (r.u.lo + r.u.hi), hu = 0.5 * (r.u.hi - r.u.lo);
  const double mv = 0.5 * (r.v.lo + r.v.hi), hv = 0.5 * (r.v.hi - r.v.lo);
  const auto& r7 = rule7();
  const auto& r15 = rule15();

  std::array<std::array<double, 15>, 15> grid;
  for (int i = 0; i < 15; ++i) {
    const double u = mu + hu * r15.node[i];
    for (int j = 0; j < 15; ++j) grid[i][j] = f(u, mv + hv * r15.node[j]);
  }
  double s7 = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double u = mu + hu * r7.node[i];
    double row = 0.0;
    for (int j = 0; j < 7; ++j)
      row += r7.weight[j] * f(u, mv + hv * r7.node[j]);
    s7 += r7.weight[i] * row;
  }
  evals += 274;

  std::array<double, 15> marg_u{}, marg_v{};
  double s15 = 0.0;
  for (int i = 0; i < 15; ++i) {
    double row = 0.0;
    for (int j = 0; j < 15; ++j) {
      row += r15.weight[j] * grid[i][j];
      marg_v[j] += r15.weight[i] * grid[i][j];
    }
    marg_u[i] = row;
    s15 += r15.weight[i] * row;
  }

  const auto roughness = [](const std::array<double, 15>& m) {
    double rough = 0.0;
    for (int i = 1; i < 14; ++i)
      rough += std::fabs(m[i + 1] - 2.0 * m[i] + m[i - 1]);
    return rough;
  };

  Panel p{};
  p.rect = r;
  p.i15 = s15 * hu * hv;
  p.err = std::fabs(s15 - s7) * hu * hv;
  p.rough_u = roughness(marg_u);
  p.rough_v = roughness(marg_v);
  p.depth_u = du;
  p.depth_v = dv;
  return p;
}

template <class F>
OracleResult adaptive_2d(const F& f, Rect region,
                         const QuadratureSpec& spec) {
  check_spec(spec);
  if (!(region.u.hi > region.u.lo) || !(region.v.hi > region.v.lo))
    throw DomainError("integrate_2d: empty or reversed region");

  std::vector<Panel> panels;
  std::priority_queue<QueueEntry> queue;
  std::int64_t evals = 0;

  panels.push_back(eval_panel(f, region, 0, 0, evals));
  queue.push({panels[0].err, 0});
  double value = panels[0].i15;
  double error = panels[0].err;

  while (!queue.empty()) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    // Always refine at least once: a lone coarse/fine agreement on the
    // whole region is not trusted.
    if (error <= tol && panels.size() > 1) break;
    if (panels.size() >= kMaxPanels) break;
    const QueueEntry top = queue.top();
    queue.pop();
    const Panel parent = panels[top.idx];

    // Split the axis whose marginal is rougher; both when comparable.
    bool split_u = parent.rough_u > 2.0 * parent.rough_v;
    bool split_v = parent.rough_v > 2.0 * parent.rough_u;
    if (!split_u && !split_v) split_u = split_v = true;
    if (parent.depth_u >= spec.max_subdivisions) split_u = false;
    if (parent.depth_v >= spec.max_subdivisions) split_v = false;
    if (!split_u && !split_v)
      continue; // not refinable; it stays in the result as-is

    panels[top.idx].in_result = false;
    value -= parent.i15;
    error -= parent.err;

    const Rect& r = parent.rect;
    const double mu = 0.5 * (r.u.lo + r.u.hi);
    const double mv = 0.5 * (r.v.lo + r.v.hi);
    std::array<Rect, 4> child_rect;
    int n_children = 0;
    if (split_u && split_v) {
      child_rect = {Rect{{r.u.lo, mu}, {r.v.lo, mv}},
                    Rect{{r.u.lo, mu}, {mv, r.v.hi}},
                    Rect{{mu, r.u.hi}, {r.v.lo, mv}},
                    Rect{{mu, r.u.hi}, {mv, r.v.hi}}};
      n_children = 4;
    } else if (split_u) {
      child_rect[0] = {{r.u.lo, mu}, r.v};
      child_rect[1] = {{mu, r.u.hi}, r.v};
      n_children = 2;
    } else {
      child_rect[0] = {r.u, {r.v.lo, mv}};
      child_rect[1] = {r.u, {mv, r.v.hi}};
      n_children = 2;
    }
    const int cdu = parent.depth_u + (split_u ? 1 : 0);
    const int cdv = parent.depth_v + (split_v ? 1 : 0);
    for (int k = 0; k < n_children; ++k) {
      Panel child = eval_panel(f, child_rect[k], cdu, cdv, evals);
      value += child.i15;
      error += child.err;
      queue.push({child.err, panels.size()});
      panels.push_back(child);
    }
  }

  OracleResult result{0.0, 0.0, evals};
  for (const Panel& p : panels) {
    if (!p.in_result) continue;
    result.value += p.i15;
    result.error_estimate += p.err;
  }
  const double tol =
      std::max(spec.abs_tol, spec.rel_tol * std::fabs(result.value));
  if (result.error_estimate > tol)
    throw ToleranceNotMetError(
        "integrate_2d: tolerance not met at subdivision cap", result);
  return result;
}

// Runs a symmetric surface integrand either over one octant (times eight)
// or over the full chart.
template <class F>
OracleResult surface_integral(const F& f, AngularDomain domain,
                              const QuadratureSpec& spec) {
  if (domain == AngularDomain::octant) {
    OracleResult r = adaptive_2d(f, {{0.0, kPi / 2}, {0.0, kPi / 2}}, spec);
    r.value *= 8.0;
    r.error_estimate *= 8.0;
    return r;
  }
  return adaptive_2d(f, {{0.0, kPi}, {0.0, 2.0 * kPi}}, spec);
}

} // namespace

OracleResult integrate_1d(const std::function<double(double)>& f,
                          Interval range, const QuadratureSpec& spec) {
  return adaptive_1d(f, range, spec);
}

OracleResult integrate_2d(const std::function<double(double, double)>& f,
                          Rect region, const QuadratureSpec& spec) {
  return adaptive_2d(f, region, spec);
}

OracleResult area_by_eq_s(const Ellipsoid& e, const QuadratureSpec& spec,
                          AngularDomain domain) {
  const double a = e.a(), b = e.b(), c = e.c();
  const auto f = [a, b, c](double th, double ph) {
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    return std::sqrt(b * b * c * c * ct * ct +
                     st * st * (c * c * a * a * cp * cp +
                                a * a * b * b * sp * sp)) *
           st;
  };
  return surface_integral(f, domain, spec);
}

OracleResult area_by_eq_ss(const Ellipsoid& e, const QuadratureSpec& spec,
                           AngularDomain domain) {
  if (e.is_degenerate())
    throw DegenerateShapeError(
        "area_by_eq_ss: all semi-axes must be positive");
  const double a2 = e.a() * e.a(), b2 = e.b() * e.b(), c2 = e.c() * e.c();
  const auto f = [a2, b2, c2](double th, double ph) {
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    const double q2 = b2 * c2 * ct * ct +
                      st * st * (c2 * a2 * cp * cp + a2 * b2 * sp * sp);
    const double q4 =
        b2 * b2 * c2 * c2 * ct * ct +
        st * st * (c2 * c2 * a2 * a2 * cp * cp + a2 * a2 * b2 * b2 * sp * sp);
    return a2 * b2 * c2 * std::sqrt(q4) / (q2 * q2) * st;
  };
  return surface_integral(f, domain, spec);
}

OracleResult area_by_eq_seta(const Ellipsoid& e,
                             const QuadratureSpec& spec) {
  const double a = e.a(), b = e.b(), c = e.c();
  if (!(a > b && b > c && c > 0.0))
    throw NonTriaxialError("area_by_eq_seta: needs strictly ordered axes "
                           "a > b > c > 0");
  const double top = (a / c) * (a / c);    // upper limit a^2/c^2
  const double bottom = (a / b) * (a / b); // lower limit a^2/b^2
  // After eta = top - (top - bottom) sin^2 tau both inverse-square-root
  // endpoint factors cancel against d eta, leaving a smooth integrand.
  const auto f = [top, bottom](double tau) {
    const double s = std::sin(tau);
    const double eta = top - (top - bottom) * s * s;
    const double w = eta - 1.0;
    double g; // atan(sqrt(w)) / sqrt(w)
    if (w < 1e-8) {
      g = 1.0 - w / 3.0 + w * w / 5.0;
    } else {
      const double rw = std::sqrt(w);
      g = std::atan(rw) / rw;
    }
    return 2.0 * eta * g;
  };
  OracleResult r = adaptive_1d(f, {0.0, kPi / 2}, spec);
  r.value = 2.0 * kPi * b * c + 2.0 * b * c * r.value;
  r.error_estimate *= 2.0 * b * c;
  return r;
}

OracleResult mean_inverse_radius_identity(const Ellipsoid& e,
                                          const QuadratureSpec& spec,
                                          AngularDomain domain) {
  if (e.is_degenerate())
    throw DegenerateShapeError(
        "mean_inverse_radius_identity: all semi-axes must be positive");
  const double abc = e.a() * e.b() * e.c();
  const auto f = [&e](double th, double ph) {
    return std::sin(th) / radius_central(e, th, ph);
  };
  OracleResult r = surface_integral(f, domain, spec);
  r.value *= abc;
  r.error_estimate *= abc;
  return r;
}

OracleResult r3_over_h_identity(const Ellipsoid& e,
                                const QuadratureSpec& spec,
                                AngularDomain domain) {
  if (e.is_degenerate())
    throw DegenerateShapeError(
        "r3_over_h_identity: all semi-axes must be positive");
  const auto f = [&e](double th, double ph) {
    const double r = radius_central(e, th, ph);
    return r * r * r / support_height_central(e, th, ph) * std::sin(th);
  };
  return surface_integral(f, domain, spec);
}

OracleResult ellipse_ratio_identity(double a, double b,
                                    const QuadratureSpec& spec) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0) || a < b)
    throw DomainError("ellipse_ratio_identity: need a >= b > 0");
  // a b / R(Ph) = sqrt(b^2 cos^2 Ph + a^2 sin^2 Ph); quarter symmetry.
  const auto f = [a, b](double ph) {
    const double sp = std::sin(ph), cp = std::cos(ph);
    return std::sqrt(b * b * cp * cp + a * a * sp * sp);
  };
  OracleResult r = adaptive_1d(f, {0.0, kPi / 2}, spec);
  r.value *= 4.0;
  r.error_estimate *= 4.0;
  return r;
}

} // namespace ellipsoid
