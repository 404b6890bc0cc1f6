// Command-line front end: closed-form areas, curvature reports, umbilics,
// batch classification and the randomized identity-verification suite.
//
// Exit codes: 0 ok, 2 usage or invalid input, 3 verification failure.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "ellipsoid/area.hpp"
#include "ellipsoid/curvature.hpp"
#include "ellipsoid/ellipsoid.hpp"
#include "ellipsoid/errors.hpp"
#include "ellipsoid/quadrature.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Output rows: flat ordered key/value lists rendered as human text, JSON or
// CSV.  Machine formats print 17 significant digits, human 12.

struct Indeterminate {};
using Cell = std::variant<double, std::int64_t, std::string, Indeterminate>;
using Row = std::vector<std::pair<std::string, Cell>>;

enum class Format { human, json, csv };

std::string fmt_double(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string cell_text(const Cell& c, int digits) {
  if (std::holds_alternative<double>(c))
    return fmt_double(std::get<double>(c), digits);
  if (std::holds_alternative<std::int64_t>(c))
    return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "indet.";
}

std::string cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) return "null";
    return fmt_double(v, 17);
  }
  if (std::holds_alternative<std::int64_t>(c))
    return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<std::string>(c))
    return "\"" + std::get<std::string>(c) + "\"";
  return "null";
}

void print_json(const std::vector<Row>& rows, bool as_array) {
  const auto print_row = [](const Row& row, const char* indent) {
    std::string out = std::string(indent) + "{";
    bool first = true;
    for (const auto& [key, cell] : row) {
      if (!first) out += ", ";
      first = false;
      out += "\"" + key + "\": " + cell_json(cell);
    }
    out += "}";
    std::fputs(out.c_str(), stdout);
  };
  if (!as_array) {
    print_row(rows.front(), "");
    std::fputs("\n", stdout);
    return;
  }
  std::fputs("[\n", stdout);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    print_row(rows[i], "  ");
    std::fputs(i + 1 < rows.size() ? ",\n" : "\n", stdout);
  }
  std::fputs("]\n", stdout);
}

void print_csv(const std::vector<Row>& rows) {
  if (rows.empty()) return;
  std::string header;
  for (const auto& [key, cell] : rows.front()) {
    if (!header.empty()) header += ",";
    header += key;
  }
  std::fputs((header + "\n").c_str(), stdout);
  for (const Row& row : rows) {
    std::string line;
    for (const auto& [key, cell] : row) {
      if (!line.empty()) line += ",";
      line += cell_text(cell, 17);
    }
    std::fputs((line + "\n").c_str(), stdout);
  }
}

void print_human_record(const Row& row) {
  std::size_t width = 0;
  for (const auto& [key, cell] : row) width = std::max(width, key.size());
  for (const auto& [key, cell] : row) {
    std::string line = key;
    line.resize(width + 2, ' ');
    line += cell_text(cell, 12);
    std::fputs((line + "\n").c_str(), stdout);
  }
}

void print_human_table(const std::vector<Row>& rows) {
  if (rows.empty()) return;
  const std::size_t ncol = rows.front().size();
  std::vector<std::size_t> width(ncol);
  for (std::size_t j = 0; j < ncol; ++j)
    width[j] = rows.front()[j].first.size();
  std::vector<std::vector<std::string>> cells;
  for (const Row& row : rows) {
    std::vector<std::string> line;
    for (std::size_t j = 0; j < ncol; ++j) {
      line.push_back(cell_text(row[j].second, 12));
      width[j] = std::max(width[j], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  const auto pad = [](const std::string& s, std::size_t w) {
    std::string out = s;
    out.resize(w, ' ');
    return out;
  };
  std::string header;
  for (std::size_t j = 0; j < ncol; ++j)
    header += pad(rows.front()[j].first, width[j]) + (j + 1 < ncol ? "  " : "");
  std::fputs((header + "\n").c_str(), stdout);
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t j = 0; j < ncol; ++j)
      text += pad(line[j], width[j]) + (j + 1 < ncol ? "  " : "");
    while (!text.empty() && text.back() == ' ') text.pop_back();
    std::fputs((text + "\n").c_str(), stdout);
  }
}

void print_rows(const std::vector<Row>& rows, Format fmt, bool tabular) {
  switch (fmt) {
    case Format::json:
      print_json(rows, tabular);
      break;
    case Format::csv:
      print_csv(rows);
      break;
    case Format::human:
      if (tabular)
        print_human_table(rows);
      else
        print_human_record(rows.front());
      break;
  }
}

// ---------------------------------------------------------------------------
// Worker pool: bounded by ELLIPSOID_GEOM_THREADS (0 or unset = auto).
// Results are indexed by input position, so output order never depends on
// scheduling.

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("ELLIPSOID_GEOM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
  }
  return std::max(1u, n);
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        fn(i);
    });
  for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------

std::string permutation_text(const ellipsoid::Ellipsoid& e) {
  const auto& p = e.permutation();
  return std::to_string(p[0] + 1) + "," + std::to_string(p[1] + 1) + "," +
         std::to_string(p[2] + 1);
}

Cell m_cell(const std::optional<double>& m) {
  if (m) return *m;
  return Indeterminate{};
}

Row shape_row(const ellipsoid::Ellipsoid& e) {
  using namespace ellipsoid;
  Row row;
  row.emplace_back("a", e.a());
  row.emplace_back("b", e.b());
  row.emplace_back("c", e.c());
  row.emplace_back("shape_class", std::string(to_string(classify(e))));
  if (!e.is_point()) {
    const ShapeParams sp = shape_params(e);
    row.emplace_back("e", sp.e);
    row.emplace_back("m", m_cell(sp.m));
    row.emplace_back("b_star", sp.b_star);
    row.emplace_back("m_star", sp.m_star);
    row.emplace_back("gamma", sp.gamma ? Cell(*sp.gamma) : Cell(Indeterminate{}));
  } else {
    row.emplace_back("e", Indeterminate{});
    row.emplace_back("m", Indeterminate{});
    row.emplace_back("b_star", Indeterminate{});
    row.emplace_back("m_star", Indeterminate{});
    row.emplace_back("gamma", Indeterminate{});
  }
  row.emplace_back("surface_area", surface_area(e));
  return row;
}

// ---------------------------------------------------------------------------
// area

int cmd_area(double a, double b, double c, bool verify, double tol,
             double quad_tol, Format fmt) {
  using namespace ellipsoid;
  const Ellipsoid e(a, b, c);
  const double area = surface_area(e);
  const double vol = volume(e);

  Row row;
  row.emplace_back("a", e.a());
  row.emplace_back("b", e.b());
  row.emplace_back("c", e.c());
  row.emplace_back("axis_permutation", permutation_text(e));
  row.emplace_back("shape_class", std::string(to_string(classify(e))));
  if (!e.is_point()) {
    const ShapeParams sp = shape_params(e);
    row.emplace_back("e", sp.e);
    row.emplace_back("m", m_cell(sp.m));
  } else {
    row.emplace_back("e", Indeterminate{});
    row.emplace_back("m", Indeterminate{});
  }
  row.emplace_back("surface_area", area);
  row.emplace_back("volume", vol);
  row.emplace_back("area_volume_ratio", vol > 0.0
                                            ? Cell(area / vol)
                                            : Cell(Indeterminate{}));

  bool failed = false;
  if (verify) {
    QuadratureSpec spec;
    spec.rel_tol = quad_tol;
    const OracleResult oracle = area_by_eq_s(e, spec);
    const double scale = std::max(std::fabs(area), std::fabs(oracle.value));
    const double deviation =
        scale > 0.0 ? std::fabs(area - oracle.value) / scale : 0.0;
    row.emplace_back("oracle_area", oracle.value);
    row.emplace_back("oracle_error_estimate", oracle.error_estimate);
    row.emplace_back("oracle_evaluations", oracle.evaluations);
    row.emplace_back("relative_deviation", deviation);
    row.emplace_back("verify_tol", tol);
    failed = deviation > tol;
    row.emplace_back("verify", std::string(failed ? "fail" : "pass"));
  }

  print_rows({row}, fmt, false);
  return failed ? kExitVerifyFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// curvature

int cmd_curvature(double a, double b, double c, double theta, double phi,
                  Format fmt) {
  using namespace ellipsoid;
  const Ellipsoid e(a, b, c);
  if (e.is_degenerate())
    throw DegenerateShapeError("curvature: all semi-axes must be positive");
  const SurfacePoint p{theta, phi};

  Row row;
  row.emplace_back("a", e.a());
  row.emplace_back("b", e.b());
  row.emplace_back("c", e.c());
  row.emplace_back("axis_permutation", permutation_text(e));
  row.emplace_back("theta", theta);
  row.emplace_back("phi", phi);

  const double radius = radius_eccentric(e, p);
  const double height = support_height_eccentric(e, p);
  row.emplace_back("radius", radius);
  row.emplace_back("height", height);

  const FundamentalForms f = fundamental_forms(e, p);
  row.emplace_back("u", f.U);
  row.emplace_back("v", f.V);
  row.emplace_back("w", f.W);
  row.emplace_back("kappa", f.kappa);
  row.emplace_back("lambda", f.lambda);
  row.emplace_back("mu", f.mu);

  const bool pole = std::sin(theta) < 1e-12;
  if (pole) {
    // Chart poles are the +-a axis endpoints; the closed sum/product forms
    // are chart free, and the principal directions are the other two axes.
    const auto chi = curvatures_from_invariants(e, radius, height);
    row.emplace_back("chi1", chi[0]);
    row.emplace_back("chi2", chi[1]);
    row.emplace_back("mean_curvature", 0.5 * (chi[0] + chi[1]));
    row.emplace_back("gaussian_curvature", chi[0] * chi[1]);
    row.emplace_back("dir1_x", 0.0);
    row.emplace_back("dir1_y", 0.0);
    row.emplace_back("dir1_z", 1.0);
    row.emplace_back("dir2_x", 0.0);
    row.emplace_back("dir2_y", 1.0);
    row.emplace_back("dir2_z", 0.0);
    row.emplace_back("umbilic", std::string(
        chi[0] - chi[1] <= kUmbilicGap * chi[0] ? "yes" : "no"));
    row.emplace_back("note",
                     std::string("chart pole: curvatures from the "
                                 "axis-endpoint closed forms"));
    print_rows({row}, fmt, false);
    return kExitOk;
  }

  const CurvatureReport rep = principal_curvatures(e, p);
  row.emplace_back("chi1", rep.chi1);
  row.emplace_back("chi2", rep.chi2);
  row.emplace_back("mean_curvature", rep.mean);
  row.emplace_back("gaussian_curvature", rep.gaussian);
  row.emplace_back("dir1_x", rep.dir1[0]);
  row.emplace_back("dir1_y", rep.dir1[1]);
  row.emplace_back("dir1_z", rep.dir1[2]);
  row.emplace_back("dir2_x", rep.dir2[0]);
  row.emplace_back("dir2_y", rep.dir2[1]);
  row.emplace_back("dir2_z", rep.dir2[2]);
  row.emplace_back("umbilic", std::string(rep.umbilic ? "yes" : "no"));

  // Cross-check of the eigenproblem against the chart-free forms.
  const double sum_closed = curvature_sum(e, radius, height);
  const double prod_closed = curvature_product(e, height);
  row.emplace_back("sum_check_residual",
                   std::fabs(rep.chi1 + rep.chi2 - sum_closed) / sum_closed);
  row.emplace_back("product_check_residual",
                   std::fabs(rep.chi1 * rep.chi2 - prod_closed) / prod_closed);

  print_rows({row}, fmt, false);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// umbilics

int cmd_umbilics(double a, double b, double c, Format fmt) {
  using namespace ellipsoid;
  const Ellipsoid e(a, b, c);
  const UmbilicSet u = umbilics(e);
  std::vector<Row> rows;
  for (const Vec3& pt : u.points) {
    Row row;
    row.emplace_back("x", pt[0]);
    row.emplace_back("y", pt[1]);
    row.emplace_back("z", pt[2]);
    row.emplace_back("radius", u.radius);
    row.emplace_back("height", u.height);
    row.emplace_back("curvature", u.curvature);
    rows.push_back(std::move(row));
  }
  print_rows(rows, fmt, true);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify (batch file)

int cmd_classify(const std::string& path, Format fmt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitUsage;
  }
  struct Triple {
    double a, b, c;
  };
  std::vector<Triple> triples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    double a, b, c;
    if (!(ls >> a)) continue; // blank line
    if (!(ls >> b >> c)) {
      std::cerr << "error: line " << line_no
                << ": expected three semi-axes\n";
      return kExitUsage;
    }
    std::string extra;
    if (ls >> extra) {
      std::cerr << "error: line " << line_no << ": trailing data '" << extra
                << "'\n";
      return kExitUsage;
    }
    if (!(a >= 0.0) || !(b >= 0.0) || !(c >= 0.0) || !std::isfinite(a) ||
        !std::isfinite(b) || !std::isfinite(c)) {
      std::cerr << "error: line " << line_no
                << ": semi-axes must be finite and non-negative\n";
      return kExitUsage;
    }
    triples.push_back({a, b, c});
  }

  std::vector<Row> rows(triples.size());
  parallel_for(triples.size(), [&](std::size_t i) {
    rows[i] = shape_row(ellipsoid::Ellipsoid(triples[i].a, triples[i].b,
                                             triples[i].c));
  });
  print_rows(rows, fmt, true);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table: the built-in taxonomy samples

int cmd_table(Format fmt) {
  std::vector<Row> rows;
  for (const auto& s : ellipsoid::shape_class_samples()) {
    Row row = shape_row(ellipsoid::Ellipsoid(s.a, s.b, s.c));
    row.insert(row.begin(), {"name", std::string(s.name)});
    rows.push_back(std::move(row));
  }
  print_rows(rows, fmt, true);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: randomized identity suite

// Uniform double in [0,1) from the top 53 bits, so the stream does not
// depend on the standard library's distribution implementation.
double uniform01(std::uint64_t raw) {
  return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

ellipsoid::Ellipsoid random_ellipsoid(SplitMix64& rng) {
  // Log-uniform axis ratios in [1e-3, 1] against a unit major axis.
  const double r1 = std::pow(10.0, -3.0 * uniform01(rng.next()));
  const double r2 = std::pow(10.0, -3.0 * uniform01(rng.next()));
  return ellipsoid::Ellipsoid(1.0, std::max(r1, r2), std::min(r1, r2));
}

struct IdentityStat {
  std::string name;
  double worst = 0.0;
  std::array<double, 3> worst_axes{};
  void update(double dev, const ellipsoid::Ellipsoid& e) {
    if (dev >= worst) {
      worst = dev;
      worst_axes = {e.a(), e.b(), e.c()};
    }
  }
};

int cmd_verify(std::uint64_t seed, int cases, double tol, double quad_tol,
               Format fmt) {
  using namespace ellipsoid;
  QuadratureSpec spec;
  spec.rel_tol = quad_tol;

  std::vector<Ellipsoid> shapes;
  SplitMix64 rng{seed};
  shapes.reserve(cases);
  for (int i = 0; i < cases; ++i) shapes.push_back(random_ellipsoid(rng));

  enum {
    kEqS,
    kEqSs,
    kEqSeta,
    kMeanInvR,
    kR3OverH,
    kEllipseRatio,
    kGaussBonnet,
    kIdentityCount
  };
  std::vector<IdentityStat> stats(kIdentityCount);
  stats[kEqS].name = "closed_vs_eq_s";
  stats[kEqSs].name = "closed_vs_eq_ss";
  stats[kEqSeta].name = "closed_vs_eq_seta";
  stats[kMeanInvR].name = "mean_inverse_radius";
  stats[kR3OverH].name = "r3_over_h";
  stats[kEllipseRatio].name = "ellipse_ratio";
  stats[kGaussBonnet].name = "gauss_bonnet";

  std::vector<std::array<double, kIdentityCount>> devs(
      shapes.size(), std::array<double, kIdentityCount>{});

  parallel_for(shapes.size(), [&](std::size_t i) {
    const Ellipsoid& e = shapes[i];
    const double closed = surface_area(e);
    auto rel = [closed](double v) { return std::fabs(v - closed) / closed; };
    auto& d = devs[i];
    d[kEqS] = rel(area_by_eq_s(e, spec).value);
    d[kEqSs] = rel(area_by_eq_ss(e, spec).value);
    const ShapeClass cls = classify(e);
    d[kEqSeta] = (cls == ShapeClass::GeneralProlate ||
                  cls == ShapeClass::GeneralSpheroid ||
                  cls == ShapeClass::GeneralOblate)
                     ? rel(area_by_eq_seta(e, spec).value)
                     : 0.0;
    d[kMeanInvR] = rel(mean_inverse_radius_identity(e, spec).value);
    d[kR3OverH] = rel(r3_over_h_identity(e, spec).value);
    const double perimeter = ellipse_perimeter(e.a(), e.b());
    d[kEllipseRatio] =
        std::fabs(ellipse_ratio_identity(e.a(), e.b(), spec).value -
                  perimeter) /
        perimeter;
    d[kGaussBonnet] =
        std::fabs(gauss_bonnet_total(e, spec) - 4.0 * kPi) / (4.0 * kPi);
  });

  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (int k = 0; k < kIdentityCount; ++k)
      stats[k].update(devs[i][k], shapes[i]);

  std::vector<Row> rows;
  bool failed = false;
  for (const auto& s : stats) {
    const bool pass = s.worst <= tol;
    failed = failed || !pass;
    Row row;
    row.emplace_back("identity", s.name);
    row.emplace_back("cases", static_cast<std::int64_t>(cases));
    row.emplace_back("max_deviation", s.worst);
    row.emplace_back("tol", tol);
    row.emplace_back("worst_a", s.worst_axes[0]);
    row.emplace_back("worst_b", s.worst_axes[1]);
    row.emplace_back("worst_c", s.worst_axes[2]);
    row.emplace_back("status", std::string(pass ? "pass" : "FAIL"));
    rows.push_back(std::move(row));
  }
  print_rows(rows, fmt, true);
  if (failed) {
    std::cerr << "verification failed: deviation above tolerance " << tol
              << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return Format::human;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triaxial ellipsoid geometry: closed-form surface area, "
               "curvature, and self-verifying quadrature oracles"};
  app.require_subcommand(1);

  std::string format = "human";
  double a = 0, b = 0, c = 0, theta = 0, phi = 0;
  bool verify_flag = false;
  double tol = 1e-8, quad_tol = 1e-10;
  std::string batch_path;
  std::uint64_t seed = 1906;
  int cases = 50;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: human|json|csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
  };

  CLI::App* area_cmd =
      app.add_subcommand("area", "Surface area, volume and shape class");
  area_cmd->add_option("a", a, "First semi-axis")->required();
  area_cmd->add_option("b", b, "Second semi-axis")->required();
  area_cmd->add_option("c", c, "Third semi-axis")->required();
  area_cmd->add_flag("--verify", verify_flag,
                     "Also run the surface-integral oracle");
  area_cmd->add_option("--tol", tol, "Verification tolerance (relative)");
  area_cmd->add_option("--quad-tol", quad_tol,
                       "Quadrature relative tolerance");
  add_format(area_cmd);

  CLI::App* curv_cmd = app.add_subcommand(
      "curvature", "Fundamental forms and principal curvatures at a point");
  curv_cmd->add_option("a", a, "First semi-axis")->required();
  curv_cmd->add_option("b", b, "Second semi-axis")->required();
  curv_cmd->add_option("c", c, "Third semi-axis")->required();
  curv_cmd->add_option("theta", theta, "Eccentric anomaly in [0, pi]")
      ->required();
  curv_cmd->add_option("phi", phi, "Eccentric anomaly in [0, 2 pi)")
      ->required();
  add_format(curv_cmd);

  CLI::App* umb_cmd =
      app.add_subcommand("umbilics", "The four umbilical points");
  umb_cmd->add_option("a", a, "First semi-axis")->required();
  umb_cmd->add_option("b", b, "Second semi-axis")->required();
  umb_cmd->add_option("c", c, "Third semi-axis")->required();
  add_format(umb_cmd);

  CLI::App* cls_cmd = app.add_subcommand(
      "classify", "Classify a batch file of 'a b c' lines");
  cls_cmd->add_option("file", batch_path, "Input file")->required();
  add_format(cls_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Randomized verification of every integral identity");
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--cases", cases, "Number of random ellipsoids")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--tol", tol, "Pass tolerance (relative)");
  verify_cmd->add_option("--quad-tol", quad_tol,
                         "Quadrature relative tolerance");
  add_format(verify_cmd);

  CLI::App* table_cmd =
      app.add_subcommand("table", "Built-in taxonomy examples");
  add_format(table_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const Format fmt = parse_format(format);
  try {
    if (area_cmd->parsed())
      return cmd_area(a, b, c, verify_flag, tol, quad_tol, fmt);
    if (curv_cmd->parsed()) return cmd_curvature(a, b, c, theta, phi, fmt);
    if (umb_cmd->parsed()) return cmd_umbilics(a, b, c, fmt);
    if (cls_cmd->parsed()) return cmd_classify(batch_path, fmt);
    if (verify_cmd->parsed())
      return cmd_verify(seed, cases, tol, quad_tol, fmt);
    if (table_cmd->parsed()) return cmd_table(fmt);
  } catch (const ellipsoid::NonTriaxialError& e) {
    std::cerr << "error: " << e.what()
              << " (no isolated umbilics for shapes of revolution)\n";
    return kExitUsage;
  } catch (const ellipsoid::ToleranceNotMetError& e) {
    std::cerr << "error: " << e.what()
              << " (best estimate " << e.best_estimate.value << ")\n";
    return kExitVerifyFailed;
  } catch (const ellipsoid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
