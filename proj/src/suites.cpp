#include "minkq/suites.hpp"

#include <algorithm>
#include <cmath>

#include "minkq/discretization.hpp"
#include "minkq/error.hpp"
#include "minkq/extremal.hpp"
#include "minkq/lower_dim.hpp"
#include "minkq/metric_graph.hpp"

namespace minkq {

namespace {

// FNV-1a, so that stream ids do not depend on std::hash
std::uint64_t stream_id(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double rel(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

SuiteCase mixvol_case(Rng& rng) {
  const auto k = draw_hull(rng);
  const auto l = draw_hull(rng);
  const auto m = draw_hull(rng);
  const double e = rel(mixed_volume(k, l, m), mixed_volume_via_measure(SupportEvaluator(k), l, m));
  return {0, 0, e <= 1e-9, e};
}

SuiteCase form_case(Rng& rng) {
  const auto k = draw_hull(rng);
  const auto l = draw_hull(rng);
  const auto m = draw_hull(rng);
  const double fv = form_value(build_graph(m), SupportEvaluator(k), SupportEvaluator(l), 1e-10);
  const double e = rel(fv, mixed_volume(k, l, m));
  return {0, 0, e <= 1e-6, e};
}

SuiteCase graph_case(Rng& rng) {
  const auto m = draw_hull(rng).centered();
  const auto g = build_graph(m);
  const auto meas = sbm_and_mu(g);
  const double mu_err = rel(meas.mu.total_mass(), 2.0 * meas.sbm.total_mass());
  const auto radii = enclosing_radii(m);
  const auto st = structural_checks(g, radii.r, radii.R);
  const bool pass = mu_err <= 1e-12 && st.ok() && g.connected();
  return {0, 0, pass, st.worst_balance};
}

SuiteCase certify_case(Rng& rng) {
  const auto k = draw_hull(rng);
  const auto l = draw_hull(rng);
  const auto m = draw_hull(rng);
  const auto cert = certify_equality_fulldim(k, l, m, 1e-12);
  return {0, 0, certificate_consistent(cert), cert.relative_deficit()};
}

// one (K, L) pair against ten centered M drawn from a shared stream
SuiteCase stability_case(Rng& rng, std::uint64_t seed) {
  const auto k = draw_hull(rng);
  const auto l = draw_hull(rng);
  bool pass = true;
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 10; ++j) {
    Rng mr(instance_seed("stability-M", seed, j));
    const auto m = draw_hull(mr).centered();
    const auto rep = weak_stability_check(k, l, m);
    pass = pass && rep.check.holds;
    worst = std::min(worst, rep.check.margin() / rep.check.scale);
  }
  return {0, 0, pass, worst};
}

SuiteCase rigidity_case(Rng& rng) {
  const auto k = draw_hull(rng);
  const auto l = draw_hull(rng);
  const auto m = draw_hull(rng).centered();
  const auto rep = rigidity_check(k, l, m);
  return {0, 0, rep.check.holds, rep.check.margin() / rep.check.scale};
}

SuiteCase classical_case(Rng& rng) {
  const auto k = draw_hull(rng);
  const auto c = classical_functionals(k);
  const double a = c.surface_area * c.surface_area;
  const double b = 6.0 * M_PI * c.mean_width * c.volume;
  const double d = M_PI * c.mean_width * c.mean_width;
  const bool pass = a >= b - 1e-9 * std::max(a, b) && d >= c.surface_area - 1e-9 * std::max(d, c.surface_area);
  return {0, 0, pass, std::min((a - b) / a, (d - c.surface_area) / d)};
}

SuiteCase brunn_case(Rng& rng) {
  const auto k = draw_hull(rng);
  const auto l = draw_hull(rng);
  std::vector<double> g;
  for (int i = 0; i <= 10; ++i) {
    const double t = i / 10.0;
    double vol;
    if (i == 0) vol = volume(k);
    else if (i == 10) vol = volume(l);
    else vol = volume(minkowski_sum(k.scaled(1.0 - t), l.scaled(t)));
    g.push_back(std::cbrt(vol));
  }
  const double top = *std::max_element(g.begin(), g.end());
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 1; i < 10; ++i) worst = std::max(worst, g[i - 1] - 2.0 * g[i] + g[i + 1]);
  return {0, 0, worst <= 1e-9 * top, worst / top};
}

SuiteCase poincare_case(Rng& rng) {
  const double l = rng.uniform(0.01, 0.99) * M_PI;
  const double eps = rng.uniform(0.01, 0.99);
  const int n = 2 + rng.below(60);
  std::vector<double> f;
  for (int i = 0; i < n; ++i) f.push_back(rng.normal());
  const double ratio = std::max(std::tan(l / 2.0), 1.0) * (1.0 + rng.uniform(0.0, 3.0));
  const auto rep = edge_poincare_check(f, l, eps, EnclosingRadii{1.0, ratio});
  return {0, 0, rep.holds, rep.lhs - rep.rhs};
}

SuiteCase hyperbolic_case(Rng& rng) {
  // small hulls without very short edges keep the dense matrices modest;
  // rejected draws are redrawn from the same stream
  DiscretizedForm form;
  for (;;) {
    MetricGraph g = build_graph(random_hull(6 + rng.below(5), rng.next()));
    double min_l = M_PI;
    double total = 0.0;
    for (const auto& e : g.edges()) {
      min_l = std::min(min_l, e.length);
      total += e.length;
    }
    const double h = std::min(M_PI / 20.0, min_l / 2.0);
    if (total / h > 1500.0) continue;
    form = assemble(g, h);
    break;
  }
  const int n = form.layout.size;
  bool pass = true;
  double worst = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 1000; ++trial) {
    // constant + linear + noise, so that E(f,f) takes both signs
    Eigen::VectorXd f(n), gv(n);
    const double spread = rng.uniform(0.0, 0.3);
    const double noise = rng.uniform(0.0, 0.3);
    const double c = rng.normal();
    const Vec3 v = rng.in_cube();
    for (int i = 0; i < n; ++i) {
      f[i] = c + v.dot(form.nodes[i]) + noise * rng.normal();
      gv[i] = 1.0 + spread * rng.normal();
    }
    const double fg = f.dot(form.E * gv);
    const double ff = f.dot(form.E * f);
    const double gg = gv.dot(form.E * gv);
    if (!(gg > 0.0)) continue;
    const double lhs = fg * fg;
    const double rhs = ff * gg;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    worst = std::min(worst, (lhs - rhs) / scale);
    if (lhs < rhs - 1e-9 * scale) pass = false;
  }
  return {0, 0, pass, worst};
}

Polytope draw_polygon(Rng& rng) {
  const int count = 3 + rng.below(6);
  std::vector<Vec3> pts;
  for (int i = 0; i < count; ++i) pts.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0);
  return Polytope::hull(pts, false);
}

SuiteCase lowerdim_case(Rng& rng) {
  const auto k = draw_hull(rng);
  const auto l = draw_hull(rng);
  const auto m = draw_polygon(rng);
  const auto cert = certify_equality_lowerdim(k, l, m, UnitVector(0, 0, 1), 1e-12);
  return {0, 0, certificate_consistent(cert), cert.relative_deficit()};
}

const std::vector<std::pair<std::string, std::string>>& registry() {
  static const std::vector<std::pair<std::string, std::string>> r{
      {"mixvol", "polarization vs measure integration; metric = relative difference (<= 1e-9)"},
      {"form", "E(h_K,h_L) vs polarization, quad_tol 1e-10; metric = relative difference (<= 1e-6)"},
      {"graph", "mu total = 2 S_BM total, facet balance, tan(l/2) <= R/r; metric = worst balance"},
      {"certify", "verdict/deficit agreement, full-dimensional M; metric = relative deficit"},
      {"stability", "weak stability against 10 centered M; metric = worst relative margin"},
      {"rigidity", "rigidity inequality; metric = relative margin"},
      {"classical", "S^2 >= 6 pi W V and pi W^2 >= S; metric = worst relative margin"},
      {"brunn", "concavity of Vol^(1/3) on 11 points; metric = worst second difference / max"},
      {"poincare", "single-edge Poincare bounds; metric = lhs - rhs"},
      {"hyperbolic", "reverse Cauchy-Schwarz for the discrete form, 1000 pairs; metric = worst relative margin"},
      {"lowerdim", "verdict/deficit agreement, M a polygon in e3^perp; metric = relative deficit"},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, desc] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::string suite_description(std::string_view suite) {
  for (const auto& [name, desc] : registry()) {
    if (name == suite) return desc;
  }
  fail(ErrorCode::BadParam, "unknown suite '" + std::string(suite) + "'");
}

std::uint64_t instance_seed(std::string_view suite, std::uint64_t seed, int index) {
  return derive_seed(seed, stream_id(suite), static_cast<std::uint64_t>(index));
}

Polytope draw_hull(Rng& rng) {
  const int count = 5 + rng.below(16);
  return random_hull(count, rng.next());
}

SuiteCase run_case(std::string_view suite, std::uint64_t seed, int index) {
  const std::uint64_t s = instance_seed(suite, seed, index);
  Rng rng(s);
  SuiteCase c;
  if (suite == "mixvol") c = mixvol_case(rng);
  else if (suite == "form") c = form_case(rng);
  else if (suite == "graph") c = graph_case(rng);
  else if (suite == "certify") c = certify_case(rng);
  else if (suite == "stability") c = stability_case(rng, seed);
  else if (suite == "rigidity") c = rigidity_case(rng);
  else if (suite == "classical") c = classical_case(rng);
  else if (suite == "brunn") c = brunn_case(rng);
  else if (suite == "poincare") c = poincare_case(rng);
  else if (suite == "hyperbolic") c = hyperbolic_case(rng);
  else if (suite == "lowerdim") c = lowerdim_case(rng);
  else fail(ErrorCode::BadParam, "unknown suite '" + std::string(suite) + "'");
  c.index = index;
  c.seed = s;
  return c;
}

SuiteResult run_suite(std::string_view suite, int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::BadParam, "suite size must be positive");
  suite_description(suite);
  SuiteResult r;
  r.suite = std::string(suite);
  r.seed = seed;
  for (int i = 0; i < n; ++i) {
    r.cases.push_back(run_case(suite, seed, i));
    if (r.cases.back().pass) ++r.passed;
  }
  return r;
}

}  // namespace minkq
