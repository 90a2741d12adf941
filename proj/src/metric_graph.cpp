#include "minkq/metric_graph.hpp"

#include <cmath>
#include <sstream>

#include "minkq/error.hpp"

namespace minkq {

namespace {

constexpr double kTanSlack = 1e-9;
constexpr double kBalanceTol = 1e-9;

}  // namespace

MetricGraph::MetricGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), incidence_(vertices_.size()) {
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto& ed = edges_[e];
    if (ed.from < 0 || ed.to < 0 || ed.from >= static_cast<int>(vertices_.size()) ||
        ed.to >= static_cast<int>(vertices_.size())) {
      fail(ErrorCode::BadParam, "graph edge references a missing vertex");
    }
    if (!(ed.length > 0.0) || !(ed.weight > 0.0)) {
      fail(ErrorCode::BadParam, "graph edges need positive length and weight");
    }
    incidence_[ed.from].push_back(e);
    incidence_[ed.to].push_back(e);
  }
}

Arc MetricGraph::arc(int e) const {
  const auto& ed = edges_[e];
  return Arc{vertices_[ed.from].position, ed.tangent_from, ed.length};
}

double MetricGraph::total_weight() const {
  double s = 0.0;
  for (const auto& e : edges_) s += e.weight;
  return s;
}

bool MetricGraph::connected() const {
  if (vertices_.empty()) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : incidence_[v]) {
      const int w = edges_[e].from == v ? edges_[e].to : edges_[e].from;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (char s : seen) {
    if (!s) return false;
  }
  return true;
}

MetricGraph build_graph(const Polytope& m) {
  if (!m.full_dimensional()) {
    fail(ErrorCode::DegenerateInput,
         "metric graph needs a full-dimensional polytope (use the lower-dimensional path)");
  }
  std::vector<GraphVertex> vertices;
  vertices.reserve(m.facets().size());
  for (int i = 0; i < static_cast<int>(m.facets().size()); ++i) {
    const auto& f = m.facets()[i];
    vertices.push_back({i, f.normal.vec(), f.area});
  }
  std::vector<GraphEdge> edges;
  edges.reserve(m.edges().size());
  for (const auto& e : m.edges()) {
    const Vec3& a = vertices[e.facet_a].position;
    const Vec3& b = vertices[e.facet_b].position;
    const double l = angle_between(a, b);
    if (!(l > 0.0 && l < M_PI)) {
      std::ostringstream os;
      os << "graph edge length " << l << " outside (0, pi)";
      fail(ErrorCode::NumericalFailure, os.str());
    }
    const Vec3 ta = (b - std::cos(l) * a).normalized();
    const Vec3 tb = (a - std::cos(l) * b).normalized();
    edges.push_back({e.facet_a, e.facet_b, l, e.length, ta, tb});
  }
  return MetricGraph(std::move(vertices), std::move(edges));
}

SbmAndMu sbm_and_mu(const MetricGraph& g) {
  SbmAndMu out;
  std::vector<double> mu(g.vertices().size(), 0.0);
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const auto& ed = g.edges()[e];
    out.sbm.arcs.push_back({g.arc(e), ed.weight / 2.0});
    mu[ed.from] += ed.weight * ed.length / 2.0;
    mu[ed.to] += ed.weight * ed.length / 2.0;
  }
  for (std::size_t v = 0; v < mu.size(); ++v) {
    out.mu.atoms.push_back({UnitVector(g.vertices()[v].position), mu[v]});
  }
  return out;
}

double integrate_on_arcs(const SupportEvaluator& f, const MetricGraph& g, double quad_tol) {
  double s = 0.0;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    s += g.edges()[e].weight / 2.0 * integrate_on_arc(restrict_to_arc(f, g.arc(e)), quad_tol);
  }
  return s;
}

double form_value(const MetricGraph& graph, const SupportEvaluator& f, const SupportEvaluator& g,
                  double quad_tol) {
  double s = 0.0;
  for (int e = 0; e < static_cast<int>(graph.edges().size()); ++e) {
    const Arc arc = graph.arc(e);
    const auto pf = restrict_to_arc(f, arc);
    const auto pg = restrict_to_arc(g, arc);
    const auto prod = integrate_products(pf, pg, arc.length, quad_tol);
    s += graph.edges()[e].weight * (prod.fg - prod.dfdg);
  }
  return s / 6.0;
}

StructuralReport structural_checks(const MetricGraph& g, double r, double R) {
  if (!(r > 0.0) || !(R >= r)) fail(ErrorCode::BadParam, "need 0 < r <= R");
  StructuralReport rep{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0, 0};
  for (const auto& e : g.edges()) {
    const double margin = R / r - std::tan(e.length / 2.0);
    rep.worst_tan_margin = std::min(rep.worst_tan_margin, margin);
    rep.max_length = std::max(rep.max_length, e.length);
    if (margin < -kTanSlack) ++rep.tan_violations;
  }
  for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
    Vec3 s = Vec3::Zero();
    double wsum = 0.0;
    for (int ei : g.incident(v)) {
      const auto& e = g.edges()[ei];
      s += e.weight * (e.from == v ? e.tangent_from : e.tangent_to);
      wsum += e.weight;
    }
    const double res = wsum > 0.0 ? s.norm() / wsum : 0.0;
    rep.worst_balance = std::max(rep.worst_balance, res);
    if (res > kBalanceTol) ++rep.balance_violations;
  }
  return rep;
}

PoincareReport edge_poincare_check(const std::vector<double>& samples, double l, double eps,
                                   std::optional<EnclosingRadii> radii) {
  if (!(eps > 0.0 && eps < 1.0)) fail(ErrorCode::BadParam, "epsilon must lie in (0,1)");
  if (!(l > 0.0 && l < M_PI)) fail(ErrorCode::BadParam, "edge length must lie in (0,pi)");
  if (samples.size() < 2) fail(ErrorCode::BadParam, "need at least two samples");
  const double d = l / static_cast<double>(samples.size() - 1);
  double f2 = 0.0;
  double df2 = 0.0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double a = samples[i];
    const double b = samples[i + 1];
    f2 += d / 3.0 * (a * a + a * b + b * b);
    df2 += (b - a) * (b - a) / d;
  }
  const double ends = samples.front() * samples.front() + samples.back() * samples.back();
  PoincareReport rep{};
  rep.lhs = l * l * df2;
  rep.rhs = (1.0 - eps) * (1.0 - eps) * M_PI * M_PI * f2 - 2.0 / eps * l * ends;
  const double scale1 = std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-300});
  rep.holds = rep.lhs >= rep.rhs - 1e-9 * scale1;
  if (radii) {
    const double r = radii->r;
    const double R = radii->R;
    if (!(r > 0.0) || !(R >= r)) fail(ErrorCode::BadParam, "need 0 < r <= R");
    if (std::tan(l / 2.0) > R / r + kTanSlack) {
      fail(ErrorCode::BadParam, "edge length incompatible with the radii (tan(l/2) > R/r)");
    }
    rep.cor_lhs = df2 - f2;
    rep.cor_rhs = r * r / (2.0 * R * R) * f2 - 4.0 * R * R / (r * r) * l * ends;
    const double scale2 = std::max({std::abs(*rep.cor_lhs), std::abs(*rep.cor_rhs), 1e-300});
    rep.holds = rep.holds && *rep.cor_lhs >= *rep.cor_rhs - 1e-9 * scale2;
  }
  return rep;
}

}  // namespace minkq
