#pragma once

// The metric graph of a 3-polytope M: vertices are the facet normals n_F,
// edges the geodesic arcs between normals of facets sharing a ridge, weighted
// by the ridge length. It carries S_{B,M}, the vertex measure mu_M and the
// quadratic form E(f,g) = (1/6) sum_e w_e int_e (f g - f' g').

#include <optional>
#include <vector>

#include "minkq/measures.hpp"
#include "minkq/polytope.hpp"
#include "minkq/support.hpp"

namespace minkq {

struct GraphVertex {
  int facet;
  Vec3 position;  // n_F, or a pole for graphs of lower-dimensional bodies
  double area;
};

struct GraphEdge {
  int from;  // from < to for polytope graphs
  int to;
  double length;
  double weight;
  Vec3 tangent_from;  // unit tangent at `from` pointing along the edge
  Vec3 tangent_to;    // unit tangent at `to` pointing back along the edge
};

class MetricGraph {
 public:
  MetricGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges);

  const std::vector<GraphVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  /// Arc of edge e parametrized from its `from` vertex.
  Arc arc(int e) const;
  /// Edge ids incident to vertex v.
  const std::vector<int>& incident(int v) const { return incidence_[v]; }
  double total_weight() const;
  bool connected() const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// Requires a full-dimensional M (DegenerateInput otherwise).
MetricGraph build_graph(const Polytope& m);

struct SbmAndMu {
  SphericalMeasure sbm;  // arcs (e, w_e / 2)
  SphericalMeasure mu;   // atoms (n_F, (1/2) sum_{F'~F} w l)
};

SbmAndMu sbm_and_mu(const MetricGraph& g);

/// sum_e (w_e / 2) int_e f dH^1.
double integrate_on_arcs(const SupportEvaluator& f, const MetricGraph& g, double quad_tol);

/// E(f, g) evaluated exactly piecewise; equals V(K, L, M) for f = h_K,
/// g = h_L.
double form_value(const MetricGraph& graph, const SupportEvaluator& f,
                  const SupportEvaluator& g, double quad_tol);

struct StructuralReport {
  double worst_tan_margin;      // min over edges of R/r - tan(l/2)
  double worst_balance;         // max over vertices of |sum w n_{F->F'}| / sum w
  double max_length;
  int tan_violations;
  int balance_violations;
  bool ok() const { return tan_violations == 0 && balance_violations == 0; }
};

StructuralReport structural_checks(const MetricGraph& g, double r, double R);

struct PoincareReport {
  double lhs;   // l^2 int f'^2
  double rhs;   // (1-eps)^2 pi^2 int f^2 - (2/eps) l (f(0)^2 + f(l)^2)
  std::optional<double> cor_lhs;  // int (f'^2 - f^2)
  std::optional<double> cor_rhs;  // r^2/(2R^2) int f^2 - (4R^2/r^2) l (f(0)^2 + f(l)^2)
  bool holds;
};

/// Both sides of the single-edge Poincare inequality for the piecewise-linear
/// interpolant of `samples` on a uniform grid of [0, l]; with radii, also the
/// r,R form of the bound. BadParam unless 0 < eps < 1 and 0 < l < pi.
PoincareReport edge_poincare_check(const std::vector<double>& samples, double l, double eps,
                                   std::optional<EnclosingRadii> radii = std::nullopt);

}  // namespace minkq
