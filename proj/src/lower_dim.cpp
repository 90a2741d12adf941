#include "minkq/lower_dim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "minkq/error.hpp"

namespace minkq {

namespace {

MetricGraph pole_graph(const UnitVector& w, const std::vector<LowerDimProblem::Atom>& atoms) {
  std::vector<GraphVertex> vertices{{-1, w.vec(), 0.0}, {-1, -w.vec(), 0.0}};
  std::vector<GraphEdge> edges;
  for (const auto& a : atoms) edges.push_back({0, 1, M_PI, a.mass, a.z.vec(), a.z.vec()});
  return MetricGraph(std::move(vertices), std::move(edges));
}

}  // namespace

double LowerDimProblem::balance_residual() const {
  Vec3 s = Vec3::Zero();
  for (const auto& a : atoms) s += a.mass * a.z.vec();
  return s.norm();
}

double LowerDimProblem::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.mass;
  return s;
}

Vec3 polar_point(const UnitVector& w, const Vec3& z, double theta) {
  return std::cos(theta) * w.vec() + std::sin(theta) * z;
}

LowerDimProblem lowerdim_setup(const Polytope& m, const UnitVector& w) {
  const int dim = m.dimension();
  if (dim != 1 && dim != 2) {
    std::ostringstream os;
    os << "M has dimension " << dim << ", need 1 or 2";
    fail(ErrorCode::DimensionError, os.str());
  }
  const auto& vs = m.vertices();
  const double tol = 1e-9 * std::max(m.scale(), 1.0);
  for (const auto& v : vs) {
    if (std::abs((v - vs.front()).dot(w.vec())) > tol) {
      fail(ErrorCode::DimensionError, "M is not contained in a translate of w^perp");
    }
  }
  std::vector<LowerDimProblem::Atom> atoms;
  if (dim == 1) {
    const Vec3 d = vs[1] - vs[0];
    const UnitVector u(w.vec().cross(d));
    atoms.push_back({u, d.norm()});
    atoms.push_back({UnitVector(-u.vec()), d.norm()});
  } else {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Vec3 d = vs[(i + 1) % vs.size()] - vs[i];
      Vec3 z = d.cross(w.vec());
      if (z.dot(vs[i] - m.centroid()) < 0.0) z = -z;
      atoms.push_back({UnitVector(z), d.norm()});
    }
  }
  LowerDimProblem p{w, m, atoms, pole_graph(w, atoms)};
  return p;
}

double sbm_lowerdim(const LowerDimProblem& p, const SupportEvaluator& f, double quad_tol) {
  return integrate_on_arcs(f, p.graph, quad_tol);
}

DiscretizedForm assemble_lowerdim(const LowerDimProblem& p, double h) {
  return assemble(p.graph, h);
}

LowerSpectrumReport verify_spectrum(const LowerDimProblem& p, int k_max, double h, double tol) {
  const int m = static_cast<int>(p.atoms.size());
  if (m < 2) fail(ErrorCode::InsufficientSpectrum, "need at least two atoms");
  if (k_max < 0) fail(ErrorCode::BadParam, "k_max must be nonnegative");
  const auto form = assemble_lowerdim(p, h);
  const int count = 1 + m * k_max;
  // one extra eigenvalue shows that the last cluster is not larger than m
  const int want = count + 1;
  if (want > form.layout.size) {
    fail(ErrorCode::InsufficientSpectrum, "mesh too coarse for the requested clusters");
  }
  const auto spec = spectrum(form, want);
  LowerSpectrumReport rep;
  rep.eigenvalues = spec.values;
  rep.ok = true;
  int pos = 0;
  for (int k = 0; k <= k_max; ++k) {
    SpectrumCluster c;
    c.k = k;
    c.target = (1.0 - k * k) / 3.0;
    c.expected = k == 0 ? 1 : m;
    for (double v : spec.values) {
      if (std::abs(v - c.target) <= tol) ++c.found;
    }
    for (int j = 0; j < c.expected; ++j) {
      c.worst_deviation = std::max(c.worst_deviation, std::abs(spec.values[pos + j] - c.target));
    }
    pos += c.expected;
    rep.worst_deviation = std::max(rep.worst_deviation, c.worst_deviation);
    if (c.found != c.expected || c.worst_deviation > tol) rep.ok = false;
    rep.clusters.push_back(c);
  }
  return rep;
}

EqualityCertificate certify_equality_lowerdim(const Polytope& k, const Polytope& l,
                                              const Polytope& m, const UnitVector& w,
                                              double quad_tol, Thresholds t) {
  EqualityCertificate cert;
  cert.deficit = quadratic_deficit(k, l, m, quad_tol);
  cert.diameter = std::max(k.diameter(), l.diameter());
  const auto cls = classify_trivial(k, l, m);
  if (cls.vllm_vanishes) {
    cert.trivial = true;
    cert.verdict = cls.trivial_equality ? Verdict::Equality : Verdict::Strict;
    return cert;
  }
  const auto p = lowerdim_setup(m, w);
  const double c = cert.deficit.vkl / cert.deficit.vll;
  if (!(c > 0.0)) fail(ErrorCode::ZeroDenominator, "V(K,L,M) vanishes; L~ undefined");
  cert.a = c;
  const Polytope lt = l.scaled(c);
  cert.diameter = std::max(k.diameter(), lt.diameter());

  SupportEvaluator f(k);
  f.add(Body(support_data(lt, w).face), 1.0);
  f.add(Body(lt), -1.0);
  f.add(Body(support_data(k, w).face), -1.0);
  for (int e = 0; e < static_cast<int>(p.graph.edges().size()); ++e) {
    const Arc arc = p.graph.arc(e);
    const auto pf = restrict_to_arc(f, arc);
    for (const auto& node : arc_nodes(pf, arc.length)) {
      cert.sup_residual = std::max(cert.sup_residual, std::abs(pf.value(node.theta)));
      ++cert.nodes;
    }
  }
  cert.verdict = classify_verdict(cert.relative_deficit(), cert.relative_residual(), t);
  return cert;
}

CylinderReport cylinder_limit_check(const LowerDimProblem& p, const std::vector<double>& eps,
                                    const SupportEvaluator& f, double quad_tol) {
  CylinderReport rep;
  rep.target = sbm_lowerdim(p, f, quad_tol);
  std::vector<Vec3> base = p.m.vertices();
  for (double e : eps) {
    if (!(e > 0.0)) fail(ErrorCode::DimensionError, "cylinder thickness must be positive");
    std::vector<Vec3> pts = base;
    for (const auto& v : base) pts.push_back(v + e * p.w.vec());
    const Polytope me = Polytope::hull(pts);
    const double value = integrate_on_arcs(f, build_graph(me), quad_tol);
    rep.eps.push_back(e);
    rep.values.push_back(value);
    rep.errors.push_back(std::abs(value - rep.target));
  }
  for (std::size_t i = 0; i + 1 < rep.errors.size(); ++i) {
    rep.ratios.push_back(rep.errors[i + 1] > 0.0 ? rep.errors[i] / rep.errors[i + 1]
                                                 : std::numeric_limits<double>::infinity());
  }
  return rep;
}

}  // namespace minkq
