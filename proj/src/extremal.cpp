#include "minkq/extremal.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "minkq/error.hpp"
#include "minkq/metric_graph.hpp"

namespace minkq {

namespace {

constexpr double kSlack = 1e-9;

struct FacetWeights {
  std::vector<Vec3> normals;
  std::vector<double> weights;  // area / h_M(n), M centered
};

FacetWeights facet_weights(const Polytope& mc) {
  FacetWeights fw;
  for (const auto& f : mc.facets()) {
    if (!(f.offset > 0.0)) fail(ErrorCode::SingularGM, "centered M has a facet through the origin");
    fw.normals.push_back(f.normal.vec());
    fw.weights.push_back(f.area / f.offset);
  }
  return fw;
}

InequalityReport inequality(double lhs, double rhs, double base) {
  InequalityReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.scale = std::max({std::abs(lhs), std::abs(base), 1e-300});
  rep.holds = lhs >= rhs - kSlack * rep.scale;
  return rep;
}

}  // namespace

double stability_residual(const Polytope& k, const Polytope& l, const Polytope& m, double a,
                          const Vec3& v) {
  const auto fw = facet_weights(m.centered());
  double s = 0.0;
  for (std::size_t i = 0; i < fw.normals.size(); ++i) {
    const Vec3& n = fw.normals[i];
    const double d = k.support(n) - a * l.support(n) - v.dot(n);
    s += fw.weights[i] * d * d;
  }
  return s;
}

StabilityWitness stability_witness(const Polytope& k, const Polytope& l, const Polytope& m) {
  if (!m.full_dimensional()) fail(ErrorCode::DegenerateInput, "M must be full-dimensional");
  const Polytope mc = m.centered();
  const double vkmm = mixed_volume(k, mc, mc);
  const double vlmm = mixed_volume(l, mc, mc);
  const double unit = std::pow(std::max({l.scale(), mc.scale(), 1e-300}), 3);
  if (!(std::abs(vlmm) > 1e-14 * unit)) fail(ErrorCode::ZeroDenominator, "V(L,M,M) vanishes");

  StabilityWitness w;
  w.a = vkmm / vlmm;
  const auto radii = enclosing_radii(mc);
  w.r = radii.r;
  w.R = radii.R;
  w.C = w.r * w.r / (18.0 * w.R * w.R);

  const auto fw = facet_weights(mc);
  Vec3 b = Vec3::Zero();
  for (std::size_t i = 0; i < fw.normals.size(); ++i) {
    const Vec3& n = fw.normals[i];
    w.G += fw.weights[i] * n * n.transpose();
    b += fw.weights[i] * (k.support(n) - w.a * l.support(n)) * n;
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(w.G, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues().minCoeff() > 1e-12 * es.eigenvalues().maxCoeff())) {
    fail(ErrorCode::SingularGM, "covariance matrix G_M is not positive definite");
  }
  w.v = w.G.ldlt().solve(b);
  for (std::size_t i = 0; i < fw.normals.size(); ++i) {
    const Vec3& n = fw.normals[i];
    const double d = k.support(n) - w.a * l.support(n) - w.v.dot(n);
    w.residual += fw.weights[i] * d * d;
  }
  return w;
}

WeakStabilityReport weak_stability_check(const Polytope& k, const Polytope& l,
                                         const Polytope& m) {
  WeakStabilityReport rep;
  rep.witness = stability_witness(k, l, m);
  rep.deficit = quadratic_deficit(k, l, m);
  const auto& d = rep.deficit;
  rep.check = inequality(d.vkl * d.vkl,
                         d.vkk * d.vll + rep.witness.C * d.vll * rep.witness.residual,
                         d.vkk * d.vll);
  return rep;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equality: return "equality";
    case Verdict::Strict: return "strict";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict classify_verdict(double rel_deficit, double rel_residual, const Thresholds& t) {
  if (rel_deficit <= t.deficit && rel_residual <= t.residual) return Verdict::Equality;
  if (rel_deficit > 10.0 * t.deficit && rel_residual > 10.0 * t.residual) return Verdict::Strict;
  return Verdict::Inconclusive;
}

EqualityCertificate certify_equality_fulldim(const Polytope& k, const Polytope& l,
                                             const Polytope& m, double quad_tol, Thresholds t) {
  EqualityCertificate cert;
  cert.deficit = quadratic_deficit(k, l, m, quad_tol);
  cert.diameter = std::max(k.diameter(), l.diameter());
  const auto cls = classify_trivial(k, l, m);
  if (cls.vllm_vanishes) {
    cert.trivial = true;
    cert.verdict = cls.trivial_equality ? Verdict::Equality : Verdict::Strict;
    return cert;
  }
  if (!m.full_dimensional()) {
    fail(ErrorCode::DimensionError, "M is lower-dimensional; use the lower-dimensional certifier");
  }
  cert.a = cert.deficit.vkl / cert.deficit.vll;
  cert.diameter = std::max(k.diameter(), cert.a * l.diameter());

  SupportEvaluator d(k);
  d.add(Body(l), -cert.a);
  const MetricGraph g = build_graph(m);

  struct Sample {
    Vec3 u;
    double value;
    double weight;
  };
  std::vector<Sample> samples;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const Arc arc = g.arc(e);
    const auto pf = restrict_to_arc(d, arc);
    for (const auto& node : arc_nodes(pf, arc.length)) {
      samples.push_back({arc.point(node.theta), pf.value(node.theta),
                         node.weight * g.edges()[e].weight / 2.0});
    }
  }
  // weighted least squares for the linear part
  Mat3 A = Mat3::Zero();
  Vec3 b = Vec3::Zero();
  for (const auto& s : samples) {
    A += s.weight * s.u * s.u.transpose();
    b += s.weight * s.value * s.u;
  }
  cert.v = A.ldlt().solve(b);
  for (const auto& s : samples) {
    cert.sup_residual = std::max(cert.sup_residual, std::abs(s.value - cert.v.dot(s.u)));
  }
  cert.nodes = static_cast<int>(samples.size());
  cert.verdict = classify_verdict(cert.relative_deficit(), cert.relative_residual(), t);
  return cert;
}

RigidityReport rigidity_check(const Polytope& k, const Polytope& l, const Polytope& m,
                              double quad_tol) {
  RigidityReport rep;
  rep.deficit = quadratic_deficit(k, l, m, quad_tol);
  const auto radii = enclosing_radii(m);
  rep.r = radii.r;
  rep.R = radii.R;
  const MetricGraph g = build_graph(m);
  SupportEvaluator d(k);
  d.add(Body(l), -1.0);
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const Arc arc = g.arc(e);
    const auto pf = restrict_to_arc(d, arc);
    rep.sbm_integral += g.edges()[e].weight / 2.0 * integrate_products(pf, pf, arc.length, quad_tol).fg;
  }
  const auto measures = sbm_and_mu(g);
  for (const auto& atom : measures.mu.atoms) {
    const double x = d(atom.direction);
    rep.mu_integral += atom.mass * x * x;
  }
  const double r2 = rep.r * rep.r;
  const double R2 = rep.R * rep.R;
  const auto& df = rep.deficit;
  const double correction = r2 / (6.0 * R2) * rep.sbm_integral - 4.0 * R2 / (3.0 * r2) * rep.mu_integral;
  rep.check = inequality(df.vkl * df.vkl, df.vkk * df.vll + df.vll * correction, df.vkk * df.vll);
  return rep;
}

}  // namespace minkq

namespace minkq {

bool certificate_consistent(const EqualityCertificate& cert, const Thresholds& t) {
  const double rd = cert.relative_deficit();
  const bool small_deficit = rd <= t.deficit;
  if ((cert.verdict == Verdict::Equality) != small_deficit) return false;
  if (cert.trivial) return true;
  const double rr = cert.relative_residual();
  if (small_deficit && rr > 10.0 * t.residual) return false;
  if (rr <= t.residual && rd > 10.0 * t.deficit) return false;
  return true;
}

}  // namespace minkq
