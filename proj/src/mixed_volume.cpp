#include "minkq/mixed_volume.hpp"

#include <cmath>
#include <sstream>

#include "minkq/error.hpp"
#include "minkq/metric_graph.hpp"

namespace minkq {

double volume(const Polytope& p) {
  if (!p.full_dimensional()) return 0.0;
  // Offsets relative to the centroid keep the sum well conditioned for
  // translated polytopes; the facet vector areas sum to zero.
  const Vec3& c = p.centroid();
  double s = 0.0;
  for (const auto& f : p.facets()) s += (f.offset - f.normal.vec().dot(c)) * f.area;
  return std::max(s / 3.0, 0.0);
}

double mixed_volume(const Polytope& k, const Polytope& l, const Polytope& m) {
  const Polytope kl = minkowski_sum(k, l);
  const Polytope km = minkowski_sum(k, m);
  const Polytope lm = minkowski_sum(l, m);
  const Polytope klm = minkowski_sum(kl, m);
  return (volume(klm) - volume(kl) - volume(km) - volume(lm) + volume(k) + volume(l) +
          volume(m)) /
         6.0;
}

SphericalMeasure area_measure(const Polytope& p) {
  if (!p.full_dimensional()) {
    fail(ErrorCode::DegenerateInput, "area measure needs a full-dimensional polytope");
  }
  return surface_measure(p);
}

SphericalMeasure surface_measure(const Polytope& p) {
  SphericalMeasure mu;
  if (p.full_dimensional()) {
    for (const auto& f : p.facets()) mu.atoms.push_back({f.normal, f.area});
  } else if (p.dimension() == 2) {
    const auto& v = p.vertices();
    Vec3 n = Vec3::Zero();
    for (std::size_t i = 0; i < v.size(); ++i) {
      n += (v[i] - v[0]).cross(v[(i + 1) % v.size()] - v[0]);
    }
    const double area = 0.5 * n.norm();
    const UnitVector u(n);
    mu.atoms.push_back({u, area});
    mu.atoms.push_back({UnitVector(-u.vec()), area});
  }
  return mu;
}

SphericalMeasure mixed_area_measure(const Polytope& l, const Polytope& m) {
  const Polytope sum = minkowski_sum(l, m);
  if (!sum.full_dimensional()) {
    fail(ErrorCode::DegenerateInput, "mixed area measure needs L+M full-dimensional");
  }
  SphericalMeasure mu;
  const double total = sum.facets().empty() ? 0.0 : surface_measure(sum).total_mass();
  for (const auto& a : surface_measure(sum).atoms) mu.atoms.push_back({a.direction, 0.5 * a.mass});
  for (const auto& a : surface_measure(l).atoms) mu.atoms.push_back({a.direction, -0.5 * a.mass});
  for (const auto& a : surface_measure(m).atoms) mu.atoms.push_back({a.direction, -0.5 * a.mass});
  merge_atoms(mu, 1e-9);
  std::vector<SphericalMeasure::Atom> kept;
  for (const auto& a : mu.atoms) {
    if (a.mass < -1e-9 * total) {
      std::ostringstream os;
      os << "mixed area measure has negative atom " << a.mass;
      fail(ErrorCode::NegativeMass, os.str());
    }
    if (std::abs(a.mass) > 1e-12 * total) kept.push_back(a);
  }
  mu.atoms = std::move(kept);
  return mu;
}

double mixed_volume_via_measure(const SupportEvaluator& f, const Slot& l, const Polytope& m,
                                double quad_tol) {
  if (const auto* lp = std::get_if<Polytope>(&l)) {
    return integrate_against_measure(f, mixed_area_measure(*lp, m), quad_tol) / 3.0;
  }
  const auto& ball = std::get<Ball>(l);
  return ball.radius * integrate_on_arcs(f, build_graph(m), quad_tol) / 3.0;
}

double mixed_volume_slots(const Slot& k, const Slot& l, const Polytope& m, double quad_tol) {
  const auto* kp = std::get_if<Polytope>(&k);
  const auto* lp = std::get_if<Polytope>(&l);
  if (kp && lp) return mixed_volume(*kp, *lp, m);
  if (lp) return mixed_volume_via_measure(SupportEvaluator(k), l, m, quad_tol);
  return mixed_volume_via_measure(SupportEvaluator(l), k, m, quad_tol);
}

DeficitReport quadratic_deficit(const Slot& k, const Slot& l, const Polytope& m,
                                double quad_tol) {
  DeficitReport r;
  r.vkl = mixed_volume_slots(k, l, m, quad_tol);
  r.vkk = mixed_volume_slots(k, k, m, quad_tol);
  r.vll = mixed_volume_slots(l, l, m, quad_tol);
  r.deficit = r.vkl * r.vkl - r.vkk * r.vll;
  r.scale = std::max(r.vkl * r.vkl, std::abs(r.vkk * r.vll));
  return r;
}

ClassicalFunctionals classical_functionals(const Polytope& k) {
  if (!k.full_dimensional()) {
    fail(ErrorCode::DegenerateInput, "classical functionals need a full-dimensional body");
  }
  ClassicalFunctionals c;
  c.volume = volume(k);
  c.surface_area = 3.0 * mixed_volume_slots(Ball{}, k, k);
  c.mean_width = 3.0 / (2.0 * M_PI) * mixed_volume_slots(Ball{}, Ball{}, k);
  return c;
}

}  // namespace minkq
