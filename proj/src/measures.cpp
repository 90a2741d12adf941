#include "minkq/measures.hpp"

#include <cmath>

namespace minkq {

double SphericalMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.mass;
  for (const auto& a : arcs) s += a.weight * a.arc.length;
  return s;
}

double SphericalMeasure::balance_residual() const {
  Vec3 s = Vec3::Zero();
  for (const auto& a : atoms) s += a.mass * a.direction.vec();
  for (const auto& a : arcs) s += a.weight * a.arc.first_moment();
  return s.norm();
}

double integrate_against_measure(const SupportEvaluator& f, const SphericalMeasure& mu,
                                 double quad_tol) {
  double s = 0.0;
  for (const auto& a : mu.atoms) s += a.mass * f(a.direction.vec());
  for (const auto& a : mu.arcs) {
    s += a.weight * integrate_on_arc(restrict_to_arc(f, a.arc), quad_tol);
  }
  return s;
}

void merge_atoms(SphericalMeasure& mu, double angle_tol) {
  std::vector<SphericalMeasure::Atom> merged;
  merged.reserve(mu.atoms.size());
  for (const auto& a : mu.atoms) {
    bool found = false;
    for (auto& m : merged) {
      if (angle_between(m.direction.vec(), a.direction.vec()) <= angle_tol) {
        m.mass += a.mass;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(a);
  }
  mu.atoms = std::move(merged);
}

}  // namespace minkq
