#pragma once

#include <vector>

#include "minkq/support.hpp"

namespace minkq {

/// A finite measure on S^2 with an atomic part and a part spread uniformly
/// (with respect to arc length) along geodesic arcs.
struct SphericalMeasure {
  struct Atom {
    UnitVector direction;
    double mass;
  };
  struct WeightedArc {
    Arc arc;
    double weight;  // density per unit arc length
  };

  std::vector<Atom> atoms;
  std::vector<WeightedArc> arcs;
  bool nonnegative = true;

  double total_mass() const;
  /// |sum mass*direction + sum weight * integral of u over the arc|.
  double balance_residual() const;
};

/// Sum of atoms f(u)*mass plus arc integrals (breakpoint-aware quadrature).
double integrate_against_measure(const SupportEvaluator& f, const SphericalMeasure& mu,
                                 double quad_tol);

/// Combine atoms whose directions are within `angle_tol`.
void merge_atoms(SphericalMeasure& mu, double angle_tol = 1e-9);

}  // namespace minkq
