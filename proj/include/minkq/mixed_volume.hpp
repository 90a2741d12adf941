#pragma once

// Mixed volumes of 3-polytopes. Two independent routes: polarization of
// volumes of Minkowski sums (hull only) and integration of support functions
// against (mixed) area measures.

#include "minkq/measures.hpp"
#include "minkq/polytope.hpp"

namespace minkq {

class MetricGraph;

/// Divergence-theorem volume (1/3) sum_F h_F area_F; zero below dimension 3.
double volume(const Polytope& p);

/// V(K,L,M) = (1/6)[Vol(K+L+M) - Vol(K+L) - Vol(K+M) - Vol(L+M)
///                  + Vol K + Vol L + Vol M].
double mixed_volume(const Polytope& k, const Polytope& l, const Polytope& m);

/// S(P, .): atoms (n_F, area_F). DegenerateInput below dimension 3.
SphericalMeasure area_measure(const Polytope& p);

/// S(P, .) for any dimension: two opposite atoms for a polygon, nothing for
/// a segment or a point.
SphericalMeasure surface_measure(const Polytope& p);

/// S_{L,M} = (S(L+M) - S(L) - S(M)) / 2, atoms merged at 1e-9 rad. Raises
/// NegativeMass when a merged atom falls below -1e-9 of the total mass.
SphericalMeasure mixed_area_measure(const Polytope& l, const Polytope& m);

/// One slot of a mixed volume on the measure side: a polytope or a ball.
using Slot = Body;

/// (1/3) * integral of f against S_{L,M}. A ball in the L slot is routed to
/// the arc measure S_{B,M} of M's metric graph (scaled by the radius; the
/// center does not contribute).
double mixed_volume_via_measure(const SupportEvaluator& f, const Slot& l, const Polytope& m,
                                double quad_tol = 1e-12);

struct DeficitReport {
  double vkl = 0.0;
  double vkk = 0.0;
  double vll = 0.0;
  double deficit = 0.0;  // vkl^2 - vkk*vll
  double scale = 0.0;    // max(vkl^2, vkk*vll)

  double relative() const { return scale > 0.0 ? deficit / scale : 0.0; }
};

/// V(K,L,M) for bodies where K and/or L may be balls; M is a polytope.
double mixed_volume_slots(const Slot& k, const Slot& l, const Polytope& m,
                          double quad_tol = 1e-12);

DeficitReport quadratic_deficit(const Slot& k, const Slot& l, const Polytope& m,
                                double quad_tol = 1e-12);

struct ClassicalFunctionals {
  double volume;
  double surface_area;  // 3 V(B,K,K)
  double mean_width;    // (3 / 2pi) V(B,B,K)
};

ClassicalFunctionals classical_functionals(const Polytope& k);

}  // namespace minkq
