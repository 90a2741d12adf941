#pragma once

// M contained in a plane w^perp. S_{B,M} then lives on the half great
// circles from w to -w through the edge normals z_j of M, and the operator is
// a "pole graph": two vertices w, -w joined by m edges of length pi.

#include <vector>

#include "minkq/discretization.hpp"
#include "minkq/extremal.hpp"

namespace minkq {

struct LowerDimProblem {
  struct Atom {
    UnitVector z;  // in w^perp
    double mass;
  };

  UnitVector w;
  Polytope m;
  std::vector<Atom> atoms;
  MetricGraph graph;  // vertex 0 = w, vertex 1 = -w, edge j along z_j

  /// |sum mass_j z_j|.
  double balance_residual() const;
  double total_mass() const;
};

/// iota(theta, z) = w cos(theta) + z sin(theta).
Vec3 polar_point(const UnitVector& w, const Vec3& z, double theta);

/// DimensionError unless dim M is 1 or 2 and M - M lies in w^perp.
LowerDimProblem lowerdim_setup(const Polytope& m, const UnitVector& w);

/// int f dS_{B,M} = (1/2) sum_j mass_j int_0^pi f(iota(theta, z_j)) dtheta.
double sbm_lowerdim(const LowerDimProblem& p, const SupportEvaluator& f, double quad_tol);

DiscretizedForm assemble_lowerdim(const LowerDimProblem& p, double h);

struct SpectrumCluster {
  int k = 0;
  double target = 0.0;
  int expected = 0;
  int found = 0;
  double worst_deviation = 0.0;
};

struct LowerSpectrumReport {
  std::vector<SpectrumCluster> clusters;
  std::vector<double> eigenvalues;
  double worst_deviation = 0.0;
  bool ok = false;
};

/// Compares the top 1 + m k_max eigenvalues with (1 - k^2)/3, multiplicity 1
/// for k = 0 and m otherwise.
LowerSpectrumReport verify_spectrum(const LowerDimProblem& p, int k_max, double h, double tol);

/// Equality criterion: with c = V(K,L,M)/V(L,L,M) and L~ = cL, the sup
/// over supp S_{B,M} of |h_K + h_{F(L~,w)} - h_L~ - h_{F(K,w)}|. `a` in the
/// certificate holds c.
EqualityCertificate certify_equality_lowerdim(const Polytope& k, const Polytope& l,
                                              const Polytope& m, const UnitVector& w,
                                              double quad_tol = 1e-12, Thresholds t = {});

struct CylinderReport {
  double target = 0.0;
  std::vector<double> eps;
  std::vector<double> values;  // graph integrals for M + eps [0, w]
  std::vector<double> errors;
  std::vector<double> ratios;  // errors[i] / errors[i+1]
};

/// DimensionError for eps <= 0.
CylinderReport cylinder_limit_check(const LowerDimProblem& p, const std::vector<double>& eps,
                                    const SupportEvaluator& f, double quad_tol = 1e-12);

}  // namespace minkq
