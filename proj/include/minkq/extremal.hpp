#pragma once

// Minkowski's quadratic inequality as executable checks: equality
// certification on supp S_{B,M}, the weak stability inequality with its
// explicit constant, and the rigidity inequality built on mu_M.

#include <optional>

#include "minkq/mixed_volume.hpp"

namespace minkq {

struct StabilityWitness {
  double a = 0.0;
  Vec3 v = Vec3::Zero();
  Mat3 G = Mat3::Zero();  // sum_F (area_F / h_M(n_F)) n_F n_F^T, M centered
  double r = 0.0;
  double R = 0.0;
  double C = 0.0;         // r^2 / (18 R^2)
  double residual = 0.0;  // sum_F (area_F / h_M(n_F)) (h_K - a h_L - <v, n_F>)^2
};

/// M is centered internally. ZeroDenominator when V(L,M,M) vanishes,
/// SingularGM if the covariance matrix is not positive definite.
StabilityWitness stability_witness(const Polytope& k, const Polytope& l, const Polytope& m);

/// Weighted residual for an arbitrary (a, v), same weights as the witness.
double stability_residual(const Polytope& k, const Polytope& l, const Polytope& m, double a,
                          const Vec3& v);

struct InequalityReport {
  double lhs = 0.0;  // V(K,L,M)^2
  double rhs = 0.0;
  double scale = 0.0;
  bool holds = false;
  double margin() const { return lhs - rhs; }
};

struct WeakStabilityReport {
  StabilityWitness witness;
  DeficitReport deficit;
  InequalityReport check;  // rhs = V(K,K,M) V(L,L,M) + C V(L,L,M) residual
};

WeakStabilityReport weak_stability_check(const Polytope& k, const Polytope& l,
                                         const Polytope& m);

struct Thresholds {
  double deficit = 1e-9;   // relative to max(V(K,L,M)^2, V(K,K,M) V(L,L,M))
  double residual = 1e-6;  // relative to the diameter
};

enum class Verdict { Equality, Strict, Inconclusive };
const char* to_string(Verdict v) noexcept;

struct EqualityCertificate {
  DeficitReport deficit;
  double a = 0.0;          // or c, the scaling of L in the lower-dimensional criterion
  Vec3 v = Vec3::Zero();
  double sup_residual = 0.0;
  double diameter = 0.0;
  int nodes = 0;           // number of points the residual was sampled at
  bool trivial = false;    // V(L,L,M) = 0, settled by dimensions alone
  Verdict verdict = Verdict::Inconclusive;

  double relative_deficit() const { return deficit.relative(); }
  double relative_residual() const { return diameter > 0.0 ? sup_residual / diameter : 0.0; }
};

Verdict classify_verdict(double rel_deficit, double rel_residual, const Thresholds& t);

EqualityCertificate certify_equality_fulldim(const Polytope& k, const Polytope& l,
                                             const Polytope& m, double quad_tol = 1e-12,
                                             Thresholds t = {});

struct RigidityReport {
  DeficitReport deficit;
  double r = 0.0;
  double R = 0.0;
  double sbm_integral = 0.0;  // int (h_K - h_L)^2 dS_{B,M}
  double mu_integral = 0.0;   // int (h_K - h_L)^2 dmu_M
  InequalityReport check;
};

RigidityReport rigidity_check(const Polytope& k, const Polytope& l, const Polytope& m,
                              double quad_tol = 1e-12);

}  // namespace minkq

namespace minkq {

/// Verdict and deficit tell the same story: equality exactly when the
/// deficit is below threshold, and never a small deficit next to a residual
/// ten times over its threshold (or the reverse).
bool certificate_consistent(const EqualityCertificate& cert, const Thresholds& t = {});

}  // namespace minkq
