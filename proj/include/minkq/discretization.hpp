#pragma once

// Piecewise-linear Galerkin discretization of the quadratic form E and the
// mass inner product on a metric graph, and the generalized symmetric
// eigenproblem E x = lambda M x for the operator A f = (1/3)(f'' + f).

#include <vector>

#include <Eigen/Dense>

#include "minkq/metric_graph.hpp"

namespace minkq {

/// Degrees of freedom: one per graph vertex (shared by all incident edges,
/// which is what makes discrete functions continuous), then the interior
/// nodes of each edge in order.
struct DofLayout {
  int vertex_count = 0;
  std::vector<int> elements;  // per edge
  std::vector<int> offset;    // first interior dof per edge
  int size = 0;

  int dof(const MetricGraph& g, int edge, int local) const;
};

struct DiscretizedForm {
  DofLayout layout;
  Eigen::MatrixXd E;     // (1/6) sum_e w_e int (phi_i phi_j - phi_i' phi_j')
  Eigen::MatrixXd mass;  // (1/2) sum_e w_e int phi_i phi_j
  std::vector<Vec3> nodes;  // dof -> point on S^2
  double h = 0.0;
};

/// BadMesh when h <= 0 or some edge would get fewer than two elements.
DiscretizedForm assemble(const MetricGraph& g, double h);

/// Nodal values of f.
Eigen::VectorXd interpolate(const DiscretizedForm& form, const SupportEvaluator& f);

struct SpectrumResult {
  std::vector<double> values;  // descending
  Eigen::MatrixXd vectors;     // mass-orthonormal columns
  std::vector<double> residuals;  // |E x - lambda M x|
  int system_size = 0;
  bool complete() const { return static_cast<int>(values.size()) == system_size; }
};

/// Top-k eigenpairs via Cholesky reduction to a dense symmetric problem.
/// NumericalFailure if the mass matrix is not positive definite.
SpectrumResult spectrum(const DiscretizedForm& form, int k);

struct KernelReport {
  int dimension = 0;
  double tau = 0.0;
  /// Sine of the largest principal angle between span{x1,x2,x3} on the
  /// nodes and the numerical kernel, in the mass inner product.
  double angle_residual = 0.0;
  int positive = 0;  // eigenvalues >= tau
};

/// InsufficientSpectrum when the window (-tau, tau) reaches the smallest
/// computed eigenvalue of a truncated spectrum.
KernelReport kernel_analysis(const SpectrumResult& spec, const DiscretizedForm& form, double tau);

}  // namespace minkq
