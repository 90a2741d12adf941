#pragma once

#include <functional>

namespace minkq {

/// Adaptive Gauss-Legendre quadrature (10-point panels, bisection). A panel
/// is accepted when the one-panel and two-panel estimates differ by at most
/// `rel_tol` times the panel's L1 mass (floored at `abs_floor`). Refinement
/// deeper than 30 levels raises QuadratureFailure.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_floor = 0.0);

/// The fixed 10-point rule mapped to [a, b]; calls `visit(node, weight)`.
void gauss_legendre_nodes(double a, double b,
                          const std::function<void(double, double)>& visit);

}  // namespace minkq
