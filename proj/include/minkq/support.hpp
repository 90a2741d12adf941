#pragma once

// Formal combinations of support functions and their exact restriction to
// great-circle arcs.

#include <memory>
#include <vector>

#include "minkq/polytope.hpp"

namespace minkq {

/// f = sum_i c_i h_{Body_i} + <shift, .>. Positively homogeneous of degree 1.
class SupportEvaluator {
 public:
  struct Term {
    double coeff;
    std::shared_ptr<const Body> body;
  };

  SupportEvaluator() = default;
  explicit SupportEvaluator(Body body, double coeff = 1.0);

  static SupportEvaluator linear(const Vec3& v);
  /// h of the unit ball at the origin, i.e. the constant 1 on S^2.
  static SupportEvaluator one();

  SupportEvaluator& add(Body body, double coeff = 1.0);
  SupportEvaluator& add(const SupportEvaluator& other, double coeff = 1.0);
  SupportEvaluator& add_linear(const Vec3& v);

  double operator()(const Vec3& u) const;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Vec3& shift() const noexcept { return shift_; }

 private:
  std::vector<Term> terms_;
  Vec3 shift_ = Vec3::Zero();
};

SupportEvaluator operator+(SupportEvaluator a, const SupportEvaluator& b);
SupportEvaluator operator-(SupportEvaluator a, const SupportEvaluator& b);
SupportEvaluator operator*(double c, const SupportEvaluator& f);

/// u(theta) = start cos(theta) + tangent sin(theta), theta in [0, length].
struct Arc {
  Vec3 start;
  Vec3 tangent;
  double length;

  /// Shortest geodesic from a to b; requires a != +-b.
  static Arc between(const Vec3& a, const Vec3& b);

  Vec3 point(double theta) const;
  Vec3 velocity(double theta) const;
  Vec3 end() const { return point(length); }
  /// Integral of u dH^1 along the arc.
  Vec3 first_moment() const;
};

/// On each piece [breaks[k], breaks[k+1]]:
///   f(theta) = alpha cos(theta) + beta sin(theta) + gamma.
class PiecewiseSinusoid {
 public:
  struct Coeffs {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
  };

  PiecewiseSinusoid(std::vector<double> breaks, std::vector<Coeffs> pieces);

  const std::vector<double>& breaks() const noexcept { return breaks_; }
  const std::vector<Coeffs>& pieces() const noexcept { return pieces_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }
  std::size_t piece_at(double theta) const;

  double value(double theta) const;
  /// One-sided derivative taken from the piece containing theta.
  double derivative(double theta) const;
  static double value(const Coeffs& c, double theta);
  static double derivative(const Coeffs& c, double theta);

 private:
  std::vector<double> breaks_;
  std::vector<Coeffs> pieces_;
};

/// Exact restriction of f to the arc. The active vertex of each polytope term
/// is constant between breakpoints, found as the outer normal angles of the
/// polytope's projection onto span(start, tangent).
PiecewiseSinusoid restrict_to_arc(const SupportEvaluator& f, const Arc& arc);

/// Integrals over [0, arc.length] of f*g and f'*g' with breakpoint-aware
/// adaptive Gauss-Legendre quadrature.
struct ArcProducts {
  double fg;
  double dfdg;
};
ArcProducts integrate_products(const PiecewiseSinusoid& f, const PiecewiseSinusoid& g,
                               double length, double quad_tol);

double integrate_on_arc(const PiecewiseSinusoid& f, double quad_tol);

/// Sample points for sup-norm checks: breakpoints plus Gauss nodes of each
/// piece, with their quadrature weights (zero for breakpoints).
struct ArcNode {
  double theta;
  double weight;
};
std::vector<ArcNode> arc_nodes(const PiecewiseSinusoid& f, double length);

}  // namespace minkq
