#include "minkq/quadrature.hpp"

#include <array>
#include <cmath>

#include "minkq/error.hpp"

namespace minkq {

namespace {

constexpr int kOrder = 10;
constexpr int kMaxDepth = 30;

struct Rule {
  std::array<double, kOrder> x;
  std::array<double, kOrder> w;
};

// Nodes by Newton iteration on P_n from the Chebyshev-like initial guesses.
Rule make_rule() {
  Rule r{};
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (kOrder + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= kOrder; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.x[i] = x;
    r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

struct Panel {
  double value;
  double l1;
};

Panel panel(const std::function<double(double)>& f, double a, double b) {
  const auto& r = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Panel p{0.0, 0.0};
  for (int i = 0; i < kOrder; ++i) {
    const double y = f(mid + half * r.x[i]);
    p.value += r.w[i] * y;
    p.l1 += r.w[i] * std::abs(y);
  }
  p.value *= half;
  p.l1 *= std::abs(half);
  return p;
}

double refine(const std::function<double(double)>& f, double a, double b, const Panel& whole,
              double rel_tol, double abs_floor, int depth) {
  const double m = 0.5 * (a + b);
  const Panel left = panel(f, a, m);
  const Panel right = panel(f, m, b);
  const double two = left.value + right.value;
  const double mass = std::max(left.l1 + right.l1, abs_floor);
  if (std::abs(two - whole.value) <= rel_tol * mass) return two;
  if (depth >= kMaxDepth) {
    fail(ErrorCode::QuadratureFailure, "adaptive quadrature exceeded depth 30");
  }
  return refine(f, a, m, left, rel_tol, abs_floor, depth + 1) +
         refine(f, m, b, right, rel_tol, abs_floor, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_floor) {
  if (!(rel_tol > 0.0)) fail(ErrorCode::BadParam, "quadrature tolerance must be positive");
  if (b == a) return 0.0;
  return refine(f, a, b, panel(f, a, b), rel_tol, abs_floor, 0);
}

void gauss_legendre_nodes(double a, double b,
                          const std::function<void(double, double)>& visit) {
  const auto& r = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < kOrder; ++i) visit(mid + half * r.x[i], half * r.w[i]);
}

}  // namespace minkq
