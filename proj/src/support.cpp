#include "minkq/support.hpp"

#include <algorithm>
#include <cmath>

#include "minkq/error.hpp"
#include "minkq/quadrature.hpp"

namespace minkq {

namespace {

constexpr double kBreakMerge = 1e-14;

struct P2 {
  double x, y;
};

// Counter-clockwise hull of planar points, strict (collinear points dropped).
std::vector<P2> hull2(std::vector<P2> q) {
  std::sort(q.begin(), q.end(),
            [](const P2& a, const P2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  q.erase(std::unique(q.begin(), q.end(),
                      [](const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }),
          q.end());
  if (q.size() < 3) return q;
  auto cross = [](const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<P2> h(2 * q.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], q[i]) <= 0.0) --k;
    h[k++] = q[i];
  }
  for (std::size_t i = q.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], q[i]) <= 0.0) --k;
    h[k++] = q[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<double> merge_breaks(std::vector<double> b, double length) {
  b.push_back(0.0);
  b.push_back(length);
  std::sort(b.begin(), b.end());
  std::vector<double> out;
  for (double x : b) {
    if (x < 0.0 || x > length) continue;
    if (out.empty() || x - out.back() > kBreakMerge) {
      out.push_back(x);
    }
  }
  if (out.back() != length) {
    if (out.size() > 1 && length - out.back() <= kBreakMerge) out.back() = length;
    else out.push_back(length);
  }
  if (out.size() < 2) out = {0.0, length};
  return out;
}

}  // namespace

SupportEvaluator::SupportEvaluator(Body body, double coeff) { add(std::move(body), coeff); }

SupportEvaluator SupportEvaluator::linear(const Vec3& v) {
  SupportEvaluator f;
  f.shift_ = v;
  return f;
}

SupportEvaluator SupportEvaluator::one() { return SupportEvaluator(Ball{}); }

SupportEvaluator& SupportEvaluator::add(Body body, double coeff) {
  terms_.push_back({coeff, std::make_shared<const Body>(std::move(body))});
  return *this;
}

SupportEvaluator& SupportEvaluator::add(const SupportEvaluator& other, double coeff) {
  for (const auto& t : other.terms_) terms_.push_back({coeff * t.coeff, t.body});
  shift_ += coeff * other.shift_;
  return *this;
}

SupportEvaluator& SupportEvaluator::add_linear(const Vec3& v) {
  shift_ += v;
  return *this;
}

double SupportEvaluator::operator()(const Vec3& u) const {
  double s = shift_.dot(u);
  for (const auto& t : terms_) s += t.coeff * support(*t.body, u);
  return s;
}

SupportEvaluator operator+(SupportEvaluator a, const SupportEvaluator& b) {
  a.add(b, 1.0);
  return a;
}

SupportEvaluator operator-(SupportEvaluator a, const SupportEvaluator& b) {
  a.add(b, -1.0);
  return a;
}

SupportEvaluator operator*(double c, const SupportEvaluator& f) {
  SupportEvaluator out;
  out.add(f, c);
  return out;
}

Arc Arc::between(const Vec3& a, const Vec3& b) {
  const double len = angle_between(a, b);
  Vec3 t = b - a.dot(b) * a;
  const double tn = t.norm();
  if (!(tn > 0.0)) fail(ErrorCode::BadParam, "arc endpoints must not be parallel");
  return Arc{a, t / tn, len};
}

Vec3 Arc::point(double theta) const {
  return std::cos(theta) * start + std::sin(theta) * tangent;
}

Vec3 Arc::velocity(double theta) const {
  return -std::sin(theta) * start + std::cos(theta) * tangent;
}

Vec3 Arc::first_moment() const {
  return std::sin(length) * start + (1.0 - std::cos(length)) * tangent;
}

PiecewiseSinusoid::PiecewiseSinusoid(std::vector<double> breaks, std::vector<Coeffs> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (breaks_.size() != pieces_.size() + 1 || pieces_.empty()) {
    fail(ErrorCode::BadParam, "piecewise sinusoid needs one more break than pieces");
  }
}

std::size_t PiecewiseSinusoid::piece_at(double theta) const {
  auto it = std::upper_bound(breaks_.begin() + 1, breaks_.end() - 1, theta);
  return static_cast<std::size_t>(it - (breaks_.begin() + 1));
}

double PiecewiseSinusoid::value(const Coeffs& c, double theta) {
  return c.alpha * std::cos(theta) + c.beta * std::sin(theta) + c.gamma;
}

double PiecewiseSinusoid::derivative(const Coeffs& c, double theta) {
  return -c.alpha * std::sin(theta) + c.beta * std::cos(theta);
}

double PiecewiseSinusoid::value(double theta) const {
  return value(pieces_[piece_at(theta)], theta);
}

double PiecewiseSinusoid::derivative(double theta) const {
  return derivative(pieces_[piece_at(theta)], theta);
}

PiecewiseSinusoid restrict_to_arc(const SupportEvaluator& f, const Arc& arc) {
  struct Projected {
    double coeff;
    std::vector<P2> hull;
  };
  std::vector<Projected> polys;
  PiecewiseSinusoid::Coeffs smooth;
  smooth.alpha = f.shift().dot(arc.start);
  smooth.beta = f.shift().dot(arc.tangent);
  std::vector<double> breaks;
  for (const auto& term : f.terms()) {
    if (const auto* ball = std::get_if<Ball>(term.body.get())) {
      smooth.alpha += term.coeff * ball->center.dot(arc.start);
      smooth.beta += term.coeff * ball->center.dot(arc.tangent);
      smooth.gamma += term.coeff * ball->radius;
      continue;
    }
    const auto& p = std::get<Polytope>(*term.body);
    std::vector<P2> q;
    q.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) q.push_back({v.dot(arc.start), v.dot(arc.tangent)});
    auto h = hull2(std::move(q));
    if (h.size() >= 2) {
      for (std::size_t i = 0; i < h.size(); ++i) {
        const P2& a = h[i];
        const P2& b = h[(i + 1) % h.size()];
        double phi = std::atan2(-(b.x - a.x), b.y - a.y);
        if (phi < 0.0) phi += 2.0 * M_PI;
        if (phi > 0.0 && phi < arc.length) breaks.push_back(phi);
      }
    }
    polys.push_back({term.coeff, std::move(h)});
  }
  auto b = merge_breaks(std::move(breaks), arc.length);
  std::vector<PiecewiseSinusoid::Coeffs> pieces;
  pieces.reserve(b.size() - 1);
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    const double mid = 0.5 * (b[k] + b[k + 1]);
    const double cm = std::cos(mid);
    const double sm = std::sin(mid);
    PiecewiseSinusoid::Coeffs c = smooth;
    for (const auto& poly : polys) {
      const P2* best = &poly.hull.front();
      double best_val = best->x * cm + best->y * sm;
      for (const auto& pt : poly.hull) {
        const double v = pt.x * cm + pt.y * sm;
        if (v > best_val) {
          best_val = v;
          best = &pt;
        }
      }
      c.alpha += poly.coeff * best->x;
      c.beta += poly.coeff * best->y;
    }
    pieces.push_back(c);
  }
  return PiecewiseSinusoid(std::move(b), std::move(pieces));
}

ArcProducts integrate_products(const PiecewiseSinusoid& f, const PiecewiseSinusoid& g,
                               double length, double quad_tol) {
  std::vector<double> all = f.breaks();
  all.insert(all.end(), g.breaks().begin(), g.breaks().end());
  const auto b = merge_breaks(std::move(all), length);
  ArcProducts out{0.0, 0.0};
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    const double mid = 0.5 * (b[k] + b[k + 1]);
    const auto& cf = f.pieces()[f.piece_at(mid)];
    const auto& cg = g.pieces()[g.piece_at(mid)];
    out.fg += integrate_adaptive(
        [&](double t) {
          return PiecewiseSinusoid::value(cf, t) * PiecewiseSinusoid::value(cg, t);
        },
        b[k], b[k + 1], quad_tol);
    out.dfdg += integrate_adaptive(
        [&](double t) {
          return PiecewiseSinusoid::derivative(cf, t) * PiecewiseSinusoid::derivative(cg, t);
        },
        b[k], b[k + 1], quad_tol);
  }
  return out;
}

double integrate_on_arc(const PiecewiseSinusoid& f, double quad_tol) {
  double s = 0.0;
  const auto& b = f.breaks();
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    const auto& c = f.pieces()[k];
    s += integrate_adaptive([&](double t) { return PiecewiseSinusoid::value(c, t); }, b[k],
                            b[k + 1], quad_tol);
  }
  return s;
}

std::vector<ArcNode> arc_nodes(const PiecewiseSinusoid& f, double length) {
  std::vector<ArcNode> nodes;
  const auto& b = f.breaks();
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    nodes.push_back({b[k], 0.0});
    gauss_legendre_nodes(b[k], b[k + 1],
                         [&](double t, double w) { nodes.push_back({t, w}); });
  }
  nodes.push_back({length, 0.0});
  return nodes;
}

}  // namespace minkq
