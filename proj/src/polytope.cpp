#include "minkq/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "minkq/error.hpp"
#include "minkq/random.hpp"

namespace minkq {

namespace {

// Rank decisions (affine dimension), relative to the point spread.
constexpr double kDimTol = 1e-9;
// Thickness of a facet plane during incremental construction, relative to
// the coordinate magnitude.
constexpr double kPlaneTol = 1e-13;
// Adjacent triangles are merged into one facet when their normals deviate by
// less than kMergeAngle or when each lies within kMergeDist (relative) of
// the other's plane.
constexpr double kMergeAngle = 1e-9;
constexpr double kMergeDist = 1e-10;
// Boundary points closer than this (relative) to the chord of their
// neighbours are not corners.
constexpr double kCollinearTol = 1e-10;

struct AffineFrame {
  int dim = 0;
  std::array<int, 4> anchor{0, 0, 0, 0};
  double spread = 0.0;
};

double distance_to_line(const Vec3& p, const Vec3& a, const Vec3& dir) {
  const Vec3 d = p - a;
  return (d - d.dot(dir) * dir).norm();
}

AffineFrame find_frame(std::span<const Vec3> pts) {
  AffineFrame f;
  if (pts.empty()) fail(ErrorCode::DegenerateInput, "empty point set");
  double max_norm = 0.0;
  int i0 = 0;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    for (int k = 0; k < 3; ++k) {
      if (!std::isfinite(pts[i][k])) {
        fail(ErrorCode::DegenerateInput, "non-finite coordinate");
      }
    }
    max_norm = std::max(max_norm, pts[i].norm());
    const auto& a = pts[i];
    const auto& b = pts[i0];
    if (a.x() < b.x() || (a.x() == b.x() && (a.y() < b.y() || (a.y() == b.y() && a.z() < b.z())))) {
      i0 = i;
    }
  }
  f.anchor[0] = i0;
  int i1 = i0;
  double best = 0.0;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const double d = (pts[i] - pts[i0]).norm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  f.spread = best;
  if (best <= 1e-12 * max_norm || best == 0.0) return f;
  f.dim = 1;
  f.anchor[1] = i1;
  const Vec3 dir = (pts[i1] - pts[i0]).normalized();
  int i2 = i0;
  best = 0.0;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const double d = distance_to_line(pts[i], pts[i0], dir);
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (best <= kDimTol * f.spread) return f;
  f.dim = 2;
  f.anchor[2] = i2;
  const Vec3 n = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
  int i3 = i0;
  best = 0.0;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const double d = std::abs(n.dot(pts[i] - pts[i0]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (best <= kDimTol * f.spread) return f;
  f.dim = 3;
  f.anchor[3] = i3;
  return f;
}

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

Vec3 newell_normal(const std::vector<Vec3>& pts, const std::vector<int>& cycle) {
  Vec3 n = Vec3::Zero();
  const Vec3& o = pts[cycle.front()];
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vec3 a = pts[cycle[i]] - o;
    const Vec3 b = pts[cycle[(i + 1) % cycle.size()]] - o;
    n += a.cross(b);
  }
  return n;
}

}  // namespace

UnitVector::UnitVector(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    fail(ErrorCode::BadParam, "cannot normalize a zero or non-finite vector");
  }
  v_ = v / n;
}

double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

Ball::Ball(const Vec3& c, double r) : center(c), radius(r) {
  if (!(r > 0.0)) fail(ErrorCode::BadParam, "ball radius must be positive");
}

// Incremental 3D hull with thick planes, followed by merging of coplanar
// triangles into polygonal facets.
class HullBuilder {
 public:
  HullBuilder(std::span<const Vec3> pts, const AffineFrame& frame)
      : pts_(pts), frame_(frame) {
    double m = 0.0;
    for (const auto& p : pts_) m = std::max(m, p.cwiseAbs().maxCoeff());
    magnitude_ = std::max(m, frame.spread);
    eps_ = kPlaneTol * magnitude_;
  }

  Polytope build();

 private:
  struct Tri {
    std::array<int, 3> v;
    Vec3 n;
    double d;
    bool alive;
  };

  double dist(const Tri& t, const Vec3& p) const { return t.n.dot(p) - t.d; }
  int add_face(int a, int b, int c);
  void kill_face(int f);
  int neighbour(int f, int e) const;
  void insert(int pi);

  std::span<const Vec3> pts_;
  AffineFrame frame_;
  double magnitude_ = 0.0;
  double eps_ = 0.0;
  std::vector<Tri> faces_;
  std::unordered_map<std::uint64_t, int> edges_;
};

int HullBuilder::add_face(int a, int b, int c) {
  Tri t;
  t.v = {a, b, c};
  const Vec3& pa = pts_[a];
  Vec3 n = (pts_[b] - pa).cross(pts_[c] - pa);
  const double len = n.norm();
  t.n = len > 0.0 ? Vec3(n / len) : Vec3::Zero();
  t.d = t.n.dot(pa);
  t.alive = true;
  const int id = static_cast<int>(faces_.size());
  faces_.push_back(t);
  for (int e = 0; e < 3; ++e) edges_[edge_key(t.v[e], t.v[(e + 1) % 3])] = id;
  return id;
}

void HullBuilder::kill_face(int f) {
  auto& t = faces_[f];
  t.alive = false;
  for (int e = 0; e < 3; ++e) {
    auto it = edges_.find(edge_key(t.v[e], t.v[(e + 1) % 3]));
    if (it != edges_.end() && it->second == f) edges_.erase(it);
  }
}

int HullBuilder::neighbour(int f, int e) const {
  const auto& t = faces_[f];
  auto it = edges_.find(edge_key(t.v[(e + 1) % 3], t.v[e]));
  if (it == edges_.end()) fail(ErrorCode::NumericalFailure, "hull lost manifold structure");
  return it->second;
}

void HullBuilder::insert(int pi) {
  const Vec3& p = pts_[pi];
  int start = -1;
  double best = eps_;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    if (!faces_[f].alive) continue;
    const double d = dist(faces_[f], p);
    if (d > best) {
      best = d;
      start = f;
    }
  }
  if (start < 0) return;

  std::vector<char> visible(faces_.size(), 0);
  std::vector<int> region{start};
  visible[start] = 1;
  for (std::size_t i = 0; i < region.size(); ++i) {
    for (int e = 0; e < 3; ++e) {
      const int g = neighbour(region[i], e);
      if (!visible[g] && dist(faces_[g], p) > eps_) {
        visible[g] = 1;
        region.push_back(g);
      }
    }
  }

  std::vector<std::pair<int, int>> horizon;
  auto collect_horizon = [&]() {
    horizon.clear();
    for (int f : region) {
      for (int e = 0; e < 3; ++e) {
        const int g = neighbour(f, e);
        if (!visible[g]) horizon.emplace_back(faces_[f].v[e], faces_[f].v[(e + 1) % 3]);
      }
    }
  };
  auto horizon_is_loop = [&]() {
    std::unordered_map<int, int> next;
    for (auto [a, b] : horizon) {
      if (!next.emplace(a, b).second) return false;
    }
    int v = horizon.front().first;
    std::size_t steps = 0;
    do {
      auto it = next.find(v);
      if (it == next.end()) return false;
      v = it->second;
      ++steps;
    } while (v != horizon.front().first && steps <= horizon.size());
    return steps == horizon.size();
  };

  collect_horizon();
  if (!horizon_is_loop()) {
    // A nearly coplanar face enclosed by the visible region; absorb
    // neighbours that p does not lie clearly below.
    const std::size_t n0 = region.size();
    for (std::size_t i = 0; i < n0; ++i) {
      for (int e = 0; e < 3; ++e) {
        const int g = neighbour(region[i], e);
        if (!visible[g] && dist(faces_[g], p) > -eps_) {
          visible[g] = 1;
          region.push_back(g);
        }
      }
    }
    collect_horizon();
    if (!horizon_is_loop()) {
      fail(ErrorCode::NumericalFailure, "hull horizon is not a simple loop");
    }
  }

  for (int f : region) kill_face(f);
  for (auto [a, b] : horizon) add_face(a, b, pi);
}

Polytope HullBuilder::build() {
  const auto& a = frame_.anchor;
  {
    int i0 = a[0], i1 = a[1], i2 = a[2], i3 = a[3];
    const Vec3 n = (pts_[i1] - pts_[i0]).cross(pts_[i2] - pts_[i0]);
    if (n.dot(pts_[i3] - pts_[i0]) > 0.0) std::swap(i1, i2);
    add_face(i0, i1, i2);
    add_face(i0, i3, i1);
    add_face(i1, i3, i2);
    add_face(i2, i3, i0);
  }
  const Vec3 interior = (pts_[a[0]] + pts_[a[1]] + pts_[a[2]] + pts_[a[3]]) / 4.0;
  std::vector<int> order(pts_.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> far(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) far[i] = (pts_[i] - interior).squaredNorm();
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return far[x] > far[y]; });
  for (int pi : order) {
    if (pi == a[0] || pi == a[1] || pi == a[2] || pi == a[3]) continue;
    insert(pi);
  }

  // Merge coplanar triangles.
  const int nf = static_cast<int>(faces_.size());
  UnionFind uf(nf);
  const double merge_dist = kMergeDist * magnitude_;
  for (int f = 0; f < nf; ++f) {
    if (!faces_[f].alive) continue;
    for (int e = 0; e < 3; ++e) {
      const int g = neighbour(f, e);
      if (g < f) continue;
      const auto& tf = faces_[f];
      const auto& tg = faces_[g];
      bool merge = angle_between(tf.n, tg.n) <= kMergeAngle;
      if (!merge) {
        const int opp_g = tg.v[0] + tg.v[1] + tg.v[2] - tf.v[e] - tf.v[(e + 1) % 3];
        const int opp_f = tf.v[(e + 2) % 3];
        merge = std::abs(dist(tf, pts_[opp_g])) <= merge_dist &&
                std::abs(dist(tg, pts_[opp_f])) <= merge_dist;
      }
      if (merge) uf.unite(f, g);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (int f = 0; f < nf; ++f) {
    if (faces_[f].alive) groups[uf.find(f)].push_back(f);
  }

  // Boundary cycle of each group.
  std::vector<std::vector<int>> cycles;
  for (const auto& [root, members] : groups) {
    std::unordered_map<int, int> next;
    int first = -1;
    for (int f : members) {
      for (int e = 0; e < 3; ++e) {
        const int g = neighbour(f, e);
        if (uf.find(g) == root) continue;
        const int va = faces_[f].v[e];
        const int vb = faces_[f].v[(e + 1) % 3];
        if (!next.emplace(va, vb).second) {
          fail(ErrorCode::NumericalFailure, "facet boundary is pinched");
        }
        if (first < 0 || va < first) first = va;
      }
    }
    std::vector<int> cyc;
    int v = first;
    do {
      cyc.push_back(v);
      auto it = next.find(v);
      if (it == next.end()) fail(ErrorCode::NumericalFailure, "open facet boundary");
      v = it->second;
    } while (v != first && cyc.size() <= next.size());
    if (cyc.size() != next.size()) {
      fail(ErrorCode::NumericalFailure, "facet boundary has several loops");
    }
    cycles.push_back(std::move(cyc));
  }

  // Corners: boundary points that are not collinear with their neighbours in
  // at least one facet.
  const double col_tol = kCollinearTol * magnitude_;
  std::vector<char> corner(pts_.size(), 0);
  for (const auto& cyc : cycles) {
    std::vector<int> c = cyc;
    bool changed = true;
    while (changed && c.size() > 3) {
      changed = false;
      for (std::size_t i = 0; i < c.size() && c.size() > 3; ++i) {
        const Vec3& prev = pts_[c[(i + c.size() - 1) % c.size()]];
        const Vec3& next = pts_[c[(i + 1) % c.size()]];
        const Vec3 chord = next - prev;
        const double len = chord.norm();
        if (len == 0.0 || distance_to_line(pts_[c[i]], prev, chord / len) <= col_tol) {
          c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    for (int v : c) corner[v] = 1;
  }

  std::vector<int> remap(pts_.size(), -1);
  Polytope out;
  for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
    if (corner[i]) {
      remap[i] = static_cast<int>(out.vertices_.size());
      out.vertices_.push_back(pts_[i]);
    }
  }

  for (const auto& cyc : cycles) {
    std::vector<int> c;
    for (int v : cyc) {
      if (corner[v]) c.push_back(remap[v]);
    }
    if (c.size() < 3) fail(ErrorCode::NumericalFailure, "degenerate facet after merging");
    const Vec3 nn = newell_normal(out.vertices_, c);
    const UnitVector normal(nn);
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& v : out.vertices_) h = std::max(h, normal.vec().dot(v));
    const double area = 0.5 * nn.dot(normal.vec());
    out.facets_.push_back(Facet{normal, h, std::move(c), std::max(area, 0.0)});
  }

  std::unordered_map<std::uint64_t, int> owner;
  for (int fi = 0; fi < static_cast<int>(out.facets_.size()); ++fi) {
    const auto& c = out.facets_[fi].cycle;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!owner.emplace(edge_key(c[i], c[(i + 1) % c.size()]), fi).second) {
        fail(ErrorCode::NumericalFailure, "duplicated directed edge in hull");
      }
    }
  }
  for (int fi = 0; fi < static_cast<int>(out.facets_.size()); ++fi) {
    const auto& c = out.facets_[fi].cycle;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int va = c[i];
      const int vb = c[(i + 1) % c.size()];
      auto it = owner.find(edge_key(vb, va));
      if (it == owner.end()) fail(ErrorCode::NumericalFailure, "unmatched hull edge");
      if (fi < it->second) {
        out.edges_.push_back(Edge{fi, it->second, va, vb,
                                  (out.vertices_[vb] - out.vertices_[va]).norm()});
      }
    }
  }
  const long euler = static_cast<long>(out.vertices_.size()) -
                     static_cast<long>(out.edges_.size()) +
                     static_cast<long>(out.facets_.size());
  if (euler != 2) {
    std::ostringstream os;
    os << "hull violates Euler relation (V-E+F=" << euler << ")";
    fail(ErrorCode::NumericalFailure, os.str());
  }
  out.dim_ = 3;
  out.finish_metadata();
  return out;
}

Polytope Polytope::hull(std::span<const Vec3> points, bool require_full) {
  const AffineFrame frame = find_frame(points);
  if (require_full && frame.dim < 3) {
    std::ostringstream os;
    os << "point set has affine dimension " << frame.dim << ", need 3";
    fail(ErrorCode::DegenerateInput, os.str());
  }
  if (frame.dim == 3) return HullBuilder(points, frame).build();

  Polytope out;
  out.dim_ = frame.dim;
  const auto& a = frame.anchor;
  if (frame.dim == 0) {
    out.vertices_.push_back(points[a[0]]);
  } else if (frame.dim == 1) {
    const Vec3 o = points[a[0]];
    const Vec3 dir = (points[a[1]] - o).normalized();
    int lo = a[0], hi = a[0];
    double tlo = 0.0, thi = 0.0;
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      const double t = dir.dot(points[i] - o);
      if (t < tlo) { tlo = t; lo = i; }
      if (t > thi) { thi = t; hi = i; }
    }
    out.vertices_ = {points[lo], points[hi]};
  } else {
    // Planar: monotone chain in an orthonormal frame of the plane.
    const Vec3 o = points[a[0]];
    const Vec3 e1 = (points[a[1]] - o).normalized();
    Vec3 e2 = points[a[2]] - o;
    e2 = (e2 - e2.dot(e1) * e1).normalized();
    struct P2 { double x, y; int idx; };
    std::vector<P2> q;
    q.reserve(points.size());
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      const Vec3 d = points[i] - o;
      q.push_back({d.dot(e1), d.dot(e2), i});
    }
    std::sort(q.begin(), q.end(), [](const P2& l, const P2& r) {
      return l.x < r.x || (l.x == r.x && l.y < r.y);
    });
    const double tol = kCollinearTol * frame.spread;
    auto cross = [](const P2& o2, const P2& p, const P2& r) {
      return (p.x - o2.x) * (r.y - o2.y) - (p.y - o2.y) * (r.x - o2.x);
    };
    std::vector<P2> h(2 * q.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      while (k >= 2) {
        const double len = std::hypot(q[i].x - h[k - 2].x, q[i].y - h[k - 2].y);
        if (cross(h[k - 2], h[k - 1], q[i]) <= tol * len) --k; else break;
      }
      h[k++] = q[i];
    }
    for (std::size_t i = q.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t) {
        const double len = std::hypot(q[i].x - h[k - 2].x, q[i].y - h[k - 2].y);
        if (cross(h[k - 2], h[k - 1], q[i]) <= tol * len) --k; else break;
      }
      h[k++] = q[i];
    }
    h.resize(k - 1);
    for (const auto& p : h) out.vertices_.push_back(points[p.idx]);
  }
  out.finish_metadata();
  return out;
}

void Polytope::finish_metadata() {
  centroid_ = Vec3::Zero();
  for (const auto& v : vertices_) centroid_ += v;
  centroid_ /= static_cast<double>(vertices_.size());
  scale_ = 0.0;
  for (const auto& v : vertices_) scale_ = std::max(scale_, (v - centroid_).norm());
}

double Polytope::support(const Vec3& u) const {
  double h = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) h = std::max(h, v.dot(u));
  return h;
}

double Polytope::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      d = std::max(d, (vertices_[i] - vertices_[j]).norm());
    }
  }
  return d;
}

Polytope Polytope::translated(const Vec3& shift) const {
  Polytope p = *this;
  for (auto& v : p.vertices_) v += shift;
  for (auto& f : p.facets_) f.offset += f.normal.vec().dot(shift);
  p.centroid_ += shift;
  return p;
}

Polytope Polytope::scaled(double factor) const {
  if (!(factor > 0.0)) fail(ErrorCode::BadParam, "scale factor must be positive");
  Polytope p = *this;
  for (auto& v : p.vertices_) v *= factor;
  for (auto& f : p.facets_) {
    f.offset *= factor;
    f.area *= factor * factor;
  }
  for (auto& e : p.edges_) e.length *= factor;
  p.centroid_ *= factor;
  p.scale_ *= factor;
  return p;
}

double support(const Body& body, const Vec3& u) {
  if (const auto* p = std::get_if<Polytope>(&body)) return p->support(u);
  const auto& b = std::get<Ball>(body);
  return b.center.dot(u) + b.radius * u.norm();
}

SupportData support_data(const Body& body, const UnitVector& u) {
  if (const auto* p = std::get_if<Polytope>(&body)) {
    const double value = p->support(u);
    double mag = p->scale();
    for (const auto& v : p->vertices()) mag = std::max(mag, v.norm());
    const double tol = 1e-12 * mag;
    std::vector<Vec3> face;
    for (const auto& v : p->vertices()) {
      if (v.dot(u.vec()) >= value - tol) face.push_back(v);
    }
    return {value, Polytope::hull(face, false)};
  }
  const auto& b = std::get<Ball>(body);
  const Vec3 point = b.center + b.radius * u.vec();
  return {b.center.dot(u.vec()) + b.radius, Polytope::hull(std::span<const Vec3>(&point, 1), false)};
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  std::vector<Vec3> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  }
  return Polytope::hull(pts, false);
}

int affine_dimension(std::span<const Vec3> points) { return find_frame(points).dim; }

TrivialClassification classify_trivial(const Polytope& k, const Polytope& l,
                                       const Polytope& m) {
  TrivialClassification c{};
  c.dim_k = k.dimension();
  c.dim_l = l.dimension();
  c.dim_m = m.dimension();
  const Polytope kl = minkowski_sum(k, l);
  const Polytope km = minkowski_sum(k, m);
  const Polytope lm = minkowski_sum(l, m);
  c.dim_kl = kl.dimension();
  c.dim_km = km.dimension();
  c.dim_lm = lm.dimension();
  c.dim_klm = minkowski_sum(kl, m).dimension();
  c.vllm_vanishes = c.dim_l <= 1 || c.dim_m <= 0 || c.dim_lm <= 2;
  c.trivial_equality = c.dim_k == 0 || c.dim_l == 0 || c.dim_kl <= 1 ||
                       c.dim_m <= 0 || c.dim_km <= 1 || c.dim_lm <= 1 ||
                       c.dim_klm <= 2;
  return c;
}

EnclosingRadii enclosing_radii(const Polytope& m) {
  if (!m.full_dimensional()) {
    fail(ErrorCode::DegenerateInput, "enclosing radii need a full-dimensional polytope");
  }
  const Vec3& c = m.centroid();
  double r = std::numeric_limits<double>::infinity();
  for (const auto& f : m.facets()) r = std::min(r, f.offset - f.normal.vec().dot(c));
  double big_r = 0.0;
  for (const auto& v : m.vertices()) big_r = std::max(big_r, (v - c).norm());
  return {r, big_r};
}

Polytope truncate_vertex(const Polytope& p, int vertex, double depth, bool vertex_only) {
  if (!p.full_dimensional()) fail(ErrorCode::BadSpec, "truncation needs a 3-polytope");
  if (vertex < 0 || vertex >= static_cast<int>(p.vertices().size())) {
    fail(ErrorCode::BadSpec, "vertex id out of range");
  }
  if (!(depth > 0.0)) fail(ErrorCode::BadSpec, "truncation depth must be positive");
  const Vec3& x = p.vertices()[vertex];
  Vec3 dir = Vec3::Zero();
  for (const auto& e : p.edges()) {
    if (e.v0 == vertex) dir += (x - p.vertices()[e.v1]).normalized();
    if (e.v1 == vertex) dir += (x - p.vertices()[e.v0]).normalized();
  }
  const UnitVector u(dir);
  const double cut = p.support(u) - depth;
  const double tol = 1e-12 * std::max(p.scale(), 1.0);
  std::vector<Vec3> pts;
  for (int i = 0; i < static_cast<int>(p.vertices().size()); ++i) {
    const double s = p.vertices()[i].dot(u.vec());
    if (s <= cut) pts.push_back(p.vertices()[i]);
    if (i != vertex && vertex_only && s >= cut - tol) {
      fail(ErrorCode::BadSpec, "truncation depth reaches a neighbouring vertex");
    }
  }
  if (pts.empty()) fail(ErrorCode::BadSpec, "truncation removes the whole polytope");
  for (const auto& e : p.edges()) {
    const Vec3& a = p.vertices()[e.v0];
    const Vec3& b = p.vertices()[e.v1];
    const double sa = a.dot(u.vec()) - cut;
    const double sb = b.dot(u.vec()) - cut;
    if ((sa > 0.0) != (sb > 0.0)) {
      const double t = sa / (sa - sb);
      pts.push_back(a + t * (b - a));
    }
  }
  return Polytope::hull(pts, false);
}

Polytope shear(const Polytope& p, const Vec3& shear_axis, const Vec3& height_axis,
               double amount) {
  std::vector<Vec3> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(v + amount * v.dot(height_axis) * shear_axis);
  return Polytope::hull(pts, false);
}

Polytope approximate_ball(int level) {
  if (level < 0 || level > 7) fail(ErrorCode::BadSpec, "ball refinement level must be in [0,7]");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& p : v) p.normalize();
  std::vector<std::array<int, 3>> tris = {
      {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8}, {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8},
      {3, 8, 9}, {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};
  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      v.push_back((v[a] + v[b]).normalized());
      const int id = static_cast<int>(v.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(tris.size() * 4);
    for (const auto& tr : tris) {
      const int ab = midpoint(tr[0], tr[1]);
      const int bc = midpoint(tr[1], tr[2]);
      const int ca = midpoint(tr[2], tr[0]);
      next.push_back({tr[0], ab, ca});
      next.push_back({tr[1], bc, ab});
      next.push_back({tr[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
  return Polytope::hull(v);
}

Polytope random_hull(int count, std::uint64_t seed) {
  if (count < 4) fail(ErrorCode::BadSpec, "random hull needs at least 4 points");
  Rng rng(seed);
  std::vector<Vec3> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.push_back(rng.in_cube());
  return Polytope::hull(pts);
}

Polytope unit_cube() {
  std::vector<Vec3> pts;
  for (int i = 0; i < 8; ++i) pts.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
  return Polytope::hull(pts);
}

Polytope centered_cube() { return unit_cube().translated(Vec3(-0.5, -0.5, -0.5)); }

Polytope unit_simplex() {
  const std::vector<Vec3> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return Polytope::hull(pts);
}

Polytope regular_simplex() {
  const double s = 1.0 / std::sqrt(3.0);
  const std::vector<Vec3> pts = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  return Polytope::hull(pts);
}

Polytope segment(const Vec3& a, const Vec3& b) {
  const std::vector<Vec3> pts = {a, b};
  return Polytope::hull(pts, false);
}

}  // namespace minkq
