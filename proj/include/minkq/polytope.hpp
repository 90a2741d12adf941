#pragma once

// Polytope geometry in R^3: hulls with merged coplanar facets, support
// functions and faces, Minkowski sums, enclosing radii and the generators
// used to build test instances.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace minkq {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// A direction on S^2. Construction normalizes; the zero vector is rejected.
class UnitVector {
 public:
  explicit UnitVector(const Vec3& v);
  UnitVector(double x, double y, double z) : UnitVector(Vec3(x, y, z)) {}

  const Vec3& vec() const noexcept { return v_; }
  double operator[](int i) const { return v_[i]; }
  operator const Vec3&() const noexcept { return v_; }

 private:
  Vec3 v_;
};

/// Geodesic distance between two unit vectors, accurate near 0 and pi.
double angle_between(const Vec3& a, const Vec3& b);

struct Facet {
  UnitVector normal;
  double offset;            // h_P(normal)
  std::vector<int> cycle;   // vertex ids, counter-clockwise seen from outside
  double area;
};

struct Edge {
  int facet_a;  // facet_a < facet_b
  int facet_b;
  int v0;
  int v1;
  double length;
};

/// Convex polytope of affine dimension 0..3. For dimension 3 the facet and
/// edge combinatorics are populated; for dimension 2 the vertices are stored
/// in cyclic order around the polygon; lower dimensions carry only vertices.
class Polytope {
 public:
  /// Convex hull of `points`. When `require_full` is set, inputs spanning an
  /// affine subspace of dimension < 3 raise DegenerateInput.
  static Polytope hull(std::span<const Vec3> points, bool require_full = true);

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Vec3& centroid() const noexcept { return centroid_; }
  int dimension() const noexcept { return dim_; }
  bool full_dimensional() const noexcept { return dim_ == 3; }

  double support(const Vec3& u) const;
  /// Largest |v - centroid|; the length unit used for relative tolerances.
  double scale() const noexcept { return scale_; }
  double diameter() const;

  Polytope translated(const Vec3& shift) const;
  Polytope scaled(double factor) const;
  /// Translate so that the vertex centroid is the origin.
  Polytope centered() const { return translated(-centroid_); }

 private:
  Polytope() = default;
  void finish_metadata();

  std::vector<Vec3> vertices_;
  std::vector<Facet> facets_;
  std::vector<Edge> edges_;
  Vec3 centroid_ = Vec3::Zero();
  int dim_ = 0;
  double scale_ = 0.0;

  friend class HullBuilder;
};

struct Ball {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;

  Ball() = default;
  Ball(const Vec3& c, double r);
};

using Body = std::variant<Polytope, Ball>;

double support(const Body& body, const Vec3& u);

struct SupportData {
  double value;
  Polytope face;
};

/// h_K(u) together with the face F(K,u); a single point for balls.
SupportData support_data(const Body& body, const UnitVector& u);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Affine dimension of a point cloud, rank decided at 1e-9 relative to its
/// spread.
int affine_dimension(std::span<const Vec3> points);

struct TrivialClassification {
  int dim_k, dim_l, dim_m;
  int dim_kl, dim_km, dim_lm, dim_klm;
  /// V(L,L,M) = 0: dim L <= 1, dim M = 0 or dim(L+M) <= 2.
  bool vllm_vanishes;
  /// Meaningful only when vllm_vanishes: the dimension conditions under which
  /// V(K,L,M)^2 = V(K,K,M) V(L,L,M) holds in the trivial case.
  bool trivial_equality;
};

TrivialClassification classify_trivial(const Polytope& k, const Polytope& l,
                                       const Polytope& m);

struct EnclosingRadii {
  double r;
  double R;
};

/// Radii about the vertex centroid: rB + c ⊆ M ⊆ RB + c.
EnclosingRadii enclosing_radii(const Polytope& m);

// ---- test-body generators ----------------------------------------------

/// Cut the polytope with {<x,u> <= h_P(u) - depth}, u the normalized sum of
/// the directions of the edges arriving at `vertex`. With `vertex_only`, a
/// cut that reaches any other vertex raises BadSpec.
Polytope truncate_vertex(const Polytope& p, int vertex, double depth,
                         bool vertex_only = true);

/// Image under x -> x + amount * <x, height_axis> * shear_axis.
Polytope shear(const Polytope& p, const Vec3& shear_axis,
               const Vec3& height_axis, double amount);

/// Icosahedron refined `level` times with vertices projected to the unit
/// sphere.
Polytope approximate_ball(int level);

/// Hull of `count` points uniform in [-1,1]^3 drawn from `seed`.
Polytope random_hull(int count, std::uint64_t seed);

Polytope unit_cube();
/// The cube [-1/2, 1/2]^3.
Polytope centered_cube();
/// conv{0, e1, e2, e3}.
Polytope unit_simplex();
/// Regular tetrahedron with vertex centroid at the origin, circumradius 1.
Polytope regular_simplex();
Polytope segment(const Vec3& a, const Vec3& b);

}  // namespace minkq
