#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "minkq/error.hpp"
#include "minkq/lower_dim.hpp"
#include "minkq/mixed_volume.hpp"
#include "minkq/random.hpp"

using namespace minkq;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

Polytope square() {
  const Vec3 p[] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  return Polytope::hull(p, false);
}

Polytope hexagon(double s) {
  std::vector<Vec3> p;
  for (int i = 0; i < 6; ++i) p.emplace_back(s * std::cos(i * M_PI / 3), s * std::sin(i * M_PI / 3), 0);
  return Polytope::hull(p, false);
}

const UnitVector e3(0, 0, 1);

}  // namespace

TEST_CASE("polar coordinates") {
  const Vec3 z(1, 0, 0);
  CHECK((polar_point(e3, z, 0.0) - e3.vec()).norm() < 1e-15);
  CHECK((polar_point(e3, z, M_PI) + e3.vec()).norm() < 1e-15);
  CHECK((polar_point(e3, z, M_PI / 2) - z).norm() < 1e-15);
}

TEST_CASE("setup") {
  auto p = lowerdim_setup(square(), e3);
  REQUIRE(p.atoms.size() == 4);
  for (const auto& a : p.atoms) {
    CHECK(a.mass == doctest::Approx(1.0));
    CHECK(std::abs(a.z.vec().dot(e3.vec())) < 1e-15);
    // axis-aligned outward normals
    CHECK(std::abs(a.z.vec().cwiseAbs().maxCoeff() - 1.0) < 1e-15);
  }
  CHECK(p.balance_residual() <= 1e-12 * p.total_mass());
  CHECK(p.graph.vertices().size() == 2);
  CHECK(p.graph.edges().size() == 4);
  for (const auto& e : p.graph.edges()) CHECK(e.length == doctest::Approx(M_PI));

  p = lowerdim_setup(segment(Vec3::Zero(), Vec3::UnitX()), e3);
  REQUIRE(p.atoms.size() == 2);
  for (const auto& a : p.atoms) {
    CHECK(std::abs(std::abs(a.z[1]) - 1.0) < 1e-15);
    CHECK(a.mass == doctest::Approx(1.0));
  }
  CHECK(p.balance_residual() < 1e-15);

  p = lowerdim_setup(hexagon(0.7), e3);
  CHECK(p.atoms.size() == 6);
  for (const auto& a : p.atoms) CHECK(a.mass == doctest::Approx(0.7));
  CHECK(p.balance_residual() <= 1e-12 * p.total_mass());

  // a tilted plane through M with its own normal works too
  const UnitVector w(1, 1, 1);
  const Vec3 a = Vec3(1, -1, 0).normalized();
  const Vec3 b = w.vec().cross(a);
  const Vec3 pts[] = {Vec3::Zero(), a, a + b, b};
  p = lowerdim_setup(Polytope::hull(pts, false), w);
  CHECK(p.atoms.size() == 4);

  CHECK(code_of([] { lowerdim_setup(unit_cube(), e3); }) == ErrorCode::DimensionError);
  CHECK(code_of([] { lowerdim_setup(square(), UnitVector(1, 0, 0)); }) ==
        ErrorCode::DimensionError);
  const Vec3 pt[] = {Vec3(1, 2, 3)};
  CHECK(code_of([&] { lowerdim_setup(Polytope::hull(pt, false), e3); }) ==
        ErrorCode::DimensionError);
}

TEST_CASE("arc measure of a square") {
  const auto p = lowerdim_setup(square(), e3);
  CHECK(sbm_lowerdim(p, SupportEvaluator::one(), 1e-12) == doctest::Approx(2 * M_PI).epsilon(1e-14));
  CHECK(std::abs(sbm_lowerdim(p, SupportEvaluator::linear(e3.vec()), 1e-12)) < 1e-14);
  // int h_C dS_{B,M} = 3 V(B,C,M); with a thin cylinder as oracle
  const double via_cyl = [] {
    const Vec3 q[] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                      {0, 0, 1e-7}, {1, 0, 1e-7}, {1, 1, 1e-7}, {0, 1, 1e-7}};
    return 3.0 * mixed_volume_slots(Ball{}, unit_cube(), Polytope::hull(q));
  }();
  CHECK(sbm_lowerdim(p, SupportEvaluator(unit_cube()), 1e-12) ==
        doctest::Approx(via_cyl).epsilon(1e-6));
}

TEST_CASE("assembly on the pole graph") {
  const auto p = lowerdim_setup(square(), e3);
  const auto form = assemble_lowerdim(p, M_PI / 100);
  CHECK(form.layout.size == 4 * 99 + 2);
  const Eigen::VectorXd one = Eigen::VectorXd::Ones(form.layout.size);
  CHECK((form.E * one - form.mass * one / 3.0).norm() < 1e-12);

  // cos(theta) = <w, .> is a k = 1 kernel element; Rayleigh quotient O(h^2)
  double prev = 1.0;
  for (double h : {M_PI / 25, M_PI / 50, M_PI / 100}) {
    const auto f = assemble_lowerdim(p, h);
    const auto x = interpolate(f, SupportEvaluator::linear(e3.vec()));
    const double rq = std::abs(x.dot(f.E * x) / x.dot(f.mass * x));
    CHECK(rq < prev / 3.5);
    prev = rq;
  }
  CHECK(prev < 1e-3);
  CHECK(code_of([&] { assemble_lowerdim(p, 2.0 * M_PI); }) == ErrorCode::BadMesh);
}

TEST_CASE("explicit spectrum") {
  auto rep = verify_spectrum(lowerdim_setup(square(), e3), 2, M_PI / 200, 5e-3);
  CHECK(rep.ok);
  REQUIRE(rep.clusters.size() == 3);
  CHECK(rep.clusters[0].found == 1);
  CHECK(rep.clusters[1].found == 4);
  CHECK(rep.clusters[2].found == 4);
  CHECK(rep.clusters[2].target == doctest::Approx(-1.0));
  CHECK(rep.worst_deviation <= 5e-3);

  rep = verify_spectrum(lowerdim_setup(segment(Vec3::Zero(), Vec3::UnitX()), e3), 2, M_PI / 100,
                        5e-3);
  CHECK(rep.ok);
  CHECK(rep.clusters[1].found == 2);
  CHECK(rep.clusters[2].found == 2);

  rep = verify_spectrum(lowerdim_setup(hexagon(1.0), e3), 2, M_PI / 100, 5e-3);
  CHECK(rep.ok);
  CHECK(rep.clusters[1].found == 6);
  CHECK(rep.clusters[2].found == 6);
}

TEST_CASE("kernel of the pole graph contains the linear functions") {
  const auto p = lowerdim_setup(square(), e3);
  const auto form = assemble_lowerdim(p, M_PI / 100);
  const auto spec = spectrum(form, 12);
  const auto ker = kernel_analysis(spec, form, 10 * form.h * form.h);
  CHECK(ker.dimension == 4);
  CHECK(ker.angle_residual <= 1e-3);
  // pole values are shared, so every eigenvector is continuous at the poles by construction
  CHECK(form.layout.vertex_count == 2);
}

TEST_CASE("lower-dimensional certification") {
  const auto c = unit_cube();
  const auto seg = segment(Vec3::Zero(), Vec3::UnitX());
  const auto sh = shear(c, Vec3::UnitX(), Vec3::UnitZ(), 0.3);
  auto cert = certify_equality_lowerdim(c, sh, seg, e3);
  CHECK(cert.verdict == Verdict::Equality);
  CHECK(std::abs(cert.deficit.deficit) <= 1e-10 * cert.deficit.scale);
  CHECK(cert.sup_residual <= 1e-8);
  CHECK(cert.a == doctest::Approx(1.0));

  Rng rng(51);
  for (int i = 0; i < 3; ++i) {
    const auto k = random_hull(10, rng.next());
    cert = certify_equality_lowerdim(k, k.translated(rng.uniform(-2, 2) * e3.vec()), square(), e3);
    CHECK(cert.verdict == Verdict::Equality);
    CHECK(cert.sup_residual <= 1e-12 * k.scale());
  }

  // K + N with N a segment in w^perp transverse to M
  const auto n = segment(Vec3::Zero(), Vec3::UnitY());
  const auto kn = minkowski_sum(c, n);
  cert = certify_equality_lowerdim(c, kn, seg, e3);
  const double vknm = mixed_volume(c, n, seg);
  CHECK(cert.deficit.deficit == doctest::Approx(vknm * vknm).epsilon(1e-8));
  CHECK(cert.verdict == Verdict::Strict);
  CHECK(cert.a != doctest::Approx(1.0));
  CHECK(certificate_consistent(cert));
}

TEST_CASE("cylinder limit") {
  const auto p = lowerdim_setup(square(), e3);
  const std::vector<double> eps{0.2, 0.1, 0.05, 0.025};
  auto rep = cylinder_limit_check(p, eps, SupportEvaluator::one());
  CHECK(rep.target == doctest::Approx(2 * M_PI));
  REQUIRE(rep.ratios.size() == 3);
  for (double r : rep.ratios) CHECK((r >= 1.7 && r <= 2.3));
  // Richardson extrapolation recovers the limit
  const double extrap = 2 * rep.values[3] - rep.values[2];
  CHECK(extrap == doctest::Approx(rep.target).epsilon(1e-4));

  rep = cylinder_limit_check(p, eps, SupportEvaluator(unit_cube()));
  for (double r : rep.ratios) CHECK((r >= 1.7 && r <= 2.3));

  CHECK(code_of([&] { cylinder_limit_check(p, {0.1, 0.0}, SupportEvaluator::one()); }) ==
        ErrorCode::DimensionError);
}
