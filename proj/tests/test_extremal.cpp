#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "minkq/error.hpp"
#include "minkq/extremal.hpp"
#include "minkq/random.hpp"

using namespace minkq;

namespace {

int corner_111(const Polytope& c) {
  for (int i = 0; i < static_cast<int>(c.vertices().size()); ++i) {
    if ((c.vertices()[i] - Vec3(1, 1, 1)).norm() < 1e-12) return i;
  }
  return -1;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

}  // namespace

TEST_CASE("stability witness examples") {
  const auto c = unit_cube();
  const auto m = centered_cube();
  auto w = stability_witness(c, c, m);
  CHECK(w.a == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w.v.norm() < 1e-12);
  CHECK(w.residual < 1e-24);
  CHECK(w.C == doctest::Approx(w.r * w.r / (18 * w.R * w.R)));

  const Vec3 t(0.7, 0, 0);
  w = stability_witness(c.translated(t), c, m);
  CHECK(w.a == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((w.v - t).norm() < 1e-12);
  CHECK(w.residual < 1e-12);

  w = stability_witness(truncate_vertex(c, corner_111(c), 0.1), c, m);
  CHECK(w.residual < 1e-12);

  // G is positive definite and symmetric
  Eigen::SelfAdjointEigenSolver<Mat3> es(w.G);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  CHECK((w.G - w.G.transpose()).norm() < 1e-14);

  const auto seg = segment(Vec3::Zero(), Vec3::UnitX());
  CHECK(code_of([&] { stability_witness(c, seg, seg.translated(Vec3(0, 1, 0))); }) != ErrorCode{});
}

TEST_CASE("witness is least-squares optimal") {
  Rng rng(41);
  for (int t = 0; t < 5; ++t) {
    const auto k = random_hull(10, rng.next());
    const auto l = random_hull(10, rng.next());
    const auto m = random_hull(10, rng.next()).centered();
    const auto w = stability_witness(k, l, m);
    CHECK(stability_residual(k, l, m, w.a, w.v) == doctest::Approx(w.residual).epsilon(1e-10));
    // a is pinned by mixed volumes; v minimizes over the facet normals
    for (int i = 0; i < 20; ++i) {
      const Vec3 dv = 1e-3 * rng.on_sphere();
      CHECK(stability_residual(k, l, m, w.a, w.v + dv) >= w.residual - 1e-14);
    }
  }
}

TEST_CASE("weak stability") {
  const auto c = unit_cube();
  auto rep = weak_stability_check(truncate_vertex(c, corner_111(c), 0.1), c, c);
  CHECK(rep.check.holds);
  CHECK(std::abs(rep.deficit.deficit) < 1e-10 * rep.deficit.scale);
  CHECK(rep.witness.residual < 1e-12);

  const auto ball = approximate_ball(3).scaled(0.5).translated(Vec3(0.5, 0.5, 0.5));
  rep = weak_stability_check(ball, c, c);
  CHECK(rep.check.holds);
  CHECK(rep.deficit.deficit > rep.witness.C * rep.deficit.vll * rep.witness.residual);
  CHECK(rep.check.margin() > 0.0);

  Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    const auto r = weak_stability_check(random_hull(8, rng.next()), random_hull(8, rng.next()),
                                        random_hull(8, rng.next()));
    CHECK(r.check.holds);
  }
}

TEST_CASE("full-dimensional certification") {
  const auto c = unit_cube();
  auto cert = certify_equality_fulldim(truncate_vertex(c, corner_111(c), 0.1), c, c);
  CHECK(cert.verdict == Verdict::Equality);
  CHECK(std::abs(cert.deficit.deficit) <= 1e-10 * cert.deficit.scale);
  CHECK(cert.sup_residual <= 1e-8 * cert.diameter);
  CHECK(cert.nodes > 0);
  CHECK(certificate_consistent(cert));

  cert = certify_equality_fulldim(truncate_vertex(c, corner_111(c), 0.8, false), c, c);
  CHECK(cert.verdict == Verdict::Strict);
  CHECK(cert.deficit.deficit > 1e-6 * cert.deficit.scale);
  CHECK(cert.sup_residual > 1e-4 * cert.diameter);
  CHECK(certificate_consistent(cert));

  Rng rng(43);
  for (int i = 0; i < 5; ++i) {
    const auto l = random_hull(10, rng.next());
    const auto m = random_hull(10, rng.next());
    const double a = rng.uniform(0.2, 3.0);
    const Vec3 v = rng.in_cube();
    cert = certify_equality_fulldim(l.scaled(a).translated(v), l, m);
    CHECK(cert.verdict == Verdict::Equality);
    CHECK(cert.a == doctest::Approx(a).epsilon(1e-10));
    CHECK((cert.v - v).norm() < 1e-8);
  }
}

TEST_CASE("certification is scaling equivariant") {
  Rng rng(44);
  for (int i = 0; i < 5; ++i) {
    const auto k = random_hull(10, rng.next());
    const auto l = random_hull(10, rng.next());
    const auto m = random_hull(10, rng.next());
    const auto base = certify_equality_fulldim(k, l, m);
    const double s = rng.uniform(0.5, 4.0);
    const auto sc = certify_equality_fulldim(k, l.scaled(s), m);
    CHECK(sc.verdict == base.verdict);
    CHECK(sc.a == doctest::Approx(base.a / s).epsilon(1e-10));
    CHECK(sc.relative_deficit() == doctest::Approx(base.relative_deficit()).epsilon(1e-8));
  }
}

TEST_CASE("verdict bands") {
  const Thresholds t;
  CHECK(classify_verdict(0.0, 0.0, t) == Verdict::Equality);
  CHECK(classify_verdict(1e-9, 1e-6, t) == Verdict::Equality);
  CHECK(classify_verdict(1e-7, 1e-4, t) == Verdict::Strict);
  CHECK(classify_verdict(5e-9, 1e-4, t) == Verdict::Inconclusive);
  CHECK(classify_verdict(1e-7, 5e-6, t) == Verdict::Inconclusive);
  CHECK(std::string(to_string(Verdict::Strict)) == "strict");
}

TEST_CASE("trivial routing") {
  // V(L,L,M) = 0 for a segment L; the deficit is then V(K,L,M)^2
  const auto c = unit_cube();
  const auto seg = segment(Vec3::Zero(), Vec3::UnitX());
  const auto cert = certify_equality_fulldim(c, seg, c);
  CHECK(cert.trivial);
  CHECK(cert.deficit.vll == doctest::Approx(0.0));
  CHECK(cert.deficit.deficit == doctest::Approx(1.0 / 9.0));
  CHECK(cert.verdict == Verdict::Strict);
  CHECK(certificate_consistent(cert));
}

TEST_CASE("rigidity") {
  const auto c = unit_cube();
  auto rep = rigidity_check(c, c, c);
  CHECK(rep.check.holds);
  CHECK(rep.sbm_integral == 0.0);
  CHECK(rep.mu_integral == 0.0);

  rep = rigidity_check(truncate_vertex(c, corner_111(c), 0.1), c, c);
  CHECK(rep.check.holds);
  CHECK(rep.sbm_integral < 1e-20);
  CHECK(rep.mu_integral < 1e-20);

  Rng rng(45);
  for (int i = 0; i < 20; ++i) {
    rep = rigidity_check(random_hull(10, rng.next()), random_hull(10, rng.next()),
                         random_hull(10, rng.next()));
    CHECK(rep.check.holds);
  }
}

TEST_CASE("rigidity dominance on equality instances") {
  Rng rng(46);
  for (int i = 0; i < 10; ++i) {
    const auto l = random_hull(10, rng.next());
    const auto m = random_hull(10, rng.next());
    const auto k = l.translated(rng.in_cube());
    const auto cert = certify_equality_fulldim(k, l, m);
    REQUIRE(cert.verdict == Verdict::Equality);
    const auto rep = rigidity_check(k, l, m);
    const double q = rep.r / rep.R;
    CHECK(rep.sbm_integral <= 8.0 / (q * q * q * q) * rep.mu_integral + 1e-9);
  }
}
