#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "minkq/error.hpp"
#include "minkq/mixed_volume.hpp"
#include "minkq/random.hpp"
#include "oracles.hpp"

using namespace minkq;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

int corner_111(const Polytope& c) {
  for (int i = 0; i < static_cast<int>(c.vertices().size()); ++i) {
    if ((c.vertices()[i] - Vec3(1, 1, 1)).norm() < 1e-12) return i;
  }
  return -1;
}

}  // namespace

TEST_CASE("volumes") {
  CHECK(volume(unit_cube()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(volume(unit_simplex()) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(volume(unit_cube().scaled(2.0)) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(volume(segment(Vec3::Zero(), Vec3::UnitX())) == 0.0);
}

TEST_CASE("mixed volumes of the cube") {
  const auto c = unit_cube();
  CHECK(mixed_volume(c, c, c) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mixed_volume(c.scaled(2.0), c, c) == doctest::Approx(2.0).epsilon(1e-14));
  // Vol(C + t S) = 1 + t for the box; its t-coefficient is 3 V(C,C,S)
  const auto s = segment(Vec3::Zero(), Vec3::UnitX());
  const double slope = oracle::first_derivative_at_zero(
      [&](double t) { return t == 0.0 ? volume(c) : volume(minkowski_sum(c, s.scaled(t))); }, 0.25);
  CHECK(slope == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mixed_volume(c, c, s) == doctest::Approx(slope / 3.0).epsilon(1e-12));
}

TEST_CASE("area measures") {
  const auto c = unit_cube();
  const auto sc = area_measure(c);
  CHECK(sc.atoms.size() == 6);
  for (const auto& a : sc.atoms) CHECK(a.mass == doctest::Approx(1.0));
  CHECK(sc.total_mass() == doctest::Approx(6.0));

  const auto ss = area_measure(unit_simplex());
  std::vector<double> m;
  for (const auto& a : ss.atoms) m.push_back(a.mass);
  std::sort(m.begin(), m.end());
  CHECK(m[3] == doctest::Approx(std::sqrt(3.0) / 2.0));

  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto mu = area_measure(random_hull(15, 500 + s));
    CHECK(mu.balance_residual() <= 1e-12 * mu.total_mass());
  }
  try {
    area_measure(segment(Vec3::Zero(), Vec3::UnitX()));
    FAIL("expected DegenerateInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateInput);
  }
}

TEST_CASE("mixed area measures") {
  const auto c = unit_cube();
  const auto scc = mixed_area_measure(c, c);
  CHECK(scc.atoms.size() == 6);
  for (const auto& a : scc.atoms) CHECK(a.mass == doctest::Approx(1.0));

  // C + S is the box [0,2]x[0,1]^2 with facet areas 1,1,2,2,2,2, so
  // S_{C,S} = (S(C+S) - S(C) - S(S)) / 2 has mass 1/2 at +-e2, +-e3.
  const auto s = segment(Vec3::Zero(), Vec3::UnitX());
  const auto scs = mixed_area_measure(c, s);
  CHECK(scs.total_mass() == doctest::Approx(2.0));
  for (const auto& a : scs.atoms) {
    CHECK(std::abs(a.direction[0]) < 1e-12);
    CHECK(a.mass == doctest::Approx(0.5));
  }
  CHECK(integrate_against_measure(SupportEvaluator(c), scs, 1e-12) == doctest::Approx(1.0));
  CHECK(3.0 * mixed_volume(c, c, s) == doctest::Approx(1.0));

  for (std::uint64_t k = 0; k < 10; ++k) {
    const auto mu = mixed_area_measure(random_hull(10, 600 + k), random_hull(12, 700 + k));
    CHECK(mu.nonnegative);
    for (const auto& a : mu.atoms) CHECK(a.mass >= -1e-12 * mu.total_mass());
    CHECK(mu.balance_residual() <= 1e-9 * mu.total_mass());
  }
}

TEST_CASE("integration against measures") {
  const auto c = unit_cube();
  const auto sc = area_measure(c);
  CHECK(integrate_against_measure(SupportEvaluator::one(), sc, 1e-12) == doctest::Approx(6.0));
  CHECK(integrate_against_measure(SupportEvaluator(c), sc, 1e-12) == doctest::Approx(3.0));
  const Vec3 v(0.4, -2.0, 1.5);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto mu = area_measure(random_hull(14, 800 + s));
    CHECK(std::abs(integrate_against_measure(SupportEvaluator::linear(v), mu, 1e-12)) <=
          1e-9 * v.norm() * mu.total_mass());
  }
}

TEST_CASE("ball slots") {
  const auto c = unit_cube();
  CHECK(mixed_volume_slots(Ball{}, c, c) == doctest::Approx(2.0).epsilon(1e-12));
  const double vbbc = mixed_volume_slots(Ball{}, Ball{}, c);
  CHECK(vbbc == doctest::Approx(M_PI).epsilon(1e-12));
  // coefficient of t^2 in Vol(C + tB) is 3 V(B,B,C)
  const double d2 = oracle::second_derivative_at_zero(oracle::cube_parallel_volume, 0.1);
  CHECK(vbbc == doctest::Approx(d2 / 6.0).epsilon(1e-9));
  // a translated ball slot contributes nothing extra
  CHECK(mixed_volume_slots(Ball(Vec3(3, 1, 2), 1.0), c, c) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mixed_volume_slots(Ball(Vec3::Zero(), 2.0), c, c) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("measure pipeline agrees with polarization") {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const auto k = random_hull(5 + rng.below(16), rng.next());
    const auto l = random_hull(5 + rng.below(16), rng.next());
    const auto m = random_hull(5 + rng.below(16), rng.next());
    CHECK(rel(mixed_volume(k, l, m), mixed_volume_via_measure(SupportEvaluator(k), l, m)) <= 1e-9);
  }
}

TEST_CASE("symmetry, multilinearity, monotonicity, translation invariance") {
  Rng rng(22);
  for (int i = 0; i < 10; ++i) {
    const auto k = random_hull(8, rng.next());
    const auto k2 = random_hull(8, rng.next());
    const auto l = random_hull(8, rng.next());
    const auto m = random_hull(8, rng.next());
    const double v = mixed_volume(k, l, m);
    for (double p : {mixed_volume(k, m, l), mixed_volume(l, k, m), mixed_volume(l, m, k),
                     mixed_volume(m, k, l), mixed_volume(m, l, k)}) {
      CHECK(rel(v, p) <= 1e-12);
    }
    CHECK(rel(mixed_volume(minkowski_sum(k, k2), l, m), v + mixed_volume(k2, l, m)) <= 1e-10);
    const double scale = std::pow(std::max({k.scale(), l.scale(), m.scale()}), 3);
    CHECK(std::abs(mixed_volume(k.translated(Vec3(1, -2, 3)), l, m) - v) <= 1e-10 * scale);
    // a truncation of k is a subset of k
    const auto sub = truncate_vertex(k, 0, 0.05 * k.scale(), false);
    CHECK(mixed_volume(sub, l, m) <= v + 1e-10 * scale);
  }
}

TEST_CASE("quadratic deficit") {
  const auto c = unit_cube();
  auto d = quadratic_deficit(c, c, c);
  CHECK(std::abs(d.deficit) <= 1e-12);
  d = quadratic_deficit(truncate_vertex(c, corner_111(c), 0.1), c, c);
  CHECK(std::abs(d.deficit) <= 1e-10 * d.scale);
  const auto ball = approximate_ball(3).scaled(0.5).translated(Vec3(0.5, 0.5, 0.5));
  d = quadratic_deficit(ball, c, c);
  CHECK(d.deficit > 1e-6 * d.scale);
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const auto r = quadratic_deficit(random_hull(10, rng.next()), random_hull(10, rng.next()),
                                     random_hull(10, rng.next()));
    CHECK(r.deficit >= -1e-9 * r.scale);
  }
  // ball in the K slot
  d = quadratic_deficit(Ball{}, c, c);
  CHECK(d.vkl == doctest::Approx(2.0));
  CHECK(d.vkk == doctest::Approx(M_PI));
  CHECK(d.deficit >= 0.0);
}

TEST_CASE("classical functionals") {
  const auto c = unit_cube();
  auto f = classical_functionals(c);
  CHECK(f.volume == doctest::Approx(1.0));
  CHECK(f.surface_area == doctest::Approx(6.0));
  CHECK(f.mean_width == doctest::Approx(1.5));
  f = classical_functionals(c.scaled(2.0));
  CHECK(f.volume == doctest::Approx(8.0));
  CHECK(f.surface_area == doctest::Approx(24.0));
  CHECK(f.mean_width == doctest::Approx(3.0));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto k = random_hull(12, 900 + s);
    f = classical_functionals(k);
    CHECK(f.surface_area * f.surface_area >= 6.0 * M_PI * f.mean_width * f.volume);
    CHECK(M_PI * f.mean_width * f.mean_width >= f.surface_area);
    // mean width against the sphere-cubature oracle
    CHECK(rel(f.mean_width, 3.0 / (2.0 * M_PI) * oracle::mixed_volume_bbp(k.vertices())) <= 1e-12);
  }
}
