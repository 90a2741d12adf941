#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "minkq/minkq.h"

namespace {

struct Poly {
  minkq_polytope* p = nullptr;
  explicit Poly(const char* name) { REQUIRE(minkq_polytope_builtin(name, &p) == MINKQ_OK); }
  Poly() = default;
  ~Poly() { minkq_polytope_free(p); }
  Poly(const Poly&) = delete;
  Poly& operator=(const Poly&) = delete;
};

struct Graph {
  minkq_graph* g = nullptr;
  ~Graph() { minkq_graph_free(g); }
};

std::string take(char* s) {
  std::string out(s);
  minkq_string_free(s);
  return out;
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("builtins and info") {
  Poly c("cube");
  minkq_polytope_info info{};
  REQUIRE(minkq_polytope_get_info(c.p, &info) == MINKQ_OK);
  CHECK(info.dimension == 3);
  CHECK(info.vertices == 8);
  CHECK(info.edges == 12);
  CHECK(info.facets == 6);
  CHECK(info.diameter == doctest::Approx(std::sqrt(3.0)));

  double xyz[24];
  size_t n = 0;
  CHECK(minkq_polytope_vertices(c.p, xyz, 8, &n) == MINKQ_OK);
  CHECK(n == 8);
  const double u[3] = {1, 1, 0};
  double h = 0;
  CHECK(minkq_polytope_support(c.p, u, &h) == MINKQ_OK);
  CHECK(h == doctest::Approx(2.0));

  for (const char* name : {"ccube", "simplex", "regsimplex", "ball@1", "shear:0.3", "trunc:0.1",
                           "deeptrunc:0.8", "segment", "segment:2", "square", "hexagon",
                           "random:12:5", "cube+segment", "cap@1"}) {
    Poly p(name);
    CHECK(minkq_polytope_get_info(p.p, &info) == MINKQ_OK);
  }
  Poly sum("cube+segment");
  double vol = 0;
  CHECK(minkq_volume(sum.p, &vol) == MINKQ_OK);
  CHECK(vol == doctest::Approx(2.0));

  minkq_polytope* bad = nullptr;
  CHECK(minkq_polytope_builtin("dodecahedron", &bad) == MINKQ_BAD_SPEC);
  CHECK(bad == nullptr);
  CHECK(std::strlen(minkq_last_error()) > 0);
  CHECK(minkq_polytope_builtin("trunc:0.9", &bad) == MINKQ_BAD_SPEC);
}

TEST_CASE("points and errors") {
  const double tri[] = {0, 0, 0, 1, 0, 0, 0, 1, 0};
  minkq_polytope* p = nullptr;
  CHECK(minkq_polytope_from_points(tri, 3, 1, &p) == MINKQ_DEGENERATE_INPUT);
  CHECK(std::string(minkq_last_error()).find("affine dimension 2") != std::string::npos);
  REQUIRE(minkq_polytope_from_points(tri, 3, 0, &p) == MINKQ_OK);
  minkq_polytope_info info{};
  minkq_polytope_get_info(p, &info);
  CHECK(info.dimension == 2);
  minkq_polytope_free(p);

  CHECK(minkq_polytope_from_points(nullptr, 3, 0, &p) == MINKQ_NULL_ARGUMENT);
  CHECK(minkq_polytope_get_info(nullptr, &info) == MINKQ_NULL_ARGUMENT);
  CHECK(minkq_volume(nullptr, nullptr) == MINKQ_NULL_ARGUMENT);
  CHECK(std::string(minkq_status_name(MINKQ_BAD_MESH)) == "BadMesh");
  CHECK(std::strlen(minkq_version()) > 0);
  minkq_polytope_free(nullptr);
  minkq_graph_free(nullptr);
}

TEST_CASE("transforms") {
  Poly c("cube");
  minkq_polytope* t = nullptr;
  const double v[3] = {1, 2, 3};
  REQUIRE(minkq_polytope_translate(c.p, v, &t) == MINKQ_OK);
  minkq_polytope* s = nullptr;
  REQUIRE(minkq_polytope_scale(t, 2.0, &s) == MINKQ_OK);
  double vol = 0;
  minkq_volume(s, &vol);
  CHECK(vol == doctest::Approx(8.0));
  minkq_polytope* sum = nullptr;
  REQUIRE(minkq_polytope_sum(c.p, c.p, &sum) == MINKQ_OK);
  minkq_volume(sum, &vol);
  CHECK(vol == doctest::Approx(8.0));
  minkq_polytope_free(t);
  minkq_polytope_free(s);
  minkq_polytope_free(sum);
}

TEST_CASE("mixed volumes through the C interface") {
  Poly c("cube");
  double v = 0;
  CHECK(minkq_mixed_volume(c.p, c.p, c.p, &v) == MINKQ_OK);
  CHECK(v == doctest::Approx(1.0));
  CHECK(minkq_mixed_volume_measure(nullptr, c.p, c.p, 1e-12, &v) == MINKQ_OK);
  CHECK(v == doctest::Approx(2.0));
  CHECK(minkq_mixed_volume_measure(nullptr, nullptr, c.p, 1e-12, &v) == MINKQ_OK);
  CHECK(v == doctest::Approx(M_PI));
  minkq_deficit d{};
  Poly t("trunc:0.1");
  CHECK(minkq_quadratic_deficit(t.p, c.p, c.p, 1e-12, &d) == MINKQ_OK);
  CHECK(std::abs(d.deficit) < 1e-10 * d.scale);
  minkq_classical f{};
  CHECK(minkq_classical_functionals(c.p, &f) == MINKQ_OK);
  CHECK(f.surface_area == doctest::Approx(6.0));
  CHECK(f.mean_width == doctest::Approx(1.5));
  double r = 0, R = 0;
  Poly cc("ccube");
  CHECK(minkq_enclosing_radii(cc.p, &r, &R) == MINKQ_OK);
  CHECK(r == doctest::Approx(0.5));
  CHECK(R == doctest::Approx(std::sqrt(0.75)));
  minkq_trivial tr{};
  Poly seg("segment");
  CHECK(minkq_classify_trivial(c.p, seg.p, c.p, &tr) == MINKQ_OK);
  CHECK(tr.vllm_vanishes == 1);
}

TEST_CASE("graphs") {
  Poly c("cube");
  Graph g;
  REQUIRE(minkq_graph_build(c.p, &g.g) == MINKQ_OK);
  minkq_graph_info gi{};
  CHECK(minkq_graph_get_info(g.g, &gi) == MINKQ_OK);
  CHECK(gi.vertices == 6);
  CHECK(gi.edges == 12);
  CHECK(gi.connected == 1);
  CHECK(gi.sbm_mass == doctest::Approx(3 * M_PI));
  CHECK(gi.mu_mass == doctest::Approx(6 * M_PI));

  const std::string dot = [&] {
    char* s = nullptr;
    REQUIRE(minkq_graph_export(g.g, "dot", &s) == MINKQ_OK);
    return take(s);
  }();
  CHECK(count(dot, " -- ") == 12);
  CHECK(count(dot, "label=\"l=") == 12);
  CHECK(count(dot, "[label=\"(") == 6);

  char* js = nullptr;
  REQUIRE(minkq_graph_export(g.g, "json", &js) == MINKQ_OK);
  Graph back;
  REQUIRE(minkq_graph_import_json(js, &back.g) == MINKQ_OK);
  minkq_string_free(js);
  double diff = -1;
  CHECK(minkq_graph_compare(g.g, back.g, &diff) == MINKQ_OK);
  CHECK(diff >= 0.0);
  CHECK(diff <= 1e-15);

  Graph bad;
  CHECK(minkq_graph_import_json("{\"vertices\": 3}", &bad.g) == MINKQ_BAD_PARAM);
  char* none = nullptr;
  CHECK(minkq_graph_export(g.g, "svg", &none) == MINKQ_BAD_PARAM);

  double v = 0;
  CHECK(minkq_form_value(g.g, c.p, c.p, 1e-12, &v) == MINKQ_OK);
  CHECK(v == doctest::Approx(1.0));
  CHECK(minkq_integrate_on_arcs(g.g, nullptr, 1e-12, &v) == MINKQ_OK);
  CHECK(v == doctest::Approx(3 * M_PI));

  minkq_structural st{};
  CHECK(minkq_graph_structural(g.g, 0.5, std::sqrt(0.75), &st) == MINKQ_OK);
  CHECK(st.tan_violations == 0);

  double vals[6];
  minkq_spectrum sp{};
  CHECK(minkq_graph_spectrum(g.g, M_PI / 40, 6, 0.0, vals, &sp) == MINKQ_OK);
  CHECK(vals[0] == doctest::Approx(1.0 / 3.0));
  CHECK(sp.kernel_dimension == 3);
  CHECK(sp.system_size == 234);
  CHECK(minkq_graph_spectrum(g.g, 3.0, 6, 0.0, vals, &sp) == MINKQ_BAD_MESH);

  Poly sq("square");
  Graph flat;
  CHECK(minkq_graph_build(sq.p, &flat.g) == MINKQ_DEGENERATE_INPUT);
}

TEST_CASE("checks through the C interface") {
  Poly c("cube"), t("trunc:0.1"), d("deeptrunc:0.8"), cc("ccube"), b("ball@2");
  minkq_certificate cert{};
  CHECK(minkq_certify_full(t.p, c.p, c.p, 1e-12, 0, 0, &cert) == MINKQ_OK);
  CHECK(cert.verdict == MINKQ_EQUALITY);
  CHECK(cert.consistent == 1);
  CHECK(minkq_certify_full(d.p, c.p, c.p, 1e-12, 0, 0, &cert) == MINKQ_OK);
  CHECK(cert.verdict == MINKQ_STRICT);

  minkq_stability s{};
  CHECK(minkq_weak_stability(b.p, c.p, cc.p, &s) == MINKQ_OK);
  CHECK(s.holds == 1);
  CHECK(s.C == doctest::Approx(s.r * s.r / (18 * s.R * s.R)));

  minkq_rigidity r{};
  CHECK(minkq_rigidity_check(t.p, c.p, cc.p, 1e-12, &r) == MINKQ_OK);
  CHECK(r.holds == 1);

  std::vector<double> samples(101);
  for (size_t i = 0; i < samples.size(); ++i) samples[i] = std::sin(M_PI * i / 100.0);
  minkq_poincare pc{};
  CHECK(minkq_edge_poincare(samples.data(), samples.size(), 1.0, 0.1, 0.5, 1.0, &pc) == MINKQ_OK);
  CHECK(pc.holds == 1);
  CHECK(pc.has_corollary == 1);
  CHECK(minkq_edge_poincare(samples.data(), samples.size(), 1.0, 1.5, 0, 0, &pc) ==
        MINKQ_BAD_PARAM);
}

TEST_CASE("lower-dimensional calls") {
  Poly sq("square"), c("cube"), sh("shear:0.3"), seg("segment");
  const double w[3] = {0, 0, 1};
  minkq_cluster cl[3];
  int atoms = 0, ok = 0;
  CHECK(minkq_lower_spectrum(sq.p, w, 2, M_PI / 100, 5e-3, cl, &atoms, &ok) == MINKQ_OK);
  CHECK(atoms == 4);
  CHECK(ok == 1);
  CHECK(cl[1].found == 4);

  double v = 0;
  CHECK(minkq_sbm_lowerdim(sq.p, w, nullptr, 1e-12, &v) == MINKQ_OK);
  CHECK(v == doctest::Approx(2 * M_PI));

  minkq_certificate cert{};
  CHECK(minkq_certify_lower(c.p, sh.p, seg.p, w, 1e-12, 0, 0, &cert) == MINKQ_OK);
  CHECK(cert.verdict == MINKQ_EQUALITY);

  const double eps[3] = {0.2, 0.1, 0.05};
  double target = 0, vals[3], errs[3];
  CHECK(minkq_cylinder_limit(sq.p, w, eps, 3, nullptr, 1e-12, &target, vals, errs) == MINKQ_OK);
  CHECK(errs[0] / errs[1] == doctest::Approx(2.0).epsilon(0.15));
  const double bad_eps[1] = {0.0};
  CHECK(minkq_cylinder_limit(sq.p, w, bad_eps, 1, nullptr, 1e-12, &target, vals, errs) ==
        MINKQ_DIMENSION_ERROR);
  CHECK(minkq_sbm_lowerdim(c.p, w, nullptr, 1e-12, &v) == MINKQ_DIMENSION_ERROR);
}

TEST_CASE("suites through the C interface") {
  char* list = nullptr;
  REQUIRE(minkq_suite_list(&list) == MINKQ_OK);
  const std::string s = take(list);
  CHECK(s.find("rigidity\t") != std::string::npos);
  minkq_case a{}, b{};
  CHECK(minkq_run_case("rigidity", 7, 3, &a) == MINKQ_OK);
  CHECK(minkq_run_case("rigidity", 7, 3, &b) == MINKQ_OK);
  CHECK(a.pass == 1);
  CHECK(a.seed == b.seed);
  CHECK(a.metric == b.metric);
  CHECK(minkq_run_case("nope", 7, 3, &a) == MINKQ_BAD_PARAM);
}
