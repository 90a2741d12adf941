#include "minkq/minkq.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "minkq/discretization.hpp"
#include "minkq/error.hpp"
#include "minkq/extremal.hpp"
#include "minkq/lower_dim.hpp"
#include "minkq/metric_graph.hpp"
#include "minkq/suites.hpp"

struct minkq_polytope {
  minkq::Polytope p;
};

struct minkq_graph {
  minkq::MetricGraph g;
};

namespace {

using namespace minkq;

thread_local std::string g_last_error;

minkq_status set_error(minkq_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Run `body`, translating exceptions to status codes.
template <class F>
minkq_status guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return MINKQ_OK;
  } catch (const Error& e) {
    return set_error(static_cast<minkq_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MINKQ_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MINKQ_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double parse_number(const std::string& s, const std::string& term) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || !std::isfinite(v)) {
    fail(ErrorCode::BadSpec, "bad number '" + s + "' in builtin '" + term + "'");
  }
  return v;
}

int corner_index(const Polytope& p, const Vec3& corner) {
  for (int i = 0; i < static_cast<int>(p.vertices().size()); ++i) {
    if ((p.vertices()[i] - corner).norm() < 1e-12) return i;
  }
  fail(ErrorCode::BadSpec, "corner not found");
}

Polytope regular_polygon(int sides, double side) {
  const double radius = side / (2.0 * std::sin(M_PI / sides));
  std::vector<Vec3> pts;
  for (int i = 0; i < sides; ++i) {
    const double t = 2.0 * M_PI * i / sides;
    pts.emplace_back(radius * std::cos(t), radius * std::sin(t), 0.0);
  }
  return Polytope::hull(pts, false);
}

Polytope builtin_term(const std::string& term) {
  std::vector<std::string> parts;
  {
    std::stringstream ss(term);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
  }
  if (parts.empty()) fail(ErrorCode::BadSpec, "empty builtin name");
  const std::string& head = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      fail(ErrorCode::BadSpec, "builtin '" + head + "' takes " + std::to_string(n) + " parameter(s)");
    }
  };
  if (head == "cube") return arity(0), unit_cube();
  if (head == "ccube") return arity(0), centered_cube();
  if (head == "simplex") return arity(0), unit_simplex();
  if (head == "regsimplex") return arity(0), regular_simplex();
  if (head.rfind("ball@", 0) == 0) {
    arity(0);
    const double level = parse_number(head.substr(5), term);
    if (level < 0 || level > 6 || level != std::floor(level)) {
      fail(ErrorCode::BadSpec, "ball level must be an integer in [0,6]");
    }
    // inscribed in the unit cube
    return approximate_ball(static_cast<int>(level)).scaled(0.5).translated(Vec3(0.5, 0.5, 0.5));
  }
  if (head.rfind("cap@", 0) == 0) {
    arity(0);
    const double level = parse_number(head.substr(4), term);
    if (level < 0 || level > 6 || level != std::floor(level)) {
      fail(ErrorCode::BadSpec, "cap level must be an integer in [0,6]");
    }
    // unit ball mesh around the origin plus one apex: a polytopal cap body
    auto pts = approximate_ball(static_cast<int>(level)).vertices();
    pts.emplace_back(0.0, 0.0, 1.8);
    return Polytope::hull(pts);
  }
  if (head == "shear") {
    arity(1);
    return shear(unit_cube(), Vec3::UnitX(), Vec3::UnitZ(), parse_number(parts[1], term));
  }
  if (head == "trunc" || head == "deeptrunc") {
    arity(1);
    const auto c = unit_cube();
    return truncate_vertex(c, corner_index(c, Vec3(1, 1, 1)), parse_number(parts[1], term),
                           head == "trunc");
  }
  if (head == "segment") {
    if (parts.size() > 2) fail(ErrorCode::BadSpec, "segment takes at most one axis");
    int axis = 1;
    if (parts.size() == 2) {
      const double a = parse_number(parts[1], term);
      if (a != 1 && a != 2 && a != 3) fail(ErrorCode::BadSpec, "segment axis must be 1, 2 or 3");
      axis = static_cast<int>(a);
    }
    return segment(Vec3::Zero(), Vec3::Unit(axis - 1));
  }
  if (head == "square") {
    arity(0);
    const std::vector<Vec3> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    return Polytope::hull(pts, false);
  }
  if (head == "hexagon") return arity(0), regular_polygon(6, 1.0);
  if (head == "random") {
    arity(2);
    const double n = parse_number(parts[1], term);
    const double seed = parse_number(parts[2], term);
    if (n < 4 || n > 10000 || n != std::floor(n)) fail(ErrorCode::BadSpec, "random needs 4..10000 points");
    if (seed < 0 || seed != std::floor(seed)) fail(ErrorCode::BadSpec, "random seed must be a nonnegative integer");
    return random_hull(static_cast<int>(n), static_cast<std::uint64_t>(seed));
  }
  fail(ErrorCode::BadSpec, "unknown builtin '" + term + "'");
}

Polytope builtin(const std::string& name) {
  std::stringstream ss(name);
  std::string term;
  std::optional<Polytope> acc;
  while (std::getline(ss, term, '+')) {
    Polytope p = builtin_term(term);
    acc = acc ? minkowski_sum(*acc, p) : p;
  }
  if (!acc) fail(ErrorCode::BadSpec, "empty builtin name");
  return *acc;
}

Body slot(const minkq_polytope* p) {
  if (!p) return Ball{};
  return p->p;
}

SupportEvaluator evaluator(const minkq_polytope* p) {
  return p ? SupportEvaluator(p->p) : SupportEvaluator::one();
}

void fill(minkq_deficit* out, const DeficitReport& d) {
  out->vkl = d.vkl;
  out->vkk = d.vkk;
  out->vll = d.vll;
  out->deficit = d.deficit;
  out->scale = d.scale;
}

void fill(minkq_certificate* out, const EqualityCertificate& c, const Thresholds& t) {
  fill(&out->deficit, c.deficit);
  out->a = c.a;
  for (int i = 0; i < 3; ++i) out->v[i] = c.v[i];
  out->sup_residual = c.sup_residual;
  out->diameter = c.diameter;
  out->relative_deficit = c.relative_deficit();
  out->relative_residual = c.relative_residual();
  out->nodes = c.nodes;
  out->trivial = c.trivial ? 1 : 0;
  out->consistent = certificate_consistent(c, t) ? 1 : 0;
  out->verdict = c.verdict == Verdict::Equality ? MINKQ_EQUALITY
                 : c.verdict == Verdict::Strict ? MINKQ_STRICT
                                                 : MINKQ_INCONCLUSIVE;
}

Thresholds thresholds(double eps_d, double eps_s) {
  Thresholds t;
  if (eps_d > 0.0) t.deficit = eps_d;
  if (eps_s > 0.0) t.residual = eps_s;
  return t;
}

UnitVector unit(const double* w) {
  if (!w) fail(ErrorCode::BadParam, "null direction");
  return UnitVector(w[0], w[1], w[2]);
}

nlohmann::json vec_json(const Vec3& v) { return nlohmann::json::array({v[0], v[1], v[2]}); }

Vec3 json_vec(const nlohmann::json& j, const char* field) {
  if (!j.is_array() || j.size() != 3) {
    fail(ErrorCode::BadParam, std::string("field '") + field + "' must be a 3-vector");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

std::string export_json(const MetricGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices()) {
    doc["vertices"].push_back({{"facet", v.facet}, {"normal", vec_json(v.position)}, {"area", v.area}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"from", e.from},
                            {"to", e.to},
                            {"length", e.length},
                            {"weight", e.weight},
                            {"tangent_from", vec_json(e.tangent_from)},
                            {"tangent_to", vec_json(e.tangent_to)}});
  }
  return doc.dump(2);
}

std::string export_dot(const MetricGraph& g) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6);
  os << "graph metric {\n";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const Vec3& n = g.vertices()[i].position;
    os << "  v" << i << " [label=\"(" << n[0] << ", " << n[1] << ", " << n[2] << ")\"];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  v" << e.from << " -- v" << e.to << " [label=\"l=" << e.length << ", w=" << e.weight
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

MetricGraph import_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadParam, std::string("graph JSON: ") + e.what());
  }
  try {
    std::vector<GraphVertex> vs;
    for (const auto& v : doc.at("vertices")) {
      vs.push_back({v.at("facet").get<int>(), json_vec(v.at("normal"), "normal"),
                    v.at("area").get<double>()});
    }
    std::vector<GraphEdge> es;
    for (const auto& e : doc.at("edges")) {
      es.push_back({e.at("from").get<int>(), e.at("to").get<int>(), e.at("length").get<double>(),
                    e.at("weight").get<double>(), json_vec(e.at("tangent_from"), "tangent_from"),
                    json_vec(e.at("tangent_to"), "tangent_to")});
    }
    return MetricGraph(std::move(vs), std::move(es));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::BadParam, std::string("graph JSON: ") + e.what());
  }
}

}  // namespace

extern "C" {

const char* minkq_last_error(void) { return g_last_error.c_str(); }

const char* minkq_status_name(minkq_status s) {
  switch (s) {
    case MINKQ_OK: return "Ok";
    case MINKQ_NULL_ARGUMENT: return "NullArgument";
    case MINKQ_INTERNAL: return "Internal";
    default: break;
  }
  const int c = static_cast<int>(s);
  if (c >= 1 && c <= 11) return to_string(static_cast<ErrorCode>(c));
  return "Unknown";
}

void minkq_string_free(char* s) { std::free(s); }

const char* minkq_version(void) { return "1.0.0"; }

minkq_status minkq_polytope_from_points(const double* xyz, size_t count, int require_full,
                                        minkq_polytope** out) {
  if (!out || (!xyz && count > 0)) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    if (count == 0) fail(ErrorCode::DegenerateInput, "no points given");
    std::vector<Vec3> pts;
    pts.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      const Vec3 v(xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]);
      if (!v.allFinite()) fail(ErrorCode::BadParam, "point " + std::to_string(i) + " is not finite");
      pts.push_back(v);
    }
    *out = new minkq_polytope{Polytope::hull(pts, require_full != 0)};
  });
}

minkq_status minkq_polytope_builtin(const char* name, minkq_polytope** out) {
  if (!name || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new minkq_polytope{builtin(name)}; });
}

minkq_status minkq_polytope_sum(const minkq_polytope* p, const minkq_polytope* q,
                                minkq_polytope** out) {
  if (!p || !q || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new minkq_polytope{minkowski_sum(p->p, q->p)}; });
}

minkq_status minkq_polytope_translate(const minkq_polytope* p, const double v[3],
                                      minkq_polytope** out) {
  if (!p || !v || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new minkq_polytope{p->p.translated(Vec3(v[0], v[1], v[2]))}; });
}

minkq_status minkq_polytope_scale(const minkq_polytope* p, double factor, minkq_polytope** out) {
  if (!p || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new minkq_polytope{p->p.scaled(factor)}; });
}

void minkq_polytope_free(minkq_polytope* p) { delete p; }

minkq_status minkq_polytope_get_info(const minkq_polytope* p, minkq_polytope_info* out) {
  if (!p || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    out->dimension = p->p.dimension();
    out->vertices = static_cast<int>(p->p.vertices().size());
    out->edges = static_cast<int>(p->p.edges().size());
    out->facets = static_cast<int>(p->p.facets().size());
    for (int i = 0; i < 3; ++i) out->centroid[i] = p->p.centroid()[i];
    out->diameter = p->p.diameter();
  });
}

minkq_status minkq_polytope_vertices(const minkq_polytope* p, double* xyz, size_t cap,
                                     size_t* count) {
  if (!p || !count || (!xyz && cap > 0)) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto& vs = p->p.vertices();
    *count = vs.size();
    for (size_t i = 0; i < std::min(cap, vs.size()); ++i) {
      for (int j = 0; j < 3; ++j) xyz[3 * i + j] = vs[i][j];
    }
  });
}

minkq_status minkq_polytope_support(const minkq_polytope* p, const double u[3], double* out) {
  if (!p || !u || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = p->p.support(Vec3(u[0], u[1], u[2])); });
}

minkq_status minkq_enclosing_radii(const minkq_polytope* m, double* r, double* R) {
  if (!m || !r || !R) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto e = enclosing_radii(m->p);
    *r = e.r;
    *R = e.R;
  });
}

minkq_status minkq_classify_trivial(const minkq_polytope* k, const minkq_polytope* l,
                                    const minkq_polytope* m, minkq_trivial* out) {
  if (!k || !l || !m || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto c = classify_trivial(k->p, l->p, m->p);
    *out = {c.dim_k, c.dim_l, c.dim_m, c.dim_kl, c.dim_km, c.dim_lm, c.dim_klm,
            c.vllm_vanishes ? 1 : 0, c.trivial_equality ? 1 : 0};
  });
}

minkq_status minkq_volume(const minkq_polytope* p, double* out) {
  if (!p || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = volume(p->p); });
}

minkq_status minkq_mixed_volume(const minkq_polytope* k, const minkq_polytope* l,
                                const minkq_polytope* m, double* out) {
  if (!k || !l || !m || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = mixed_volume(k->p, l->p, m->p); });
}

minkq_status minkq_mixed_volume_measure(const minkq_polytope* k, const minkq_polytope* l,
                                        const minkq_polytope* m, double quad_tol, double* out) {
  if (!m || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = mixed_volume_slots(slot(k), slot(l), m->p, quad_tol); });
}

minkq_status minkq_quadratic_deficit(const minkq_polytope* k, const minkq_polytope* l,
                                     const minkq_polytope* m, double quad_tol,
                                     minkq_deficit* out) {
  if (!m || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { fill(out, quadratic_deficit(slot(k), slot(l), m->p, quad_tol)); });
}

minkq_status minkq_classical_functionals(const minkq_polytope* k, minkq_classical* out) {
  if (!k || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto c = classical_functionals(k->p);
    *out = {c.volume, c.surface_area, c.mean_width};
  });
}

minkq_status minkq_graph_build(const minkq_polytope* m, minkq_graph** out) {
  if (!m || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new minkq_graph{build_graph(m->p)}; });
}

void minkq_graph_free(minkq_graph* g) { delete g; }

minkq_status minkq_graph_get_info(const minkq_graph* g, minkq_graph_info* out) {
  if (!g || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto meas = sbm_and_mu(g->g);
    out->vertices = static_cast<int>(g->g.vertices().size());
    out->edges = static_cast<int>(g->g.edges().size());
    out->connected = g->g.connected() ? 1 : 0;
    out->total_weight = g->g.total_weight();
    out->sbm_mass = meas.sbm.total_mass();
    out->mu_mass = meas.mu.total_mass();
  });
}

minkq_status minkq_graph_export(const minkq_graph* g, const char* format, char** out) {
  if (!g || !format || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const std::string f(format);
    if (f == "json") *out = dup_string(export_json(g->g));
    else if (f == "dot") *out = dup_string(export_dot(g->g));
    else fail(ErrorCode::BadParam, "graph format must be dot or json");
  });
}

minkq_status minkq_graph_import_json(const char* text, minkq_graph** out) {
  if (!text || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = new minkq_graph{import_json(text)}; });
}

minkq_status minkq_graph_compare(const minkq_graph* a, const minkq_graph* b, double* out) {
  if (!a || !b || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto& ga = a->g;
    const auto& gb = b->g;
    if (ga.vertices().size() != gb.vertices().size() || ga.edges().size() != gb.edges().size()) {
      *out = -1.0;
      return;
    }
    double d = 0.0;
    for (std::size_t i = 0; i < ga.vertices().size(); ++i) {
      const auto& x = ga.vertices()[i];
      const auto& y = gb.vertices()[i];
      if (x.facet != y.facet) {
        *out = -1.0;
        return;
      }
      d = std::max({d, (x.position - y.position).cwiseAbs().maxCoeff(), std::abs(x.area - y.area)});
    }
    for (std::size_t i = 0; i < ga.edges().size(); ++i) {
      const auto& x = ga.edges()[i];
      const auto& y = gb.edges()[i];
      if (x.from != y.from || x.to != y.to) {
        *out = -1.0;
        return;
      }
      d = std::max({d, std::abs(x.length - y.length), std::abs(x.weight - y.weight),
                    (x.tangent_from - y.tangent_from).cwiseAbs().maxCoeff(),
                    (x.tangent_to - y.tangent_to).cwiseAbs().maxCoeff()});
    }
    *out = d;
  });
}

minkq_status minkq_graph_structural(const minkq_graph* g, double r, double R,
                                    minkq_structural* out) {
  if (!g || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto s = structural_checks(g->g, r, R);
    *out = {s.worst_tan_margin, s.worst_balance, s.max_length, s.tan_violations,
            s.balance_violations};
  });
}

minkq_status minkq_form_value(const minkq_graph* g, const minkq_polytope* f,
                              const minkq_polytope* h, double quad_tol, double* out) {
  if (!g || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = form_value(g->g, evaluator(f), evaluator(h), quad_tol); });
}

minkq_status minkq_integrate_on_arcs(const minkq_graph* g, const minkq_polytope* f,
                                     double quad_tol, double* out) {
  if (!g || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = integrate_on_arcs(evaluator(f), g->g, quad_tol); });
}

minkq_status minkq_graph_spectrum(const minkq_graph* g, double h, int k, double tau,
                                  double* values, minkq_spectrum* out) {
  if (!g || !values || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto form = assemble(g->g, h);
    const auto spec = spectrum(form, k);
    const double t = tau > 0.0 ? tau : 10.0 * h * h;
    const auto kr = kernel_analysis(spec, form, t);
    out->system_size = spec.system_size;
    out->computed = static_cast<int>(spec.values.size());
    out->kernel_dimension = kr.dimension;
    out->positive = kr.positive;
    out->tau = t;
    out->angle_residual = kr.angle_residual;
    out->max_residual = 0.0;
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
      values[i] = spec.values[i];
      out->max_residual = std::max(out->max_residual, spec.residuals[i]);
    }
  });
}

minkq_status minkq_edge_poincare(const double* samples, size_t count, double l, double eps,
                                 double r, double R, minkq_poincare* out) {
  if (!samples || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    std::vector<double> f(samples, samples + count);
    std::optional<EnclosingRadii> radii;
    if (r > 0.0) radii = EnclosingRadii{r, R};
    const auto rep = edge_poincare_check(f, l, eps, radii);
    out->lhs = rep.lhs;
    out->rhs = rep.rhs;
    out->has_corollary = rep.cor_lhs ? 1 : 0;
    out->cor_lhs = rep.cor_lhs.value_or(0.0);
    out->cor_rhs = rep.cor_rhs.value_or(0.0);
    out->holds = rep.holds ? 1 : 0;
  });
}

minkq_status minkq_certify_full(const minkq_polytope* k, const minkq_polytope* l,
                                const minkq_polytope* m, double quad_tol, double eps_d,
                                double eps_s, minkq_certificate* out) {
  if (!k || !l || !m || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto t = thresholds(eps_d, eps_s);
    fill(out, certify_equality_fulldim(k->p, l->p, m->p, quad_tol, t), t);
  });
}

minkq_status minkq_certify_lower(const minkq_polytope* k, const minkq_polytope* l,
                                 const minkq_polytope* m, const double w[3], double quad_tol,
                                 double eps_d, double eps_s, minkq_certificate* out) {
  if (!k || !l || !m || !w || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto t = thresholds(eps_d, eps_s);
    fill(out, certify_equality_lowerdim(k->p, l->p, m->p, unit(w), quad_tol, t), t);
  });
}

minkq_status minkq_weak_stability(const minkq_polytope* k, const minkq_polytope* l,
                                  const minkq_polytope* m, minkq_stability* out) {
  if (!k || !l || !m || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto rep = weak_stability_check(k->p, l->p, m->p);
    const auto& w = rep.witness;
    out->a = w.a;
    for (int i = 0; i < 3; ++i) out->v[i] = w.v[i];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) out->G[3 * i + j] = w.G(i, j);
    }
    out->r = w.r;
    out->R = w.R;
    out->C = w.C;
    out->residual = w.residual;
    fill(&out->deficit, rep.deficit);
    out->lhs = rep.check.lhs;
    out->rhs = rep.check.rhs;
    out->scale = rep.check.scale;
    out->holds = rep.check.holds ? 1 : 0;
  });
}

minkq_status minkq_rigidity_check(const minkq_polytope* k, const minkq_polytope* l,
                                  const minkq_polytope* m, double quad_tol, minkq_rigidity* out) {
  if (!k || !l || !m || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto rep = rigidity_check(k->p, l->p, m->p, quad_tol);
    fill(&out->deficit, rep.deficit);
    out->r = rep.r;
    out->R = rep.R;
    out->sbm_integral = rep.sbm_integral;
    out->mu_integral = rep.mu_integral;
    out->lhs = rep.check.lhs;
    out->rhs = rep.check.rhs;
    out->scale = rep.check.scale;
    out->holds = rep.check.holds ? 1 : 0;
  });
}

minkq_status minkq_lower_spectrum(const minkq_polytope* m, const double w[3], int k_max, double h,
                                  double tol, minkq_cluster* clusters, int* atoms, int* ok) {
  if (!m || !w || !clusters || !atoms || !ok) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto p = lowerdim_setup(m->p, unit(w));
    const auto rep = verify_spectrum(p, k_max, h, tol);
    *atoms = static_cast<int>(p.atoms.size());
    *ok = rep.ok ? 1 : 0;
    for (std::size_t i = 0; i < rep.clusters.size(); ++i) {
      const auto& c = rep.clusters[i];
      clusters[i] = {c.k, c.target, c.expected, c.found, c.worst_deviation};
    }
  });
}

minkq_status minkq_sbm_lowerdim(const minkq_polytope* m, const double w[3],
                                const minkq_polytope* f, double quad_tol, double* out) {
  if (!m || !w || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] { *out = sbm_lowerdim(lowerdim_setup(m->p, unit(w)), evaluator(f), quad_tol); });
}

minkq_status minkq_cylinder_limit(const minkq_polytope* m, const double w[3], const double* eps,
                                  size_t count, const minkq_polytope* f, double quad_tol,
                                  double* target, double* values, double* errors) {
  if (!m || !w || !eps || !target || !values || !errors) {
    return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  }
  return guard([&] {
    const auto p = lowerdim_setup(m->p, unit(w));
    const auto rep = cylinder_limit_check(p, std::vector<double>(eps, eps + count), evaluator(f),
                                          quad_tol);
    *target = rep.target;
    for (size_t i = 0; i < count; ++i) {
      values[i] = rep.values[i];
      errors[i] = rep.errors[i];
    }
  });
}

minkq_status minkq_suite_list(char** out) {
  if (!out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    std::string s;
    for (const auto& n : suite_names()) s += n + "\t" + suite_description(n) + "\n";
    *out = dup_string(s);
  });
}

minkq_status minkq_run_case(const char* suite, uint64_t seed, int index, minkq_case* out) {
  if (!suite || !out) return set_error(MINKQ_NULL_ARGUMENT, "null argument");
  return guard([&] {
    const auto c = run_case(suite, seed, index);
    *out = {c.index, c.seed, c.pass ? 1 : 0, c.metric};
  });
}

}  // extern "C"
