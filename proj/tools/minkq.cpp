// minkq command-line front end. Talks to the library only through minkq.h.
//
// Exit codes: 0 all checks passed, 1 some asserted inequality or verdict
// failed, 2 bad input.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minkq/minkq.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr const char* kCsvSchema = "minkq-report-v1";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library failure: input errors exit 2, everything else propagates as 2 too
// but with the status name in the message.
void check(minkq_status s, const std::string& what) {
  if (s != MINKQ_OK) {
    throw InputError(what + ": " + minkq_status_name(s) + ": " + minkq_last_error());
  }
}

struct PolyDeleter {
  void operator()(minkq_polytope* p) const { minkq_polytope_free(p); }
};
struct GraphDeleter {
  void operator()(minkq_graph* g) const { minkq_graph_free(g); }
};
using Poly = std::unique_ptr<minkq_polytope, PolyDeleter>;
using Graph = std::unique_ptr<minkq_graph, GraphDeleter>;

struct Options {
  std::uint64_t seed = 1;
  double tol = -1.0;
  double mesh_h = 0.0;  // 0: per-command default
  double quad_tol = 1e-12;
  int kmax = -1;
  double eps_d = 1e-9;
  double eps_s = 1e-6;
  std::string format = "json";
  std::string out;
  std::string K, L, M;
  std::string w = "0,0,1";
  std::string suite = "all";
  int n = 100;
  std::string export_path;
  std::string graph_format;  // empty: from the export extension, json otherwise
  std::vector<double> eps{0.2, 0.1, 0.05, 0.025};
  bool no_timing = false;
};

Poly load_file(const std::string& path, bool require_full) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices")) throw InputError(path + ": missing field 'vertices'");
  const auto& vs = doc["vertices"];
  if (!vs.is_array()) throw InputError(path + ": field 'vertices' must be an array");
  if (vs.empty()) throw InputError(path + ": field 'vertices' is empty");
  if (doc.contains("name") && !doc["name"].is_string()) throw InputError(path + ": field 'name' must be a string");
  std::vector<double> xyz;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& v = vs[i];
    if (!v.is_array() || v.size() != 3) {
      throw InputError(path + ": field 'vertices[" + std::to_string(i) + "]' must be [x,y,z]");
    }
    for (const auto& c : v) {
      if (!c.is_number() || !std::isfinite(c.get<double>())) {
        throw InputError(path + ": field 'vertices[" + std::to_string(i) + "]' has a non-finite entry");
      }
      xyz.push_back(c.get<double>());
    }
  }
  minkq_polytope* p = nullptr;
  check(minkq_polytope_from_points(xyz.data(), vs.size(), require_full ? 1 : 0, &p), path);
  return Poly(p);
}

bool looks_like_file(const std::string& s) {
  return s.find('/') != std::string::npos || (s.size() > 5 && s.substr(s.size() - 5) == ".json");
}

// "B" (the unit ball) returns null where `allow_ball` is set.
Poly body(const std::string& spec, const char* slot, bool require_full, bool allow_ball = false) {
  if (spec.empty()) throw InputError(std::string("missing --") + slot);
  if (spec == "B") {
    if (!allow_ball) throw InputError(std::string("--") + slot + " cannot be the ball here");
    return Poly(nullptr);
  }
  Poly p;
  if (looks_like_file(spec)) {
    p = load_file(spec, require_full);
  } else {
    minkq_polytope* raw = nullptr;
    check(minkq_polytope_builtin(spec.c_str(), &raw), std::string("--") + slot);
    p.reset(raw);
  }
  if (require_full) {
    minkq_polytope_info info{};
    check(minkq_polytope_get_info(p.get(), &info), slot);
    if (info.dimension != 3) {
      throw InputError(std::string("--") + slot + ": affine dimension " +
                       std::to_string(info.dimension) + ", need 3");
    }
  }
  return p;
}

std::vector<double> parse_vec3(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--w: bad component '" + item + "'");
    }
  }
  if (v.size() != 3) throw InputError("--w needs three comma-separated components");
  return v;
}

json vec(const double* v, int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(v[i]);
  return a;
}

json deficit_json(const minkq_deficit& d) {
  return {{"vKL", d.vkl}, {"vKK", d.vkk}, {"vLL", d.vll}, {"deficit", d.deficit}, {"scale", d.scale},
          {"relative", d.scale > 0 ? d.deficit / d.scale : 0.0}};
}

const char* verdict_name(minkq_verdict v) {
  switch (v) {
    case MINKQ_EQUALITY: return "equality";
    case MINKQ_STRICT: return "strict";
    default: return "inconclusive";
  }
}

json certificate_json(const minkq_certificate& c) {
  return {{"deficit", deficit_json(c.deficit)},
          {"a", c.a},
          {"v", vec(c.v, 3)},
          {"sup_residual", c.sup_residual},
          {"diameter", c.diameter},
          {"relative_deficit", c.relative_deficit},
          {"relative_residual", c.relative_residual},
          {"nodes", c.nodes},
          {"trivial", c.trivial != 0},
          {"consistent", c.consistent != 0},
          {"verdict", verdict_name(c.verdict)}};
}

struct Result {
  json values;
  bool pass = true;
};

// ---- commands --------------------------------------------------------------

Result cmd_mixvol(const Options& o) {
  auto k = body(o.K, "K", false, true);
  auto l = body(o.L, "L", false, true);
  auto m = body(o.M, "M", true);
  Result r;
  double via_measure = 0.0;
  check(minkq_mixed_volume_measure(k.get(), l.get(), m.get(), o.quad_tol, &via_measure), "mixvol");
  r.values["V_measure"] = via_measure;
  if (k && l) {
    double pol = 0.0;
    check(minkq_mixed_volume(k.get(), l.get(), m.get(), &pol), "mixvol");
    const double rel = std::abs(pol - via_measure) / std::max({std::abs(pol), std::abs(via_measure), 1e-300});
    r.values["V"] = pol;
    r.values["relative_difference"] = rel;
    r.pass = rel <= (o.tol > 0 ? o.tol : 1e-9);
  } else {
    r.values["V"] = via_measure;
  }
  return r;
}

Result cmd_deficit(const Options& o) {
  auto k = body(o.K, "K", false, true);
  auto l = body(o.L, "L", false, true);
  auto m = body(o.M, "M", true);
  minkq_deficit d{};
  check(minkq_quadratic_deficit(k.get(), l.get(), m.get(), o.quad_tol, &d), "deficit");
  Result r;
  r.values = deficit_json(d);
  r.pass = d.deficit >= -1e-9 * d.scale;
  return r;
}

Result cmd_graph(const Options& o) {
  auto m = body(o.M, "M", true);
  minkq_graph* raw = nullptr;
  check(minkq_graph_build(m.get(), &raw), "graph");
  Graph g(raw);
  minkq_graph_info info{};
  check(minkq_graph_get_info(g.get(), &info), "graph");
  double rr = 0.0, RR = 0.0;
  check(minkq_enclosing_radii(m.get(), &rr, &RR), "graph");
  minkq_structural st{};
  check(minkq_graph_structural(g.get(), rr, RR, &st), "graph");
  Result r;
  r.values = {{"vertices", info.vertices},
              {"edges", info.edges},
              {"connected", info.connected != 0},
              {"total_weight", info.total_weight},
              {"sbm_mass", info.sbm_mass},
              {"mu_mass", info.mu_mass},
              {"V_BBM", info.sbm_mass / 3.0},
              {"r", rr},
              {"R", RR},
              {"worst_tan_margin", st.worst_tan_margin},
              {"worst_balance", st.worst_balance},
              {"max_length", st.max_length},
              {"tan_violations", st.tan_violations},
              {"balance_violations", st.balance_violations}};
  const double mu_rel = std::abs(info.mu_mass - 2.0 * info.sbm_mass) / (2.0 * info.sbm_mass);
  r.pass = st.tan_violations == 0 && st.balance_violations == 0 && mu_rel <= 1e-12 && info.connected;
  if (!o.export_path.empty()) {
    std::string fmt = o.graph_format;
    if (fmt.empty()) {
      const auto& p = o.export_path;
      fmt = p.size() >= 4 && p.compare(p.size() - 4, 4, ".dot") == 0 ? "dot" : "json";
    }
    char* text = nullptr;
    check(minkq_graph_export(g.get(), fmt.c_str(), &text), "--export");
    std::ofstream f(o.export_path);
    if (!f) {
      minkq_string_free(text);
      throw InputError("cannot write '" + o.export_path + "'");
    }
    f << text;
    minkq_string_free(text);
    r.values["exported"] = o.export_path;
  }
  return r;
}

Result cmd_spectrum(const Options& o) {
  auto m = body(o.M, "M", true);
  minkq_graph* raw = nullptr;
  check(minkq_graph_build(m.get(), &raw), "spectrum");
  Graph g(raw);
  const double h = o.mesh_h > 0 ? o.mesh_h : M_PI / 100.0;
  const int k = o.kmax > 0 ? o.kmax : 12;
  std::vector<double> values(k);
  minkq_spectrum s{};
  check(minkq_graph_spectrum(g.get(), h, k, o.tol, values.data(), &s), "spectrum");
  Result r;
  r.values = {{"h", h},
              {"system_size", s.system_size},
              {"eigenvalues", values},
              {"tau", s.tau},
              {"kernel_dimension", s.kernel_dimension},
              {"positive", s.positive},
              {"angle_residual", s.angle_residual},
              {"max_residual", s.max_residual}};
  r.pass = s.positive == 1 && s.kernel_dimension == 3 && s.angle_residual <= 1e-3 &&
           std::abs(values[0] - 1.0 / 3.0) <= 2e-3;
  return r;
}

Result certify_result(const minkq_certificate& c) {
  Result r;
  r.values = certificate_json(c);
  r.pass = c.consistent && c.verdict != MINKQ_INCONCLUSIVE;
  return r;
}

Result cmd_certify_full(const Options& o) {
  auto k = body(o.K, "K", false);
  auto l = body(o.L, "L", false);
  auto m = body(o.M, "M", true);
  minkq_certificate c{};
  check(minkq_certify_full(k.get(), l.get(), m.get(), o.quad_tol, o.eps_d, o.eps_s, &c), "certify-full");
  return certify_result(c);
}

Result cmd_certify_lower(const Options& o) {
  auto k = body(o.K, "K", false);
  auto l = body(o.L, "L", false);
  auto m = body(o.M, "M", false);
  const auto w = parse_vec3(o.w);
  minkq_certificate c{};
  check(minkq_certify_lower(k.get(), l.get(), m.get(), w.data(), o.quad_tol, o.eps_d, o.eps_s, &c),
        "certify-lower");
  auto r = certify_result(c);
  r.values["w"] = w;
  return r;
}

Result cmd_stability(const Options& o) {
  auto k = body(o.K, "K", false);
  auto l = body(o.L, "L", false);
  auto m = body(o.M, "M", true);
  minkq_stability s{};
  check(minkq_weak_stability(k.get(), l.get(), m.get(), &s), "stability");
  Result r;
  r.values = {{"a", s.a},       {"v", vec(s.v, 3)},         {"G_M", vec(s.G, 9)},
              {"r", s.r},       {"R", s.R},                 {"C_M", s.C},
              {"residual", s.residual}, {"deficit", deficit_json(s.deficit)},
              {"lhs", s.lhs},   {"rhs", s.rhs},             {"margin", s.lhs - s.rhs},
              {"holds", s.holds != 0}};
  r.pass = s.holds != 0;
  return r;
}

Result cmd_rigidity(const Options& o) {
  auto k = body(o.K, "K", false);
  auto l = body(o.L, "L", false);
  auto m = body(o.M, "M", true);
  minkq_rigidity s{};
  check(minkq_rigidity_check(k.get(), l.get(), m.get(), o.quad_tol, &s), "rigidity");
  Result r;
  r.values = {{"deficit", deficit_json(s.deficit)},
              {"r", s.r},
              {"R", s.R},
              {"sbm_integral", s.sbm_integral},
              {"mu_integral", s.mu_integral},
              {"lhs", s.lhs},
              {"rhs", s.rhs},
              {"margin", s.lhs - s.rhs},
              {"holds", s.holds != 0}};
  r.pass = s.holds != 0;
  return r;
}

Result cmd_lower_spectrum(const Options& o) {
  auto m = body(o.M, "M", false);
  const auto w = parse_vec3(o.w);
  const int kmax = o.kmax >= 0 ? o.kmax : 2;
  const double h = o.mesh_h > 0 ? o.mesh_h : M_PI / 200.0;
  const double tol = o.tol > 0 ? o.tol : 5e-3;
  std::vector<minkq_cluster> cl(kmax + 1);
  int atoms = 0, ok = 0;
  check(minkq_lower_spectrum(m.get(), w.data(), kmax, h, tol, cl.data(), &atoms, &ok), "lower-spectrum");
  Result r;
  json clusters = json::array();
  for (const auto& c : cl) {
    clusters.push_back({{"k", c.k}, {"target", c.target}, {"expected", c.expected},
                        {"found", c.found}, {"worst_deviation", c.worst_deviation}});
  }
  r.values = {{"atoms", atoms}, {"h", h}, {"tol", tol}, {"clusters", clusters}, {"ok", ok != 0}};
  r.pass = ok != 0;
  return r;
}

Result cmd_cylinder(const Options& o) {
  auto m = body(o.M, "M", false);
  Poly f;
  if (!o.K.empty() && o.K != "1") f = body(o.K, "K", false);
  const auto w = parse_vec3(o.w);
  std::vector<double> values(o.eps.size()), errors(o.eps.size());
  double target = 0.0;
  check(minkq_cylinder_limit(m.get(), w.data(), o.eps.data(), o.eps.size(), f.get(), o.quad_tol,
                             &target, values.data(), errors.data()),
        "cylinder");
  std::vector<double> ratios;
  bool linear = true;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    ratios.push_back(errors[i] / errors[i + 1]);
    const double expect = o.eps[i] / o.eps[i + 1];
    linear = linear && ratios.back() >= 0.85 * expect && ratios.back() <= 1.15 * expect;
  }
  Result r;
  r.values = {{"target", target}, {"eps", o.eps}, {"values", values}, {"errors", errors},
              {"ratios", ratios}, {"linear", linear}};
  r.pass = linear;
  return r;
}

std::vector<std::string> list_suites() {
  char* text = nullptr;
  check(minkq_suite_list(&text), "suites");
  std::vector<std::string> names;
  std::stringstream ss(text);
  minkq_string_free(text);
  std::string line;
  while (std::getline(ss, line)) names.push_back(line.substr(0, line.find('\t')));
  return names;
}

Result cmd_randtest(const Options& o) {
  if (o.n < 1) throw InputError("--n must be positive");
  std::vector<std::string> suites;
  if (o.suite == "all") suites = list_suites();
  else suites.push_back(o.suite);
  Result r;
  r.values["n"] = o.n;
  json per = json::array();
  for (const auto& s : suites) {
    int passed = 0;
    json failures = json::array();
    json cases = json::array();
    double worst = 0.0;
    for (int i = 0; i < o.n; ++i) {
      minkq_case c{};
      check(minkq_run_case(s.c_str(), o.seed, i, &c), "randtest");
      if (c.pass) ++passed;
      else failures.push_back(i);
      worst = i == 0 ? c.metric : std::min(worst, c.metric);
      cases.push_back({{"index", c.index}, {"instance_seed", c.seed}, {"pass", c.pass != 0}, {"metric", c.metric}});
    }
    per.push_back({{"suite", s}, {"passed", passed}, {"total", o.n}, {"failures", failures},
                   {"min_metric", worst}, {"cases", cases}});
    r.pass = r.pass && passed == o.n;
  }
  r.values["suites"] = per;
  return r;
}

Result cmd_demo(const Options& o) {
  Result r;
  auto run = [&](const char* name, Options sub, Result (*fn)(const Options&)) {
    sub.no_timing = o.no_timing;
    auto res = fn(sub);
    r.values[name] = {{"pass", res.pass}, {"values", res.values}};
    r.pass = r.pass && res.pass;
  };
  Options cube = o;
  cube.K = cube.L = cube.M = "cube";
  run("cube_mixvol", cube, cmd_mixvol);
  Options bbc = o;
  bbc.K = bbc.L = "B";
  bbc.M = "cube";
  run("cube_V_BBC", bbc, cmd_mixvol);
  Options tr = o;
  tr.K = "trunc:0.1";
  tr.L = tr.M = "cube";
  run("truncated_cube_certificate", tr, cmd_certify_full);
  Options sh = o;
  sh.K = "cube";
  sh.L = "shear:0.3";
  sh.M = "segment";
  run("sheared_cube_lower_certificate", sh, cmd_certify_lower);
  Options sq = o;
  sq.M = "square";
  run("square_lower_spectrum", sq, cmd_lower_spectrum);
  // a cap body of the ball against the ball: V(B,K,K)^2 = V(B,B,K) V(K,K,K)
  // in the smooth limit; the mesh leaves a small positive deficit
  Options cap = o;
  cap.K = "B";
  cap.L = cap.M = "cap@2";
  run("cap_body_deficit", cap, cmd_deficit);
  return r;
}

// ---- output ------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const json& v, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), rows);
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], key + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(key, scalar_text(v));
  }
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::ostringstream os;
  os << "schema,key,value\n";
  for (const auto& [k, v] : rows) os << kCsvSchema << "," << csv_escape(k) << "," << csv_escape(v) << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minkq: mixed volumes, quantum graphs and Minkowski's quadratic inequality"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed for randomized runs");
    sub->add_option("--tol", o.tol, "command-specific tolerance");
    sub->add_option("--mesh-h", o.mesh_h, "mesh size for discretized operators")
        ->check(CLI::PositiveNumber);
    sub->add_option("--quad-tol", o.quad_tol, "relative tolerance of arc quadrature");
    sub->add_option("--kmax", o.kmax, "eigenvalue count (spectrum) or highest k (lower-spectrum)");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--K", o.K, "body K: JSON file or builtin");
    sub->add_option("--L", o.L, "body L: JSON file or builtin");
    sub->add_option("--M", o.M, "body M: JSON file or builtin");
    sub->add_option("--eps-d", o.eps_d, "relative deficit threshold for verdicts");
    sub->add_option("--eps-s", o.eps_s, "relative residual threshold for verdicts");
    sub->add_flag("--no-timing", o.no_timing, "omit the wall_time field");
  };

  struct Entry {
    const char* name;
    const char* help;
    Result (*fn)(const Options&);
  };
  const std::vector<Entry> entries{
      {"mixvol", "V(K,L,M) by polarization and by measure integration (K or L may be B)", cmd_mixvol},
      {"deficit", "Minkowski quadratic deficit", cmd_deficit},
      {"graph", "metric graph of M, structural checks, optional export", cmd_graph},
      {"spectrum", "top eigenvalues of the discretized operator on M's graph", cmd_spectrum},
      {"certify-full", "equality certificate, full-dimensional M", cmd_certify_full},
      {"certify-lower", "equality certificate, M in w^perp", cmd_certify_lower},
      {"stability", "weak stability inequality with explicit constant", cmd_stability},
      {"rigidity", "quantitative rigidity inequality", cmd_rigidity},
      {"lower-spectrum", "eigenvalue clusters for M in w^perp", cmd_lower_spectrum},
      {"cylinder", "graph integrals of M + eps[0,w] against the lower-dimensional limit", cmd_cylinder},
      {"randtest", "seeded randomized property suites", cmd_randtest},
      {"demo", "canonical examples", cmd_demo},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    subs.emplace_back(sub, &e);
  }
  for (auto& [sub, e] : subs) {
    const std::string name = e->name;
    if (name == "certify-lower" || name == "lower-spectrum" || name == "cylinder") {
      sub->add_option("--w", o.w, "unit normal of the plane containing M, as x,y,z");
    }
    if (name == "cylinder") sub->add_option("--eps", o.eps, "thickness sequence");
    if (name == "graph") {
      sub->add_option("--export", o.export_path, "write the graph to this path");
      sub->add_option("--graph-format", o.graph_format, "dot or json (default: from the export extension)")->check(CLI::IsMember({"dot", "json"}));
    }
    if (name == "randtest") {
      sub->add_option("--suite", o.suite, "suite name or 'all'");
      sub->add_option("--n", o.n, "instances per suite");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  const Entry* chosen = nullptr;
  for (auto& [sub, e] : subs) {
    if (sub->parsed()) chosen = e;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Result res;
  try {
    res = chosen->fn(o);
  } catch (const InputError& e) {
    std::cerr << "minkq: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "minkq: " << e.what() << "\n";
    return kInput;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  json report;
  report["command"] = chosen->name;
  report["seed"] = o.seed;
  json inputs = json::object();
  for (const auto& [key, val] : {std::pair{"K", &o.K}, {"L", &o.L}, {"M", &o.M}}) {
    if (!val->empty()) inputs[key] = *val;
  }
  inputs["quad_tol"] = o.quad_tol;
  if (o.mesh_h > 0) inputs["mesh_h"] = o.mesh_h;
  if (o.tol >= 0) inputs["tol"] = o.tol;
  if (o.kmax >= 0) inputs["kmax"] = o.kmax;
  report["inputs"] = inputs;
  report["values"] = res.values;
  report["pass"] = res.pass;
  if (!o.no_timing) report["wall_time_s"] = wall;

  const std::string text = render(report, o.format);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "minkq: cannot write '" << o.out << "'\n";
      return kInput;
    }
    f << text;
  }
  return res.pass ? kPass : kFail;
}
