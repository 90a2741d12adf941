#ifndef MINKQ_H
#define MINKQ_H

/* C interface to the minkq library. Objects are opaque handles released with
 * their matching _free function; every call returns a minkq_status and, on
 * failure, leaves a message for minkq_last_error() on the calling thread.
 * Strings returned through char** are released with minkq_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MINKQ_API __declspec(dllexport)
#elif defined(MINKQ_BUILDING)
#define MINKQ_API __attribute__((visibility("default")))
#else
#define MINKQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum minkq_status {
  MINKQ_OK = 0,
  MINKQ_DEGENERATE_INPUT = 1,
  MINKQ_BAD_SPEC = 2,
  MINKQ_NEGATIVE_MASS = 3,
  MINKQ_QUADRATURE_FAILURE = 4,
  MINKQ_BAD_MESH = 5,
  MINKQ_NUMERICAL_FAILURE = 6,
  MINKQ_INSUFFICIENT_SPECTRUM = 7,
  MINKQ_DIMENSION_ERROR = 8,
  MINKQ_SINGULAR_GM = 9,
  MINKQ_ZERO_DENOMINATOR = 10,
  MINKQ_BAD_PARAM = 11,
  MINKQ_NULL_ARGUMENT = 12,
  MINKQ_INTERNAL = 99
} minkq_status;

typedef struct minkq_polytope minkq_polytope;
typedef struct minkq_graph minkq_graph;

MINKQ_API const char* minkq_last_error(void);
MINKQ_API const char* minkq_status_name(minkq_status s);
MINKQ_API void minkq_string_free(char* s);
MINKQ_API const char* minkq_version(void);

/* ---- polytopes ------------------------------------------------------- */

/* xyz holds count points as x0 y0 z0 x1 ... */
MINKQ_API minkq_status minkq_polytope_from_points(const double* xyz, size_t count,
                                                  int require_full, minkq_polytope** out);
/* cube, ccube, simplex, regsimplex, ball@L, shear:a, trunc:d, deeptrunc:d,
 * cap@L, segment[:i], square, hexagon, random:n:seed; terms joined with '+' are
 * Minkowski-added. */
MINKQ_API minkq_status minkq_polytope_builtin(const char* name, minkq_polytope** out);
MINKQ_API minkq_status minkq_polytope_sum(const minkq_polytope* p, const minkq_polytope* q,
                                          minkq_polytope** out);
MINKQ_API minkq_status minkq_polytope_translate(const minkq_polytope* p, const double v[3],
                                                minkq_polytope** out);
MINKQ_API minkq_status minkq_polytope_scale(const minkq_polytope* p, double factor,
                                            minkq_polytope** out);
MINKQ_API void minkq_polytope_free(minkq_polytope* p);

typedef struct minkq_polytope_info {
  int dimension;
  int vertices;
  int edges;
  int facets;
  double centroid[3];
  double diameter;
} minkq_polytope_info;

MINKQ_API minkq_status minkq_polytope_get_info(const minkq_polytope* p, minkq_polytope_info* out);
/* Copies up to cap vertices; *count receives the total. */
MINKQ_API minkq_status minkq_polytope_vertices(const minkq_polytope* p, double* xyz, size_t cap,
                                               size_t* count);
MINKQ_API minkq_status minkq_polytope_support(const minkq_polytope* p, const double u[3],
                                              double* out);
MINKQ_API minkq_status minkq_enclosing_radii(const minkq_polytope* m, double* r, double* R);

typedef struct minkq_trivial {
  int dim_k, dim_l, dim_m, dim_kl, dim_km, dim_lm, dim_klm;
  int vllm_vanishes;
  int trivial_equality;
} minkq_trivial;

MINKQ_API minkq_status minkq_classify_trivial(const minkq_polytope* k, const minkq_polytope* l,
                                              const minkq_polytope* m, minkq_trivial* out);

/* ---- mixed volumes --------------------------------------------------- */

MINKQ_API minkq_status minkq_volume(const minkq_polytope* p, double* out);
/* Polarization of volumes of Minkowski sums. */
MINKQ_API minkq_status minkq_mixed_volume(const minkq_polytope* k, const minkq_polytope* l,
                                          const minkq_polytope* m, double* out);
/* (1/3) int h_K dS_{L,M}; a NULL k or l stands for the unit ball. */
MINKQ_API minkq_status minkq_mixed_volume_measure(const minkq_polytope* k,
                                                  const minkq_polytope* l,
                                                  const minkq_polytope* m, double quad_tol,
                                                  double* out);

typedef struct minkq_deficit {
  double vkl, vkk, vll, deficit, scale;
} minkq_deficit;

/* NULL k or l stands for the unit ball. */
MINKQ_API minkq_status minkq_quadratic_deficit(const minkq_polytope* k, const minkq_polytope* l,
                                               const minkq_polytope* m, double quad_tol,
                                               minkq_deficit* out);

typedef struct minkq_classical {
  double volume, surface_area, mean_width;
} minkq_classical;

MINKQ_API minkq_status minkq_classical_functionals(const minkq_polytope* k, minkq_classical* out);

/* ---- metric graphs --------------------------------------------------- */

MINKQ_API minkq_status minkq_graph_build(const minkq_polytope* m, minkq_graph** out);
MINKQ_API void minkq_graph_free(minkq_graph* g);

typedef struct minkq_graph_info {
  int vertices;
  int edges;
  int connected;
  double total_weight;
  double sbm_mass;
  double mu_mass;
} minkq_graph_info;

MINKQ_API minkq_status minkq_graph_get_info(const minkq_graph* g, minkq_graph_info* out);
/* format: "dot" or "json". */
MINKQ_API minkq_status minkq_graph_export(const minkq_graph* g, const char* format, char** out);
MINKQ_API minkq_status minkq_graph_import_json(const char* text, minkq_graph** out);
/* Largest absolute difference in any numeric field; -1 if the combinatorics differ. */
MINKQ_API minkq_status minkq_graph_compare(const minkq_graph* a, const minkq_graph* b,
                                           double* out);

typedef struct minkq_structural {
  double worst_tan_margin;
  double worst_balance;
  double max_length;
  int tan_violations;
  int balance_violations;
} minkq_structural;

MINKQ_API minkq_status minkq_graph_structural(const minkq_graph* g, double r, double R,
                                              minkq_structural* out);
/* E(h_f, h_g) on the graph; a NULL polytope stands for the unit ball. */
MINKQ_API minkq_status minkq_form_value(const minkq_graph* g, const minkq_polytope* f,
                                        const minkq_polytope* h, double quad_tol, double* out);
/* int f dS_{B,M} over the arcs; NULL f stands for the constant 1. */
MINKQ_API minkq_status minkq_integrate_on_arcs(const minkq_graph* g, const minkq_polytope* f,
                                               double quad_tol, double* out);

typedef struct minkq_spectrum {
  int system_size;
  int computed;
  int kernel_dimension;
  int positive;
  double tau;
  double angle_residual;
  double max_residual; /* largest |E x - lambda M x| */
} minkq_spectrum;

/* Top-k eigenvalues (descending) into values[0..k). tau <= 0 selects 10 h^2. */
MINKQ_API minkq_status minkq_graph_spectrum(const minkq_graph* g, double h, int k, double tau,
                                            double* values, minkq_spectrum* out);

typedef struct minkq_poincare {
  double lhs, rhs, cor_lhs, cor_rhs;
  int has_corollary;
  int holds;
} minkq_poincare;

/* r <= 0 skips the r,R form. */
MINKQ_API minkq_status minkq_edge_poincare(const double* samples, size_t count, double l,
                                           double eps, double r, double R, minkq_poincare* out);

/* ---- equality cases and inequalities ---------------------------------- */

typedef enum minkq_verdict {
  MINKQ_EQUALITY = 0,
  MINKQ_STRICT = 1,
  MINKQ_INCONCLUSIVE = 2
} minkq_verdict;

typedef struct minkq_certificate {
  minkq_deficit deficit;
  double a;
  double v[3];
  double sup_residual;
  double diameter;
  double relative_deficit;
  double relative_residual;
  int nodes;
  int trivial;
  int consistent;
  minkq_verdict verdict;
} minkq_certificate;

/* eps_d <= 0 or eps_s <= 0 select the defaults 1e-9 and 1e-6. */
MINKQ_API minkq_status minkq_certify_full(const minkq_polytope* k, const minkq_polytope* l,
                                          const minkq_polytope* m, double quad_tol,
                                          double eps_d, double eps_s, minkq_certificate* out);
MINKQ_API minkq_status minkq_certify_lower(const minkq_polytope* k, const minkq_polytope* l,
                                           const minkq_polytope* m, const double w[3],
                                           double quad_tol, double eps_d, double eps_s,
                                           minkq_certificate* out);

typedef struct minkq_stability {
  double a;
  double v[3];
  double G[9];
  double r, R, C;
  double residual;
  minkq_deficit deficit;
  double lhs, rhs, scale;
  int holds;
} minkq_stability;

MINKQ_API minkq_status minkq_weak_stability(const minkq_polytope* k, const minkq_polytope* l,
                                            const minkq_polytope* m, minkq_stability* out);

typedef struct minkq_rigidity {
  minkq_deficit deficit;
  double r, R;
  double sbm_integral;
  double mu_integral;
  double lhs, rhs, scale;
  int holds;
} minkq_rigidity;

MINKQ_API minkq_status minkq_rigidity_check(const minkq_polytope* k, const minkq_polytope* l,
                                            const minkq_polytope* m, double quad_tol,
                                            minkq_rigidity* out);

/* ---- lower-dimensional M --------------------------------------------- */

typedef struct minkq_cluster {
  int k;
  double target;
  int expected;
  int found;
  double worst_deviation;
} minkq_cluster;

/* clusters must hold k_max + 1 entries. */
MINKQ_API minkq_status minkq_lower_spectrum(const minkq_polytope* m, const double w[3], int k_max,
                                            double h, double tol, minkq_cluster* clusters,
                                            int* atoms, int* ok);
/* int f dS_{B,M} for M in w^perp; NULL f stands for the constant 1. */
MINKQ_API minkq_status minkq_sbm_lowerdim(const minkq_polytope* m, const double w[3],
                                          const minkq_polytope* f, double quad_tol, double* out);
/* values and errors hold count entries. */
MINKQ_API minkq_status minkq_cylinder_limit(const minkq_polytope* m, const double w[3],
                                            const double* eps, size_t count,
                                            const minkq_polytope* f, double quad_tol,
                                            double* target, double* values, double* errors);

/* ---- randomized suites ----------------------------------------------- */

/* Newline-separated "name<TAB>description" lines. */
MINKQ_API minkq_status minkq_suite_list(char** out);

typedef struct minkq_case {
  int index;
  uint64_t seed;
  int pass;
  double metric;
} minkq_case;

MINKQ_API minkq_status minkq_run_case(const char* suite, uint64_t seed, int index,
                                      minkq_case* out);

#ifdef __cplusplus
}
#endif

#endif
