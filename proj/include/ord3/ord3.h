#ifndef ORD3_ORD3_H
#define ORD3_ORD3_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ORD3_API __attribute__((visibility("default")))
#else
#define ORD3_API
#endif

typedef enum ord3_status {
  ORD3_OK = 0,
  ORD3_E_INVALID_ARGUMENT = 1,
  ORD3_E_PARSE = 2,
  ORD3_E_DOMAIN = 3,
  ORD3_E_IO = 4,
  ORD3_E_INTERNAL = 5
} ord3_status;

/* Message for the last failing call on this thread; never NULL. */
ORD3_API const char* ord3_last_error(void);
ORD3_API const char* ord3_version(void);

/* ------------------------------------------------------------------------
 * Results: an ordered list of key/value string pairs, optionally a text
 * attachment (certificate, presentation). Keys may repeat.
 */
typedef struct ord3_result ord3_result;

ORD3_API size_t ord3_result_size(const ord3_result* r);
ORD3_API const char* ord3_result_key(const ord3_result* r, size_t i);
ORD3_API const char* ord3_result_value(const ord3_result* r, size_t i);
/* First value stored under key, or NULL. */
ORD3_API const char* ord3_result_get(const ord3_result* r, const char* key);
/* 1 when the computation finished without deciding the question. */
ORD3_API int ord3_result_inconclusive(const ord3_result* r);
/* "" when there is no attachment. */
ORD3_API const char* ord3_result_attachment(const ord3_result* r);
ORD3_API void ord3_result_free(ord3_result* r);

typedef enum ord3_question {
  ORD3_Q_LEFT_ORDERABLE = 0,
  ORD3_Q_BIORDERABLE = 1,
  ORD3_Q_VIRTUALLY_BIORDERABLE = 2,
  ORD3_Q_HORIZONTAL_FOLIATION = 3, /* Seifert only */
  ORD3_Q_SOL_MONODROMY = 4         /* Sol only */
} ord3_question;

/* ------------------------------------------------------------------------
 * Seifert fibred spaces. Verdict results carry "verdict", "reason" and,
 * when a foliation witness exists, "witness".
 */
typedef struct ord3_seifert ord3_seifert;

typedef enum ord3_special_kind {
  ORD3_SPECIAL_S3 = 0,
  ORD3_SPECIAL_S1XS2 = 1,
  ORD3_SPECIAL_S1TWISTS2 = 2,
  ORD3_SPECIAL_SOLID_TORUS = 3,
  ORD3_SPECIAL_SOLID_KLEIN_BOTTLE = 4,
  ORD3_SPECIAL_P2XS1 = 5,
  ORD3_SPECIAL_CIRCLE_BUNDLE = 6,
  ORD3_SPECIAL_BOUNDED = 7
} ord3_special_kind;

/* M(g; b, beta_1/alpha_1, ...). alpha and beta may be NULL when n == 0. */
ORD3_API ord3_status ord3_seifert_new(long g, long b, const long* alpha, const long* beta, size_t n,
                                      ord3_seifert** out);
/* base_genus and euler are read for ORD3_SPECIAL_CIRCLE_BUNDLE, b1_positive
 * for ORD3_SPECIAL_BOUNDED. */
ORD3_API ord3_status ord3_seifert_special(ord3_special_kind kind, long base_genus, long euler,
                                          int b1_positive, ord3_seifert** out);
ORD3_API void ord3_seifert_free(ord3_seifert* m);
ORD3_API ord3_status ord3_seifert_query(const ord3_seifert* m, ord3_question q, ord3_result** out);
/* Keys chi-orb, euler, pi1-finite; attachment is the presentation. Not
 * available for special descriptors. */
ORD3_API ord3_status ord3_seifert_describe(const ord3_seifert* m, ord3_result** out);

/* ------------------------------------------------------------------------
 * Sol manifolds.
 */
typedef struct ord3_sol ord3_sol;

typedef enum ord3_sol_variant {
  ORD3_SOL_TORUS_BUNDLE = 0,
  ORD3_SOL_KLEIN_BOTTLE_BUNDLE = 1,
  ORD3_SOL_UNION_TORUS_GLUE = 2,
  ORD3_SOL_UNION_KLEIN_GLUE = 3,
  ORD3_SOL_BOUNDARY = 4
} ord3_sol_variant;

typedef enum ord3_boundary_kind {
  ORD3_BOUNDARY_BALL = 0,
  ORD3_BOUNDARY_SOLID_TORUS = 1,
  ORD3_BOUNDARY_SOLID_KLEIN = 2,
  ORD3_BOUNDARY_TORUS_X_INTERVAL = 3,
  ORD3_BOUNDARY_TWISTED_I_BUNDLE_OVER_K = 4
} ord3_boundary_kind;

/* matrix = {a, b, c, d}, row-major; required for the torus bundle and the
 * torus-glued union, ignored otherwise. boundary is read for
 * ORD3_SOL_BOUNDARY only. */
ORD3_API ord3_status ord3_sol_new(ord3_sol_variant v, const long* matrix, ord3_boundary_kind boundary,
                                  ord3_sol** out);
ORD3_API void ord3_sol_free(ord3_sol* m);
ORD3_API ord3_status ord3_sol_query(const ord3_sol* m, ord3_question q, ord3_result** out);
/* Sol condition for a GL(2, Z) matrix: "verdict" yes/no. */
ORD3_API ord3_status ord3_sol_monodromy(const long* matrix, ord3_result** out);

/* ------------------------------------------------------------------------
 * Finite presentations ("gens: a, b" / "rel: a*b*a^-1*b^-1" lines).
 */
typedef struct ord3_presentation ord3_presentation;

ORD3_API ord3_status ord3_presentation_parse(const char* text, ord3_presentation** out);
ORD3_API ord3_status ord3_presentation_load(const char* path, ord3_presentation** out);
ORD3_API ord3_status ord3_rss_presentation(long p, long q, long m, ord3_presentation** out);
ORD3_API ord3_status ord3_seifert_presentation(const ord3_seifert* m, ord3_presentation** out);
ORD3_API void ord3_presentation_free(ord3_presentation* p);
/* Caller frees with ord3_string_free. */
ORD3_API ord3_status ord3_presentation_render(const ord3_presentation* p, char** out);
/* Keys betti, torsion, lo-via-betti; inconclusive when b1 = 0. */
ORD3_API ord3_status ord3_homology(const ord3_presentation* p, ord3_result** out);
ORD3_API void ord3_string_free(char* s);

/* ------------------------------------------------------------------------
 * Explicit bi-orders. *cmp receives -1, 0 or 1 for w1 <, =, > w2.
 */
/* Free group on the first `rank` letters a, b, c, ... */
ORD3_API ord3_status ord3_compare_free(const char* w1, const char* w2, int rank, int* cmp);
/* Group <a, b, c | a b a^-1 b^-1 = c^2>. */
ORD3_API ord3_status ord3_compare_surface(const char* w1, const char* w2, int* cmp);

/* ------------------------------------------------------------------------
 * Positive-cone search.
 */
typedef enum ord3_family {
  ORD3_FAMILY_FREE = 0,
  ORD3_FAMILY_FREE_ABELIAN = 1, /* (Z/modulus)^rank, Z^rank when modulus is 0 */
  ORD3_FAMILY_KLEIN = 2,
  ORD3_FAMILY_TREFOIL = 3,
  ORD3_FAMILY_BSW = 4
} ord3_family;

typedef enum ord3_order_mode { ORD3_MODE_LEFT = 0, ORD3_MODE_BI = 1 } ord3_order_mode;

typedef struct ord3_cone_options {
  ord3_family family;
  ord3_order_mode mode;
  int radius;       /* first radius tried */
  int radius_cap;   /* with grow != 0: last radius tried */
  int grow;         /* increase the radius until a refutation or the cap */
  int rank;         /* free and free-abelian families */
  long modulus;     /* free-abelian family */
} ord3_cone_options;

ORD3_API void ord3_cone_options_init(ord3_cone_options* opts);
/* Keys certificate (refutation | consistent), radius, elements, verified;
 * attachment is the certificate text. Inconclusive when no refutation. */
ORD3_API ord3_status ord3_cone_search(const ord3_cone_options* opts, ord3_result** out);

/* ------------------------------------------------------------------------
 * Figure-eight representations. For each root: keys s, g(s), residual,
 * slope. grid <= 0 or s_max <= 0 select the defaults.
 */
ORD3_API ord3_status ord3_fig8_solve(long p, long q, double grid, double s_max, ord3_result** out);

#ifdef __cplusplus
}
#endif

#endif
