/*
 * pdx — belief and plausibility calculus over Belnap-Dunn models.
 *
 * C interface of the shared library. Models are opaque handles created from
 * JSON text or files; every call returns a status code and reports details
 * through pdx_last_error(). Returned strings are heap-allocated and must be
 * released with pdx_string_free().
 *
 * All handles are immutable once created, so concurrent reads of one model
 * from several threads are safe. pdx_last_error() is thread-local.
 */

#ifndef PDX_H
#define PDX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PDX_API __declspec(dllexport)
#else
#define PDX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdx_status {
    PDX_OK = 0,
    PDX_ERR_PARSE = 1,     /* formula syntax or file schema error */
    PDX_ERR_UNDEFINED = 2, /* conditioning gate violated (update undefined) */
    PDX_ERR_CONFLICT = 3,  /* total conflict in a Dempster-Shafer combination */
    PDX_ERR_DOMAIN = 4,    /* unknown atom/state, size caps, invalid arguments */
    PDX_ERR_NOMEM = 5
} pdx_status;

typedef enum pdx_method {
    PDX_METHOD_LOWER_UPPER = 0, /* condition as a lower/upper probability envelope */
    PDX_METHOD_DS = 1           /* combine with categorical evidence (DS rule) */
} pdx_method;

/* Opaque model handle: states, valuations and any of mass (belief),
 * independent plausibility, and probability measure. */
typedef struct pdx_model pdx_model;

PDX_API const char* pdx_version(void);

/* Message for the most recent failing call on this thread; never NULL.
 * Valid until the next failing call on the same thread. */
PDX_API const char* pdx_last_error(void);

/* Global comparison tolerance (definedness gates, sum checks, clamping).
 * Default 1e-9. Setting a non-positive value fails. */
PDX_API double pdx_epsilon(void);
PDX_API pdx_status pdx_set_epsilon(double eps);

PDX_API void pdx_string_free(char* text);

/* ---- model lifecycle ---------------------------------------------------- */

PDX_API pdx_status pdx_model_from_json(const char* json_text, pdx_model** out_model);
PDX_API pdx_status pdx_model_from_file(const char* path, pdx_model** out_model);
PDX_API pdx_status pdx_model_to_json(const pdx_model* model, char** out_json);
PDX_API void pdx_model_free(pdx_model* model);

PDX_API size_t pdx_model_state_count(const pdx_model* model);
/* NULL when the index is out of range. The pointer lives as long as the model. */
PDX_API const char* pdx_model_state_name(const pdx_model* model, size_t index);
PDX_API int pdx_model_has_bel(const pdx_model* model);
PDX_API int pdx_model_has_pl(const pdx_model* model);
PDX_API int pdx_model_has_mu(const pdx_model* model);

/* ---- formulas ----------------------------------------------------------- */

/* Parses `formula` and returns its canonical rendering. */
PDX_API pdx_status pdx_formula_canonical(const char* formula, char** out_text);

/* Four-valued truth-table equivalence (at most 10 distinct atoms). */
PDX_API pdx_status pdx_formula_equivalent(const char* lhs, const char* rhs, int* out_equivalent);

/* ---- queries ------------------------------------------------------------ */

/* Four-valued verdict of `formula` at `state`: writes one of 'T','F','N','B'. */
PDX_API pdx_status pdx_eval4(const pdx_model* model, const char* formula, const char* state,
                             char* out_value);

/* Positive and negative extensions as bitmasks (bit i = state i). */
PDX_API pdx_status pdx_extensions(const pdx_model* model, const char* formula,
                                  uint64_t* out_positive, uint64_t* out_negative);

/* bel_pos/bel_neg of the formula; the model must carry a mass. */
PDX_API pdx_status pdx_bel(const pdx_model* model, const char* formula, double* out_pos,
                           double* out_neg);

/* pl_pos/pl_neg; uses the independent plausibility when present, otherwise
 * the plausibility associated to the model's belief. */
PDX_API pdx_status pdx_pl(const pdx_model* model, const char* formula, double* out_pos,
                          double* out_neg);

/* mu(|formula|+); the model must carry a probability measure. */
PDX_API pdx_status pdx_prob(const pdx_model* model, const char* formula, double* out_prob);

/* ---- updating and combining --------------------------------------------- */

/* Conditions every measure the model carries on the positive extension of
 * `formula`: the belief by the chosen method, the independent plausibility
 * by the same method, and the probability measure by Bayes rule. Fails with
 * PDX_ERR_UNDEFINED when a definedness gate is violated. */
PDX_API pdx_status pdx_update(const pdx_model* model, const char* formula, pdx_method method,
                              pdx_model** out_model);

/* Dempster-Shafer combination of the two models' masses (universes must
 * match). The result keeps the first model's valuations. */
PDX_API pdx_status pdx_combine(const pdx_model* first, const pdx_model* second,
                               pdx_model** out_model);

/* ---- reports (JSON) ------------------------------------------------------ */

/* Axiom check of every measure the model carries, with families of
 * distinct subsets up to size kmax. Violations are report content. */
PDX_API pdx_status pdx_check_report(const pdx_model* model, int kmax, char** out_json);

/* Certifies the closed-form conditioning on |formula|+ against the
 * brute-force credal oracle (Bayes-updated permutation extreme points),
 * plus `samples` random interior measures. Needs at most 8 states. */
PDX_API pdx_status pdx_oracle_report(const pdx_model* model, const char* formula, int samples,
                                     uint64_t seed, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PDX_H */
