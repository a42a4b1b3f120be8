/*
 * fracapprox C API
 *
 * Identity-preserving rational approximations of s^alpha, 0 < alpha < 1.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching fa_*_free. Strings returned through char** are
 * heap-allocated and released with fa_string_free. Functions that can fail
 * return fa_status; on failure fa_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the
 * same thread).
 */
#ifndef FRACAPPROX_H
#define FRACAPPROX_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(FRACAPPROX_BUILDING)
#define FA_API __declspec(dllexport)
#else
#define FA_API __declspec(dllimport)
#endif
#else
#define FA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fa_status {
    FA_OK = 0,
    FA_ERR_DOMAIN = 1,
    FA_ERR_RANGE = 2, /* epsilon outside its admissible interval */
    FA_ERR_SHAPE = 3,
    FA_ERR_UNSUPPORTED_SHAPE = 4,
    FA_ERR_USAGE = 5,
    FA_ERR_NOT_RC_REALIZABLE = 6,
    FA_ERR_CONDITIONING = 7,
    FA_ERR_NULL_ARGUMENT = 8,
    FA_ERR_INTERNAL = 9
} fa_status;

typedef enum fa_kind { FA_INTEGRATOR = 0, FA_DIFFERENTIATOR = 1 } fa_kind;

typedef enum fa_condition { FA_CONDITION_I = 1, FA_CONDITION_II = 2, FA_CONDITION_III = 3 } fa_condition;

typedef enum fa_experiment_id { FA_EXPERIMENT_X = 0, FA_EXPERIMENT_Y = 1, FA_EXPERIMENT_Z = 2 } fa_experiment_id;

typedef enum fa_netlist_format { FA_NETLIST_SPICE = 0, FA_NETLIST_JSON = 1 } fa_netlist_format;

typedef struct fa_model fa_model;
typedef struct fa_verdict fa_verdict;
typedef struct fa_pf fa_pf;
typedef struct fa_rc fa_rc;
typedef struct fa_filter fa_filter;
typedef struct fa_experiment fa_experiment;

/* method 1..7; epsilon used only when has_epsilon != 0 (methods 3, 4). */
typedef struct fa_design_spec {
    int method;
    double alpha;
    double omega_l;
    double omega_h;
    int n;
    int k;
    int has_epsilon;
    double epsilon;
    int literal_baseline_gain;
} fa_design_spec;

typedef struct fa_response {
    double re;
    double im;
    double magnitude_db;
    double phase_deg;
} fa_response;

typedef struct fa_norms {
    double magnitude_inf;
    double magnitude_2;
    double phase_inf;
    double phase_2;
} fa_norms;

typedef struct fa_sweep_settings {
    double omega_l;
    double omega_h;
    int n;
    int k;
    int points;
    int concatenated; /* 0: per-alpha norms then max; 1: one concatenated series */
} fa_sweep_settings;

typedef struct fa_experiment_options {
    double h;
    double horizon;
    int cascade;
} fa_experiment_options;

typedef struct fa_netlist_meta {
    int method;
    double alpha;
    double omega_l;
    double omega_h;
    int n;
} fa_netlist_meta;

FA_API const char* fa_version(void);
FA_API const char* fa_last_error(void);
FA_API void fa_string_free(char* s);

/* Defaults: method 1, alpha 0.5, band [1e-3, 1e3], n 10, k 2, no epsilon. */
FA_API void fa_design_spec_init(fa_design_spec* spec);
FA_API void fa_sweep_settings_init(fa_sweep_settings* settings);
FA_API void fa_experiment_options_init(fa_experiment_options* options);

/* ---- factored models ---------------------------------------------------- */

FA_API fa_status fa_model_create(double gain, int s_exponent, int multiplicity, const double* zeros,
                                 const double* poles, size_t count, fa_model** out);
FA_API fa_status fa_model_clone(const fa_model* model, fa_model** out);
FA_API void fa_model_free(fa_model* model);
FA_API double fa_model_gain(const fa_model* model);
FA_API int fa_model_s_exponent(const fa_model* model);
FA_API int fa_model_multiplicity(const fa_model* model);
FA_API size_t fa_model_factor_count(const fa_model* model);
FA_API fa_status fa_model_factor(const fa_model* model, size_t index, double* zero, double* pole);
/* 1 when both handles hold field-for-field identical data. */
FA_API int fa_model_equal(const fa_model* a, const fa_model* b);
FA_API fa_status fa_model_eval(const fa_model* model, double omega, fa_response* out);
FA_API fa_status fa_model_multiply(const fa_model* a, const fa_model* b, double rel_tol, fa_model** out);
FA_API fa_status fa_model_reciprocal(const fa_model* model, fa_model** out);
FA_API fa_status fa_model_to_json(const fa_model* model, int precision, char** out);

/* ---- designers ---------------------------------------------------------- */

FA_API fa_status fa_design(const fa_design_spec* spec, fa_kind kind, fa_model** out);
/* high_branch (nullable) receives 1 for 0.5 < alpha < 1. */
FA_API fa_status fa_design_pair(const fa_design_spec* spec, fa_model** integrator, fa_model** differentiator,
                                int* high_branch);
FA_API fa_status fa_epsilon_bounds(const fa_design_spec* spec, double* lower, double* upper);
FA_API fa_status fa_special_epsilon(const fa_design_spec* spec, double* out);
/* as_json != 0 selects JSON, otherwise a plain text listing. */
FA_API fa_status fa_design_report(const fa_design_spec* spec, fa_kind kind, int as_json, int precision, char** out);

/* ---- frequency-domain analysis ------------------------------------------ */

FA_API fa_status fa_exact_response(double alpha, fa_kind kind, double omega, fa_response* out);
FA_API fa_status fa_error_norms(const fa_model* model, double alpha, fa_kind kind, double omega_l, double omega_h,
                                int points, fa_norms* out);
FA_API fa_status fa_bode_csv(const fa_model* model, double alpha, fa_kind kind, double omega_l, double omega_h,
                             int points, int precision, char** out);
/* settings may be NULL for the defaults. */
FA_API fa_status fa_sweep_table(int method, fa_kind kind, const double* alphas, size_t count,
                                const fa_sweep_settings* settings, fa_norms* out);

/* ---- identities --------------------------------------------------------- */

FA_API fa_status fa_check_identity(fa_condition condition, const fa_design_spec* spec, fa_verdict** out);
FA_API void fa_verdict_free(fa_verdict* verdict);
FA_API int fa_verdict_structural_pass(const fa_verdict* verdict);
FA_API double fa_verdict_deviation(const fa_verdict* verdict);
FA_API fa_status fa_verdict_to_json(const fa_verdict* verdict, int precision, char** out);
/* out[(method-1)*3 + (condition-1)] receives 0/1. */
FA_API fa_status fa_associativity_table(const fa_design_spec* base, const double* alphas, size_t count, int out[21]);

/* ---- partial fractions and RC networks ---------------------------------- */

FA_API fa_status fa_partial_fractions(const fa_model* model, fa_pf** out);
FA_API void fa_pf_free(fa_pf* pf);
FA_API double fa_pf_direct(const fa_pf* pf);
FA_API double fa_pf_c0(const fa_pf* pf);
FA_API size_t fa_pf_term_count(const fa_pf* pf);
/* residue of 1/(s+p_term)^order, order in 1..k */
FA_API fa_status fa_pf_term(const fa_pf* pf, size_t term, size_t order, double* pole, double* residue);
FA_API fa_status fa_pf_eval(const fa_pf* pf, double omega, double* re, double* im);
FA_API fa_status fa_pf_to_json(const fa_pf* pf, int precision, char** out);

FA_API fa_status fa_synthesize_rc(const fa_pf* pf, fa_rc** out);
FA_API void fa_rc_free(fa_rc* net);
FA_API size_t fa_rc_element_count(const fa_rc* net);
FA_API fa_status fa_rc_impedance(const fa_rc* net, double omega, double* re, double* im);
/* meta may be NULL */
FA_API fa_status fa_rc_export(const fa_rc* net, fa_netlist_format format, const fa_netlist_meta* meta, char** out);

/* ---- time domain -------------------------------------------------------- */

FA_API fa_status fa_discretize(const fa_model* model, double h, fa_filter** out);
FA_API void fa_filter_free(fa_filter* filter);
FA_API size_t fa_filter_section_count(const fa_filter* filter);
/* head: 0 passthrough, 1 trapezoid integrator, 2 central-difference differentiator */
FA_API int fa_filter_head(const fa_filter* filter);
FA_API fa_status fa_filter_section(const fa_filter* filter, size_t index, double* b0, double* b1, double* a1);
/* before/after are u[-1] and u[count]; used when has_lookahead != 0. */
FA_API fa_status fa_filter_simulate(const fa_filter* filter, const double* input, size_t count, int has_lookahead,
                                    double before, double after, double* output);

/* options may be NULL for the defaults (h = 1e-3 s, horizon = 10 s). */
FA_API fa_status fa_identity_experiment(const fa_design_spec* spec, const fa_experiment_options* options,
                                        fa_experiment** out);
FA_API void fa_experiment_free(fa_experiment* experiment);
FA_API size_t fa_experiment_samples(const fa_experiment* experiment);
FA_API fa_status fa_experiment_norms(const fa_experiment* experiment, fa_experiment_id which, double* inf_norm,
                                     double* two_norm);
/* which = -1 writes all three with a leading experiment column. */
FA_API fa_status fa_experiment_csv(const fa_experiment* experiment, int which, int precision, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FRACAPPROX_H */
