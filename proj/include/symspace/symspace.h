// Copyright 2026 The symspace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMSPACE_SYMSPACE_H
#define SYMSPACE_SYMSPACE_H

/* C interface to the symspace library. All functions return a status code;
 * on failure symspace_last_error() describes the most recent error on the
 * calling thread. Matrices are opaque handles; their entries are exchanged as
 * row-major arrays of interleaved (re, im) doubles of length 2 d^2. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SYMSPACE_BUILDING_LIBRARY)
#define SYMSPACE_API __declspec(dllexport)
#else
#define SYMSPACE_API __declspec(dllimport)
#endif
#else
#define SYMSPACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symspace_status {
  SYMSPACE_OK = 0,
  SYMSPACE_ERR_DOMAIN = 1,
  SYMSPACE_ERR_INVARIANT = 2,
  SYMSPACE_ERR_INVALID_ARGUMENT = 3,
  SYMSPACE_ERR_INTERNAL = 4
} symspace_status;

typedef enum symspace_ensemble {
  SYMSPACE_UNITARY = 0,
  SYMSPACE_ORTHOGONAL = 1,
  SYMSPACE_SYMPLECTIC = 2,
  SYMSPACE_AI = 3,
  SYMSPACE_AII = 4,
  SYMSPACE_AIII = 5,
  SYMSPACE_BDI = 6,
  SYMSPACE_DIII = 7,
  SYMSPACE_CI = 8,
  SYMSPACE_CII = 9
} symspace_ensemble;

/* split_p = split_q = 0 means no split; AIII, BDI and CII require one. */
typedef struct symspace_ensemble_spec {
  symspace_ensemble family;
  int dim;
  int split_p;
  int split_q;
} symspace_ensemble_spec;

typedef struct symspace_matrix symspace_matrix;

SYMSPACE_API const char* symspace_version(void);
SYMSPACE_API const char* symspace_last_error(void);
SYMSPACE_API const char* symspace_ensemble_name(symspace_ensemble family);
SYMSPACE_API symspace_status symspace_parse_ensemble(const char* name, symspace_ensemble* out);
SYMSPACE_API symspace_status symspace_validate_spec(const symspace_ensemble_spec* spec);

/* ---- matrices ---------------------------------------------------------- */

/* entries may be NULL for the zero matrix. */
SYMSPACE_API symspace_status symspace_matrix_create(int dim, const double* entries,
                                                    symspace_matrix** out);
SYMSPACE_API void symspace_matrix_destroy(symspace_matrix* m);
SYMSPACE_API int symspace_matrix_dim(const symspace_matrix* m);
SYMSPACE_API symspace_status symspace_matrix_copy_out(const symspace_matrix* m, double* entries,
                                                      size_t len);
SYMSPACE_API symspace_status symspace_unitarity_defect(const symspace_matrix* m, double* out);

/* ---- sampling and Born statistics -------------------------------------- */

/* Draws one matrix from stream (seed, index). */
SYMSPACE_API symspace_status symspace_sample(const symspace_ensemble_spec* spec, uint64_t seed,
                                             uint64_t index, symspace_matrix** out);
SYMSPACE_API symspace_status symspace_random_hermitian(int dim, uint64_t seed, uint64_t index,
                                                       symspace_matrix** out);
/* probs receives |<x|V|ref>|^2 for x = 0..d-1; len must equal d. */
SYMSPACE_API symspace_status symspace_born_distribution(const symspace_matrix* v, int ref_index,
                                                        double* probs, size_t len);
SYMSPACE_API symspace_status symspace_tvd_to_uniform(const double* probs, size_t len, double* out);
SYMSPACE_API symspace_status symspace_sq_value(const symspace_matrix* v, const double* phi,
                                               size_t len, double* out);

/* ---- closed forms ------------------------------------------------------ */

typedef enum symspace_entry_slot {
  SYMSPACE_SLOT_DIAGONAL = 0,
  SYMSPACE_SLOT_PARTNER = 1,
  SYMSPACE_SLOT_GENERIC = 2
} symspace_entry_slot;

typedef struct symspace_interval {
  double lower;
  double upper;
  int proven;
} symspace_interval;

SYMSPACE_API symspace_status symspace_expected_tvd(symspace_ensemble family, int dim, double* out);
SYMSPACE_API symspace_status symspace_per_entry_deviation(symspace_ensemble family, int dim,
                                                          symspace_entry_slot slot, double* out);
SYMSPACE_API symspace_status symspace_asymptote(symspace_ensemble family, double* out);
SYMSPACE_API symspace_status symspace_appendix_interval(symspace_ensemble family, int dim,
                                                        symspace_interval* out);
SYMSPACE_API symspace_status symspace_twirl_closed_form(symspace_ensemble family,
                                                        const symspace_matrix* a,
                                                        symspace_matrix** out);

/* ---- Monte Carlo ------------------------------------------------------- */

typedef struct symspace_mc_options {
  uint64_t trials;
  uint64_t seed;
  unsigned workers;
} symspace_mc_options;

typedef struct symspace_mc_report {
  double estimate;
  double std_error;
  uint64_t trials;
  uint64_t master_seed;
  double wall_time_s;
} symspace_mc_report;

typedef struct symspace_twirl_report {
  double frobenius_error;
  double operator_norm_f; /* ||A||_F */
  uint64_t trials;
  uint64_t master_seed;
  double wall_time_s;
} symspace_twirl_report;

typedef enum symspace_entry_class {
  SYMSPACE_ENTRY_GROUP = 0,
  SYMSPACE_ENTRY_DOT_PRODUCT = 1,
  SYMSPACE_ENTRY_AI_DIAGONAL = 2,
  SYMSPACE_ENTRY_AII_GENERIC = 3,
  SYMSPACE_ENTRY_AII_PARTNER = 4,
  SYMSPACE_ENTRY_DIII_GENERIC = 5,
  SYMSPACE_ENTRY_DIII_PARTNER = 6
} symspace_entry_class;

typedef struct symspace_ks_result {
  double statistic;
  double threshold;
  int pass;
  int degenerate;
  uint64_t trials;
  uint64_t master_seed;
  char law[64];
} symspace_ks_result;

typedef struct symspace_tail_report {
  double t;
  double empirical;
  double levy_bound;
  double binomial_stderr;
  double mean;
  uint64_t trials;
} symspace_tail_report;

SYMSPACE_API symspace_status symspace_mc_expected_tvd(const symspace_ensemble_spec* spec,
                                                      const symspace_mc_options* opts,
                                                      symspace_mc_report* out);
/* mean_out may be NULL. */
SYMSPACE_API symspace_status symspace_mc_twirl(symspace_ensemble family, const symspace_matrix* a,
                                               const symspace_mc_options* opts,
                                               symspace_matrix** mean_out,
                                               symspace_twirl_report* out);
SYMSPACE_API symspace_status symspace_ks_law_check(symspace_ensemble family,
                                                   symspace_entry_class entry, int dim,
                                                   const symspace_mc_options* opts, double alpha,
                                                   symspace_ks_result* out);
SYMSPACE_API symspace_status symspace_levy_bound(symspace_ensemble family, double dim, double t,
                                                 double* out);
/* out must hold count reports, one per threshold. */
SYMSPACE_API symspace_status symspace_mc_tail_probability(const symspace_ensemble_spec* spec,
                                                          const double* ts, size_t count,
                                                          const symspace_mc_options* opts,
                                                          symspace_tail_report* out);
SYMSPACE_API symspace_status symspace_mc_ball_fraction(const symspace_ensemble_spec* spec,
                                                       double radius,
                                                       const symspace_mc_options* opts,
                                                       symspace_mc_report* out);
SYMSPACE_API symspace_status symspace_mc_query_deviation(const symspace_ensemble_spec* spec,
                                                         const double* phi, size_t len, double tau,
                                                         const symspace_mc_options* opts,
                                                         symspace_mc_report* out);

/* ---- statistical-query bounds ------------------------------------------ */

typedef enum symspace_sq_mode {
  SYMSPACE_SQ_COMBINED = 0,
  SYMSPACE_SQ_PER_ENSEMBLE = 1
} symspace_sq_mode;

typedef struct symspace_sq_params {
  symspace_ensemble family;
  double dim;
  double tau;
  double eps;
  double log_beta;
  symspace_sq_mode mode;
} symspace_sq_params;

typedef struct symspace_bound_result {
  double log_q_plus_1;
  double log_ratio;
  double u_bound;
  double f_bound;
  double log_u;
  double log_f;
  double xi;
  double tau_min;
  int vacuous;
  int xi_positive;
} symspace_bound_result;

typedef struct symspace_regime_schedule {
  double tau_exp;
  double beta_exp;
  double xi_exp;
  symspace_sq_mode mode;
} symspace_regime_schedule;

typedef struct symspace_regime_row {
  int n;
  double dim;
  double tau;
  double eps;
  double xi;
  double log_beta;
  double log_u;
  double log_f;
  double log_q_plus_1;
  double log_log_q_plus_1;
  int vacuous;
  int valid;
} symspace_regime_row;

/* A non-positive xi gives a vacuous result with xi_positive = 0 and
 * u_bound = 2 rather than an error. */
SYMSPACE_API symspace_status symspace_sq_bound(const symspace_sq_params* params,
                                               symspace_bound_result* out);
/* rows must hold count entries. */
SYMSPACE_API symspace_status symspace_regime_table(symspace_ensemble family, const int* n_list,
                                                   size_t count,
                                                   const symspace_regime_schedule* schedule,
                                                   symspace_regime_row* rows);

#ifdef __cplusplus
}
#endif

#endif /* SYMSPACE_SYMSPACE_H */
