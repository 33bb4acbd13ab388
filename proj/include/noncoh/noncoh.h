// SPDX-License-Identifier: Apache-2.0
//
// noncoh: gDoF and achievable rates for noncoherent block-fading MIMO
// Copyright (C) 2026 The noncoh authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

/*
 * C interface to the noncoh library.
 *
 * Every call that can fail takes a context and returns a noncoh_status;
 * on failure noncoh_last_error(ctx) holds a message. A context must not be
 * used from two threads at once. Distinct contexts are independent.
 */
#ifndef NONCOH_NONCOH_H
#define NONCOH_NONCOH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(NONCOH_BUILDING_LIBRARY)
#define NONCOH_API __declspec(dllexport)
#else
#define NONCOH_API __declspec(dllimport)
#endif
#else
#define NONCOH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum noncoh_status {
    NONCOH_OK = 0,
    NONCOH_ERR_DOMAIN = 1,      /* parameter outside the admissible range */
    NONCOH_ERR_SINGULAR = 2,    /* degenerate matrix */
    NONCOH_ERR_ESTIMATION = 3,  /* Monte Carlo or estimator failure */
    NONCOH_ERR_CONFIG = 4,      /* inconsistent configuration (power constraint) */
    NONCOH_ERR_INVALID_ARG = 5, /* null pointer or bad buffer */
    NONCOH_ERR_INTERNAL = 6
} noncoh_status;

typedef struct noncoh_context noncoh_context;
typedef struct noncoh_check_list noncoh_check_list;

typedef struct noncoh_estimate {
    double mean;
    double std_error;
    uint64_t n_samples;
    uint64_t seed;
    uint64_t n_nonfinite;
    uint64_t n_resampled;
} noncoh_estimate;

typedef struct noncoh_gdof_solution {
    double gamma_a;
    double gamma_b;
    double gamma_c;
    double per_block;
    double per_symbol;
} noncoh_gdof_solution;

/* Symmetric 2x2 scenario; link power 10^(snr_db/10) * gain. */
typedef struct noncoh_rate_scenario {
    double snr_db;
    double direct_gain;
    double cross_gain;
    int t;
} noncoh_rate_scenario;

/* Rates in bits/symbol. */
typedef struct noncoh_rate_report {
    noncoh_estimate noncoherent;
    double siso_training;
    double parallel_training;
    double gain;
    double input_power;
} noncoh_rate_report;

typedef enum noncoh_check_kind {
    NONCOH_CHECK_SANDWICH = 0,
    NONCOH_CHECK_EQUALITY = 1
} noncoh_check_kind;

typedef struct noncoh_check_result {
    char name[64];
    char params[256];
    noncoh_check_kind kind;
    double lhs;
    double rhs_lower;
    double rhs_upper;
    double std_error;
    double slack;
    double tolerance;
    int passed;
} noncoh_check_result;

NONCOH_API const char *noncoh_version(void);
NONCOH_API const char *noncoh_status_string(noncoh_status status);

/* Defaults: seed 1, 100000 samples, threads 0 (hardware concurrency). */
NONCOH_API noncoh_status noncoh_context_create(noncoh_context **out);
NONCOH_API void noncoh_context_destroy(noncoh_context *ctx);
NONCOH_API noncoh_status noncoh_context_set_seed(noncoh_context *ctx, uint64_t seed);
NONCOH_API noncoh_status noncoh_context_set_samples(noncoh_context *ctx, uint64_t n_samples);
NONCOH_API noncoh_status noncoh_context_set_threads(noncoh_context *ctx, unsigned threads);
NONCOH_API uint64_t noncoh_context_seed(const noncoh_context *ctx);
NONCOH_API uint64_t noncoh_context_samples(const noncoh_context *ctx);
/* Message of the last failed call on ctx, "" if none. */
NONCOH_API const char *noncoh_last_error(const noncoh_context *ctx);

/* Special functions. */
NONCOH_API noncoh_status noncoh_exp_e1(noncoh_context *ctx, double x, double *out);
NONCOH_API noncoh_status noncoh_log_gamma(noncoh_context *ctx, double x, double *out);
NONCOH_API noncoh_status noncoh_digamma(noncoh_context *ctx, double x, double *out);

/* gDoF, per symbol unless stated. gamma4 is {g11, g12, g21, g22}. */
NONCOH_API noncoh_status noncoh_gdof_siso(noncoh_context *ctx, double gamma, int t, double *out);
NONCOH_API noncoh_status noncoh_gdof_parallel(noncoh_context *ctx, const double *gammas, size_t n, int t,
                                              double *out);
NONCOH_API noncoh_status noncoh_gdof_simo(noncoh_context *ctx, const double *gammas, size_t n, int t, double *out);
NONCOH_API noncoh_status noncoh_gdof_miso(noncoh_context *ctx, const double *gammas, size_t n, int t, double *out);
NONCOH_API noncoh_status noncoh_gdof_sym2x2(noncoh_context *ctx, double gamma_d, double gamma_cl, int t,
                                            double *out);
/* Per-block outer-bound objective. */
NONCOH_API noncoh_status noncoh_gdof_f_gamma(noncoh_context *ctx, double ga, double gb, double gc,
                                             const double gamma4[4], int t, double *out);
NONCOH_API noncoh_status noncoh_gdof_inner2x2(noncoh_context *ctx, double ga, double gb, double gc,
                                              const double gamma4[4], int t, double *out);
NONCOH_API noncoh_status noncoh_gdof_p9(noncoh_context *ctx, double gamma_d, double gamma_cl, int t,
                                        noncoh_gdof_solution *out);
NONCOH_API noncoh_status noncoh_gdof_p8_grid(noncoh_context *ctx, const double gamma4[4], int t, int grid_points,
                                             int refine_iters, noncoh_gdof_solution *out);
NONCOH_API noncoh_status noncoh_gdof_gausscode(noncoh_context *ctx, int m, double gamma_d, double gamma_cl, int t,
                                               double *out);
NONCOH_API noncoh_status noncoh_gdof_training(noncoh_context *ctx, int m, double gamma_d, int t, double *out);

/* Rates; Monte Carlo calls use the context seed, sample count and threads. */
NONCOH_API noncoh_status noncoh_rate_siso_training(noncoh_context *ctx, const noncoh_rate_scenario *s, double *out);
NONCOH_API noncoh_status noncoh_rate_parallel_training(noncoh_context *ctx, const noncoh_rate_scenario *s,
                                                       double *out);
NONCOH_API noncoh_status noncoh_rate_noncoherent(noncoh_context *ctx, const noncoh_rate_scenario *s,
                                                 noncoh_estimate *out);
NONCOH_API noncoh_status noncoh_compare_rates(noncoh_context *ctx, const noncoh_rate_scenario *s,
                                              noncoh_rate_report *out);
/* gamma is m*m row-major; snr linear. */
NONCOH_API noncoh_status noncoh_mi_lower_bound_gaussian(noncoh_context *ctx, int m, int t, double snr,
                                                        const double *gamma, noncoh_estimate *out);

/* Verification checks. */
NONCOH_API noncoh_status noncoh_check_fact1(noncoh_context *ctx, double a, double b, double mu,
                                            noncoh_check_result *out);
NONCOH_API noncoh_status noncoh_check_fact2(noncoh_context *ctx, double a, double b, int k,
                                            noncoh_check_result *out);
NONCOH_API noncoh_status noncoh_check_fact3(noncoh_context *ctx, double b, double mu, noncoh_check_result *out);
NONCOH_API noncoh_status noncoh_check_lemma1(noncoh_context *ctx, int n, double sigma_sq, noncoh_check_result *out);
NONCOH_API noncoh_status noncoh_check_lemma1_estimated(noncoh_context *ctx, int n, double sigma_sq,
                                                       noncoh_check_result *out);
/* Symmetric 2x2 channel; uses the context seed. */
NONCOH_API noncoh_status noncoh_check_lq_norm(noncoh_context *ctx, uint64_t n_draws, double gamma_d,
                                              double gamma_cl, int t, double snr, noncoh_check_result *out);
NONCOH_API noncoh_status noncoh_check_xi_oracle(noncoh_context *ctx, uint64_t n_draws, double gamma_d,
                                                double gamma_cl, int t, double snr, noncoh_check_result *out);
/* extra holds n_extra quadruples {k_re, k_im, l_re, l_im}. */
NONCOH_API noncoh_status noncoh_check_appendix_k(noncoh_context *ctx, double k_mag, double l_re, double l_im,
                                                 const double *extra, size_t n_extra, noncoh_check_result *out);
NONCOH_API noncoh_status noncoh_check_inner_outer(noncoh_context *ctx, double gamma_d, double gamma_cl, int t,
                                                  noncoh_check_result *out);

NONCOH_API noncoh_status noncoh_verify_all(noncoh_context *ctx, noncoh_check_list **out);
NONCOH_API size_t noncoh_check_list_size(const noncoh_check_list *list);
NONCOH_API noncoh_status noncoh_check_list_get(const noncoh_check_list *list, size_t i, noncoh_check_result *out);
NONCOH_API void noncoh_check_list_destroy(noncoh_check_list *list);

#ifdef __cplusplus
}
#endif

#endif
