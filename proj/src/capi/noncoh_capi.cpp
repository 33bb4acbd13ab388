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

#include "noncoh/noncoh.h"

#include <cstring>
#include <memory>
#include <new>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "noncoh/error.hpp"
#include "noncoh/gdof.hpp"
#include "noncoh/rates.hpp"
#include "noncoh/special.hpp"
#include "noncoh/verify.hpp"

struct noncoh_context {
    noncoh::McOptions mc;
    std::string last_error;
};

struct noncoh_check_list {
    std::vector<noncoh_check_result> items;
};

namespace {

template <class F>
noncoh_status guarded(noncoh_context *ctx, F &&body)
{
    if (!ctx)
        return NONCOH_ERR_INVALID_ARG;
    ctx->last_error.clear();
    try {
        body();
        return NONCOH_OK;
    } catch (const noncoh::DomainError &e) {
        ctx->last_error = e.what();
        return NONCOH_ERR_DOMAIN;
    } catch (const noncoh::SingularityError &e) {
        ctx->last_error = e.what();
        return NONCOH_ERR_SINGULAR;
    } catch (const noncoh::EstimationError &e) {
        ctx->last_error = e.what();
        return NONCOH_ERR_ESTIMATION;
    } catch (const noncoh::ConfigError &e) {
        ctx->last_error = e.what();
        return NONCOH_ERR_CONFIG;
    } catch (const std::invalid_argument &e) {
        ctx->last_error = e.what();
        return NONCOH_ERR_INVALID_ARG;
    } catch (const std::bad_alloc &) {
        ctx->last_error = "out of memory";
        return NONCOH_ERR_INTERNAL;
    } catch (const std::exception &e) {
        ctx->last_error = e.what();
        return NONCOH_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown error";
        return NONCOH_ERR_INTERNAL;
    }
}

void need(const void *p, const char *what)
{
    if (!p)
        throw std::invalid_argument(std::string(what) + " is null");
}

noncoh_estimate to_c(const noncoh::MonteCarloEstimate &e)
{
    return {e.mean, e.std_error, e.n_samples, e.seed, e.n_nonfinite, e.n_resampled};
}

noncoh_gdof_solution to_c(const noncoh::GdofSolution &s)
{
    return {s.gamma_a, s.gamma_b, s.gamma_c, s.per_block, s.per_symbol};
}

noncoh_check_result to_c(const noncoh::BoundCheckResult &r)
{
    noncoh_check_result out{};
    std::strncpy(out.name, r.name.c_str(), sizeof(out.name) - 1);
    std::strncpy(out.params, r.params.c_str(), sizeof(out.params) - 1);
    out.kind = r.kind == noncoh::CheckKind::Equality ? NONCOH_CHECK_EQUALITY : NONCOH_CHECK_SANDWICH;
    out.lhs = r.lhs;
    out.rhs_lower = r.rhs_lower;
    out.rhs_upper = r.rhs_upper;
    out.std_error = r.std_error;
    out.slack = r.slack;
    out.tolerance = r.tolerance;
    out.passed = r.passed ? 1 : 0;
    return out;
}

noncoh::RateScenario from_c(const noncoh_rate_scenario &s) { return {s.snr_db, s.direct_gain, s.cross_gain, s.t}; }

noncoh::LinkExponents exps2x2(const double *g)
{
    need(g, "gamma4");
    return noncoh::LinkExponents::two_by_two(g[0], g[1], g[2], g[3]);
}

noncoh::ChannelConfig sym_config(double gd, double gcl, int t, double snr)
{
    return {noncoh::LinkExponents::symmetric(2, gd, gcl), t, snr};
}

} // namespace

#define NONCOH_TRY(ctx, ...)                                                                                               do {                                                                                                                       if (!(ctx))                                                                                                                return NONCOH_ERR_INVALID_ARG;                                                                                     try {                                                                                                                      return guarded(ctx, [&] { __VA_ARGS__; });                                                                         } catch (...) {                                                                                                            return NONCOH_ERR_INTERNAL;                                                                                        }                                                                                                                  } while (0)

extern "C" {

const char *noncoh_version(void) { return NONCOH_VERSION_STRING; }

const char *noncoh_status_string(noncoh_status status)
{
    switch (status) {
    case NONCOH_OK:
        return "ok";
    case NONCOH_ERR_DOMAIN:
        return "domain error";
    case NONCOH_ERR_SINGULAR:
        return "singular matrix";
    case NONCOH_ERR_ESTIMATION:
        return "estimation error";
    case NONCOH_ERR_CONFIG:
        return "configuration error";
    case NONCOH_ERR_INVALID_ARG:
        return "invalid argument";
    case NONCOH_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

noncoh_status noncoh_context_create(noncoh_context **out)
{
    if (!out)
        return NONCOH_ERR_INVALID_ARG;
    *out = new (std::nothrow) noncoh_context{};
    return *out ? NONCOH_OK : NONCOH_ERR_INTERNAL;
}

void noncoh_context_destroy(noncoh_context *ctx) { delete ctx; }

noncoh_status noncoh_context_set_seed(noncoh_context *ctx, uint64_t seed)
{
    if (!ctx)
        return NONCOH_ERR_INVALID_ARG;
    ctx->mc.seed = seed;
    return NONCOH_OK;
}

noncoh_status noncoh_context_set_samples(noncoh_context *ctx, uint64_t n_samples)
{
    if (!ctx)
        return NONCOH_ERR_INVALID_ARG;
    if (n_samples < 2) {
        ctx->last_error = "sample count must be >= 2";
        return NONCOH_ERR_DOMAIN;
    }
    ctx->mc.n_samples = n_samples;
    return NONCOH_OK;
}

noncoh_status noncoh_context_set_threads(noncoh_context *ctx, unsigned threads)
{
    if (!ctx)
        return NONCOH_ERR_INVALID_ARG;
    ctx->mc.threads = threads;
    return NONCOH_OK;
}

uint64_t noncoh_context_seed(const noncoh_context *ctx) { return ctx ? ctx->mc.seed : 0; }
uint64_t noncoh_context_samples(const noncoh_context *ctx) { return ctx ? ctx->mc.n_samples : 0; }

const char *noncoh_last_error(const noncoh_context *ctx) { return ctx ? ctx->last_error.c_str() : ""; }

noncoh_status noncoh_exp_e1(noncoh_context *ctx, double x, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::exp_e1(x));
}

noncoh_status noncoh_log_gamma(noncoh_context *ctx, double x, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::log_gamma(x));
}

noncoh_status noncoh_digamma(noncoh_context *ctx, double x, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::digamma(x));
}

noncoh_status noncoh_gdof_siso(noncoh_context *ctx, double gamma, int t, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::gdof_siso(gamma, t));
}

noncoh_status noncoh_gdof_parallel(noncoh_context *ctx, const double *gammas, size_t n, int t, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); if (n) need(gammas, "gammas");
               *out = noncoh::gdof_parallel(std::span<const double>(gammas, n), t));
}

noncoh_status noncoh_gdof_simo(noncoh_context *ctx, const double *gammas, size_t n, int t, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); if (n) need(gammas, "gammas");
               *out = noncoh::gdof_simo(std::span<const double>(gammas, n), t));
}

noncoh_status noncoh_gdof_miso(noncoh_context *ctx, const double *gammas, size_t n, int t, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); if (n) need(gammas, "gammas");
               *out = noncoh::gdof_miso(std::span<const double>(gammas, n), t));
}

noncoh_status noncoh_gdof_sym2x2(noncoh_context *ctx, double gamma_d, double gamma_cl, int t, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::gdof_2x2_sym(gamma_d, gamma_cl, t));
}

noncoh_status noncoh_gdof_f_gamma(noncoh_context *ctx, double ga, double gb, double gc, const double gamma4[4], int t,
                                  double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::f_gamma(ga, gb, gc, exps2x2(gamma4), t));
}

noncoh_status noncoh_gdof_inner2x2(noncoh_context *ctx, double ga, double gb, double gc, const double gamma4[4], int t,
                                   double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::gdof_2x2_inner(ga, gb, gc, exps2x2(gamma4), t));
}

noncoh_status noncoh_gdof_p9(noncoh_context *ctx, double gamma_d, double gamma_cl, int t, noncoh_gdof_solution *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = to_c(noncoh::solve_p9_corners(gamma_d, gamma_cl, t)));
}

noncoh_status noncoh_gdof_p8_grid(noncoh_context *ctx, const double gamma4[4], int t, int grid_points,
                                  int refine_iters, noncoh_gdof_solution *out)
{
    NONCOH_TRY(ctx, need(out, "out");
               *out = to_c(noncoh::solve_p8_grid(exps2x2(gamma4), t, grid_points, refine_iters)));
}

noncoh_status noncoh_gdof_gausscode(noncoh_context *ctx, int m, double gamma_d, double gamma_cl, int t, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::gdof_gaussian_codebook(m, gamma_d, gamma_cl, t));
}

noncoh_status noncoh_gdof_training(noncoh_context *ctx, int m, double gamma_d, int t, double *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = noncoh::gdof_training(m, gamma_d, t));
}

noncoh_status noncoh_rate_siso_training(noncoh_context *ctx, const noncoh_rate_scenario *s, double *out)
{
    NONCOH_TRY(ctx, need(s, "scenario"); need(out, "out"); *out = noncoh::rate_siso_training(from_c(*s)));
}

noncoh_status noncoh_rate_parallel_training(noncoh_context *ctx, const noncoh_rate_scenario *s, double *out)
{
    NONCOH_TRY(ctx, need(s, "scenario"); need(out, "out"); *out = noncoh::rate_parallel_training(from_c(*s)));
}

noncoh_status noncoh_rate_noncoherent(noncoh_context *ctx, const noncoh_rate_scenario *s, noncoh_estimate *out)
{
    NONCOH_TRY(ctx, need(s, "scenario"); need(out, "out");
               *out = to_c(noncoh::rate_noncoherent_t2(from_c(*s), ctx->mc)));
}

noncoh_status noncoh_compare_rates(noncoh_context *ctx, const noncoh_rate_scenario *s, noncoh_rate_report *out)
{
    NONCOH_TRY(ctx, need(s, "scenario"); need(out, "out"); const auto r = noncoh::compare_rates(from_c(*s), ctx->mc);
               *out = {to_c(r.noncoherent), r.siso_training, r.parallel_training, r.gain, r.input_power});
}

noncoh_status noncoh_mi_lower_bound_gaussian(noncoh_context *ctx, int m, int t, double snr, const double *gamma,
                                             noncoh_estimate *out)
{
    NONCOH_TRY(ctx, need(gamma, "gamma"); need(out, "out"); if (m < 1) throw noncoh::DomainError("M must be >= 1");
               const auto mm = static_cast<std::size_t>(m);
               noncoh::LinkExponents e(mm, mm, std::vector<double>(gamma, gamma + mm * mm));
               *out = to_c(noncoh::mi_lower_bound_gaussian(m, t, snr, e, ctx->mc)));
}

noncoh_status noncoh_check_fact1(noncoh_context *ctx, double a, double b, double mu, noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = to_c(noncoh::check_fact_jensen_gap(a, b, mu, ctx->mc)));
}

noncoh_status noncoh_check_fact2(noncoh_context *ctx, double a, double b, int k, noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = to_c(noncoh::check_fact_chi_squared(a, b, k, ctx->mc)));
}

noncoh_status noncoh_check_fact3(noncoh_context *ctx, double b, double mu, noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = to_c(noncoh::check_fact_recip_exponential(b, mu, ctx->mc)));
}

noncoh_status noncoh_check_lemma1(noncoh_context *ctx, int n, double sigma_sq, noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = to_c(noncoh::check_lemma_isotropic_radial(n, sigma_sq)));
}

noncoh_status noncoh_check_lemma1_estimated(noncoh_context *ctx, int n, double sigma_sq, noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out");
               *out = to_c(noncoh::check_lemma_isotropic_radial_estimated(n, sigma_sq, ctx->mc)));
}

noncoh_status noncoh_check_lq_norm(noncoh_context *ctx, uint64_t n_draws, double gamma_d, double gamma_cl, int t,
                                   double snr, noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out");
               *out = to_c(noncoh::check_lq_norm_preservation(n_draws, sym_config(gamma_d, gamma_cl, t, snr),
                                                              ctx->mc.seed)));
}

noncoh_status noncoh_check_xi_oracle(noncoh_context *ctx, uint64_t n_draws, double gamma_d, double gamma_cl, int t,
                                     double snr, noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out");
               *out = to_c(noncoh::check_xi_oracle(n_draws, sym_config(gamma_d, gamma_cl, t, snr), ctx->mc.seed)));
}

noncoh_status noncoh_check_appendix_k(noncoh_context *ctx, double k_mag, double l_re, double l_im,
                                      const double *extra, size_t n_extra, noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out"); if (n_extra) need(extra, "extra");
               std::vector<noncoh::AppendixKTerm> terms;
               for (size_t i = 0; i < n_extra; ++i) terms.push_back(
                   {{extra[4 * i], extra[4 * i + 1]}, {extra[4 * i + 2], extra[4 * i + 3]}});
               *out = to_c(noncoh::check_appendix_k_floor(k_mag, {l_re, l_im}, terms, ctx->mc)));
}

noncoh_status noncoh_check_inner_outer(noncoh_context *ctx, double gamma_d, double gamma_cl, int t,
                                       noncoh_check_result *out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = to_c(noncoh::check_inner_outer_match(gamma_d, gamma_cl, t)));
}

noncoh_status noncoh_verify_all(noncoh_context *ctx, noncoh_check_list **out)
{
    NONCOH_TRY(ctx, need(out, "out"); *out = nullptr; auto list = std::make_unique<noncoh_check_list>();
               for (const auto &r : noncoh::verify_all(ctx->mc)) list->items.push_back(to_c(r));
               *out = list.release());
}

size_t noncoh_check_list_size(const noncoh_check_list *list) { return list ? list->items.size() : 0; }

noncoh_status noncoh_check_list_get(const noncoh_check_list *list, size_t i, noncoh_check_result *out)
{
    if (!list || !out || i >= list->items.size())
        return NONCOH_ERR_INVALID_ARG;
    *out = list->items[i];
    return NONCOH_OK;
}

void noncoh_check_list_destroy(noncoh_check_list *list) { delete list; }

} // extern "C"
