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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <string>

#include "noncoh/noncoh.h"

using Catch::Matchers::WithinAbs;

namespace {

struct Ctx {
    noncoh_context *p = nullptr;
    Ctx() { REQUIRE(noncoh_context_create(&p) == NONCOH_OK); }
    ~Ctx() { noncoh_context_destroy(p); }
    operator noncoh_context *() { return p; }
};

} // namespace

TEST_CASE("version and status strings", "[capi]")
{
    CHECK(std::string(noncoh_version()) == "1.0.0");
    CHECK(std::string(noncoh_status_string(NONCOH_OK)) == "ok");
    CHECK(std::string(noncoh_status_string(NONCOH_ERR_DOMAIN)) == "domain error");
    CHECK(std::string(noncoh_status_string(static_cast<noncoh_status>(99))) == "unknown status");
}

TEST_CASE("context lifecycle and settings", "[capi]")
{
    CHECK(noncoh_context_create(nullptr) == NONCOH_ERR_INVALID_ARG);
    Ctx c;
    CHECK(noncoh_context_seed(c) == 1);
    CHECK(noncoh_context_samples(c) == 100000);
    CHECK(noncoh_context_set_seed(c, 42) == NONCOH_OK);
    CHECK(noncoh_context_seed(c) == 42);
    CHECK(noncoh_context_set_samples(c, 1) == NONCOH_ERR_DOMAIN);
    CHECK(noncoh_context_set_samples(c, 5000) == NONCOH_OK);
    CHECK(noncoh_context_set_threads(c, 2) == NONCOH_OK);
    CHECK(noncoh_context_set_seed(nullptr, 1) == NONCOH_ERR_INVALID_ARG);
    CHECK(std::string(noncoh_last_error(nullptr)).empty());
    noncoh_context_destroy(nullptr);
}

TEST_CASE("errors map to status codes with messages", "[capi]")
{
    Ctx c;
    double v = 0.0;
    CHECK(noncoh_exp_e1(c, -1.0, &v) == NONCOH_ERR_DOMAIN);
    CHECK(std::string(noncoh_last_error(c)).find("exp_e1") != std::string::npos);
    CHECK(noncoh_exp_e1(c, 1.0, &v) == NONCOH_OK);
    CHECK(std::string(noncoh_last_error(c)).empty());
    CHECK(noncoh_exp_e1(c, 1.0, nullptr) == NONCOH_ERR_INVALID_ARG);
    CHECK(noncoh_exp_e1(nullptr, 1.0, &v) == NONCOH_ERR_INVALID_ARG);
    CHECK(noncoh_gdof_gausscode(c, 2, 1.0, 0.5, 2, &v) == NONCOH_ERR_DOMAIN);
    CHECK(noncoh_gdof_parallel(c, nullptr, 0, 2, &v) == NONCOH_ERR_DOMAIN);
    CHECK(noncoh_gdof_parallel(c, nullptr, 2, 2, &v) == NONCOH_ERR_INVALID_ARG);
}

TEST_CASE("special functions through the C interface", "[capi]")
{
    Ctx c;
    double v = 0.0;
    REQUIRE(noncoh_exp_e1(c, 1.0, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(0.5963473624, 1e-9));
    REQUIRE(noncoh_log_gamma(c, 5.0, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(std::log(24.0), 1e-12));
    REQUIRE(noncoh_digamma(c, 1.0, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(-0.5772156649, 1e-10));
}

TEST_CASE("gDoF through the C interface", "[capi]")
{
    Ctx c;
    double v = 0.0;
    const double g[] = {1.0, 0.5};
    REQUIRE(noncoh_gdof_siso(c, 1.0, 2, &v) == NONCOH_OK);
    CHECK(v == 0.5);
    REQUIRE(noncoh_gdof_parallel(c, g, 2, 2, &v) == NONCOH_OK);
    CHECK(v == 0.75);
    REQUIRE(noncoh_gdof_simo(c, g, 2, 1, &v) == NONCOH_OK);
    CHECK(v == 0.0);
    REQUIRE(noncoh_gdof_miso(c, g, 2, 2, &v) == NONCOH_OK);
    CHECK(v == 0.5);
    REQUIRE(noncoh_gdof_sym2x2(c, 1.0, 0.5, 2, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(0.75, 1e-15));
    REQUIRE(noncoh_gdof_gausscode(c, 2, 1.0, 0.5, 4, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(1.25, 1e-15));
    REQUIRE(noncoh_gdof_training(c, 2, 1.0, 4, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(1.0, 1e-15));

    const double sym[] = {1.0, 0.5, 0.5, 1.0};
    REQUIRE(noncoh_gdof_f_gamma(c, 0, 0, 0.5, sym, 2, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(1.5, 1e-12));
    REQUIRE(noncoh_gdof_inner2x2(c, 0, 0, 0.5, sym, 2, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(0.75, 1e-12));

    noncoh_gdof_solution s{};
    REQUIRE(noncoh_gdof_p9(c, 1.0, 0.5, 4, &s) == NONCOH_OK);
    CHECK_THAT(s.per_symbol, WithinAbs(1.25, 1e-12));
    CHECK(s.gamma_a == 0.0);
    CHECK(s.gamma_b == 0.0);
    CHECK(s.gamma_c == 0.0);
    REQUIRE(noncoh_gdof_p8_grid(c, sym, 4, 17, 100, &s) == NONCOH_OK);
    CHECK_THAT(s.per_symbol, WithinAbs(1.25, 1e-6));
    CHECK(noncoh_gdof_p8_grid(c, nullptr, 4, 17, 100, &s) == NONCOH_ERR_INVALID_ARG);
}

TEST_CASE("rates through the C interface", "[capi]")
{
    Ctx c;
    noncoh_context_set_samples(c, 200000);
    noncoh_context_set_seed(c, 3);
    const noncoh_rate_scenario s{23.0, 0.1, 0.025, 2};
    double v = 0.0;
    REQUIRE(noncoh_rate_siso_training(c, &s, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(1.438, 0.002));
    REQUIRE(noncoh_rate_parallel_training(c, &s, &v) == NONCOH_OK);
    CHECK_THAT(v, WithinAbs(1.095, 0.005));
    noncoh_rate_report r{};
    REQUIRE(noncoh_compare_rates(c, &s, &r) == NONCOH_OK);
    CHECK_THAT(r.noncoherent.mean, WithinAbs(1.536, 0.02));
    CHECK(r.noncoherent.seed == 3);
    CHECK(r.noncoherent.n_samples == 200000);
    CHECK_THAT(r.gain, WithinAbs(r.noncoherent.mean - r.siso_training, 1e-12));

    noncoh_estimate e{};
    const noncoh_rate_scenario t3{23.0, 0.1, 0.025, 3};
    CHECK(noncoh_rate_noncoherent(c, &t3, &e) == NONCOH_ERR_DOMAIN);
    CHECK(noncoh_rate_noncoherent(c, nullptr, &e) == NONCOH_ERR_INVALID_ARG);

    const double g[] = {1.0, 0.5, 0.5, 1.0};
    REQUIRE(noncoh_mi_lower_bound_gaussian(c, 2, 4, 1.0, g, &e) == NONCOH_OK);
    CHECK(std::isfinite(e.mean));
    CHECK(noncoh_mi_lower_bound_gaussian(c, 2, 2, 1.0, g, &e) == NONCOH_ERR_DOMAIN);
}

TEST_CASE("Monte Carlo results do not depend on the thread count", "[capi]")
{
    Ctx a, b;
    for (noncoh_context *c : {a.p, b.p}) {
        noncoh_context_set_samples(c, 100000);
        noncoh_context_set_seed(c, 77);
    }
    noncoh_context_set_threads(a, 1);
    noncoh_context_set_threads(b, 8);
    const noncoh_rate_scenario s{22.0, 0.1, 0.025, 2};
    noncoh_estimate ea{}, eb{};
    REQUIRE(noncoh_rate_noncoherent(a, &s, &ea) == NONCOH_OK);
    REQUIRE(noncoh_rate_noncoherent(b, &s, &eb) == NONCOH_OK);
    CHECK(std::memcmp(&ea, &eb, sizeof ea) == 0);
}

TEST_CASE("verification checks through the C interface", "[capi]")
{
    Ctx c;
    noncoh_check_result r{};
    REQUIRE(noncoh_check_fact3(c, 1.0, 1.0, &r) == NONCOH_OK);
    CHECK(r.passed == 1);
    CHECK(std::string(r.name) == "fact3_recip_exponential");
    CHECK(r.kind == NONCOH_CHECK_EQUALITY);
    REQUIRE(noncoh_check_fact1(c, 0, 1, 1, &r) == NONCOH_OK);
    CHECK(r.passed == 1);
    REQUIRE(noncoh_check_fact2(c, 0, 1, 2, &r) == NONCOH_OK);
    CHECK(r.passed == 1);
    REQUIRE(noncoh_check_lemma1(c, 4, 2.0, &r) == NONCOH_OK);
    CHECK(r.slack < 1e-9);
    REQUIRE(noncoh_check_lemma1_estimated(c, 2, 1.0, &r) == NONCOH_OK);
    CHECK(r.passed == 1);
    REQUIRE(noncoh_check_lq_norm(c, 1000, 1.0, 0.5, 2, 10.0, &r) == NONCOH_OK);
    CHECK(r.passed == 1);
    REQUIRE(noncoh_check_xi_oracle(c, 1000, 1.0, 0.5, 3, 10.0, &r) == NONCOH_OK);
    CHECK(r.passed == 1);
    const double extra[] = {-1.0, 0.0, -3.0, -4.0};
    REQUIRE(noncoh_check_appendix_k(c, 1.0, 3.0, 4.0, extra, 1, &r) == NONCOH_OK);
    CHECK(r.passed == 1);
    CHECK(noncoh_check_appendix_k(c, 1.0, 3.0, 4.0, nullptr, 1, &r) == NONCOH_ERR_INVALID_ARG);
    REQUIRE(noncoh_check_inner_outer(c, 1.0, 0.5, 5, &r) == NONCOH_OK);
    CHECK_THAT(r.lhs, WithinAbs(1.4, 1e-12));
    CHECK(noncoh_check_inner_outer(c, 1.0, 0.5, 1, &r) == NONCOH_ERR_DOMAIN);
}

TEST_CASE("verify_all list handle", "[capi]")
{
    Ctx c;
    noncoh_check_list *list = nullptr;
    REQUIRE(noncoh_verify_all(c, &list) == NONCOH_OK);
    REQUIRE(list != nullptr);
    const size_t n = noncoh_check_list_size(list);
    CHECK(n >= 40);
    noncoh_check_result r{};
    for (size_t i = 0; i < n; ++i) {
        REQUIRE(noncoh_check_list_get(list, i, &r) == NONCOH_OK);
        INFO(r.name << " " << r.params);
        CHECK(r.passed == 1);
    }
    CHECK(noncoh_check_list_get(list, n, &r) == NONCOH_ERR_INVALID_ARG);
    CHECK(noncoh_check_list_size(nullptr) == 0);
    noncoh_check_list_destroy(list);
    noncoh_check_list_destroy(nullptr);
}
