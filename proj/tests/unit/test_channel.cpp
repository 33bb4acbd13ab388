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
#include <complex>
#include <vector>

#include "noncoh/channel.hpp"
#include "noncoh/error.hpp"

using namespace noncoh;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using C = std::complex<double>;

TEST_CASE("LinkExponents construction", "[channel]")
{
    const auto s = LinkExponents::symmetric(2, 0.5, 1.0);
    CHECK(s(0, 0) == 1.0);
    CHECK(s(0, 1) == 0.5);
    CHECK(s.max() == 1.0);
    const auto t = LinkExponents::two_by_two(1, 2, 3, 4);
    CHECK(t(1, 0) == 3.0);
    CHECK_THROWS_AS(LinkExponents(2, 2, {1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(LinkExponents(0, 2, {}), DomainError);
    CHECK_THROWS_AS(LinkExponents::two_by_two(1, NAN, 0, 1), DomainError);
}

TEST_CASE("link_strengths", "[channel]")
{
    const ChannelConfig unit{LinkExponents::two_by_two(0.3, 1.7, -2, 5), 2, 1.0};
    CHECK(link_strengths(unit).isOnes());

    const ChannelConfig p{LinkExponents::symmetric(1, 0.5, 0.5), 2, 100.0};
    CHECK_THAT(link_strengths(p)(0, 0), WithinRel(10.0, 1e-14));

    const ChannelConfig s{LinkExponents::symmetric(2, 1.0, 0.5), 2, 10.0};
    const auto rho = link_strengths(s);
    CHECK_THAT(rho(0, 0), WithinRel(10.0, 1e-14));
    CHECK_THAT(rho(1, 1), WithinRel(10.0, 1e-14));
    CHECK_THAT(rho(0, 1), WithinRel(std::sqrt(10.0), 1e-14));
    CHECK_THAT(rho(1, 0), WithinRel(std::sqrt(10.0), 1e-14));
}

TEST_CASE("ChannelConfig validation", "[channel]")
{
    CHECK_THROWS_AS((ChannelConfig{LinkExponents::symmetric(2, 1, 0), 0, 10.0}.validate()), DomainError);
    CHECK_THROWS_AS((ChannelConfig{LinkExponents::symmetric(2, 1, 0), 2, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((ChannelConfig{LinkExponents::symmetric(2, 1e6, 0), 2, 1e10}.validate()), DomainError);
}

TEST_CASE("sample_channel statistics", "[channel]")
{
    const ChannelConfig cfg{LinkExponents::symmetric(2, 1.0, 0.5), 2, 10.0};
    Rng rng(12);
    const int n = 1000000;
    double p11 = 0.0, w = 0.0;
    C cross{};
    for (int i = 0; i < n; ++i) {
        const auto d = sample_channel(cfg, rng);
        p11 += std::norm(d.g(0, 0));
        cross += d.g(0, 0) * std::conj(d.g(1, 1));
        w += std::norm(d.w(0, 1));
    }
    CHECK_THAT(p11 / n, WithinAbs(10.0, 0.03));
    CHECK(std::abs(cross / static_cast<double>(n)) <= 3.0 * 10.0 / std::sqrt(static_cast<double>(n)));
    CHECK_THAT(w / n, WithinAbs(1.0, 0.003));
}

TEST_CASE("xi_stats on orthonormal noise rows", "[channel]")
{
    ChannelDraw d;
    d.g = ComplexMatrix::Zero(2, 2);
    d.w = ComplexMatrix::Identity(2, 2);
    const auto s = xi_stats(0.0, 0.0, 0.0, d);
    CHECK(s.xi11_sq == 1.0);
    CHECK(s.xi21_sq == 0.0);
    CHECK(s.xi22_sq == 1.0);
}

TEST_CASE("xi_stats with parallel rows", "[channel]")
{
    ChannelDraw d;
    d.g = ComplexMatrix::Zero(2, 2);
    d.w = ComplexMatrix(2, 3);
    d.w << C(1, 2), C(0, 1), 3.0, C(2, 4), C(0, 2), 6.0;
    const auto s = xi_stats(0.0, 0.0, 0.0, d);
    CHECK_THAT(s.xi22_sq, WithinAbs(0.0, 1e-12 * s.xi21_sq));
}

TEST_CASE("xi_stats requires a nonvanishing first row", "[channel]")
{
    ChannelDraw d;
    d.g = ComplexMatrix::Zero(2, 2);
    d.w = ComplexMatrix::Zero(2, 2);
    d.w(1, 1) = 1.0;
    CHECK_THROWS_AS(xi_stats(1.0, 1.0, 1.0, d), SingularityError);
    d.w = ComplexMatrix::Zero(2, 1);
    CHECK_THROWS_AS(xi_stats(1.0, 1.0, 1.0, d), DomainError);
}

TEST_CASE("xi_stats agrees with Gram-Schmidt over a grid of inputs", "[channel][property]")
{
    const double levels[] = {0.0, 0.7, 3.0};
    Rng rng(77);
    double worst = 0.0;
    for (int t : {2, 3, 5}) {
        const ChannelConfig cfg{LinkExponents::symmetric(2, 1.0, 0.4), t, 30.0};
        for (double a : levels)
            for (double b : levels)
                for (double c : levels)
                    for (int i = 0; i < 1000; ++i) {
                        const auto d = sample_channel(cfg, rng);
                        const C ac = a * std::polar(1.0, 0.3 * i), bc = b * C(0, 1), cc = c;
                        const ComplexMatrix m = pre_lq_matrix(ac, bc, cc, d);
                        const auto f = lq_decompose(m);
                        const auto s = xi_stats(ac, bc, cc, d);
                        const double n1 = m.row(0).squaredNorm(), n2 = m.row(1).squaredNorm();
                        worst = std::max({worst, std::abs(s.xi11_sq - std::norm(f.l(0, 0))) / n1,
                                          std::abs(s.xi21_sq - std::norm(f.l(1, 0))) / n2,
                                          std::abs(s.xi22_sq - std::norm(f.l(1, 1))) / n2,
                                          std::abs(s.xi21_sq + s.xi22_sq - n2) / n2});
                    }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("pre_lq_matrix layout", "[channel]")
{
    ChannelDraw d;
    d.g = ComplexMatrix(2, 2);
    d.g << 1.0, 2.0, 3.0, 4.0;
    d.w = ComplexMatrix::Zero(2, 3);
    d.w(0, 2) = 9.0;
    const auto m = pre_lq_matrix(10.0, 100.0, 1000.0, d);
    CHECK(m(0, 0) == C(10 + 200, 0));
    CHECK(m(0, 1) == C(2000, 0));
    CHECK(m(1, 0) == C(30 + 400, 0));
    CHECK(m(1, 1) == C(4000, 0));
    CHECK(m(0, 2) == C(9, 0));
}

TEST_CASE("E|xi11|^2 is T with no signal", "[channel]")
{
    const ChannelConfig cfg{LinkExponents::symmetric(2, 1.0, 0.5), 4, 10.0};
    McOptions mc;
    mc.n_samples = 200000;
    mc.seed = 5;
    const auto est = mc_expectation([&](SampleContext &ctx) { return sample_xi_stats(0.0, 0.0, 0.0, cfg, ctx).xi11_sq; },
                                    mc);
    CHECK(std::abs(est.mean - 4.0) <= 3.0 * est.std_error);
    CHECK(est.n_resampled == 0);
}

TEST_CASE("power_check", "[channel]")
{
    std::vector<ComplexMatrix> zeros(3, ComplexMatrix::Zero(2, 2));
    CHECK(power_check(zeros) == 0.0);
    CHECK_THROWS_AS(power_check(std::vector<ComplexMatrix>{}), DomainError);

    Rng rng(9);
    std::vector<ComplexMatrix> iid;
    for (int i = 0; i < 20000; ++i)
        iid.push_back(sample_gaussian_matrix(2, 2, 1.0, rng));
    CHECK_THAT(power_check(iid), WithinAbs(1.0, 0.02));

    // X = [[a, 0], [eta, c]] Q with deterministic eta: power is exact.
    const double rho12 = 5.0;
    std::vector<ComplexMatrix> thm;
    for (int i = 0; i < 100; ++i) {
        ComplexMatrix l = ComplexMatrix::Zero(2, 2);
        l(0, 0) = std::sqrt(2.0);
        l(1, 0) = 1.0;
        l(1, 1) = std::sqrt(1.0 / rho12);
        thm.push_back(l * sample_isotropic_unitary(2, rng));
    }
    CHECK_THAT(power_check(thm), WithinAbs((2.0 + 1.0 + 1.0 / rho12) / 4.0, 1e-12));
}
