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

#include "noncoh/rates.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "noncoh/error.hpp"
#include "noncoh/linalg.hpp"
#include "noncoh/special.hpp"

namespace noncoh {

namespace {

constexpr std::uint64_t kPowerCheckStream = 0x706f776572ULL;
constexpr std::uint64_t kPowerCheckDraws = 4096;
constexpr double kPowerTolerance = 1.02;

double log2_pi_e() { return std::log2(kPi * std::exp(1.0)); }

} // namespace

void RateScenario::validate() const
{
    if (!std::isfinite(snr_db))
        throw DomainError("RateScenario: snr_db must be finite");
    if (!(direct_gain > 0.0) || !std::isfinite(direct_gain))
        throw DomainError("RateScenario: direct_gain must be finite and > 0");
    if (!(cross_gain > 0.0) || !std::isfinite(cross_gain))
        throw DomainError("RateScenario: cross_gain must be finite and > 0");
    if (t < 1)
        throw DomainError("RateScenario: T must be >= 1");
}

double RateScenario::rho_direct_sq() const { return std::pow(10.0, snr_db / 10.0) * direct_gain; }
double RateScenario::rho_cross_sq() const { return std::pow(10.0, snr_db / 10.0) * cross_gain; }

NoncoherentInput noncoherent_input(const RateScenario &s)
{
    s.validate();
    NoncoherentInput in;
    in.c_sq = std::min(1.0 / s.rho_cross_sq(), 1.0);
    return in;
}

double rate_siso_training(const RateScenario &s)
{
    s.validate();
    const double rho = s.rho_direct_sq();
    const double n = rho / (1.0 + rho) + 1.0;
    const double m = rho * rho / (1.0 + rho);
    if (!(m > 0.0))
        return 0.0;
    return 0.5 * elog_one_plus_exponential(n / m) * kLog2E;
}

double rate_parallel_training(const RateScenario &s)
{
    s.validate();
    const double rd = s.rho_direct_sq();
    const double rc = s.rho_cross_sq();
    const double den = 1.0 + rd + rc;
    const double m = rd * rd / den;
    const double n = rd * (1.0 + rc) / den + 1.0 + rc;
    if (!(m > 0.0))
        return 0.0;
    return elog_one_plus_exponential(n / m) * kLog2E;
}

double noncoherent_power_check(const RateScenario &s, std::uint64_t seed)
{
    const NoncoherentInput in = noncoherent_input(s);
    Rng rng = Rng::substream(seed ^ kPowerCheckStream, 0);
    std::vector<ComplexMatrix> xs;
    xs.reserve(kPowerCheckDraws);
    for (std::uint64_t i = 0; i < kPowerCheckDraws; ++i) {
        ComplexMatrix l = ComplexMatrix::Zero(2, 2);
        l(0, 0) = std::sqrt(in.a_sq);
        l(1, 0) = sample_complex_gaussian(in.b_sq, rng);
        l(1, 1) = std::sqrt(in.c_sq);
        xs.push_back(l * sample_isotropic_unitary(2, rng));
    }
    const double p = power_check(xs);
    if (p > kPowerTolerance)
        throw ConfigError("noncoherent input violates the power constraint: empirical power " + std::to_string(p));
    return p;
}

MonteCarloEstimate rate_noncoherent_t2(const RateScenario &s, const McOptions &mc)
{
    s.validate();
    if (s.t != 2)
        throw DomainError("rate_noncoherent_t2: requires T = 2");
    if (mc.n_samples < 100000)
        throw DomainError("rate_noncoherent_t2: requires at least 1e5 samples");

    const NoncoherentInput in = noncoherent_input(s);
    const double r11 = s.rho_direct_sq(), r22 = r11;
    const double r12 = s.rho_cross_sq(), r21 = r12;
    const double a2 = in.a_sq, b2 = in.b_sq, c2 = in.c_sq;
    const double lpe = log2_pi_e();
    const double log2e = kLog2E;
    const double const_terms = std::log2(kPi * kPi) + std::log2(kPi * std::exp(1.0) * (c2 * r22 + 1.0)) + lpe -
                               4.0 * lpe;

    auto integrand = [=](SampleContext &ctx) {
        const double g11 = std::norm(sample_complex_gaussian(r11, ctx.rng));
        const double g12 = std::norm(sample_complex_gaussian(r12, ctx.rng));
        const double g22 = std::norm(sample_complex_gaussian(r22, ctx.rng));
        const double eta = std::norm(sample_complex_gaussian(b2, ctx.rng));

        const double lin = a2 * r11 + b2 * g12;
        const double term1 = std::log2(lin) + log2e;

        const double sum = a2 * g11 + (eta + c2) * g12;
        const double z = std::sqrt(a2 * eta * g12 * g11);
        const double disc = std::max(0.0, sum * sum - 4.0 * z * z);
        const double term2 = std::log2(0.5 * (sum + std::sqrt(disc)));

        const double det_k = a2 * a2 * r21 * r11 + a2 * b2 * (r21 * g12 + r11 * g22);
        const double term5 = std::log2(det_k) - std::log2(lin);

        const double row1 = a2 * r11 + eta * r12 + c2 * r12 + a2 * c2 * r11 * r12 + 1.0;
        const double row2 = a2 * r21 + eta * r22 + c2 * r22 + a2 * c2 * r21 * r22 + 1.0;
        const double term6 = std::log2(row1) + std::log2(row2);

        return 0.5 * (term1 + term2 + term5 - term6 + const_terms);
    };

    MonteCarloEstimate est = mc_expectation(integrand, mc);
    est.mean = std::max(0.0, est.mean);
    return est;
}

RateReport compare_rates(const RateScenario &s, const McOptions &mc)
{
    RateReport r;
    r.input_power = noncoherent_power_check(s, mc.seed);
    r.noncoherent = rate_noncoherent_t2(s, mc);
    r.siso_training = rate_siso_training(s);
    r.parallel_training = rate_parallel_training(s);
    r.gain = r.noncoherent.mean - std::max(r.siso_training, r.parallel_training);
    return r;
}

MonteCarloEstimate mi_lower_bound_gaussian(int m, int t, double snr, const LinkExponents &exponents,
                                           const McOptions &mc)
{
    if (m < 1)
        throw DomainError("mi_lower_bound_gaussian: M must be >= 1");
    if (t <= m)
        throw DomainError("mi_lower_bound_gaussian: requires T > M");
    if (exponents.n_rx() != static_cast<std::size_t>(m) || exponents.n_tx() != static_cast<std::size_t>(m))
        throw DomainError("mi_lower_bound_gaussian: exponents must be M x M");
    const ChannelConfig config{exponents, t, snr};
    config.validate();
    const Eigen::MatrixXd rho = link_strengths(config);
    const Eigen::MatrixXd rho_sqrt = rho.cwiseSqrt();
    const double inv_t = 1.0 / static_cast<double>(t);

    auto integrand = [=](SampleContext &ctx) {
        ComplexMatrix g(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                g(i, j) = sample_complex_gaussian(rho(i, j), ctx.rng);
        const ComplexMatrix x = sample_gaussian_matrix(m, t, 1.0, ctx.rng);
        const ComplexMatrix xx = x * x.adjoint();

        double cond = 0.0;
        for (int n = 0; n < m; ++n) {
            const Eigen::VectorXcd d = rho_sqrt.row(n).transpose().cast<std::complex<double>>();
            ComplexMatrix k = d.asDiagonal() * xx * d.asDiagonal();
            k += ComplexMatrix::Identity(m, m);
            cond += log2_abs_det(k);
        }
        return 2.0 * log2_abs_det(g) - inv_t * cond;
    };
    return mc_expectation(integrand, mc);
}

} // namespace noncoh
