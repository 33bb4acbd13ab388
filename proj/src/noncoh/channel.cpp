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

#include "noncoh/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "noncoh/error.hpp"

namespace noncoh {

LinkExponents::LinkExponents(std::size_t n_rx, std::size_t n_tx, std::vector<double> gamma)
    : n_rx_(n_rx), n_tx_(n_tx), gamma_(std::move(gamma))
{
    if (n_rx_ < 1 || n_tx_ < 1)
        throw DomainError("LinkExponents: antenna counts must be >= 1");
    if (gamma_.size() != n_rx_ * n_tx_)
        throw DomainError("LinkExponents: expected " + std::to_string(n_rx_ * n_tx_) + " exponents, got " +
                          std::to_string(gamma_.size()));
    for (double g : gamma_)
        if (!std::isfinite(g))
            throw DomainError("LinkExponents: exponents must be finite");
}

LinkExponents LinkExponents::symmetric(std::size_t m, double gamma_d, double gamma_cl)
{
    if (gamma_d < gamma_cl)
        std::swap(gamma_d, gamma_cl);
    std::vector<double> g(m * m, gamma_cl);
    for (std::size_t i = 0; i < m; ++i)
        g[i * m + i] = gamma_d;
    return LinkExponents(m, m, std::move(g));
}

LinkExponents LinkExponents::two_by_two(double g11, double g12, double g21, double g22)
{
    return LinkExponents(2, 2, {g11, g12, g21, g22});
}

double LinkExponents::max() const { return *std::max_element(gamma_.begin(), gamma_.end()); }

LinkExponents LinkExponents::scaled(double lambda) const
{
    std::vector<double> g = gamma_;
    for (auto &x : g)
        x *= lambda;
    return LinkExponents(n_rx_, n_tx_, std::move(g));
}

void ChannelConfig::validate() const
{
    if (t < 1)
        throw DomainError("ChannelConfig: coherence time T must be >= 1");
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw DomainError("ChannelConfig: snr must be finite and > 0");
    const Eigen::MatrixXd rho = link_strengths(*this);
    if (!rho.allFinite() || (rho.array() <= 0.0).any())
        throw DomainError("ChannelConfig: link strengths snr^gamma must be finite and positive");
}

Eigen::MatrixXd link_strengths(const ChannelConfig &config)
{
    const auto &e = config.exponents;
    Eigen::MatrixXd rho(e.n_rx(), e.n_tx());
    for (std::size_t i = 0; i < e.n_rx(); ++i)
        for (std::size_t j = 0; j < e.n_tx(); ++j)
            rho(i, j) = std::pow(config.snr, e(i, j));
    return rho;
}

ChannelDraw sample_channel(const ChannelConfig &config, Rng &rng)
{
    const Eigen::MatrixXd rho = link_strengths(config);
    ChannelDraw d;
    d.g.resize(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index j = 0; j < rho.cols(); ++j)
            d.g(i, j) = sample_complex_gaussian(rho(i, j), rng);
    d.w = sample_gaussian_matrix(static_cast<int>(rho.rows()), config.t, 1.0, rng);
    return d;
}

ComplexMatrix pre_lq_matrix(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                            const ChannelDraw &draw)
{
    if (draw.g.rows() != 2 || draw.g.cols() != 2)
        throw DomainError("pre_lq_matrix: requires a 2x2 channel");
    if (draw.w.rows() != 2 || draw.w.cols() < 2)
        throw DomainError("pre_lq_matrix: requires T >= 2");
    ComplexMatrix m = draw.w;
    m(0, 0) += a * draw.g(0, 0) + b * draw.g(0, 1);
    m(0, 1) += c * draw.g(0, 1);
    m(1, 0) += a * draw.g(1, 0) + b * draw.g(1, 1);
    m(1, 1) += c * draw.g(1, 1);
    return m;
}

XiStats xi_stats(std::complex<double> a, std::complex<double> b, std::complex<double> c, const ChannelDraw &draw)
{
    if (draw.g.rows() != 2 || draw.g.cols() != 2)
        throw DomainError("xi_stats: requires a 2x2 channel");
    if (draw.w.rows() != 2 || draw.w.cols() < 2)
        throw DomainError("xi_stats: requires T >= 2");

    const auto &g = draw.g;
    const auto &w = draw.w;
    const std::complex<double> u1 = a * g(0, 0) + b * g(0, 1) + w(0, 0);
    const std::complex<double> u2 = c * g(0, 1) + w(0, 1);
    const std::complex<double> v1 = a * g(1, 0) + b * g(1, 1) + w(1, 0);
    const std::complex<double> v2 = c * g(1, 1) + w(1, 1);

    double row1 = std::norm(u1) + std::norm(u2);
    double row2 = std::norm(v1) + std::norm(v2);
    std::complex<double> cross = v1 * std::conj(u1) + v2 * std::conj(u2);
    for (Eigen::Index i = 2; i < w.cols(); ++i) {
        row1 += std::norm(w(0, i));
        row2 += std::norm(w(1, i));
        cross += w(1, i) * std::conj(w(0, i));
    }
    if (!(row1 > 1e-300))
        throw SingularityError("xi_stats: |xi11|^2 vanishes");

    XiStats s;
    s.xi11_sq = row1;
    s.xi21_sq = std::norm(cross) / row1;
    s.xi22_sq = std::max(0.0, row2 - s.xi21_sq);
    return s;
}

XiStats sample_xi_stats(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                        const ChannelConfig &config, SampleContext &ctx)
{
    for (;;) {
        const ChannelDraw d = sample_channel(config, ctx.rng);
        try {
            return xi_stats(a, b, c, d);
        } catch (const SingularityError &) {
            ++ctx.resampled;
        }
    }
}

double power_check(std::span<const ComplexMatrix> x_samples)
{
    if (x_samples.empty())
        throw DomainError("power_check: empty sample set");
    double acc = 0.0;
    for (const auto &x : x_samples) {
        if (x.size() == 0)
            throw DomainError("power_check: empty input matrix");
        acc += x.squaredNorm() / static_cast<double>(x.size());
    }
    return acc / static_cast<double>(x_samples.size());
}

} // namespace noncoh
