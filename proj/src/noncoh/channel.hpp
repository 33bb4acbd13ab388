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

#ifndef NONCOH_CHANNEL_HPP
#define NONCOH_CHANNEL_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "noncoh/linalg.hpp"
#include "noncoh/mc.hpp"

namespace noncoh {

/// SNR exponents gamma_ij of an n_rx x n_tx channel; link (i, j) has mean
/// power snr^gamma_ij.
class LinkExponents {
public:
    // gamma in row-major order, n_rx rows and n_tx columns.
    LinkExponents(std::size_t n_rx, std::size_t n_tx, std::vector<double> gamma);

    // gamma_D on the diagonal, gamma_CL elsewhere. Labels are swapped if
    // gamma_D < gamma_CL so that gamma_D >= gamma_CL always holds.
    static LinkExponents symmetric(std::size_t m, double gamma_d, double gamma_cl);

    static LinkExponents two_by_two(double g11, double g12, double g21, double g22);

    std::size_t n_rx() const noexcept { return n_rx_; }
    std::size_t n_tx() const noexcept { return n_tx_; }
    double operator()(std::size_t i, std::size_t j) const { return gamma_[i * n_tx_ + j]; }
    double max() const;

    LinkExponents scaled(double lambda) const;

private:
    std::size_t n_rx_;
    std::size_t n_tx_;
    std::vector<double> gamma_;
};

struct ChannelConfig {
    LinkExponents exponents;
    int t;      // coherence time in symbols
    double snr; // linear

    void validate() const;
};

// rho^2_ij = snr^gamma_ij.
Eigen::MatrixXd link_strengths(const ChannelConfig &config);

struct ChannelDraw {
    ComplexMatrix g; // n_rx x n_tx fading
    ComplexMatrix w; // n_rx x T noise, unit variance
};

ChannelDraw sample_channel(const ChannelConfig &config, Rng &rng);

/// Squared magnitudes of the LQ factor of the 2 x T matrix
///   [a g11 + b g12 + w11, c g12 + w12, w13 ... w1T]
///   [a g21 + b g22 + w21, c g22 + w22, w23 ... w2T].
struct XiStats {
    double xi11_sq = 0.0;
    double xi21_sq = 0.0;
    double xi22_sq = 0.0;
};

// The explicit 2 x T pre-LQ matrix above.
ComplexMatrix pre_lq_matrix(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                            const ChannelDraw &draw);

// Closed-form xi statistics. Requires a 2x2 channel and T >= 2; throws
// SingularityError when |xi11|^2 <= 1e-300.
XiStats xi_stats(std::complex<double> a, std::complex<double> b, std::complex<double> c, const ChannelDraw &draw);

// Draws a channel and returns its xi statistics, redrawing degenerate
// draws and counting them in ctx.resampled.
XiStats sample_xi_stats(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                        const ChannelConfig &config, SampleContext &ctx);

/// Empirical per-entry power (1/MT) sum E|x_mt|^2 over a set of M x T input
/// samples.
double power_check(std::span<const ComplexMatrix> x_samples);

} // namespace noncoh

#endif
