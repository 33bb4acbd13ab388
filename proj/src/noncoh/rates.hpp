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

#ifndef NONCOH_RATES_HPP
#define NONCOH_RATES_HPP

#include "noncoh/channel.hpp"
#include "noncoh/mc.hpp"

namespace noncoh {

/// Symmetric 2x2 scenario in physical units. Link power is
/// rho^2 = 10^(snr_db/10) * gain.
struct RateScenario {
    double snr_db = 23.0;
    double direct_gain = 0.1;
    double cross_gain = 0.025;
    int t = 2;

    void validate() const;
    double rho_direct_sq() const;
    double rho_cross_sq() const;
};

/// All rates in bits/symbol.
struct RateReport {
    MonteCarloEstimate noncoherent;
    double siso_training = 0.0;
    double parallel_training = 0.0;
    double gain = 0.0; // noncoherent - max(siso, parallel)
    double input_power = 0.0; // empirical per-entry power of the noncoherent input
};

// Noncoherent input: |a|^2 = 2, |b|^2 = 1, |c|^2 = min(1/rho_cross^2, 1).
struct NoncoherentInput {
    double a_sq = 2.0;
    double b_sq = 1.0;
    double c_sq = 1.0;
};

NoncoherentInput noncoherent_input(const RateScenario &scenario);

double rate_siso_training(const RateScenario &scenario);

double rate_parallel_training(const RateScenario &scenario);

// Requires t == 2 and at least 1e5 samples. The reported mean is clipped at 0.
MonteCarloEstimate rate_noncoherent_t2(const RateScenario &scenario, const McOptions &mc);

// Empirical input power of the noncoherent scheme from 4096 draws of
// X = [[a, 0], [eta, c]] Q on a dedicated substream. Throws ConfigError above 1.02.
double noncoherent_power_check(const RateScenario &scenario, std::uint64_t seed);

RateReport compare_rates(const RateScenario &scenario, const McOptions &mc);

/// Gaussian-codebook MI lower bound per symbol for an M x M channel,
/// E log2|det G|^2 - (1/T) sum_n E log2 det(I + D_n^1/2 X X^H D_n^1/2).
MonteCarloEstimate mi_lower_bound_gaussian(int m, int t, double snr, const LinkExponents &exponents,
                                           const McOptions &mc);

} // namespace noncoh

#endif
