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

#ifndef NONCOH_VERIFY_HPP
#define NONCOH_VERIFY_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "noncoh/channel.hpp"
#include "noncoh/mc.hpp"

namespace noncoh {

enum class CheckKind {
    Sandwich, // rhs_lower <= lhs <= rhs_upper
    Equality, // lhs == rhs_lower == rhs_upper within tolerance
};

/// Outcome of one bound check. For stochastic checks the band is widened by
/// 3 std_error. slack is the margin to the nearer bound (Sandwich) or the
/// absolute discrepancy (Equality).
struct BoundCheckResult {
    std::string name;
    CheckKind kind = CheckKind::Sandwich;
    double lhs = 0.0;
    double rhs_lower = 0.0;
    double rhs_upper = 0.0;
    double std_error = 0.0;
    double slack = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string params;
};

BoundCheckResult check_fact_jensen_gap(double a, double b, double mu, const McOptions &mc);

BoundCheckResult check_fact_chi_squared(double a, double b, int k, const McOptions &mc);

BoundCheckResult check_fact_recip_exponential(double b, double mu, const McOptions &mc);

// Closed-form isotropic radial identity, tolerance 1e-9.
BoundCheckResult check_lemma_isotropic_radial(int n, double sigma_sq);

// Same identity with h(sum |xi_i|^2) from the spacing estimator and the log
// moment from Monte Carlo; tolerance 0.05 bits.
BoundCheckResult check_lemma_isotropic_radial_estimated(int n, double sigma_sq, const McOptions &mc);

// Row norms of the 2 x T pre-LQ matrix against xi_stats and lq_decompose.
BoundCheckResult check_lq_norm_preservation(std::uint64_t n_draws, const ChannelConfig &config,
                                            std::uint64_t seed);

// xi_stats closed forms against lq_decompose magnitudes, errors relative to
// the squared row norm.
BoundCheckResult check_xi_oracle(std::uint64_t n_draws, const ChannelConfig &config, std::uint64_t seed);

using AppendixKTerm = std::pair<std::complex<double>, std::complex<double>>; // (k_i, l_i)

BoundCheckResult check_appendix_k_floor(double k_mag, std::complex<double> l, const std::vector<AppendixKTerm> &extra,
                                        const McOptions &mc);

BoundCheckResult check_inner_outer_match(double gamma_d, double gamma_cl, int t);

struct AppendixKCase {
    double k_mag;
    std::complex<double> l;
    std::vector<AppendixKTerm> extra;
};

std::vector<AppendixKCase> appendix_k_default_family();

// Every check over the default grid. Each stochastic check gets its own seed
// derived from mc.seed.
std::vector<BoundCheckResult> verify_all(const McOptions &mc);

} // namespace noncoh

#endif
