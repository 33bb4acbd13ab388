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

#ifndef NONCOH_SPECIAL_HPP
#define NONCOH_SPECIAL_HPP

namespace noncoh {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLog2E = 1.44269504088896340735992468100189214;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Natural log of the Gamma function. Throws DomainError for x <= 0.
double log_gamma(double x);

// Digamma psi(x). Throws DomainError for x <= 0.
double digamma(double x);

/// Scaled exponential integral e^x * E1(x) for x > 0.
///
/// Power series for x < 1, Lentz continued fraction for x >= 1. The scaled
/// form stays finite for large x where E1 alone underflows. Returns 0 for
/// x = +inf.
double exp_e1(double x);

/// E[ln(1 + X/N)] for X exponential with mean m, given the ratio N/m.
/// Equals e^{N/m} E1(N/m), in nats.
double elog_one_plus_exponential(double n_over_m);

} // namespace noncoh

#endif
