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

#ifndef NONCOH_ENTROPY_HPP
#define NONCOH_ENTROPY_HPP

#include <cstddef>
#include <vector>

namespace noncoh {

inline constexpr std::size_t kMinEntropySamples = 100;

/// Differential entropy in bits from the m-spacing estimator of Vasicek with
/// Ebrahimi's boundary correction. m = 0 selects floor(sqrt(n)).
/// Throws EstimationError for n < 100 or tied order statistics.
double entropy_1d_spacing(std::vector<double> samples, std::size_t m = 0);

} // namespace noncoh

#endif
