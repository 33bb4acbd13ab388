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

#include "noncoh/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "noncoh/error.hpp"
#include "noncoh/special.hpp"

namespace noncoh {

double entropy_1d_spacing(std::vector<double> samples, std::size_t m)
{
    const std::size_t n = samples.size();
    if (n < kMinEntropySamples)
        throw EstimationError("entropy_1d_spacing: need at least " + std::to_string(kMinEntropySamples) +
                              " samples, got " + std::to_string(n));
    if (m == 0)
        m = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    if (m >= n / 2)
        throw EstimationError("entropy_1d_spacing: window m must be < n/2");
    for (double x : samples)
        if (!std::isfinite(x))
            throw EstimationError("entropy_1d_spacing: non-finite sample");

    std::sort(samples.begin(), samples.end());

    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t hi = std::min(n - 1, i + m);
        const std::size_t lo = i >= m ? i - m : 0;
        const double spacing = samples[hi] - samples[lo];
        if (!(spacing > 0.0))
            throw EstimationError("entropy_1d_spacing: zero spacing (tied samples)");
        // boundary weight, 1-based position i+1
        double c;
        if (i < m)
            c = 1.0 + static_cast<double>(i) / md;
        else if (i >= n - m)
            c = 1.0 + static_cast<double>(n - 1 - i) / md;
        else
            c = 2.0;
        acc += std::log(nd * spacing / (c * md));
    }
    return acc / nd * kLog2E;
}

} // namespace noncoh
