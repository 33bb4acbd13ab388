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

#include "noncoh/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "noncoh/error.hpp"

namespace noncoh {

namespace {

void require_positive(double x, const char *what)
{
    if (!(x > 0.0))
        throw DomainError(std::string(what) + ": argument must be > 0, got " + std::to_string(x));
}

} // namespace

double log_gamma(double x)
{
    require_positive(x, "log_gamma");
    return boost::math::lgamma(x);
}

double digamma(double x)
{
    require_positive(x, "digamma");
    return boost::math::digamma(x);
}

double exp_e1(double x)
{
    require_positive(x, "exp_e1");
    if (std::isinf(x))
        return 0.0;

    constexpr double eps = 1e-16;
    if (x < 1.0) {
        // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= -x / k;
            const double contrib = term / k;
            sum += contrib;
            if (std::abs(contrib) < eps * std::abs(sum))
                break;
        }
        return std::exp(x) * (-kEulerGamma - std::log(x) - sum);
    }

    // e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- ...)))
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < eps)
            break;
    }
    return h;
}

double elog_one_plus_exponential(double n_over_m)
{
    require_positive(n_over_m, "elog_one_plus_exponential");
    return exp_e1(n_over_m);
}

} // namespace noncoh
