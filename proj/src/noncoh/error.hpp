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

#ifndef NONCOH_ERROR_HPP
#define NONCOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace noncoh {

// Argument outside the mathematical domain of an operation (x <= 0 for
// special functions, T < 1, infeasible antenna/coherence combinations).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Rank-deficient or vanishing-denominator inputs.
class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Monte-Carlo estimation failed (too many non-finite integrand values,
// too few samples for an estimator).
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A scenario or input distribution violates a configuration constraint
// such as the average power constraint.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace noncoh

#endif
