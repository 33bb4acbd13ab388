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

#ifndef NONCOH_GDOF_HPP
#define NONCOH_GDOF_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "noncoh/channel.hpp"

namespace noncoh {

/// One affine piece  coeffs . x + offset  over x = (gamma_a, gamma_b, gamma_c).
struct AffineTerm {
    std::array<double, 3> coeffs{};
    double offset = 0.0;
};

/// max over a nonempty list of affine pieces.
class MaxAffine {
public:
    explicit MaxAffine(std::vector<AffineTerm> terms);

    double operator()(const std::array<double, 3> &x) const;
    const std::vector<AffineTerm> &terms() const noexcept { return terms_; }

private:
    std::vector<AffineTerm> terms_;
};

/// Inequality  coeffs . x <= rhs  over x = (gamma_a, gamma_b, gamma_c, t1, t2).
struct LinearConstraint {
    std::array<double, 5> coeffs{};
    double rhs = 0.0;
};

/// Region R of the symmetric 2x2 outer bound: the box 0 <= gamma <= gamma_D
/// plus the six lower bounds on t1 and t2.
class CornerPolytope {
public:
    CornerPolytope(double gamma_d, double gamma_cl);

    const std::vector<LinearConstraint> &constraints() const noexcept { return constraints_; }
    bool contains(const std::array<double, 5> &x, double tol = 1e-9) const;

    // Feasible vertices, deduplicated within 1e-9, in discovery order.
    std::vector<std::array<double, 5>> corners() const;

private:
    std::vector<LinearConstraint> constraints_;
};

struct GdofSolution {
    double gamma_a = 0.0;
    double gamma_b = 0.0;
    double gamma_c = 0.0;
    double per_block = 0.0;
    double per_symbol = 0.0;
};

double gdof_siso(double gamma, int t);
double gdof_parallel(std::span<const double> gammas, int t);
double gdof_simo(std::span<const double> gammas, int t);
double gdof_miso(std::span<const double> gammas, int t);

// Per-block outer-bound objective for a 2x2 channel.
double f_gamma(double ga, double gb, double gc, const LinkExponents &exponents, int t);

GdofSolution solve_p9_corners(double gamma_d, double gamma_cl, int t);

double gdof_2x2_sym(double gamma_d, double gamma_cl, int t);

// Achievable per-symbol gDoF of the 2x2 scheme at (ga, gb, gc).
double gdof_2x2_inner(double ga, double gb, double gc, const LinkExponents &exponents, int t);

double gdof_gaussian_codebook(int m, double gamma_d, double gamma_cl, int t);

double gdof_training(int m, double gamma_d, int t);

GdofSolution solve_p8_grid(const LinkExponents &exponents, int t, int grid_points = 33, int refine_iters = 200);

} // namespace noncoh

#endif
