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

#include "noncoh/gdof.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "noncoh/error.hpp"

namespace noncoh {

namespace {

constexpr double kTieTol = 1e-9;

void require_t(int t, const char *who)
{
    if (t < 1)
        throw DomainError(std::string(who) + ": coherence time T must be >= 1");
}

void require_nonempty(std::span<const double> g, const char *who)
{
    if (g.empty())
        throw DomainError(std::string(who) + ": empty exponent list");
}

void require_2x2(const LinkExponents &e, const char *who)
{
    if (e.n_rx() != 2 || e.n_tx() != 2)
        throw DomainError(std::string(who) + ": requires 2x2 exponents");
}

void require_sym(double gd, double gcl, const char *who)
{
    if (!std::isfinite(gd) || !std::isfinite(gcl) || gcl < 0.0 || gd < gcl)
        throw DomainError(std::string(who) + ": requires gamma_d >= gamma_cl >= 0");
}

double prelog(int t) { return 1.0 - 1.0 / static_cast<double>(t); }

// Better candidate: strictly larger value, or a tie with a lexicographically
// smaller argmax.
bool improves(double value, const std::array<double, 3> &x, double best, const std::array<double, 3> &bx)
{
    if (value > best + kTieTol)
        return true;
    if (value < best - kTieTol)
        return false;
    for (int i = 0; i < 3; ++i) {
        if (x[i] < bx[i] - kTieTol)
            return true;
        if (x[i] > bx[i] + kTieTol)
            return false;
    }
    return false;
}

GdofSolution make_solution(const std::array<double, 3> &x, double per_block, int t)
{
    return {x[0], x[1], x[2], per_block, per_block / static_cast<double>(t)};
}

} // namespace

MaxAffine::MaxAffine(std::vector<AffineTerm> terms) : terms_(std::move(terms))
{
    if (terms_.empty())
        throw DomainError("MaxAffine: needs at least one term");
}

double MaxAffine::operator()(const std::array<double, 3> &x) const
{
    double best = -INFINITY;
    for (const auto &term : terms_) {
        const double v = term.coeffs[0] * x[0] + term.coeffs[1] * x[1] + term.coeffs[2] * x[2] + term.offset;
        best = std::max(best, v);
    }
    return best;
}

CornerPolytope::CornerPolytope(double gamma_d, double gamma_cl)
{
    require_sym(gamma_d, gamma_cl, "CornerPolytope");
    const double gd = gamma_d;
    const double gcl = gamma_cl;
    auto add = [this](std::array<double, 5> c, double rhs) { constraints_.push_back({c, rhs}); };
    for (int i = 0; i < 3; ++i) {
        std::array<double, 5> lo{}, hi{};
        lo[i] = -1.0;
        hi[i] = 1.0;
        add(lo, 0.0);
        add(hi, gd);
    }
    // t1 >= -ga + gd, -gb + gcl, -ga - gc + gd + gcl
    add({-1, 0, 0, -1, 0}, -gd);
    add({0, -1, 0, -1, 0}, -gcl);
    add({-1, 0, -1, -1, 0}, -gd - gcl);
    // t2 >= -gb + gd, -gc + gd, -ga - gc + gd + gcl
    add({0, -1, 0, 0, -1}, -gd);
    add({0, 0, -1, 0, -1}, -gd);
    add({-1, 0, -1, 0, -1}, -gd - gcl);
}

bool CornerPolytope::contains(const std::array<double, 5> &x, double tol) const
{
    for (const auto &c : constraints_) {
        double lhs = 0.0;
        for (int k = 0; k < 5; ++k)
            lhs += c.coeffs[k] * x[k];
        if (lhs > c.rhs + tol)
            return false;
    }
    return true;
}

std::vector<std::array<double, 5>> CornerPolytope::corners() const
{
    const int n = static_cast<int>(constraints_.size());
    std::vector<std::array<double, 5>> out;
    std::array<int, 5> idx{0, 1, 2, 3, 4};
    Eigen::Matrix<double, 5, 5> a;
    Eigen::Matrix<double, 5, 1> b;
    for (;;) {
        for (int r = 0; r < 5; ++r) {
            const auto &c = constraints_[idx[r]];
            for (int k = 0; k < 5; ++k)
                a(r, k) = c.coeffs[k];
            b(r) = c.rhs;
        }
        const Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>> lu(a);
        if (std::abs(lu.determinant()) >= 1e-12) {
            const Eigen::Matrix<double, 5, 1> sol = lu.solve(b);
            std::array<double, 5> x{};
            for (int k = 0; k < 5; ++k)
                x[k] = sol(k);
            if (contains(x)) {
                const bool dup = std::any_of(out.begin(), out.end(), [&](const auto &y) {
                    double d2 = 0.0;
                    for (int k = 0; k < 5; ++k)
                        d2 += (x[k] - y[k]) * (x[k] - y[k]);
                    return std::sqrt(d2) <= 1e-9;
                });
                if (!dup)
                    out.push_back(x);
            }
        }
        // next 5-subset in lexicographic order
        int i = 4;
        while (i >= 0 && idx[i] == n - 5 + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < 5; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

double gdof_siso(double gamma, int t)
{
    require_t(t, "gdof_siso");
    return prelog(t) * gamma;
}

double gdof_parallel(std::span<const double> gammas, int t)
{
    require_t(t, "gdof_parallel");
    require_nonempty(gammas, "gdof_parallel");
    double s = 0.0;
    for (double g : gammas)
        s += g;
    return prelog(t) * s;
}

double gdof_simo(std::span<const double> gammas, int t)
{
    require_t(t, "gdof_simo");
    require_nonempty(gammas, "gdof_simo");
    return prelog(t) * *std::max_element(gammas.begin(), gammas.end());
}

double gdof_miso(std::span<const double> gammas, int t)
{
    require_t(t, "gdof_miso");
    require_nonempty(gammas, "gdof_miso");
    return prelog(t) * *std::max_element(gammas.begin(), gammas.end());
}

double f_gamma(double ga, double gb, double gc, const LinkExponents &e, int t)
{
    require_t(t, "f_gamma");
    require_2x2(e, "f_gamma");
    const double g11 = e(0, 0), g12 = e(0, 1), g21 = e(1, 0), g22 = e(1, 1);
    using std::max;

    const double block1 = max(max({-ga + g11, -gb + g12, 0.0}) + max({-ga + g21, -gb + g22, 0.0}),
                              max(-gc + g12, 0.0) + max(-gc + g22, 0.0));
    const double block2 = max({max(-ga + g11, 0.0) + max(-gc + g22, 0.0), -gb + max(g12, g22),
                               max(-ga + g21, 0.0) + max(-gc + g12, 0.0)});
    const double t1 = max({-ga + g11, -gb + g12, -gc + g12, -ga - gc + g11 + g12, 0.0});
    const double t2 = max({-ga + g21, -gb + g22, -gc + g22, -ga - gc + g21 + g22, 0.0});
    return block1 + static_cast<double>(t - 1) * block2 - t1 - t2;
}

GdofSolution solve_p9_corners(double gamma_d, double gamma_cl, int t)
{
    require_t(t, "solve_p9_corners");
    require_sym(gamma_d, gamma_cl, "solve_p9_corners");
    if (t == 1)
        return {};
    const LinkExponents e = LinkExponents::symmetric(2, gamma_d, gamma_cl);
    const CornerPolytope region(gamma_d, gamma_cl);
    bool first = true;
    double best = 0.0;
    std::array<double, 3> bx{};
    for (const auto &c : region.corners()) {
        const std::array<double, 3> x{c[0], c[1], c[2]};
        const double v = f_gamma(x[0], x[1], x[2], e, t);
        if (first || improves(v, x, best, bx)) {
            best = v;
            bx = x;
            first = false;
        }
    }
    if (first)
        throw EstimationError("solve_p9_corners: region has no vertices");
    return make_solution(bx, best, t);
}

double gdof_2x2_sym(double gamma_d, double gamma_cl, int t)
{
    require_t(t, "gdof_2x2_sym");
    require_sym(gamma_d, gamma_cl, "gdof_2x2_sym");
    if (t == 1)
        return 0.0;
    if (t == 2)
        return gamma_d - 0.5 * gamma_cl;
    const double td = static_cast<double>(t);
    return 2.0 * (prelog(t) * gamma_d - gamma_cl / td);
}

double gdof_2x2_inner(double ga, double gb, double gc, const LinkExponents &e, int t)
{
    require_t(t, "gdof_2x2_inner");
    require_2x2(e, "gdof_2x2_inner");
    if (ga < 0.0 || gb < 0.0 || gc < 0.0)
        throw DomainError("gdof_2x2_inner: gamma_a, gamma_b, gamma_c must be >= 0");
    if (t == 1)
        return 0.0;
    const double g11 = e(0, 0), g12 = e(0, 1), g21 = e(1, 0), g22 = e(1, 1);
    using std::max;

    const double ach1 = 2.0 * max({-ga + g11, -gb + g12, -gc + g12}) +
                        static_cast<double>(t - 2) * (-ga - gc + max(g12 + g21, g11 + g22)) - gc + g22 +
                        max({-2.0 * ga + g11 + g21, -ga - gb + g12 + g21, -ga - gb + g11 + g22}) -
                        max(-ga + g11, -gb + g12);
    const double ach2 = max({-ga + g11, -gb + g12, -gc + g12, -ga - gc + g11 + g12, 0.0}) +
                        max({-ga + g21, -gb + g22, -gc + g22, -ga - gc + g21 + g22, 0.0});
    return (ach1 - ach2) / static_cast<double>(t);
}

double gdof_gaussian_codebook(int m, double gamma_d, double gamma_cl, int t)
{
    require_t(t, "gdof_gaussian_codebook");
    if (m < 1)
        throw DomainError("gdof_gaussian_codebook: M must be >= 1");
    if (t == 1)
        return 0.0;
    if (t <= m)
        throw DomainError("gdof_gaussian_codebook: requires T > M");
    const double md = static_cast<double>(m);
    return md * (prelog(t) * gamma_d - (md - 1.0) / static_cast<double>(t) * gamma_cl);
}

double gdof_training(int m, double gamma_d, int t)
{
    require_t(t, "gdof_training");
    if (m < 1)
        throw DomainError("gdof_training: M must be >= 1");
    if (t == 1)
        return 0.0;
    if (t < m)
        throw DomainError("gdof_training: requires T >= M");
    const double md = static_cast<double>(m);
    return md * (1.0 - md / static_cast<double>(t)) * gamma_d;
}

GdofSolution solve_p8_grid(const LinkExponents &e, int t, int grid_points, int refine_iters)
{
    require_t(t, "solve_p8_grid");
    require_2x2(e, "solve_p8_grid");
    if (grid_points < 8)
        throw DomainError("solve_p8_grid: grid_points must be >= 8");
    if (refine_iters < 1)
        throw DomainError("solve_p8_grid: refine_iters must be >= 1");
    if (t == 1)
        return {};

    const double hi = std::max(0.0, e.max());
    auto eval = [&](const std::array<double, 3> &x) { return f_gamma(x[0], x[1], x[2], e, t); };

    struct Cand {
        double v;
        std::array<double, 3> x;
    };
    std::vector<Cand> grid;
    const double h = hi / static_cast<double>(grid_points - 1);
    for (int i = 0; i < grid_points; ++i)
        for (int j = 0; j < grid_points; ++j)
            for (int k = 0; k < grid_points; ++k) {
                const std::array<double, 3> x{i * h, j * h, k * h};
                grid.push_back({eval(x), x});
            }
    std::stable_sort(grid.begin(), grid.end(), [](const Cand &a, const Cand &b) { return a.v > b.v; });

    std::vector<std::array<int, 3>> dirs;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                if (a || b || c)
                    dirs.push_back({a, b, c});

    const std::size_t n_starts = std::min<std::size_t>(8, grid.size());
    bool first = true;
    double best = 0.0;
    std::array<double, 3> bx{};
    for (std::size_t s = 0; s < n_starts; ++s) {
        std::array<double, 3> x = grid[s].x;
        double v = grid[s].v;
        double step = (h > 0.0) ? h : 0.0;
        for (int it = 0; it < refine_iters && step >= 1e-7; ++it) {
            bool moved = false;
            for (const auto &d : dirs) {
                std::array<double, 3> y{};
                for (int k = 0; k < 3; ++k)
                    y[k] = std::clamp(x[k] + step * d[k], 0.0, hi);
                const double w = eval(y);
                if (w > v + 1e-15) {
                    v = w;
                    x = y;
                    moved = true;
                }
            }
            if (!moved)
                step *= 0.5;
        }
        if (first || improves(v, x, best, bx)) {
            best = v;
            bx = x;
            first = false;
        }
    }
    return make_solution(bx, best, t);
}

} // namespace noncoh
