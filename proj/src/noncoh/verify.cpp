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

#include "noncoh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "noncoh/entropy.hpp"
#include "noncoh/error.hpp"
#include "noncoh/gdof.hpp"
#include "noncoh/linalg.hpp"
#include "noncoh/special.hpp"

namespace noncoh {

namespace {

constexpr double kAnalyticTol = 1e-9;
constexpr double kSigmas = 3.0;
constexpr double kEntropyBias = 0.1;
constexpr double kEstimatorTol = 0.05;

std::string fmt(std::initializer_list<std::pair<const char *, double>> kv)
{
    std::ostringstream os;
    os.precision(10);
    bool first = true;
    for (const auto &[k, v] : kv) {
        if (!first)
            os << ' ';
        os << k << '=' << v;
        first = false;
    }
    return os.str();
}

BoundCheckResult sandwich(std::string name, double lhs, double lo, double hi, double se, std::string params)
{
    BoundCheckResult r;
    r.name = std::move(name);
    r.kind = CheckKind::Sandwich;
    r.lhs = lhs;
    r.rhs_lower = lo;
    r.rhs_upper = hi;
    r.std_error = se;
    r.tolerance = kSigmas * se;
    r.slack = std::min(lhs - lo, hi - lhs);
    r.passed = lo - r.tolerance <= lhs && lhs <= hi + r.tolerance;
    r.params = std::move(params);
    return r;
}

BoundCheckResult equality(std::string name, double lhs, double rhs, double tol, double se, std::string params)
{
    BoundCheckResult r;
    r.name = std::move(name);
    r.kind = CheckKind::Equality;
    r.lhs = lhs;
    r.rhs_lower = rhs;
    r.rhs_upper = rhs;
    r.std_error = se;
    r.tolerance = tol;
    r.slack = std::abs(lhs - rhs);
    r.passed = r.slack <= tol;
    r.params = std::move(params);
    return r;
}

McOptions derived(const McOptions &mc, std::uint64_t index)
{
    McOptions out = mc;
    out.seed = splitmix64_mix(mc.seed ^ splitmix64_mix(index + 1));
    return out;
}

void require_positive(double v, const char *what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be finite and > 0");
}

double rel(double x, double ref, double scale)
{
    return std::abs(x - ref) / std::max(scale, std::numeric_limits<double>::min());
}

} // namespace

BoundCheckResult check_fact_jensen_gap(double a, double b, double mu, const McOptions &mc)
{
    if (!(a >= 0.0))
        throw DomainError("check_fact_jensen_gap: a must be >= 0");
    require_positive(b, "check_fact_jensen_gap: b");
    require_positive(mu, "check_fact_jensen_gap: mu");
    const auto est = mc_expectation([=](SampleContext &ctx) { return std::log2(a + b * ctx.rng.exponential(mu)); }, mc);
    const double hi = std::log2(a + b * mu);
    const double lo = hi - kEulerGamma * kLog2E;
    return sandwich("fact1_jensen_gap", est.mean, lo, hi, est.std_error, fmt({{"a", a}, {"b", b}, {"mu", mu}}));
}

BoundCheckResult check_fact_chi_squared(double a, double b, int k, const McOptions &mc)
{
    if (!(a >= 0.0))
        throw DomainError("check_fact_chi_squared: a must be >= 0");
    require_positive(b, "check_fact_chi_squared: b");
    if (k < 1)
        throw DomainError("check_fact_chi_squared: k must be >= 1");
    const auto est = mc_expectation(
        [=](SampleContext &ctx) {
            double chi = 0.0;
            for (int i = 0; i < k; ++i) {
                const double z = ctx.rng.normal();
                chi += z * z;
            }
            return std::log2(a + b * chi);
        },
        mc);
    const double kd = static_cast<double>(k);
    const double hi = std::log2(a + b * kd);
    const double lo = hi - 2.0 * kLog2E / kd + std::log2(1.0 + 1.0 / kd);
    return sandwich("fact2_chi_squared", est.mean, lo, hi, est.std_error,
                    fmt({{"a", a}, {"b", b}, {"k", kd}}));
}

BoundCheckResult check_fact_recip_exponential(double b, double mu, const McOptions &mc)
{
    require_positive(b, "check_fact_recip_exponential: b");
    require_positive(mu, "check_fact_recip_exponential: mu");
    const auto est = mc_expectation([=](SampleContext &ctx) { return b / (b + ctx.rng.exponential(mu)); }, mc);
    const double r = b / mu;
    const double closed = r * exp_e1(r);
    const double chain = r * std::log1p(mu / b);
    BoundCheckResult res = equality("fact3_recip_exponential", est.mean, closed, kSigmas * est.std_error,
                                    est.std_error, fmt({{"b", b}, {"mu", mu}, {"closed_form", closed}, {"chain", chain}}));
    res.passed = res.passed && closed <= chain && chain < 1.0;
    return res;
}

BoundCheckResult check_lemma_isotropic_radial(int n, double sigma_sq)
{
    if (n < 1)
        throw DomainError("check_lemma_isotropic_radial: n must be >= 1");
    require_positive(sigma_sq, "check_lemma_isotropic_radial: sigma_sq");
    const double nd = static_cast<double>(n);
    const double ls = std::log(sigma_sq);
    const double lg = log_gamma(nd);
    const double psi = digamma(nd);
    const double lhs = nd * std::log2(kPi * std::exp(1.0) * sigma_sq);
    const double h_gamma = nd + ls + lg + (1.0 - nd) * psi;
    const double e_log = psi + ls;
    const double rhs = (h_gamma + (nd - 1.0) * e_log + nd * std::log(kPi) - lg) * kLog2E;
    return equality("lemma1_isotropic_radial", lhs, rhs, kAnalyticTol, 0.0, fmt({{"n", nd}, {"sigma_sq", sigma_sq}}));
}

BoundCheckResult check_lemma_isotropic_radial_estimated(int n, double sigma_sq, const McOptions &mc)
{
    if (n < 1)
        throw DomainError("check_lemma_isotropic_radial_estimated: n must be >= 1");
    require_positive(sigma_sq, "check_lemma_isotropic_radial_estimated: sigma_sq");
    auto radial = [=](SampleContext &ctx) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += std::norm(sample_complex_gaussian(sigma_sq, ctx.rng));
        return s;
    };
    const std::vector<double> r = mc_sample(radial, mc);
    double mean_log = 0.0;
    for (double v : r)
        mean_log += std::log2(v);
    mean_log /= static_cast<double>(r.size());
    const double h = entropy_1d_spacing(r);
    const double nd = static_cast<double>(n);
    const double lhs = nd * std::log2(kPi * std::exp(1.0) * sigma_sq);
    const double rhs = h + (nd - 1.0) * mean_log + (nd * std::log(kPi) - log_gamma(nd)) * kLog2E;
    return equality("lemma1_isotropic_radial_estimated", lhs, rhs, kEstimatorTol, 0.0,
                    fmt({{"n", nd}, {"sigma_sq", sigma_sq}, {"samples", static_cast<double>(r.size())}}));
}

namespace {

struct RandomInstance {
    std::complex<double> a, b, c;
    ChannelDraw draw;
};

RandomInstance random_instance(const ChannelConfig &config, Rng &rng)
{
    RandomInstance in;
    in.a = sample_complex_gaussian(1.0, rng);
    in.b = sample_complex_gaussian(1.0, rng);
    in.c = sample_complex_gaussian(1.0, rng);
    in.draw = sample_channel(config, rng);
    return in;
}

void require_2x2_config(const ChannelConfig &config, const char *who)
{
    config.validate();
    if (config.exponents.n_rx() != 2 || config.exponents.n_tx() != 2 || config.t < 2)
        throw DomainError(std::string(who) + ": requires a 2x2 channel with T >= 2");
}

} // namespace

BoundCheckResult check_lq_norm_preservation(std::uint64_t n_draws, const ChannelConfig &config, std::uint64_t seed)
{
    require_2x2_config(config, "check_lq_norm_preservation");
    if (n_draws < 1)
        throw DomainError("check_lq_norm_preservation: n_draws must be >= 1");
    Rng rng(seed);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < n_draws; ++i) {
        const RandomInstance in = random_instance(config, rng);
        const ComplexMatrix m = pre_lq_matrix(in.a, in.b, in.c, in.draw);
        const double n1 = m.row(0).squaredNorm();
        const double n2 = m.row(1).squaredNorm();
        const XiStats s = xi_stats(in.a, in.b, in.c, in.draw);
        const LqFactors f = lq_decompose(m);
        worst = std::max({worst, rel(s.xi11_sq, n1, n1), rel(s.xi21_sq + s.xi22_sq, n2, n2),
                          rel(f.l.row(0).squaredNorm(), n1, n1), rel(f.l.row(1).squaredNorm(), n2, n2)});
    }
    return sandwich("lq_norm_preservation", worst, 0.0, kAnalyticTol, 0.0,
                    fmt({{"draws", static_cast<double>(n_draws)}, {"t", static_cast<double>(config.t)},
                         {"snr", config.snr}}));
}

BoundCheckResult check_xi_oracle(std::uint64_t n_draws, const ChannelConfig &config, std::uint64_t seed)
{
    require_2x2_config(config, "check_xi_oracle");
    if (n_draws < 1)
        throw DomainError("check_xi_oracle: n_draws must be >= 1");
    Rng rng(seed);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < n_draws; ++i) {
        const RandomInstance in = random_instance(config, rng);
        const ComplexMatrix m = pre_lq_matrix(in.a, in.b, in.c, in.draw);
        const double n1 = m.row(0).squaredNorm();
        const double n2 = m.row(1).squaredNorm();
        const XiStats s = xi_stats(in.a, in.b, in.c, in.draw);
        const LqFactors f = lq_decompose(m);
        worst = std::max({worst, rel(s.xi11_sq, std::norm(f.l(0, 0)), n1), rel(s.xi21_sq, std::norm(f.l(1, 0)), n2),
                          rel(s.xi22_sq, std::norm(f.l(1, 1)), n2)});
    }
    return sandwich("xi_oracle_equivalence", worst, 0.0, kAnalyticTol, 0.0,
                    fmt({{"draws", static_cast<double>(n_draws)}, {"t", static_cast<double>(config.t)},
                         {"snr", config.snr}}));
}

BoundCheckResult check_appendix_k_floor(double k_mag, std::complex<double> l, const std::vector<AppendixKTerm> &extra,
                                        const McOptions &mc)
{
    if (!(k_mag >= 1.0) || !std::isfinite(k_mag))
        throw DomainError("check_appendix_k_floor: k_mag must be >= 1");
    for (const auto &[k, li] : extra)
        if (!(std::abs(k) <= 1.0) || !std::isfinite(std::abs(li)))
            throw DomainError("check_appendix_k_floor: extra terms need |k_i| <= 1 and finite l_i");
    auto sampler = [=](SampleContext &ctx) {
        const std::complex<double> eta = sample_complex_gaussian(1.0, ctx.rng);
        double v = std::norm(k_mag * eta + l);
        for (const auto &[k, li] : extra)
            v += std::norm(k * eta + li);
        return v;
    };
    const double h = entropy_1d_spacing(mc_sample(sampler, mc));
    const double floor = -3.5 * kLog2E;
    BoundCheckResult r = sandwich("appendix_k_floor", h, floor - kEntropyBias, std::numeric_limits<double>::infinity(),
                                  0.0, fmt({{"k_mag", k_mag}, {"l_re", l.real()}, {"l_im", l.imag()},
                                            {"extra_terms", static_cast<double>(extra.size())}}));
    r.slack = h - r.rhs_lower;
    return r;
}

BoundCheckResult check_inner_outer_match(double gamma_d, double gamma_cl, int t)
{
    if (t < 2)
        throw DomainError("check_inner_outer_match: T must be >= 2");
    const GdofSolution outer = solve_p9_corners(gamma_d, gamma_cl, t);
    const double closed = gdof_2x2_sym(gamma_d, gamma_cl, t);
    const LinkExponents e = LinkExponents::symmetric(2, gamma_d, gamma_cl);
    const double gc = (t == 2) ? gamma_cl : 0.0;
    const double inner = gdof_2x2_inner(0.0, 0.0, gc, e, t);
    BoundCheckResult r = equality("inner_outer_match", outer.per_symbol, closed, kAnalyticTol, 0.0,
                                  fmt({{"gamma_d", gamma_d}, {"gamma_cl", gamma_cl}, {"t", static_cast<double>(t)},
                                       {"inner", inner}}));
    r.slack = std::max(r.slack, std::abs(inner - closed));
    r.passed = r.slack <= kAnalyticTol;
    return r;
}

std::vector<AppendixKCase> appendix_k_default_family()
{
    using C = std::complex<double>;
    std::vector<AppendixKCase> fam;
    fam.push_back({1.0, C(0, 0), {}});
    fam.push_back({1.0, C(10, 0), {}});
    fam.push_back({1.0, C(3, 4), {{C(-1, 0), C(-3, -4)}}});
    fam.push_back({1.0, C(50, 0), {{C(1e-3, 0), C(-50, 0)}, {C(0, 1e-3), C(0, 50)}}});
    fam.push_back({2.5, C(0, 0), {{C(0, 1), C(0, 0)}, {C(-1, 0), C(0, 0)}, {C(0.5, 0.5), C(0, 0)}}});
    std::vector<AppendixKTerm> cancel;
    for (int i = 0; i < 8; ++i) {
        const double s = (i % 2 == 0) ? 1.0 : -1.0;
        cancel.push_back({C(s * 0.01, 0), C(s * 100.0, s * 25.0 * i)});
    }
    fam.push_back({1.0, C(100, 0), cancel});
    std::vector<AppendixKTerm> tiny;
    for (int i = 0; i < 8; ++i)
        tiny.push_back({C(1e-4, 0), C(1e3, 0)});
    fam.push_back({1.0, C(-1e3, 0), tiny});
    fam.push_back({1.0, C(0, 1e-3), {{C(1, 0), C(0, -1e-3)}}});
    return fam;
}

std::vector<BoundCheckResult> verify_all(const McOptions &mc)
{
    std::vector<BoundCheckResult> out;
    std::uint64_t idx = 0;

    const double fact1[][3] = {{0, 1, 1}, {10, 1, 1}, {1, 5, 3}, {0.5, 2, 0.1}, {100, 1, 10}, {0, 3, 50}};
    for (const auto &p : fact1)
        out.push_back(check_fact_jensen_gap(p[0], p[1], p[2], derived(mc, idx++)));

    const double fact2[][3] = {{0, 1, 2}, {5, 1, 4}, {0, 1, 64}, {1, 1, 1}, {2, 0.5, 8}, {0, 10, 16}};
    for (const auto &p : fact2)
        out.push_back(check_fact_chi_squared(p[0], p[1], static_cast<int>(p[2]), derived(mc, idx++)));

    const double fact3[][2] = {{1, 1}, {100, 1}, {0.01, 1}, {1, 10}, {5, 0.2}};
    for (const auto &p : fact3)
        out.push_back(check_fact_recip_exponential(p[0], p[1], derived(mc, idx++)));

    const double sig[] = {1.0, 2.0, 0.5, 1.0, 10.0, 0.1};
    for (int n = 1; n <= 6; ++n)
        out.push_back(check_lemma_isotropic_radial(n, sig[n - 1]));
    out.push_back(check_lemma_isotropic_radial_estimated(2, 1.0, derived(mc, idx++)));

    const std::pair<int, double> configs[] = {{2, 1.0}, {3, 10.0}, {4, 100.0}, {8, 1e3}, {2, 1e4}};
    for (const auto &[t, snr] : configs) {
        const ChannelConfig cfg{LinkExponents::symmetric(2, 1.0, 0.5), t, snr};
        out.push_back(check_lq_norm_preservation(2000, cfg, derived(mc, idx++).seed));
        out.push_back(check_xi_oracle(2000, cfg, derived(mc, idx++).seed));
    }

    for (const auto &c : appendix_k_default_family())
        out.push_back(check_appendix_k_floor(c.k_mag, c.l, c.extra, derived(mc, idx++)));

    const double io[][3] = {{1, 0.5, 2}, {1, 0.5, 5}, {1, 1, 2}, {2, 0.5, 3}, {0.5, 0, 8}, {2, 1, 4}};
    for (const auto &p : io)
        out.push_back(check_inner_outer_match(p[0], p[1], static_cast<int>(p[2])));
    return out;
}

} // namespace noncoh
