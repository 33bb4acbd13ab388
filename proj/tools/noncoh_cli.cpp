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

// noncoh command-line front end.
//
//   noncoh [--format json|csv|pretty] [--out FILE] [--config FILE]
//          [--seed N] [--n N] [--threads N] <command> ...
//
// Exit codes: 0 success, 1 domain/infeasible or failed check, 2 usage.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "noncoh/noncoh.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, std::string>;

struct Column {
    std::string name;
    std::string unit;
};

// A command's output: metadata, a fixed column list and rows.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    bool json_lines = false;
};

struct Globals {
    std::string format = "pretty";
    std::string out;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> n;
    unsigned threads = 0;
};

std::string num(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string cell_text(const Cell &c)
{
    if (const auto *d = std::get_if<double>(&c))
        return num(*d);
    return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell &c)
{
    if (const auto *d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d))
            return num(*d);
        return *d;
    }
    return std::get<std::string>(c);
}

std::string header_name(const Column &c) { return c.unit.empty() ? c.name : c.name + " [" + c.unit + "]"; }

void render_csv(const Report &r, std::ostream &os)
{
    for (const auto &[k, v] : r.meta)
        os << "# " << k << ": " << v << '\n';
    for (std::size_t i = 0; i < r.columns.size(); ++i)
        os << (i ? "," : "") << header_name(r.columns[i]);
    os << '\n';
    for (const auto &row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << cell_text(row[i]);
        os << '\n';
    }
}

void render_json(const Report &r, std::ostream &os)
{
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.meta)
        meta[k] = v;
    nlohmann::ordered_json units = nlohmann::ordered_json::object();
    for (const auto &c : r.columns)
        units[c.name] = c.unit.empty() ? "-" : c.unit;
    auto row_obj = [&](const std::vector<Cell> &row) {
        nlohmann::ordered_json o = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            o[r.columns[i].name] = cell_json(row[i]);
        return o;
    };
    if (r.json_lines) {
        nlohmann::ordered_json head = {{"meta", meta}, {"units", units}};
        os << head.dump() << '\n';
        for (const auto &row : r.rows)
            os << row_obj(row).dump() << '\n';
        return;
    }
    nlohmann::ordered_json doc = {{"meta", meta}, {"units", units}, {"rows", nlohmann::ordered_json::array()}};
    for (const auto &row : r.rows)
        doc["rows"].push_back(row_obj(row));
    os << doc.dump(2) << '\n';
}

void render_pretty(const Report &r, std::ostream &os)
{
    for (const auto &[k, v] : r.meta)
        os << k << ": " << v << '\n';
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i)
        width[i] = header_name(r.columns[i]).size();
    for (const auto &row : r.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], cell_text(row[i]).size());
    auto line = [&](auto get) {
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            const std::string s = get(i);
            os << (i ? "  " : "") << s;
            if (i + 1 < r.columns.size())
                os << std::string(width[i] - s.size(), ' ');
        }
        os << '\n';
    };
    line([&](std::size_t i) { return header_name(r.columns[i]); });
    for (const auto &row : r.rows)
        line([&](std::size_t i) { return cell_text(row[i]); });
}

class Session {
public:
    explicit Session(const Globals &g) : g_(g)
    {
        if (noncoh_context_create(&ctx_) != NONCOH_OK)
            throw LibraryError("cannot create context");
        noncoh_context_set_seed(ctx_, g.seed);
        noncoh_context_set_threads(ctx_, g.threads);
    }
    ~Session() { noncoh_context_destroy(ctx_); }
    Session(const Session &) = delete;
    Session &operator=(const Session &) = delete;

    noncoh_context *ctx() { return ctx_; }

    void set_samples(std::uint64_t fallback)
    {
        const std::uint64_t n = g_.n.value_or(fallback);
        check(noncoh_context_set_samples(ctx_, n));
        samples_ = n;
    }

    void check(noncoh_status s)
    {
        if (s == NONCOH_OK)
            return;
        std::string msg = noncoh_status_string(s);
        const char *detail = noncoh_last_error(ctx_);
        if (detail && *detail)
            msg += std::string(": ") + detail;
        throw LibraryError(msg);
    }

    Report report(std::string command, bool stochastic)
    {
        Report r;
        r.command = command;
        r.meta.push_back({"command", command});
        r.meta.push_back({"version", noncoh_version()});
        r.meta.push_back({"seed", std::to_string(g_.seed)});
        r.meta.push_back({"n_samples", std::to_string(stochastic ? samples_ : 0)});
        return r;
    }

private:
    const Globals &g_;
    noncoh_context *ctx_ = nullptr;
    std::uint64_t samples_ = 0;
};

const char *kGdofUnit = "gDoF";
const char *kRateUnit = "bits/symbol";

std::array<double, 4> gamma4_from(const std::vector<double> &v)
{
    if (v.size() != 4)
        throw UsageError("--gamma4 expects four values g11,g12,g21,g22");
    return {v[0], v[1], v[2], v[3]};
}

// "start:stop:step" in dB.
std::vector<double> parse_range(const std::string &spec)
{
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(tok, &used));
            if (used != tok.size())
                throw UsageError("bad number in range: " + tok);
        } catch (const std::logic_error &) {
            throw UsageError("bad number in range: " + tok);
        }
    }
    if (parts.size() == 2)
        parts.push_back(1.0);
    if (parts.size() != 3)
        throw UsageError("range must be start:stop[:step]");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (!(step > 0.0) || !(start <= stop) || !std::isfinite(start) || !std::isfinite(stop))
        throw UsageError("empty SNR range: " + spec);
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double v = start + i * step;
        if (v > stop + 1e-9 * step)
            break;
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_list(const std::string &s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size())
                throw UsageError("bad number: " + tok);
        } catch (const std::logic_error &) {
            throw UsageError("bad number: " + tok);
        }
    }
    return out;
}

Cell cell(double v) { return v; }
Cell cell(std::string v) { return v; }

void add_check_columns(Report &r)
{
    r.columns = {{"check", ""},     {"params", ""},    {"lhs", ""},      {"rhs_lower", ""}, {"rhs_upper", ""},
                 {"std_error", ""}, {"tolerance", ""}, {"slack", ""},    {"passed", ""}};
    r.json_lines = true;
}

void add_check_row(Report &r, const noncoh_check_result &c)
{
    r.rows.push_back({cell(std::string(c.name)), cell(std::string(c.params)), cell(c.lhs), cell(c.rhs_lower),
                      cell(c.rhs_upper), cell(c.std_error), cell(c.tolerance), cell(c.slack),
                      cell(std::string(c.passed ? "true" : "false"))});
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"noncoh: gDoF and achievable rates for noncoherent block-fading MIMO"};
    app.set_version_flag("--version", std::string(noncoh_version()));
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key = value file");

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", g.out, "Write output to FILE instead of stdout");
    app.add_option("--seed", g.seed, "Monte Carlo seed")->envname("NONCOH_SEED");
    app.add_option("--n", g.n, "Monte Carlo sample count");
    app.add_option("--threads", g.threads, "Worker threads (0: all cores)");

    // Parameters shared by several subcommands.
    double gamma = 1.0, gd = 1.0, gcl = 0.5, ga = 0.0, gb = 0.0, gc = 0.0;
    int t = 2, m = 2, grid = 33, iters = 200;
    std::string gammas_s, gamma4_s;
    std::optional<Report> result;
    std::optional<Session> session;
    bool all_passed = true;

    auto *gdof = app.add_subcommand("gdof", "Generalized degrees of freedom");
    gdof->require_subcommand(1);
    auto *g_siso = gdof->add_subcommand("siso", "(1-1/T) gamma");
    g_siso->add_option("--gamma", gamma)->required();
    auto *g_par = gdof->add_subcommand("parallel", "Parallel channels");
    auto *g_simo = gdof->add_subcommand("simo", "SIMO, best receive antenna");
    auto *g_miso = gdof->add_subcommand("miso", "MISO, best transmit antenna");
    for (auto *s : {g_par, g_simo, g_miso})
        s->add_option("--gammas", gammas_s, "Comma-separated exponents")->required();
    auto *g_sym = gdof->add_subcommand("sym2x2", "Symmetric 2x2 closed form");
    auto *g_p9 = gdof->add_subcommand("p9", "Symmetric 2x2 corner-point solver");
    auto *g_gc = gdof->add_subcommand("gausscode", "MxM Gaussian codebook");
    auto *g_tr = gdof->add_subcommand("training", "MxM training scheme");
    auto *g_inner = gdof->add_subcommand("inner2x2", "2x2 achievable gDoF at (ga, gb, gc)");
    auto *g_p8 = gdof->add_subcommand("p8grid", "General 2x2 grid solver");
    for (auto *s : {g_sym, g_p9, g_gc})
        s->add_option("--gcl", gcl)->required();
    for (auto *s : {g_sym, g_p9, g_gc, g_tr})
        s->add_option("--gd", gd)->required();
    for (auto *s : {g_gc, g_tr})
        s->add_option("--m", m)->required();
    for (auto *s : {g_inner, g_p8})
        s->add_option("--gamma4", gamma4_s, "g11,g12,g21,g22")->required();
    g_inner->add_option("--ga", ga);
    g_inner->add_option("--gb", gb);
    g_inner->add_option("--gc", gc);
    g_p8->add_option("--grid", grid, "Grid points per axis");
    g_p8->add_option("--iters", iters, "Refinement iterations per start");
    for (auto *s : {g_siso, g_par, g_simo, g_miso, g_sym, g_p9, g_gc, g_tr, g_inner, g_p8})
        s->add_option("--t", t, "Coherence time T")->required();

    auto *rates = app.add_subcommand("rates", "Noncoherent vs training rates for T = 2");
    double snr_db = 23.0, direct = 0.1, cross = 0.025;
    bool table2 = false;
    rates->add_option("--snr-db", snr_db, "Transmit SNR per antenna (dB)");
    rates->add_option("--direct", direct, "Direct link gain");
    rates->add_option("--cross", cross, "Cross link gain");
    rates->add_flag("--table2", table2, "Run the four reference scenarios");

    auto *verify = app.add_subcommand("verify", "Verification suite");
    bool verify_all_flag = false;
    verify->add_flag("--all", verify_all_flag, "Run every check over the default grid");
    double a = 0.0, b = 1.0, mu = 1.0, sigma2 = 1.0, snr = 10.0, k_mag = 1.0, l_re = 0.0, l_im = 0.0;
    int k = 2, n_dim = 2;
    std::uint64_t draws = 10000;
    bool estimated = false;
    std::string extra_s;
    auto *v_f1 = verify->add_subcommand("fact1", "Exponential Jensen gap");
    auto *v_f2 = verify->add_subcommand("fact2", "Chi-squared Jensen gap");
    auto *v_f3 = verify->add_subcommand("fact3", "E[b/(b+xi)] closed form");
    auto *v_l1 = verify->add_subcommand("lemma1", "Isotropic radial entropy identity");
    auto *v_lq = verify->add_subcommand("lq", "LQ row-norm preservation");
    auto *v_xi = verify->add_subcommand("xi", "xi closed forms vs LQ");
    auto *v_k = verify->add_subcommand("appk", "Entropy floor of a squared Gaussian norm");
    auto *v_io = verify->add_subcommand("innerouter", "Inner bound equals outer bound");
    for (auto *s : {v_f1, v_f2})
        s->add_option("--a", a);
    for (auto *s : {v_f1, v_f2, v_f3})
        s->add_option("--b", b);
    for (auto *s : {v_f1, v_f3})
        s->add_option("--mu", mu);
    v_f2->add_option("--k", k);
    v_l1->add_option("--n", n_dim, "Dimension");
    v_l1->add_option("--sigma2", sigma2);
    v_l1->add_flag("--estimated", estimated, "Use the spacing estimator");
    for (auto *s : {v_lq, v_xi}) {
        s->add_option("--draws", draws);
        s->add_option("--snr", snr, "Linear SNR");
    }
    for (auto *s : {v_lq, v_xi, v_io}) {
        s->add_option("--gd", gd);
        s->add_option("--gcl", gcl);
        s->add_option("--t", t);
    }
    v_k->add_option("--k-mag", k_mag);
    v_k->add_option("--l-re", l_re);
    v_k->add_option("--l-im", l_im);
    v_k->add_option("--extra", extra_s, "k_re,k_im,l_re,l_im[;...]");

    auto *sweep = app.add_subcommand("sweep", "Gaussian-codebook lower bound vs SNR");
    std::string range = "30:40:5";
    sweep->add_option("--m", m);
    sweep->add_option("--t", t);
    sweep->add_option("--gd", gd);
    sweep->add_option("--gcl", gcl);
    sweep->add_option("--snr-db", range, "start:stop[:step] in dB");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        session.emplace(g);
        Session &s = *session;
        auto *ctx = s.ctx();

        if (gdof->parsed()) {
            const std::vector<double> gv = gammas_s.empty() ? std::vector<double>{} : parse_list(gammas_s);
            auto scalar = [&](const std::string &name, double v) {
                Report r = s.report("gdof " + name, false);
                r.columns = {{"per_symbol", kGdofUnit}};
                r.rows.push_back({cell(v)});
                result = std::move(r);
            };
            double v = 0.0;
            if (g_siso->parsed()) {
                s.check(noncoh_gdof_siso(ctx, gamma, t, &v));
                scalar("siso", v);
            } else if (g_par->parsed()) {
                s.check(noncoh_gdof_parallel(ctx, gv.data(), gv.size(), t, &v));
                scalar("parallel", v);
            } else if (g_simo->parsed()) {
                s.check(noncoh_gdof_simo(ctx, gv.data(), gv.size(), t, &v));
                scalar("simo", v);
            } else if (g_miso->parsed()) {
                s.check(noncoh_gdof_miso(ctx, gv.data(), gv.size(), t, &v));
                scalar("miso", v);
            } else if (g_sym->parsed()) {
                s.check(noncoh_gdof_sym2x2(ctx, gd, gcl, t, &v));
                scalar("sym2x2", v);
            } else if (g_gc->parsed()) {
                s.check(noncoh_gdof_gausscode(ctx, m, gd, gcl, t, &v));
                scalar("gausscode", v);
            } else if (g_tr->parsed()) {
                s.check(noncoh_gdof_training(ctx, m, gd, t, &v));
                scalar("training", v);
            } else if (g_inner->parsed()) {
                const auto g4 = gamma4_from(parse_list(gamma4_s));
                s.check(noncoh_gdof_inner2x2(ctx, ga, gb, gc, g4.data(), t, &v));
                scalar("inner2x2", v);
            } else {
                noncoh_gdof_solution sol{};
                std::string name;
                if (g_p9->parsed()) {
                    s.check(noncoh_gdof_p9(ctx, gd, gcl, t, &sol));
                    name = "p9";
                } else {
                    const auto g4 = gamma4_from(parse_list(gamma4_s));
                    s.check(noncoh_gdof_p8_grid(ctx, g4.data(), t, grid, iters, &sol));
                    name = "p8grid";
                }
                Report r = s.report("gdof " + name, false);
                r.columns = {{"per_symbol", kGdofUnit}, {"per_block", kGdofUnit}, {"gamma_a", ""},
                             {"gamma_b", ""},           {"gamma_c", ""}};
                r.rows.push_back(
                    {cell(sol.per_symbol), cell(sol.per_block), cell(sol.gamma_a), cell(sol.gamma_b), cell(sol.gamma_c)});
                result = std::move(r);
            }
        } else if (rates->parsed()) {
            s.set_samples(10000000);
            std::vector<noncoh_rate_scenario> scen;
            if (table2)
                scen = {{22, 0.1, 0.025, 2}, {23, 0.1, 0.025, 2}, {23, 0.1, 0.016, 2}, {23, 0.1, 0.04, 2}};
            else
                scen = {{snr_db, direct, cross, 2}};
            Report r = s.report(table2 ? "rates --table2" : "rates", true);
            r.columns = {{"snr_db", "dB"},
                         {"direct_gain", ""},
                         {"cross_gain", ""},
                         {"noncoherent", kRateUnit},
                         {"noncoherent_std_error", kRateUnit},
                         {"siso_training", kRateUnit},
                         {"parallel_training", kRateUnit},
                         {"gain", kRateUnit},
                         {"input_power", ""}};
            for (const auto &sc : scen) {
                noncoh_rate_report rep{};
                s.check(noncoh_compare_rates(ctx, &sc, &rep));
                r.rows.push_back({cell(sc.snr_db), cell(sc.direct_gain), cell(sc.cross_gain),
                                  cell(rep.noncoherent.mean), cell(rep.noncoherent.std_error), cell(rep.siso_training),
                                  cell(rep.parallel_training), cell(rep.gain), cell(rep.input_power)});
            }
            result = std::move(r);
        } else if (verify->parsed()) {
            s.set_samples(100000);
            const bool any_sub = !verify->get_subcommands().empty();
            Report r = s.report("verify", true);
            add_check_columns(r);
            noncoh_check_result c{};
            if (!any_sub || verify_all_flag) {
                noncoh_check_list *list = nullptr;
                s.check(noncoh_verify_all(ctx, &list));
                for (std::size_t i = 0; i < noncoh_check_list_size(list); ++i) {
                    noncoh_check_list_get(list, i, &c);
                    add_check_row(r, c);
                    all_passed = all_passed && c.passed;
                }
                noncoh_check_list_destroy(list);
            }
            if (any_sub) {
                if (v_f1->parsed())
                    s.check(noncoh_check_fact1(ctx, a, b, mu, &c));
                else if (v_f2->parsed())
                    s.check(noncoh_check_fact2(ctx, a, b, k, &c));
                else if (v_f3->parsed())
                    s.check(noncoh_check_fact3(ctx, b, mu, &c));
                else if (v_l1->parsed())
                    s.check(estimated ? noncoh_check_lemma1_estimated(ctx, n_dim, sigma2, &c)
                                      : noncoh_check_lemma1(ctx, n_dim, sigma2, &c));
                else if (v_lq->parsed())
                    s.check(noncoh_check_lq_norm(ctx, draws, gd, gcl, t, snr, &c));
                else if (v_xi->parsed())
                    s.check(noncoh_check_xi_oracle(ctx, draws, gd, gcl, t, snr, &c));
                else if (v_k->parsed()) {
                    std::vector<double> extra;
                    std::stringstream ss(extra_s);
                    std::string term;
                    while (std::getline(ss, term, ';')) {
                        const auto q = parse_list(term);
                        if (q.size() != 4)
                            throw UsageError("--extra terms need four numbers each");
                        extra.insert(extra.end(), q.begin(), q.end());
                    }
                    s.check(noncoh_check_appendix_k(ctx, k_mag, l_re, l_im, extra.data(), extra.size() / 4, &c));
                } else
                    s.check(noncoh_check_inner_outer(ctx, gd, gcl, t, &c));
                add_check_row(r, c);
                all_passed = all_passed && c.passed;
            }
            result = std::move(r);
        } else if (sweep->parsed()) {
            s.set_samples(200000);
            const std::vector<double> pts = parse_range(range);
            const std::size_t mm = static_cast<std::size_t>(std::max(m, 1));
            std::vector<double> gamma(mm * mm, gcl);
            for (std::size_t i = 0; i < mm; ++i)
                gamma[i * mm + i] = gd;
            double predicted = 0.0;
            s.check(noncoh_gdof_gausscode(ctx, m, gd, gcl, t, &predicted));
            Report r = s.report("sweep", true);
            r.meta.push_back({"m", std::to_string(m)});
            r.meta.push_back({"t", std::to_string(t)});
            r.meta.push_back({"gamma_d", num(gd)});
            r.meta.push_back({"gamma_cl", num(gcl)});
            r.columns = {{"snr_db", "dB"},
                         {"bound", kRateUnit},
                         {"std_error", kRateUnit},
                         {"slope", "gDoF"},
                         {"predicted_gdof", "gDoF"}};
            double prev = 0.0, prev_db = 0.0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                noncoh_estimate e{};
                s.check(noncoh_mi_lower_bound_gaussian(ctx, m, t, std::pow(10.0, pts[i] / 10.0), gamma.data(), &e));
                Cell slope = std::string("");
                if (i > 0)
                    slope = (e.mean - prev) / ((pts[i] - prev_db) / 10.0 * std::log2(10.0));
                r.rows.push_back({cell(pts[i]), cell(e.mean), cell(e.std_error), slope, cell(predicted)});
                prev = e.mean;
                prev_db = pts[i];
            }
            result = std::move(r);
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LibraryError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    if (!result)
        return kExitUsage;

    std::ofstream file;
    std::ostream *os = &std::cout;
    if (!g.out.empty()) {
        file.open(g.out);
        if (!file) {
            std::cerr << "error: cannot open " << g.out << '\n';
            return kExitUsage;
        }
        os = &file;
    }
    if (g.format == "json")
        render_json(*result, *os);
    else if (g.format == "csv")
        render_csv(*result, *os);
    else
        render_pretty(*result, *os);
    os->flush();
    return all_passed ? kExitOk : kExitDomain;
}
