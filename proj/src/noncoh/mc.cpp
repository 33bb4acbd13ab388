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

#include "noncoh/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "noncoh/error.hpp"

namespace noncoh {

namespace {

struct ChunkStats {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
    std::uint64_t nonfinite = 0;
    std::uint64_t resampled = 0;
};

std::uint64_t chunk_count(std::uint64_t n) { return (n + kChunkSize - 1) / kChunkSize; }

// Runs body(chunk_index) for every chunk, spreading chunks over workers.
template <typename Body>
void for_each_chunk(std::uint64_t n_chunks, unsigned threads, Body &&body)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), n_chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            body(c);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks)
                    return;
                try {
                    body(c);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next.store(n_chunks);
                    return;
                }
            }
        });
    }
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

MonteCarloEstimate mc_expectation(const Integrand &integrand, const McOptions &opts)
{
    if (opts.n_samples < 2)
        throw DomainError("mc_expectation: n_samples must be >= 2");

    const std::uint64_t n_chunks = chunk_count(opts.n_samples);
    std::vector<ChunkStats> stats(n_chunks);

    for_each_chunk(n_chunks, opts.threads, [&](std::uint64_t c) {
        SampleContext ctx{Rng::substream(opts.seed, c)};
        const std::uint64_t begin = c * kChunkSize;
        const std::uint64_t end = std::min(opts.n_samples, begin + kChunkSize);
        ChunkStats s;
        for (std::uint64_t i = begin; i < end; ++i) {
            const double x = integrand(ctx);
            if (!std::isfinite(x)) {
                ++s.nonfinite;
                continue;
            }
            ++s.count;
            const double delta = x - s.mean;
            s.mean += delta / static_cast<double>(s.count);
            s.m2 += delta * (x - s.mean);
        }
        s.resampled = ctx.resampled;
        stats[c] = s;
    });

    // Ordered merge (Chan et al. pairwise update).
    ChunkStats total;
    for (const auto &s : stats) {
        total.nonfinite += s.nonfinite;
        total.resampled += s.resampled;
        if (s.count == 0)
            continue;
        const double n_a = static_cast<double>(total.count);
        const double n_b = static_cast<double>(s.count);
        const double n = n_a + n_b;
        const double delta = s.mean - total.mean;
        total.mean += delta * (n_b / n);
        total.m2 += s.m2 + delta * delta * (n_a * n_b / n);
        total.count += s.count;
    }

    if (static_cast<double>(total.nonfinite) > kMaxNonFiniteFraction * static_cast<double>(opts.n_samples) ||
        total.count < 2)
        throw EstimationError("mc_expectation: " + std::to_string(total.nonfinite) + " of " +
                              std::to_string(opts.n_samples) + " integrand values were not finite");

    MonteCarloEstimate est;
    est.mean = total.mean;
    const double n = static_cast<double>(total.count);
    est.std_error = std::sqrt(std::max(0.0, total.m2 / (n - 1.0)) / n);
    est.n_samples = opts.n_samples;
    est.seed = opts.seed;
    est.n_nonfinite = total.nonfinite;
    est.n_resampled = total.resampled;
    return est;
}

std::vector<double> mc_sample(const Integrand &sampler, const McOptions &opts)
{
    std::vector<double> out(opts.n_samples);
    for_each_chunk(chunk_count(opts.n_samples), opts.threads, [&](std::uint64_t c) {
        SampleContext ctx{Rng::substream(opts.seed, c)};
        const std::uint64_t begin = c * kChunkSize;
        const std::uint64_t end = std::min(opts.n_samples, begin + kChunkSize);
        for (std::uint64_t i = begin; i < end; ++i)
            out[i] = sampler(ctx);
    });
    return out;
}

} // namespace noncoh
