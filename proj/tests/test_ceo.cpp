// SPDX-License-Identifier: Apache-2.0
//
// fris-secrecy: secrecy-rate optimization toolkit for fluid reconfigurable surfaces
// Copyright (C) 2026 The fris-secrecy authors
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

#include <catch_amalgamated.hpp>

#include "fris/beamform.hpp"
#include "fris/ceo.hpp"
#include "fris/error.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>

using namespace fris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    constexpr double noise = 1e-11;

    FrisConfig with_selection(std::size_t n, std::initializer_list<std::size_t> idx)
    {
        const std::vector<std::size_t> a(idx);
        return FrisConfig::from_active(n, 1, a);
    }

    Beamformer direct_beam(const ChannelSet &ch) { return solve_p2(ch.h_dB, ch.h_dE, 0.1, noise); }

    // Exhaustive maximum over every config with n_hat = 2 for a fixed beamformer
    double exhaustive_fixed(const FixedBeamObjective &obj, std::size_t n, unsigned bits)
    {
        const std::uint32_t levels = 1u << bits;
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::uint32_t a = 0; a < levels; ++a)
                    for (std::uint32_t b = 0; b < levels; ++b)
                    {
                        FrisConfig c(n, bits, 2);
                        c.selection[i] = c.selection[j] = 1;
                        c.phase_index[i] = a;
                        c.phase_index[j] = b;
                        best = std::max(best, obj.ratio(c));
                    }
        return best;
    }
}

TEST_CASE("sample_config - Forced support and phase domain")
{
    SelectionPmf p{{0.0, 0.5, 0.0, 0.5, 0.0}};
    RngStream rng(1, 0);
    for (int i = 0; i < 200; ++i)
    {
        const FrisConfig c = sample_config(p, 2, 1, rng);
        CHECK(c.active_indices() == std::vector<std::size_t>{1, 3});
        for (std::size_t n = 0; n < 5; ++n)
        {
            CHECK(c.phase_index[n] <= 1);
            if (!c.selection[n])
                CHECK(c.phase_index[n] == 0);
        }
        CHECK_NOTHROW(c.validate());
    }
}

TEST_CASE("sample_config - Uniform pair frequencies")
{
    const SelectionPmf p = SelectionPmf::uniform(4);
    RngStream rng(2, 0);
    std::map<std::vector<std::size_t>, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        ++counts[sample_config(p, 2, 2, rng).active_indices()];
    REQUIRE(counts.size() == 6);
    for (const auto &[pair, c] : counts)
        CHECK_THAT(c / double(draws), WithinAbs(1.0 / 6.0, 0.01));
}

TEST_CASE("sample_config - Non-uniform pair probabilities")
{
    // P{i, j} = p_i p_j / (1 - p_i) + p_j p_i / (1 - p_j) for sequential proportional draws
    const std::vector<double> w = {0.4, 0.1, 0.3, 0.0, 0.2};
    const SelectionPmf p{w};
    RngStream rng(3, 1);
    std::map<std::vector<std::size_t>, int> counts;
    const int draws = 200000;
    const SelectionSampler sampler(p);
    for (int i = 0; i < draws; ++i)
        ++counts[sampler.draw(2, 1, rng).active_indices()];
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
        {
            const double expect = w[i] * w[j] / (1.0 - w[i]) + w[j] * w[i] / (1.0 - w[j]);
            const double got = counts[{i, j}] / double(draws);
            CHECK_THAT(got, WithinAbs(expect, 0.005));
        }
    CHECK(sampler.positive_count() == 4);
}

TEST_CASE("sample_config - Zero mass never sampled and infeasible PMF")
{
    std::vector<double> w(40, 0.0);
    for (std::size_t i = 0; i < 40; i += 3)
        w[i] = 1.0 + static_cast<double>(i % 7);
    double s = 0.0;
    for (double v : w)
        s += v;
    for (auto &v : w)
        v /= s;
    RngStream rng(4, 4);
    bool clean = true;
    for (int i = 0; i < 5000; ++i)
    {
        const FrisConfig c = sample_config(SelectionPmf{w}, 10, 3, rng);
        for (std::size_t n = 0; n < 40; ++n)
            clean = clean && (!c.selection[n] || w[n] > 0.0);
        clean = clean && c.active_count() == 10;
    }
    CHECK(clean);

    try
    {
        sample_config(SelectionPmf{{0.5, 0.5, 0.0}}, 3, 1, rng);
        FAIL("no exception");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::infeasible);
    }
}

TEST_CASE("update_pmf - Inclusion frequencies")
{
    const FrisConfig single = with_selection(6, {2, 5});
    const SelectionPmf one = update_pmf(std::span<const FrisConfig>(&single, 1), 6, 2);
    CHECK(one.p == std::vector<double>{0.0, 0.0, 0.5, 0.0, 0.0, 0.5});

    const std::vector<FrisConfig> disjoint = {with_selection(6, {0, 1}), with_selection(6, {3, 4})};
    const SelectionPmf two = update_pmf(disjoint, 6, 2);
    CHECK(two.p == std::vector<double>{0.25, 0.25, 0.0, 0.25, 0.25, 0.0});

    const std::vector<FrisConfig> three = {with_selection(5, {0, 1}), with_selection(5, {0, 2}),
                                           with_selection(5, {0, 3})};
    const SelectionPmf h = update_pmf(three, 5, 2);
    const double expect[] = {3.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 0.0};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK_THAT(h.p[i], WithinAbs(expect[i], 1e-15));
    CHECK(h.valid());

    CHECK_THROWS_AS(update_pmf(std::span<const FrisConfig>(), 5, 2), Error);
    CHECK_THROWS_AS(update_pmf(three, 5, 3), Error);
}

TEST_CASE("smooth_pmf - Convex combination")
{
    const SelectionPmf prev{{0.5, 0.5}}, hat{{1.0, 0.0}};
    const SelectionPmf s = smooth_pmf(prev, hat, 0.7);
    CHECK_THAT(s.p[0], WithinAbs(0.85, 1e-15));
    CHECK_THAT(s.p[1], WithinAbs(0.15, 1e-15));
    CHECK(smooth_pmf(prev, hat, 1.0).p == hat.p);
    CHECK(smooth_pmf(hat, hat, 0.3).p == hat.p);
    CHECK(s.valid());
    CHECK_THROWS_AS(smooth_pmf(prev, hat, 0.0), Error);
    CHECK_THROWS_AS(smooth_pmf(prev, SelectionPmf{{1.0}}, 0.5), Error);

    RngStream rng(6, 0);
    SelectionPmf p = SelectionPmf::uniform(30);
    for (int t = 0; t < 50; ++t)
    {
        std::vector<FrisConfig> el;
        for (int k = 0; k < 4; ++k)
            el.push_back(sample_config(p, 7, 2, rng));
        p = smooth_pmf(p, update_pmf(el, 30, 7), 0.7);
        REQUIRE(p.valid(1e-12));
    }
}

TEST_CASE("elite_order - Stable descending partition")
{
    const std::vector<double> v = {0.3, 0.9, 0.3, 0.1, 0.9, 0.5};
    CHECK(elite_order(v) == std::vector<std::size_t>{1, 4, 5, 0, 2, 3});

    RngStream rng(7, 7);
    std::vector<double> x(500);
    for (auto &e : x)
        e = std::floor(rng.uniform() * 50.0);
    const std::vector<std::size_t> order = elite_order(x);
    const std::size_t ke = CeoParams{}.elite_count(500);
    CHECK(ke == 50);
    double min_elite = 1e300, max_rest = -1e300;
    for (std::size_t i = 0; i < ke; ++i)
        min_elite = std::min(min_elite, x[order[i]]);
    for (std::size_t i = ke; i < 500; ++i)
        max_rest = std::max(max_rest, x[order[i]]);
    CHECK(min_elite >= max_rest - 1e-12);
    for (std::size_t i = 1; i < 500; ++i)
        if (x[order[i]] == x[order[i - 1]])
            CHECK(order[i] > order[i - 1]);
}

TEST_CASE("CeoParams - Defaults and validation")
{
    CeoParams p;
    CHECK(p.samples_for(100) == 500);
    CHECK(p.elite_count(500) == 50);
    CHECK(p.elite_count(30) == 3);
    CHECK(p.elite_count(5) == 1);
    CHECK(p.max_iters == 30);
    CHECK(p.stagnation_patience == 5);
    p.smoothing = 0.0;
    CHECK_THROWS_AS(p.validate(10), Error);
    p = CeoParams{};
    p.elite_ratio = 1.5;
    CHECK_THROWS_AS(p.validate(10), Error);
    p = CeoParams{};
    p.sample_size = 1;
    CHECK_THROWS_AS(p.validate(10), Error);
}

TEST_CASE("solve_p3 - Exhaustive optimum on N = 6")
{
    int hits = 0, exceed = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        const ChannelSet ch = oracle::small_instance(seed, 6, 2);
        const Beamformer w = direct_beam(ch);
        const double best = exhaustive_fixed(FixedBeamObjective(ch, w, noise, 1), 6, 1);
        CeoParams params;
        params.rng = RngStream(seed, 5);
        const P3Solution sol = solve_p3(ch, w, noise, 2, 1, params);
        CHECK_THAT(sol.ratio, WithinRel(objective_ratio(ch, sol.config, w, noise), 1e-12));
        hits += sol.ratio >= best * (1.0 - 1e-12);
        exceed += sol.ratio > best * (1.0 + 1e-12);
    }
    INFO("optimal in " << hits << " of 100");
    CHECK(hits >= 95);
    CHECK(exceed == 0);
}

TEST_CASE("solve_p3 - Forced selection beats random phase search")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        const ChannelSet ch = oracle::small_instance(50 + seed, 8, 2);
        const Beamformer w = direct_beam(ch);
        const FixedBeamObjective obj(ch, w, noise, 1);
        CeoParams params;
        params.rng = RngStream(seed, 1);
        const P3Solution sol = solve_p3(ch, w, noise, 8, 1, params);
        CHECK(sol.config.active_count() == 8);

        RngStream rng(seed, 2);
        double random_best = 0.0;
        for (int k = 0; k < 200; ++k)
        {
            FrisConfig c(8, 1, 8);
            for (std::size_t n = 0; n < 8; ++n)
            {
                c.selection[n] = 1;
                c.phase_index[n] = static_cast<std::uint32_t>(rng.uniform_index(2));
            }
            random_best = std::max(random_best, obj.ratio(c));
        }
        CHECK(sol.ratio >= random_best * (1.0 - 1e-12));
    }
}

TEST_CASE("solve_p3 - Selection mask contract")
{
    const ChannelSet ch = oracle::small_instance(77, 20, 4);
    const Beamformer w = direct_beam(ch);
    std::vector<std::uint8_t> mask(20, 0);
    for (std::size_t i : {2u, 7u, 11u, 19u})
        mask[i] = 1;
    CeoParams params;
    params.rng = RngStream(1, 1);
    const P3Solution sol = solve_p3(ch, w, noise, 4, 3, params, std::span<const std::uint8_t>(mask));
    CHECK(sol.config.active_indices() == std::vector<std::size_t>{2, 7, 11, 19});

    // a wider mask keeps every draw inside it
    for (std::size_t i : {0u, 4u, 5u})
        mask[i] = 1;
    const P3Solution wide = solve_p3(ch, w, noise, 4, 3, params, std::span<const std::uint8_t>(mask));
    for (std::size_t n : wide.config.active_indices())
        CHECK(mask[n] == 1);

    CHECK_THROWS_AS(solve_p3(ch, w, noise, 5, 3, params, std::span<const std::uint8_t>(mask).first(10)), Error);
    try
    {
        solve_p3(ch, w, noise, 21, 3, params);
        FAIL("no exception");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::infeasible);
    }
}

TEST_CASE("solve_p3 - Elitism, determinism and stopping")
{
    const ChannelSet ch = oracle::small_instance(5, 60, 4);
    const Beamformer w = direct_beam(ch);
    CeoParams params;
    params.rng = RngStream(10, 0);
    const P3Solution a = solve_p3(ch, w, noise, 8, 3, params);
    const P3Solution b = solve_p3(ch, w, noise, 8, 3, params);
    CHECK(a.config == b.config);
    CHECK(a.ratio == b.ratio);
    CHECK(a.iterations <= params.max_iters);
    CHECK(a.best_trace.size() == a.iterations);
    for (std::size_t i = 1; i < a.best_trace.size(); ++i)
        CHECK(a.best_trace[i] >= a.best_trace[i - 1]);
    CHECK(a.ratio >= a.best_trace.back());
    CHECK_NOTHROW(a.config.validate());

    // the plain cross-entropy variant (no per-sample refinement, no polish) returns its best sample
    CeoParams literal = params;
    literal.sample_phase_refine = false;
    literal.final_phase_polish = false;
    const P3Solution l = solve_p3(ch, w, noise, 8, 3, literal);
    CHECK(l.ratio == l.best_trace.back());
    CHECK_THAT(l.ratio, WithinRel(objective_ratio(ch, l.config, w, noise), 1e-12));

    CeoParams patient = literal;
    patient.stagnation_patience = 0;
    patient.max_iters = 7;
    CHECK(solve_p3(ch, w, noise, 8, 3, patient).iterations == 7);
}

TEST_CASE("refine_phases - Single element and fixed point")
{
    const ChannelSet ch = oracle::small_instance(9, 10, 2);
    const Beamformer w = direct_beam(ch);
    const FixedBeamObjective obj(ch, w, noise, 1);
    for (std::size_t n = 0; n < 10; ++n)
    {
        FrisConfig c(10, 1, 1);
        c.selection[n] = 1;
        FrisConfig c1 = c;
        c1.phase_index[n] = 1;
        const double best = std::max(obj.ratio(c), obj.ratio(c1));
        CHECK(obj.ratio(refine_phases(obj, c)) == best);
    }

    RngStream rng(9, 1);
    for (int k = 0; k < 20; ++k)
    {
        const ChannelSet big = oracle::small_instance(100 + k, 40, 4);
        const Beamformer bw = direct_beam(big);
        const FixedBeamObjective o(big, bw, noise, 3);
        FrisConfig c = sample_config(SelectionPmf::uniform(40), 12, 3, rng);
        const FrisConfig once = refine_phases(o, c);
        CHECK(refine_phases(o, once) == once);
        CHECK(o.ratio(once) >= o.ratio(c));
        CHECK(once.selection == c.selection);
        CHECK(refine_phases(big, bw, noise, c) == once);
    }
}

TEST_CASE("refine_phases - Two elements against exhaustive phase search")
{
    int matches = 0, exceed = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        const ChannelSet ch = oracle::small_instance(1000 + seed, 6, 2);
        const Beamformer w = direct_beam(ch);
        const FixedBeamObjective obj(ch, w, noise, 2);
        FrisConfig start(6, 2, 2);
        start.selection[1] = start.selection[4] = 1;
        double best = 0.0;
        for (std::uint32_t a = 0; a < 4; ++a)
            for (std::uint32_t b = 0; b < 4; ++b)
            {
                FrisConfig c = start;
                c.phase_index[1] = a;
                c.phase_index[4] = b;
                best = std::max(best, obj.ratio(c));
            }
        const double got = obj.ratio(refine_phases(obj, start));
        matches += got >= best * (1.0 - 1e-12);
        exceed += got > best * (1.0 + 1e-12);
    }
    CHECK(matches >= 180);
    CHECK(exceed == 0);
}

TEST_CASE("refine_phases - Rejects mismatched configurations")
{
    const ChannelSet ch = oracle::small_instance(2, 10, 2);
    const FixedBeamObjective obj(ch, direct_beam(ch), noise, 2);
    CHECK_THROWS_AS(refine_phases(obj, FrisConfig(9, 2, 0)), Error);
    CHECK_THROWS_AS(refine_phases(obj, FrisConfig(10, 3, 0)), Error);
}
