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

#include "fris/schemes.hpp"
#include "fris/beamform.hpp"
#include "fris/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fris
{
    std::string_view scheme_name(SchemeId id)
    {
        switch (id)
        {
        case SchemeId::ao_ceo: return "ao_ceo";
        case SchemeId::random_selection_phase_opt: return "random_sel_phase_opt";
        case SchemeId::conventional_ris: return "conventional_ris";
        case SchemeId::random_phases: return "random_phases";
        case SchemeId::no_surface: return "no_surface";
        case SchemeId::ao_ceo_literal: return "ao_ceo_literal";
        }
        return "unknown";
    }

    std::optional<SchemeId> parse_scheme(std::string_view name)
    {
        for (SchemeId id : all_schemes)
            if (scheme_name(id) == name)
                return id;
        for (SchemeId id : extra_schemes)
            if (scheme_name(id) == name)
                return id;
        return std::nullopt;
    }

    void AoParams::validate() const
    {
        if (max_iters < 1)
            fail(ErrorCode::invalid_argument, "AO: max_iters must be at least 1");
        if (!(rel_tolerance > 0.0))
            fail(ErrorCode::invalid_argument, "AO: rel_tolerance must be positive");
    }

    std::vector<std::size_t> central_block(std::size_t num_locations, std::size_t n_hat)
    {
        if (n_hat > num_locations)
            fail(ErrorCode::infeasible, "central_block: n_hat exceeds the number of locations");
        std::vector<std::size_t> idx(n_hat);
        std::iota(idx.begin(), idx.end(), (num_locations - n_hat) / 2);
        return idx;
    }

    FrisConfig random_config(std::size_t num_locations, std::size_t n_hat, unsigned bits, RngStream &rng,
                             bool random_phases)
    {
        if (n_hat > num_locations)
            fail(ErrorCode::infeasible, "random_config: n_hat exceeds the number of locations");
        // partial Fisher-Yates
        std::vector<std::size_t> pool(num_locations);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < n_hat; ++i)
        {
            const std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(num_locations - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<std::size_t> active(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_hat));
        std::sort(active.begin(), active.end());
        FrisConfig config = FrisConfig::from_active(num_locations, bits, active);
        if (random_phases)
            for (std::size_t n : active)
                config.phase_index[n] = static_cast<std::uint32_t>(rng.uniform_index(config.levels()));
        return config;
    }

    namespace
    {
        void check_budget(const ChannelSet &channels, const LinkBudget &budget)
        {
            if (!(budget.power > 0.0) || !(budget.noise_power > 0.0))
                fail(ErrorCode::invalid_argument, "scheme: power and noise must be positive");
            if (budget.n_hat < 1 || budget.n_hat > channels.num_locations())
                fail(ErrorCode::infeasible, "scheme: need 1 <= n_hat <= N");
            if (budget.bits < 1 || budget.bits > 16)
                fail(ErrorCode::invalid_argument, "scheme: bits must be in [1, 16]");
        }

        Beamformer optimal_beam(const ChannelSet &channels, const FrisConfig &config, const LinkBudget &budget)
        {
            const ComplexVector hb = effective_channel(channels.h_dB, channels.h_rB, channels.G, config);
            const ComplexVector he = effective_channel(channels.h_dE, channels.h_rE, channels.G, config);
            return solve_p2_subspace(hb, he, budget.power, budget.noise_power);
        }

        SchemeResult finish(SchemeId id, FrisConfig config, Beamformer beam, double ratio, std::size_t iterations,
                            std::vector<double> trace)
        {
            SchemeResult r;
            r.scheme = id;
            r.objective_ratio = ratio;
            r.secrecy_rate = rate_from_ratio(ratio);
            r.iterations = iterations;
            r.config = std::move(config);
            r.beamformer = std::move(beam);
            r.trace = std::move(trace);
            return r;
        }

        // Generic AO loop. surface_step(beam, objective, config, iteration) returns a candidate
        // configuration for the current beamformer; `objective` is that beamformer's evaluator.
        template <typename SurfaceStep>
        SchemeResult alternate(SchemeId id, const ChannelSet &channels, const LinkBudget &budget,
                               const AoParams &params, FrisConfig config, SurfaceStep surface_step)
        {
            params.validate();
            std::vector<double> trace;
            Beamformer beam;
            double previous = 0.0;
            std::size_t iter = 0;
            while (iter < params.max_iters)
            {
                ++iter;
                beam = optimal_beam(channels, config, budget);
                const FixedBeamObjective objective(channels, beam, budget.noise_power, budget.bits);
                const double incumbent = objective.ratio(config);
                FrisConfig candidate = surface_step(beam, objective, config, iter);
                if (objective.ratio(candidate) >= incumbent)
                    config = std::move(candidate);
                const double value = objective.ratio(config);
                trace.push_back(value);
                if (iter > 1 && value - previous < params.rel_tolerance * previous)
                    break;
                previous = value;
            }
            const double final_ratio = trace.back();
            return finish(id, std::move(config), std::move(beam), final_ratio, iter, std::move(trace));
        }
    }

    SchemeResult run_ao_ceo(const ChannelSet &channels, const LinkBudget &budget, const AoParams &params,
                            const RngStream &rng)
    {
        check_budget(channels, budget);
        RngStream init_rng = rng.derive(0);
        FrisConfig init = random_config(channels.num_locations(), budget.n_hat, budget.bits, init_rng, false);
        return alternate(SchemeId::ao_ceo, channels, budget, params, std::move(init),
                         [&](const Beamformer &beam, const FixedBeamObjective &, const FrisConfig &, std::size_t iter) {
                             CeoParams ceo = params.ceo;
                             ceo.rng = rng.derive(1, iter);
                             return solve_p3(channels, beam, budget.noise_power, budget.n_hat, budget.bits, ceo).config;
                         });
    }

    SchemeResult run_conventional_ris(const ChannelSet &channels, const LinkBudget &budget, const AoParams &params)
    {
        check_budget(channels, budget);
        const std::vector<std::size_t> block = central_block(channels.num_locations(), budget.n_hat);
        FrisConfig init = FrisConfig::from_active(channels.num_locations(), budget.bits, block);
        return alternate(SchemeId::conventional_ris, channels, budget, params, std::move(init),
                         [](const Beamformer &, const FixedBeamObjective &objective, const FrisConfig &config,
                            std::size_t) { return refine_phases(objective, config); });
    }

    SchemeResult run_random_selection_phase_opt(const ChannelSet &channels, const LinkBudget &budget,
                                                const AoParams &params, const RngStream &rng, bool optimize_phases)
    {
        check_budget(channels, budget);
        RngStream init_rng = rng.derive(0);
        FrisConfig init = random_config(channels.num_locations(), budget.n_hat, budget.bits, init_rng, true);
        return alternate(SchemeId::random_selection_phase_opt, channels, budget, params, std::move(init),
                         [&](const Beamformer &, const FixedBeamObjective &objective, const FrisConfig &config,
                             std::size_t) { return optimize_phases ? refine_phases(objective, config) : config; });
    }

    SchemeResult run_fris_random_phases(const ChannelSet &channels, const LinkBudget &budget, const AoParams &params,
                                        const RngStream &rng, RandomPhasesVariant variant)
    {
        check_budget(channels, budget);
        const std::size_t n = channels.num_locations();
        FrisConfig config;
        if (variant == RandomPhasesVariant::random_selection)
        {
            RngStream init_rng = rng.derive(0);
            config = random_config(n, budget.n_hat, budget.bits, init_rng, true);
        }
        else
        {
            AoParams search = params;
            search.ceo.final_phase_polish = false;
            const SchemeResult found = run_ao_ceo(channels, budget, search, rng.derive(3));
            config = found.config;
            RngStream phase_rng = rng.derive(2);
            for (std::size_t i = 0; i < n; ++i)
                if (config.selection[i])
                    config.phase_index[i] = static_cast<std::uint32_t>(phase_rng.uniform_index(config.levels()));
        }
        Beamformer beam = optimal_beam(channels, config, budget);
        const double ratio = FixedBeamObjective(channels, beam, budget.noise_power, budget.bits).ratio(config);
        return finish(SchemeId::random_phases, std::move(config), std::move(beam), ratio, 1, {ratio});
    }

    SchemeResult run_no_surface(const ChannelSet &channels, const LinkBudget &budget)
    {
        if (!(budget.power > 0.0) || !(budget.noise_power > 0.0))
            fail(ErrorCode::invalid_argument, "scheme: power and noise must be positive");
        Beamformer beam = solve_p2_subspace(channels.h_dB, channels.h_dE, budget.power, budget.noise_power);
        const double ratio = beam_ratio(channels.h_dB, channels.h_dE, beam.w, budget.noise_power);
        FrisConfig none(channels.num_locations(), budget.bits, 0);
        return finish(SchemeId::no_surface, std::move(none), std::move(beam), ratio, 1, {ratio});
    }
}
