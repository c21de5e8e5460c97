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

#ifndef FRIS_SCHEMES_HPP
#define FRIS_SCHEMES_HPP

#include "fris/ceo.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace fris
{
    enum class SchemeId
    {
        ao_ceo,
        random_selection_phase_opt,
        conventional_ris,
        random_phases,
        no_surface,
        ao_ceo_literal, // AO-CEO without per-sample phase refinement or final polish
    };

    inline constexpr std::array<SchemeId, 5> all_schemes = {
        SchemeId::ao_ceo, SchemeId::random_selection_phase_opt, SchemeId::conventional_ris,
        SchemeId::random_phases, SchemeId::no_surface};

    // Selectable by name but not part of the default comparison
    inline constexpr std::array<SchemeId, 1> extra_schemes = {SchemeId::ao_ceo_literal};

    std::string_view scheme_name(SchemeId id);
    std::optional<SchemeId> parse_scheme(std::string_view name);

    // How the "random phases" baseline picks its active elements
    enum class RandomPhasesVariant
    {
        random_selection,    // uniform subset, uniform phases
        optimized_selection, // subset found by AO-CEO without phase polish, phases redrawn uniformly
    };

    struct LinkBudget
    {
        double power = 0.1;         // P_AP in watts
        double noise_power = 1e-11; // sigma^2 in watts
        std::size_t n_hat = 16;
        unsigned bits = 3;
    };

    struct AoParams
    {
        std::size_t max_iters = 20; // I_AO
        double rel_tolerance = 1e-3;
        CeoParams ceo;
        void validate() const;
    };

    struct SchemeResult
    {
        SchemeId scheme = SchemeId::no_surface;
        double secrecy_rate = 0.0;
        double objective_ratio = 1.0;
        std::size_t iterations = 0;
        FrisConfig config;
        Beamformer beamformer;
        std::vector<double> trace; // objective ratio after each AO iteration
    };

    // 0-based indices of the n_hat contiguous locations centered on the grid
    std::vector<std::size_t> central_block(std::size_t num_locations, std::size_t n_hat);

    // Uniformly random n_hat-subset; phases uniform when random_phases, else all 0
    FrisConfig random_config(std::size_t num_locations, std::size_t n_hat, unsigned bits, RngStream &rng,
                             bool random_phases);

    // Alternating optimization: closed-form beamformer, then CEO over selection and phases.
    // Starts from a uniform random selection with zero phases. A CEO result that does not beat
    // the incumbent configuration under the new beamformer is discarded.
    SchemeResult run_ao_ceo(const ChannelSet &channels, const LinkBudget &budget, const AoParams &params,
                            const RngStream &rng);

    // Central contiguous block, phases by coordinate ascent, alternating with the beamformer
    SchemeResult run_conventional_ris(const ChannelSet &channels, const LinkBudget &budget, const AoParams &params);

    // Random subset with random initial phases, then alternating beamformer / phase refinement.
    // With optimize_phases false only the beamformer is optimized.
    SchemeResult run_random_selection_phase_opt(const ChannelSet &channels, const LinkBudget &budget,
                                                const AoParams &params, const RngStream &rng,
                                                bool optimize_phases = true);

    SchemeResult run_fris_random_phases(const ChannelSet &channels, const LinkBudget &budget, const AoParams &params,
                                        const RngStream &rng,
                                        RandomPhasesVariant variant = RandomPhasesVariant::random_selection);

    // Direct links only, optimal beamformer
    SchemeResult run_no_surface(const ChannelSet &channels, const LinkBudget &budget);
}

#endif
