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

#ifndef FRIS_CEO_HPP
#define FRIS_CEO_HPP

#include "fris/secrecy.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fris
{
    struct CeoParams
    {
        std::size_t sample_size = 0;    // K; 0 means 5 N
        double elite_ratio = 0.1;       // rho
        double smoothing = 0.7;         // alpha in (0, 1]
        std::size_t max_iters = 30;     // I_CEO
        std::size_t stagnation_patience = 5;
        double stagnation_tolerance = 1e-6; // relative improvement of the best ratio
        bool final_phase_polish = true; // one refine_phases pass on the returned configuration
        bool sample_phase_refine = true;  // refine_phases on every sample before it is scored
        RngStream rng{};

        std::size_t samples_for(std::size_t num_locations) const;
        std::size_t elite_count(std::size_t samples) const; // ceil(rho K)
        void validate(std::size_t num_locations) const;
    };

    struct SelectionPmf
    {
        std::vector<double> p;

        static SelectionPmf uniform(std::size_t n);
        static SelectionPmf uniform_over(std::span<const std::uint8_t> mask);

        std::size_t size() const { return p.size(); }
        bool valid(double tol = 1e-12) const;
    };

    // Draws n_hat distinct indices one at a time with probability proportional to the
    // remaining mass, then a uniform phase index for each drawn element.
    // Throws infeasible when fewer than n_hat entries carry positive mass.
    FrisConfig sample_config(const SelectionPmf &pmf, std::size_t n_hat, unsigned bits, RngStream &rng);

    // Reusable form of sample_config: the cumulative-mass tree is built once per PMF, so each
    // draw costs O(n_hat log N). Produces the same distribution as sample_config.
    class SelectionSampler
    {
    public:
        explicit SelectionSampler(const SelectionPmf &pmf);

        FrisConfig draw(std::size_t n_hat, unsigned bits, RngStream &rng) const;
        std::size_t size() const { return weight_.size(); }
        std::size_t positive_count() const { return positive_; }

    private:
        std::vector<double> weight_;
        std::vector<double> tree_; // Fenwick tree over weight_, 1-based
        std::size_t positive_ = 0;
        std::size_t top_bit_ = 0;
    };

    // Empirical inclusion frequency over the elites, normalized by K_e n_hat
    SelectionPmf update_pmf(std::span<const FrisConfig> elites, std::size_t num_locations, std::size_t n_hat);

    // (1 - alpha) prev + alpha hat
    SelectionPmf smooth_pmf(const SelectionPmf &prev, const SelectionPmf &hat, double alpha);

    // Stable descending order of objective values; ties keep the lower sample index first
    std::vector<std::size_t> elite_order(std::span<const double> values);

    struct P3Solution
    {
        FrisConfig config;
        double ratio = 0.0;
        std::size_t iterations = 0;
        std::vector<double> best_trace; // best ratio after each CEO iteration
    };

    // Cross-entropy search over (selection, phases) for a fixed beamformer. The best sample ever
    // evaluated is returned. selection_mask restricts the support of the sampling PMF.
    P3Solution solve_p3(const ChannelSet &channels, const Beamformer &beam, double noise_power, std::size_t n_hat,
                        unsigned bits, const CeoParams &params,
                        std::optional<std::span<const std::uint8_t>> selection_mask = std::nullopt);

    // Coordinate ascent over the phase of each active element with the selection frozen.
    // Each element takes the best of its 2^B phases (ties to the smallest index, moves only on strict
    // improvement); passes repeat until none changes or 20 passes are done.
    FrisConfig refine_phases(const ChannelSet &channels, const Beamformer &beam, double noise_power,
                             const FrisConfig &config);
    FrisConfig refine_phases(const FixedBeamObjective &objective, const FrisConfig &config);
}

#endif
