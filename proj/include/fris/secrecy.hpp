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

#ifndef FRIS_SECRECY_HPP
#define FRIS_SECRECY_HPP

#include "fris/channel.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace fris
{
    // Surface configuration: which grid locations are active and the discrete phase of each.
    // Phases are stored as indices k in [0, 2^bits) meaning theta = 2 pi k / 2^bits.
    struct FrisConfig
    {
        std::vector<std::uint8_t> selection;   // s_n in {0, 1}
        std::vector<std::uint32_t> phase_index; // meaningful where selection is set, 0 elsewhere
        unsigned bits = 1;
        std::size_t budget = 0; // required number of active elements

        FrisConfig() = default;
        FrisConfig(std::size_t num_locations, unsigned bits, std::size_t budget);

        // Config with the given active indices; phases default to 0
        static FrisConfig from_active(std::size_t num_locations, unsigned bits, std::span<const std::size_t> active,
                                      std::span<const std::uint32_t> phases = {});

        std::size_t size() const { return selection.size(); }
        std::uint32_t levels() const { return std::uint32_t{1} << bits; }
        std::size_t active_count() const;
        std::vector<std::size_t> active_indices() const;
        double phase(std::size_t n) const;

        // Throws invalid_argument if the cardinality or phase-domain constraints are violated
        void validate() const;

        friend bool operator==(const FrisConfig &, const FrisConfig &) = default;
    };

    struct Beamformer
    {
        ComplexVector w;
        double power_budget = 0.0;

        double power() const { return norm2(w); }
        bool feasible() const { return power() <= power_budget * (1.0 + 1e-9); }
    };

    // h with h^H = direct^H + reflect^H Phi G, Phi = diag(s_n e^{j theta_n})
    ComplexVector effective_channel(std::span<const cdouble> direct, std::span<const cdouble> reflect,
                                    const ComplexMatrix &g, const FrisConfig &config);

    // |h^H w|^2 / noise
    double snr(std::span<const cdouble> h_eff, const Beamformer &beam, double noise_power);

    // [log2(1 + gamma_b) - log2(1 + gamma_e)]^+
    double secrecy_rate(double gamma_bob, double gamma_eve);

    struct LinkSnr
    {
        double bob = 0.0;
        double eve = 0.0;
    };

    LinkSnr link_snr(const ChannelSet &channels, const FrisConfig &config, const Beamformer &beam, double noise_power);

    // (1 + gamma_b) / (1 + gamma_e)
    double objective_ratio(const ChannelSet &channels, const FrisConfig &config, const Beamformer &beam,
                           double noise_power);

    inline double rate_from_ratio(double ratio) { return ratio > 1.0 ? std::log2(ratio) : 0.0; }

    // Objective evaluator for a fixed beamformer. Folds G w and the reflect channels into one
    // complex coefficient per grid location, so each configuration costs O(active elements):
    //   h_B^H w = h_dB^H w + sum_{n active} e^{j theta_n} conj(h_rB[n]) (G w)[n]
    class FixedBeamObjective
    {
    public:
        FixedBeamObjective(const ChannelSet &channels, const Beamformer &beam, double noise_power, unsigned bits);

        double ratio(const FrisConfig &config) const;
        double ratio(cdouble bob_sum, cdouble eve_sum) const
        {
            return (1.0 + std::norm(bob_sum) * inv_noise_) / (1.0 + std::norm(eve_sum) * inv_noise_);
        }

        double inverse_noise() const { return inv_noise_; }
        cdouble direct_bob() const { return direct_bob_; }
        cdouble direct_eve() const { return direct_eve_; }
        std::span<const cdouble> coeff_bob() const { return coeff_bob_; }
        std::span<const cdouble> coeff_eve() const { return coeff_eve_; }
        std::span<const cdouble> phasors() const { return phasors_; }
        unsigned bits() const { return bits_; }

    private:
        cdouble direct_bob_;
        cdouble direct_eve_;
        ComplexVector coeff_bob_;
        ComplexVector coeff_eve_;
        ComplexVector phasors_;
        double inv_noise_;
        unsigned bits_;
    };
}

#endif
