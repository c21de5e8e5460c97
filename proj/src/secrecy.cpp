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

#include "fris/secrecy.hpp"
#include "fris/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fris
{
    FrisConfig::FrisConfig(std::size_t num_locations, unsigned bits_, std::size_t budget_)
        : selection(num_locations, 0), phase_index(num_locations, 0), bits(bits_), budget(budget_)
    {
    }

    FrisConfig FrisConfig::from_active(std::size_t num_locations, unsigned bits, std::span<const std::size_t> active,
                                       std::span<const std::uint32_t> phases)
    {
        if (!phases.empty() && phases.size() != active.size())
            fail(ErrorCode::invalid_argument, "FrisConfig::from_active: one phase per active index required");
        FrisConfig c(num_locations, bits, active.size());
        for (std::size_t i = 0; i < active.size(); ++i)
        {
            if (active[i] >= num_locations)
                fail(ErrorCode::invalid_argument, "FrisConfig::from_active: index out of range");
            c.selection[active[i]] = 1;
            c.phase_index[active[i]] = phases.empty() ? 0 : phases[i];
        }
        return c;
    }

    std::size_t FrisConfig::active_count() const
    {
        return static_cast<std::size_t>(std::count(selection.begin(), selection.end(), std::uint8_t{1}));
    }

    std::vector<std::size_t> FrisConfig::active_indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(budget);
        for (std::size_t n = 0; n < selection.size(); ++n)
            if (selection[n])
                out.push_back(n);
        return out;
    }

    double FrisConfig::phase(std::size_t n) const
    {
        return 2.0 * std::numbers::pi * static_cast<double>(phase_index[n]) / static_cast<double>(levels());
    }

    void FrisConfig::validate() const
    {
        if (bits < 1 || bits > 16)
            fail(ErrorCode::invalid_argument, "FrisConfig: bits must be in [1, 16]");
        if (phase_index.size() != selection.size())
            fail(ErrorCode::invalid_argument, "FrisConfig: selection and phase vectors differ in length");
        for (std::size_t n = 0; n < selection.size(); ++n)
        {
            if (selection[n] > 1)
                fail(ErrorCode::invalid_argument, "FrisConfig: selection entries must be 0 or 1");
            if (phase_index[n] >= levels())
                fail(ErrorCode::invalid_argument, "FrisConfig: phase index outside [0, 2^bits)");
        }
        if (active_count() != budget)
            fail(ErrorCode::invalid_argument, "FrisConfig: " + std::to_string(active_count()) +
                                                  " active elements, budget is " + std::to_string(budget));
    }

    ComplexVector effective_channel(std::span<const cdouble> direct, std::span<const cdouble> reflect,
                                    const ComplexMatrix &g, const FrisConfig &config)
    {
        const std::size_t m = direct.size(), n = reflect.size();
        if (g.rows() != n || g.cols() != m || config.size() != n || config.phase_index.size() != n)
            fail(ErrorCode::invalid_argument, "effective_channel: dimension mismatch");
        // h = direct + G^H Phi^H reflect
        ComplexVector h(direct.begin(), direct.end());
        for (std::size_t i = 0; i < n; ++i)
        {
            if (!config.selection[i])
                continue;
            const cdouble weight = std::polar(1.0, -config.phase(i)) * reflect[i];
            const auto g_row = g.row(i);
            for (std::size_t j = 0; j < m; ++j)
                h[j] += weight * std::conj(g_row[j]);
        }
        return h;
    }

    double snr(std::span<const cdouble> h_eff, const Beamformer &beam, double noise_power)
    {
        if (!(noise_power > 0.0))
            fail(ErrorCode::invalid_argument, "snr: noise power must be positive");
        return std::norm(inner(h_eff, beam.w)) / noise_power;
    }

    double secrecy_rate(double gamma_bob, double gamma_eve)
    {
        return std::max(0.0, std::log2(1.0 + gamma_bob) - std::log2(1.0 + gamma_eve));
    }

    LinkSnr link_snr(const ChannelSet &channels, const FrisConfig &config, const Beamformer &beam, double noise_power)
    {
        const ComplexVector hb = effective_channel(channels.h_dB, channels.h_rB, channels.G, config);
        const ComplexVector he = effective_channel(channels.h_dE, channels.h_rE, channels.G, config);
        return {snr(hb, beam, noise_power), snr(he, beam, noise_power)};
    }

    double objective_ratio(const ChannelSet &channels, const FrisConfig &config, const Beamformer &beam,
                           double noise_power)
    {
        const LinkSnr s = link_snr(channels, config, beam, noise_power);
        return (1.0 + s.bob) / (1.0 + s.eve);
    }

    FixedBeamObjective::FixedBeamObjective(const ChannelSet &channels, const Beamformer &beam, double noise_power,
                                           unsigned bits)
        : inv_noise_(1.0 / noise_power), bits_(bits)
    {
        if (!(noise_power > 0.0))
            fail(ErrorCode::invalid_argument, "FixedBeamObjective: noise power must be positive");
        if (bits < 1 || bits > 16)
            fail(ErrorCode::invalid_argument, "FixedBeamObjective: bits must be in [1, 16]");
        direct_bob_ = inner(channels.h_dB, beam.w);
        direct_eve_ = inner(channels.h_dE, beam.w);
        const ComplexVector gw = channels.G * std::span<const cdouble>(beam.w);
        const std::size_t n = gw.size();
        coeff_bob_.resize(n);
        coeff_eve_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            coeff_bob_[i] = std::conj(channels.h_rB[i]) * gw[i];
            coeff_eve_[i] = std::conj(channels.h_rE[i]) * gw[i];
        }
        const std::size_t levels = std::size_t{1} << bits;
        phasors_.resize(levels);
        for (std::size_t k = 0; k < levels; ++k)
            phasors_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(levels));
    }

    double FixedBeamObjective::ratio(const FrisConfig &config) const
    {
        if (config.size() != coeff_bob_.size() || config.bits != bits_)
            fail(ErrorCode::invalid_argument, "FixedBeamObjective: configuration does not match the channel");
        cdouble bob = direct_bob_, eve = direct_eve_;
        for (std::size_t i = 0; i < config.size(); ++i)
        {
            if (!config.selection[i])
                continue;
            if (config.phase_index[i] >= phasors_.size())
                fail(ErrorCode::invalid_argument, "FixedBeamObjective: phase index outside [0, 2^bits)");
            const cdouble ph = phasors_[config.phase_index[i]];
            bob += ph * coeff_bob_[i];
            eve += ph * coeff_eve_[i];
        }
        return ratio(bob, eve);
    }
}
