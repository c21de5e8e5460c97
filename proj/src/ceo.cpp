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

#include "fris/ceo.hpp"
#include "fris/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace fris
{
    std::size_t CeoParams::samples_for(std::size_t num_locations) const
    {
        return sample_size != 0 ? sample_size : 5 * num_locations;
    }

    std::size_t CeoParams::elite_count(std::size_t samples) const
    {
        const auto ke = static_cast<std::size_t>(std::ceil(elite_ratio * static_cast<double>(samples) - 1e-9));
        return std::clamp<std::size_t>(ke, 1, samples);
    }

    void CeoParams::validate(std::size_t num_locations) const
    {
        if (samples_for(num_locations) < 2)
            fail(ErrorCode::invalid_argument, "CEO: sample size must be at least 2");
        if (!(elite_ratio > 0.0 && elite_ratio <= 1.0))
            fail(ErrorCode::invalid_argument, "CEO: elite ratio must lie in (0, 1]");
        if (!(smoothing > 0.0 && smoothing <= 1.0))
            fail(ErrorCode::invalid_argument, "CEO: smoothing must lie in (0, 1]");
        if (max_iters < 1)
            fail(ErrorCode::invalid_argument, "CEO: max_iters must be at least 1");
        if (!(stagnation_tolerance >= 0.0))
            fail(ErrorCode::invalid_argument, "CEO: stagnation tolerance must be non-negative");
    }

    SelectionPmf SelectionPmf::uniform(std::size_t n)
    {
        if (n == 0)
            fail(ErrorCode::invalid_argument, "SelectionPmf: empty support");
        return {std::vector<double>(n, 1.0 / static_cast<double>(n))};
    }

    SelectionPmf SelectionPmf::uniform_over(std::span<const std::uint8_t> mask)
    {
        const auto count = static_cast<std::size_t>(std::count_if(mask.begin(), mask.end(), [](auto m) { return m != 0; }));
        if (count == 0)
            fail(ErrorCode::infeasible, "SelectionPmf: selection mask is empty");
        SelectionPmf out{std::vector<double>(mask.size(), 0.0)};
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i])
                out.p[i] = 1.0 / static_cast<double>(count);
        return out;
    }

    bool SelectionPmf::valid(double tol) const
    {
        double sum = 0.0;
        for (double v : p)
        {
            if (!(v >= 0.0))
                return false;
            sum += v;
        }
        return std::abs(sum - 1.0) <= tol;
    }

    SelectionSampler::SelectionSampler(const SelectionPmf &pmf) : weight_(pmf.p), tree_(pmf.p.size() + 1, 0.0)
    {
        const std::size_t n = weight_.size();
        for (std::size_t i = 0; i < n; ++i)
        {
            weight_[i] = weight_[i] > 0.0 ? weight_[i] : 0.0;
            positive_ += weight_[i] > 0.0;
            tree_[i + 1] += weight_[i];
            const std::size_t parent = (i + 1) + ((i + 1) & (~(i + 1) + 1));
            if (parent <= n)
                tree_[parent] += tree_[i + 1];
        }
        top_bit_ = 1;
        while (top_bit_ * 2 <= n)
            top_bit_ *= 2;
    }

    FrisConfig SelectionSampler::draw(std::size_t n_hat, unsigned bits, RngStream &rng) const
    {
        const std::size_t n = weight_.size();
        if (bits < 1 || bits > 16)
            fail(ErrorCode::invalid_argument, "sample_config: bits must be in [1, 16]");
        if (positive_ < n_hat)
            fail(ErrorCode::infeasible, "sample_config: only " + std::to_string(positive_) +
                                            " locations carry probability mass, " + std::to_string(n_hat) + " required");

        std::vector<double> weight(weight_);
        std::vector<double> tree(tree_);
        FrisConfig config(n, bits, n_hat);
        for (std::size_t draw = 0; draw < n_hat; ++draw)
        {
            double total = 0.0;
            for (std::size_t i = n; i > 0; i -= i & (~i + 1))
                total += tree[i];
            const double u = rng.uniform() * total;

            // First index whose prefix mass exceeds u
            std::size_t pos = 0;
            double rem = u;
            for (std::size_t step = top_bit_; step > 0; step /= 2)
                if (pos + step <= n && tree[pos + step] <= rem)
                {
                    pos += step;
                    rem -= tree[pos];
                }
            std::size_t chosen = pos;
            if (chosen >= n || weight[chosen] <= 0.0)
            {
                // Rounding pushed u onto a spent or massless slot; take the nearest live one
                chosen = n;
                for (std::size_t i = std::min(pos, n - 1) + 1; i-- > 0;)
                    if (weight[i] > 0.0)
                    {
                        chosen = i;
                        break;
                    }
                for (std::size_t i = pos; chosen == n && i < n; ++i)
                    if (weight[i] > 0.0)
                        chosen = i;
            }
            config.selection[chosen] = 1;
            for (std::size_t i = chosen + 1; i <= n; i += i & (~i + 1))
                tree[i] -= weight[chosen];
            weight[chosen] = 0.0;
        }
        const std::uint32_t levels = config.levels();
        for (std::size_t i = 0; i < n; ++i)
            if (config.selection[i])
                config.phase_index[i] = static_cast<std::uint32_t>(rng.uniform_index(levels));
        return config;
    }

    FrisConfig sample_config(const SelectionPmf &pmf, std::size_t n_hat, unsigned bits, RngStream &rng)
    {
        return SelectionSampler(pmf).draw(n_hat, bits, rng);
    }

    SelectionPmf update_pmf(std::span<const FrisConfig> elites, std::size_t num_locations, std::size_t n_hat)
    {
        if (elites.empty())
            fail(ErrorCode::invalid_argument, "update_pmf: elite set is empty");
        if (n_hat == 0)
            fail(ErrorCode::invalid_argument, "update_pmf: n_hat must be positive");
        std::vector<double> counts(num_locations, 0.0);
        for (const auto &e : elites)
        {
            if (e.size() != num_locations || e.active_count() != n_hat)
                fail(ErrorCode::invalid_argument, "update_pmf: elite does not select exactly n_hat of N locations");
            for (std::size_t i = 0; i < num_locations; ++i)
                if (e.selection[i])
                    counts[i] += 1.0;
        }
        const double scale = 1.0 / (static_cast<double>(elites.size()) * static_cast<double>(n_hat));
        for (auto &c : counts)
            c *= scale;
        return {std::move(counts)};
    }

    SelectionPmf smooth_pmf(const SelectionPmf &prev, const SelectionPmf &hat, double alpha)
    {
        if (prev.size() != hat.size())
            fail(ErrorCode::invalid_argument, "smooth_pmf: dimension mismatch");
        if (!(alpha > 0.0 && alpha <= 1.0))
            fail(ErrorCode::invalid_argument, "smooth_pmf: alpha must lie in (0, 1]");
        SelectionPmf out{std::vector<double>(prev.size())};
        for (std::size_t i = 0; i < prev.size(); ++i)
            out.p[i] = (1.0 - alpha) * prev.p[i] + alpha * hat.p[i];
        return out;
    }

    std::vector<std::size_t> elite_order(std::span<const double> values)
    {
        std::vector<std::size_t> order(values.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
        return order;
    }

    namespace
    {
        // Floors the PMF at 1e-12 on its support and renormalizes, so smoothing never starves
        // a location completely while masked-out locations stay at zero
        SelectionPmf floored(const SelectionPmf &pmf, std::span<const std::uint8_t> support)
        {
            SelectionPmf out = pmf;
            double sum = 0.0;
            for (std::size_t i = 0; i < out.p.size(); ++i)
            {
                out.p[i] = support[i] ? std::max(out.p[i], 1e-12) : 0.0;
                sum += out.p[i];
            }
            for (auto &v : out.p)
                v /= sum;
            return out;
        }
    }

    P3Solution solve_p3(const ChannelSet &channels, const Beamformer &beam, double noise_power, std::size_t n_hat,
                        unsigned bits, const CeoParams &params, std::optional<std::span<const std::uint8_t>> selection_mask)
    {
        const std::size_t n = channels.num_locations();
        params.validate(n);
        if (n_hat < 1 || n_hat > n)
            fail(ErrorCode::infeasible, "solve_p3: need 1 <= n_hat <= N");

        std::vector<std::uint8_t> support(n, 1);
        if (selection_mask)
        {
            if (selection_mask->size() != n)
                fail(ErrorCode::invalid_argument, "solve_p3: selection mask length differs from N");
            support.assign(selection_mask->begin(), selection_mask->end());
        }
        SelectionPmf pmf = SelectionPmf::uniform_over(support);

        const FixedBeamObjective objective(channels, beam, noise_power, bits);
        const std::size_t k_samples = params.samples_for(n);
        const std::size_t k_elite = params.elite_count(k_samples);

        std::vector<FrisConfig> samples(k_samples);
        std::vector<double> values(k_samples);
        std::vector<FrisConfig> elites(k_elite);

        P3Solution best;
        best.ratio = -std::numeric_limits<double>::infinity();
        std::size_t stalled = 0;

        for (std::size_t t = 0; t < params.max_iters; ++t)
        {
            const SelectionSampler sampler(floored(pmf, support));
            // Each sample owns a stream keyed by (iteration, sample), independent of evaluation order
            for (std::size_t k = 0; k < k_samples; ++k)
            {
                RngStream rng = params.rng.derive(t, k);
                samples[k] = sampler.draw(n_hat, bits, rng);
                if (params.sample_phase_refine)
                    samples[k] = refine_phases(objective, samples[k]);
                values[k] = objective.ratio(samples[k]);
            }

            const double previous_best = best.ratio;
            for (std::size_t k = 0; k < k_samples; ++k)
                if (values[k] > best.ratio)
                {
                    best.ratio = values[k];
                    best.config = samples[k];
                }

            const std::vector<std::size_t> order = elite_order(values);
            for (std::size_t e = 0; e < k_elite; ++e)
                elites[e] = samples[order[e]];
            pmf = smooth_pmf(pmf, update_pmf(elites, n, n_hat), params.smoothing);

            best.best_trace.push_back(best.ratio);
            best.iterations = t + 1;

            if (t > 0)
            {
                if (best.ratio - previous_best <= params.stagnation_tolerance * std::abs(previous_best))
                    ++stalled;
                else
                    stalled = 0;
                if (params.stagnation_patience > 0 && stalled >= params.stagnation_patience)
                    break;
            }
        }

        if (params.final_phase_polish)
        {
            best.config = refine_phases(objective, best.config);
            best.ratio = objective.ratio(best.config);
        }
        return best;
    }

    FrisConfig refine_phases(const FixedBeamObjective &objective, const FrisConfig &config)
    {
        config.validate();
        if (config.size() != objective.coeff_bob().size() || config.bits != objective.bits())
            fail(ErrorCode::invalid_argument, "refine_phases: configuration does not match the objective");

        FrisConfig out = config;
        const std::vector<std::size_t> active = out.active_indices();
        const auto cb = objective.coeff_bob();
        const auto ce = objective.coeff_eve();
        const auto ph = objective.phasors();
        const std::size_t levels = ph.size();

        std::vector<double> re(levels), im(levels), num(levels), den(levels);
        for (std::size_t k = 0; k < levels; ++k)
        {
            re[k] = ph[k].real();
            im[k] = ph[k].imag();
        }
        const double g = objective.inverse_noise();

        for (int pass = 0; pass < 20; ++pass)
        {
            cdouble bob = objective.direct_bob(), eve = objective.direct_eve();
            for (std::size_t n : active)
            {
                bob += ph[out.phase_index[n]] * cb[n];
                eve += ph[out.phase_index[n]] * ce[n];
            }

            bool changed = false;
            for (std::size_t n : active)
            {
                const std::uint32_t current = out.phase_index[n];
                const cdouble bob_rest = bob - ph[current] * cb[n];
                const cdouble eve_rest = eve - ph[current] * ce[n];
                // |r + e^{j t} c|^2 = |r|^2 + |c|^2 + 2 Re(e^{j t} conj(r) c)
                const cdouble ab = std::conj(bob_rest) * cb[n];
                const cdouble ae = std::conj(eve_rest) * ce[n];
                const double nb = 1.0 + g * (std::norm(bob_rest) + std::norm(cb[n]));
                const double ne = 1.0 + g * (std::norm(eve_rest) + std::norm(ce[n]));
                const double gb = 2.0 * g, ar = ab.real(), ai = ab.imag(), er = ae.real(), ei = ae.imag();
                for (std::size_t k = 0; k < levels; ++k)
                {
                    num[k] = nb + gb * (re[k] * ar - im[k] * ai);
                    den[k] = ne + gb * (re[k] * er - im[k] * ei);
                }
                // Denominators are positive, so ratios compare by cross-multiplication
                std::uint32_t best_k = 0;
                for (std::size_t k = 1; k < levels; ++k)
                    if (num[k] * den[best_k] > num[best_k] * den[k])
                        best_k = static_cast<std::uint32_t>(k);
                if (num[best_k] * den[current] > num[current] * den[best_k])
                {
                    out.phase_index[n] = best_k;
                    changed = true;
                }
                bob = bob_rest + ph[out.phase_index[n]] * cb[n];
                eve = eve_rest + ph[out.phase_index[n]] * ce[n];
            }
            if (!changed)
                break;
        }
        return out;
    }

    FrisConfig refine_phases(const ChannelSet &channels, const Beamformer &beam, double noise_power,
                             const FrisConfig &config)
    {
        return refine_phases(FixedBeamObjective(channels, beam, noise_power, config.bits), config);
    }
}
