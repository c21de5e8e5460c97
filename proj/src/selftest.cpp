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

#include "fris/selftest.hpp"
#include "fris/beamform.hpp"
#include "fris/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace fris
{
    namespace
    {
        std::string fmt(const char *format, double a, double b = 0.0)
        {
            char buf[160];
            std::snprintf(buf, sizeof buf, format, a, b);
            return buf;
        }

        double j0_quadrature(double x)
        {
            // trapezoid rule is spectrally accurate for this periodic integrand
            const int n = 4000;
            double s = 0.0;
            for (int k = 0; k <= n; ++k)
            {
                const double t = std::numbers::pi * k / n;
                const double w = (k == 0 || k == n) ? 0.5 : 1.0;
                s += w * std::cos(x * std::sin(t));
            }
            return s / n;
        }

        ChannelSet small_instance(std::uint64_t seed, std::size_t n, std::size_t m)
        {
            SystemGeometry g;
            g.num_locations = n;
            return realize_channels(g, PathLossModel{}, FadingParams{}, m, RngStream(seed, 77));
        }

        // Best objective over every (selection, phase) pair, each with its own optimal beamformer
        double exhaustive_joint(const ChannelSet &ch, const LinkBudget &b)
        {
            const std::size_t n = ch.num_locations();
            double best = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::uint32_t pi = 0; pi < 2; ++pi)
                        for (std::uint32_t pj = 0; pj < 2; ++pj)
                        {
                            const std::size_t idx[2] = {i, j};
                            const std::uint32_t ph[2] = {pi, pj};
                            const FrisConfig c = FrisConfig::from_active(n, 1, idx, ph);
                            const auto hb = effective_channel(ch.h_dB, ch.h_rB, ch.G, c);
                            const auto he = effective_channel(ch.h_dE, ch.h_rE, ch.G, c);
                            const Beamformer w = solve_p2(hb, he, b.power, b.noise_power);
                            best = std::max(best, objective_ratio(ch, c, w, b.noise_power));
                        }
            return best;
        }
    }

    std::vector<SelftestCheck> run_selftest()
    {
        std::vector<SelftestCheck> out;

        {
            double worst = 0.0;
            for (int k = 0; k < 50; ++k)
            {
                const double x = 50.0 * k / 49.0;
                worst = std::max(worst, std::abs(bessel_j0(x) - j0_quadrature(x)));
            }
            out.push_back({"bessel_j0 vs quadrature on [0, 50]", worst <= 1e-8, fmt("max abs error %.3g", worst)});
        }

        {
            const ComplexMatrix r = build_correlation(50, 0.125);
            const ComplexMatrix l = psd_matrix_root(r);
            const double err = (l * l.adjoint() - r).frobenius_norm() / r.frobenius_norm();
            out.push_back({"Jakes root reconstruction N=50", err <= 1e-8, fmt("relative error %.3g", err)});
        }

        {
            RngStream rng(2024, 1);
            double worst_gap = 0.0, worst_mismatch = 0.0;
            for (int inst = 0; inst < 10; ++inst)
            {
                const ComplexVector hb = sample_complex_gaussian(rng, 4);
                const ComplexVector he = sample_complex_gaussian(rng, 4);
                const Beamformer full = solve_p2(hb, he, 1.0, 0.5);
                const Beamformer sub = solve_p2_subspace(hb, he, 1.0, 0.5);
                const double best = beam_ratio(hb, he, full.w, 0.5);
                worst_mismatch = std::max(worst_mismatch, std::abs(beam_ratio(hb, he, sub.w, 0.5) - best) / best);
                for (int s = 0; s < 10000; ++s)
                {
                    ComplexVector v = sample_complex_gaussian(rng, 4);
                    const double nv = std::sqrt(norm2(v));
                    for (auto &x : v)
                        x /= nv;
                    worst_gap = std::max(worst_gap, beam_ratio(hb, he, v, 0.5) - best);
                }
            }
            out.push_back({"beamformer beats random search", worst_gap <= 1e-9, fmt("max excess %.3g", worst_gap)});
            out.push_back({"full and subspace beamformers agree", worst_mismatch <= 1e-9,
                           fmt("max relative mismatch %.3g", worst_mismatch)});
        }

        {
            // CEO against enumeration of all 60 configurations, fixed beamformer
            int hits = 0, exceed = 0;
            for (std::uint64_t seed = 0; seed < 20; ++seed)
            {
                const ChannelSet ch = small_instance(seed, 6, 2);
                const Beamformer w = solve_p2(ch.h_dB, ch.h_dE, 0.1, 1e-11);
                const FixedBeamObjective obj(ch, w, 1e-11, 1);
                double best = 0.0;
                for (std::size_t i = 0; i < 6; ++i)
                    for (std::size_t j = i + 1; j < 6; ++j)
                        for (std::uint32_t p = 0; p < 4; ++p)
                        {
                            const std::size_t idx[2] = {i, j};
                            const std::uint32_t ph[2] = {p & 1u, p >> 1};
                            best = std::max(best, obj.ratio(FrisConfig::from_active(6, 1, idx, ph)));
                        }
                CeoParams params;
                params.rng = RngStream(seed, 5);
                const P3Solution sol = solve_p3(ch, w, 1e-11, 2, 1, params);
                hits += sol.ratio >= best * (1.0 - 1e-12);
                exceed += sol.ratio > best * (1.0 + 1e-12);
            }
            out.push_back({"CEO finds exhaustive optimum (N=6, N_hat=2, B=1)", hits >= 19 && exceed == 0,
                           fmt("%.0f of 20 optimal, %.0f exceed", hits, exceed)});
        }

        {
            int close = 0, exceed = 0;
            const LinkBudget b{0.1, 1e-11, 2, 1};
            for (std::uint64_t seed = 0; seed < 20; ++seed)
            {
                const ChannelSet ch = small_instance(100 + seed, 6, 2);
                const double best = exhaustive_joint(ch, b);
                const SchemeResult r = run_ao_ceo(ch, b, AoParams{}, RngStream(seed, 9));
                close += r.objective_ratio >= 0.98 * best;
                exceed += r.objective_ratio > best * (1.0 + 1e-9);
            }
            out.push_back({"AO-CEO within 2% of joint optimum", close >= 18 && exceed == 0,
                           fmt("%.0f of 20 within 2%%, %.0f exceed", close, exceed)});
        }

        {
            const ChannelSet ch = small_instance(7, 12, 4);
            const Beamformer w = solve_p2(ch.h_dB, ch.h_dE, 0.1, 1e-11);
            RngStream rng(7, 3);
            const FrisConfig start = random_config(12, 4, 2, rng, true);
            const FrisConfig once = refine_phases(ch, w, 1e-11, start);
            const FrisConfig twice = refine_phases(ch, w, 1e-11, once);
            out.push_back({"phase refinement reaches a fixed point", once == twice, once == twice ? "stable" : "changed"});
        }
        return out;
    }
}
