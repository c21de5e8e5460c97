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

#include "fris/beamform.hpp"
#include "fris/error.hpp"

#include <cmath>
#include <iostream>
#include <mutex>

namespace fris
{
    namespace
    {
        void check_inputs(std::span<const cdouble> h_bob, std::span<const cdouble> h_eve, double power,
                          double noise_power)
        {
            if (h_bob.empty() || h_bob.size() != h_eve.size())
                fail(ErrorCode::invalid_argument, "solve_p2: channel vectors must be nonempty and equal in length");
            if (!(power > 0.0) || !(noise_power > 0.0))
                fail(ErrorCode::invalid_argument, "solve_p2: power and noise must be positive");
        }

        void warn_degenerate()
        {
            static std::once_flag flag;
            std::call_once(flag, [] {
                std::cerr << "fris: warning: zero legitimate channel, beamformer chosen orthogonal to the eavesdropper\n";
            });
        }

        // Deterministic unit vector orthogonal to v (or e_1 when v is zero or M = 1)
        ComplexVector orthogonal_unit(std::span<const cdouble> v)
        {
            const std::size_t m = v.size();
            ComplexVector out(m, 0.0);
            const double nv = std::sqrt(norm2(v));
            if (m == 1 || nv == 0.0)
            {
                out[0] = 1.0;
                return out;
            }
            std::size_t k = 0;
            for (std::size_t i = 1; i < m; ++i)
                if (std::abs(v[i]) < std::abs(v[k]))
                    k = i;
            // e_k minus its projection onto v
            const cdouble proj = std::conj(v[k]) / (nv * nv);
            for (std::size_t i = 0; i < m; ++i)
                out[i] = -v[i] * proj;
            out[k] += 1.0;
            const double nrm = std::sqrt(norm2(out));
            for (auto &x : out)
                x /= nrm;
            apply_phase_convention(out);
            return out;
        }

        Beamformer scaled(ComplexVector unit_w, double power)
        {
            const double amp = std::sqrt(power);
            for (auto &x : unit_w)
                x *= amp;
            return {std::move(unit_w), power};
        }

        bool all_zero(std::span<const cdouble> v)
        {
            for (const auto &x : v)
                if (x != cdouble(0.0))
                    return false;
            return true;
        }
    }

    double beam_ratio(std::span<const cdouble> h_bob, std::span<const cdouble> h_eve, std::span<const cdouble> w,
                      double noise_power)
    {
        return (noise_power + std::norm(inner(h_bob, w))) / (noise_power + std::norm(inner(h_eve, w)));
    }

    Beamformer solve_p2(std::span<const cdouble> h_bob, std::span<const cdouble> h_eve, double power,
                        double noise_power)
    {
        check_inputs(h_bob, h_eve, power, noise_power);
        if (all_zero(h_bob))
        {
            warn_degenerate();
            return scaled(orthogonal_unit(h_eve), power);
        }
        // Dividing both forms by the noise leaves the quotient unchanged
        const double snr_scale = power / noise_power;
        const std::size_t m = h_bob.size();
        ComplexMatrix a = ComplexMatrix::identity(m), b = ComplexMatrix::identity(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
            {
                a(i, j) += snr_scale * h_bob[i] * std::conj(h_bob[j]);
                b(i, j) += snr_scale * h_eve[i] * std::conj(h_eve[j]);
            }
        RayleighMax best = max_generalized_rayleigh(a, b);
        return scaled(std::move(best.vector), power);
    }

    Beamformer solve_p2_subspace(std::span<const cdouble> h_bob, std::span<const cdouble> h_eve, double power,
                                 double noise_power)
    {
        check_inputs(h_bob, h_eve, power, noise_power);
        const std::size_t m = h_bob.size();
        if (all_zero(h_bob))
        {
            warn_degenerate();
            return scaled(orthogonal_unit(h_eve), power);
        }
        if (m == 1)
            return scaled(ComplexVector{1.0}, power);

        const double nb = std::sqrt(norm2(h_bob));
        ComplexVector q1(m);
        for (std::size_t i = 0; i < m; ++i)
            q1[i] = h_bob[i] / nb;
        const cdouble along = inner(q1, h_eve);
        ComplexVector r(m);
        for (std::size_t i = 0; i < m; ++i)
            r[i] = h_eve[i] - along * q1[i];
        const double nr = std::sqrt(norm2(r));
        const double ne = std::sqrt(norm2(h_eve));

        if (nr <= 1e-10 * ne || ne == 0.0)
        {
            // h_E = c h_B: matched filter when |c| < 1, otherwise any direction orthogonal to h_B
            const double c_mag = std::abs(along) / nb;
            if (c_mag < 1.0)
            {
                apply_phase_convention(q1);
                return scaled(std::move(q1), power);
            }
            return scaled(orthogonal_unit(h_bob), power);
        }

        ComplexVector q2(m);
        for (std::size_t i = 0; i < m; ++i)
            q2[i] = r[i] / nr;

        // Channels expressed in the orthonormal basis {q1, q2}
        const double snr_scale = power / noise_power;
        const cdouble a2[2] = {nb, 0.0};
        const cdouble b2[2] = {along, nr};
        ComplexMatrix a = ComplexMatrix::identity(2), b = ComplexMatrix::identity(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
            {
                a(i, j) += snr_scale * a2[i] * std::conj(a2[j]);
                b(i, j) += snr_scale * b2[i] * std::conj(b2[j]);
            }
        const RayleighMax best = max_generalized_rayleigh(a, b);

        ComplexVector w(m);
        for (std::size_t i = 0; i < m; ++i)
            w[i] = best.vector[0] * q1[i] + best.vector[1] * q2[i];
        const double nw = std::sqrt(norm2(w));
        for (auto &x : w)
            x /= nw;
        apply_phase_convention(w);
        return scaled(std::move(w), power);
    }
}
