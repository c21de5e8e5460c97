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

#include "fris/rng.hpp"

#include <cmath>
#include <numbers>

namespace fris
{
    std::uint64_t mix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    __extension__ typedef unsigned __int128 uint128;

    static inline std::uint64_t rotl(std::uint64_t x, int k)
    {
        return (x << k) | (x >> (64 - k));
    }

    RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id)
    {
        // SplitMix64 expansion of the combined key
        std::uint64_t sm = mix64(seed) ^ rotl(mix64(stream_id ^ 0x6a09e667f3bcc909ULL), 17);
        for (auto &word : state_)
        {
            sm += 0x9e3779b97f4a7c15ULL;
            word = mix64(sm);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 1;
    }

    RngStream RngStream::derive(std::uint64_t id) const
    {
        const std::uint64_t child_seed = mix64(mix64(seed_) + 0x243f6a8885a308d3ULL * (stream_id_ + 1));
        return RngStream(child_seed, id);
    }

    std::uint64_t RngStream::next_u64()
    {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    double RngStream::uniform()
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    std::uint64_t RngStream::uniform_index(std::uint64_t n)
    {
        // Lemire's multiply-and-reject
        uint128 m = static_cast<uint128>(next_u64()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n)
        {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold)
            {
                m = static_cast<uint128>(next_u64()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    std::complex<double> RngStream::complex_normal()
    {
        // Box-Muller in polar form: |z|^2 ~ Exp(1), uniform phase
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }
}
