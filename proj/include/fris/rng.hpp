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

#ifndef FRIS_RNG_HPP
#define FRIS_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace fris
{
    // Reproducible random stream keyed by (seed, stream id).
    // The generator is xoshiro256** whose state is expanded from the key with SplitMix64.
    // Child streams are derived from the key alone, so any task can rebuild its stream
    // without knowing which worker runs it.
    class RngStream
    {
    public:
        RngStream(std::uint64_t seed = 0, std::uint64_t stream_id = 0);

        std::uint64_t seed() const { return seed_; }
        std::uint64_t stream_id() const { return stream_id_; }

        // Independent stream keyed by this stream's key and `id`; does not advance *this
        RngStream derive(std::uint64_t id) const;
        RngStream derive(std::uint64_t id_a, std::uint64_t id_b) const { return derive(id_a).derive(id_b); }

        std::uint64_t next_u64();
        double uniform();                               // [0, 1), 53-bit resolution
        std::uint64_t uniform_index(std::uint64_t n);    // unbiased draw from [0, n), n >= 1
        std::complex<double> complex_normal();        // CN(0, 1)

    private:
        std::uint64_t seed_;
        std::uint64_t stream_id_;
        std::array<std::uint64_t, 4> state_;
    };

    // SplitMix64 finalizer, exposed for hashing seeds and fingerprints
    std::uint64_t mix64(std::uint64_t x);
}

#endif
