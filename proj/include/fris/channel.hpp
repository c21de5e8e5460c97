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

#ifndef FRIS_CHANNEL_HPP
#define FRIS_CHANNEL_HPP

#include "fris/numerics.hpp"

#include <cstdint>
#include <memory>

namespace fris
{
    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;
        friend bool operator==(const Vec3 &, const Vec3 &) = default;
    };

    double distance(const Vec3 &a, const Vec3 &b);

    double dbm_to_watts(double dbm);
    double db_to_linear(double db);

    // Terminal positions in meters and the 1D candidate grid of the surface.
    // The grid runs along fris_axis through fris_center with spacing W * lambda / (N - 1).
    struct SystemGeometry
    {
        Vec3 ap_position{0.0, 0.0, 10.0};
        Vec3 bob_position{50.0, 0.0, 1.5};
        Vec3 eve_position{55.0, 5.0, 1.5};
        Vec3 fris_center{45.0, 10.0, 5.0};
        std::size_t num_locations = 100;
        double aperture_wavelengths = 12.375; // W; gives d_s = lambda / 8 at N = 100
        double wavelength = 0.1;              // meters
        Vec3 fris_axis{1.0, 0.0, 0.0};
        Vec3 ap_axis{1.0, 0.0, 0.0};

        double spacing() const { return aperture_wavelengths * wavelength / static_cast<double>(num_locations - 1); }
        double spacing_over_lambda() const { return aperture_wavelengths / static_cast<double>(num_locations - 1); }
        void validate() const;
    };

    // PL(d) = reference_loss - 10 alpha log10(d) dB
    struct PathLossModel
    {
        double reference_loss_db = -30.0;
        double exponent_ap_fris = 2.2;
        double exponent_other = 2.8;
        double blockage_direct_db = 25.0; // extra loss on AP-Bob and AP-Eve only
        void validate() const;
    };

    struct FadingParams
    {
        double rician_k = 3.1622776601683795; // 5 dB
        double noise_power = 1e-11;           // -80 dBm in watts
        void validate() const;
    };

    // One realization of every link. Vectors are column channels: h_d* is M x 1,
    // h_r* is N x 1, G is N x M.
    struct ChannelSet
    {
        ComplexVector h_dB;
        ComplexVector h_dE;
        ComplexMatrix G;
        ComplexVector h_rB;
        ComplexVector h_rE;
        std::shared_ptr<const ComplexMatrix> corr_root;

        std::size_t num_antennas() const { return h_dB.size(); }
        std::size_t num_locations() const { return h_rB.size(); }
    };

    // Sub-stream ids drawn from the realization stream, one per random component
    struct ChannelStreams
    {
        std::uint64_t direct_bob = 1;
        std::uint64_t direct_eve = 2;
        std::uint64_t ap_fris = 3;
        std::uint64_t fris_bob = 4;
        std::uint64_t fris_eve = 5;
    };

    // Jakes correlation R[i, j] = J0(2 pi |i - j| d_s / lambda)
    ComplexMatrix build_correlation(std::size_t n, double spacing_over_lambda);

    double path_loss_linear(double distance_m, double exponent, const PathLossModel &model);

    // Rank-one LoS response a_fris a_ap^H with unit-modulus entries
    ComplexMatrix los_component(const SystemGeometry &geometry, std::size_t num_antennas);

    struct LinkGains
    {
        double direct_bob = 0.0;
        double direct_eve = 0.0;
        double ap_fris = 0.0;
        double fris_bob = 0.0;
        double fris_eve = 0.0;
    };

    LinkGains link_gains(const SystemGeometry &geometry, const PathLossModel &model);

    // Holds the per-geometry pieces (correlation root, LoS response, path gains) so that
    // repeated realizations only pay for the random draws.
    class ChannelGenerator
    {
    public:
        ChannelGenerator(const SystemGeometry &geometry, const PathLossModel &pathloss, const FadingParams &fading,
                         std::size_t num_antennas);

        ChannelSet realize(const RngStream &rng, const ChannelStreams &streams = {}) const;

        const LinkGains &gains() const { return gains_; }
        const ComplexMatrix &correlation() const { return correlation_; }
        const ComplexMatrix &los() const { return los_; }
        std::size_t num_antennas() const { return num_antennas_; }
        std::size_t num_locations() const { return correlation_.rows(); }

    private:
        std::size_t num_antennas_;
        double rician_k_;
        LinkGains gains_;
        ComplexMatrix correlation_;
        std::shared_ptr<const ComplexMatrix> root_;
        ComplexMatrix los_;
    };

    ChannelSet realize_channels(const SystemGeometry &geometry, const PathLossModel &pathloss,
                                const FadingParams &fading, std::size_t num_antennas, const RngStream &rng);
}

#endif
