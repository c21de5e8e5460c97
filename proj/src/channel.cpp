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

#include "fris/channel.hpp"
#include "fris/error.hpp"

#include <cmath>
#include <numbers>

namespace fris
{
    namespace
    {
        Vec3 sub(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
        double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
        double length(const Vec3 &a) { return std::sqrt(dot(a, a)); }

        Vec3 unit(const Vec3 &a, const char *what)
        {
            const double len = length(a);
            if (!(len > 0.0) || !std::isfinite(len))
                fail(ErrorCode::invalid_argument, std::string(what) + " must be a nonzero finite vector");
            return {a.x / len, a.y / len, a.z / len};
        }

        bool finite(const Vec3 &a) { return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z); }
    }

    double distance(const Vec3 &a, const Vec3 &b) { return length(sub(a, b)); }

    double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    void SystemGeometry::validate() const
    {
        if (num_locations < 2)
            fail(ErrorCode::invalid_argument, "geometry: num_locations must be at least 2");
        if (!(aperture_wavelengths > 0.0) || !std::isfinite(aperture_wavelengths))
            fail(ErrorCode::invalid_argument, "geometry: aperture must be positive");
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            fail(ErrorCode::invalid_argument, "geometry: wavelength must be positive");
        const Vec3 *points[] = {&ap_position, &bob_position, &eve_position, &fris_center};
        for (const auto *p : points)
            if (!finite(*p))
                fail(ErrorCode::invalid_argument, "geometry: positions must be finite");
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (*points[i] == *points[j])
                    fail(ErrorCode::invalid_argument, "geometry: terminal positions must be pairwise distinct");
        unit(fris_axis, "geometry: fris_axis");
        unit(ap_axis, "geometry: ap_axis");
    }

    void PathLossModel::validate() const
    {
        if (!std::isfinite(reference_loss_db) || !std::isfinite(blockage_direct_db))
            fail(ErrorCode::invalid_argument, "path loss: reference and blockage losses must be finite");
        if (!(exponent_ap_fris > 0.0) || !(exponent_other > 0.0))
            fail(ErrorCode::invalid_argument, "path loss: exponents must be positive");
    }

    void FadingParams::validate() const
    {
        if (!(rician_k >= 0.0) || !std::isfinite(rician_k))
            fail(ErrorCode::invalid_argument, "fading: rician_k must be non-negative");
        if (!(noise_power > 0.0) || !std::isfinite(noise_power))
            fail(ErrorCode::invalid_argument, "fading: noise power must be positive");
    }

    ComplexMatrix build_correlation(std::size_t n, double spacing_over_lambda)
    {
        if (n < 1)
            fail(ErrorCode::invalid_argument, "build_correlation: n must be at least 1");
        if (!(spacing_over_lambda > 0.0))
            fail(ErrorCode::invalid_argument, "build_correlation: spacing must be positive");
        std::vector<double> lag(n);
        for (std::size_t k = 0; k < n; ++k)
            lag[k] = k == 0 ? 1.0 : bessel_j0(2.0 * std::numbers::pi * static_cast<double>(k) * spacing_over_lambda);
        ComplexMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) = lag[i > j ? i - j : j - i];
        return r;
    }

    double path_loss_linear(double distance_m, double exponent, const PathLossModel &model)
    {
        if (!(distance_m > 0.0) || !std::isfinite(distance_m))
            fail(ErrorCode::domain, "path_loss_linear: distance must be positive");
        return std::pow(10.0, (model.reference_loss_db - 10.0 * exponent * std::log10(distance_m)) / 10.0);
    }

    ComplexMatrix los_component(const SystemGeometry &geometry, std::size_t num_antennas)
    {
        geometry.validate();
        if (num_antennas < 1)
            fail(ErrorCode::invalid_argument, "los_component: at least one AP antenna required");
        const Vec3 fris_axis = unit(geometry.fris_axis, "fris_axis");
        const Vec3 ap_axis = unit(geometry.ap_axis, "ap_axis");
        const double cos_fris = dot(fris_axis, unit(sub(geometry.ap_position, geometry.fris_center), "FRIS->AP"));
        const double cos_ap = dot(ap_axis, unit(sub(geometry.fris_center, geometry.ap_position), "AP->FRIS"));
        const double ds = geometry.spacing_over_lambda();
        const std::size_t n = geometry.num_locations;

        ComplexVector a_fris(n), a_ap(num_antennas);
        for (std::size_t i = 0; i < n; ++i)
            a_fris[i] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) * ds * cos_fris);
        for (std::size_t m = 0; m < num_antennas; ++m)
            a_ap[m] = std::polar(1.0, std::numbers::pi * static_cast<double>(m) * cos_ap);
        return outer(a_fris, a_ap);
    }

    LinkGains link_gains(const SystemGeometry &geometry, const PathLossModel &model)
    {
        const double blockage = db_to_linear(-model.blockage_direct_db);
        LinkGains g;
        g.direct_bob = path_loss_linear(distance(geometry.ap_position, geometry.bob_position), model.exponent_other, model) * blockage;
        g.direct_eve = path_loss_linear(distance(geometry.ap_position, geometry.eve_position), model.exponent_other, model) * blockage;
        g.ap_fris = path_loss_linear(distance(geometry.ap_position, geometry.fris_center), model.exponent_ap_fris, model);
        g.fris_bob = path_loss_linear(distance(geometry.fris_center, geometry.bob_position), model.exponent_other, model);
        g.fris_eve = path_loss_linear(distance(geometry.fris_center, geometry.eve_position), model.exponent_other, model);
        return g;
    }

    ChannelGenerator::ChannelGenerator(const SystemGeometry &geometry, const PathLossModel &pathloss,
                                       const FadingParams &fading, std::size_t num_antennas)
        : num_antennas_(num_antennas), rician_k_(fading.rician_k)
    {
        geometry.validate();
        pathloss.validate();
        fading.validate();
        if (num_antennas < 1)
            fail(ErrorCode::invalid_argument, "channel generator: at least one AP antenna required");
        gains_ = link_gains(geometry, pathloss);
        correlation_ = build_correlation(geometry.num_locations, geometry.spacing_over_lambda());
        root_ = std::make_shared<const ComplexMatrix>(psd_matrix_root(correlation_));
        los_ = los_component(geometry, num_antennas);
    }

    ChannelSet ChannelGenerator::realize(const RngStream &rng, const ChannelStreams &streams) const
    {
        const std::size_t n = num_locations(), m = num_antennas_;
        const ComplexMatrix &root = *root_;

        auto correlated = [&](std::uint64_t id, double gain) {
            RngStream sub_rng = rng.derive(id);
            const ComplexVector z = sample_complex_gaussian(sub_rng, n);
            ComplexVector h = root * std::span<const cdouble>(z);
            const double amp = std::sqrt(gain);
            for (auto &v : h)
                v *= amp;
            return h;
        };
        auto iid = [&](std::uint64_t id, double gain) {
            RngStream sub_rng = rng.derive(id);
            ComplexVector h = sample_complex_gaussian(sub_rng, m);
            const double amp = std::sqrt(gain);
            for (auto &v : h)
                v *= amp;
            return h;
        };

        ChannelSet out;
        out.h_dB = iid(streams.direct_bob, gains_.direct_bob);
        out.h_dE = iid(streams.direct_eve, gains_.direct_eve);
        out.h_rB = correlated(streams.fris_bob, gains_.fris_bob);
        out.h_rE = correlated(streams.fris_eve, gains_.fris_eve);

        // G = sqrt(beta) (sqrt(K/(K+1)) G_los + sqrt(1/(K+1)) R^{1/2} G_nlos)
        RngStream g_rng = rng.derive(streams.ap_fris);
        ComplexMatrix nlos(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                nlos(i, j) = g_rng.complex_normal();
        const ComplexMatrix scattered = root * nlos;
        const double amp = std::sqrt(gains_.ap_fris);
        const double w_los = amp * std::sqrt(rician_k_ / (rician_k_ + 1.0));
        const double w_nlos = amp * std::sqrt(1.0 / (rician_k_ + 1.0));
        out.G = ComplexMatrix(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                out.G(i, j) = w_los * los_(i, j) + w_nlos * scattered(i, j);
        out.corr_root = root_;
        return out;
    }

    ChannelSet realize_channels(const SystemGeometry &geometry, const PathLossModel &pathloss,
                                const FadingParams &fading, std::size_t num_antennas, const RngStream &rng)
    {
        return ChannelGenerator(geometry, pathloss, fading, num_antennas).realize(rng);
    }
}
