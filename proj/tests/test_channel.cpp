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

#include <catch_amalgamated.hpp>

#include "fris/channel.hpp"
#include "fris/error.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace fris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("build_correlation - Structure")
{
    const ComplexMatrix r1 = build_correlation(1, 0.125);
    CHECK(r1.rows() == 1);
    CHECK(r1(0, 0) == cdouble(1.0));

    const ComplexMatrix r2 = build_correlation(2, 0.5);
    CHECK_THAT(r2(0, 1).real(), WithinAbs(oracle::j0_integral(std::numbers::pi), 1e-12));
    CHECK_THAT(r2(0, 1).real(), WithinAbs(-0.304242177644, 1e-11));

    const ComplexMatrix r = build_correlation(8, 0.37);
    for (std::size_t i = 0; i < 8; ++i)
    {
        CHECK(r(i, i) == cdouble(1.0));
        for (std::size_t j = 0; j < 8; ++j)
        {
            CHECK(r(i, j) == r(j, i));
            CHECK(r(i, j).imag() == 0.0);
            if (i + 1 < 8 && j + 1 < 8)
                CHECK(r(i, j) == r(i + 1, j + 1));
        }
    }
}

TEST_CASE("build_correlation - Numerically PSD at dense spacing")
{
    for (std::size_t n : {16u, 50u, 100u})
    {
        const ComplexMatrix r = build_correlation(n, 12.375 / static_cast<double>(n - 1));
        const HermitianEigen e = hermitian_eigen(r);
        CHECK(e.values.front() >= -1e-8);
        const ComplexMatrix l = psd_matrix_root(r);
        CHECK((l * l.adjoint() - r).frobenius_norm() <= 1e-8 * r.frobenius_norm());
    }
}

TEST_CASE("path_loss_linear - Reference values")
{
    const PathLossModel pl;
    CHECK_THAT(path_loss_linear(1.0, 2.2, pl), WithinRel(1e-3, 1e-14));
    CHECK_THAT(path_loss_linear(1.0, 2.8, pl), WithinRel(1e-3, 1e-14));
    // -30 - 28 log10(50) = -77.57116... dB
    CHECK_THAT(10.0 * std::log10(path_loss_linear(50.0, 2.8, pl)), WithinAbs(-77.5712, 1e-4));
    CHECK_THAT(path_loss_linear(50.0, 2.8, pl), WithinRel(std::pow(10.0, -7.757116), 1e-6));
    CHECK_THAT(path_loss_linear(10.0, 2.2, pl), WithinRel(std::pow(10.0, -5.2), 1e-13));

    for (double d : {0.0, -1.0})
    {
        try
        {
            path_loss_linear(d, 2.0, pl);
            FAIL("no exception");
        }
        catch (const Error &e)
        {
            CHECK(e.code() == ErrorCode::domain);
        }
    }
}

TEST_CASE("Unit conversions")
{
    CHECK_THAT(dbm_to_watts(-80.0), WithinRel(1e-11, 1e-14));
    CHECK_THAT(dbm_to_watts(20.0), WithinRel(0.1, 1e-14));
    CHECK_THAT(db_to_linear(-25.0), WithinRel(std::pow(10.0, -2.5), 1e-14));
}

TEST_CASE("los_component - Broadside, modulus and rank")
{
    SystemGeometry g;
    const ComplexMatrix los = los_component(g, 4);
    REQUIRE(los.rows() == 100);
    REQUIRE(los.cols() == 4);
    std::vector<oracle::cvec> rows(100, oracle::cvec(4));
    for (std::size_t i = 0; i < 100; ++i)
        for (std::size_t j = 0; j < 4; ++j)
        {
            CHECK_THAT(std::abs(los(i, j)), WithinAbs(1.0, 1e-12));
            rows[i][j] = los(i, j);
        }

    // deflate the top singular pair; the remainder must vanish
    const double s1 = oracle::top_singular_sq(rows, 4);
    CHECK_THAT(s1, WithinRel(400.0, 1e-9));
    const ComplexMatrix rest = los - (1.0 / 400.0) * (los * los.adjoint() * los);
    CHECK(rest.frobenius_norm() <= 1e-10 * los.frobenius_norm());

    // AP above and FRIS axis perpendicular to FRIS->AP, AP axis perpendicular to AP->FRIS
    SystemGeometry b;
    b.ap_position = {0.0, 0.0, 10.0};
    b.fris_center = {0.0, 20.0, 10.0};
    b.fris_axis = {1.0, 0.0, 0.0};
    b.ap_axis = {1.0, 0.0, 0.0};
    const ComplexMatrix ones = los_component(b, 3);
    for (std::size_t i = 0; i < ones.rows(); ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(ones(i, j) - cdouble(1.0)) <= 1e-12);
}

TEST_CASE("SystemGeometry - Validation")
{
    SystemGeometry g;
    CHECK_NOTHROW(g.validate());
    CHECK_THAT(g.spacing_over_lambda(), WithinRel(0.125, 1e-14));

    SystemGeometry small = g;
    small.num_locations = 1;
    CHECK_THROWS_AS(small.validate(), Error);

    SystemGeometry same = g;
    same.eve_position = same.bob_position;
    CHECK_THROWS_AS(same.validate(), Error);

    SystemGeometry w = g;
    w.aperture_wavelengths = 0.0;
    CHECK_THROWS_AS(w.validate(), Error);

    PathLossModel pl;
    pl.exponent_other = 0.0;
    CHECK_THROWS_AS(pl.validate(), Error);

    FadingParams f;
    f.noise_power = 0.0;
    CHECK_THROWS_AS(f.validate(), Error);
}

TEST_CASE("realize_channels - Dimensions and determinism")
{
    SystemGeometry g;
    g.num_locations = 20;
    const ChannelSet a = realize_channels(g, PathLossModel{}, FadingParams{}, 3, RngStream(5, 1));
    const ChannelSet b = realize_channels(g, PathLossModel{}, FadingParams{}, 3, RngStream(5, 1));
    CHECK(a.h_dB.size() == 3);
    CHECK(a.h_rE.size() == 20);
    CHECK(a.G.rows() == 20);
    CHECK(a.G.cols() == 3);
    CHECK(a.num_antennas() == 3);
    CHECK(a.num_locations() == 20);
    CHECK(a.h_dB == b.h_dB);
    CHECK(a.G == b.G);
    CHECK(a.h_rB == b.h_rB);

    const ComplexMatrix r = build_correlation(20, g.spacing_over_lambda());
    CHECK(((*a.corr_root) * a.corr_root->adjoint() - r).frobenius_norm() <= 1e-8 * r.frobenius_norm());
}

TEST_CASE("realize_channels - Rician limit")
{
    SystemGeometry g;
    FadingParams f;
    f.rician_k = 1e9;
    const ChannelSet ch = realize_channels(g, PathLossModel{}, f, 4, RngStream(3, 0));
    const double beta = link_gains(g, PathLossModel{}).ap_fris;
    const ComplexMatrix los = std::sqrt(beta) * los_component(g, 4);
    CHECK((ch.G - los).frobenius_norm() / ch.G.frobenius_norm() <= 1e-4);
}

TEST_CASE("realize_channels - Direct-link power with blockage")
{
    SystemGeometry g;
    g.num_locations = 4;
    const PathLossModel pl;
    const ChannelGenerator gen(g, pl, FadingParams{}, 4);
    const double beta = std::pow(10.0, (-30.0 - 28.0 * std::log10(distance(g.ap_position, g.bob_position)) - 25.0) / 10.0);
    CHECK_THAT(gen.gains().direct_bob, WithinRel(beta, 1e-12));

    double acc = 0.0;
    for (std::uint64_t t = 0; t < 2000; ++t)
        acc += norm2(gen.realize(RngStream(17, t)).h_dB);
    CHECK_THAT(acc / 2000.0, WithinRel(4.0 * beta, 0.10));
}

TEST_CASE("realize_channels - Reflect-link covariance")
{
    SystemGeometry g;
    g.num_locations = 10;
    const ChannelGenerator gen(g, PathLossModel{}, FadingParams{}, 1);
    const double beta = gen.gains().fris_bob;
    const ComplexMatrix &r = gen.correlation();
    ComplexMatrix cov(10, 10);
    const int trials = 5000;
    for (int t = 0; t < trials; ++t)
    {
        const ChannelSet ch = gen.realize(RngStream(23, static_cast<std::uint64_t>(t)));
        cov = cov + outer(ch.h_rB, ch.h_rB);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            worst = std::max(worst, std::abs(cov(i, j) / static_cast<double>(trials) - beta * r(i, j)));
    CHECK(worst <= 0.05 * beta);
}

TEST_CASE("realize_channels - Bob and Eve swap symmetry")
{
    SystemGeometry g;
    g.num_locations = 12;
    SystemGeometry s = g;
    std::swap(s.bob_position, s.eve_position);
    ChannelStreams swapped;
    std::swap(swapped.direct_bob, swapped.direct_eve);
    std::swap(swapped.fris_bob, swapped.fris_eve);

    const RngStream rng(31, 2);
    const ChannelSet a = ChannelGenerator(g, PathLossModel{}, FadingParams{}, 4).realize(rng);
    const ChannelSet b = ChannelGenerator(s, PathLossModel{}, FadingParams{}, 4).realize(rng, swapped);
    CHECK(a.h_dB == b.h_dE);
    CHECK(a.h_dE == b.h_dB);
    CHECK(a.h_rB == b.h_rE);
    CHECK(a.h_rE == b.h_rB);
    CHECK(a.G == b.G);
}

TEST_CASE("realize_channels - Correlation depends on spacing ratio only")
{
    SystemGeometry a, b;
    a.num_locations = b.num_locations = 30;
    a.wavelength = 0.1;
    b.wavelength = 0.2;
    const ChannelGenerator ga(a, PathLossModel{}, FadingParams{}, 2);
    const ChannelGenerator gb(b, PathLossModel{}, FadingParams{}, 2);
    CHECK(ga.correlation() == gb.correlation());
    CHECK(ga.correlation() == build_correlation(30, a.spacing_over_lambda()));
}
