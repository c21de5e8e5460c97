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

#ifndef FRIS_BEAMFORM_HPP
#define FRIS_BEAMFORM_HPP

#include "fris/secrecy.hpp"

namespace fris
{
    // (noise + |h_B^H w|^2) / (noise + |h_E^H w|^2)
    double beam_ratio(std::span<const cdouble> h_bob, std::span<const cdouble> h_eve, std::span<const cdouble> w,
                      double noise_power);

    // Closed-form optimal beamformer for a fixed surface: sqrt(P) times the dominant generalized
    // eigenvector of (P h_B h_B^H + noise I, P h_E h_E^H + noise I). Full M x M reduction.
    //
    // A zero h_B makes the objective independent of the direction toward Bob; the returned
    // beam is then any unit vector orthogonal to h_E and a warning is printed once.
    Beamformer solve_p2(std::span<const cdouble> h_bob, std::span<const cdouble> h_eve, double power,
                        double noise_power);

    // Same optimum computed on span{h_B, h_E} as a 2 x 2 generalized problem. Default path for
    // the optimizers; solve_p2 is its cross-check.
    Beamformer solve_p2_subspace(std::span<const cdouble> h_bob, std::span<const cdouble> h_eve, double power,
                                 double noise_power);
}

#endif
