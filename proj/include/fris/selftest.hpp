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

#ifndef FRIS_SELFTEST_HPP
#define FRIS_SELFTEST_HPP

#include <string>
#include <vector>

namespace fris
{
    struct SelftestCheck
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    // Small-instance oracle checks: quadrature Bessel, matrix-root reconstruction, beamformer
    // against random search, and CEO / AO-CEO against exhaustive enumeration.
    std::vector<SelftestCheck> run_selftest();
}

#endif
