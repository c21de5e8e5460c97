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

#ifndef FRIS_ERROR_HPP
#define FRIS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fris
{
    // Failure categories; mirrored one-to-one by the C API status codes
    enum class ErrorCode
    {
        invalid_argument,
        domain,
        not_psd,
        singular,
        infeasible,
        degenerate,
        io,
        parse,
    };

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}
        ErrorCode code() const noexcept { return code_; }

    private:
        ErrorCode code_;
    };

    [[noreturn]] inline void fail(ErrorCode code, const std::string &message)
    {
        throw Error(code, message);
    }
}

#endif
