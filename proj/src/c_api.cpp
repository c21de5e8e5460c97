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

#include "fris/fris.h"
#include "fris/error.hpp"
#include "fris/harness.hpp"
#include "fris/selftest.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <exception>
#include <new>
#include <string>

struct fris_config
{
    fris::ExperimentConfig config;
};

struct fris_sweep
{
    fris::SweepResult result;
};

namespace
{
    thread_local std::string last_error;

    fris_status to_status(fris::ErrorCode code)
    {
        switch (code)
        {
        case fris::ErrorCode::invalid_argument: return FRIS_E_INVALID_ARGUMENT;
        case fris::ErrorCode::domain: return FRIS_E_DOMAIN;
        case fris::ErrorCode::not_psd: return FRIS_E_NOT_PSD;
        case fris::ErrorCode::singular: return FRIS_E_SINGULAR;
        case fris::ErrorCode::infeasible: return FRIS_E_INFEASIBLE;
        case fris::ErrorCode::degenerate: return FRIS_E_DEGENERATE;
        case fris::ErrorCode::io: return FRIS_E_IO;
        case fris::ErrorCode::parse: return FRIS_E_PARSE;
        }
        return FRIS_E_INTERNAL;
    }

    fris_status set_error(fris_status status, std::string message)
    {
        last_error = std::move(message);
        return status;
    }

    template <typename F>
    fris_status guarded(F &&body)
    {
        try
        {
            last_error.clear();
            body();
            return FRIS_OK;
        }
        catch (const fris::Error &e)
        {
            return set_error(to_status(e.code()), e.what());
        }
        catch (const std::bad_alloc &)
        {
            return set_error(FRIS_E_INTERNAL, "out of memory");
        }
        catch (const std::exception &e)
        {
            return set_error(FRIS_E_INTERNAL, e.what());
        }
        catch (...)
        {
            return set_error(FRIS_E_INTERNAL, "unknown exception");
        }
    }

#define FRIS_REQUIRE(ptr)                                                                \
    do                                                                                   \
    {                                                                                    \
        if (!(ptr))                                                                      \
            return set_error(FRIS_E_INVALID_ARGUMENT, "null argument: " #ptr);            \
    } while (0)

    const char *static_scheme_name(fris::SchemeId id)
    {
        // scheme_name returns views into string literals
        return fris::scheme_name(id).data();
    }
}

extern "C" {

const char *fris_version(void) { return "1.0.0"; }

const char *fris_status_string(fris_status status)
{
    switch (status)
    {
    case FRIS_OK: return "ok";
    case FRIS_E_INVALID_ARGUMENT: return "invalid argument";
    case FRIS_E_DOMAIN: return "domain error";
    case FRIS_E_NOT_PSD: return "matrix not positive semidefinite";
    case FRIS_E_SINGULAR: return "singular matrix";
    case FRIS_E_INFEASIBLE: return "infeasible";
    case FRIS_E_DEGENERATE: return "degenerate channel";
    case FRIS_E_IO: return "i/o error";
    case FRIS_E_PARSE: return "parse error";
    case FRIS_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *fris_last_error(void) { return last_error.c_str(); }

fris_status fris_config_create(fris_config **out)
{
    FRIS_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new fris_config{}; });
}

void fris_config_destroy(fris_config *config) { delete config; }

fris_status fris_config_set(fris_config *config, const char *key, const char *value)
{
    FRIS_REQUIRE(config);
    FRIS_REQUIRE(key);
    FRIS_REQUIRE(value);
    return guarded([&] { config->config.set(key, value); });
}

fris_status fris_config_get(const fris_config *config, const char *key, char *buf, size_t buflen, size_t *needed)
{
    FRIS_REQUIRE(config);
    FRIS_REQUIRE(key);
    return guarded([&] {
        const std::string v = config->config.get(key);
        if (needed)
            *needed = v.size() + 1;
        if (buf && buflen > 0)
        {
            const std::size_t n = std::min(v.size(), buflen - 1);
            std::memcpy(buf, v.data(), n);
            buf[n] = '\0';
        }
    });
}

fris_status fris_config_load_file(fris_config *config, const char *path)
{
    FRIS_REQUIRE(config);
    FRIS_REQUIRE(path);
    return guarded([&] {
        fris::ExperimentConfig updated = config->config;
        fris::load_config_file(updated, path);
        config->config = std::move(updated);
    });
}

fris_status fris_config_apply_preset(fris_config *config, const char *name)
{
    FRIS_REQUIRE(config);
    FRIS_REQUIRE(name);
    return guarded([&] { config->config = fris::preset_config(name); });
}

fris_status fris_run_sweep(const fris_config *config, unsigned threads, fris_sweep **out)
{
    FRIS_REQUIRE(config);
    FRIS_REQUIRE(out);
    *out = nullptr;
    return guarded([&] {
        auto sweep = std::make_unique<fris_sweep>();
        sweep->result = fris::run_sweep(config->config, threads);
        *out = sweep.release();
    });
}

void fris_sweep_destroy(fris_sweep *sweep) { delete sweep; }

const char *fris_sweep_variable(const fris_sweep *sweep)
{
    return sweep ? fris::sweep_name(sweep->result.sweep_var).data() : "";
}

size_t fris_sweep_record_count(const fris_sweep *sweep) { return sweep ? sweep->result.records.size() : 0; }

fris_status fris_sweep_record(const fris_sweep *sweep, size_t index, fris_record *out)
{
    FRIS_REQUIRE(sweep);
    FRIS_REQUIRE(out);
    if (index >= sweep->result.records.size())
        return set_error(FRIS_E_INVALID_ARGUMENT, "record index out of range");
    const auto &r = sweep->result.records[index];
    *out = fris_record{r.sweep_value, r.trial, static_scheme_name(r.scheme), r.secrecy_rate,
                       r.objective_ratio, r.ao_iters, r.wall_ms, r.seed};
    return FRIS_OK;
}

size_t fris_sweep_summary_count(const fris_sweep *sweep) { return sweep ? sweep->result.summary.size() : 0; }

fris_status fris_sweep_summary(const fris_sweep *sweep, size_t index, fris_summary_row *out)
{
    FRIS_REQUIRE(sweep);
    FRIS_REQUIRE(out);
    if (index >= sweep->result.summary.size())
        return set_error(FRIS_E_INVALID_ARGUMENT, "summary index out of range");
    const auto &s = sweep->result.summary[index];
    *out = fris_summary_row{s.sweep_value, static_scheme_name(s.scheme), s.mean, s.std_error, s.count};
    return FRIS_OK;
}

size_t fris_sweep_error_count(const fris_sweep *sweep) { return sweep ? sweep->result.errors.size() : 0; }

fris_status fris_sweep_error(const fris_sweep *sweep, size_t index, double *sweep_value, const char **message)
{
    FRIS_REQUIRE(sweep);
    if (index >= sweep->result.errors.size())
        return set_error(FRIS_E_INVALID_ARGUMENT, "error index out of range");
    const auto &e = sweep->result.errors[index];
    if (sweep_value)
        *sweep_value = e.sweep_value;
    if (message)
        *message = e.message.c_str();
    return FRIS_OK;
}

fris_status fris_sweep_write_csv(const fris_sweep *sweep, const char *path)
{
    FRIS_REQUIRE(sweep);
    FRIS_REQUIRE(path);
    return guarded([&] { fris::write_csv(sweep->result, path); });
}

fris_status fris_selftest(fris_selftest_callback callback, void *user, int *failures)
{
    return guarded([&] {
        int failed = 0;
        for (const auto &check : fris::run_selftest())
        {
            failed += check.passed ? 0 : 1;
            if (callback)
                callback(check.name.c_str(), check.passed ? 1 : 0, check.detail.c_str(), user);
        }
        if (failures)
            *failures = failed;
    });
}

fris_status fris_bessel_j0(double x, double *out)
{
    FRIS_REQUIRE(out);
    return guarded([&] { *out = fris::bessel_j0(x); });
}

fris_status fris_secrecy_rate(double gamma_bob, double gamma_eve, double *out)
{
    FRIS_REQUIRE(out);
    if (!(gamma_bob >= 0.0) || !(gamma_eve >= 0.0))
        return set_error(FRIS_E_INVALID_ARGUMENT, "SNRs must be non-negative");
    *out = fris::secrecy_rate(gamma_bob, gamma_eve);
    return FRIS_OK;
}

} // extern "C"
