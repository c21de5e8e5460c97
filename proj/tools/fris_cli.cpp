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

// Command-line front end. Talks to the library only through the C API.

#include "fris/fris.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace
{
    struct CliError
    {
        std::string message;
    };

    void check(fris_status status, const std::string &context)
    {
        if (status != FRIS_OK)
        {
            std::string msg = context + ": " + fris_status_string(status);
            const char *detail = fris_last_error();
            if (detail && *detail)
                msg += ": " + std::string(detail);
            throw CliError{msg};
        }
    }

    using ConfigPtr = std::unique_ptr<fris_config, decltype(&fris_config_destroy)>;
    using SweepPtr = std::unique_ptr<fris_sweep, decltype(&fris_sweep_destroy)>;

    struct SweepOptions
    {
        std::optional<std::uint64_t> trials;
        std::optional<std::uint64_t> seed;
        std::optional<std::string> out;
        unsigned threads = 0;
        std::optional<std::string> schemes;
        std::string config_path;
    };

    void add_sweep_options(CLI::App *cmd, SweepOptions &opt)
    {
        cmd->add_option("--trials", opt.trials, "Monte Carlo trials per sweep point")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opt.seed, "Base seed (default: FRIS_SEED, then 1)");
        cmd->add_option("--out", opt.out, "CSV output path (default: <subcommand>.csv)");
        cmd->add_option("--threads", opt.threads, "Worker threads, 0 = all hardware threads");
        cmd->add_option("--schemes", opt.schemes,
                        "Comma-separated schemes: ao_ceo,random_sel_phase_opt,conventional_ris,random_phases,no_surface,ao_ceo_literal");
    }

    void set_key(fris_config *cfg, const char *key, const std::string &value)
    {
        check(fris_config_set(cfg, key, value.c_str()), std::string("--") + key);
    }

    std::optional<std::string> env_seed()
    {
        const char *s = std::getenv("FRIS_SEED");
        if (!s || !*s)
            return std::nullopt;
        return std::string(s);
    }

    std::string get_key(const fris_config *cfg, const char *key)
    {
        std::size_t needed = 0;
        check(fris_config_get(cfg, key, nullptr, 0, &needed), key);
        std::string buf(needed, '\0');
        check(fris_config_get(cfg, key, buf.data(), buf.size(), &needed), key);
        buf.resize(needed - 1);
        return buf;
    }

    void print_summary(const fris_sweep *sweep)
    {
        std::printf("%-12s %-22s %12s %12s %8s\n", fris_sweep_variable(sweep), "scheme", "mean_bps_hz", "std_error",
                    "trials");
        const std::size_t n = fris_sweep_summary_count(sweep);
        for (std::size_t i = 0; i < n; ++i)
        {
            fris_summary_row row{};
            check(fris_sweep_summary(sweep, i, &row), "summary");
            std::printf("%-12g %-22s %12.6f %12.6f %8llu\n", row.sweep_value, row.scheme, row.mean, row.std_error,
                        static_cast<unsigned long long>(row.count));
        }
    }

    int run_sweep(const std::string &name, const SweepOptions &opt, bool from_file)
    {
        fris_config *raw = nullptr;
        check(fris_config_create(&raw), "config");
        ConfigPtr cfg(raw, &fris_config_destroy);

        if (!from_file)
            check(fris_config_apply_preset(cfg.get(), name.c_str()), name);
        if (auto s = env_seed())
            check(fris_config_set(cfg.get(), "base_seed", s->c_str()), "FRIS_SEED");
        if (from_file)
            check(fris_config_load_file(cfg.get(), opt.config_path.c_str()), "config file");

        if (opt.trials)
            set_key(cfg.get(), "trials", std::to_string(*opt.trials));
        if (opt.seed)
            set_key(cfg.get(), "base_seed", std::to_string(*opt.seed));
        if (opt.schemes)
            set_key(cfg.get(), "schemes", *opt.schemes);

        std::string out = name + ".csv";
        if (from_file)
        {
            const std::string file_out = get_key(cfg.get(), "output");
            if (!file_out.empty())
                out = file_out;
        }
        if (opt.out)
            out = *opt.out;

        fris_sweep *sweep_raw = nullptr;
        check(fris_run_sweep(cfg.get(), opt.threads, &sweep_raw), "sweep");
        SweepPtr sweep(sweep_raw, &fris_sweep_destroy);
        check(fris_sweep_write_csv(sweep.get(), out.c_str()), "write");

        print_summary(sweep.get());
        const std::size_t errors = fris_sweep_error_count(sweep.get());
        for (std::size_t i = 0; i < errors; ++i)
        {
            double value = 0.0;
            const char *message = nullptr;
            check(fris_sweep_error(sweep.get(), i, &value, &message), "error");
            std::cerr << "fris_cli: sweep point " << value << " failed: " << message << "\n";
        }
        std::cerr << "fris_cli: wrote " << fris_sweep_record_count(sweep.get()) << " records to " << out << "\n";
        return errors == 0 ? 0 : 1;
    }

    void print_check(const char *name, int passed, const char *detail, void *)
    {
        std::printf("%s %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
    }

    int run_selftest()
    {
        int failures = 0;
        check(fris_selftest(&print_check, nullptr, &failures), "selftest");
        std::printf("%d check(s) failed\n", failures);
        return failures == 0 ? 0 : 1;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Secrecy-rate optimization for fluid reconfigurable intelligent surfaces", "fris_cli"};
    app.set_version_flag("--version", std::string(fris_version()));
    app.require_subcommand(1);

    SweepOptions opt;
    for (const char *name : {"fig2", "fig3", "fig4", "fig5"})
    {
        auto *cmd = app.add_subcommand(name, std::string("Preset sweep ") + name);
        add_sweep_options(cmd, opt);
    }
    auto *run = app.add_subcommand("run", "Sweep described by a key = value config file");
    run->add_option("--config", opt.config_path, "Config file")->required();
    add_sweep_options(run, opt);
    app.add_subcommand("selftest", "Small-instance oracle checks");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        std::cout << app.help();
        return 0;
    }
    catch (const CLI::CallForVersion &)
    {
        std::cout << fris_version() << "\n";
        return 0;
    }
    catch (const CLI::ParseError &e)
    {
        std::cerr << "fris_cli: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try
    {
        auto *cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        if (name == "selftest")
            return run_selftest();
        return run_sweep(name, opt, name == "run");
    }
    catch (const CliError &e)
    {
        std::cerr << "fris_cli: " << e.message << "\n";
        return 1;
    }
}
