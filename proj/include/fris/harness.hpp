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

#ifndef FRIS_HARNESS_HPP
#define FRIS_HARNESS_HPP

#include "fris/schemes.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fris
{
    enum class SweepVariable
    {
        power,   // AP transmit power, dBm
        n_hat,   // active elements
        n_total, // candidate locations N
        eve_x,   // eavesdropper x coordinate, m
    };

    std::string_view sweep_name(SweepVariable v);
    std::optional<SweepVariable> parse_sweep(std::string_view name);

    // Experiment input. Field names double as the keys of the `key = value` config format.
    struct ExperimentConfig
    {
        SystemGeometry geometry;
        PathLossModel pathloss;
        double rician_k_db = 5.0;
        double noise_power_dbm = -80.0;
        std::size_t num_antennas = 4;
        std::size_t num_active = 16;
        unsigned phase_bits = 3;
        double power_dbm = 20.0;
        std::size_t trials = 1000;
        std::uint64_t base_seed = 1;
        std::vector<SchemeId> schemes{all_schemes.begin(), all_schemes.end()};
        SweepVariable sweep_var = SweepVariable::power;
        std::vector<double> sweep_values; // empty: the single current value of sweep_var
        AoParams ao;
        RandomPhasesVariant random_phases_variant = RandomPhasesVariant::random_selection;
        std::string output;

        FadingParams fading() const;
        LinkBudget budget() const;
        std::vector<double> sweep_grid() const;
        ExperimentConfig at_point(double value) const; // copy with sweep_var set to value
        void validate() const;

        void set(std::string_view key, std::string_view value); // throws parse on bad key or value
        std::string get(std::string_view key) const;
        static const std::vector<std::string> &keys();
    };

    // Applies `key = value` lines (with # comments) on top of `base`
    void apply_config_text(ExperimentConfig &base, std::string_view text);
    void load_config_file(ExperimentConfig &base, const std::string &path);

    // fig2 | fig3 | fig4 | fig5 sweeps, 200 trials
    ExperimentConfig preset_config(std::string_view name);

    struct TrialRecord
    {
        std::size_t sweep_index = 0;
        double sweep_value = 0.0;
        std::size_t trial = 0;
        SchemeId scheme = SchemeId::no_surface;
        double secrecy_rate = 0.0;
        double objective_ratio = 1.0;
        std::size_t ao_iters = 0;
        double wall_ms = 0.0;
        std::uint64_t seed = 0;
    };

    struct SummaryRow
    {
        std::size_t sweep_index = 0;
        double sweep_value = 0.0;
        SchemeId scheme = SchemeId::no_surface;
        double mean = 0.0;
        double std_error = 0.0;
        std::size_t count = 0;
    };

    struct PointError
    {
        std::size_t sweep_index = 0;
        double sweep_value = 0.0;
        std::string message;
    };

    struct SweepResult
    {
        SweepVariable sweep_var = SweepVariable::power;
        std::vector<double> sweep_values;
        std::vector<TrialRecord> records; // ordered by (sweep index, trial, scheme list order)
        std::vector<SummaryRow> summary;
        std::vector<PointError> errors;
    };

    // Channel draws depend only on (seed, trial), so every sweep point sees the same fading
    RngStream channel_stream(std::uint64_t base_seed, std::size_t trial);
    RngStream scheme_stream(std::uint64_t base_seed, std::size_t sweep_index, std::size_t trial, SchemeId scheme);

    std::uint64_t channel_fingerprint(const ChannelSet &channels);

    struct TrialOutput
    {
        std::vector<TrialRecord> records;
        std::vector<std::uint64_t> fingerprints; // channel hash seen by each scheme invocation
    };

    // One realization through every configured scheme; `point` already carries the sweep value
    TrialOutput run_trial(const ExperimentConfig &point, const ChannelGenerator &generator, std::size_t sweep_index,
                          double sweep_value, std::size_t trial);

    SchemeResult run_scheme(SchemeId id, const ChannelSet &channels, const ExperimentConfig &point,
                            const RngStream &rng);

    SweepResult run_sweep(const ExperimentConfig &config, unsigned threads = 1);

    std::vector<SummaryRow> summarize(std::span<const TrialRecord> records);

    inline constexpr std::string_view csv_header =
        "sweep_var,sweep_value,trial,scheme,secrecy_rate_bps_hz,objective_ratio,ao_iters,wall_ms,seed";

    std::string format_csv(SweepVariable var, std::span<const TrialRecord> records);
    void write_csv(SweepVariable var, std::span<const TrialRecord> records, const std::string &path);
    inline void write_csv(const SweepResult &result, const std::string &path)
    {
        write_csv(result.sweep_var, result.records, path);
    }

    struct CsvRow
    {
        std::string sweep_var;
        TrialRecord record;
    };

    std::vector<CsvRow> read_csv(const std::string &path);
}

#endif
