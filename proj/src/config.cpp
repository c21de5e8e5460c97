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

#include "fris/error.hpp"
#include "fris/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fris
{
    std::string_view sweep_name(SweepVariable v)
    {
        switch (v)
        {
        case SweepVariable::power: return "power";
        case SweepVariable::n_hat: return "n_hat";
        case SweepVariable::n_total: return "n_total";
        case SweepVariable::eve_x: return "eve_x";
        }
        return "unknown";
    }

    std::optional<SweepVariable> parse_sweep(std::string_view name)
    {
        for (auto v : {SweepVariable::power, SweepVariable::n_hat, SweepVariable::n_total, SweepVariable::eve_x})
            if (sweep_name(v) == name)
                return v;
        return std::nullopt;
    }

    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = s.find(sep, start);
                out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return out;
        }

        [[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected)
        {
            fail(ErrorCode::parse, "config: invalid value '" + std::string(value) + "' for key '" + std::string(key) +
                                       "' (expected " + std::string(expected) + ")");
        }

        double parse_double(std::string_view key, std::string_view text)
        {
            text = trim(text);
            double v = 0.0;
            const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
            if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v))
                bad_value(key, text, "a finite number");
            return v;
        }

        std::uint64_t parse_u64(std::string_view key, std::string_view text)
        {
            text = trim(text);
            std::uint64_t v = 0;
            const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
            if (res.ec != std::errc() || res.ptr != text.data() + text.size())
                bad_value(key, text, "a non-negative integer");
            return v;
        }

        bool parse_bool(std::string_view key, std::string_view text)
        {
            text = trim(text);
            if (text == "true" || text == "1" || text == "on" || text == "yes")
                return true;
            if (text == "false" || text == "0" || text == "off" || text == "no")
                return false;
            bad_value(key, text, "true or false");
        }

        Vec3 parse_vec3(std::string_view key, std::string_view text)
        {
            const auto parts = split(text, ',');
            if (parts.size() != 3)
                bad_value(key, text, "three comma-separated numbers");
            return {parse_double(key, parts[0]), parse_double(key, parts[1]), parse_double(key, parts[2])};
        }

        std::string fmt_double(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        std::string fmt_vec3(const Vec3 &v)
        {
            return fmt_double(v.x) + "," + fmt_double(v.y) + "," + fmt_double(v.z);
        }

        std::string_view variant_name(RandomPhasesVariant v)
        {
            return v == RandomPhasesVariant::random_selection ? "random_selection" : "optimized_selection";
        }
    }

    const std::vector<std::string> &ExperimentConfig::keys()
    {
        static const std::vector<std::string> k = {
            "ap_position", "bob_position", "eve_position", "fris_center", "fris_axis", "ap_axis",
            "num_locations", "aperture_wavelengths", "wavelength",
            "reference_loss_db", "exponent_ap_fris", "exponent_other", "blockage_direct_db",
            "rician_k_db", "noise_power_dbm",
            "num_antennas", "num_active", "phase_bits", "power_dbm",
            "trials", "base_seed", "schemes", "sweep_var", "sweep_values",
            "ao_max_iters", "ao_rel_tolerance",
            "ceo_sample_size", "ceo_elite_ratio", "ceo_smoothing", "ceo_max_iters", "ceo_patience",
            "ceo_stagnation_tolerance", "ceo_final_polish", "ceo_sample_refine",
            "random_phases_variant", "output"};
        return k;
    }

    void ExperimentConfig::set(std::string_view key, std::string_view raw)
    {
        const std::string_view value = trim(raw);
        if (key == "ap_position") geometry.ap_position = parse_vec3(key, value);
        else if (key == "bob_position") geometry.bob_position = parse_vec3(key, value);
        else if (key == "eve_position") geometry.eve_position = parse_vec3(key, value);
        else if (key == "fris_center") geometry.fris_center = parse_vec3(key, value);
        else if (key == "fris_axis") geometry.fris_axis = parse_vec3(key, value);
        else if (key == "ap_axis") geometry.ap_axis = parse_vec3(key, value);
        else if (key == "num_locations") geometry.num_locations = parse_u64(key, value);
        else if (key == "aperture_wavelengths") geometry.aperture_wavelengths = parse_double(key, value);
        else if (key == "wavelength") geometry.wavelength = parse_double(key, value);
        else if (key == "reference_loss_db") pathloss.reference_loss_db = parse_double(key, value);
        else if (key == "exponent_ap_fris") pathloss.exponent_ap_fris = parse_double(key, value);
        else if (key == "exponent_other") pathloss.exponent_other = parse_double(key, value);
        else if (key == "blockage_direct_db") pathloss.blockage_direct_db = parse_double(key, value);
        else if (key == "rician_k_db") rician_k_db = parse_double(key, value);
        else if (key == "noise_power_dbm") noise_power_dbm = parse_double(key, value);
        else if (key == "num_antennas") num_antennas = parse_u64(key, value);
        else if (key == "num_active") num_active = parse_u64(key, value);
        else if (key == "phase_bits")
        {
            const auto b = parse_u64(key, value);
            if (b < 1 || b > 16)
                bad_value(key, value, "an integer in [1, 16]");
            phase_bits = static_cast<unsigned>(b);
        }
        else if (key == "power_dbm") power_dbm = parse_double(key, value);
        else if (key == "trials") trials = parse_u64(key, value);
        else if (key == "base_seed") base_seed = parse_u64(key, value);
        else if (key == "schemes")
        {
            std::vector<SchemeId> list;
            if (value == "all")
                list.assign(all_schemes.begin(), all_schemes.end());
            else
                for (auto part : split(value, ','))
                {
                    const auto id = parse_scheme(part);
                    if (!id)
                        bad_value(key, part, "a scheme name (ao_ceo, random_sel_phase_opt, conventional_ris, random_phases, no_surface, ao_ceo_literal)");
                    if (std::find(list.begin(), list.end(), *id) == list.end())
                        list.push_back(*id);
                }
            schemes = std::move(list);
        }
        else if (key == "sweep_var")
        {
            const auto v = parse_sweep(value);
            if (!v)
                bad_value(key, value, "power, n_hat, n_total or eve_x");
            sweep_var = *v;
        }
        else if (key == "sweep_values")
        {
            std::vector<double> vals;
            if (!value.empty())
                for (auto part : split(value, ','))
                    vals.push_back(parse_double(key, part));
            sweep_values = std::move(vals);
        }
        else if (key == "ao_max_iters") ao.max_iters = parse_u64(key, value);
        else if (key == "ao_rel_tolerance") ao.rel_tolerance = parse_double(key, value);
        else if (key == "ceo_sample_size") ao.ceo.sample_size = parse_u64(key, value);
        else if (key == "ceo_elite_ratio") ao.ceo.elite_ratio = parse_double(key, value);
        else if (key == "ceo_smoothing") ao.ceo.smoothing = parse_double(key, value);
        else if (key == "ceo_max_iters") ao.ceo.max_iters = parse_u64(key, value);
        else if (key == "ceo_patience") ao.ceo.stagnation_patience = parse_u64(key, value);
        else if (key == "ceo_stagnation_tolerance") ao.ceo.stagnation_tolerance = parse_double(key, value);
        else if (key == "ceo_final_polish") ao.ceo.final_phase_polish = parse_bool(key, value);
        else if (key == "ceo_sample_refine") ao.ceo.sample_phase_refine = parse_bool(key, value);
        else if (key == "random_phases_variant")
        {
            if (value == "random_selection")
                random_phases_variant = RandomPhasesVariant::random_selection;
            else if (value == "optimized_selection")
                random_phases_variant = RandomPhasesVariant::optimized_selection;
            else
                bad_value(key, value, "random_selection or optimized_selection");
        }
        else if (key == "output") output = std::string(value);
        else
            fail(ErrorCode::parse, "config: unknown key '" + std::string(key) + "'");
    }

    std::string ExperimentConfig::get(std::string_view key) const
    {
        if (key == "ap_position") return fmt_vec3(geometry.ap_position);
        if (key == "bob_position") return fmt_vec3(geometry.bob_position);
        if (key == "eve_position") return fmt_vec3(geometry.eve_position);
        if (key == "fris_center") return fmt_vec3(geometry.fris_center);
        if (key == "fris_axis") return fmt_vec3(geometry.fris_axis);
        if (key == "ap_axis") return fmt_vec3(geometry.ap_axis);
        if (key == "num_locations") return std::to_string(geometry.num_locations);
        if (key == "aperture_wavelengths") return fmt_double(geometry.aperture_wavelengths);
        if (key == "wavelength") return fmt_double(geometry.wavelength);
        if (key == "reference_loss_db") return fmt_double(pathloss.reference_loss_db);
        if (key == "exponent_ap_fris") return fmt_double(pathloss.exponent_ap_fris);
        if (key == "exponent_other") return fmt_double(pathloss.exponent_other);
        if (key == "blockage_direct_db") return fmt_double(pathloss.blockage_direct_db);
        if (key == "rician_k_db") return fmt_double(rician_k_db);
        if (key == "noise_power_dbm") return fmt_double(noise_power_dbm);
        if (key == "num_antennas") return std::to_string(num_antennas);
        if (key == "num_active") return std::to_string(num_active);
        if (key == "phase_bits") return std::to_string(phase_bits);
        if (key == "power_dbm") return fmt_double(power_dbm);
        if (key == "trials") return std::to_string(trials);
        if (key == "base_seed") return std::to_string(base_seed);
        if (key == "schemes")
        {
            std::string s;
            for (auto id : schemes)
                s += (s.empty() ? "" : ",") + std::string(scheme_name(id));
            return s;
        }
        if (key == "sweep_var") return std::string(sweep_name(sweep_var));
        if (key == "sweep_values")
        {
            std::string s;
            for (double v : sweep_values)
                s += (s.empty() ? "" : ",") + fmt_double(v);
            return s;
        }
        if (key == "ao_max_iters") return std::to_string(ao.max_iters);
        if (key == "ao_rel_tolerance") return fmt_double(ao.rel_tolerance);
        if (key == "ceo_sample_size") return std::to_string(ao.ceo.sample_size);
        if (key == "ceo_elite_ratio") return fmt_double(ao.ceo.elite_ratio);
        if (key == "ceo_smoothing") return fmt_double(ao.ceo.smoothing);
        if (key == "ceo_max_iters") return std::to_string(ao.ceo.max_iters);
        if (key == "ceo_patience") return std::to_string(ao.ceo.stagnation_patience);
        if (key == "ceo_stagnation_tolerance") return fmt_double(ao.ceo.stagnation_tolerance);
        if (key == "ceo_final_polish") return ao.ceo.final_phase_polish ? "true" : "false";
        if (key == "ceo_sample_refine") return ao.ceo.sample_phase_refine ? "true" : "false";
        if (key == "random_phases_variant") return std::string(variant_name(random_phases_variant));
        if (key == "output") return output;
        fail(ErrorCode::parse, "config: unknown key '" + std::string(key) + "'");
    }

    FadingParams ExperimentConfig::fading() const
    {
        return {db_to_linear(rician_k_db), dbm_to_watts(noise_power_dbm)};
    }

    LinkBudget ExperimentConfig::budget() const
    {
        return {dbm_to_watts(power_dbm), dbm_to_watts(noise_power_dbm), num_active, phase_bits};
    }

    std::vector<double> ExperimentConfig::sweep_grid() const
    {
        if (!sweep_values.empty())
            return sweep_values;
        switch (sweep_var)
        {
        case SweepVariable::power: return {power_dbm};
        case SweepVariable::n_hat: return {static_cast<double>(num_active)};
        case SweepVariable::n_total: return {static_cast<double>(geometry.num_locations)};
        case SweepVariable::eve_x: return {geometry.eve_position.x};
        }
        return {};
    }

    ExperimentConfig ExperimentConfig::at_point(double value) const
    {
        ExperimentConfig c = *this;
        auto as_count = [&](double v) {
            if (v < 0.0 || v != std::floor(v))
                fail(ErrorCode::invalid_argument, "sweep value " + fmt_double(v) + " must be a non-negative integer");
            return static_cast<std::size_t>(v);
        };
        switch (sweep_var)
        {
        case SweepVariable::power: c.power_dbm = value; break;
        case SweepVariable::n_hat: c.num_active = as_count(value); break;
        case SweepVariable::n_total: c.geometry.num_locations = as_count(value); break;
        case SweepVariable::eve_x: c.geometry.eve_position.x = value; break;
        }
        c.sweep_values.clear();
        return c;
    }

    void ExperimentConfig::validate() const
    {
        if (trials < 1)
            fail(ErrorCode::invalid_argument, "config: trials must be at least 1");
        if (schemes.empty())
            fail(ErrorCode::invalid_argument, "config: scheme list is empty");
        if (num_antennas < 1)
            fail(ErrorCode::invalid_argument, "config: num_antennas must be at least 1");
        if (!std::isfinite(power_dbm) || !std::isfinite(noise_power_dbm) || !std::isfinite(rician_k_db))
            fail(ErrorCode::invalid_argument, "config: power, noise and K-factor must be finite");
        const auto grid = sweep_grid();
        if (grid.empty())
            fail(ErrorCode::invalid_argument, "config: sweep grid is empty");
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                fail(ErrorCode::invalid_argument, "config: sweep values must be strictly ascending");
        pathloss.validate();
        ao.validate();
    }

    void apply_config_text(ExperimentConfig &base, std::string_view text)
    {
        std::size_t line_no = 0;
        for (auto line : split(text, '\n'))
        {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                fail(ErrorCode::parse, "config line " + std::to_string(line_no) + ": expected 'key = value'");
            const auto key = trim(line.substr(0, eq));
            try
            {
                base.set(key, line.substr(eq + 1));
            }
            catch (const Error &e)
            {
                fail(e.code(), "config line " + std::to_string(line_no) + ": " + e.what());
            }
        }
    }

    void load_config_file(ExperimentConfig &base, const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            fail(ErrorCode::io, "cannot open config file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        try
        {
            apply_config_text(base, ss.str());
        }
        catch (const Error &e)
        {
            fail(e.code(), path + ": " + e.what());
        }
    }

    ExperimentConfig preset_config(std::string_view name)
    {
        ExperimentConfig c;
        c.trials = 200;
        if (name == "fig2")
        {
            c.sweep_var = SweepVariable::power;
            c.sweep_values = {0, 5, 10, 15, 20, 25, 30};
        }
        else if (name == "fig3")
        {
            c.sweep_var = SweepVariable::n_hat;
            c.sweep_values = {4, 8, 16, 24, 32};
        }
        else if (name == "fig4")
        {
            c.sweep_var = SweepVariable::n_total;
            c.sweep_values = {16, 25, 50, 75, 100};
        }
        else if (name == "fig5")
        {
            c.sweep_var = SweepVariable::eve_x;
            c.sweep_values = {48, 50, 52, 54, 56, 58, 60};
        }
        else
            fail(ErrorCode::invalid_argument, "unknown preset '" + std::string(name) + "'");
        return c;
    }
}
