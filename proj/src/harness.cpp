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

#include "fris/harness.hpp"
#include "fris/error.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

namespace fris
{
    RngStream channel_stream(std::uint64_t base_seed, std::size_t trial)
    {
        return RngStream(base_seed, trial).derive(0);
    }

    RngStream scheme_stream(std::uint64_t base_seed, std::size_t sweep_index, std::size_t trial, SchemeId scheme)
    {
        return RngStream(base_seed, trial).derive(1 + sweep_index, 1 + static_cast<std::uint64_t>(scheme));
    }

    std::uint64_t channel_fingerprint(const ChannelSet &channels)
    {
        // FNV-1a over the raw bytes; corr_root is shared and immutable, so it is not hashed
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto feed = [&](std::span<const cdouble> values) {
            for (const auto &v : values)
            {
                unsigned char bytes[sizeof(cdouble)];
                std::memcpy(bytes, &v, sizeof bytes);
                for (unsigned char b : bytes)
                {
                    h ^= b;
                    h *= 0x100000001b3ULL;
                }
            }
        };
        feed(channels.h_dB);
        feed(channels.h_dE);
        feed(channels.G.data());
        feed(channels.h_rB);
        feed(channels.h_rE);
        return h;
    }

    SchemeResult run_scheme(SchemeId id, const ChannelSet &channels, const ExperimentConfig &point,
                            const RngStream &rng)
    {
        const LinkBudget budget = point.budget();
        switch (id)
        {
        case SchemeId::ao_ceo: return run_ao_ceo(channels, budget, point.ao, rng);
        case SchemeId::random_selection_phase_opt: return run_random_selection_phase_opt(channels, budget, point.ao, rng);
        case SchemeId::conventional_ris: return run_conventional_ris(channels, budget, point.ao);
        case SchemeId::random_phases: return run_fris_random_phases(channels, budget, point.ao, rng, point.random_phases_variant);
        case SchemeId::no_surface: return run_no_surface(channels, budget);
        case SchemeId::ao_ceo_literal:
        {
            AoParams literal = point.ao;
            literal.ceo.sample_phase_refine = false;
            literal.ceo.final_phase_polish = false;
            SchemeResult r = run_ao_ceo(channels, budget, literal, rng);
            r.scheme = SchemeId::ao_ceo_literal;
            return r;
        }
        }
        fail(ErrorCode::invalid_argument, "run_scheme: unknown scheme");
    }

    TrialOutput run_trial(const ExperimentConfig &point, const ChannelGenerator &generator, std::size_t sweep_index,
                          double sweep_value, std::size_t trial)
    {
        const ChannelSet channels = generator.realize(channel_stream(point.base_seed, trial));
        TrialOutput out;
        out.records.reserve(point.schemes.size());
        for (SchemeId id : point.schemes)
        {
            out.fingerprints.push_back(channel_fingerprint(channels));
            const auto start = std::chrono::steady_clock::now();
            const SchemeResult r = run_scheme(id, channels, point, scheme_stream(point.base_seed, sweep_index, trial, id));
            const auto stop = std::chrono::steady_clock::now();

            TrialRecord rec;
            rec.sweep_index = sweep_index;
            rec.sweep_value = sweep_value;
            rec.trial = trial;
            rec.scheme = id;
            rec.secrecy_rate = r.secrecy_rate;
            rec.objective_ratio = r.objective_ratio;
            rec.ao_iters = r.iterations;
            rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            rec.seed = point.base_seed;
            out.records.push_back(rec);
        }
        return out;
    }

    SweepResult run_sweep(const ExperimentConfig &config, unsigned threads)
    {
        config.validate();
        SweepResult result;
        result.sweep_var = config.sweep_var;
        result.sweep_values = config.sweep_grid();

        struct Point
        {
            ExperimentConfig config;
            std::shared_ptr<const ChannelGenerator> generator;
        };
        const std::size_t n_points = result.sweep_values.size();
        std::vector<std::optional<Point>> points(n_points);
        for (std::size_t i = 0; i < n_points; ++i)
        {
            const double value = result.sweep_values[i];
            try
            {
                ExperimentConfig pc = config.at_point(value);
                if (pc.num_active < 1 || pc.num_active > pc.geometry.num_locations)
                    fail(ErrorCode::infeasible, "infeasible point: num_active = " + std::to_string(pc.num_active) +
                                                    " with num_locations = " + std::to_string(pc.geometry.num_locations));
                auto gen = std::make_shared<const ChannelGenerator>(pc.geometry, pc.pathloss, pc.fading(), pc.num_antennas);
                points[i] = Point{std::move(pc), std::move(gen)};
            }
            catch (const std::exception &e)
            {
                result.errors.push_back({i, value, e.what()});
            }
        }

        struct Task
        {
            std::size_t point;
            std::size_t trial;
        };
        std::vector<Task> tasks;
        for (std::size_t i = 0; i < n_points; ++i)
            if (points[i])
                for (std::size_t t = 0; t < config.trials; ++t)
                    tasks.push_back({i, t});

        std::vector<TrialOutput> outputs(tasks.size());
        std::vector<std::string> task_errors(tasks.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (std::size_t k = next.fetch_add(1); k < tasks.size(); k = next.fetch_add(1))
            {
                const Task &task = tasks[k];
                const Point &p = *points[task.point];
                try
                {
                    outputs[k] = run_trial(p.config, *p.generator, task.point, result.sweep_values[task.point], task.trial);
                }
                catch (const std::exception &e)
                {
                    task_errors[k] = std::string("trial ") + std::to_string(task.trial) + ": " + e.what();
                }
            }
        };

        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        const std::size_t n_workers = std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1));
        if (n_workers <= 1)
            worker();
        else
        {
            std::vector<std::jthread> pool;
            pool.reserve(n_workers);
            for (std::size_t w = 0; w < n_workers; ++w)
                pool.emplace_back(worker);
        }

        std::vector<bool> point_failed(n_points, false);
        for (std::size_t k = 0; k < tasks.size(); ++k)
        {
            if (!task_errors[k].empty())
            {
                const std::size_t pi = tasks[k].point;
                if (!point_failed[pi])
                    result.errors.push_back({pi, result.sweep_values[pi], task_errors[k]});
                point_failed[pi] = true;
                continue;
            }
            for (auto &rec : outputs[k].records)
                result.records.push_back(rec);
        }
        std::stable_sort(result.errors.begin(), result.errors.end(),
                         [](const PointError &a, const PointError &b) { return a.sweep_index < b.sweep_index; });
        result.summary = summarize(result.records);
        return result;
    }

    std::vector<SummaryRow> summarize(std::span<const TrialRecord> records)
    {
        struct Acc
        {
            double value;
            SchemeId scheme;
            std::vector<double> rates;
        };
        std::map<std::pair<std::size_t, SchemeId>, std::size_t> slot;
        std::vector<std::pair<std::size_t, Acc>> groups;
        for (const auto &r : records)
        {
            const auto key = std::make_pair(r.sweep_index, r.scheme);
            auto it = slot.find(key);
            if (it == slot.end())
            {
                it = slot.emplace(key, groups.size()).first;
                groups.push_back({r.sweep_index, Acc{r.sweep_value, r.scheme, {}}});
            }
            groups[it->second].second.rates.push_back(r.secrecy_rate);
        }
        std::stable_sort(groups.begin(), groups.end(), [](const auto &a, const auto &b) { return a.first < b.first; });

        std::vector<SummaryRow> out;
        out.reserve(groups.size());
        for (const auto &[index, acc] : groups)
        {
            const auto n = acc.rates.size();
            double sum = 0.0;
            for (double v : acc.rates)
                sum += v;
            const double mean = sum / static_cast<double>(n);
            double ss = 0.0;
            for (double v : acc.rates)
                ss += (v - mean) * (v - mean);
            const double se = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
            out.push_back({index, acc.value, acc.scheme, mean, se, n});
        }
        return out;
    }

    std::string format_csv(SweepVariable var, std::span<const TrialRecord> records)
    {
        std::string out(csv_header);
        out += '\n';
        char buf[512];
        const std::string_view var_name = sweep_name(var);
        for (const auto &r : records)
        {
            const std::string_view scheme = scheme_name(r.scheme);
            std::snprintf(buf, sizeof buf, "%.*s,%.17g,%zu,%.*s,%.17g,%.17g,%zu,%.3f,%llu\n",
                          static_cast<int>(var_name.size()), var_name.data(), r.sweep_value, r.trial,
                          static_cast<int>(scheme.size()), scheme.data(), r.secrecy_rate, r.objective_ratio,
                          r.ao_iters, r.wall_ms, static_cast<unsigned long long>(r.seed));
            out += buf;
        }
        return out;
    }

    void write_csv(SweepVariable var, std::span<const TrialRecord> records, const std::string &path)
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            fail(ErrorCode::io, "cannot open '" + path + "' for writing");
        const std::string body = format_csv(var, records);
        f.write(body.data(), static_cast<std::streamsize>(body.size()));
        f.close();
        if (!f)
            fail(ErrorCode::io, "failed writing '" + path + "'");
    }

    namespace
    {
        template <typename T>
        T parse_field(std::string_view text, std::size_t line)
        {
            T v{};
            const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
            if (res.ec != std::errc() || res.ptr != text.data() + text.size())
                fail(ErrorCode::parse, "csv line " + std::to_string(line) + ": bad field '" + std::string(text) + "'");
            return v;
        }
    }

    std::vector<CsvRow> read_csv(const std::string &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            fail(ErrorCode::io, "cannot open '" + path + "'");
        std::string line;
        if (!std::getline(f, line) || line != csv_header)
            fail(ErrorCode::parse, path + ": missing or unexpected CSV header");
        std::vector<CsvRow> rows;
        std::size_t line_no = 1;
        while (std::getline(f, line))
        {
            ++line_no;
            if (line.empty())
                continue;
            std::vector<std::string_view> fields;
            std::string_view rest(line);
            while (true)
            {
                const auto pos = rest.find(',');
                fields.push_back(rest.substr(0, pos));
                if (pos == std::string_view::npos)
                    break;
                rest.remove_prefix(pos + 1);
            }
            if (fields.size() != 9)
                fail(ErrorCode::parse, "csv line " + std::to_string(line_no) + ": expected 9 fields");
            CsvRow row;
            row.sweep_var = std::string(fields[0]);
            row.record.sweep_value = parse_field<double>(fields[1], line_no);
            row.record.trial = parse_field<std::size_t>(fields[2], line_no);
            const auto id = parse_scheme(fields[3]);
            if (!id)
                fail(ErrorCode::parse, "csv line " + std::to_string(line_no) + ": unknown scheme");
            row.record.scheme = *id;
            row.record.secrecy_rate = parse_field<double>(fields[4], line_no);
            row.record.objective_ratio = parse_field<double>(fields[5], line_no);
            row.record.ao_iters = parse_field<std::size_t>(fields[6], line_no);
            row.record.wall_ms = parse_field<double>(fields[7], line_no);
            row.record.seed = parse_field<std::uint64_t>(fields[8], line_no);
            rows.push_back(std::move(row));
        }
        return rows;
    }
}
