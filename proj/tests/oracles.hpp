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

// Reference computations used by the tests. Each is written from the defining formula,
// without calling the library routine it checks.

#ifndef FRIS_TEST_ORACLES_HPP
#define FRIS_TEST_ORACLES_HPP

#include "fris/channel.hpp"
#include "fris/rng.hpp"
#include "fris/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle
{
    using cd = std::complex<double>;
    using cvec = std::vector<cd>;

    // J0(x) = (1/pi) int_0^pi cos(x sin t) dt. The integrand is smooth and pi-periodic, so the
    // trapezoid rule converges geometrically once the node count exceeds |x|.
    inline double j0_integral(double x, int nodes = 4000)
    {
        const double h = std::numbers::pi / nodes;
        double sum = 0.5 * (1.0 + std::cos(x * std::sin(std::numbers::pi)));
        for (int k = 1; k < nodes; ++k)
            sum += std::cos(x * std::sin(k * h));
        return sum * h / std::numbers::pi;
    }

    // Plain power series, fine for |x| <= 8 in double precision
    inline double j0_series(double x)
    {
        double term = 1.0, sum = 1.0;
        const double q = -0.25 * x * x;
        for (int k = 1; k < 80; ++k)
        {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
        }
        return sum;
    }

    inline double bisect_zero(double (*f)(double), double lo, double hi)
    {
        for (int i = 0; i < 200; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            if ((f(lo) < 0) == (f(mid) < 0))
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    inline cd dot(const cvec &a, const cvec &b) // sum conj(a_m) b_m
    {
        cd s = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m)
            s += std::conj(a[m]) * b[m];
        return s;
    }

    inline double sq(const cvec &a) { return std::real(dot(a, a)); }

    // max over unit v of (s2 + P|b^H v|^2) / (s2 + P|e^H v|^2). Writing lambda = 1 - s, the
    // generalized characteristic polynomial det(A - lambda B) restricted to span{b, e} reduces to
    //   (1 + a|e|^2) s^2 + (a(|b|^2 - |e|^2) + a^2 D) s - a^2 D = 0,  a = P/s2,
    //   D = |b|^2 |e|^2 - |b^H e|^2,
    // and the largest lambda is 1 minus the smaller root.
    inline double beam_ratio_max(const cvec &b, const cvec &e, double power, double noise)
    {
        const double a = power / noise;
        const double bb = sq(b), ee = sq(e);
        const double d = std::max(0.0, bb * ee - std::norm(dot(b, e)));
        const double qa = 1.0 + a * ee;
        const double qb = a * (bb - ee) + a * a * d;
        const double qc = -a * a * d;
        const double disc = std::sqrt(std::max(0.0, qb * qb - 4.0 * qa * qc));
        // smaller root, written to avoid cancellation
        const double s_small = qb >= 0.0 ? (-qb - disc) / (2.0 * qa) : (2.0 * qc) / (-qb + disc);
        return std::max(1.0 - s_small, 1.0);
    }

    inline double beam_ratio(const cvec &b, const cvec &e, const cvec &w, double noise)
    {
        return (noise + std::norm(dot(b, w))) / (noise + std::norm(dot(e, w)));
    }

    // h^H = d^H + r^H Phi G with Phi built as a dense N x N diagonal matrix
    inline cvec effective(const cvec &d, const cvec &r, const fris::ComplexMatrix &g, const fris::FrisConfig &c)
    {
        const std::size_t n = r.size(), m = d.size();
        std::vector<cvec> phi(n, cvec(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            if (c.selection[i])
                phi[i][i] = std::polar(1.0, 2.0 * std::numbers::pi * c.phase_index[i] / (1u << c.bits));
        cvec row_h(m, 0.0); // h^H as a row
        for (std::size_t j = 0; j < m; ++j)
        {
            cd acc = std::conj(d[j]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    acc += std::conj(r[i]) * phi[i][k] * g(k, j);
            row_h[j] = acc;
        }
        cvec h(m);
        for (std::size_t j = 0; j < m; ++j)
            h[j] = std::conj(row_h[j]);
        return h;
    }

    // (1 + gamma_B) / (1 + gamma_E) composed step by step
    inline double ratio(const fris::ChannelSet &ch, const fris::FrisConfig &c, const cvec &w, double noise)
    {
        const cvec hb = effective(ch.h_dB, ch.h_rB, ch.G, c);
        const cvec he = effective(ch.h_dE, ch.h_rE, ch.G, c);
        const double gb = std::norm(dot(hb, w)) / noise;
        const double ge = std::norm(dot(he, w)) / noise;
        return (1.0 + gb) / (1.0 + ge);
    }

    inline fris::ChannelSet small_instance(std::uint64_t seed, std::size_t n, std::size_t m)
    {
        fris::SystemGeometry g;
        g.num_locations = n;
        return fris::realize_channels(g, fris::PathLossModel{}, fris::FadingParams{}, m, fris::RngStream(seed, 4242));
    }

    // Every (selection, phase) config with n_hat = 2, each under its optimal beamformer
    inline double exhaustive_joint_pairs(const fris::ChannelSet &ch, unsigned bits, double power, double noise)
    {
        const std::size_t n = ch.num_locations();
        const std::uint32_t levels = 1u << bits;
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::uint32_t pi = 0; pi < levels; ++pi)
                    for (std::uint32_t pj = 0; pj < levels; ++pj)
                    {
                        fris::FrisConfig c(n, bits, 2);
                        c.selection[i] = c.selection[j] = 1;
                        c.phase_index[i] = pi;
                        c.phase_index[j] = pj;
                        const cvec hb = effective(ch.h_dB, ch.h_rB, ch.G, c);
                        const cvec he = effective(ch.h_dE, ch.h_rE, ch.G, c);
                        best = std::max(best, beam_ratio_max(hb, he, power, noise));
                    }
        return best;
    }

    inline cvec random_unit(fris::RngStream &rng, std::size_t m)
    {
        cvec v(m);
        for (auto &x : v)
            x = rng.complex_normal();
        const double nv = std::sqrt(sq(v));
        for (auto &x : v)
            x /= nv;
        return v;
    }

    // Largest singular value squared of an N x M matrix by power iteration on A^H A
    inline double top_singular_sq(const std::vector<cvec> &rows, std::size_t cols, int iters = 500)
    {
        cvec v(cols, 1.0);
        double lambda = 0.0;
        for (int it = 0; it < iters; ++it)
        {
            cvec av(rows.size(), 0.0), w(cols, 0.0);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    av[i] += rows[i][j] * v[j];
            for (std::size_t j = 0; j < cols; ++j)
                for (std::size_t i = 0; i < rows.size(); ++i)
                    w[j] += std::conj(rows[i][j]) * av[i];
            lambda = std::sqrt(sq(w));
            if (lambda == 0.0)
                return 0.0;
            for (std::size_t j = 0; j < cols; ++j)
                v[j] = w[j] / lambda;
        }
        return lambda;
    }

    struct Stats
    {
        double mean = 0.0;
        double se = 0.0;
    };

    inline Stats stats(const std::vector<double> &x)
    {
        Stats s;
        for (double v : x)
            s.mean += v;
        s.mean /= static_cast<double>(x.size());
        double ss = 0.0;
        for (double v : x)
            ss += (v - s.mean) * (v - s.mean);
        s.se = std::sqrt(ss / static_cast<double>(x.size() - 1) / static_cast<double>(x.size()));
        return s;
    }
}

#endif
