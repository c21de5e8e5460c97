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

#include "fris/numerics.hpp"
#include "fris/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace fris
{
    // ---------------------------------------------------------------- ComplexMatrix

    ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, cdouble fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
        if (rows == 0 || cols == 0)
            fail(ErrorCode::invalid_argument, "ComplexMatrix: dimensions must be at least 1x1");
    }

    ComplexMatrix ComplexMatrix::identity(std::size_t n)
    {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values)
    {
        ComplexMatrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            m(i, i) = values[i];
        return m;
    }

    ComplexMatrix ComplexMatrix::adjoint() const
    {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    double ComplexMatrix::frobenius_norm() const
    {
        double s = 0.0;
        for (const auto &v : data_)
            s += std::norm(v);
        return std::sqrt(s);
    }

    bool ComplexMatrix::is_hermitian(double tol) const
    {
        if (rows_ != cols_)
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
                    return false;
        return true;
    }

    ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.cols_ != b.rows_)
            fail(ErrorCode::invalid_argument, "ComplexMatrix product: inner dimensions differ");
        ComplexMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
        {
            auto out_row = out.row(i);
            for (std::size_t k = 0; k < a.cols_; ++k)
            {
                const cdouble aik = a(i, k);
                if (aik == cdouble(0.0))
                    continue;
                const auto b_row = b.row(k);
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out_row[j] += aik * b_row[j];
            }
        }
        return out;
    }

    ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            fail(ErrorCode::invalid_argument, "ComplexMatrix sum: dimensions differ");
        ComplexMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] += b.data_[i];
        return out;
    }

    ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            fail(ErrorCode::invalid_argument, "ComplexMatrix difference: dimensions differ");
        ComplexMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] -= b.data_[i];
        return out;
    }

    ComplexMatrix operator*(cdouble s, const ComplexMatrix &a)
    {
        ComplexMatrix out = a;
        for (auto &v : out.data_)
            v *= s;
        return out;
    }

    ComplexVector operator*(const ComplexMatrix &a, std::span<const cdouble> x)
    {
        if (a.cols() != x.size())
            fail(ErrorCode::invalid_argument, "matrix-vector product: dimensions differ");
        ComplexVector y(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
        {
            const auto r = a.row(i);
            cdouble acc = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j)
                acc += r[j] * x[j];
            y[i] = acc;
        }
        return y;
    }

    cdouble inner(std::span<const cdouble> a, std::span<const cdouble> b)
    {
        if (a.size() != b.size())
            fail(ErrorCode::invalid_argument, "inner: length mismatch");
        cdouble acc = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            acc += std::conj(a[i]) * b[i];
        return acc;
    }

    double norm2(std::span<const cdouble> a)
    {
        double s = 0.0;
        for (const auto &v : a)
            s += std::norm(v);
        return s;
    }

    ComplexMatrix outer(std::span<const cdouble> a, std::span<const cdouble> b)
    {
        ComplexMatrix m(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                m(i, j) = a[i] * std::conj(b[j]);
        return m;
    }

    void apply_phase_convention(ComplexVector &v)
    {
        double peak = 0.0;
        for (const auto &x : v)
            peak = std::max(peak, std::abs(x));
        if (peak == 0.0)
            return;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            const double mag = std::abs(v[i]);
            if (mag > 1e-12 * peak)
            {
                const cdouble rot = std::conj(v[i]) / mag;
                for (auto &y : v)
                    y *= rot;
                v[i] = mag;
                return;
            }
        }
    }

    // ---------------------------------------------------------------- Bessel J0

    namespace
    {
        double j0_series(double x)
        {
            const double q = 0.25 * x * x;
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 60; ++k)
            {
                term *= -q / (static_cast<double>(k) * k);
                sum += term;
                if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300)
                    break;
            }
            return sum;
        }

        // Miller backward recurrence normalized with 1 = J0 + 2 sum_k J_{2k}
        double j0_miller(double x)
        {
            const int start = 2 * (static_cast<int>(x + 40.0) / 2);
            double f_next = 0.0, f = 1e-30, even_sum = 0.0;
            for (int k = start; k >= 1; --k)
            {
                const double f_prev = (2.0 * k / x) * f - f_next;
                f_next = f;
                f = f_prev;
                // f now holds J_{k-1} (unnormalized)
                if ((k - 1) % 2 == 0 && k - 1 > 0)
                    even_sum += f;
                if (std::abs(f) > 1e250)
                {
                    f *= 1e-250;
                    f_next *= 1e-250;
                    even_sum *= 1e-250;
                }
            }
            return f / (f + 2.0 * even_sum);
        }

        // Hankel asymptotic expansion, truncated at the smallest term
        double j0_asymptotic(double x)
        {
            double p = 1.0, q = 0.0;
            double a = 1.0; // a_k / x^k
            double last = 1.0;
            for (int k = 1; k < 200; ++k)
            {
                const double odd = 2.0 * k - 1.0;
                a *= -(odd * odd) / (8.0 * k * x);
                const double mag = std::abs(a);
                if (mag > last)
                    break;
                last = mag;
                // k odd contributes to Q, k even to P; sign (-1)^floor(k/2)
                const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
                if (k % 2 == 1)
                    q += sign * a;
                else
                    p += sign * a;
                if (mag < 1e-17)
                    break;
            }
            const double c = std::cos(x), s = std::sin(x);
            const double cos_chi = (c + s) * std::numbers::sqrt2 * 0.5; // cos(x - pi/4)
            const double sin_chi = (s - c) * std::numbers::sqrt2 * 0.5; // sin(x - pi/4)
            return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
        }
    }

    double bessel_j0(double x)
    {
        if (!std::isfinite(x))
            fail(ErrorCode::domain, "bessel_j0: argument must be finite");
        x = std::abs(x);
        if (x <= 4.0)
            return j0_series(x);
        if (x <= 25.0)
            return j0_miller(x);
        return j0_asymptotic(x);
    }

    // ---------------------------------------------------------------- eigen solvers

    HermitianEigen hermitian_eigen(const ComplexMatrix &input)
    {
        const std::size_t n = input.rows();
        if (n != input.cols())
            fail(ErrorCode::invalid_argument, "hermitian_eigen: matrix must be square");
        const double scale = input.frobenius_norm();
        if (!input.is_hermitian(1e-12 * std::max(1.0, scale)))
            fail(ErrorCode::invalid_argument, "hermitian_eigen: matrix is not Hermitian");

        ComplexMatrix a = input;
        ComplexMatrix v = ComplexMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            a(i, i) = a(i, i).real();

        const double target = 1e-12 * scale;
        auto off_norm = [&]() {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j)
                        s += std::norm(a(i, j));
            return std::sqrt(s);
        };

        for (int sweep = 0; sweep < 100; ++sweep)
        {
            if (off_norm() <= target)
                break;
            for (std::size_t p = 0; p + 1 < n; ++p)
            {
                for (std::size_t q = p + 1; q < n; ++q)
                {
                    const cdouble apq = a(p, q);
                    const double mag = std::abs(apq);
                    if (mag == 0.0)
                        continue;
                    const cdouble e = apq / mag;
                    const double app = a(p, p).real(), aqq = a(q, q).real();
                    const double tau = (aqq - app) / (2.0 * mag);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const cdouble jpq = s * e;
                    const cdouble jqp = -s * std::conj(e);

                    // A <- A J
                    for (std::size_t k = 0; k < n; ++k)
                    {
                        const cdouble akp = a(k, p), akq = a(k, q);
                        a(k, p) = akp * c + akq * jqp;
                        a(k, q) = akp * jpq + akq * c;
                    }
                    // A <- J^H A
                    for (std::size_t k = 0; k < n; ++k)
                    {
                        const cdouble apk = a(p, k), aqk = a(q, k);
                        a(p, k) = c * apk + std::conj(jqp) * aqk;
                        a(q, k) = std::conj(jpq) * apk + c * aqk;
                    }
                    a(p, p) = app - t * mag;
                    a(q, q) = aqq + t * mag;
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    // V <- V J
                    for (std::size_t k = 0; k < n; ++k)
                    {
                        const cdouble vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = vkp * c + vkq * jqp;
                        v(k, q) = vkp * jpq + vkq * c;
                    }
                }
            }
        }

        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

        HermitianEigen out;
        out.values.resize(n);
        out.vectors = ComplexMatrix(n, n);
        for (std::size_t c = 0; c < n; ++c)
        {
            out.values[c] = a(order[c], order[c]).real();
            for (std::size_t r = 0; r < n; ++r)
                out.vectors(r, c) = v(r, order[c]);
        }
        return out;
    }

    ComplexMatrix psd_matrix_root(const ComplexMatrix &a)
    {
        const HermitianEigen eig = hermitian_eigen(a);
        const double scale = a.frobenius_norm();
        const std::size_t n = a.rows();
        if (!eig.values.empty() && eig.values.front() < -1e-8 * scale)
            fail(ErrorCode::not_psd, "psd_matrix_root: eigenvalue " + std::to_string(eig.values.front()) +
                                         " is below the PSD tolerance");
        std::vector<double> roots(n);
        for (std::size_t i = 0; i < n; ++i)
            roots[i] = std::sqrt(std::max(eig.values[i], 0.0));

        ComplexMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
            {
                const cdouble uik = eig.vectors(i, k) * roots[k];
                if (uik == cdouble(0.0))
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    out(i, j) += uik * std::conj(eig.vectors(j, k));
            }
        return out;
    }

    ComplexMatrix cholesky(const ComplexMatrix &a)
    {
        const std::size_t n = a.rows();
        if (n != a.cols())
            fail(ErrorCode::invalid_argument, "cholesky: matrix must be square");
        ComplexMatrix l(n, n);
        for (std::size_t j = 0; j < n; ++j)
        {
            double d = a(j, j).real();
            for (std::size_t k = 0; k < j; ++k)
                d -= std::norm(l(j, k));
            if (!(d > 0.0))
                fail(ErrorCode::singular, "cholesky: matrix is not positive definite");
            const double ljj = std::sqrt(d);
            l(j, j) = ljj;
            for (std::size_t i = j + 1; i < n; ++i)
            {
                cdouble s = a(i, j);
                for (std::size_t k = 0; k < j; ++k)
                    s -= l(i, k) * std::conj(l(j, k));
                l(i, j) = s / ljj;
            }
        }
        return l;
    }

    RayleighMax max_generalized_rayleigh(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        const std::size_t n = a.rows();
        if (a.cols() != n || b.rows() != n || b.cols() != n)
            fail(ErrorCode::invalid_argument, "max_generalized_rayleigh: matrices must be square and equal in size");
        const double b_scale = b.frobenius_norm();
        if (!b.is_hermitian(1e-12 * std::max(1.0, b_scale)))
            fail(ErrorCode::invalid_argument, "max_generalized_rayleigh: B is not Hermitian");
        const HermitianEigen b_eig = hermitian_eigen(b);
        if (!(b_eig.values.front() > 1e-12 * b_scale))
            fail(ErrorCode::singular, "max_generalized_rayleigh: B is not positive definite");

        const ComplexMatrix l = cholesky(b);

        // Y = L^{-1} A by forward substitution on each column
        auto forward = [&](const ComplexMatrix &rhs) {
            ComplexMatrix x(n, rhs.cols());
            for (std::size_t c = 0; c < rhs.cols(); ++c)
                for (std::size_t i = 0; i < n; ++i)
                {
                    cdouble s = rhs(i, c);
                    for (std::size_t k = 0; k < i; ++k)
                        s -= l(i, k) * x(k, c);
                    x(i, c) = s / l(i, i);
                }
            return x;
        };
        const ComplexMatrix y = forward(a);
        ComplexMatrix c = forward(y.adjoint()); // L^{-1} A L^{-H}
        for (std::size_t i = 0; i < n; ++i)
        {
            c(i, i) = c(i, i).real();
            for (std::size_t j = i + 1; j < n; ++j)
            {
                const cdouble avg = 0.5 * (c(i, j) + std::conj(c(j, i)));
                c(i, j) = avg;
                c(j, i) = std::conj(avg);
            }
        }

        const HermitianEigen eig = hermitian_eigen(c);
        const std::size_t top = n - 1;

        // v = L^{-H} u by back substitution with the upper factor L^H
        ComplexVector vec(n);
        for (std::size_t ii = n; ii-- > 0;)
        {
            cdouble s = eig.vectors(ii, top);
            for (std::size_t k = ii + 1; k < n; ++k)
                s -= std::conj(l(k, ii)) * vec[k];
            vec[ii] = s / l(ii, ii);
        }
        const double nrm = std::sqrt(norm2(vec));
        for (auto &x : vec)
            x /= nrm;
        apply_phase_convention(vec);

        return {eig.values[top], std::move(vec)};
    }

    ComplexVector sample_complex_gaussian(RngStream &rng, std::size_t n)
    {
        if (n == 0)
            fail(ErrorCode::invalid_argument, "sample_complex_gaussian: n must be at least 1");
        ComplexVector out(n);
        for (auto &z : out)
            z = rng.complex_normal();
        return out;
    }
}
