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

#ifndef FRIS_NUMERICS_HPP
#define FRIS_NUMERICS_HPP

#include "fris/rng.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fris
{
    using cdouble = std::complex<double>;
    using ComplexVector = std::vector<cdouble>;

    // Dense complex matrix, row-major storage
    class ComplexMatrix
    {
    public:
        ComplexMatrix() = default;
        ComplexMatrix(std::size_t rows, std::size_t cols, cdouble fill = 0.0);

        static ComplexMatrix identity(std::size_t n);
        static ComplexMatrix diagonal(std::span<const double> values);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        bool empty() const { return data_.empty(); }

        cdouble &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
        const cdouble &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

        std::span<cdouble> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
        std::span<const cdouble> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
        std::span<const cdouble> data() const { return data_; }

        ComplexMatrix adjoint() const;
        double frobenius_norm() const;
        bool is_hermitian(double tol = 1e-12) const;

        friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
        friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
        friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
        friend ComplexMatrix operator*(cdouble s, const ComplexMatrix &a);
        friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<cdouble> data_;
    };

    ComplexVector operator*(const ComplexMatrix &a, std::span<const cdouble> x);

    cdouble inner(std::span<const cdouble> a, std::span<const cdouble> b); // a^H b
    double norm2(std::span<const cdouble> a);                               // ||a||^2
    ComplexMatrix outer(std::span<const cdouble> a, std::span<const cdouble> b); // a b^H

    // Rotates v so its first entry with magnitude above 1e-12 * max|v| is real and positive
    void apply_phase_convention(ComplexVector &v);

    // Zeroth-order Bessel function of the first kind
    double bessel_j0(double x);

    struct HermitianEigen
    {
        std::vector<double> values; // ascending
        ComplexMatrix vectors;      // unit-norm eigenvectors as columns, same order as values
    };

    // Cyclic Jacobi eigensolver. Stops when the off-diagonal Frobenius norm drops to
    // 1e-12 * ||A||_F or after 100 sweeps.
    HermitianEigen hermitian_eigen(const ComplexMatrix &a);

    // Symmetric root L = U sqrt(max(Lambda, 0)) U^H so that L L^H = A with negative
    // eigenvalues clipped. Throws not_psd when an eigenvalue is below -1e-8 * ||A||_F.
    ComplexMatrix psd_matrix_root(const ComplexMatrix &a);

    // Lower-triangular L with L L^H = A; throws singular when a pivot is not positive
    ComplexMatrix cholesky(const ComplexMatrix &a);

    struct RayleighMax
    {
        double value = 0.0;
        ComplexVector vector;
    };

    // max over unit v of (v^H A v) / (v^H B v), with A Hermitian PSD and B Hermitian PD.
    // The returned vector follows apply_phase_convention.
    RayleighMax max_generalized_rayleigh(const ComplexMatrix &a, const ComplexMatrix &b);

    ComplexVector sample_complex_gaussian(RngStream &rng, std::size_t n);
}

#endif
