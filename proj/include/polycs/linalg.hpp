/*
   Copyright 2026 The polycs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYCS_LINALG_HPP
#define POLYCS_LINALG_HPP

#include <complex>
#include <vector>

namespace polycs {

/// Dense real matrix, row major.
class Matrix {
   public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;

    double max_abs() const;

   private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// Orthonormal basis of {v : Av ~ 0}, detected through one-sided Jacobi:
/// right singular vectors whose singular value is below tol times the largest.
std::vector<std::vector<double>> kernel_basis(const Matrix& A, double tol = 1e-9);

/// Sparse complex matrix in coordinate form, for exponential actions.
struct SparseC {
    int n = 0;
    struct Entry {
        int row, col;
        std::complex<double> value;
    };
    std::vector<Entry> entries;

    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const;
    double one_norm() const;
    SparseC adjoint() const;
};

/// exp(A) v by scaling (2^s substeps) and truncated Taylor series per substep.
std::vector<std::complex<double>> expm_apply(const SparseC& A,
                                             std::vector<std::complex<double>> v);

}  // namespace polycs

#endif
