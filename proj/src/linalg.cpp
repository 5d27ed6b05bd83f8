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

#include "polycs/linalg.hpp"

#include <cmath>

#include "polycs/errors.hpp"

namespace polycs {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) - o(i, j);
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) + o(i, j);
    return r;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<std::vector<double>> kernel_basis(const Matrix& A, double tol) {
    // one-sided Jacobi on the columns of a working copy; V accumulates the
    // right singular vectors
    const int n = A.cols();
    Matrix B = A;
    Matrix V = Matrix::identity(n);
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < B.rows(); ++i) {
                    app += B(i, p) * B(i, p);
                    aqq += B(i, q) * B(i, q);
                    apq += B(i, p) * B(i, q);
                }
                if (std::abs(apq) <= 1e-30 + 1e-16 * std::sqrt(app * aqq)) continue;
                rotated = true;
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (int i = 0; i < B.rows(); ++i) {
                    double bp = B(i, p), bq = B(i, q);
                    B(i, p) = c * bp - s * bq;
                    B(i, q) = s * bp + c * bq;
                }
                for (int i = 0; i < n; ++i) {
                    double vp = V(i, p), vq = V(i, q);
                    V(i, p) = c * vp - s * vq;
                    V(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
    double smax = 0.0;
    for (int j = 0; j < n; ++j) {
        double sq = 0.0;
        for (int i = 0; i < B.rows(); ++i) sq += B(i, j) * B(i, j);
        sigma[static_cast<std::size_t>(j)] = std::sqrt(sq);
        smax = std::max(smax, sigma[static_cast<std::size_t>(j)]);
    }
    std::vector<std::vector<double>> kernel;
    for (int j = 0; j < n; ++j) {
        if (sigma[static_cast<std::size_t>(j)] < tol * std::max(smax, 1e-300)) {
            std::vector<double> v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = V(i, j);
            // orient deterministically: first nonzero component positive
            for (double x : v) {
                if (std::abs(x) > 1e-14) {
                    if (x < 0)
                        for (auto& y : v) y = -y;
                    break;
                }
            }
            kernel.push_back(std::move(v));
        }
    }
    return kernel;
}

std::vector<std::complex<double>> SparseC::apply(const std::vector<std::complex<double>>& v) const {
    std::vector<std::complex<double>> r(static_cast<std::size_t>(n), {0.0, 0.0});
    for (const auto& e : entries) r[static_cast<std::size_t>(e.row)] += e.value * v[static_cast<std::size_t>(e.col)];
    return r;
}

double SparseC::one_norm() const {
    std::vector<double> colsum(static_cast<std::size_t>(n), 0.0);
    for (const auto& e : entries) colsum[static_cast<std::size_t>(e.col)] += std::abs(e.value);
    double m = 0.0;
    for (double v : colsum) m = std::max(m, v);
    return m;
}

SparseC SparseC::adjoint() const {
    SparseC a;
    a.n = n;
    a.entries.reserve(entries.size());
    for (const auto& e : entries) a.entries.push_back({e.col, e.row, std::conj(e.value)});
    return a;
}

std::vector<std::complex<double>> expm_apply(const SparseC& A, std::vector<std::complex<double>> v) {
    double norm = A.one_norm();
    int s = 0;
    while (norm > 1.0 && s < 60) {
        norm *= 0.5;
        ++s;
    }
    const double scale = std::ldexp(1.0, -s);
    const long long steps = 1LL << s;
    for (long long step = 0; step < steps; ++step) {
        std::vector<std::complex<double>> term = v;
        std::vector<std::complex<double>> acc = v;
        double vn = 0.0;
        for (const auto& c : v) vn += std::norm(c);
        vn = std::sqrt(vn);
        for (int k = 1; k <= 64; ++k) {
            term = A.apply(term);
            double f = scale / k;
            double tn = 0.0;
            for (auto& c : term) {
                c *= f;
                tn += std::norm(c);
            }
            tn = std::sqrt(tn);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
            if (tn <= 1e-18 * std::max(vn, 1.0)) break;
        }
        v = std::move(acc);
    }
    return v;
}

}  // namespace polycs
