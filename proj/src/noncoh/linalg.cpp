// SPDX-License-Identifier: Apache-2.0
//
// noncoh: gDoF and achievable rates for noncoherent block-fading MIMO
// Copyright (C) 2026 The noncoh authors
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

#include "noncoh/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "noncoh/error.hpp"

namespace noncoh {

LqFactors lq_decompose(const ComplexMatrix &m)
{
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    if (rows == 0 || cols == 0)
        throw DomainError("lq_decompose: empty matrix");
    if (rows > cols)
        throw DomainError("lq_decompose: requires rows <= cols, got " + std::to_string(rows) + "x" +
                          std::to_string(cols));

    LqFactors f{ComplexMatrix::Zero(rows, rows), ComplexMatrix::Zero(rows, cols)};
    for (Eigen::Index i = 0; i < rows; ++i) {
        Eigen::RowVectorXcd v = m.row(i);
        const double row_norm = v.norm();
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < i; ++j) {
                // projection coefficient <v, q_j> = v q_j^H
                const std::complex<double> coef = f.q.row(j).dot(v);
                f.l(i, j) += coef;
                v -= coef * f.q.row(j);
            }
        }
        const double r = v.norm();
        if (!(r > 1e-12 * row_norm) || row_norm == 0.0)
            throw SingularityError("lq_decompose: row " + std::to_string(i) +
                                   " is linearly dependent on the preceding rows");
        f.l(i, i) = r;
        f.q.row(i) = v / r;
    }
    return f;
}

ComplexMatrix sample_gaussian_matrix(int rows, int cols, double variance, Rng &rng)
{
    ComplexMatrix z(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            z(i, j) = sample_complex_gaussian(variance, rng);
    return z;
}

ComplexMatrix sample_isotropic_unitary(int n, Rng &rng)
{
    if (n < 1)
        throw DomainError("sample_isotropic_unitary: n must be >= 1");
    // Rows of a Gaussian matrix are independent almost surely; a numerically
    // dependent draw is redrawn.
    for (;;) {
        try {
            return lq_decompose(sample_gaussian_matrix(n, n, 1.0, rng)).q;
        } catch (const SingularityError &) {
        }
    }
}

double log2_abs_det(const ComplexMatrix &a)
{
    if (a.rows() != a.cols())
        throw DomainError("log2_abs_det: matrix must be square");
    const Eigen::PartialPivLU<ComplexMatrix> lu(a);
    const ComplexMatrix &packed = lu.matrixLU();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < packed.rows(); ++i) {
        const double mag = std::abs(packed(i, i));
        if (mag == 0.0)
            return -std::numeric_limits<double>::infinity();
        acc += std::log2(mag);
    }
    return acc;
}

} // namespace noncoh
