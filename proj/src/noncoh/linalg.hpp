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

#ifndef NONCOH_LINALG_HPP
#define NONCOH_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

#include "noncoh/rng.hpp"

namespace noncoh {

// Dense complex matrix. Library uses stay at or below 16x16.
using ComplexMatrix = Eigen::MatrixXcd;

/// Row-wise LQ factors m = l * q.
/// l is lower triangular with real nonnegative diagonal, q has orthonormal rows.
struct LqFactors {
    ComplexMatrix l;
    ComplexMatrix q;
};

/// LQ decomposition by Gram-Schmidt on the rows (with one
/// re-orthogonalization pass). Requires rows <= cols and linearly independent
/// rows; a row whose residual norm drops to 1e-12 of its original norm
/// raises SingularityError naming that row.
LqFactors lq_decompose(const ComplexMatrix &m);

/// Haar-distributed n x n unitary: Gram-Schmidt on an i.i.d. CN(0,1) matrix
/// with the triangular factor's diagonal made real-positive.
ComplexMatrix sample_isotropic_unitary(int n, Rng &rng);

// n x m matrix with i.i.d. CN(0, variance) entries.
ComplexMatrix sample_gaussian_matrix(int rows, int cols, double variance, Rng &rng);

// log2 |det(a)| via partial-pivot LU. Returns -inf for singular input.
double log2_abs_det(const ComplexMatrix &a);

} // namespace noncoh

#endif
