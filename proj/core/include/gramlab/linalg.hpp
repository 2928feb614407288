// Copyright 2026 The Gramlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include "gramlab/errors.hpp"

namespace gramlab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues and an
/// orthonormal set of column eigenvectors.
struct SpectralResult {
  Vector eigenvalues;
  Matrix eigenvectors;

  double min_eig() const { return eigenvalues(0); }
  double max_eig() const { return eigenvalues(eigenvalues.size() - 1); }
};

void require_finite(const Matrix& m, const char* what);
void require_square(const Matrix& m, const char* what);

/// Largest absolute deviation from symmetry, relative to the matrix scale.
double symmetry_defect(const Matrix& m);

/// e^M by scaling-and-squaring with the degree-13 rational approximant.
Matrix mat_exp(const Matrix& m);

/// Cyclic Jacobi eigensolver. Jacobi is chosen over tridiagonal reduction
/// because small eigenvalues of well-scaled SPD matrices come out with small
/// relative error, which several Gramian checks rely on.
SpectralResult sym_eig(const Matrix& s, double sym_tol = 1e-12);

/// Lower-triangular L with L L^T = S. Throws NotPositiveDefiniteError when a
/// pivot falls below tol times the diagonal scale.
Matrix cholesky_spd(const Matrix& s, double tol = 1e-10);

bool is_psd(const Matrix& s, double tol = 1e-10);

/// Count of singular values above tol times the largest singular value.
int numerical_rank(const Matrix& m, double tol = 1e-10);

/// |result - Phi(z)| <= 1e-12.
double std_normal_cdf(double z);

double std_normal_pdf(double z);

/// Solve S x = b using a precomputed Cholesky factor L (S = L L^T).
Vector cholesky_solve(const Matrix& chol_l, const Vector& b);

}  // namespace gramlab
