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

#include "gramlab/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "gramlab/detail/dense_kernels.hpp"

namespace gramlab {

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw InputError(std::string(what) + ": non-finite entries");
}

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(what) + ": matrix must be square, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

double symmetry_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return 1.0;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() / scale;
}

Matrix mat_exp(const Matrix& m) {
  require_square(m, "mat_exp");
  require_finite(m, "mat_exp");
  return m.exp();
}

SpectralResult sym_eig(const Matrix& s, double sym_tol) {
  require_square(s, "sym_eig");
  require_finite(s, "sym_eig");
  if (symmetry_defect(s) > sym_tol)
    throw SymmetryError("sym_eig: input asymmetric beyond tolerance");
  const int n = static_cast<int>(s.rows());
  detail::SmallMat<double> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));
  detail::SmallMat<double> v;
  const auto vals = detail::jacobi_sym_eig(a, &v, 1e-16);
  SpectralResult r;
  r.eigenvalues = Vector(n);
  r.eigenvectors = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    r.eigenvalues(i) = vals[i];
    for (int k = 0; k < n; ++k) r.eigenvectors(k, i) = v(k, i);
  }
  return r;
}

Matrix cholesky_spd(const Matrix& s, double tol) {
  require_square(s, "cholesky_spd");
  require_finite(s, "cholesky_spd");
  if (symmetry_defect(s) > 1e-10)
    throw SymmetryError("cholesky_spd: input asymmetric beyond tolerance");
  const int n = static_cast<int>(s.rows());
  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(s(i, i)));
  if (scale == 0.0) scale = 1.0;
  Matrix l = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = s(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d < tol * scale)
      throw NotPositiveDefiniteError("cholesky_spd: pivot " + std::to_string(d) +
                                     " below tolerance at column " + std::to_string(j));
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return l;
}

bool is_psd(const Matrix& s, double tol) {
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  const Matrix shifted = s + tol * scale * Matrix::Identity(s.rows(), s.cols());
  try {
    cholesky_spd(shifted, 0.0);
    return true;
  } catch (const NotPositiveDefiniteError&) {
    return false;
  }
}

int numerical_rank(const Matrix& m, double tol) {
  require_finite(m, "numerical_rank");
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double thresh = tol * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return r;
}

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double std_normal_pdf(double z) {
  static const double inv_sqrt_2pi = 0.3989422804014326779;
  return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

Vector cholesky_solve(const Matrix& chol_l, const Vector& b) {
  const int n = static_cast<int>(chol_l.rows());
  if (b.size() != n) throw DimensionError("cholesky_solve: size mismatch");
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    double v = b(i);
    for (int k = 0; k < i; ++k) v -= chol_l(i, k) * y(k);
    y(i) = v / chol_l(i, i);
  }
  Vector x(n);
  for (int i = n - 1; i >= 0; --i) {
    double v = y(i);
    for (int k = i + 1; k < n; ++k) v -= chol_l(k, i) * x(k);
    x(i) = v / chol_l(i, i);
  }
  return x;
}

}  // namespace gramlab
