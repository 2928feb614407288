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

// Scalar-generic dense kernels for small matrices. The double path of the
// library goes through Eigen; these templates exist so the ill-conditioned
// Gramian evaluations (smallest eigenvalue buried ~30 orders of magnitude
// below the largest) can be re-run in __float128.

#include <cmath>
#include <cstdint>
#include <vector>

#if defined(__SIZEOF_FLOAT128__)
#include <quadmath.h>
#endif

#include "gramlab/errors.hpp"

namespace gramlab::detail {

inline float sqrt_val(float x) { return std::sqrt(x); }
inline double sqrt_val(double x) { return std::sqrt(x); }
inline long double sqrt_val(long double x) { return std::sqrt(x); }
#if defined(__SIZEOF_FLOAT128__)
inline __float128 sqrt_val(__float128 x) { return sqrtq(x); }
#endif

template <class S>
struct SmallMat {
  int rows = 0, cols = 0;
  std::vector<S> a;  // row-major

  SmallMat() = default;
  SmallMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, S(0)) {}

  S& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const S& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static SmallMat identity(int n) {
    SmallMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  SmallMat transpose() const {
    SmallMat m(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
};

template <class S>
SmallMat<S> operator*(const SmallMat<S>& x, const SmallMat<S>& y) {
  SmallMat<S> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const S xik = x(i, k);
      for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

template <class S>
SmallMat<S> operator+(const SmallMat<S>& x, const SmallMat<S>& y) {
  SmallMat<S> z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

template <class S>
SmallMat<S> operator*(const S& c, const SmallMat<S>& x) {
  SmallMat<S> z = x;
  for (auto& v : z.a) v *= c;
  return z;
}

template <class S>
S abs_val(const S& x) {
  return x < S(0) ? -x : x;
}

template <class S>
S inf_norm(const SmallMat<S>& x) {
  S best(0);
  for (int i = 0; i < x.rows; ++i) {
    S row(0);
    for (int j = 0; j < x.cols; ++j) row += abs_val(x(i, j));
    if (row > best) best = row;
  }
  return best;
}

// Solve A X = B in place by Gaussian elimination with partial pivoting.
template <class S>
SmallMat<S> lu_solve(SmallMat<S> A, SmallMat<S> B) {
  const int n = A.rows;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (abs_val(A(i, k)) > abs_val(A(piv, k))) piv = i;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      for (int j = 0; j < B.cols; ++j) std::swap(B(k, j), B(piv, j));
    }
    if (A(k, k) == S(0)) throw NotPositiveDefiniteError("lu_solve: singular matrix");
    const S inv = S(1) / A(k, k);
    for (int i = k + 1; i < n; ++i) {
      const S f = A(i, k) * inv;
      if (f == S(0)) continue;
      for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
      for (int j = 0; j < B.cols; ++j) B(i, j) -= f * B(k, j);
    }
  }
  for (int k = n - 1; k >= 0; --k) {
    const S inv = S(1) / A(k, k);
    for (int j = 0; j < B.cols; ++j) {
      S s = B(k, j);
      for (int i = k + 1; i < n; ++i) s -= A(k, i) * B(i, j);
      B(k, j) = s * inv;
    }
  }
  return B;
}

// Scaling-and-squaring with the degree-13 Pade approximant. theta is the
// post-scaling norm target; 1.0 keeps the truncation error below quad epsilon.
template <class S>
SmallMat<S> expm(const SmallMat<S>& M, double theta = 1.0) {
  static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                             1187353796428800.0,  129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,       1323241920.0,
                             40840800.0,          960960.0,            16380.0,
                             182.0,               1.0};
  const int n = M.rows;
  int s = 0;
  {
    double nrm = static_cast<double>(inf_norm(M));
    while (nrm > theta && s < 64) {
      nrm /= 2.0;
      ++s;
    }
  }
  SmallMat<S> A = M;
  if (s > 0) {
    S f = S(1);
    for (int i = 0; i < s; ++i) f /= S(2);
    A = f * A;
  }
  const SmallMat<S> I = SmallMat<S>::identity(n);
  const SmallMat<S> A2 = A * A;
  const SmallMat<S> A4 = A2 * A2;
  const SmallMat<S> A6 = A2 * A4;
  SmallMat<S> U = A * (A6 * (S(b[13]) * A6 + S(b[11]) * A4 + S(b[9]) * A2) + S(b[7]) * A6 +
                       S(b[5]) * A4 + S(b[3]) * A2 + S(b[1]) * I);
  SmallMat<S> V = A6 * (S(b[12]) * A6 + S(b[10]) * A4 + S(b[8]) * A2) + S(b[6]) * A6 +
                  S(b[4]) * A4 + S(b[2]) * A2 + S(b[0]) * I;
  SmallMat<S> P = U + V;        // numerator
  SmallMat<S> Q = S(-1) * U + V;  // denominator
  SmallMat<S> R = lu_solve(Q, P);
  for (int i = 0; i < s; ++i) R = R * R;
  return R;
}

// Cyclic Jacobi for symmetric matrices. Returns ascending eigenvalues;
// eigenvectors as columns of V when V != nullptr. Jacobi is used instead of
// a tridiagonalization-based solver because it attains high *relative*
// accuracy on positive-definite matrices with small scaled condition number.
template <class S>
std::vector<S> jacobi_sym_eig(SmallMat<S> Smat, SmallMat<S>* V, double eps) {
  const int n = Smat.rows;
  SmallMat<S> vec = SmallMat<S>::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    S off(0), diag(0);
    for (int p = 0; p < n; ++p) {
      diag += abs_val(Smat(p, p));
      for (int q = p + 1; q < n; ++q) off += abs_val(Smat(p, q));
    }
    if (!(off > S(eps) * (diag + off))) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const S apq = Smat(p, q);
        if (abs_val(apq) <= S(eps) * (abs_val(Smat(p, p)) + abs_val(Smat(q, q))) * S(0.01) &&
            sweep > 2)
          continue;
        if (apq == S(0)) continue;
        const S tau = (Smat(q, q) - Smat(p, p)) / (S(2) * apq);
        const S denom = abs_val(tau) + sqrt_val(S(1) + tau * tau);
        const S t = (tau >= S(0)) ? S(1) / denom : S(-1) / denom;
        const S c = S(1) / sqrt_val(S(1) + t * t);
        const S sn = t * c;
        for (int k = 0; k < n; ++k) {
          const S skp = Smat(k, p), skq = Smat(k, q);
          Smat(k, p) = c * skp - sn * skq;
          Smat(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          const S spk = Smat(p, k), sqk = Smat(q, k);
          Smat(p, k) = c * spk - sn * sqk;
          Smat(q, k) = sn * spk + c * sqk;
        }
        for (int k = 0; k < n; ++k) {
          const S vkp = vec(k, p), vkq = vec(k, q);
          vec(k, p) = c * vkp - sn * vkq;
          vec(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<S> vals(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    vals[i] = Smat(i, i);
    order[i] = i;
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (vals[order[k]] < vals[order[i]]) std::swap(order[i], order[k]);
  std::vector<S> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = vals[order[i]];
  if (V) {
    *V = SmallMat<S>(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) (*V)(i, j) = vec(i, order[j]);
  }
  return sorted;
}

}  // namespace gramlab::detail
