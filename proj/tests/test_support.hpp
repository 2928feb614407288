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

// Independent oracles for the test suites. Nothing here goes through the
// library's Van Loan / Pade / Jacobi code paths: the matrix exponential is a
// plain scaled Taylor series, Gramians come from Gauss-Legendre quadrature,
// eigenvalues from Sylvester inertia bisection, and the normal CDF from its
// Taylor series.

#include <cmath>
#include <random>
#include <vector>

#include "gramlab/linalg.hpp"
#include "gramlab/model.hpp"

namespace oracle {

using gramlab::Matrix;
using gramlab::Vector;

/// Scaled-and-squared Taylor-series exponential (independent of the Pade
/// implementation under test).
inline Matrix expm_taylor(const Matrix& m) {
  int s = 0;
  double nrm = m.cwiseAbs().rowwise().sum().maxCoeff();
  while (nrm > 0.25 && s < 60) {
    nrm /= 2.0;
    ++s;
  }
  const Matrix a = m / std::pow(2.0, s);
  Matrix term = Matrix::Identity(m.rows(), m.cols());
  Matrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

struct GaussLegendre {
  std::vector<double> nodes, weights;  // on [-1, 1]
  explicit GaussLegendre(int n) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
      // Newton from the Chebyshev initial guess
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      nodes[static_cast<size_t>(i)] = x;
      weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

/// int_s^t e^{(s-v)A} Q e^{(s-v)A^T} dv by Gauss-Legendre quadrature.
inline Matrix quad_gramian(const Matrix& a, const Matrix& q, double s, double t, int n = 200) {
  const GaussLegendre gl(n);
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  for (int i = 0; i < n; ++i) {
    const double v = 0.5 * (t - s) * gl.nodes[static_cast<size_t>(i)] + 0.5 * (t + s);
    const Matrix e = expm_taylor((s - v) * a);
    out += 0.5 * (t - s) * gl.weights[static_cast<size_t>(i)] * (e * q * e.transpose());
  }
  return out;
}

/// Nested quadrature for G2(s,t) = int_s^t e^{(s-v)A} G(v,t) e^{(s-v)A^T} dv.
inline Matrix quad_gramian2(const Matrix& a, const Matrix& q, double s, double t, int n = 80) {
  const GaussLegendre gl(n);
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  for (int i = 0; i < n; ++i) {
    const double v = 0.5 * (t - s) * gl.nodes[static_cast<size_t>(i)] + 0.5 * (t + s);
    const Matrix e = expm_taylor((s - v) * a);
    const Matrix inner = quad_gramian(a, q, v, t, n);
    out += 0.5 * (t - s) * gl.weights[static_cast<size_t>(i)] * (e * inner * e.transpose());
  }
  return out;
}

/// Number of eigenvalues of the symmetric matrix strictly below x, by the
/// inertia of the LDL^T factorization of S - xI.
inline int eigs_below(const Matrix& s, double x) {
  const int n = static_cast<int>(s.rows());
  Matrix a = s - x * Matrix::Identity(n, n);
  int count = 0;
  for (int k = 0; k < n; ++k) {
    double d = a(k, k);
    if (d == 0.0) d = -1e-300;  // nudge off the breakdown point
    if (d < 0.0) ++count;
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / d;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return count;
}

/// The m-th smallest eigenvalue (0-based) by inertia bisection.
inline double eig_by_bisection(const Matrix& s, int m, double tol = 1e-12) {
  double radius = 0.0;
  for (int i = 0; i < s.rows(); ++i) radius = std::max(radius, s.row(i).cwiseAbs().sum());
  double lo = -radius - 1.0, hi = radius + 1.0;
  while (hi - lo > tol * std::max(1.0, radius)) {
    const double mid = 0.5 * (lo + hi);
    if (eigs_below(s, mid) <= m)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Taylor-series normal CDF, |z| <= 8.
inline double normal_cdf_series(double z) {
  const double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
  double term = z, sum = z;
  for (int k = 1; k < 300; ++k) {
    term *= z * z / (2.0 * k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return 0.5 + phi * sum;
}

// Closed forms of the two-block chain model (unit noise on the first block):
// Gbar_t, its inverse and its smallest eigenvalue.
inline Matrix chain2_gt(double t) {
  Matrix g(2, 2);
  g << t, -t * t / 2.0, -t * t / 2.0, t * t * t / 3.0;
  return g;
}

inline Matrix chain2_gt_inv(double t) {
  Matrix g(2, 2);
  g << 4.0 / t, 6.0 / (t * t), 6.0 / (t * t), 12.0 / (t * t * t);
  return g;
}

inline double chain2_lambda(double t) {
  const double b = t + t * t * t / 3.0;
  const double disc = b * b - t * t * t * t / 3.0;
  // stable form of (b - sqrt(disc)) / 2
  return t * t * t * t / (6.0 * (b + std::sqrt(disc)));
}

/// Friction-model closed form for e^{-Abar t} sigmabar, the two-eigenvalue
/// expression with prefactor -sqrt(g)/sqrt(g^2-4).
inline Matrix friction_exp_sigma(double gamma, double t) {
  using C = std::complex<double>;
  const C disc = C(gamma * gamma - 4.0, 0.0);
  const C root = std::sqrt(disc);
  const C l1 = (-gamma + root) / 2.0;
  const C l2 = (-gamma - root) / 2.0;
  const C pref = -std::sqrt(C(gamma, 0.0)) / root;
  const C e1 = std::exp(-l1 * t), e2 = std::exp(-l2 * t);
  Matrix m(2, 2);
  m << 0.0, (pref * (e2 - e1)).real(), 0.0, (pref * (l2 * e2 - l1 * e1)).real();
  return m;
}

inline std::mt19937_64 test_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Matrix rand_matrix(std::mt19937_64& rng, int r, int c, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = u(rng);
  return m;
}

inline Matrix rand_sym(std::mt19937_64& rng, int n, double scale = 1.0) {
  const Matrix m = rand_matrix(rng, n, n, scale);
  return 0.5 * (m + m.transpose());
}

inline Matrix rand_spd(std::mt19937_64& rng, int n, double scale = 1.0) {
  const Matrix m = rand_matrix(rng, n, n, scale);
  return m * m.transpose() + 0.1 * scale * scale * Matrix::Identity(n, n);
}

inline Vector rand_vec(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

inline gramlab::KroneckerModel zoo(gramlab::ZooName name, int j = 2, double gamma = 3.0) {
  return gramlab::zoo_build({name, j, gamma});
}

/// The five example models at canonical parameters, lifted spectra attached.
inline std::vector<gramlab::KroneckerModel> zoo_all() {
  using gramlab::ZooName;
  return {zoo(ZooName::kolmogorov), zoo(ZooName::iterated_kolmogorov, 3),
          zoo(ZooName::kinetic_fp, 2, 3.0), zoo(ZooName::coupled_osc, 3),
          zoo(ZooName::damped_osc, 3)};
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace oracle
