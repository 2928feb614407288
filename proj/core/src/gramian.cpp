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

#include "gramlab/gramian.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <limits>

#include "gramlab/detail/dense_kernels.hpp"
#include "gramlab/kfp.hpp"

namespace gramlab {

namespace {

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

// exp(t [[B, Q],[0, -B^T]]) = [[F11, F12],[0, F22]] with F22 = e^{-tB^T} and
// F12 = int_0^t e^{B(t-s)} Q e^{-B^T s} ds, so
//   F22^T F12 = int_0^t e^{-vB} Q e^{-vB^T} dv,
// the Gramian of the reversed flow of B, from a single exponential.
Matrix reversed_gramian_of(const Matrix& b, const Matrix& q, double t) {
  const Eigen::Index n = b.rows();
  Matrix c = Matrix::Zero(2 * n, 2 * n);
  c.topLeftCorner(n, n) = b;
  c.topRightCorner(n, n) = q;
  c.bottomRightCorner(n, n) = -b.transpose();
  const Matrix f = (t * c).exp();
  return symmetrized(f.bottomRightCorner(n, n).transpose() * f.topRightCorner(n, n));
}

}  // namespace

Matrix cov_sigma(const LinearModel& m, double t) {
  if (t < 0.0) throw InputError("cov_sigma: need t >= 0");
  if (t == 0.0) return Matrix::Zero(m.n(), m.n());
  // Sigma_t is the forward Gramian of A, i.e. the reversed-flow Gramian of -A.
  return reversed_gramian_of(-m.a, m.noise_cov(), t);
}

Matrix gramian_g(const LinearModel& m, double s, double t) {
  if (s < 0.0 || t < s) throw InputError("gramian_g: need 0 <= s <= t");
  const double tau = t - s;
  if (tau == 0.0) return Matrix::Zero(m.n(), m.n());
  return reversed_gramian_of(m.a, m.noise_cov(), tau);
}

Matrix gramian_g2(const LinearModel& m, double s, double t) {
  if (s < 0.0 || t < s) throw InputError("gramian_g2: need 0 <= s <= t");
  const double tau = t - s;
  const Eigen::Index n = m.n();
  if (tau == 0.0) return Matrix::Zero(n, n);
  // G2(0,tau) = int_0^tau w e^{-wA} Q e^{-wA^T} dw. The first moment is the
  // (1,3) block of a 3n x 3n exponential, times e^{-tau A^T}.
  Matrix c = Matrix::Zero(3 * n, 3 * n);
  c.block(0, 0, n, n) = -m.a;
  c.block(0, n, n, n) = Matrix::Identity(n, n);
  c.block(n, n, n, n) = -m.a;
  c.block(n, 2 * n, n, n) = m.noise_cov();
  c.block(2 * n, 2 * n, n, n) = m.a.transpose();
  const Matrix f = (tau * c).exp();
  const Matrix h13 = f.block(0, 2 * n, n, n);
  const Matrix f11 = f.block(0, 0, n, n);  // e^{-tau A}
  return symmetrized(h13 * f11.transpose());
}

Matrix reversed_flow_gramian(const LinearModel& m, double s) {
  if (s < 0.0) throw InputError("reversed_flow_gramian: need s >= 0");
  if (s == 0.0) return Matrix::Zero(m.n(), m.n());
  return reversed_gramian_of(m.a, Matrix::Identity(m.n(), m.n()), s);
}

double lambda_min(const LinearModel& m, double t) {
  if (!(t > 0.0)) throw InputError("lambda_min: need t > 0");
  return sym_eig(gramian_gt(m, t)).min_eig();
}

namespace {

// Quad-precision Gramian eigenvalue for the j x j underlying model. Needed
// when cond(Gbar_t) passes 1/eps_double, e.g. the damped oscillator chain for
// large t where the fast flow directions bury lambda_min ~30 orders down.
double lambda_min_quad(const Matrix& abar, const Matrix& q, double t) {
  using Q = __float128;
  const int j = static_cast<int>(abar.rows());
  detail::SmallMat<Q> c(2 * j, 2 * j);
  for (int i = 0; i < j; ++i)
    for (int k = 0; k < j; ++k) {
      c(i, k) = static_cast<Q>(abar(i, k)) * static_cast<Q>(t);
      c(i, j + k) = static_cast<Q>(q(i, k)) * static_cast<Q>(t);
      c(j + i, j + k) = static_cast<Q>(-abar(k, i)) * static_cast<Q>(t);
    }
  const auto f = detail::expm(c);
  detail::SmallMat<Q> g(j, j);
  for (int i = 0; i < j; ++i)
    for (int k = 0; k < j; ++k) {
      Q acc(0);
      for (int l = 0; l < j; ++l) acc += f(j + l, j + i) * f(l, j + k);
      g(i, k) = acc;
    }
  for (int i = 0; i < j; ++i)
    for (int k = i + 1; k < j; ++k) {
      const Q v = (g(i, k) + g(k, i)) / Q(2);
      g(i, k) = v;
      g(k, i) = v;
    }
  const auto vals = detail::jacobi_sym_eig<Q>(g, nullptr, 1.0e-32);
  return static_cast<double>(vals.front());
}

}  // namespace

double lambda_min_underlying(const KroneckerModel& km, double t) {
  if (!(t > 0.0)) throw InputError("lambda_min_underlying: need t > 0");
  if (km.zoo_name == "kinetic-fp") return kfp_lambda_min(km.gamma, t);
  const LinearModel u = km.underlying();
  const auto spec = sym_eig(gramian_gt(u, t));
  const double lo = spec.min_eig(), hi = spec.max_eig();
  if (hi > 0.0 && lo < 64.0 * std::numeric_limits<double>::epsilon() * hi && check_kalman(u))
    return lambda_min_quad(u.a, u.noise_cov(), t);
  return lo;
}

double log_lambda_min_underlying(const KroneckerModel& km, double t) {
  if (km.zoo_name == "kinetic-fp") return kfp_log_lambda_min(km.gamma, t);
  const double lam = lambda_min_underlying(km, t);
  return std::log(lam);
}

GramianBundle make_gramian_bundle(const LinearModel& m, double t, bool with_g2) {
  GramianBundle b;
  b.t = t;
  b.g_t = gramian_gt(m, t);
  b.sigma_t = cov_sigma(m, t);
  b.lambda_min = t > 0.0 ? sym_eig(b.g_t).min_eig() : 0.0;
  if (with_g2) {
    b.g2_t = gramian_g2(m, 0.0, t);
    b.lambda2_min = t > 0.0 ? sym_eig(*b.g2_t).min_eig() : 0.0;
  }
  return b;
}

double check_backward_ode(const LinearModel& m, double s, double t, double h) {
  if (!(0.0 < s && s < t)) throw InputError("check_backward_ode: need 0 < s < t");
  if (!(h > 0.0) || s - 2.0 * h < 0.0 || s + 2.0 * h > t)
    throw InputError("check_backward_ode: stencil s +- 2h leaves [0, t]");
  // five-point central difference; fourth order keeps the residual below the
  // target even for stiff drifts where the h^2 constant is ~|A|^3 |G|
  const Matrix dg = (gramian_g(m, s - 2.0 * h, t) - 8.0 * gramian_g(m, s - h, t) +
                     8.0 * gramian_g(m, s + h, t) - gramian_g(m, s + 2.0 * h, t)) /
                    (12.0 * h);
  const Matrix g = gramian_g(m, s, t);
  const Matrix rhs = -m.noise_cov() + m.a * g + g * m.a.transpose();
  return (dg - rhs).norm();
}

std::array<double, 3> check_g2_bound(const LinearModel& m, double s, double t) {
  if (!(0.0 < s && s < t)) throw InputError("check_g2_bound: need 0 < s < t");
  const double lam_t = sym_eig(gramian_gt(m, t)).min_eig();
  const double lam2_t = sym_eig(gramian_g2(m, 0.0, t)).min_eig();
  const double lam_ts = sym_eig(gramian_gt(m, t - s)).min_eig();
  const double k_s = sym_eig(reversed_flow_gramian(m, s)).min_eig();
  return {lam_t, lam2_t / t, lam_ts / t * k_s};
}

}  // namespace gramlab
