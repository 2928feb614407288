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

#include "gramlab/kfp.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "gramlab/errors.hpp"
#include "gramlab/linalg.hpp"

namespace gramlab {

std::pair<std::complex<double>, std::complex<double>> kfp_eigenvalues(double gamma) {
  if (!(gamma > 0.0)) throw InputError("kfp_eigenvalues: need gamma > 0");
  if (gamma == 2.0)
    throw InputError("kfp_eigenvalues: gamma = 2 has a repeated eigenvalue");
  const std::complex<double> disc(gamma * gamma - 4.0, 0.0);
  const std::complex<double> root = std::sqrt(disc);
  return {(-gamma + root) / 2.0, (-gamma - root) / 2.0};
}

namespace {

// Small-time fallback: the scaled closed form loses digits to cancellation
// as t -> 0, while the plain Van Loan Gramian is exact there.
double small_time_lambda(double gamma, double t) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  a(1, 0) = -1.0;
  a(1, 1) = -gamma;
  Matrix q = Matrix::Zero(2, 2);
  q(1, 1) = gamma;
  Matrix c = Matrix::Zero(4, 4);
  c.topLeftCorner(2, 2) = a;
  c.topRightCorner(2, 2) = q;
  c.bottomRightCorner(2, 2) = -a.transpose();
  const Matrix f = (t * c).exp();
  Matrix g = f.bottomRightCorner(2, 2).transpose() * f.topRightCorner(2, 2);
  g = 0.5 * (g + g.transpose());
  const double tr = g(0, 0) + g(1, 1);
  const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  return 2.0 * det / (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
}

}  // namespace

double kfp_log_lambda_min(double gamma, double t) {
  if (!(gamma > 0.0) || gamma == 2.0) throw InputError("kfp_log_lambda_min: invalid gamma");
  if (!(t > 0.0)) throw InputError("kfp_log_lambda_min: need t > 0");
  if (t < 0.1) return std::log(small_time_lambda(gamma, t));

  const double g2m4 = gamma * gamma - 4.0;
  const double cg = gamma / g2m4;

  if (gamma > 2.0) {
    const double r = std::sqrt(g2m4);
    const double l1 = -2.0 / (gamma + r);  // small root, stable form
    const double l2 = -(gamma + r) / 2.0;
    const double u1 = std::exp(2.0 * l1 * t);
    const double u2 = std::exp(2.0 * l2 * t);
    const double w = std::exp(-2.0 * gamma * t);
    const double s = std::exp(-gamma * t);
    // det(Gbar_t) = cg^2 (gamma^2-4)(E1 E2 - Eg^2) = e^{2 gamma t} cg^2 Dt
    const double dt = g2m4 * ((1.0 + w - u1 - u2) / 4.0 - (1.0 - s) * (1.0 - s) / (gamma * gamma));
    // tr(Gbar_t) = e^{-2 l2 t} Sh
    const double e1s = (std::exp(2.0 * (l2 - l1) * t) - u2) / (-2.0 * l1);
    const double e2s = (1.0 - u2) / (-2.0 * l2);
    const double egs = (std::exp((gamma + 2.0 * l2) * t) - u2) / gamma;
    const double sh = cg * ((1.0 + l1 * l1) * e1s + (1.0 + l2 * l2) * e2s - 4.0 * egs);
    const double x = 4.0 * cg * cg * dt / (sh * sh) * std::exp(-2.0 * r * t);
    return -2.0 * l1 * t + std::log(2.0 * cg * cg * dt / (sh * (1.0 + std::sqrt(std::max(0.0, 1.0 - x)))));
  }

  const double b = std::sqrt(-g2m4) / 2.0;
  const double s = std::exp(-gamma * t);
  const double w = s * s;
  const double u12 = 2.0 * s * std::cos(2.0 * b * t);  // e^{2 l1 t} + e^{2 l2 t}
  const double dt = g2m4 * ((1.0 + w - u12) / 4.0 - (1.0 - s) * (1.0 - s) / (gamma * gamma));
  const std::complex<double> l1(-gamma / 2.0, b);
  const std::complex<double> l2(-gamma / 2.0, -b);
  const std::complex<double> rot(std::cos(2.0 * b * t), -std::sin(2.0 * b * t));
  const std::complex<double> e1s = (rot - s) / (-2.0 * l1);
  const std::complex<double> e2s = (std::conj(rot) - s) / (-2.0 * l2);
  const double egs = (1.0 - s) / gamma;
  const double sh = cg * (((1.0 + l1 * l1) * e1s + (1.0 + l2 * l2) * e2s).real() - 4.0 * egs);
  const double x = 4.0 * cg * cg * dt / (sh * sh);
  return gamma * t + std::log(2.0 * cg * cg * dt / (sh * (1.0 + std::sqrt(std::max(0.0, 1.0 - x)))));
}

double kfp_lambda_min(double gamma, double t) {
  const double ll = kfp_log_lambda_min(gamma, t);
  if (ll > 709.0) return std::numeric_limits<double>::infinity();
  return std::exp(ll);
}

}  // namespace gramlab
