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

// Controllability Gramians of dx = Ax dt + sigma dB:
//   Sigma_t  = int_0^t e^{(t-s)A} sigma sigma^T e^{(t-s)A^T} ds
//   G(s,t)   = int_s^t e^{(s-v)A} sigma sigma^T e^{(s-v)A^T} dv  (= G_{t-s})
//   G2(s,t)  = int_s^t e^{(s-v)A} G(v,t) e^{(s-v)A^T} dv
// computed by augmented block matrix exponentials (no quadrature, no
// time-stepping), plus the spectral quantities built on them.

#include <array>
#include <optional>

#include "gramlab/model.hpp"

namespace gramlab {

struct GramianBundle {
  double t = 0.0;
  Matrix g_t;
  Matrix sigma_t;
  double lambda_min = 0.0;
  std::optional<Matrix> g2_t;
  std::optional<double> lambda2_min;
};

/// Sigma_t, the covariance of the time-t law.
Matrix cov_sigma(const LinearModel& m, double t);

/// G(s,t); the constant-coefficient Gramian depends only on t - s.
Matrix gramian_g(const LinearModel& m, double s, double t);
inline Matrix gramian_gt(const LinearModel& m, double t) { return gramian_g(m, 0.0, t); }

/// The iterate G2(s,t).
Matrix gramian_g2(const LinearModel& m, double s, double t);

/// K_s = int_0^s e^{-vA} e^{-vA^T} dv; the time-reversed-flow Gramian entering
/// the eigenvalue chain bound.
Matrix reversed_flow_gramian(const LinearModel& m, double s);

/// Smallest eigenvalue of G_t for the full model. On Kalman failure this is
/// numerically ~0 (possibly slightly negative); no exception is raised.
double lambda_min(const LinearModel& m, double t);

/// lambda_bar(j,t), the smallest eigenvalue of the *underlying* Gramian
/// Gbar_t of a Kronecker model. Kinetic-fp dispatches to the closed form;
/// other models escalate to quad precision when the double eigensolve cannot
/// resolve lambda_min against the dominant eigenvalue.
double lambda_min_underlying(const KroneckerModel& km, double t);

/// log lambda_bar(j,t); usable when lambda_bar exceeds double range.
double log_lambda_min_underlying(const KroneckerModel& km, double t);

GramianBundle make_gramian_bundle(const LinearModel& m, double t, bool with_g2 = false);

/// || central-difference d/ds G(s,t) - (-sigma sigma^T + A G + G A^T) ||_F.
double check_backward_ode(const LinearModel& m, double s, double t, double h);

/// The chain lambda(t) >= lambda_2(t)/t >= lambda(t-s)/t * min_eig(K_s),
/// returned as the ordered triple.
std::array<double, 3> check_g2_bound(const LinearModel& m, double s, double t);

}  // namespace gramlab
