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

// Control distances. For constant coefficients the subunit-curve infimum is
// the Mahalanobis norm rho^K(x,y) = ||K^{-1/2}(x-y)||, so only the closed
// form is implemented.

#include <utility>

#include "gramlab/gramian.hpp"
#include "gramlab/model.hpp"

namespace gramlab {

/// rho^K(x,y) = sqrt(<x-y, K^{-1}(x-y)>) via a Cholesky solve.
/// Throws NotPositiveDefiniteError when K is not SPD.
double control_distance(const Matrix& k, const Vector& x, const Vector& y);

/// rho_t(x,y) = rho^{G_t}(x,y). Returns +infinity when G_t is numerically
/// singular (Kalman failure sentinel); callers must branch on it.
double rho_t(const LinearModel& m, double t, const Vector& x, const Vector& y);

/// rho_t on the k-mode Kronecker lift, together with the tensorized upper
/// bound sqrt(sum_l <Q^{-1}(x_l-y_l), x_l-y_l> / lambda_bar(j,t)).
std::pair<double, double> rho_tensor_bound(const KroneckerModel& km, int k, double t,
                                           const Vector& x, const Vector& y);

/// Anisotropic dilation of the (iterated) Kolmogorov examples:
/// block l scales by a^{2l-1}.
struct Dilation {
  enum class Kind { kolmogorov, iterated };
  Kind kind = Kind::kolmogorov;
  int j = 2;      // block count
  double a = 1.0; // scale factor; must be > 0

  void validate() const;
};

Vector apply_dilation(const Dilation& d, const Vector& x);

/// | rho_t(x,y) - rho_1(delta_{t^{-1/2}} x, delta_{t^{-1/2}} y) | on the
/// k-mode Kolmogorov lift.
double check_scale_invariance(const KroneckerModel& km, int k, double t, const Vector& x,
                              const Vector& y);

}  // namespace gramlab
