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

#include "gramlab/distance.hpp"

#include <cmath>
#include <limits>

namespace gramlab {

double control_distance(const Matrix& k, const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.size() != k.rows())
    throw DimensionError("control_distance: dimension mismatch");
  const Matrix l = cholesky_spd(k, 1e-14);
  const Vector d = x - y;
  return std::sqrt(std::max(0.0, d.dot(cholesky_solve(l, d))));
}

double rho_t(const LinearModel& m, double t, const Vector& x, const Vector& y) {
  if (!(t > 0.0)) throw InputError("rho_t: need t > 0");
  if (x.size() != m.n() || y.size() != m.n())
    throw DimensionError("rho_t: point dimension mismatch");
  try {
    return control_distance(gramian_gt(m, t), x, y);
  } catch (const NotPositiveDefiniteError&) {
    if ((x - y).norm() == 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
}

std::pair<double, double> rho_tensor_bound(const KroneckerModel& km, int k, double t,
                                           const Vector& x, const Vector& y) {
  const LinearModel lifted = lift_kronecker(km, k);
  if (x.size() != lifted.n() || y.size() != lifted.n())
    throw DimensionError("rho_tensor_bound: point dimension mismatch");
  const double exact = rho_t(lifted, t, x, y);
  const double lam = lambda_min_underlying(km, t);
  double q_form = 0.0;  // sum_l <Q^{-1}(x_l - y_l), x_l - y_l>
  for (int bl = 0; bl < km.j; ++bl)
    for (int l = 0; l < k; ++l) {
      const double d = x(bl * k + l) - y(bl * k + l);
      q_form += d * d / km.q_spectrum.alpha(l + 1);
    }
  const double bound = lam > 0.0 ? std::sqrt(q_form / lam)
                                 : (q_form == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  return {exact, bound};
}

void Dilation::validate() const {
  if (!(a > 0.0)) throw InputError("Dilation: need a > 0");
  if (j < 1) throw InputError("Dilation: need j >= 1");
  if (kind == Kind::kolmogorov && j != 2)
    throw InputError("Dilation: kolmogorov dilation has j = 2 blocks");
}

Vector apply_dilation(const Dilation& d, const Vector& x) {
  d.validate();
  if (x.size() % d.j != 0)
    throw DimensionError("apply_dilation: vector does not split into j blocks");
  const Eigen::Index k = x.size() / d.j;
  Vector out(x.size());
  double scale = d.a;  // block l carries a^{2l-1}
  for (int bl = 0; bl < d.j; ++bl) {
    out.segment(bl * k, k) = scale * x.segment(bl * k, k);
    scale *= d.a * d.a;
  }
  return out;
}

double check_scale_invariance(const KroneckerModel& km, int k, double t, const Vector& x,
                              const Vector& y) {
  if (km.zoo_name != "kolmogorov")
    throw InputError("check_scale_invariance: defined for the kolmogorov model");
  if (!(t > 0.0)) throw InputError("check_scale_invariance: need t > 0");
  const LinearModel lifted = lift_kronecker(km, k);
  Dilation d{Dilation::Kind::kolmogorov, 2, 1.0 / std::sqrt(t)};
  const double lhs = rho_t(lifted, t, x, y);
  const double rhs = rho_t(lifted, 1.0, apply_dilation(d, x), apply_dilation(d, y));
  return std::abs(lhs - rhs);
}

}  // namespace gramlab
