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

#include "gramlab/gamma_calc.hpp"

namespace gramlab {

RationalModel make_rational_model(RationalMatrix a, RationalMatrix sigma_sigma_t) {
  if (a.rows != a.cols) throw DimensionError("RationalModel: A must be square");
  if (sigma_sigma_t.rows != a.rows || sigma_sigma_t.cols != a.cols)
    throw DimensionError("RationalModel: sigma sigma^T must match A");
  if (!sigma_sigma_t.is_symmetric())
    throw SymmetryError("RationalModel: sigma sigma^T must be symmetric");
  return RationalModel{std::move(a), std::move(sigma_sigma_t)};
}

MultiPoly apply_generator(const RationalModel& m, const MultiPoly& f) {
  const int n = m.n();
  if (f.nvars() != n) throw DimensionError("apply_generator: variable-count mismatch");
  MultiPoly lf(n);
  std::vector<MultiPoly> df(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) df[static_cast<size_t>(i)] = f.partial(i);
  // drift term sum_i (A x)_i d_i f
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& aik = m.a(i, k);
      if (aik == 0) continue;
      lf = lf + (df[static_cast<size_t>(i)] * MultiPoly::variable(n, k)) * aik;
    }
  }
  // diffusion term (1/2) sum_{ij} (sigma sigma^T)_{ij} d_i d_j f
  const Rational half(1, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& q = m.sigma_sigma_t(i, j);
      if (q == 0) continue;
      lf = lf + df[static_cast<size_t>(i)].partial(j) * (half * q);
    }
  }
  return lf;
}

MultiPoly gamma_g(const RationalMatrix& g_mat, const MultiPoly& f, const MultiPoly& g) {
  const int n = f.nvars();
  if (g.nvars() != n) throw DimensionError("gamma_g: variable-count mismatch");
  if (g_mat.rows != n || g_mat.cols != n)
    throw DimensionError("gamma_g: metric dimension mismatch");
  MultiPoly out(n);
  for (int j = 0; j < n; ++j) {
    const MultiPoly dgj = g.partial(j);
    if (dgj.is_zero()) continue;
    for (int i = 0; i < n; ++i) {
      const Rational& gji = g_mat(j, i);
      if (gji == 0) continue;
      out = out + (f.partial(i) * dgj) * gji;
    }
  }
  return out;
}

MultiPoly gamma_g(const RationalMatrix& g_mat, const MultiPoly& f) {
  return gamma_g(g_mat, f, f);
}

MultiPoly gamma2_by_definition(const RationalModel& m, const RationalMatrix& g_mat,
                               const MultiPoly& f) {
  const MultiPoly gf = gamma_g(g_mat, f);
  const MultiPoly lf = apply_generator(m, f);
  return apply_generator(m, gf) * Rational(1, 2) - gamma_g(g_mat, f, lf);
}

MultiPoly gamma2_remainder(const RationalModel& m, const RationalMatrix& g_mat,
                           const MultiPoly& f) {
  const int n = m.n();
  if (f.nvars() != n) throw DimensionError("gamma2_remainder: variable-count mismatch");
  std::vector<MultiPoly> df(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) df[static_cast<size_t>(i)] = f.partial(i);
  MultiPoly out(n);
  const Rational half(1, 2);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& q = m.sigma_sigma_t(i, k);
      if (q == 0) continue;
      out = out + gamma_g(g_mat, df[static_cast<size_t>(i)], df[static_cast<size_t>(k)]) *
                      (half * q);
    }
  }
  return out;
}

MultiPoly gamma2_by_formula(const RationalModel& m, const RationalMatrix& g_mat,
                            const MultiPoly& f) {
  const RationalMatrix ag = m.a * g_mat;
  const MultiPoly gamma_ag = gamma_g(ag, f);
  return gamma2_remainder(m, g_mat, f) - gamma_ag;
}

}  // namespace gramlab
