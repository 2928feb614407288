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

// Exact polynomial Gamma-calculus for the generator
//   L f = <A x, grad f> + (1/2) sum_{ij} (sigma sigma^T)_{ij} d_i d_j f.
// Everything here is computed over the rationals so the second-order identity
// relating Gamma_2^G to -Gamma^{AG} plus the squared-gradient remainder can be
// checked as a polynomial identity rather than numerically.

#include "gramlab/rational.hpp"

namespace gramlab {

/// Model data over the rationals. Only sigma sigma^T enters any formula in
/// this module, so irrational sigma entries (e.g. sqrt(gamma) noise) are
/// admitted through their rational square.
struct RationalModel {
  RationalMatrix a;              // drift, n x n
  RationalMatrix sigma_sigma_t;  // noise covariance, n x n symmetric

  int n() const { return a.rows; }
};

RationalModel make_rational_model(RationalMatrix a, RationalMatrix sigma_sigma_t);

/// L f, exact.
MultiPoly apply_generator(const RationalModel& m, const MultiPoly& f);

/// Gamma^G(f, g) = <G grad f, grad g>.
MultiPoly gamma_g(const RationalMatrix& g_mat, const MultiPoly& f, const MultiPoly& g);
MultiPoly gamma_g(const RationalMatrix& g_mat, const MultiPoly& f);

/// Gamma_2^G(f) = (1/2) L Gamma^G(f) - Gamma^G(f, Lf), straight from the
/// definition.
MultiPoly gamma2_by_definition(const RationalModel& m, const RationalMatrix& g_mat,
                               const MultiPoly& f);

/// Gamma_2^G(f) = -Gamma^{AG}(f) + (1/2) sum_l Gamma^G((sigma^T grad f)_l),
/// with the sum over l expanded through sigma sigma^T:
///   sum_l Gamma^G((sigma^T grad f)_l) = sum_{i,m} (sigma sigma^T)_{im}
///                                        Gamma^G(d_i f, d_m f).
MultiPoly gamma2_by_formula(const RationalModel& m, const RationalMatrix& g_mat,
                            const MultiPoly& f);

/// The squared-gradient remainder (1/2) sum_l Gamma^G((sigma^T grad f)_l); the
/// term that is pointwise nonnegative whenever G is PSD.
MultiPoly gamma2_remainder(const RationalModel& m, const RationalMatrix& g_mat,
                           const MultiPoly& f);

}  // namespace gramlab
