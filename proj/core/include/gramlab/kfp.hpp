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

// Closed-form spectral data for the underlying 2x2 kinetic Fokker-Planck
// model Abar = [[0,1],[-1,-gamma]], sigmabar = diag(0, sqrt(gamma)).
//
// In the high-friction regime the Gramian entries span e^{O(gamma^2 t*)}
// orders of magnitude, far past double range, while the smallest eigenvalue
// stays e^{O(t*)}. The evaluator below works with exponent-shifted entries so
// log lambda_min(Gbar_t) comes out in doubles for any friction and any time.

#include <complex>
#include <utility>

namespace gramlab {

/// The two drift eigenvalues (-gamma +- sqrt(gamma^2-4))/2. Throws on the
/// repeated-eigenvalue point gamma = 2.
std::pair<std::complex<double>, std::complex<double>> kfp_eigenvalues(double gamma);

/// log of the smallest eigenvalue of the underlying Gramian Gbar_t.
double kfp_log_lambda_min(double gamma, double t);

/// Smallest eigenvalue itself; +inf when it exceeds double range.
double kfp_lambda_min(double gamma, double t);

}  // namespace gramlab
