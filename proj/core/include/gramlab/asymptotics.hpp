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

// Example-specific eigenvalue analyses: kinetic Fokker-Planck friction
// regimes, the coupled-oscillator spectral bound, and the damped-oscillator
// Lyapunov construction.

#include <complex>
#include <vector>

#include "gramlab/inequalities.hpp"
#include "gramlab/kfp.hpp"
#include "gramlab/model.hpp"

namespace gramlab {

enum class KfpRegime { large, small };

/// lambda_bar(2, t) >= e^{t*}/16 with t = t* gamma (large friction) or
/// t = t*/gamma (small friction); t* >= 1.
InequalityReport kfp_lambda_bound(double gamma, double t_star, KfpRegime regime);

struct KfpScanResult {
  KfpRegime regime{};
  std::vector<double> gammas;
  std::vector<bool> all_pass;  // bound holds for every t* in the scan
  double empirical_threshold = 0.0;  // smallest (large) / largest (small) passing gamma
  bool threshold_found = false;
};

/// Scan a friction grid over t* in {1..5} and report the empirical regime
/// threshold; the analysis only asserts existence of such a threshold.
KfpScanResult kfp_threshold_scan(const std::vector<double>& gammas, KfpRegime regime);

/// c_j = ((j+1)/pi) / sin(pi/(j+1)), the cross-term constant.
double coupled_osc_cj(int j);

/// lambda_bar(j,t) >= (2/(j+1)) t sin^2(pi/(j+1)) - c_j. The eigenvector
/// normalization factor 2/(j+1) is required; see the spectrum data below
/// (|v_l|^2 = (j+1)/2).
InequalityReport coupled_osc_bound(int j, double t);

struct CoupledOscSpectrum {
  std::vector<std::complex<double>> values;        // 2 i cos(l pi / (j+1))
  std::vector<std::vector<std::complex<double>>> vectors;  // (v_l)_m = i^m sin(l m pi/(j+1))
  double max_residual = 0.0;   // max_l ||A v_l - lambda_l v_l||
  double max_norm_defect = 0.0;  // max_l | |v_l|^2 - (j+1)/2 |
};

CoupledOscSpectrum coupled_osc_spectrum(int j);

/// The Lyapunov-function constants of the damped oscillator chain with
/// b_i = log(i+1).
struct LyapunovConstants {
  int j = 0;
  std::vector<double> b;      // b_2 .. b_{j+1}
  double beta = 0.0;          // log 2
  double a0 = 0.0;
  std::vector<double> a_list; // a_1 .. a_j, a_l = sum_{i=l+1}^{j} b_i
  double rj = 0.0;
  double cj = 0.0;

  double b_at(int i) const;   // b_i, 2 <= i <= j+1
  double a_at(int l) const;   // a_l, 1 <= l <= j
  double sum_b() const;       // sum_{i=2}^{j} b_i
};

LyapunovConstants damped_osc_constants(int j);

/// V(y) = (a0/2)|y|^2 - sum a_i y_i y_{i+1}.
double damped_osc_lyapunov(const LyapunovConstants& c, const Vector& y);

struct DecayTrace {
  std::vector<double> times;
  std::vector<double> norm_sq;  // |y(t)|^2 along the integrated flow
  InequalityReport report;      // min ratio |y|^2 / (c_j e^{r_j t} |x0|^2) vs 1
};

/// Integrate dy/dt = (E_11 + Tri_j(1,0,-1)) y by adaptive Runge-Kutta and
/// check the exponential lower bound on a time grid in [0, t_max].
DecayTrace damped_osc_decay(int j, double t_max, const Vector& x0, int grid_points = 201);

/// lambda_bar(j,t) >= lambda_bar(j,t/2) c_j (e^{r_j t/2} - 1) / (t r_j), t >= 2.
InequalityReport damped_osc_lambda_bound(int j, double t);

namespace detail {
/// Adaptive Dormand-Prince 5(4) for linear systems dy/dt = M y, reporting the
/// solution at the requested times. Throws IntegrationError if the controller
/// cannot meet the tolerance.
std::vector<Vector> integrate_linear_ode(const Matrix& m, const Vector& y0,
                                         const std::vector<double>& times, double rtol,
                                         double atol);
}  // namespace detail

}  // namespace gramlab
