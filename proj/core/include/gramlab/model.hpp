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

#include <optional>
#include <string>
#include <vector>

#include "gramlab/linalg.hpp"

namespace gramlab {

/// Linear SDE dx = A x dt + sigma dB on R^n.
struct LinearModel {
  Matrix a;
  Matrix sigma;

  int n() const { return static_cast<int>(a.rows()); }
  Matrix noise_cov() const { return sigma * sigma.transpose(); }
};

LinearModel make_linear_model(Matrix a, Matrix sigma);

/// Noise spectrum of the covariance operator Q: either an explicit finite
/// list of eigenvalues, or a symbolic family with a closed-form tail.
struct Spectrum {
  enum class Kind { explicit_list, power, polylog };
  Kind kind = Kind::explicit_list;
  double p = 0.0;                // exponent for the symbolic kinds
  std::vector<double> alphas;    // explicit_list only

  /// alpha_ell, 1-based index.
  double alpha(long ell) const;
  /// Number of addressable modes (LONG_MAX for symbolic kinds).
  long max_modes() const;
  bool symbolic() const { return kind != Kind::explicit_list; }

  static Spectrum explicit_list(std::vector<double> a);
  static Spectrum power(double p);
  static Spectrum polylog(double p);
};

/// Kronecker-structured model: A = Abar (x) I_k, sigma = sigmabar (x) Q^{1/2},
/// with Q diagonalized by the noise spectrum.
struct KroneckerModel {
  int j = 0;
  Matrix underlying_a;
  Matrix underlying_sigma;
  Spectrum q_spectrum;
  std::string zoo_name;  // empty for models given by explicit matrices
  double gamma = 0.0;    // kinetic-fp friction, meaningful only for that model

  LinearModel underlying() const { return LinearModel{underlying_a, underlying_sigma}; }
};

enum class ZooName { kolmogorov, iterated_kolmogorov, kinetic_fp, coupled_osc, damped_osc };

struct ZooId {
  ZooName name;
  int j = 2;          // chain length where applicable
  double gamma = 0.0; // kinetic-fp friction

  void validate() const;
};

std::string zoo_name_string(ZooName name);
ZooName parse_zoo_name(const std::string& s);

/// j x j tridiagonal matrix with value a on the subdiagonal, d on the
/// diagonal and c on the superdiagonal.
Matrix tridiag(int j, double a, double d, double c);

/// The exact underlying matrices of the example zoo.
KroneckerModel zoo_build(const ZooId& id);

/// True when a kinetic-fp friction sits inside the documented warning band
/// |gamma - 2| < 1e-3 around the excluded critical value.
bool kinetic_fp_near_critical(double gamma);

/// [sigma  A sigma  ...  A^{n-1} sigma], an n x n^2 matrix.
Matrix kalman_matrix(const LinearModel& m);

bool check_kalman(const LinearModel& m, double tol = 1e-10);
bool check_kalman(const KroneckerModel& km, double tol = 1e-10);

/// Lift to the jk-dimensional model Abar (x) I_k, sigmabar (x) diag(sqrt(alpha)).
LinearModel lift_kronecker(const KroneckerModel& km, int k);

/// JSON model-file round trip. Schema: {"name": ..., "j": ..., "gamma": ...,
/// "spectrum": {"kind": "power"|"polylog"|"explicit", "p": ..., "alphas": [...]}}
/// or explicit {"A": [[...]], "sigma": [[...]]} underlying matrices.
KroneckerModel model_from_json_string(const std::string& text);
std::string model_to_json_string(const KroneckerModel& km);
KroneckerModel load_model_file(const std::string& path);
void save_model_file(const KroneckerModel& km, const std::string& path);

}  // namespace gramlab
