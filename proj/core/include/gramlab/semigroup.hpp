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

// Exact Gaussian semigroup machinery. The time-t law is Gaussian with mean
// e^{tA} x and covariance Sigma_t, so P_t f is evaluated by closed form,
// Gauss-Hermite quadrature, or exact Monte Carlo (Cholesky of Sigma_t; no
// time discretization anywhere).

#include <string>
#include <variant>
#include <vector>

#include "gramlab/gramian.hpp"
#include "gramlab/model.hpp"
#include "gramlab/rng.hpp"

namespace gramlab {

struct GaussianLaw {
  Vector mean;
  Matrix cov;
};

struct ConstantF {
  double c = 0.0;
};
struct LinearF {
  Vector v;
};
struct QuadraticF {  // y^T S y + v.y + c
  Matrix s;
  Vector v;
  double c = 0.0;
};
struct ExpLinearF {  // exp(v.y)
  Vector v;
};
struct LogisticF {  // 1 / (1 + exp(-v.y - b))
  Vector v;
  double b = 0.0;
};
struct HalfspaceF {  // 1{v.y >= b} + shift
  Vector v;
  double b = 0.0;
  double shift = 0.0;
};

using TestFunction = std::variant<ConstantF, LinearF, QuadraticF, ExpLinearF, LogisticF, HalfspaceF>;

double tf_eval(const TestFunction& f, const Vector& y);
bool tf_has_gradient(const TestFunction& f);
Vector tf_gradient(const TestFunction& f, const Vector& y);
std::string tf_name(const TestFunction& f);
/// All kinds here are nonnegative except linear/quadratic with negative parts.
bool tf_nonnegative(const TestFunction& f);

struct ClosedForm {};
struct GaussHermite {
  int order = 24;
};
struct MonteCarlo {
  long count = 100000;
  SampleStream stream{};
};
using Method = std::variant<ClosedForm, GaussHermite, MonteCarlo>;

/// Value with a rigorous (closed form: 0), quadrature or statistical error
/// estimate attached.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

GaussianLaw push_forward(const LinearModel& m, double t, const Vector& x);

/// Transition density p_t(x, y). Throws DegenerateLawError when Sigma_t is
/// singular (Kalman failure).
double density(const LinearModel& m, double t, const Vector& x, const Vector& y);
double log_density(const LinearModel& m, double t, const Vector& x, const Vector& y);

/// count i.i.d. exact draws of the time-t law, one per row.
Matrix sample_exact(const LinearModel& m, double t, const Vector& x, long count,
                    const SampleStream& stream);

Estimate expectation(const LinearModel& m, double t, const Vector& x, const TestFunction& f,
                     const Method& method);

/// grad P_t f(x) = e^{tA^T} E[grad f(Sigma_t^{1/2} Z + m_t(x))], with a
/// componentwise error estimate. Closed form for constant/linear/quadratic/
/// expLinear; Monte Carlo otherwise. Rejects the indicator kind.
struct GradientEstimate {
  Vector value;
  Vector std_error;
};
GradientEstimate grad_ptf(const LinearModel& m, double t, const Vector& x,
                          const TestFunction& f, const Method& method);

/// Physicists' Gauss-Hermite rule: integrates f against e^{-x^2}.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_hermite_rule(int order);

}  // namespace gramlab
