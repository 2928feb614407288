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

#include "gramlab/semigroup.hpp"

#include <cmath>
#include <limits>

namespace gramlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double logistic(double z) {
  // stable both tails
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

double tf_eval(const TestFunction& f, const Vector& y) {
  return std::visit(
      [&](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ConstantF>) {
          return g.c;
        } else if constexpr (std::is_same_v<T, LinearF>) {
          return g.v.dot(y);
        } else if constexpr (std::is_same_v<T, QuadraticF>) {
          return y.dot(g.s * y) + g.v.dot(y) + g.c;
        } else if constexpr (std::is_same_v<T, ExpLinearF>) {
          return std::exp(g.v.dot(y));
        } else if constexpr (std::is_same_v<T, LogisticF>) {
          return logistic(g.v.dot(y) + g.b);
        } else {
          return (g.v.dot(y) >= g.b ? 1.0 : 0.0) + g.shift;
        }
      },
      f);
}

bool tf_has_gradient(const TestFunction& f) {
  return !std::holds_alternative<HalfspaceF>(f);
}

Vector tf_gradient(const TestFunction& f, const Vector& y) {
  return std::visit(
      [&](const auto& g) -> Vector {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ConstantF>) {
          return Vector::Zero(y.size());
        } else if constexpr (std::is_same_v<T, LinearF>) {
          return g.v;
        } else if constexpr (std::is_same_v<T, QuadraticF>) {
          return (g.s + g.s.transpose()) * y + g.v;
        } else if constexpr (std::is_same_v<T, ExpLinearF>) {
          return std::exp(g.v.dot(y)) * g.v;
        } else if constexpr (std::is_same_v<T, LogisticF>) {
          const double p = logistic(g.v.dot(y) + g.b);
          return p * (1.0 - p) * g.v;
        } else {
          throw InputError("tf_gradient: halfspace indicator has no gradient");
        }
      },
      f);
}

std::string tf_name(const TestFunction& f) {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ConstantF>) return "constant";
        else if constexpr (std::is_same_v<T, LinearF>) return "linear";
        else if constexpr (std::is_same_v<T, QuadraticF>) return "quadratic";
        else if constexpr (std::is_same_v<T, ExpLinearF>) return "expLinear";
        else if constexpr (std::is_same_v<T, LogisticF>) return "logistic";
        else return "halfspaceIndicator";
      },
      f);
}

bool tf_nonnegative(const TestFunction& f) {
  return std::visit(
      [](const auto& g) -> bool {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ConstantF>) return g.c >= 0.0;
        else if constexpr (std::is_same_v<T, LinearF>) return false;
        else if constexpr (std::is_same_v<T, QuadraticF>) return false;
        else if constexpr (std::is_same_v<T, ExpLinearF>) return true;
        else if constexpr (std::is_same_v<T, LogisticF>) return true;
        else return g.shift >= 0.0;
      },
      f);
}

GaussianLaw push_forward(const LinearModel& m, double t, const Vector& x) {
  if (t < 0.0) throw InputError("push_forward: need t >= 0");
  if (x.size() != m.n()) throw DimensionError("push_forward: point dimension mismatch");
  GaussianLaw law;
  law.mean = t == 0.0 ? x : Vector(mat_exp(t * m.a) * x);
  law.cov = cov_sigma(m, t);
  return law;
}

double log_density(const LinearModel& m, double t, const Vector& x, const Vector& y) {
  if (!(t > 0.0)) throw InputError("log_density: need t > 0");
  const GaussianLaw law = push_forward(m, t, x);
  Matrix l;
  try {
    l = cholesky_spd(law.cov, 1e-14);
  } catch (const NotPositiveDefiniteError&) {
    throw DegenerateLawError("density: Sigma_t singular (Kalman rank condition fails)");
  }
  const Vector d = y - law.mean;
  const Vector z = cholesky_solve(l, d);
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) log_det += std::log(l(i, i));
  const double n = static_cast<double>(m.n());
  return -0.5 * d.dot(z) - 0.5 * n * std::log(2.0 * kPi) - log_det;
}

double density(const LinearModel& m, double t, const Vector& x, const Vector& y) {
  return std::exp(log_density(m, t, x, y));
}

Matrix sample_exact(const LinearModel& m, double t, const Vector& x, long count,
                    const SampleStream& stream) {
  if (count < 0) throw InputError("sample_exact: need count >= 0");
  const int n = m.n();
  Matrix out(count, n);
  if (t == 0.0) {
    for (long i = 0; i < count; ++i) out.row(i) = x.transpose();
    return out;
  }
  const GaussianLaw law = push_forward(m, t, x);
  Matrix l;
  try {
    l = cholesky_spd(law.cov, 1e-14);
  } catch (const NotPositiveDefiniteError&) {
    throw DegenerateLawError("sample_exact: Sigma_t singular, law degenerate");
  }
  const std::uint64_t key = rng::stream_key(stream);
  Vector z(n);
  for (long i = 0; i < count; ++i) {
    for (int d = 0; d < n; ++d)
      z(d) = rng::normal(key, static_cast<std::uint64_t>(i) * n + d);
    out.row(i) = (law.mean + l * z).transpose();
  }
  return out;
}

QuadratureRule gauss_hermite_rule(int order) {
  if (order < 1) throw InputError("gauss_hermite_rule: need order >= 1");
  // Golub-Welsch on the Hermite Jacobi matrix: off-diagonal sqrt(i/2).
  Matrix j = Matrix::Zero(order, order);
  for (int i = 1; i < order; ++i) {
    const double b = std::sqrt(i / 2.0);
    j(i, i - 1) = b;
    j(i - 1, i) = b;
  }
  const SpectralResult spec = sym_eig(j);
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double sqrt_pi = std::sqrt(kPi);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = spec.eigenvalues(i);
    const double v0 = spec.eigenvectors(0, i);
    rule.weights[i] = sqrt_pi * v0 * v0;
  }
  return rule;
}

namespace {

Estimate expectation_closed(const GaussianLaw& law, const TestFunction& f) {
  if (std::holds_alternative<ConstantF>(f))
    return {std::get<ConstantF>(f).c, 0.0};
  if (std::holds_alternative<LinearF>(f))
    return {std::get<LinearF>(f).v.dot(law.mean), 0.0};
  if (std::holds_alternative<QuadraticF>(f)) {
    const auto& q = std::get<QuadraticF>(f);
    const double val = law.mean.dot(q.s * law.mean) + (q.s * law.cov).trace() +
                       q.v.dot(law.mean) + q.c;
    return {val, 0.0};
  }
  if (std::holds_alternative<ExpLinearF>(f)) {
    const auto& e = std::get<ExpLinearF>(f);
    return {std::exp(e.v.dot(law.mean) + 0.5 * e.v.dot(law.cov * e.v)), 0.0};
  }
  throw InputError("expectation: no closed form for kind " + tf_name(f));
}

Estimate expectation_gh(const GaussianLaw& law, const TestFunction& f, int order) {
  const int n = static_cast<int>(law.mean.size());
  if (n > 4) throw InputError("expectation: Gauss-Hermite restricted to n <= 4");
  if (order > 60) throw InputError("expectation: Gauss-Hermite order capped at 60");
  const Matrix l = cholesky_spd(law.cov + 1e-300 * Matrix::Identity(n, n), 0.0);

  auto tensor_value = [&](const QuadratureRule& rule) {
    const int m = static_cast<int>(rule.nodes.size());
    std::vector<int> idx(static_cast<size_t>(n), 0);
    const double norm = std::pow(kPi, -0.5 * n);
    double total = 0.0;
    Vector xi(n);
    while (true) {
      double w = norm;
      for (int d = 0; d < n; ++d) {
        w *= rule.weights[static_cast<size_t>(idx[static_cast<size_t>(d)])];
        xi(d) = rule.nodes[static_cast<size_t>(idx[static_cast<size_t>(d)])];
      }
      total += w * tf_eval(f, law.mean + std::sqrt(2.0) * (l * xi));
      int d = 0;
      for (; d < n; ++d) {
        if (++idx[static_cast<size_t>(d)] < m) break;
        idx[static_cast<size_t>(d)] = 0;
      }
      if (d == n) break;
    }
    return total;
  };

  const double fine = tensor_value(gauss_hermite_rule(order));
  const int coarse_order = std::max(1, order / 2);
  const double coarse = tensor_value(gauss_hermite_rule(coarse_order));
  return {fine, std::abs(fine - coarse)};
}

Estimate expectation_mc(const LinearModel& m, double t, const Vector& x,
                        const TestFunction& f, const MonteCarlo& mc) {
  if (mc.count < 2) throw InputError("expectation: Monte Carlo needs count >= 2");
  const GaussianLaw law = push_forward(m, t, x);
  Matrix l;
  try {
    l = cholesky_spd(law.cov, 1e-14);
  } catch (const NotPositiveDefiniteError&) {
    throw DegenerateLawError("expectation: Sigma_t singular, law degenerate");
  }
  const std::uint64_t key = rng::stream_key(mc.stream);
  const int n = m.n();
  double sum = 0.0, sumsq = 0.0;
  Vector z(n);
  for (long i = 0; i < mc.count; ++i) {
    for (int d = 0; d < n; ++d)
      z(d) = rng::normal(key, static_cast<std::uint64_t>(i) * n + d);
    const double v = tf_eval(f, law.mean + l * z);
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / static_cast<double>(mc.count);
  const double var = std::max(0.0, sumsq / static_cast<double>(mc.count) - mean * mean);
  return {mean, std::sqrt(var / static_cast<double>(mc.count))};
}

}  // namespace

Estimate expectation(const LinearModel& m, double t, const Vector& x, const TestFunction& f,
                     const Method& method) {
  if (t < 0.0) throw InputError("expectation: need t >= 0");
  if (t == 0.0) return {tf_eval(f, x), 0.0};
  if (std::holds_alternative<ClosedForm>(method))
    return expectation_closed(push_forward(m, t, x), f);
  if (std::holds_alternative<GaussHermite>(method))
    return expectation_gh(push_forward(m, t, x), f, std::get<GaussHermite>(method).order);
  return expectation_mc(m, t, x, f, std::get<MonteCarlo>(method));
}

GradientEstimate grad_ptf(const LinearModel& m, double t, const Vector& x,
                          const TestFunction& f, const Method& method) {
  if (!tf_has_gradient(f))
    throw InputError("grad_ptf: kind " + tf_name(f) + " is not differentiable");
  const int n = m.n();
  const Matrix e_tat = mat_exp(t * m.a.transpose());

  if (std::holds_alternative<ClosedForm>(method)) {
    const GaussianLaw law = push_forward(m, t, x);
    if (std::holds_alternative<ConstantF>(f)) return {Vector::Zero(n), Vector::Zero(n)};
    if (std::holds_alternative<LinearF>(f))
      return {e_tat * std::get<LinearF>(f).v, Vector::Zero(n)};
    if (std::holds_alternative<QuadraticF>(f)) {
      const auto& q = std::get<QuadraticF>(f);
      return {e_tat * ((q.s + q.s.transpose()) * law.mean + q.v), Vector::Zero(n)};
    }
    if (std::holds_alternative<ExpLinearF>(f)) {
      const auto& e = std::get<ExpLinearF>(f);
      const double ptf = std::exp(e.v.dot(law.mean) + 0.5 * e.v.dot(law.cov * e.v));
      return {ptf * (e_tat * e.v), Vector::Zero(n)};
    }
    throw InputError("grad_ptf: no closed form for kind " + tf_name(f));
  }
  if (!std::holds_alternative<MonteCarlo>(method))
    throw InputError("grad_ptf: supported methods are closedForm and monteCarlo");

  const auto& mc = std::get<MonteCarlo>(method);
  if (mc.count < 2) throw InputError("grad_ptf: Monte Carlo needs count >= 2");
  const GaussianLaw law = push_forward(m, t, x);
  Matrix l;
  try {
    l = cholesky_spd(law.cov, 1e-14);
  } catch (const NotPositiveDefiniteError&) {
    throw DegenerateLawError("grad_ptf: Sigma_t singular, law degenerate");
  }
  const std::uint64_t key = rng::stream_key(mc.stream);
  Vector sum = Vector::Zero(n), sumsq = Vector::Zero(n), z(n);
  for (long i = 0; i < mc.count; ++i) {
    for (int d = 0; d < n; ++d)
      z(d) = rng::normal(key, static_cast<std::uint64_t>(i) * n + d);
    const Vector g = tf_gradient(f, law.mean + l * z);
    sum += g;
    sumsq += g.cwiseProduct(g);
  }
  const double cnt = static_cast<double>(mc.count);
  const Vector mean = sum / cnt;
  const Vector var = (sumsq / cnt - mean.cwiseProduct(mean)).cwiseMax(0.0);
  const Vector se = (var / cnt).cwiseSqrt();
  GradientEstimate out;
  out.value = e_tat * mean;
  out.std_error = e_tat.cwiseAbs() * se;  // conservative componentwise band
  return out;
}

}  // namespace gramlab
