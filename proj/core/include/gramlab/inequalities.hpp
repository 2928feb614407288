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

// Verifiers for the functional inequalities of the Gaussian semigroup:
// reverse Poincare, reverse log-Sobolev, Wang-Harnack, total variation,
// Hellinger vs. Wasserstein, and the integrated Harnack inequality. Closed
// Gaussian forms are preferred; Monte Carlo is used where no closed form
// exists, with a 3-standard-error verdict band and one automatic 10x retry.

#include <string>

#include "gramlab/distance.hpp"
#include "gramlab/semigroup.hpp"

namespace gramlab {

enum class InequalityId {
  reversePoincare,
  reverseLogSobolev,
  wangHarnack,
  totalVariation,
  hellingerWasserstein,
  integratedHarnack,
};

enum class Verdict { pass, fail, inconclusive };
enum class ReportMethod { closedForm, gaussHermite, monteCarlo };

std::string inequality_id_string(InequalityId id);
InequalityId parse_inequality_id(const std::string& s);
std::string verdict_string(Verdict v);
std::string report_method_string(ReportMethod m);

struct InequalityReport {
  InequalityId id{};
  std::string instance;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  ReportMethod method = ReportMethod::closedForm;
  double stat_error = 0.0;  // 0 for closed form
  Verdict verdict = Verdict::pass;
  std::uint64_t seed = 0;
  long samples = 0;
  bool retried = false;
  bool vacuous = false;  // bound holds because the right side is trivial

  std::string to_json_string() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

struct VerifyOptions {
  double abs_tol = 1e-10;
  long mc_samples = 1000000;
  SampleStream stream{};
  std::string label;  // model tag folded into the instance description
};

/// Verdict policy shared by every statistical verifier: fail only when
/// slack < -3 stat_error; negative slack inside the noise band is
/// inconclusive (after one 10x retry); closed forms compare against abs_tol.
Verdict classify_slack(double slack, double stat_error, double abs_tol, bool statistical);

InequalityReport reverse_poincare(const LinearModel& m, double t, const Vector& x,
                                  const TestFunction& f, const VerifyOptions& opts = {});

InequalityReport reverse_log_sobolev(const LinearModel& m, double t, const Vector& x,
                                     const TestFunction& f, const VerifyOptions& opts = {});

InequalityReport wang_harnack(const LinearModel& m, double t, double alpha, const Vector& x,
                              const Vector& y, const TestFunction& f,
                              const VerifyOptions& opts = {});

InequalityReport total_variation(const LinearModel& m, double t, const Vector& x,
                                 const Vector& y, const VerifyOptions& opts = {});

InequalityReport hellinger_wasserstein(const LinearModel& m, double t, const Vector& x,
                                       const Vector& y, const VerifyOptions& opts = {});

InequalityReport integrated_harnack(const LinearModel& m, double t, double p, const Vector& x,
                                    const Vector& y, const VerifyOptions& opts = {});

/// Monte Carlo estimate of the integrated-Harnack left side
/// E_{z ~ p_t(x,.)} (p_t(x,z)/p_t(y,z))^{1/(p-1)}; the sampling route the
/// closed form is cross-checked against.
Estimate integrated_harnack_mc(const LinearModel& m, double t, double p, const Vector& x,
                               const Vector& y, long samples, const SampleStream& stream);

/// Mahalanobis distance of the time-t means in the Sigma_t metric,
/// ||Sigma_t^{-1/2}(m_t(x) - m_t(y))||. Equals rho_t(x,y); computing it
/// through Sigma_t keeps an independent route alive in the TV/Hellinger/
/// Harnack closed forms.
double mean_shift_mahalanobis(const LinearModel& m, double t, const Vector& x, const Vector& y);

}  // namespace gramlab
