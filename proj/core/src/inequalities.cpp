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

#include "gramlab/inequalities.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace gramlab {

std::string inequality_id_string(InequalityId id) {
  switch (id) {
    case InequalityId::reversePoincare: return "reversePoincare";
    case InequalityId::reverseLogSobolev: return "reverseLogSobolev";
    case InequalityId::wangHarnack: return "wangHarnack";
    case InequalityId::totalVariation: return "totalVariation";
    case InequalityId::hellingerWasserstein: return "hellingerWasserstein";
    case InequalityId::integratedHarnack: return "integratedHarnack";
  }
  return "?";
}

InequalityId parse_inequality_id(const std::string& s) {
  if (s == "reversePoincare" || s == "rp") return InequalityId::reversePoincare;
  if (s == "reverseLogSobolev" || s == "rls") return InequalityId::reverseLogSobolev;
  if (s == "wangHarnack" || s == "wang") return InequalityId::wangHarnack;
  if (s == "totalVariation" || s == "tv") return InequalityId::totalVariation;
  if (s == "hellingerWasserstein" || s == "hellinger")
    return InequalityId::hellingerWasserstein;
  if (s == "integratedHarnack" || s == "ih") return InequalityId::integratedHarnack;
  throw InputError("unknown inequality id: " + s);
}

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string report_method_string(ReportMethod m) {
  switch (m) {
    case ReportMethod::closedForm: return "closedForm";
    case ReportMethod::gaussHermite: return "gaussHermite";
    case ReportMethod::monteCarlo: return "monteCarlo";
  }
  return "?";
}

std::string InequalityReport::to_json_string() const {
  nlohmann::ordered_json j;
  j["inequalityId"] = inequality_id_string(id);
  j["instance"] = instance;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["slack"] = slack;
  j["method"] = report_method_string(method);
  j["statError"] = stat_error;
  j["verdict"] = verdict_string(verdict);
  j["seed"] = seed;
  j["samples"] = samples;
  j["retried"] = retried;
  j["vacuous"] = vacuous;
  return j.dump(2);
}

std::string InequalityReport::csv_header() {
  return "inequalityId,instance,lhs,rhs,slack,method,statError,verdict,seed,samples,retried";
}

std::string InequalityReport::to_csv_row() const {
  std::ostringstream os;
  os.precision(17);
  os << inequality_id_string(id) << ",\"" << instance << "\"," << lhs << "," << rhs << ","
     << slack << "," << report_method_string(method) << "," << stat_error << ","
     << verdict_string(verdict) << "," << seed << "," << samples << "," << (retried ? 1 : 0);
  return os.str();
}

Verdict classify_slack(double slack, double stat_error, double abs_tol, bool statistical) {
  if (!statistical || stat_error == 0.0)
    return slack >= -abs_tol ? Verdict::pass : Verdict::fail;
  if (slack >= 0.0 || slack >= -abs_tol) return Verdict::pass;
  if (slack > -3.0 * stat_error) return Verdict::inconclusive;
  return Verdict::fail;
}

namespace {

constexpr double kXLogXZero = 0.0;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : kXLogXZero; }

std::string fmt_vec(const Vector& v) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

std::string describe(const VerifyOptions& opts, double t, const Vector& x,
                     const Vector* y, const TestFunction* f, double param, const char* pname) {
  std::ostringstream os;
  os.precision(6);
  if (!opts.label.empty()) os << opts.label << " ";
  os << "t=" << t << " x=" << fmt_vec(x);
  if (y) os << " y=" << fmt_vec(*y);
  if (f) os << " f=" << tf_name(*f);
  if (pname) os << " " << pname << "=" << param;
  return os.str();
}

struct ScalarMoments {
  double mean = 0.0, se_mean = 0.0;
  double var = 0.0, se_var = 0.0;
  double mean_xlogx = 0.0, se_xlogx = 0.0;
};

// One pass over exact samples of the time-t law: moments of f, of f^2 (for
// the variance with its own error bar) and of f log f.
ScalarMoments mc_scalar_moments(const LinearModel& m, double t, const Vector& x,
                                const TestFunction& f, long count, const SampleStream& stream) {
  const Matrix samples = sample_exact(m, t, x, count, stream);
  const double cnt = static_cast<double>(count);
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0, sx = 0, sx2 = 0;
  Vector row(samples.cols());
  for (long i = 0; i < count; ++i) {
    row = samples.row(i);
    const double v = tf_eval(f, row);
    const double xv = xlogx(v);
    s1 += v;
    s2 += v * v;
    s3 += v * v * v;
    s4 += v * v * v * v;
    sx += xv;
    sx2 += xv * xv;
  }
  ScalarMoments out;
  out.mean = s1 / cnt;
  const double m2 = s2 / cnt - out.mean * out.mean;
  out.var = std::max(0.0, m2);
  out.se_mean = std::sqrt(out.var / cnt);
  // se of the sample variance via the fourth central moment
  const double mu = out.mean;
  const double m4 = s4 / cnt - 4 * mu * (s3 / cnt) + 6 * mu * mu * (s2 / cnt) - 3 * mu * mu * mu * mu;
  out.se_var = std::sqrt(std::max(0.0, m4 - m2 * m2) / cnt);
  out.mean_xlogx = sx / cnt;
  out.se_xlogx = std::sqrt(std::max(0.0, sx2 / cnt - out.mean_xlogx * out.mean_xlogx) / cnt);
  return out;
}

// Halfspace push-forward probability P(<v,Y> >= b) and the standardized
// offset z = (<v,mean> - b)/sqrt(<Sigma v, v>).
struct HalfspaceStats {
  double z = 0.0;
  double prob = 0.0;
  double spread = 0.0;  // sqrt(<Sigma v, v>)
};

HalfspaceStats halfspace_stats(const LinearModel& m, double t, const Vector& x,
                               const Vector& v, double b) {
  const GaussianLaw law = push_forward(m, t, x);
  HalfspaceStats h;
  h.spread = std::sqrt(v.dot(law.cov * v));
  if (h.spread <= 0.0) throw DegenerateLawError("halfspace statistics need <Sigma v, v> > 0");
  h.z = (v.dot(law.mean) - b) / h.spread;
  h.prob = std_normal_cdf(h.z);
  return h;
}

}  // namespace

double mean_shift_mahalanobis(const LinearModel& m, double t, const Vector& x, const Vector& y) {
  const GaussianLaw lx = push_forward(m, t, x);
  const GaussianLaw ly = push_forward(m, t, y);
  Matrix l;
  try {
    l = cholesky_spd(lx.cov, 1e-14);
  } catch (const NotPositiveDefiniteError&) {
    throw DegenerateLawError("mean_shift_mahalanobis: Sigma_t singular");
  }
  const Vector d = lx.mean - ly.mean;
  return std::sqrt(std::max(0.0, d.dot(cholesky_solve(l, d))));
}

InequalityReport reverse_poincare(const LinearModel& m, double t, const Vector& x,
                                  const TestFunction& f, const VerifyOptions& opts) {
  if (!(t > 0.0)) throw InputError("reverse_poincare: need t > 0");
  InequalityReport r;
  r.id = InequalityId::reversePoincare;
  r.instance = describe(opts, t, x, nullptr, &f, 0, nullptr);
  r.seed = opts.stream.root_seed;

  const GaussianLaw law = push_forward(m, t, x);

  if (std::holds_alternative<HalfspaceF>(f)) {
    // P_t f = shift + Phi(z); Gamma^{G_t}(P_t f) = phi(z)^2 and the variance
    // is Phi(1 - Phi), both independent of the shift.
    const auto& h = std::get<HalfspaceF>(f);
    const auto hs = halfspace_stats(m, t, x, h.v, h.b);
    r.lhs = std_normal_pdf(hs.z) * std_normal_pdf(hs.z);
    r.rhs = hs.prob * (1.0 - hs.prob);
    r.method = ReportMethod::closedForm;
  } else if (std::holds_alternative<LogisticF>(f)) {
    const Matrix g_t = gramian_gt(m, t);
    auto run = [&](long count) {
      const auto grad = grad_ptf(m, t, x, f, MonteCarlo{count, opts.stream.substream(1)});
      // LHS = <G_t grad P_t f, grad P_t f>
      const Vector gg = g_t * grad.value;
      r.lhs = grad.value.dot(gg);
      const double lhs_err = 2.0 * gg.cwiseAbs().dot(grad.std_error);
      const auto mom = mc_scalar_moments(m, t, x, f, count, opts.stream.substream(2));
      r.rhs = mom.var;
      r.stat_error = lhs_err + mom.se_var;
      r.samples = count;
    };
    r.method = ReportMethod::monteCarlo;
    run(opts.mc_samples);
    r.slack = r.rhs - r.lhs;
    if (classify_slack(r.slack, r.stat_error, opts.abs_tol, true) == Verdict::inconclusive) {
      run(opts.mc_samples * 10);
      r.retried = true;
    }
  } else {
    // closed-form kinds: LHS = <Sigma_t g, g> with g = E[grad f]
    Vector g;
    if (std::holds_alternative<ConstantF>(f)) {
      g = Vector::Zero(m.n());
      r.rhs = 0.0;
    } else if (std::holds_alternative<LinearF>(f)) {
      const auto& lf = std::get<LinearF>(f);
      g = lf.v;
      r.rhs = lf.v.dot(law.cov * lf.v);
    } else if (std::holds_alternative<QuadraticF>(f)) {
      const auto& q = std::get<QuadraticF>(f);
      const Matrix s_sym = 0.5 * (q.s + q.s.transpose());
      g = 2.0 * s_sym * law.mean + q.v;
      r.rhs = 2.0 * (s_sym * law.cov * s_sym * law.cov).trace() + g.dot(law.cov * g);
    } else if (std::holds_alternative<ExpLinearF>(f)) {
      const auto& e = std::get<ExpLinearF>(f);
      const double q = e.v.dot(law.cov * e.v);
      const double mgf = std::exp(e.v.dot(law.mean) + 0.5 * q);
      g = mgf * e.v;
      r.rhs = mgf * mgf * (std::expm1(q));
    } else {
      throw InputError("reverse_poincare: unsupported kind " + tf_name(f));
    }
    r.lhs = g.dot(law.cov * g);
    r.method = ReportMethod::closedForm;
  }
  r.slack = r.rhs - r.lhs;
  r.verdict = classify_slack(r.slack, r.stat_error, opts.abs_tol,
                             r.method == ReportMethod::monteCarlo);
  return r;
}

InequalityReport reverse_log_sobolev(const LinearModel& m, double t, const Vector& x,
                                     const TestFunction& f, const VerifyOptions& opts) {
  if (!(t > 0.0)) throw InputError("reverse_log_sobolev: need t > 0");
  if (!tf_nonnegative(f))
    throw InputError("reverse_log_sobolev: f must be nonnegative, got " + tf_name(f));
  InequalityReport r;
  r.id = InequalityId::reverseLogSobolev;
  r.instance = describe(opts, t, x, nullptr, &f, 0, nullptr);
  r.seed = opts.stream.root_seed;

  const GaussianLaw law = push_forward(m, t, x);

  if (std::holds_alternative<ConstantF>(f)) {
    r.lhs = 0.0;
    r.rhs = 0.0;
    r.method = ReportMethod::closedForm;
  } else if (std::holds_alternative<ExpLinearF>(f)) {
    const auto& e = std::get<ExpLinearF>(f);
    const double q = e.v.dot(law.cov * e.v);
    const double vm = e.v.dot(law.mean);
    const double mgf = std::exp(vm + 0.5 * q);
    r.lhs = mgf * q;  // Gamma^{G_t}(P_t f)/P_t f
    r.rhs = 2.0 * mgf * (vm + q) - 2.0 * mgf * (vm + 0.5 * q);
    r.method = ReportMethod::closedForm;
  } else if (std::holds_alternative<HalfspaceF>(f)) {
    const auto& h = std::get<HalfspaceF>(f);
    const auto hs = halfspace_stats(m, t, x, h.v, h.b);
    const double c = h.shift;
    const double ptf = c + hs.prob;
    r.lhs = std_normal_pdf(hs.z) * std_normal_pdf(hs.z) / ptf;
    r.rhs = 2.0 * (xlogx(1.0 + c) * hs.prob + xlogx(c) * (1.0 - hs.prob)) - 2.0 * xlogx(ptf);
    r.method = ReportMethod::closedForm;
  } else if (std::holds_alternative<LogisticF>(f)) {
    const Matrix g_t = gramian_gt(m, t);
    auto run = [&](long count) {
      const auto grad = grad_ptf(m, t, x, f, MonteCarlo{count, opts.stream.substream(1)});
      const Vector gg = g_t * grad.value;
      const double num = grad.value.dot(gg);  // Gamma^{G_t}(P_t f)
      const double num_err = 2.0 * gg.cwiseAbs().dot(grad.std_error);
      const auto mom = mc_scalar_moments(m, t, x, f, count, opts.stream.substream(2));
      const double ptf = mom.mean;
      r.lhs = num / ptf;
      const double lhs_err = num_err / ptf + num / (ptf * ptf) * mom.se_mean;
      r.rhs = 2.0 * mom.mean_xlogx - 2.0 * xlogx(ptf);
      const double rhs_err =
          2.0 * mom.se_xlogx + 2.0 * std::abs(std::log(ptf) + 1.0) * mom.se_mean;
      r.stat_error = lhs_err + rhs_err;
      r.samples = count;
    };
    r.method = ReportMethod::monteCarlo;
    run(opts.mc_samples);
    r.slack = r.rhs - r.lhs;
    if (classify_slack(r.slack, r.stat_error, opts.abs_tol, true) == Verdict::inconclusive) {
      run(opts.mc_samples * 10);
      r.retried = true;
    }
  } else {
    throw InputError("reverse_log_sobolev: unsupported kind " + tf_name(f));
  }
  r.slack = r.rhs - r.lhs;
  r.verdict = classify_slack(r.slack, r.stat_error, opts.abs_tol,
                             r.method == ReportMethod::monteCarlo);
  return r;
}

InequalityReport wang_harnack(const LinearModel& m, double t, double alpha, const Vector& x,
                              const Vector& y, const TestFunction& f,
                              const VerifyOptions& opts) {
  if (!(alpha > 1.0)) throw InputError("wang_harnack: need alpha > 1");
  if (!(t > 0.0)) throw InputError("wang_harnack: need t > 0");
  if (!tf_nonnegative(f))
    throw InputError("wang_harnack: f must be nonnegative, got " + tf_name(f));
  InequalityReport r;
  r.id = InequalityId::wangHarnack;
  r.instance = describe(opts, t, x, &y, &f, alpha, "alpha");
  r.seed = opts.stream.root_seed;

  const double rho = rho_t(m, t, x, y);
  const double factor = std::exp(alpha * rho * rho / (2.0 * (alpha - 1.0)));

  if (std::holds_alternative<ConstantF>(f)) {
    const double c = std::get<ConstantF>(f).c;
    r.lhs = std::pow(c, alpha);
    r.rhs = std::pow(c, alpha) * factor;
    r.method = ReportMethod::closedForm;
  } else if (std::holds_alternative<ExpLinearF>(f)) {
    const auto& e = std::get<ExpLinearF>(f);
    const GaussianLaw lx = push_forward(m, t, x);
    const GaussianLaw ly = push_forward(m, t, y);
    const double q = e.v.dot(lx.cov * e.v);
    r.lhs = std::exp(alpha * (e.v.dot(lx.mean) + 0.5 * q));
    r.rhs = std::exp(alpha * e.v.dot(ly.mean) + 0.5 * alpha * alpha * q) * factor;
    r.method = ReportMethod::closedForm;
  } else if (std::holds_alternative<HalfspaceF>(f)) {
    const auto& h = std::get<HalfspaceF>(f);
    const auto hx = halfspace_stats(m, t, x, h.v, h.b);
    const auto hy = halfspace_stats(m, t, y, h.v, h.b);
    const double c = h.shift;
    r.lhs = std::pow(c + hx.prob, alpha);
    r.rhs = (std::pow(1.0 + c, alpha) * hy.prob + std::pow(c, alpha) * (1.0 - hy.prob)) * factor;
    r.method = ReportMethod::closedForm;
  } else if (std::holds_alternative<LogisticF>(f)) {
    auto run = [&](long count) {
      const auto ex = expectation(m, t, x, f, MonteCarlo{count, opts.stream.substream(1)});
      // E_y[f^alpha] sampled directly
      const Matrix samples = sample_exact(m, t, y, count, opts.stream.substream(2));
      double s1 = 0, s2 = 0;
      Vector row(samples.cols());
      for (long i = 0; i < count; ++i) {
        row = samples.row(i);
        const double v = std::pow(tf_eval(f, row), alpha);
        s1 += v;
        s2 += v * v;
      }
      const double cnt = static_cast<double>(count);
      const double mean_fa = s1 / cnt;
      const double se_fa = std::sqrt(std::max(0.0, s2 / cnt - mean_fa * mean_fa) / cnt);
      r.lhs = std::pow(ex.value, alpha);
      const double lhs_err = alpha * std::pow(ex.value, alpha - 1.0) * ex.std_error;
      r.rhs = mean_fa * factor;
      r.stat_error = lhs_err + se_fa * factor;
      r.samples = count;
    };
    r.method = ReportMethod::monteCarlo;
    run(opts.mc_samples);
    r.slack = r.rhs - r.lhs;
    if (classify_slack(r.slack, r.stat_error, opts.abs_tol, true) == Verdict::inconclusive) {
      run(opts.mc_samples * 10);
      r.retried = true;
    }
  } else {
    throw InputError("wang_harnack: unsupported kind " + tf_name(f));
  }
  r.slack = r.rhs - r.lhs;
  r.verdict = classify_slack(r.slack, r.stat_error, opts.abs_tol,
                             r.method == ReportMethod::monteCarlo);
  return r;
}

InequalityReport total_variation(const LinearModel& m, double t, const Vector& x,
                                 const Vector& y, const VerifyOptions& opts) {
  if (!(t > 0.0)) throw InputError("total_variation: need t > 0");
  InequalityReport r;
  r.id = InequalityId::totalVariation;
  r.instance = describe(opts, t, x, &y, nullptr, 0, nullptr);
  r.seed = opts.stream.root_seed;
  const double delta = mean_shift_mahalanobis(m, t, x, y);
  r.lhs = 2.0 * std_normal_cdf(delta / 2.0) - 1.0;
  r.rhs = rho_t(m, t, x, y);
  r.method = ReportMethod::closedForm;
  r.slack = r.rhs - r.lhs;
  r.verdict = classify_slack(r.slack, 0.0, opts.abs_tol, false);
  return r;
}

InequalityReport hellinger_wasserstein(const LinearModel& m, double t, const Vector& x,
                                       const Vector& y, const VerifyOptions& opts) {
  if (!(t > 0.0)) throw InputError("hellinger_wasserstein: need t > 0");
  InequalityReport r;
  r.id = InequalityId::hellingerWasserstein;
  r.instance = describe(opts, t, x, &y, nullptr, 0, nullptr);
  r.seed = opts.stream.root_seed;
  const double delta = mean_shift_mahalanobis(m, t, x, y);
  r.lhs = 2.0 * (-std::expm1(-delta * delta / 8.0));
  const double rho = rho_t(m, t, x, y);
  r.rhs = rho * rho / 4.0;
  r.method = ReportMethod::closedForm;
  r.slack = r.rhs - r.lhs;
  r.verdict = classify_slack(r.slack, 0.0, opts.abs_tol, false);
  return r;
}

InequalityReport integrated_harnack(const LinearModel& m, double t, double p, const Vector& x,
                                    const Vector& y, const VerifyOptions& opts) {
  if (!(p > 1.0)) throw InputError("integrated_harnack: need p > 1");
  if (!(t > 0.0)) throw InputError("integrated_harnack: need t > 0");
  InequalityReport r;
  r.id = InequalityId::integratedHarnack;
  r.instance = describe(opts, t, x, &y, nullptr, p, "p");
  r.seed = opts.stream.root_seed;
  const double q = 1.0 / (p - 1.0);
  const double delta = mean_shift_mahalanobis(m, t, x, y);
  r.lhs = std::exp(q * (q + 1.0) * delta * delta / 2.0);
  const double rho = rho_t(m, t, x, y);
  r.rhs = std::exp(p / ((p - 1.0) * (p - 1.0)) * rho * rho / 2.0);
  r.method = ReportMethod::closedForm;
  r.slack = r.rhs - r.lhs;
  // The Gaussian law saturates this bound; widen the pass band to the
  // relative tolerance of the two exponentials.
  r.verdict = classify_slack(r.slack, 0.0, std::max(opts.abs_tol, 1e-10 * r.rhs), false);
  return r;
}

Estimate integrated_harnack_mc(const LinearModel& m, double t, double p, const Vector& x,
                               const Vector& y, long samples, const SampleStream& stream) {
  if (!(p > 1.0)) throw InputError("integrated_harnack_mc: need p > 1");
  const double q = 1.0 / (p - 1.0);
  const Matrix draws = sample_exact(m, t, x, samples, stream);
  double s1 = 0, s2 = 0;
  Vector z(draws.cols());
  for (long i = 0; i < samples; ++i) {
    z = draws.row(i);
    const double ratio = std::exp(q * (log_density(m, t, x, z) - log_density(m, t, y, z)));
    s1 += ratio;
    s2 += ratio * ratio;
  }
  const double cnt = static_cast<double>(samples);
  const double mean = s1 / cnt;
  return {mean, std::sqrt(std::max(0.0, s2 / cnt - mean * mean) / cnt)};
}

}  // namespace gramlab
