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

#include <doctest.h>

#include "gramlab/gramian.hpp"
#include "gramlab/kfp.hpp"
#include "test_support.hpp"

using namespace gramlab;

TEST_SUITE_BEGIN("gramian");

TEST_CASE("cov_sigma pinned values") {
  const LinearModel flat{Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
  CHECK(cov_sigma(flat, 0.0).norm() == 0.0);
  CHECK((cov_sigma(flat, 2.5) - 2.5 * Matrix::Identity(2, 2)).norm() < 1e-12);

  const LinearModel chain = oracle::zoo(ZooName::kolmogorov).underlying();
  Matrix want(2, 2);
  want << 1.0, 0.5, 0.5, 1.0 / 3.0;
  CHECK((cov_sigma(chain, 1.0) - want).cwiseAbs().maxCoeff() < 1e-13);
  CHECK_THROWS_AS(cov_sigma(flat, -1.0), InputError);
}

TEST_CASE("gramian_g pinned values and quadrature oracle") {
  const LinearModel chain = oracle::zoo(ZooName::kolmogorov).underlying();
  CHECK(gramian_g(chain, 1.0, 1.0).norm() == 0.0);
  for (double t : {0.5, 1.0, 2.0})
    CHECK((gramian_gt(chain, t) - oracle::chain2_gt(t)).cwiseAbs().maxCoeff() < 1e-12);

  const LinearModel fp = oracle::zoo(ZooName::kinetic_fp, 2, 3.0).underlying();
  const Matrix got = gramian_g(fp, 0.0, 2.0);
  const Matrix want = oracle::quad_gramian(fp.a, fp.noise_cov(), 0.0, 2.0);
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-9);
  CHECK_THROWS_AS(gramian_g(fp, 2.0, 1.0), InputError);
}

TEST_CASE("gramian_g2 pinned values and nested quadrature oracle") {
  const LinearModel flat{Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
  CHECK(gramian_g2(flat, 1.0, 1.0).norm() == 0.0);
  CHECK((gramian_g2(flat, 0.0, 3.0) - 4.5 * Matrix::Identity(2, 2)).norm() < 1e-12);

  const LinearModel chain = oracle::zoo(ZooName::kolmogorov).underlying();
  const Matrix got = gramian_g2(chain, 0.0, 1.0);
  const Matrix want = oracle::quad_gramian2(chain.a, chain.noise_cov(), 0.0, 1.0);
  CHECK((got - want).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("additivity, change of variable and Kronecker consistency") {
  auto rng = oracle::test_rng(555);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  for (const auto& km : oracle::zoo_all()) {
    KroneckerModel spec = km;
    spec.q_spectrum = Spectrum::explicit_list({1.0, 0.25});
    const LinearModel m = lift_kronecker(spec, 2);
    for (int trial = 0; trial < 3; ++trial) {
      const double s = u(rng), t = u(rng);
      CAPTURE(km.zoo_name);
      CAPTURE(s);
      CAPTURE(t);
      // Sigma_t = e^{tA} G_t e^{tA^T}
      const Matrix e_ta = mat_exp(t * m.a);
      const Matrix lhs = cov_sigma(m, t);
      const Matrix rhs = e_ta * gramian_gt(m, t) * e_ta.transpose();
      CHECK((lhs - rhs).norm() <= 1e-10 * std::max(1.0, lhs.norm()));
      // G_{t+s} = G_t + e^{-tA} G_s e^{-tA^T}
      const Matrix e_mta = mat_exp(-t * m.a);
      const Matrix add = gramian_gt(m, t) + e_mta * gramian_gt(m, s) * e_mta.transpose();
      const Matrix direct = gramian_gt(m, t + s);
      CHECK((add - direct).norm() <= 1e-10 * std::max(1.0, direct.norm()));
    }
    // G_t of the lift equals Gbar_t (x) diag(alpha)
    const double t = 0.7;
    const Matrix big = gramian_gt(m, t);
    const Matrix small = gramian_gt(km.underlying(), t);
    for (int bi = 0; bi < km.j; ++bi)
      for (int bj = 0; bj < km.j; ++bj)
        for (int l = 0; l < 2; ++l)
          for (int lp = 0; lp < 2; ++lp) {
            const double want = l == lp ? small(bi, bj) * spec.q_spectrum.alpha(l + 1) : 0.0;
            CHECK(std::abs(big(bi * 2 + l, bj * 2 + lp) - want) < 1e-10);
          }
  }
}

TEST_CASE("monotonicity of G_t justifies bisection") {
  for (const auto& km : oracle::zoo_all()) {
    const LinearModel u = km.underlying();
    double prev = 0.0;
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const Matrix diff = gramian_gt(u, t) - gramian_gt(u, t / 2.0);
      CHECK(is_psd(diff, 1e-12));
      const double lam = lambda_min(u, t);
      CHECK(lam >= prev - 1e-12);
      prev = lam;
    }
  }
}

TEST_CASE("lambda_min closed forms") {
  const LinearModel flat{Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
  CHECK(lambda_min(flat, 1.5) == doctest::Approx(1.5).epsilon(1e-12));

  const KroneckerModel chain = oracle::zoo(ZooName::kolmogorov);
  for (double t : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
    CAPTURE(t);
    CHECK(oracle::rel_err(lambda_min_underlying(chain, t), oracle::chain2_lambda(t)) < 1e-12);
  }
  // degenerate pair reports ~0 rather than throwing
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = 1.0;
  const LinearModel deficient{Matrix::Zero(2, 2), s};
  CHECK(lambda_min(deficient, 1.0) <= 1e-10);
}

TEST_CASE("coupled-oscillator lambda against the spectral bound at t = 50") {
  const KroneckerModel osc = oracle::zoo(ZooName::coupled_osc, 4);
  const double lam = lambda_min_underlying(osc, 50.0);
  const double s = std::sin(M_PI / 5.0);
  const double cj = (5.0 / M_PI) / s;
  CHECK(lam >= 2.0 / 5.0 * 50.0 * s * s - cj);
}

TEST_CASE("chain lambda asymptotics: t/4 at large t, t^3/12 at small t") {
  const KroneckerModel chain = oracle::zoo(ZooName::kolmogorov);
  const double lam_large = lambda_min_underlying(chain, 1e3);
  CHECK(std::abs(lam_large / (1e3 / 4.0) - 1.0) < 0.01);
  const double lam_small = lambda_min_underlying(chain, 1e-3);
  CHECK(std::abs(lam_small / (1e-9 / 12.0) - 1.0) < 0.01);
}

TEST_CASE("quad escalation resolves the damped chain at large t") {
  const KroneckerModel damped = oracle::zoo(ZooName::damped_osc, 3);
  const double lam = lambda_min_underlying(damped, 60.0);
  CHECK(lam > 0.0);
  // sanity: growth between t = 50 and t = 60 at roughly the slow rate
  const double lam50 = lambda_min_underlying(damped, 50.0);
  CHECK(lam > lam50);
  const double rate = std::log(lam / lam50) / 10.0;
  CHECK(rate > 0.2);
  CHECK(rate < 0.9);
}

TEST_CASE("kinetic-fp closed form agrees with the generic Gramian path") {
  // The generic path computes Gbar_t in doubles, so its lambda_min carries an
  // eps * cond(Gbar_t) error floor; compare only where that floor is small,
  // and loosely in the stiff corner.
  for (double gamma : {0.5, 1.0, 2.1, 3.0}) {
    const KroneckerModel fp = oracle::zoo(ZooName::kinetic_fp, 2, gamma);
    KroneckerModel generic = fp;
    generic.zoo_name.clear();  // force the Van Loan + Jacobi path
    for (double t : {0.5, 2.0}) {
      CAPTURE(gamma);
      CAPTURE(t);
      const double closed = kfp_lambda_min(gamma, t);
      const double direct = lambda_min_underlying(generic, t);
      CHECK(oracle::rel_err(closed, direct) < 1e-9);
    }
  }
  for (double gamma : {0.5, 1.0}) {
    KroneckerModel generic = oracle::zoo(ZooName::kinetic_fp, 2, gamma);
    generic.zoo_name.clear();
    CHECK(oracle::rel_err(kfp_lambda_min(gamma, 5.0), lambda_min_underlying(generic, 5.0)) <
          1e-9);
  }
  {
    KroneckerModel generic = oracle::zoo(ZooName::kinetic_fp, 2, 3.0);
    generic.zoo_name.clear();
    CHECK(oracle::rel_err(kfp_lambda_min(3.0, 5.0), lambda_min_underlying(generic, 5.0)) <
          1e-4);
  }
  CHECK_THROWS_AS(kfp_eigenvalues(2.0), InputError);
  const auto [l1, l2] = kfp_eigenvalues(4.0);
  CHECK(l1.real() == doctest::Approx(-2.0 + std::sqrt(3.0)));
  CHECK(l2.real() == doctest::Approx(-2.0 - std::sqrt(3.0)));
}

TEST_CASE("backward ODE residual") {
  const LinearModel flat{Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
  CHECK(check_backward_ode(flat, 0.5, 1.0, 1e-4) < 1e-8);
  const LinearModel chain = oracle::zoo(ZooName::kolmogorov).underlying();
  CHECK(check_backward_ode(chain, 0.5, 1.0, 1e-4) < 1e-6);
  const LinearModel fp = oracle::zoo(ZooName::kinetic_fp, 2, 5.0).underlying();
  CHECK(check_backward_ode(fp, 0.5, 1.0, 1e-4) < 1e-6);
  CHECK_THROWS_AS(check_backward_ode(chain, 0.5, 1.0, 0.6), InputError);
}

TEST_CASE("eigenvalue chain lambda(t) >= lambda2(t)/t >= flow bound") {
  SUBCASE("flat model closed form (2, 1, 0.5)") {
    const LinearModel flat{Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
    const auto c = check_g2_bound(flat, 1.0, 2.0);
    CHECK(c[0] == doctest::Approx(2.0));
    CHECK(c[1] == doctest::Approx(1.0));
    CHECK(c[2] == doctest::Approx(0.5));
  }
  SUBCASE("zoo instances") {
    const LinearModel damped = oracle::zoo(ZooName::damped_osc, 3).underlying();
    const auto c1 = check_g2_bound(damped, 2.0, 4.0);
    CHECK(c1[0] >= c1[1] - 1e-9);
    CHECK(c1[1] >= c1[2] - 1e-9);
    const LinearModel chain = oracle::zoo(ZooName::kolmogorov).underlying();
    const auto c2 = check_g2_bound(chain, 0.5, 1.0);
    CHECK(c2[0] >= c2[1] - 1e-9);
    CHECK(c2[1] >= c2[2] - 1e-9);
  }
}

TEST_SUITE_END();
