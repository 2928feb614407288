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
#include "gramlab/model.hpp"
#include "test_support.hpp"

using namespace gramlab;

TEST_SUITE_BEGIN("model");

TEST_CASE("kalman_matrix stacking") {
  SUBCASE("A = 0, sigma = I gives [I 0]") {
    const LinearModel m{Matrix::Zero(2, 2), Matrix::Identity(2, 2)};
    Matrix want(2, 4);
    want << 1, 0, 0, 0, 0, 1, 0, 0;
    CHECK((kalman_matrix(m) - want).norm() == 0.0);
  }
  SUBCASE("two-block chain underlying") {
    const auto km = oracle::zoo(ZooName::kolmogorov);
    Matrix want(2, 4);
    want << 1, 0, 0, 0, 0, 0, 1, 0;
    CHECK((kalman_matrix(km.underlying()) - want).norm() == 0.0);
  }
  SUBCASE("friction underlying at gamma = 4") {
    const auto km = oracle::zoo(ZooName::kinetic_fp, 2, 4.0);
    Matrix want(2, 4);
    want << 0, 0, 0, 2, 0, 2, 0, -8;
    CHECK((kalman_matrix(km.underlying()) - want).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("check_kalman across the zoo and degenerate cases") {
  for (const auto& km : oracle::zoo_all()) {
    CAPTURE(km.zoo_name);
    CHECK(check_kalman(km));
  }
  CHECK(check_kalman(oracle::zoo(ZooName::damped_osc, 5)));
  const LinearModel dead{Matrix::Zero(2, 2), Matrix::Zero(2, 2)};
  CHECK_FALSE(check_kalman(dead));
}

TEST_CASE("rank condition is k-independent under the Kronecker lift") {
  for (const auto& km : oracle::zoo_all()) {
    KroneckerModel with_spec = km;
    with_spec.q_spectrum = Spectrum::explicit_list({1.0, 0.5, 0.25});
    const bool base = check_kalman(km);
    for (int k = 1; k <= 3; ++k)
      CHECK(check_kalman(lift_kronecker(with_spec, k)) == base);
  }
}

TEST_CASE("Kalman success is equivalent to Cholesky of G_t succeeding") {
  auto psd_ok = [](const LinearModel& m, double t) {
    try {
      cholesky_spd(gramian_gt(m, t), 1e-12);
      return true;
    } catch (const NotPositiveDefiniteError&) {
      return false;
    }
  };
  for (const auto& km : oracle::zoo_all()) {
    const LinearModel u = km.underlying();
    for (double t : {0.1, 1.0}) {
      CAPTURE(km.zoo_name);
      CAPTURE(t);
      CHECK(psd_ok(u, t) == check_kalman(u));
    }
  }
  // a rank-deficient pair: noise never reaches the second coordinate
  Matrix a = Matrix::Zero(2, 2);
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = 1.0;
  const LinearModel deficient{a, s};
  CHECK_FALSE(check_kalman(deficient));
  for (double t : {0.1, 1.0}) CHECK_FALSE(psd_ok(deficient, t));
}

TEST_CASE("lift_kronecker block structure") {
  SUBCASE("scalar OU") {
    KroneckerModel km;
    km.j = 1;
    km.underlying_a = Matrix::Constant(1, 1, -1.0);
    km.underlying_sigma = Matrix::Constant(1, 1, 1.0);
    km.q_spectrum = Spectrum::explicit_list({1.0});
    const LinearModel m = lift_kronecker(km, 1);
    CHECK(m.a(0, 0) == -1.0);
    CHECK(m.sigma(0, 0) == 1.0);
  }
  SUBCASE("two-block chain with two modes has I_2 in the lower-left block") {
    KroneckerModel km = oracle::zoo(ZooName::kolmogorov);
    km.q_spectrum = Spectrum::explicit_list({1.0, 1.0});
    const LinearModel m = lift_kronecker(km, 2);
    REQUIRE(m.n() == 4);
    CHECK((m.a.block(2, 0, 2, 2) - Matrix::Identity(2, 2)).norm() == 0.0);
    CHECK(m.a.block(0, 0, 2, 2).norm() == 0.0);
    CHECK(m.a.block(0, 2, 2, 2).norm() == 0.0);
    CHECK(m.a.block(2, 2, 2, 2).norm() == 0.0);
  }
  SUBCASE("friction model with alpha = (2), k = 1") {
    KroneckerModel km = oracle::zoo(ZooName::kinetic_fp, 2, 3.0);
    km.q_spectrum = Spectrum::explicit_list({2.0});
    const LinearModel m = lift_kronecker(km, 1);
    Matrix want_a(2, 2);
    want_a << 0, 1, -1, -3;
    CHECK((m.a - want_a).norm() == 0.0);
    CHECK(m.sigma(0, 0) == 0.0);
    CHECK(m.sigma(1, 1) == doctest::Approx(std::sqrt(2.0 * 3.0)));
  }
  SUBCASE("k beyond the explicit spectrum is rejected") {
    KroneckerModel km = oracle::zoo(ZooName::kolmogorov);
    CHECK_THROWS_AS(lift_kronecker(km, 2), InputError);
  }
}

TEST_CASE("zoo_build matrices match the printed examples") {
  const auto kol = oracle::zoo(ZooName::kolmogorov);
  Matrix a2(2, 2), s2(2, 2);
  a2 << 0, 0, 1, 0;
  s2 << 1, 0, 0, 0;
  CHECK((kol.underlying_a - a2).norm() == 0.0);
  CHECK((kol.underlying_sigma - s2).norm() == 0.0);

  const auto osc = oracle::zoo(ZooName::coupled_osc, 3);
  Matrix a3(3, 3);
  a3 << 0, -1, 0, 1, 0, -1, 0, 1, 0;
  CHECK((osc.underlying_a - a3).norm() == 0.0);
  CHECK(osc.underlying_sigma(0, 0) == 1.0);
  CHECK(osc.underlying_sigma.norm() == 1.0);

  const auto damped = oracle::zoo(ZooName::damped_osc, 3);
  Matrix a3d = a3;
  a3d(0, 0) -= 1.0;
  CHECK((damped.underlying_a - a3d).norm() == 0.0);
}

TEST_CASE("zoo parameter validation") {
  CHECK_THROWS_AS(zoo_build({ZooName::damped_osc, 2, 0.0}), InputError);
  CHECK_THROWS_AS(zoo_build({ZooName::kinetic_fp, 2, 0.0}), InputError);
  CHECK_THROWS_AS(zoo_build({ZooName::kinetic_fp, 2, 2.0}), InputError);
  CHECK(kinetic_fp_near_critical(2.0005));
  CHECK_FALSE(kinetic_fp_near_critical(3.0));
}

TEST_CASE("model files round-trip through JSON") {
  for (const auto& km : oracle::zoo_all()) {
    KroneckerModel with_spec = km;
    with_spec.q_spectrum = Spectrum::power(2.0);
    const KroneckerModel back = model_from_json_string(model_to_json_string(with_spec));
    CHECK(back.j == km.j);
    CHECK(back.zoo_name == km.zoo_name);
    CHECK((back.underlying_a - km.underlying_a).norm() == 0.0);
    CHECK((back.underlying_sigma - km.underlying_sigma).norm() == 0.0);
    CHECK(back.q_spectrum.kind == Spectrum::Kind::power);
    CHECK(back.q_spectrum.p == 2.0);
  }
  // explicit matrices
  const std::string text = R"({"A": [[0,0],[1,0]], "sigma": [[1,0],[0,0]],
                               "spectrum": {"kind": "explicit", "alphas": [1.0, 0.25]}})";
  const KroneckerModel km = model_from_json_string(text);
  CHECK(km.j == 2);
  CHECK(km.q_spectrum.alphas.size() == 2);
  CHECK_THROWS_AS(model_from_json_string("{\"bogus\": 1}"), InputError);
  CHECK_THROWS_AS(model_from_json_string("not json"), InputError);
}

TEST_CASE("spectrum invariants") {
  CHECK_THROWS_AS(Spectrum::explicit_list({1.0, -0.5}), InputError);
  CHECK_THROWS_AS(Spectrum::explicit_list({0.5, 1.0}), InputError);
  CHECK_THROWS_AS(Spectrum::power(1.0), InputError);
  const Spectrum s = Spectrum::power(2.0);
  CHECK(s.alpha(10) == doctest::Approx(0.01));
  const Spectrum pl = Spectrum::polylog(2.0);
  CHECK(pl.alpha(1) == doctest::Approx(1.0 / std::pow(std::log(2.0), 2.0)));
}

TEST_SUITE_END();
