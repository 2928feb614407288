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

#include <random>

#include "gramlab/gamma_calc.hpp"

using namespace gramlab;

namespace {

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();  // mpq_class(int, int) leaves the fraction unreduced
  return q;
}

RationalMatrix random_rational_matrix(std::mt19937_64& rng, int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = small_rational(rng);
  return m;
}

RationalMatrix random_rational_sym(std::mt19937_64& rng, int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m(i, j) = small_rational(rng);
      m(j, i) = m(i, j);
    }
  return m;
}

RationalMatrix random_rational_psd(std::mt19937_64& rng, int n) {
  const RationalMatrix b = random_rational_matrix(rng, n);
  return b * b.transpose();
}

MultiPoly random_poly(std::mt19937_64& rng, int n, int max_deg, int terms) {
  MultiPoly p(n);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exponents e(static_cast<size_t>(n), 0u);
    int budget = deg(rng);
    for (int i = 0; i < n && budget > 0; ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      const int d = part(rng);
      e[static_cast<size_t>(i)] = static_cast<unsigned>(d);
      budget -= d;
    }
    p = p + MultiPoly::monomial(n, e, small_rational(rng));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::vector<Rational> x(static_cast<size_t>(n));
  for (auto& v : x) v = small_rational(rng);
  return x;
}

RationalModel chain2_rational() {
  RationalMatrix a(2, 2), q(2, 2);
  a(1, 0) = 1;
  q(0, 0) = 1;
  return make_rational_model(a, q);
}

}  // namespace

TEST_SUITE_BEGIN("gamma-calc");

TEST_CASE("MultiPoly arithmetic basics") {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  const MultiPoly p = (x1 + x2) * (x1 - x2);
  const MultiPoly want = x1 * x1 - x2 * x2;
  CHECK(p == want);
  CHECK(p.partial(0) == x1 * Rational(2));
  CHECK((p - p).is_zero());
  CHECK(p.eval({Rational(2), Rational(1)}) == Rational(3));
  CHECK_THROWS_AS(x1 + MultiPoly::variable(3, 0), DimensionError);
  // no zero coefficients survive cancellation
  const MultiPoly cancelled = p + (x2 * x2);
  for (const auto& [e, c] : cancelled.terms()) {
    (void)e;
    CHECK(c != 0);
  }
}

TEST_CASE("generator on the two-block chain and the flat Laplacian") {
  const RationalModel chain = chain2_rational();
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  CHECK(apply_generator(chain, MultiPoly::constant(2, 1)).is_zero());
  CHECK(apply_generator(chain, x2) == x1);  // drift moves coordinate 1 into 2

  RationalMatrix a0(2, 2), q2(2, 2);
  q2(0, 0) = 2;
  q2(1, 1) = 2;
  const RationalModel flat = make_rational_model(a0, q2);  // sigma = sqrt(2) I
  CHECK(apply_generator(flat, x1 * x1) == MultiPoly::constant(2, 2));
}

TEST_CASE("gamma_g on printed instances") {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  const RationalMatrix id = RationalMatrix::identity(2);
  CHECK(gamma_g(id, x1, x2).is_zero());
  CHECK(gamma_g(id, x1 + x2, x1 + x2) == MultiPoly::constant(2, 2));
  // 6 * Gbar_1 of the chain = [[6,-3],[-3,2]]; the cross entry gives -3
  RationalMatrix g6(2, 2);
  g6(0, 0) = 6;
  g6(0, 1) = -3;
  g6(1, 0) = -3;
  g6(1, 1) = 2;
  CHECK(gamma_g(g6, x1, x2) == MultiPoly::constant(2, -3));
}

TEST_CASE("gamma2 definition equals formula on pinned instances") {
  const RationalModel chain = chain2_rational();
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  const RationalMatrix id = RationalMatrix::identity(2);
  const MultiPoly by_def = gamma2_by_definition(chain, id, x2 * x2);
  const MultiPoly by_formula = gamma2_by_formula(chain, id, x2 * x2);
  CHECK(by_def == by_formula);

  // flat model, f = x1^2: pure Hessian term, Gamma_2 = 4
  RationalMatrix a0(2, 2), q2(2, 2);
  q2(0, 0) = 2;
  q2(1, 1) = 2;
  const RationalModel flat = make_rational_model(a0, q2);
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly g2 = gamma2_by_definition(flat, id, x1 * x1);
  CHECK(g2 == MultiPoly::constant(2, 4));
  CHECK(gamma2_by_formula(flat, id, x1 * x1) == g2);
  CHECK(gamma2_by_definition(flat, id, MultiPoly::constant(2, 5)).is_zero());
}

TEST_CASE("second-order identity as an exact polynomial identity, random sweep") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const RationalModel m =
        make_rational_model(random_rational_matrix(rng, n), random_rational_psd(rng, n));
    const RationalMatrix g = random_rational_sym(rng, n);
    const MultiPoly f = random_poly(rng, n, 4, 5);
    const MultiPoly lhs = gamma2_by_definition(m, g, f);
    const MultiPoly rhs = gamma2_by_formula(m, g, f);
    CAPTURE(trial);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("PSD remainder is pointwise nonnegative") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const RationalModel m =
        make_rational_model(random_rational_matrix(rng, n), random_rational_psd(rng, n));
    const RationalMatrix g = random_rational_psd(rng, n);
    REQUIRE(is_psd_rational(g));
    const MultiPoly f = random_poly(rng, n, 3, 4);
    // identity rearranged: Gamma_2 + Gamma^{AG} - remainder = 0 exactly
    const MultiPoly residual = gamma2_by_definition(m, g, f) + gamma_g(m.a * g, f) -
                               gamma2_remainder(m, g, f);
    REQUIRE(residual.is_zero());
    const MultiPoly remainder = gamma2_remainder(m, g, f);
    const MultiPoly gamma_f = gamma_g(g, f);
    for (int pt = 0; pt < 100; ++pt) {
      const auto x = random_point(rng, n);
      CHECK(remainder.eval(x) >= 0);
      CHECK(gamma_f.eval(x) >= 0);
    }
  }
}

TEST_CASE("is_psd_rational classifies definite, semidefinite and indefinite") {
  RationalMatrix pos = RationalMatrix::identity(2);
  CHECK(is_psd_rational(pos));
  RationalMatrix semi(2, 2);
  semi(0, 0) = 1;  // rank one
  CHECK(is_psd_rational(semi));
  RationalMatrix indef(2, 2);
  indef(0, 0) = 1;
  indef(0, 1) = 2;
  indef(1, 0) = 2;
  indef(1, 1) = 1;
  CHECK_FALSE(is_psd_rational(indef));
  RationalMatrix semi2(2, 2);  // zero diagonal with nonzero off-diagonal
  semi2(0, 1) = 1;
  semi2(1, 0) = 1;
  CHECK_FALSE(is_psd_rational(semi2));
}

TEST_SUITE_END();
