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

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gramlab/errors.hpp"

namespace gramlab {

using Rational = mpq_class;

/// Dense matrix over the rationals. Small and exact; no attempt at speed.
struct RationalMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

  Rational& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static RationalMatrix identity(int n);
  RationalMatrix transpose() const;
  bool is_symmetric() const;
};

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y);

/// Exact LDL^T positive-semidefiniteness test. A zero pivot is accepted only
/// when its entire remaining column vanishes.
bool is_psd_rational(const RationalMatrix& s);

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(int nvars, const Exponents& e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  bool operator==(const MultiPoly& o) const;

  MultiPoly partial(int i) const;
  Rational eval(const std::vector<Rational>& x) const;
  std::string to_string() const;

  void add_term(const Exponents& e, const Rational& c);

 private:
  void check_compatible(const MultiPoly& o) const;
  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace gramlab
