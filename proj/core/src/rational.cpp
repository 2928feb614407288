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

#include "gramlab/rational.hpp"

#include <algorithm>
#include <sstream>

namespace gramlab {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols != y.rows) throw DimensionError("RationalMatrix: product dimension mismatch");
  RationalMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

RationalMatrix operator+(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw DimensionError("RationalMatrix: sum dimension mismatch");
  RationalMatrix z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

bool is_psd_rational(const RationalMatrix& s) {
  if (!s.is_symmetric()) throw SymmetryError("is_psd_rational: symmetric input required");
  const int n = s.rows;
  RationalMatrix a = s;
  // LDL^T without pivoting; PSD iff every pivot is >= 0 and zero pivots have
  // zero columns below them.
  for (int k = 0; k < n; ++k) {
    const Rational d = a(k, k);
    if (d < 0) return false;
    if (d == 0) {
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) return false;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      const Rational f = a(i, k) / d;
      for (int j = k + 1; j <= i; ++j) {
        a(i, j) -= f * a(k, j);
        a(j, i) = a(i, j);
      }
    }
  }
  return true;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    throw DimensionError("MultiPoly: variable-count mismatch (" + std::to_string(nvars_) +
                         " vs " + std::to_string(o.nvars_) + ")");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  Rational cc = c;
  cc.canonicalize();  // guard against unreduced mpq_class(int, int) input
  if (cc != 0) p.terms_[Exponents(static_cast<size_t>(nvars), 0u)] = cc;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw DimensionError("MultiPoly::variable: index out of range");
  MultiPoly p(nvars);
  Exponents e(static_cast<size_t>(nvars), 0u);
  e[static_cast<size_t>(i)] = 1;
  p.terms_[e] = 1;
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars)
    throw DimensionError("MultiPoly::monomial: exponent length mismatch");
  MultiPoly p(nvars);
  Rational cc = c;
  cc.canonicalize();
  if (cc != 0) p.terms_[e] = cc;
  return p;
}

int MultiPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (unsigned v : e) s += static_cast<int>(v);
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(nvars_);
  Exponents e(static_cast<size_t>(nvars_));
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::partial(int i) const {
  if (i < 0 || i >= nvars_) throw DimensionError("MultiPoly::partial: index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    const unsigned k = e[static_cast<size_t>(i)];
    if (k == 0) continue;
    Exponents d = e;
    d[static_cast<size_t>(i)] = k - 1;
    r.add_term(d, c * static_cast<long>(k));
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw DimensionError("MultiPoly::eval: point dimension mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
    }
    total += term;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) {
        os << "*x" << i + 1;
        if (e[i] > 1) os << "^" << e[i];
      }
    }
  }
  return os.str();
}

}  // namespace gramlab
