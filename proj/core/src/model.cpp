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

#include "gramlab/model.hpp"

#include <climits>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gramlab {

LinearModel make_linear_model(Matrix a, Matrix sigma) {
  require_square(a, "LinearModel.A");
  require_square(sigma, "LinearModel.sigma");
  require_finite(a, "LinearModel.A");
  require_finite(sigma, "LinearModel.sigma");
  if (a.rows() != sigma.rows())
    throw DimensionError("LinearModel: A and sigma must share the dimension n");
  return LinearModel{std::move(a), std::move(sigma)};
}

double Spectrum::alpha(long ell) const {
  if (ell < 1) throw InputError("Spectrum::alpha: index must be >= 1");
  switch (kind) {
    case Kind::explicit_list:
      if (ell > static_cast<long>(alphas.size()))
        throw InputError("Spectrum::alpha: index beyond explicit spectrum");
      return alphas[static_cast<size_t>(ell - 1)];
    case Kind::power:
      return std::pow(static_cast<double>(ell), -p);
    case Kind::polylog:
      return 1.0 / (static_cast<double>(ell) *
                    std::pow(std::log(static_cast<double>(ell) + 1.0), p));
  }
  return 0.0;
}

long Spectrum::max_modes() const {
  return kind == Kind::explicit_list ? static_cast<long>(alphas.size()) : LONG_MAX;
}

Spectrum Spectrum::explicit_list(std::vector<double> a) {
  Spectrum s;
  s.kind = Kind::explicit_list;
  s.alphas = std::move(a);
  double prev = std::numeric_limits<double>::infinity();
  for (double v : s.alphas) {
    if (!(v > 0.0)) throw InputError("Spectrum: alphas must be positive");
    if (v > prev) throw InputError("Spectrum: alphas must be nonincreasing");
    prev = v;
  }
  return s;
}

Spectrum Spectrum::power(double p) {
  if (!(p > 1.0)) throw InputError("Spectrum::power: need p > 1 for summability");
  Spectrum s;
  s.kind = Kind::power;
  s.p = p;
  return s;
}

Spectrum Spectrum::polylog(double p) {
  if (!(p > 1.0)) throw InputError("Spectrum::polylog: need p > 1 for summability");
  Spectrum s;
  s.kind = Kind::polylog;
  s.p = p;
  return s;
}

void ZooId::validate() const {
  switch (name) {
    case ZooName::kolmogorov:
      break;
    case ZooName::iterated_kolmogorov:
      if (j < 1) throw InputError("iterated-kolmogorov: need j >= 1");
      break;
    case ZooName::kinetic_fp:
      if (!(gamma > 0.0)) throw InputError("kinetic-fp: need gamma > 0");
      if (gamma == 2.0) throw InputError("kinetic-fp: gamma = 2 is excluded");
      break;
    case ZooName::coupled_osc:
      if (j < 2) throw InputError("coupled-osc: need j >= 2");
      break;
    case ZooName::damped_osc:
      // j = 2 would need the undefined constant b_{j-1} = b_1 in the Lyapunov
      // construction, so the model starts at j = 3.
      if (j < 3) throw InputError("damped-osc: need j >= 3");
      break;
  }
}

std::string zoo_name_string(ZooName name) {
  switch (name) {
    case ZooName::kolmogorov: return "kolmogorov";
    case ZooName::iterated_kolmogorov: return "iterated-kolmogorov";
    case ZooName::kinetic_fp: return "kinetic-fp";
    case ZooName::coupled_osc: return "coupled-osc";
    case ZooName::damped_osc: return "damped-osc";
  }
  return "?";
}

ZooName parse_zoo_name(const std::string& s) {
  if (s == "kolmogorov") return ZooName::kolmogorov;
  if (s == "iterated-kolmogorov") return ZooName::iterated_kolmogorov;
  if (s == "kinetic-fp") return ZooName::kinetic_fp;
  if (s == "coupled-osc") return ZooName::coupled_osc;
  if (s == "damped-osc") return ZooName::damped_osc;
  throw InputError("unknown zoo model: " + s);
}

Matrix tridiag(int j, double a, double d, double c) {
  Matrix m = Matrix::Zero(j, j);
  for (int l = 0; l < j; ++l) {
    m(l, l) = d;
    if (l > 0) m(l, l - 1) = a;
    if (l + 1 < j) m(l, l + 1) = c;
  }
  return m;
}

bool kinetic_fp_near_critical(double gamma) { return std::abs(gamma - 2.0) < 1e-3; }

KroneckerModel zoo_build(const ZooId& id) {
  id.validate();
  KroneckerModel km;
  km.zoo_name = zoo_name_string(id.name);
  km.q_spectrum = Spectrum::explicit_list({1.0});
  switch (id.name) {
    case ZooName::kolmogorov: {
      km.j = 2;
      km.underlying_a = tridiag(2, 1.0, 0.0, 0.0);
      km.underlying_sigma = Matrix::Zero(2, 2);
      km.underlying_sigma(0, 0) = 1.0;
      break;
    }
    case ZooName::iterated_kolmogorov: {
      km.j = id.j;
      km.underlying_a = tridiag(id.j, 1.0, 0.0, 0.0);
      km.underlying_sigma = Matrix::Zero(id.j, id.j);
      km.underlying_sigma(0, 0) = 1.0;
      break;
    }
    case ZooName::kinetic_fp: {
      km.j = 2;
      km.gamma = id.gamma;
      km.underlying_a = Matrix::Zero(2, 2);
      km.underlying_a(0, 1) = 1.0;
      km.underlying_a(1, 0) = -1.0;
      km.underlying_a(1, 1) = -id.gamma;
      km.underlying_sigma = Matrix::Zero(2, 2);
      km.underlying_sigma(1, 1) = std::sqrt(id.gamma);
      break;
    }
    case ZooName::coupled_osc: {
      km.j = id.j;
      km.underlying_a = tridiag(id.j, 1.0, 0.0, -1.0);
      km.underlying_sigma = Matrix::Zero(id.j, id.j);
      km.underlying_sigma(0, 0) = 1.0;
      break;
    }
    case ZooName::damped_osc: {
      km.j = id.j;
      km.underlying_a = tridiag(id.j, 1.0, 0.0, -1.0);
      km.underlying_a(0, 0) -= 1.0;
      km.underlying_sigma = Matrix::Zero(id.j, id.j);
      km.underlying_sigma(0, 0) = 1.0;
      break;
    }
  }
  return km;
}

Matrix kalman_matrix(const LinearModel& m) {
  const int n = m.n();
  Matrix k(n, n * n);
  Matrix block = m.sigma;
  for (int i = 0; i < n; ++i) {
    k.middleCols(i * n, n) = block;
    if (i + 1 < n) block = m.a * block;
  }
  return k;
}

bool check_kalman(const LinearModel& m, double tol) {
  return numerical_rank(kalman_matrix(m), tol) == m.n();
}

bool check_kalman(const KroneckerModel& km, double tol) {
  return check_kalman(km.underlying(), tol);
}

LinearModel lift_kronecker(const KroneckerModel& km, int k) {
  if (k < 1) throw InputError("lift_kronecker: need k >= 1");
  if (static_cast<long>(k) > km.q_spectrum.max_modes())
    throw InputError("lift_kronecker: k exceeds available spectrum length");
  const int j = km.j;
  const int n = j * k;
  Matrix a = Matrix::Zero(n, n);
  Matrix sigma = Matrix::Zero(n, n);
  Vector sqrt_alpha(k);
  for (int l = 0; l < k; ++l) sqrt_alpha(l) = std::sqrt(km.q_spectrum.alpha(l + 1));
  for (int bl = 0; bl < j; ++bl) {
    for (int bm = 0; bm < j; ++bm) {
      const double av = km.underlying_a(bl, bm);
      const double sv = km.underlying_sigma(bl, bm);
      for (int l = 0; l < k; ++l) {
        if (av != 0.0) a(bl * k + l, bm * k + l) = av;
        if (sv != 0.0) sigma(bl * k + l, bm * k + l) = sv * sqrt_alpha(l);
      }
    }
  }
  return LinearModel{std::move(a), std::move(sigma)};
}

namespace {

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto r = j.size();
  if (r == 0) throw InputError("model file: empty matrix");
  const auto c = j.at(0).size();
  Matrix m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (size_t i = 0; i < r; ++i) {
    if (j.at(i).size() != c) throw InputError("model file: ragged matrix rows");
    for (size_t k = 0; k < c; ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = j.at(i).at(k).get<double>();
  }
  require_finite(m, "model file matrix");
  return m;
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
  const std::string kind = j.value("kind", "explicit");
  if (kind == "power") return Spectrum::power(j.at("p").get<double>());
  if (kind == "polylog") return Spectrum::polylog(j.at("p").get<double>());
  if (kind == "explicit") {
    if (j.contains("alphas"))
      return Spectrum::explicit_list(j.at("alphas").get<std::vector<double>>());
    return Spectrum::explicit_list({1.0});
  }
  throw InputError("model file: unknown spectrum kind " + kind);
}

}  // namespace

KroneckerModel model_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("model file: JSON parse failure: ") + e.what());
  }
  KroneckerModel km;
  if (j.contains("name")) {
    ZooId id;
    id.name = parse_zoo_name(j.at("name").get<std::string>());
    id.j = j.value("j", 2);
    id.gamma = j.value("gamma", 0.0);
    km = zoo_build(id);
  } else if (j.contains("A") && j.contains("sigma")) {
    km.underlying_a = matrix_from_json(j.at("A"));
    km.underlying_sigma = matrix_from_json(j.at("sigma"));
    require_square(km.underlying_a, "model file A");
    if (km.underlying_a.rows() != km.underlying_sigma.rows() ||
        km.underlying_a.cols() != km.underlying_sigma.cols())
      throw InputError("model file: A and sigma dimensions differ");
    km.j = static_cast<int>(km.underlying_a.rows());
    km.q_spectrum = Spectrum::explicit_list({1.0});
  } else {
    throw InputError("model file: need either \"name\" or explicit \"A\"/\"sigma\"");
  }
  if (j.contains("spectrum")) km.q_spectrum = spectrum_from_json(j.at("spectrum"));
  return km;
}

std::string model_to_json_string(const KroneckerModel& km) {
  nlohmann::ordered_json j;
  if (!km.zoo_name.empty()) {
    j["name"] = km.zoo_name;
    j["j"] = km.j;
    if (km.zoo_name == "kinetic-fp") j["gamma"] = km.gamma;
  } else {
    j["A"] = matrix_to_json(km.underlying_a);
    j["sigma"] = matrix_to_json(km.underlying_sigma);
    j["j"] = km.j;
  }
  nlohmann::ordered_json spec;
  switch (km.q_spectrum.kind) {
    case Spectrum::Kind::power:
      spec["kind"] = "power";
      spec["p"] = km.q_spectrum.p;
      break;
    case Spectrum::Kind::polylog:
      spec["kind"] = "polylog";
      spec["p"] = km.q_spectrum.p;
      break;
    case Spectrum::Kind::explicit_list:
      spec["kind"] = "explicit";
      spec["alphas"] = km.q_spectrum.alphas;
      break;
  }
  spec["k"] = km.q_spectrum.kind == Spectrum::Kind::explicit_list
                  ? static_cast<long>(km.q_spectrum.alphas.size())
                  : -1;
  j["spectrum"] = spec;
  return j.dump(2);
}

KroneckerModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return model_from_json_string(ss.str());
}

void save_model_file(const KroneckerModel& km, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write model file: " + path);
  out << model_to_json_string(km) << "\n";
}

}  // namespace gramlab
