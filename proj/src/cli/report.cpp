// Copyright 2026 The extmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extmap/cli/report.hpp"

#include <iomanip>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

namespace extmap::cli {

using nlohmann::json;

namespace {

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

bool is_complex_pair(const json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

std::string scalar_text(const json& j) {
  if (is_complex_pair(j)) {
    std::ostringstream os;
    os << j[0].dump() << (j[1].get<double>() < 0 ? "" : "+") << j[1].dump() << "i";
    return os.str();
  }
  return j.is_string() ? j.get<std::string>() : j.dump();
}

bool is_flat(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (!(e.is_primitive() || is_complex_pair(e))) return false;
  return true;
}

void render(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render(value, indent + 2, os);
    } else if (value.is_array() && !is_flat(value)) {
      os << pad << key << ":\n";
      for (const auto& row : value) {
        if (row.is_object()) {
          render(row, indent + 4, os);
          continue;
        }
        os << pad << "  ";
        for (const auto& e : row) os << " " << scalar_text(e);
        os << "\n";
      }
    } else if (value.is_array()) {
      os << pad << key << ":";
      for (const auto& e : value) os << " " << scalar_text(e);
      os << "\n";
    } else {
      os << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_pair(v(i)));
  return out;
}

json to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const AnnihilationReport& r) {
  return {{"kernel_dim", r.kernel_dim},
          {"samples", r.samples},
          {"kernel_diagonal", r.kernel_diagonal},
          {"kernel_cross", r.kernel_cross},
          {"eigenmatrix_kernel", r.eigenmatrix_kernel},
          {"support_projection", r.support_projection},
          {"passed", r.passed}};
}

json to_json(const TraceFunctionalReport& r) {
  return {{"samples", r.samples},
          {"plus_functional", r.plus_functional},
          {"minus_functional", r.minus_functional},
          {"plus_normalised", r.plus_normalised},
          {"minus_normalised", r.minus_normalised},
          {"passed", r.passed}};
}

json to_json(const OmegaVariantReport& r) {
  json out = {{"variant", std::string(to_string(r.variant))},
              {"sector_dim", r.sector_dim},
              {"choi_hermiticity_residual", r.hermiticity_residual},
              {"choi_hermitian", r.hermitian}};
  out["choi_min_eigenvalue"] = r.min_eigenvalue ? json(*r.min_eigenvalue) : json(nullptr);
  out["completely_positive"] = r.completely_positive ? json(*r.completely_positive) : json(nullptr);
  return out;
}

json to_json(const DimensionReport& r) {
  return {{"extension_dim", r.extension_dim},
          {"dilation_dim", r.dilation_dim},
          {"n_squared_bound", r.n_squared_bound},
          {"l_plus", r.l_plus},
          {"l_minus", r.l_minus}};
}

json to_json(const WitnessCertificate& c) {
  json contradictions = json::array();
  for (const auto& e : c.contradictions) {
    contradictions.push_back(
        {{"weight", e.weight}, {"eigenvector", to_json(e.eigenvector)}, {"reduced_mismatch", e.reduced_mismatch}});
  }
  return {{"reduced_state", to_json(c.reduced_state)},
          {"eigenweights", to_json(c.eigenweights)},
          {"purity", c.purity},
          {"schmidt_rank", c.schmidt_rank},
          {"verdict", std::string(to_string(c.verdict))},
          {"contradictions", std::move(contradictions)},
          {"explanation", c.explanation}};
}

json map_document(const LinearMap& map) {
  return {{"kind", "superop_b"}, {"dim", map.dim()}, {"data", to_json(map.choi())}};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string render_text(const json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

}  // namespace extmap::cli
