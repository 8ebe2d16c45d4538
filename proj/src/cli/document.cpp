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

#include "extmap/cli/document.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace extmap::cli {

namespace {

using nlohmann::json;
using Index = Eigen::Index;

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(child(path, key), "missing required field");
  return *it;
}

double read_number(const json& node, const std::string& path) {
  if (!node.is_number()) throw DocumentError(path, "expected a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw DocumentError(path, "number is not finite");
  return v;
}

std::size_t read_positive(const json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<long long>() <= 0) {
    throw DocumentError(path, "expected a positive integer");
  }
  return node.get<std::size_t>();
}

Complex read_complex(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) throw DocumentError(path, "complex scalar must be [re, im]");
  return {read_number(node[0], child(path, std::size_t{0})), read_number(node[1], child(path, std::size_t{1}))};
}

ComplexVector read_vector(const json& node, const std::string& path, std::size_t length) {
  if (!node.is_array()) throw DocumentError(path, "expected an array of complex scalars");
  if (node.size() != length) {
    std::ostringstream os;
    os << "expected " << length << " entries, got " << node.size();
    throw DocumentError(path, os.str());
  }
  ComplexVector v(static_cast<Index>(length));
  for (std::size_t i = 0; i < length; ++i) v(static_cast<Index>(i)) = read_complex(node[i], child(path, i));
  return v;
}

ComplexMatrix read_matrix(const json& node, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!node.is_array()) throw DocumentError(path, "expected a matrix (array of rows)");
  if (node.size() != rows) {
    std::ostringstream os;
    os << "expected " << rows << " rows, got " << node.size();
    throw DocumentError(path, os.str());
  }
  ComplexMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const ComplexVector row = read_vector(node[r], child(path, r), cols);
    m.row(static_cast<Index>(r)) = row.transpose();
  }
  return m;
}

DocumentKind read_kind(const json& node, const std::string& path) {
  if (!node.is_string()) throw DocumentError(path, "kind must be a string");
  const auto s = node.get<std::string>();
  if (s == "kraus") return DocumentKind::Kraus;
  if (s == "choi") return DocumentKind::Choi;
  if (s == "superop_a") return DocumentKind::SuperopA;
  if (s == "superop_b") return DocumentKind::SuperopB;
  if (s == "joint_dynamics") return DocumentKind::JointDynamics;
  throw DocumentError(path, "unknown kind '" + s + "'");
}

void read_common(const json& obj, const std::string& path, MapSpecDocument& doc) {
  if (auto it = obj.find("seed"); it != obj.end()) {
    if (!it->is_number_unsigned()) throw DocumentError(child(path, "seed"), "seed must be a non-negative integer");
    doc.seed = it->get<std::uint64_t>();
  }
  if (auto it = obj.find("tolerance"); it != obj.end()) {
    const std::string tpath = child(path, "tolerance");
    if (!it->is_object()) throw DocumentError(tpath, "tolerance must be an object");
    if (auto z = it->find("zero_eig_rel"); z != it->end()) doc.zero_eig_rel = read_number(*z, child(tpath, "zero_eig_rel"));
    if (auto r = it->find("residual_abs"); r != it->end()) doc.residual_abs = read_number(*r, child(tpath, "residual_abs"));
  }
}

void read_map_kind(const json& obj, const std::string& path, MapSpecDocument& doc) {
  doc.dim = read_positive(require(obj, path, "dim"), child(path, "dim"));
  const json& data = require(obj, path, "data");
  const std::string dpath = child(path, "data");
  const std::size_t n = doc.dim;

  if (doc.kind == DocumentKind::Kraus) {
    if (!data.is_array() || data.empty()) throw DocumentError(dpath, "expected a non-empty list of matrices");
    KrausSet kraus{n, {}, {}};
    for (std::size_t i = 0; i < data.size(); ++i) kraus.operators.push_back(read_matrix(data[i], child(dpath, i), n, n));
    if (auto it = obj.find("weights"); it != obj.end()) {
      const std::string wpath = child(path, "weights");
      if (!it->is_array() || it->size() != kraus.size()) throw DocumentError(wpath, "need one weight per operator");
      for (std::size_t i = 0; i < it->size(); ++i) {
        const double w = read_number((*it)[i], child(wpath, i));
        if (!(w > 0.0)) throw DocumentError(child(wpath, i), "weights must be positive");
        kraus.weights.push_back(w);
      }
    }
    if (auto it = obj.find("signs"); it != obj.end()) {
      const std::string spath = child(path, "signs");
      if (!it->is_array() || it->size() != kraus.size()) throw DocumentError(spath, "need one sign per operator");
      for (std::size_t i = 0; i < it->size(); ++i) {
        const json& s = (*it)[i];
        if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
          throw DocumentError(child(spath, i), "sign must be 1 or -1");
        }
        doc.signs.push_back(s.get<int>());
      }
    }
    doc.map = kraus_to_map(kraus, doc.signs);
    doc.kraus = std::move(kraus);
    return;
  }

  const ComplexMatrix m = read_matrix(data, dpath, n * n, n * n);
  switch (doc.kind) {
    case DocumentKind::Choi: doc.map = LinearMap::from_choi(b_from_jamiolkowski(m, n)); break;
    case DocumentKind::SuperopA: doc.map = from_a_form(m); break;
    default: doc.map = LinearMap::from_choi(m); break;
  }
}

void read_joint(const json& obj, const std::string& path, MapSpecDocument& doc) {
  const json& dims = require(obj, path, "dims");
  const std::string dpath = child(path, "dims");
  if (!dims.is_array() || dims.size() != 2) throw DocumentError(dpath, "dims must be [N_s, N_e]");
  doc.system_dim = read_positive(dims[0], child(dpath, std::size_t{0}));
  doc.environment_dim = read_positive(dims[1], child(dpath, std::size_t{1}));
  const std::size_t total = doc.system_dim * doc.environment_dim;
  doc.state = read_vector(require(obj, path, "state"), child(path, "state"), total);
  if (auto it = obj.find("unitary"); it != obj.end()) {
    doc.unitary = read_matrix(*it, child(path, "unitary"), total, total);
  }
}

MapSpecDocument read_document(const json& obj, const std::string& path) {
  if (!obj.is_object()) throw DocumentError(path.empty() ? "/" : path, "document must be a JSON object");
  if (obj.find("kind") == obj.end()) {
    if (auto it = obj.find("map"); it != obj.end()) return read_document(*it, child(path, "map"));
  }
  MapSpecDocument doc;
  doc.kind = read_kind(require(obj, path, "kind"), child(path, "kind"));
  read_common(obj, path, doc);
  if (doc.kind == DocumentKind::JointDynamics) {
    read_joint(obj, path, doc);
  } else {
    read_map_kind(obj, path, doc);
  }
  return doc;
}

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Kraus: return "kraus";
    case DocumentKind::Choi: return "choi";
    case DocumentKind::SuperopA: return "superop_a";
    case DocumentKind::SuperopB: return "superop_b";
    case DocumentKind::JointDynamics: return "joint_dynamics";
  }
  return "unknown";
}

MapSpecDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("/", std::string("invalid JSON: ") + e.what());
  }
  return read_document(root, "");
}

}  // namespace extmap::cli
