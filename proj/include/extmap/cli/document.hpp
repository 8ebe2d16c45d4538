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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extmap/linalg.hpp"
#include "extmap/map_repr.hpp"

namespace extmap::cli {

/// Malformed input document; `path` is a JSON pointer to the offending node.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class DocumentKind { Kraus, Choi, SuperopA, SuperopB, JointDynamics };

std::string_view to_string(DocumentKind kind);

/// Parsed map or joint-dynamics specification.
///
/// Map kinds carry `dim` and a `data` field: a list of dim x dim matrices for
/// "kraus" (optional "weights", "signs"), or a single dim^2 x dim^2 matrix for
/// "choi" (Choi-Jamiolkowski, input factor first), "superop_a" (acts on
/// row-major vec(rho)) and "superop_b" (the B-form). "joint_dynamics" carries
/// "dims": [N_s, N_e], "state" and optionally "unitary". Complex scalars are
/// exactly [re, im]. A document without "kind" but with a "map" member is
/// read from that member, so extract reports can be fed back in.
struct MapSpecDocument {
  DocumentKind kind = DocumentKind::SuperopB;
  std::size_t dim = 0;
  std::optional<LinearMap> map;
  std::optional<KrausSet> kraus;
  std::vector<int> signs;
  std::size_t system_dim = 0;
  std::size_t environment_dim = 0;
  std::optional<ComplexVector> state;
  std::optional<ComplexMatrix> unitary;
  std::optional<std::uint64_t> seed;
  std::optional<double> zero_eig_rel;
  std::optional<double> residual_abs;
};

/// Throws DocumentError for syntax, schema or shape problems.
MapSpecDocument parse_document(const std::string& text);

}  // namespace extmap::cli
