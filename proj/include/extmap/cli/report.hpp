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

#include <string>

#include <json.hpp>

#include "extmap/cp_split.hpp"
#include "extmap/dilation.hpp"
#include "extmap/entangled.hpp"
#include "extmap/extension.hpp"

namespace extmap::cli {

inline constexpr const char* kToolVersion = "extmap 0.1.0";

nlohmann::json to_json(const ComplexMatrix& m);
nlohmann::json to_json(const ComplexVector& v);
nlohmann::json to_json(const RealVector& v);

nlohmann::json to_json(const AnnihilationReport& r);
nlohmann::json to_json(const TraceFunctionalReport& r);
nlohmann::json to_json(const OmegaVariantReport& r);
nlohmann::json to_json(const DimensionReport& r);
nlohmann::json to_json(const WitnessCertificate& c);

/// Map in superop_b document form, suitable as input to the CLI again.
nlohmann::json map_document(const LinearMap& map);

/// Hex SHA-256 of the raw input bytes.
std::string sha256_hex(const std::string& bytes);

/// Indented plain-text rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace extmap::cli
