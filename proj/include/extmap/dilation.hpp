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

#include <cstddef>
#include <cstdint>

#include "extmap/map_repr.hpp"

namespace extmap {

/// Unitary u on system (x) ancilla with rho -> Tr_anc[u (rho (x) |e0><e0|) u^dag]
/// reproducing a CPTP map. The system factor comes first and e0 is the first
/// ancilla basis vector.
struct UnitaryDilation {
  std::size_t system_dim = 0;
  std::size_t ancilla_dim = 0;
  ComplexMatrix unitary;
  std::size_t ancilla_ref_index = 0;

  double unitarity_residual() const;
  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

/// Stacks the (weight-folded) Kraus operators into an isometry and completes
/// it to a unitary by Gram-Schmidt over the standard basis in index order.
/// Throws NotCompleteKraus if sum w_i M_i^dag M_i differs from I.
UnitaryDilation kraus_to_unitary(const KrausSet& kraus, const ToleranceConfig& tol = {});

/// Checks check_tp and check_cp first; throws NotTracePreserving or
/// NotCompletelyPositive (message carries the minimum Choi eigenvalue).
UnitaryDilation dilate(const LinearMap& map, const ToleranceConfig& tol = {});

struct DilationRoundTrip {
  std::size_t samples = 0;
  double max_residual = 0.0;
  double unitarity_residual = 0.0;
  bool passed = false;
};

DilationRoundTrip dilation_round_trip(const UnitaryDilation& dil, const LinearMap& map, std::size_t samples,
                                      std::uint64_t seed, const ToleranceConfig& tol = {});

}  // namespace extmap
