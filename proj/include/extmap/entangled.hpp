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
#include <string>
#include <vector>

#include "extmap/map_repr.hpp"

namespace extmap {

/// Unit vector on C^system (x) C^environment, system factor first.
class JointPureState {
 public:
  /// Throws DimensionMismatch on a length mismatch and InvalidArgument if the
  /// norm differs from 1 by more than residual_abs.
  JointPureState(std::size_t system_dim, std::size_t environment_dim, ComplexVector amplitudes,
                 const ToleranceConfig& tol = {});

  std::size_t system_dim() const { return system_dim_; }
  std::size_t environment_dim() const { return environment_dim_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const { return outer(amplitudes_, amplitudes_); }

 private:
  std::size_t system_dim_;
  std::size_t environment_dim_;
  ComplexVector amplitudes_;
};

enum class WitnessVerdict { PositiveExtensionImpossible, ProductState };

std::string_view to_string(WitnessVerdict v);

/// One eigencomponent lambda_i |phi_i><phi_i| of the reduced state. A positive
/// linear extension would have to send it to |Phi><Phi| (a pure state admits no
/// other convex decomposition), whose environment trace is the reduced state
/// rather than |phi_i><phi_i|; `reduced_mismatch` is that gap in Frobenius norm.
struct ContradictionEntry {
  double weight;
  ComplexVector eigenvector;
  double reduced_mismatch;
};

struct WitnessCertificate {
  ComplexMatrix reduced_state;
  RealVector eigenweights;  // descending
  double purity = 1.0;
  std::size_t schmidt_rank = 0;
  WitnessVerdict verdict = WitnessVerdict::ProductState;
  std::vector<ContradictionEntry> contradictions;  // empty for product states
  std::string explanation;
};

WitnessCertificate extension_witness(const JointPureState& phi, const ToleranceConfig& tol = {});

/// Subsystem dynamics induced by a joint unitary when the joint state is
/// written rho_s (x) rho_e + chi with the correlation chi held fixed.
struct AffineDynamics {
  LinearMap linear_part;        // sigma -> Tr_e[u (sigma (x) rho_e) u^dag]
  ComplexMatrix constant_part;  // Tr_e[u chi u^dag], traceless
  LinearMap tp_linear_form;     // sigma -> linear_part(sigma) + Tr(sigma) constant_part
  ComplexMatrix system_state;   // rho_s
  ComplexMatrix environment_state;
  double consistency_residual = 0.0;  // ||tp_linear_form(rho_s) - Tr_e[u |Phi><Phi| u^dag]||_F
};

/// Throws NotUnitary if u^dag u differs from I by more than residual_abs and
/// DimensionMismatch if u does not act on the joint space.
AffineDynamics induced_dynamics(const JointPureState& phi, const ComplexMatrix& u, const ToleranceConfig& tol = {});

/// Qubit map rho -> (1 - p) Tr(rho) I/2 + p rho^T. Not CP for p > 1/3.
LinearMap ncp_family(double p);

}  // namespace extmap
