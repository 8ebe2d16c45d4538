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
#include <optional>
#include <string_view>

#include "extmap/cp_split.hpp"

namespace extmap {

/// Which extension/Omega pair to use.
///
/// Literal: E(rho) = J rho (+) -K rho, with Omega sectors X -> plus(J^-1 X)
/// and X -> minus(K^+ X). E satisfies Tr_e E(rho) = rho exactly.
///
/// Symmetric: E(rho) = J^1/2 rho J^1/2 (+) -K^1/2 rho K^1/2 with Omega
/// sectors sandwiching J^-1/2 and (K^+)^1/2 on both sides. Both sectors are
/// manifestly CP, but Tr_e E(rho) = rho fails unless J and K commute with rho.
enum class Variant { Literal, Symmetric };

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view name);

/// Block-diagonal operator on system (x) {e+, e-}. The ancilla labels are
/// never materialised; minus_block already carries the sign and is absent
/// when the split has no negative part.
struct ExtendedState {
  std::size_t dim = 0;
  ComplexMatrix plus_block;
  std::optional<ComplexMatrix> minus_block;

  std::size_t label_count() const { return minus_block ? 2 : 1; }
};

/// plus_block + minus_block, i.e. the partial trace over the ancilla label.
ComplexMatrix ancilla_trace(const ExtendedState& x);

/// Dense block-diagonal form diag(plus, minus) with the ancilla label as the
/// first tensor factor (dims label_count x N).
ComplexMatrix to_operator(const ExtendedState& x);

/// rho (x) |0><0| on a d-dimensional ancilla (system factor first).
ComplexMatrix build_cp_extension(const DensityMatrix& rho, std::size_t ancilla_dim);

ExtendedState build_extension(const CPSplit& split, const ComplexMatrix& rho,
                              Variant variant = Variant::Literal, const ToleranceConfig& tol = {});

/// Throws SingularJ when J is not invertible.
ExtendedState apply_omega(const CPSplit& split, const ExtendedState& x, Variant variant = Variant::Literal,
                          const ToleranceConfig& tol = {});

struct Reconstruction {
  ComplexMatrix result;
  double residual;  // ||result - original(rho)||_F
};

/// Tr_e[Omega(E(rho))] compared against the original map.
Reconstruction reconstruct(const CPSplit& split, const ComplexMatrix& rho, Variant variant = Variant::Literal,
                           const ToleranceConfig& tol = {});

/// ||Tr_e E(rho) - rho||_F.
double extension_residual(const CPSplit& split, const ComplexMatrix& rho, Variant variant = Variant::Literal,
                          const ToleranceConfig& tol = {});

/// Omega as a linear map on (label_count * N)-dimensional matrices. Diagonal
/// label blocks are mapped by the sector maps, off-diagonal blocks go to 0.
LinearMap omega_map(const CPSplit& split, Variant variant, const ToleranceConfig& tol = {});

struct OmegaVariantReport {
  Variant variant = Variant::Literal;
  std::size_t sector_dim = 0;
  double hermiticity_residual = 0.0;
  bool hermitian = false;
  std::optional<double> min_eigenvalue;  // only when hermitian
  std::optional<bool> completely_positive;
};

struct OmegaReport {
  OmegaVariantReport literal;
  OmegaVariantReport symmetric;
};

/// Measures, without asserting, Hermiticity and positivity of the Omega Choi
/// matrix for both variants.
OmegaReport omega_choi_report(const CPSplit& split, const ToleranceConfig& tol = {});

struct DimensionReport {
  std::size_t extension_dim = 0;   // dim(J) + dim(K), K omitted when zero
  std::size_t dilation_dim = 0;    // dim(J) l_plus + dim(K) l_minus
  std::size_t n_squared_bound = 0;
  std::size_t l_plus = 0;
  std::size_t l_minus = 0;
};

DimensionReport dimension_report(const CPSplit& split);

}  // namespace extmap
