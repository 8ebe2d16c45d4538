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
#include <vector>

#include "extmap/map_repr.hpp"

namespace extmap {

/// Split of a trace-preserving Hermiticity-preserving map into completely
/// positive parts, map = plus - minus, together with the trace functionals
/// J and K of the two parts.
///
/// J = sum_{lambda_i > 0} lambda_i L_i^dag L_i and K = sum_{lambda_i < 0}
/// |lambda_i| L_i^dag L_i satisfy Tr plus(X) = Tr(J X), Tr minus(X) = Tr(K X)
/// and, for trace-preserving input, J - K = I.
struct CPSplit {
  LinearMap original;
  CanonicalDecomposition decomposition;
  LinearMap lambda_plus;
  LinearMap lambda_minus;
  ComplexMatrix j;
  ComplexMatrix k;
  ComplexMatrix k_pinv;
  ComplexMatrix psi;                        // projector onto the range of K
  std::vector<ComplexVector> kernel_basis;  // orthonormal basis of ker(K)
  std::vector<ComplexVector> support_basis; // orthonormal basis of range(K)
  std::size_t l_plus = 0;
  std::size_t l_minus = 0;

  std::size_t dim() const { return original.dim(); }
  bool has_negative_part() const { return l_minus > 0; }
};

/// Throws NonHermitianChoi or NotTracePreserving when the preconditions fail.
CPSplit split(const LinearMap& map, const ToleranceConfig& tol = {});

/// Residuals of the statements that the negative part forgets ker(K).
struct AnnihilationReport {
  std::size_t kernel_dim = 0;
  std::size_t samples = 0;
  double kernel_diagonal = 0.0;  // max_q ||minus(|phi_q><phi_q|)||_F
  double kernel_cross = 0.0;     // max_{q,r} ||minus(|phi_q><psi_r|)||_F and transposed pair
  double eigenmatrix_kernel = 0.0;  // max_{i,q} ||L_i |phi_q>|| over negative L_i
  double support_projection = 0.0;  // max over samples of ||minus(rho) - minus(Psi rho)||_F
  bool passed = false;

  double max_residual() const;
};

AnnihilationReport verify_annihilation(const CPSplit& split, const ToleranceConfig& tol,
                                       std::size_t samples, std::uint64_t seed);

struct TraceFunctionalReport {
  std::size_t samples = 0;
  double plus_functional = 0.0;   // |Tr plus(X) - Tr(J X)|
  double minus_functional = 0.0;  // |Tr minus(X) - Tr(K X)|
  double plus_normalised = 0.0;   // |Tr plus(J^-1 X) - Tr X|
  double minus_normalised = 0.0;  // |Tr minus(K^+ X) - Tr(Psi X)|
  bool passed = false;
};

/// Throws SingularJ if J is not invertible.
TraceFunctionalReport trace_functionals(const CPSplit& split, std::size_t samples, std::uint64_t seed,
                                        const ToleranceConfig& tol = {});

/// J^{-1}; throws SingularJ when the smallest eigenvalue of J is under the
/// zero threshold.
ComplexMatrix j_inverse(const CPSplit& split, const ToleranceConfig& tol = {});

}  // namespace extmap
