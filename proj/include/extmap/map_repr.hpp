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
#include <functional>
#include <optional>
#include <vector>

#include "extmap/linalg.hpp"

namespace extmap {

/// A validated N x N density matrix: Hermitian, PSD and unit trace within
/// tolerance.
class DensityMatrix {
 public:
  /// Throws InvalidArgument if any of the state conditions fails.
  explicit DensityMatrix(ComplexMatrix matrix, const ToleranceConfig& tol = {});

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Linear map on N x N matrices stored by its B-form (Choi) matrix.
///
/// Row multi-index is (output row r', input row r), column multi-index is
/// (output column s', input column s), flattened as r' * N + r. The action is
///   (map rho)_{r's'} = sum_{rs} B_{(r'r),(s's)} rho_{rs}.
/// B is Hermitian iff the map preserves Hermiticity and PSD iff it is
/// completely positive.
class LinearMap {
 public:
  /// Throws DimensionMismatch unless choi is N^2 x N^2 for some N >= 1.
  static LinearMap from_choi(ComplexMatrix choi);

  /// Builds the map from its action on the matrix units |r><s|.
  static LinearMap from_action(std::size_t dim,
                               const std::function<ComplexMatrix(const ComplexMatrix&)>& action);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& choi() const { return choi_; }

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(double s, const LinearMap& m);

 private:
  LinearMap(std::size_t dim, ComplexMatrix choi) : dim_(dim), choi_(std::move(choi)) {}

  std::size_t dim_;
  ComplexMatrix choi_;
};

/// Operators M_i with positive weights w_i realising rho -> sum w_i M_i rho M_i^dag.
struct KrausSet {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> operators;
  std::vector<double> weights;  // empty means all ones

  std::size_t size() const { return operators.size(); }
  double weight(std::size_t i) const { return weights.empty() ? 1.0 : weights[i]; }

  /// Throws DimensionMismatch / InvalidArgument on inconsistent shapes or
  /// non-positive weights.
  void validate() const;

  /// ||sum_i w_i M_i^dag M_i - I||_F.
  double completeness_residual() const;

  /// Operators with sqrt(w_i) folded in and weights dropped.
  KrausSet folded() const;
};

/// Eigen-decomposition of the Choi matrix grouped by sign. The operators of
/// each set are Hilbert-Schmidt orthonormal and the weights are |lambda_i|.
struct CanonicalDecomposition {
  RealVector eigenvalues;  // full Choi spectrum, descending
  KrausSet positive;
  KrausSet negative;
};

struct TpVerdict {
  bool trace_preserving;
  double residual;
};

struct CpVerdict {
  bool completely_positive;
  double min_eigenvalue;
};

ComplexMatrix apply_map(const LinearMap& map, const ComplexMatrix& rho);

/// Superoperator acting on the row-major vectorisation vec(rho)_{rN+s} = rho_{rs}.
ComplexMatrix a_form(const LinearMap& map);
LinearMap from_a_form(const ComplexMatrix& a);

/// Row-major vectorisation and its inverse.
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, std::size_t dim);

/// sum_i sign_i w_i vec(M_i) vec(M_i)^dag; signs default to +1.
LinearMap kraus_to_map(const KrausSet& kraus, const std::vector<int>& signs = {});

/// Throws NonHermitianChoi if the map does not preserve Hermiticity.
CanonicalDecomposition map_to_kraus(const LinearMap& map, const ToleranceConfig& tol = {});

/// Residual of sum_{r'} B_{(r'r),(r's)} = delta_{rs}.
TpVerdict check_tp(const LinearMap& map, const ToleranceConfig& tol = {});

/// ||B - B^dag||_F of the Choi matrix.
double hermiticity_preservation_residual(const LinearMap& map);
bool is_hermiticity_preserving(const LinearMap& map, const ToleranceConfig& tol = {});

/// Throws NonHermitianChoi if the Choi matrix is not Hermitian.
CpVerdict check_cp(const LinearMap& map, const ToleranceConfig& tol = {});

/// Standard Choi-Jamiolkowski matrix sum_{ij} |i><j| (x) map(|i><j|), i.e. the
/// B-form with its two tensor factors swapped. Used for file interchange.
ComplexMatrix jamiolkowski_from_b(const ComplexMatrix& b, std::size_t dim);
ComplexMatrix b_from_jamiolkowski(const ComplexMatrix& c, std::size_t dim);

}  // namespace extmap
