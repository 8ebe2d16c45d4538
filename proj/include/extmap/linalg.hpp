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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "extmap/errors.hpp"

namespace extmap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every module.
///
/// An eigenvalue counts as zero when |lambda| <= zero_eig_rel * max|lambda|.
/// Identities that should hold exactly are checked against residual_abs in
/// the Frobenius norm.
struct ToleranceConfig {
  double zero_eig_rel = 1e-10;
  double residual_abs = 1e-9;

  /// Throws InvalidArgument unless both values lie in (0, 1).
  void validate() const;
};

struct HermitianEigen {
  RealVector values;     // descending
  ComplexMatrix vectors;  // orthonormal columns, same order as values
};

/// Eigen-decomposition of a Hermitian matrix with eigenvalues sorted in
/// descending order.
///
/// The Hermiticity check is relative: ||m - m^dag||_F must not exceed
/// residual_abs * max(1, ||m||_F). Only the Hermitian part of m is
/// diagonalised. Inside a degenerate eigenspace any orthonormal basis may be
/// returned.
HermitianEigen hermitian_eig(const ComplexMatrix& m, const ToleranceConfig& tol = {});

/// Which tensor factor partial_trace removes.
enum class TraceOut { First, Second };

struct FactorDims {
  std::size_t first;
  std::size_t second;
};

/// Partial trace of an operator on C^first (x) C^second, row index
/// i = a * second + b.
ComplexMatrix partial_trace(const ComplexMatrix& m, FactorDims dims, TraceOut which);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Principal square root of a Hermitian PSD matrix. Negative eigenvalues
/// within the zero threshold are clamped to 0; anything more negative throws
/// NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const ToleranceConfig& tol = {});

struct PseudoInverse {
  ComplexMatrix pinv;
  ComplexMatrix support;  // orthogonal projector onto the retained eigenvectors
};

/// Moore-Penrose inverse of a Hermitian PSD matrix restricted to eigenvalues
/// above zero_eig_rel * max eigenvalue. pinv * m == support.
PseudoInverse thresholded_pinv(const ComplexMatrix& m, const ToleranceConfig& tol = {});

// Small helpers used throughout.

double frobenius(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);
bool is_square(const ComplexMatrix& m);
void require_square(const ComplexMatrix& m, const char* what);
bool all_finite(const ComplexMatrix& m);

/// Threshold below which |lambda| is treated as zero for a given spectrum.
double zero_threshold(const RealVector& eigenvalues, const ToleranceConfig& tol);

/// Inverse of a Hermitian positive definite matrix via its eigensystem.
/// Throws `failure` if the smallest eigenvalue is not above the zero threshold.
ComplexMatrix hermitian_inverse(const ComplexMatrix& m, const ToleranceConfig& tol,
                                ErrorKind failure = ErrorKind::NotPSD);

/// Outer product |a><b|.
ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);

/// Matrix unit |r><s| of size n.
ComplexMatrix matrix_unit(std::size_t n, std::size_t r, std::size_t s);

}  // namespace extmap
