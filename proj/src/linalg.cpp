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

#include "extmap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace extmap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::NonHermitianChoi: return "NonHermitianChoi";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NotCompletelyPositive: return "NotCompletelyPositive";
    case ErrorKind::SingularJ: return "SingularJ";
    case ErrorKind::NotCompleteKraus: return "NotCompleteKraus";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void ToleranceConfig::validate() const {
  auto in_open_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_open_unit(zero_eig_rel) || !in_open_unit(residual_abs)) {
    std::ostringstream os;
    os << "tolerances must lie in (0, 1); got zero_eig_rel=" << zero_eig_rel
       << " residual_abs=" << residual_abs;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

double hermiticity_residual(const ComplexMatrix& m) {
  if (!is_square(m)) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).norm();
}

bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols(); }

void require_square(const ComplexMatrix& m, const char* what) {
  if (!is_square(m)) {
    std::ostringstream os;
    os << what << " must be square, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

double zero_threshold(const RealVector& eigenvalues, const ToleranceConfig& tol) {
  if (eigenvalues.size() == 0) return 0.0;
  return tol.zero_eig_rel * eigenvalues.cwiseAbs().maxCoeff();
}

HermitianEigen hermitian_eig(const ComplexMatrix& m, const ToleranceConfig& tol) {
  require_square(m, "hermitian_eig input");
  const double asym = hermiticity_residual(m);
  if (asym > tol.residual_abs * std::max(1.0, m.norm())) {
    std::ostringstream os;
    os << "||m - m^dag||_F = " << asym;
    throw Error(ErrorKind::NonHermitianInput, os.str());
  }
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidArgument, "eigensolver did not converge");
  }
  // Eigen sorts ascending.
  HermitianEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, FactorDims dims, TraceOut which) {
  const auto n = static_cast<Eigen::Index>(dims.first * dims.second);
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << "partial_trace: " << m.rows() << "x" << m.cols() << " operator does not factor as "
       << dims.first << "*" << dims.second;
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  const auto da = static_cast<Eigen::Index>(dims.first);
  const auto db = static_cast<Eigen::Index>(dims.second);
  if (which == TraceOut::First) {
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index a = 0; a < da; ++a) out += m.block(a * db, a * db, db, db);
    return out;
  }
  ComplexMatrix out(da, da);
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index c = 0; c < da; ++c) {
      out(a, c) = m.block(a * db, c * db, db, db).trace();
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void require_psd(const RealVector& values, const ToleranceConfig& tol, const char* what) {
  if (values.size() == 0) return;
  const double lowest = values.minCoeff();
  if (lowest < -zero_threshold(values, tol)) {
    std::ostringstream os;
    os << what << " has eigenvalue " << lowest;
    throw Error(ErrorKind::NotPSD, os.str());
  }
}

}  // namespace

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const ToleranceConfig& tol) {
  const HermitianEigen eig = hermitian_eig(m, tol);
  require_psd(eig.values, tol, "psd_sqrt input");
  const RealVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

PseudoInverse thresholded_pinv(const ComplexMatrix& m, const ToleranceConfig& tol) {
  const HermitianEigen eig = hermitian_eig(m, tol);
  require_psd(eig.values, tol, "thresholded_pinv input");
  const double cut = zero_threshold(eig.values, tol);
  const Eigen::Index n = m.rows();
  PseudoInverse out{ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n)};
  for (Eigen::Index q = 0; q < n; ++q) {
    const double k = eig.values(q);
    if (!(k > cut)) continue;
    const ComplexMatrix proj = eig.vectors.col(q) * eig.vectors.col(q).adjoint();
    out.pinv += proj / k;
    out.support += proj;
  }
  return out;
}

ComplexMatrix hermitian_inverse(const ComplexMatrix& m, const ToleranceConfig& tol,
                                ErrorKind failure) {
  const HermitianEigen eig = hermitian_eig(m, tol);
  const double lowest = eig.values.size() ? eig.values.minCoeff() : 0.0;
  if (!(lowest > zero_threshold(eig.values, tol))) {
    std::ostringstream os;
    os << "smallest eigenvalue " << lowest << " is not positive";
    throw Error(failure, os.str());
  }
  const RealVector inv = eig.values.cwiseInverse();
  return eig.vectors * inv.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) { return a * b.adjoint(); }

ComplexMatrix matrix_unit(std::size_t n, std::size_t r, std::size_t s) {
  const auto size = static_cast<Eigen::Index>(n);
  ComplexMatrix e = ComplexMatrix::Zero(size, size);
  e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = 1.0;
  return e;
}

}  // namespace extmap
