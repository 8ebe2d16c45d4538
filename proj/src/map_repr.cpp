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

#include "extmap/map_repr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace extmap {

namespace {

using Index = Eigen::Index;

std::size_t dim_from_choi_side(Index side) {
  const auto root = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(side))));
  if (side <= 0 || root * root != side) {
    std::ostringstream os;
    os << "map matrix side " << side << " is not a perfect square";
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  return static_cast<std::size_t>(root);
}

void require_hermitian_choi(const LinearMap& map, const ToleranceConfig& tol) {
  const double res = hermiticity_preservation_residual(map);
  if (res > tol.residual_abs * std::max(1.0, map.choi().norm())) {
    std::ostringstream os;
    os << "Choi matrix is not Hermitian (||B - B^dag||_F = " << res << ")";
    throw Error(ErrorKind::NonHermitianChoi, os.str());
  }
}

// Swaps the two N-dimensional tensor factors of an N^2 x N^2 matrix.
ComplexMatrix swap_factors(const ComplexMatrix& m, std::size_t dim) {
  const auto n = static_cast<Index>(dim);
  if (m.rows() != n * n || m.cols() != n * n)
    throw Error(ErrorKind::DimensionMismatch, "expected a " + std::to_string(n * n) + "x" + std::to_string(n * n) +
                                                  " matrix, got " + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()));
  ComplexMatrix out(n * n, n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d) out(b * n + a, d * n + c) = m(a * n + b, c * n + d);
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, const ToleranceConfig& tol)
    : matrix_(std::move(matrix)) {
  if (!is_square(matrix_) || matrix_.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "density matrix must be square and non-empty");
  }
  if (!all_finite(matrix_)) throw Error(ErrorKind::InvalidArgument, "density matrix has non-finite entries");
  if (hermiticity_residual(matrix_) > tol.residual_abs) {
    throw Error(ErrorKind::InvalidArgument, "density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > tol.residual_abs) {
    throw Error(ErrorKind::InvalidArgument, "density matrix does not have unit trace");
  }
  const HermitianEigen eig = hermitian_eig(matrix_, tol);
  if (eig.values.minCoeff() < -tol.zero_eig_rel) {
    throw Error(ErrorKind::InvalidArgument, "density matrix has a negative eigenvalue");
  }
}

LinearMap LinearMap::from_choi(ComplexMatrix choi) {
  require_square(choi, "Choi matrix");
  const std::size_t dim = dim_from_choi_side(choi.rows());
  if (!all_finite(choi)) throw Error(ErrorKind::InvalidArgument, "Choi matrix has non-finite entries");
  return LinearMap(dim, std::move(choi));
}

LinearMap LinearMap::from_action(std::size_t dim,
                                 const std::function<ComplexMatrix(const ComplexMatrix&)>& action) {
  const auto n = static_cast<Index>(dim);
  ComplexMatrix b(n * n, n * n);
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) {
      const ComplexMatrix image = action(matrix_unit(dim, r, s));
      if (image.rows() != n || image.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "action changed the matrix dimension");
      }
      for (Index rp = 0; rp < n; ++rp)
        for (Index sp = 0; sp < n; ++sp) b(rp * n + r, sp * n + s) = image(rp, sp);
    }
  }
  return LinearMap(dim, std::move(b));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "adding maps of different dimension");
  return LinearMap(a.dim_, a.choi_ + b.choi_);
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "subtracting maps of different dimension");
  return LinearMap(a.dim_, a.choi_ - b.choi_);
}

LinearMap operator*(double s, const LinearMap& m) { return LinearMap(m.dim_, s * m.choi_); }

void KrausSet::validate() const {
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "Kraus set has zero dimension");
  const auto n = static_cast<Index>(dim);
  for (const auto& op : operators) {
    if (op.rows() != n || op.cols() != n) {
      std::ostringstream os;
      os << "Kraus operator is " << op.rows() << "x" << op.cols() << ", expected " << n << "x" << n;
      throw Error(ErrorKind::DimensionMismatch, os.str());
    }
  }
  if (!weights.empty()) {
    if (weights.size() != operators.size()) {
      throw Error(ErrorKind::DimensionMismatch, "Kraus weights and operators differ in count");
    }
    for (double w : weights) {
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw Error(ErrorKind::InvalidArgument, "Kraus weights must be positive and finite");
      }
    }
  }
}

double KrausSet::completeness_residual() const {
  const auto n = static_cast<Index>(dim);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < operators.size(); ++i) {
    sum += weight(i) * operators[i].adjoint() * operators[i];
  }
  return (sum - ComplexMatrix::Identity(n, n)).norm();
}

KrausSet KrausSet::folded() const {
  KrausSet out{dim, {}, {}};
  out.operators.reserve(operators.size());
  for (std::size_t i = 0; i < operators.size(); ++i) {
    out.operators.push_back(std::sqrt(weight(i)) * operators[i]);
  }
  return out;
}

ComplexMatrix apply_map(const LinearMap& map, const ComplexMatrix& rho) {
  const auto n = static_cast<Index>(map.dim());
  if (rho.rows() != n || rho.cols() != n) {
    std::ostringstream os;
    os << "map acts on " << n << "x" << n << " matrices, got " << rho.rows() << "x" << rho.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  const ComplexMatrix& b = map.choi();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index rp = 0; rp < n; ++rp)
    for (Index sp = 0; sp < n; ++sp) {
      Complex acc = 0.0;
      for (Index r = 0; r < n; ++r)
        for (Index s = 0; s < n; ++s) acc += b(rp * n + r, sp * n + s) * rho(r, s);
      out(rp, sp) = acc;
    }
  return out;
}

ComplexMatrix a_form(const LinearMap& map) {
  const auto n = static_cast<Index>(map.dim());
  const ComplexMatrix& b = map.choi();
  ComplexMatrix a(n * n, n * n);
  for (Index rp = 0; rp < n; ++rp)
    for (Index r = 0; r < n; ++r)
      for (Index sp = 0; sp < n; ++sp)
        for (Index s = 0; s < n; ++s) a(rp * n + sp, r * n + s) = b(rp * n + r, sp * n + s);
  return a;
}

LinearMap from_a_form(const ComplexMatrix& a) {
  require_square(a, "A-form matrix");
  const std::size_t dim = dim_from_choi_side(a.rows());
  const auto n = static_cast<Index>(dim);
  ComplexMatrix b(n * n, n * n);
  for (Index rp = 0; rp < n; ++rp)
    for (Index r = 0; r < n; ++r)
      for (Index sp = 0; sp < n; ++sp)
        for (Index s = 0; s < n; ++s) b(rp * n + r, sp * n + s) = a(rp * n + sp, r * n + s);
  return LinearMap::from_choi(std::move(b));
}

ComplexVector vec(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, std::size_t dim) {
  const auto n = static_cast<Index>(dim);
  if (v.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "unvec: length is not dim^2");
  ComplexMatrix m(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) m(r, c) = v(r * n + c);
  return m;
}

LinearMap kraus_to_map(const KrausSet& kraus, const std::vector<int>& signs) {
  kraus.validate();
  if (!signs.empty() && signs.size() != kraus.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one sign per Kraus operator required");
  }
  const auto n2 = static_cast<Index>(kraus.dim * kraus.dim);
  ComplexMatrix b = ComplexMatrix::Zero(n2, n2);
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    const double sign = signs.empty() ? 1.0 : (signs[i] < 0 ? -1.0 : 1.0);
    const ComplexVector v = vec(kraus.operators[i]);
    b += (sign * kraus.weight(i)) * v * v.adjoint();
  }
  return LinearMap::from_choi(std::move(b));
}

CanonicalDecomposition map_to_kraus(const LinearMap& map, const ToleranceConfig& tol) {
  require_hermitian_choi(map, tol);
  const HermitianEigen eig = hermitian_eig(map.choi(), tol);
  const double cut = zero_threshold(eig.values, tol);
  CanonicalDecomposition out;
  out.eigenvalues = eig.values;
  out.positive.dim = map.dim();
  out.negative.dim = map.dim();
  for (Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values(i);
    KrausSet* target = nullptr;
    if (lambda > cut) target = &out.positive;
    if (lambda < -cut) target = &out.negative;
    if (target == nullptr) continue;
    target->operators.push_back(unvec(eig.vectors.col(i), map.dim()));
    target->weights.push_back(std::abs(lambda));
  }
  return out;
}

TpVerdict check_tp(const LinearMap& map, const ToleranceConfig& tol) {
  const auto n = static_cast<Index>(map.dim());
  const ComplexMatrix out_traced = partial_trace(map.choi(), {map.dim(), map.dim()}, TraceOut::First);
  const double residual = (out_traced - ComplexMatrix::Identity(n, n)).norm();
  return {residual <= tol.residual_abs, residual};
}

double hermiticity_preservation_residual(const LinearMap& map) {
  return hermiticity_residual(map.choi());
}

bool is_hermiticity_preserving(const LinearMap& map, const ToleranceConfig& tol) {
  return hermiticity_preservation_residual(map) <= tol.residual_abs * std::max(1.0, map.choi().norm());
}

CpVerdict check_cp(const LinearMap& map, const ToleranceConfig& tol) {
  require_hermitian_choi(map, tol);
  const HermitianEigen eig = hermitian_eig(map.choi(), tol);
  const double lowest = eig.values.minCoeff();
  return {lowest >= -zero_threshold(eig.values, tol), lowest};
}

ComplexMatrix jamiolkowski_from_b(const ComplexMatrix& b, std::size_t dim) {
  return swap_factors(b, dim);
}

ComplexMatrix b_from_jamiolkowski(const ComplexMatrix& c, std::size_t dim) {
  return swap_factors(c, dim);
}

}  // namespace extmap
