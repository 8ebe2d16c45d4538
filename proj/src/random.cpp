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

#include "extmap/random.hpp"

#include <cmath>

namespace extmap::random {

namespace {
using Index = Eigen::Index;
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

ComplexMatrix hermitian(std::size_t n, Engine& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix isometry(std::size_t rows, std::size_t cols, Engine& rng) {
  if (rows < cols) throw Error(ErrorKind::InvalidArgument, "isometry needs rows >= cols");
  const ComplexMatrix g = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(g.rows(), g.cols());
  const ComplexMatrix r = qr.matrixQR();
  for (Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

ComplexMatrix unitary(std::size_t n, Engine& rng) { return isometry(n, n, rng); }

ComplexMatrix density_matrix(std::size_t n, Engine& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  const ComplexMatrix rho = g * g.adjoint();
  const ComplexMatrix out = rho / rho.trace().real();
  return 0.5 * (out + out.adjoint());
}

ComplexVector pure_state(std::size_t n, Engine& rng) {
  ComplexVector v = ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

LinearMap tp_map(std::size_t n, Engine& rng) {
  const auto dim = static_cast<Index>(n);
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  for (;;) {
    // The identity shift keeps g positive definite for most draws while
    // leaving a negative part in the Choi spectrum.
    const ComplexMatrix b = hermitian(n * n, rng) + ComplexMatrix::Identity(dim * dim, dim * dim);
    const ComplexMatrix g = partial_trace(b, {n, n}, TraceOut::First);
    const HermitianEigen eig = hermitian_eig(g);
    if (eig.values.minCoeff() <= 1e-3 * eig.values.cwiseAbs().maxCoeff()) continue;
    // Tr map(X) = Tr(g^T X); conjugating the input by s = (g^T)^{-1/2} makes
    // the functional the identity.
    const RealVector inv_sqrt = eig.values.cwiseSqrt().cwiseInverse();
    const ComplexMatrix g_inv_sqrt = eig.vectors * inv_sqrt.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    const ComplexMatrix s = g_inv_sqrt.transpose();
    const ComplexMatrix lift = kron(id, s.transpose());
    ComplexMatrix out = lift * b * lift.adjoint();
    out = 0.5 * (out + out.adjoint());
    return LinearMap::from_choi(std::move(out));
  }
}

KrausSet cptp_kraus(std::size_t n, std::size_t kraus_count, Engine& rng) {
  if (kraus_count == 0) throw Error(ErrorKind::InvalidArgument, "need at least one Kraus operator");
  const auto dim = static_cast<Index>(n);
  const ComplexMatrix v = isometry(n * kraus_count, n, rng);
  KrausSet out{n, {}, {}};
  for (std::size_t i = 0; i < kraus_count; ++i) {
    out.operators.push_back(v.block(static_cast<Index>(i) * dim, 0, dim, dim));
  }
  return out;
}

LinearMap rank_deficient_k_map(std::size_t n, Engine& rng) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "rank-deficient K needs n >= 2");
  const auto dim = static_cast<Index>(n);
  std::uniform_int_distribution<std::size_t> count_dist(1, n - 1);
  std::uniform_real_distribution<double> weight_dist(0.05, 0.5);
  const std::size_t negatives = count_dist(rng);

  // Negative eigenmatrices |e_j><e_0| with weights c_j; K = (sum c_j)|e_0><e_0|.
  std::vector<double> c(negatives);
  double c_total = 0.0;
  for (auto& w : c) {
    w = weight_dist(rng);
    c_total += w;
  }

  // Positive Kraus operators M_i must have (M_i)_{j0} = 0 for j < negatives so
  // that their vectorisations are orthogonal to the negative ones, and must
  // satisfy sum M_i^dag M_i = I + K. Build them as blocks of W D^{1/2} with W
  // an isometry whose first column vanishes on the forbidden rows.
  const std::size_t positives = n * n - negatives;
  ComplexMatrix w = ginibre(n * positives, n, rng);
  for (std::size_t i = 0; i < positives; ++i)
    for (std::size_t j = 0; j < negatives; ++j) w(static_cast<Index>(i * n + j), 0) = 0.0;
  // Gram-Schmidt keeps column 0 proportional to itself, so its zeros survive.
  for (Index col = 0; col < w.cols(); ++col) {
    for (int pass = 0; pass < 2; ++pass)
      for (Index prev = 0; prev < col; ++prev) {
        const Complex overlap = w.col(prev).dot(w.col(col));
        w.col(col) -= overlap * w.col(prev);
      }
    w.col(col) /= w.col(col).norm();
  }
  RealVector d = RealVector::Ones(dim);
  d(0) += c_total;
  const ComplexMatrix scale = d.cwiseSqrt().cast<Complex>().asDiagonal();

  const ComplexMatrix left = unitary(n, rng);
  const ComplexMatrix right = unitary(n, rng);
  ComplexMatrix b = ComplexMatrix::Zero(dim * dim, dim * dim);
  for (std::size_t i = 0; i < positives; ++i) {
    const ComplexMatrix m = w.block(static_cast<Index>(i) * dim, 0, dim, dim) * scale;
    const ComplexVector v = vec(left * m * right);
    b += v * v.adjoint();
  }
  for (std::size_t j = 0; j < negatives; ++j) {
    const ComplexVector v = vec(left * matrix_unit(n, j, 0) * right);
    b -= c[j] * v * v.adjoint();
  }
  b = 0.5 * (b + b.adjoint());
  return LinearMap::from_choi(std::move(b));
}

}  // namespace extmap::random
