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

#include "extmap/dilation.hpp"

#include <sstream>

#include "extmap/random.hpp"

namespace extmap {

namespace {
using Index = Eigen::Index;
}

double UnitaryDilation::unitarity_residual() const {
  const Index n = unitary.rows();
  return (unitary.adjoint() * unitary - ComplexMatrix::Identity(n, n)).norm();
}

ComplexMatrix UnitaryDilation::apply(const ComplexMatrix& rho) const {
  const auto n = static_cast<Index>(system_dim);
  if (rho.rows() != n || rho.cols() != n) throw Error(ErrorKind::DimensionMismatch, "state dimension mismatch");
  const ComplexMatrix joint = kron(rho, matrix_unit(ancilla_dim, ancilla_ref_index, ancilla_ref_index));
  return partial_trace(unitary * joint * unitary.adjoint(), {system_dim, ancilla_dim}, TraceOut::Second);
}

UnitaryDilation kraus_to_unitary(const KrausSet& kraus, const ToleranceConfig& tol) {
  kraus.validate();
  if (kraus.size() == 0) throw Error(ErrorKind::NotCompleteKraus, "empty Kraus set");
  const double residual = kraus.completeness_residual();
  if (residual > tol.residual_abs) {
    std::ostringstream os;
    os << "||sum M^dag M - I||_F = " << residual;
    throw Error(ErrorKind::NotCompleteKraus, os.str());
  }
  const KrausSet ops = kraus.folded();
  const std::size_t n = kraus.dim;
  const std::size_t d = ops.size();
  const auto total = static_cast<Index>(n * d);
  const auto ds = static_cast<Index>(d);

  // Column s*d + 0 is u(|s>|e0>) = sum_i M_i|s> (x) |i>.
  ComplexMatrix u = ComplexMatrix::Zero(total, total);
  std::vector<bool> filled(static_cast<std::size_t>(total), false);
  for (Index s = 0; s < static_cast<Index>(n); ++s) {
    for (Index r = 0; r < static_cast<Index>(n); ++r)
      for (Index i = 0; i < ds; ++i) u(r * ds + i, s * ds) = ops.operators[static_cast<std::size_t>(i)](r, s);
    filled[static_cast<std::size_t>(s * ds)] = true;
  }

  std::vector<Index> done;
  for (Index c = 0; c < total; ++c)
    if (filled[static_cast<std::size_t>(c)]) done.push_back(c);

  // Remaining columns: standard basis vectors e_0, e_1, ... orthogonalised
  // against everything placed so far, skipping near-dependent ones.
  Index candidate = 0;
  for (Index c = 0; c < total; ++c) {
    if (filled[static_cast<std::size_t>(c)]) continue;
    for (;; ++candidate) {
      if (candidate >= total) throw Error(ErrorKind::NotCompleteKraus, "isometry completion failed");
      ComplexVector v = ComplexVector::Unit(total, candidate);
      for (int pass = 0; pass < 2; ++pass)
        for (Index prev : done) v -= u.col(prev).dot(v) * u.col(prev);
      const double norm = v.norm();
      if (norm > 1e-6) {
        u.col(c) = v / norm;
        done.push_back(c);
        ++candidate;
        break;
      }
    }
  }
  return UnitaryDilation{n, d, std::move(u), 0};
}

UnitaryDilation dilate(const LinearMap& map, const ToleranceConfig& tol) {
  const TpVerdict tp = check_tp(map, tol);
  if (!tp.trace_preserving) {
    std::ostringstream os;
    os << "||Tr_out(B) - I||_F = " << tp.residual;
    throw Error(ErrorKind::NotTracePreserving, os.str());
  }
  const CpVerdict cp = check_cp(map, tol);
  if (!cp.completely_positive) {
    std::ostringstream os;
    os.precision(17);
    os << "min Choi eigenvalue " << cp.min_eigenvalue;
    throw Error(ErrorKind::NotCompletelyPositive, os.str());
  }
  const CanonicalDecomposition dec = map_to_kraus(map, tol);
  return kraus_to_unitary(dec.positive, tol);
}

DilationRoundTrip dilation_round_trip(const UnitaryDilation& dil, const LinearMap& map, std::size_t samples,
                                      std::uint64_t seed, const ToleranceConfig& tol) {
  if (map.dim() != dil.system_dim) throw Error(ErrorKind::DimensionMismatch, "dilation and map dimensions differ");
  DilationRoundTrip report;
  report.samples = samples;
  report.unitarity_residual = dil.unitarity_residual();
  random::Engine rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const ComplexMatrix rho = random::density_matrix(map.dim(), rng);
    report.max_residual = std::max(report.max_residual, (dil.apply(rho) - apply_map(map, rho)).norm());
  }
  report.passed = report.max_residual <= tol.residual_abs;
  return report;
}

}  // namespace extmap
