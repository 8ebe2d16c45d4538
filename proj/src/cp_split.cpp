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

#include "extmap/cp_split.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "extmap/random.hpp"

namespace extmap {

namespace {

using Index = Eigen::Index;

ComplexMatrix trace_functional(const KrausSet& kraus) {
  const auto n = static_cast<Index>(kraus.dim);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    out += kraus.weight(i) * kraus.operators[i].adjoint() * kraus.operators[i];
  }
  return 0.5 * (out + out.adjoint());
}

LinearMap cp_part(const KrausSet& kraus) {
  if (kraus.size() == 0) {
    const auto n2 = static_cast<Index>(kraus.dim * kraus.dim);
    return LinearMap::from_choi(ComplexMatrix::Zero(n2, n2));
  }
  return kraus_to_map(kraus);
}

}  // namespace

CPSplit split(const LinearMap& map, const ToleranceConfig& tol) {
  CanonicalDecomposition decomposition = map_to_kraus(map, tol);
  const TpVerdict tp = check_tp(map, tol);
  if (!tp.trace_preserving) {
    std::ostringstream os;
    os << "||Tr_out(B) - I||_F = " << tp.residual;
    throw Error(ErrorKind::NotTracePreserving, os.str());
  }

  LinearMap plus = cp_part(decomposition.positive);
  LinearMap minus = cp_part(decomposition.negative);
  ComplexMatrix j = trace_functional(decomposition.positive);
  ComplexMatrix k = trace_functional(decomposition.negative);
  PseudoInverse k_inv = thresholded_pinv(k, tol);

  const HermitianEigen k_eig = hermitian_eig(k, tol);
  const double cut = zero_threshold(k_eig.values, tol);
  std::vector<ComplexVector> kernel;
  std::vector<ComplexVector> support;
  for (Index q = 0; q < k_eig.values.size(); ++q) {
    if (k_eig.values(q) > cut) {
      support.emplace_back(k_eig.vectors.col(q));
    } else {
      kernel.emplace_back(k_eig.vectors.col(q));
    }
  }

  const std::size_t l_plus = decomposition.positive.size();
  const std::size_t l_minus = decomposition.negative.size();
  return CPSplit{map,
                 std::move(decomposition),
                 std::move(plus),
                 std::move(minus),
                 std::move(j),
                 std::move(k),
                 std::move(k_inv.pinv),
                 std::move(k_inv.support),
                 std::move(kernel),
                 std::move(support),
                 l_plus,
                 l_minus};
}

double AnnihilationReport::max_residual() const {
  return std::max({kernel_diagonal, kernel_cross, eigenmatrix_kernel, support_projection});
}

AnnihilationReport verify_annihilation(const CPSplit& split, const ToleranceConfig& tol,
                                       std::size_t samples, std::uint64_t seed) {
  AnnihilationReport report;
  report.kernel_dim = split.kernel_basis.size();
  report.samples = samples;

  for (const auto& phi : split.kernel_basis) {
    report.kernel_diagonal =
        std::max(report.kernel_diagonal, apply_map(split.lambda_minus, outer(phi, phi)).norm());
    for (const auto& psi : split.support_basis) {
      report.kernel_cross = std::max(
          {report.kernel_cross, apply_map(split.lambda_minus, outer(phi, psi)).norm(),
           apply_map(split.lambda_minus, outer(psi, phi)).norm()});
    }
    for (const auto& l : split.decomposition.negative.operators) {
      report.eigenmatrix_kernel = std::max(report.eigenmatrix_kernel, (l * phi).norm());
    }
  }

  random::Engine rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const ComplexMatrix rho = random::density_matrix(split.dim(), rng);
    const double gap =
        (apply_map(split.lambda_minus, rho) - apply_map(split.lambda_minus, split.psi * rho)).norm();
    report.support_projection = std::max(report.support_projection, gap);
  }
  report.passed = report.max_residual() <= tol.residual_abs;
  return report;
}

ComplexMatrix j_inverse(const CPSplit& split, const ToleranceConfig& tol) {
  return hermitian_inverse(split.j, tol, ErrorKind::SingularJ);
}

TraceFunctionalReport trace_functionals(const CPSplit& split, std::size_t samples, std::uint64_t seed,
                                        const ToleranceConfig& tol) {
  const ComplexMatrix j_inv = j_inverse(split, tol);
  TraceFunctionalReport report;
  report.samples = samples;
  random::Engine rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const ComplexMatrix x = random::ginibre(split.dim(), split.dim(), rng);
    const auto worst = [](double& slot, Complex gap) { slot = std::max(slot, std::abs(gap)); };
    worst(report.plus_functional, apply_map(split.lambda_plus, x).trace() - (split.j * x).trace());
    worst(report.minus_functional, apply_map(split.lambda_minus, x).trace() - (split.k * x).trace());
    worst(report.plus_normalised, apply_map(split.lambda_plus, j_inv * x).trace() - x.trace());
    worst(report.minus_normalised,
          apply_map(split.lambda_minus, split.k_pinv * x).trace() - (split.psi * x).trace());
  }
  report.passed = std::max({report.plus_functional, report.minus_functional, report.plus_normalised,
                            report.minus_normalised}) <= tol.residual_abs;
  return report;
}

}  // namespace extmap
