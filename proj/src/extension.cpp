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

#include "extmap/extension.hpp"

#include <cmath>
#include <string>

namespace extmap {

namespace {

using Index = Eigen::Index;

// Left/right factors applied by E and Omega in each sector. E multiplies the
// state as left * rho * right; Omega feeds left_inv * X * right_inv into the
// sector map.
struct SectorFactors {
  ComplexMatrix e_left, e_right;
  ComplexMatrix omega_left, omega_right;
};

struct Factors {
  SectorFactors plus;
  std::optional<SectorFactors> minus;
};

Factors make_factors(const CPSplit& split, Variant variant, const ToleranceConfig& tol) {
  const auto n = static_cast<Index>(split.dim());
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix j_inv = j_inverse(split, tol);
  Factors f;
  if (variant == Variant::Literal) {
    f.plus = {split.j, id, j_inv, id};
    if (split.has_negative_part()) f.minus = SectorFactors{-split.k, id, split.k_pinv, id};
    return f;
  }
  const ComplexMatrix j_half = psd_sqrt(split.j, tol);
  const ComplexMatrix j_inv_half = psd_sqrt(j_inv, tol);
  f.plus = {j_half, j_half, j_inv_half, j_inv_half};
  if (split.has_negative_part()) {
    const ComplexMatrix k_half = psd_sqrt(split.k, tol);
    const ComplexMatrix k_pinv_half = psd_sqrt(split.k_pinv, tol);
    f.minus = SectorFactors{-k_half, k_half, k_pinv_half, k_pinv_half};
  }
  return f;
}

void require_state_dim(const CPSplit& split, const ComplexMatrix& m, const char* what) {
  const auto n = static_cast<Index>(split.dim());
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " does not match the map dimension");
  }
}

ExtendedState omega_with(const CPSplit& split, const Factors& f, const ExtendedState& x) {
  require_state_dim(split, x.plus_block, "plus block");
  ExtendedState out;
  out.dim = split.dim();
  out.plus_block = apply_map(split.lambda_plus, f.plus.omega_left * x.plus_block * f.plus.omega_right);
  if (x.minus_block && f.minus) {
    require_state_dim(split, *x.minus_block, "minus block");
    out.minus_block = apply_map(split.lambda_minus, f.minus->omega_left * *x.minus_block * f.minus->omega_right);
  } else if (x.minus_block) {
    // No negative part: the minus sector map is zero.
    out.minus_block = ComplexMatrix::Zero(x.minus_block->rows(), x.minus_block->cols());
  }
  return out;
}

ExtendedState extend_with(const CPSplit& split, const Factors& f, const ComplexMatrix& rho) {
  require_state_dim(split, rho, "state");
  ExtendedState out;
  out.dim = split.dim();
  out.plus_block = f.plus.e_left * rho * f.plus.e_right;
  if (f.minus) out.minus_block = f.minus->e_left * rho * f.minus->e_right;
  return out;
}

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::Literal ? "literal" : "symmetric"; }

Variant variant_from_string(std::string_view name) {
  if (name == "literal") return Variant::Literal;
  if (name == "symmetric") return Variant::Symmetric;
  throw Error(ErrorKind::InvalidArgument, "unknown variant '" + std::string(name) + "'");
}

ComplexMatrix ancilla_trace(const ExtendedState& x) {
  return x.minus_block ? ComplexMatrix(x.plus_block + *x.minus_block) : x.plus_block;
}

ComplexMatrix to_operator(const ExtendedState& x) {
  const auto n = x.plus_block.rows();
  const auto labels = static_cast<Index>(x.label_count());
  ComplexMatrix out = ComplexMatrix::Zero(labels * n, labels * n);
  out.topLeftCorner(n, n) = x.plus_block;
  if (x.minus_block) out.bottomRightCorner(n, n) = *x.minus_block;
  return out;
}

ComplexMatrix build_cp_extension(const DensityMatrix& rho, std::size_t ancilla_dim) {
  if (ancilla_dim == 0) throw Error(ErrorKind::InvalidArgument, "ancilla dimension must be >= 1");
  return kron(rho.matrix(), matrix_unit(ancilla_dim, 0, 0));
}

ExtendedState build_extension(const CPSplit& split, const ComplexMatrix& rho, Variant variant,
                              const ToleranceConfig& tol) {
  return extend_with(split, make_factors(split, variant, tol), rho);
}

ExtendedState apply_omega(const CPSplit& split, const ExtendedState& x, Variant variant,
                          const ToleranceConfig& tol) {
  return omega_with(split, make_factors(split, variant, tol), x);
}

Reconstruction reconstruct(const CPSplit& split, const ComplexMatrix& rho, Variant variant,
                           const ToleranceConfig& tol) {
  const Factors f = make_factors(split, variant, tol);
  ComplexMatrix result = ancilla_trace(omega_with(split, f, extend_with(split, f, rho)));
  const double residual = (result - apply_map(split.original, rho)).norm();
  return {std::move(result), residual};
}

double extension_residual(const CPSplit& split, const ComplexMatrix& rho, Variant variant,
                          const ToleranceConfig& tol) {
  return (ancilla_trace(build_extension(split, rho, variant, tol)) - rho).norm();
}

LinearMap omega_map(const CPSplit& split, Variant variant, const ToleranceConfig& tol) {
  const Factors f = make_factors(split, variant, tol);
  const auto n = static_cast<Index>(split.dim());
  const std::size_t labels = split.has_negative_part() ? 2 : 1;
  return LinearMap::from_action(labels * split.dim(), [&](const ComplexMatrix& big) -> ComplexMatrix {
    ExtendedState x;
    x.dim = split.dim();
    x.plus_block = big.topLeftCorner(n, n);
    if (labels == 2) x.minus_block = big.bottomRightCorner(n, n);
    return to_operator(omega_with(split, f, x));
  });
}

OmegaReport omega_choi_report(const CPSplit& split, const ToleranceConfig& tol) {
  const auto measure = [&](Variant v) {
    const LinearMap omega = omega_map(split, v, tol);
    OmegaVariantReport r;
    r.variant = v;
    r.sector_dim = omega.dim();
    r.hermiticity_residual = hermiticity_preservation_residual(omega);
    r.hermitian = is_hermiticity_preserving(omega, tol);
    if (r.hermitian) {
      const CpVerdict cp = check_cp(omega, tol);
      r.min_eigenvalue = cp.min_eigenvalue;
      r.completely_positive = cp.completely_positive;
    }
    return r;
  };
  return {measure(Variant::Literal), measure(Variant::Symmetric)};
}

DimensionReport dimension_report(const CPSplit& split) {
  const std::size_t n = split.dim();
  DimensionReport r;
  r.l_plus = split.l_plus;
  r.l_minus = split.l_minus;
  const std::size_t dim_k = split.has_negative_part() ? n : 0;
  r.extension_dim = n + dim_k;
  r.dilation_dim = n * split.l_plus + dim_k * split.l_minus;
  r.n_squared_bound = n * n;
  return r;
}

}  // namespace extmap
