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

#include "extmap/entangled.hpp"

#include <cmath>
#include <sstream>

#include "extmap/standard_maps.hpp"

namespace extmap {

namespace {
using Index = Eigen::Index;
}

JointPureState::JointPureState(std::size_t system_dim, std::size_t environment_dim, ComplexVector amplitudes,
                               const ToleranceConfig& tol)
    : system_dim_(system_dim), environment_dim_(environment_dim), amplitudes_(std::move(amplitudes)) {
  if (system_dim_ == 0 || environment_dim_ == 0 ||
      amplitudes_.size() != static_cast<Index>(system_dim_ * environment_dim_)) {
    std::ostringstream os;
    os << "joint state of length " << amplitudes_.size() << " does not match dims " << system_dim_ << "x"
       << environment_dim_;
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  if (!amplitudes_.allFinite() || std::abs(amplitudes_.norm() - 1.0) > tol.residual_abs) {
    throw Error(ErrorKind::InvalidArgument, "joint state is not normalised");
  }
}

std::string_view to_string(WitnessVerdict v) {
  return v == WitnessVerdict::PositiveExtensionImpossible ? "PositiveExtensionImpossible" : "ProductState";
}

WitnessCertificate extension_witness(const JointPureState& phi, const ToleranceConfig& tol) {
  WitnessCertificate cert;
  cert.reduced_state =
      partial_trace(phi.projector(), {phi.system_dim(), phi.environment_dim()}, TraceOut::Second);
  const HermitianEigen eig = hermitian_eig(cert.reduced_state, tol);
  cert.eigenweights = eig.values;
  cert.purity = (cert.reduced_state * cert.reduced_state).trace().real();
  const double cut = zero_threshold(eig.values, tol);
  for (Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > cut) ++cert.schmidt_rank;
  }

  std::ostringstream os;
  os.precision(17);
  if (cert.schmidt_rank < 2) {
    cert.verdict = WitnessVerdict::ProductState;
    os << "reduced state is pure (purity " << cert.purity << "); rho (x) |0><0| is a positive extension";
    cert.explanation = os.str();
    return cert;
  }
  cert.verdict = WitnessVerdict::PositiveExtensionImpossible;
  for (Index i = 0; i < eig.values.size(); ++i) {
    if (!(eig.values(i) > cut)) continue;
    const ComplexVector v = eig.vectors.col(i);
    cert.contradictions.push_back({eig.values(i), v, (cert.reduced_state - outer(v, v)).norm()});
  }
  os << "reduced state has Schmidt rank " << cert.schmidt_rank << " and purity " << cert.purity
     << "; a linear E with E(rho) = |Phi><Phi| splits the pure target over " << cert.contradictions.size()
     << " eigencomponents, so E cannot be positive on all of them while keeping Tr_e E(sigma) = sigma";
  cert.explanation = os.str();
  return cert;
}

AffineDynamics induced_dynamics(const JointPureState& phi, const ComplexMatrix& u, const ToleranceConfig& tol) {
  const std::size_t ns = phi.system_dim();
  const std::size_t ne = phi.environment_dim();
  const auto total = static_cast<Index>(ns * ne);
  if (u.rows() != total || u.cols() != total) {
    throw Error(ErrorKind::DimensionMismatch, "unitary does not act on the joint space");
  }
  const double unitarity = (u.adjoint() * u - ComplexMatrix::Identity(total, total)).norm();
  if (unitarity > tol.residual_abs) {
    std::ostringstream os;
    os << "||u^dag u - I||_F = " << unitarity;
    throw Error(ErrorKind::NotUnitary, os.str());
  }

  const FactorDims dims{ns, ne};
  const ComplexMatrix joint = phi.projector();
  const ComplexMatrix rho_s = partial_trace(joint, dims, TraceOut::Second);
  const ComplexMatrix rho_e = partial_trace(joint, dims, TraceOut::First);
  const ComplexMatrix chi = joint - kron(rho_s, rho_e);
  const auto evolve_reduce = [&](const ComplexMatrix& x) -> ComplexMatrix {
    return partial_trace(u * x * u.adjoint(), dims, TraceOut::Second);
  };

  LinearMap linear = LinearMap::from_action(ns, [&](const ComplexMatrix& sigma) -> ComplexMatrix {
    return evolve_reduce(kron(sigma, rho_e));
  });
  const ComplexMatrix constant = evolve_reduce(chi);
  LinearMap tp_form = LinearMap::from_action(ns, [&](const ComplexMatrix& sigma) -> ComplexMatrix {
    return apply_map(linear, sigma) + sigma.trace() * constant;
  });
  const double consistency = (apply_map(tp_form, rho_s) - evolve_reduce(joint)).norm();
  return AffineDynamics{std::move(linear), constant, std::move(tp_form), rho_s, rho_e, consistency};
}

LinearMap ncp_family(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "ncp_family p outside [0, 1]");
  return (1.0 - p) * maps::depolarizing(2, 1.0) + p * maps::transpose(2);
}

}  // namespace extmap
