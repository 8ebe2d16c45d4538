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

#include "extmap/standard_maps.hpp"

#include <cmath>

namespace extmap::maps {

LinearMap identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return kraus_to_map(KrausSet{dim, {ComplexMatrix::Identity(n, n)}, {}});
}

LinearMap transpose(std::size_t dim) {
  return LinearMap::from_action(dim, [](const ComplexMatrix& x) -> ComplexMatrix { return x.transpose(); });
}

LinearMap depolarizing(std::size_t dim, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "depolarizing p outside [0, 1]");
  const auto n = static_cast<Eigen::Index>(dim);
  return LinearMap::from_action(dim, [=](const ComplexMatrix& x) -> ComplexMatrix {
    return (1.0 - p) * x + p * x.trace() * ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  });
}

LinearMap unitary_conjugation(const ComplexMatrix& u) {
  require_square(u, "unitary");
  return kraus_to_map(KrausSet{static_cast<std::size_t>(u.rows()), {u}, {}});
}

KrausSet amplitude_damping_kraus(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(ErrorKind::InvalidArgument, "damping gamma outside [0, 1]");
  ComplexMatrix keep = ComplexMatrix::Zero(2, 2);
  keep(0, 0) = 1.0;
  keep(1, 1) = std::sqrt(1.0 - gamma);
  ComplexMatrix decay = ComplexMatrix::Zero(2, 2);
  decay(0, 1) = std::sqrt(gamma);
  return KrausSet{2, {keep, decay}, {}};
}

LinearMap amplitude_damping(double gamma) { return kraus_to_map(amplitude_damping_kraus(gamma)); }

ComplexMatrix pauli(int index) {
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  switch (index) {
    case 0: s(0, 0) = 1.0; s(1, 1) = 1.0; break;
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = Complex(0, -1); s(1, 0) = Complex(0, 1); break;
    case 3: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    default: throw Error(ErrorKind::InvalidArgument, "Pauli index must be 0..3");
  }
  return s;
}

}  // namespace extmap::maps
