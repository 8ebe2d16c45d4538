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

#include "extmap/map_repr.hpp"

namespace extmap::maps {

LinearMap identity(std::size_t dim);

/// rho -> rho^T. Trace preserving and positive, but not completely positive.
LinearMap transpose(std::size_t dim);

/// rho -> (1 - p) rho + p Tr(rho) I / N.
LinearMap depolarizing(std::size_t dim, double p);

/// rho -> u rho u^dag.
LinearMap unitary_conjugation(const ComplexMatrix& u);

/// Qubit amplitude damping with decay probability gamma.
KrausSet amplitude_damping_kraus(double gamma);
LinearMap amplitude_damping(double gamma);

/// Pauli matrices sigma_0..sigma_3.
ComplexMatrix pauli(int index);

}  // namespace extmap::maps
