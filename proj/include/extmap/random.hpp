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
#include <cstdint>
#include <random>

#include "extmap/map_repr.hpp"

/// Seeded random matrices, states and maps. Every generator takes the engine
/// explicitly so results are reproducible for a given seed.
namespace extmap::random {

using Engine = std::mt19937_64;

/// i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Engine& rng);

ComplexMatrix hermitian(std::size_t n, Engine& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix unitary(std::size_t n, Engine& rng);

/// (rows x cols) matrix with orthonormal columns, rows >= cols.
ComplexMatrix isometry(std::size_t rows, std::size_t cols, Engine& rng);

/// Full-rank mixed state G G^dag / Tr(G G^dag).
ComplexMatrix density_matrix(std::size_t n, Engine& rng);

/// Unit vector with Gaussian components.
ComplexVector pure_state(std::size_t n, Engine& rng);

/// Trace-preserving, Hermiticity-preserving map, generically not CP.
///
/// A random Hermitian B is drawn; if g = Tr_out(B) is positive definite the
/// input index is conjugated by g^{-1/2} so the trace condition holds exactly,
/// otherwise the draw is repeated.
LinearMap tp_map(std::size_t n, Engine& rng);

/// CPTP map with `kraus_count` operators taken from a random isometry.
KrausSet cptp_kraus(std::size_t n, std::size_t kraus_count, Engine& rng);

/// Trace-preserving NCP map whose K matrix has a kernel of dimension n - 1.
///
/// The negative eigenmatrices are |a_j><b| for a fixed unit vector b, and the
/// positive Kraus operators are built orthogonal to them, so the Choi
/// eigen-decomposition is known exactly; random unitaries on both sides then
/// hide the basis. Requires n >= 2.
LinearMap rank_deficient_k_map(std::size_t n, Engine& rng);

}  // namespace extmap::random
