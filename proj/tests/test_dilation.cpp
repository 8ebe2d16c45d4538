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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "extmap/dilation.hpp"
#include "extmap/entangled.hpp"
#include "extmap/random.hpp"
#include "extmap/standard_maps.hpp"
#include "oracle.hpp"

using namespace extmap;

namespace {

ComplexMatrix eye(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("single identity Kraus operator gives the identity unitary") {
  const UnitaryDilation d = kraus_to_unitary(KrausSet{2, {eye(2)}, {}});
  CHECK(d.ancilla_dim == 1);
  CHECK((d.unitary - eye(2)).norm() < 1e-14);
}

TEST_CASE("single unitary Kraus operator is its own dilation") {
  random::Engine rng(51);
  const ComplexMatrix u0 = random::unitary(3, rng);
  const UnitaryDilation d = kraus_to_unitary(KrausSet{3, {u0}, {}});
  CHECK(d.ancilla_dim == 1);
  CHECK((d.unitary - u0).norm() < 1e-12);
}

TEST_CASE("amplitude damping") {
  const double gamma = 0.3;
  const KrausSet ad = maps::amplitude_damping_kraus(gamma);
  const UnitaryDilation d = kraus_to_unitary(ad);
  CHECK(d.ancilla_dim == 2);
  CHECK(d.unitary.rows() == 4);
  CHECK(d.unitarity_residual() <= 1e-12);
  // Column s*d + 0 stacks M_k[r, s] at row r*d + k.
  for (Eigen::Index s = 0; s < 2; ++s)
    for (Eigen::Index r = 0; r < 2; ++r)
      for (Eigen::Index k = 0; k < 2; ++k)
        CHECK(std::abs(d.unitary(r * 2 + k, s * 2) - ad.operators[k](r, s)) < 1e-14);

  const LinearMap map = maps::amplitude_damping(gamma);
  const DilationRoundTrip rt = dilation_round_trip(d, map, 50, 7);
  CHECK(rt.passed);
  CHECK(rt.max_residual <= 1e-9);

  random::Engine rng(52);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix rho = random::density_matrix(2, rng);
    CHECK((d.apply(rho) - oracle::kraus_apply(ad.operators, {1.0, 1.0}, rho)).norm() <= 1e-12);
  }

  const DilationRoundTrip wrong = dilation_round_trip(d, maps::transpose(2), 50, 7);
  CHECK_FALSE(wrong.passed);
  CHECK(wrong.max_residual > 1e-3);
}

TEST_CASE("dilate over the CPTP zoo and random channels") {
  random::Engine rng(53);
  std::vector<LinearMap> maps_in = {maps::identity(2),         maps::identity(3),
                                    maps::depolarizing(2, 0.4), maps::depolarizing(3, 1.0),
                                    maps::amplitude_damping(0.3), maps::amplitude_damping(1.0),
                                    maps::unitary_conjugation(random::unitary(3, rng)), ncp_family(0.2)};
  for (std::size_t n = 2; n <= 3; ++n)
    for (int i = 0; i < 20; ++i)
      maps_in.push_back(kraus_to_map(random::cptp_kraus(n, 1 + static_cast<std::size_t>(i) % (n * n), rng)));

  for (const LinearMap& m : maps_in) {
    const UnitaryDilation d = dilate(m);
    CHECK(d.system_dim == m.dim());
    CHECK(d.ancilla_dim <= m.dim() * m.dim());
    CHECK(d.ancilla_ref_index == 0);
    CHECK(d.unitarity_residual() <= 1e-10);
    const DilationRoundTrip rt = dilation_round_trip(d, m, 50, 11);
    CHECK(rt.passed);
    CHECK(rt.max_residual <= 1e-9);
  }
}

TEST_CASE("ancilla dimension equals the Choi rank") {
  CHECK(dilate(maps::identity(2)).ancilla_dim == 1);
  CHECK(dilate(maps::amplitude_damping(0.3)).ancilla_dim == 2);
  CHECK(dilate(maps::depolarizing(2, 1.0)).ancilla_dim == 4);
}

TEST_CASE("dilation failures") {
  CHECK(kind_of([] { kraus_to_unitary(KrausSet{2, {0.5 * eye(2)}, {}}); }) == ErrorKind::NotCompleteKraus);
  CHECK(kind_of([] { dilate(maps::transpose(2)); }) == ErrorKind::NotCompletelyPositive);
  CHECK(kind_of([] { dilate(ncp_family(0.5)); }) == ErrorKind::NotCompletelyPositive);
  CHECK(kind_of([] { dilate(0.5 * maps::identity(2)); }) == ErrorKind::NotTracePreserving);

  try {
    dilate(maps::transpose(2));
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("min Choi eigenvalue -") != std::string::npos);
  }
}

TEST_CASE("weighted Kraus sets are folded before stacking") {
  const KrausSet weighted{2, {eye(2), maps::pauli(3)}, {0.75, 0.25}};
  const UnitaryDilation d = kraus_to_unitary(weighted);
  CHECK(d.unitarity_residual() <= 1e-12);
  CHECK(dilation_round_trip(d, kraus_to_map(weighted), 20, 3).passed);
}
