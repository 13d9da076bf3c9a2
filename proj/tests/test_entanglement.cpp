// Copyright 2026 The tetra Authors
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


#include "test_util.hpp"

using namespace tetra;
using namespace tetra::testing;

namespace {

StateVector fiducial3(const char* poly) { return build_fiducial(parse_polynomial(poly, 3, 2)); }

const char* kRows[4][2] = {
    {"z1 z3 + 3 z2 z3 + z1 z2 z3", "3 z1 z3 + z2 z3 + 3 z1 z2 z3"},
    {"z1 z2 + z1 z3 + z2 z3 + 3 z1 z2 z3", "z1 z2 + z1 z3 + 3 z2 z3 + z1 z2 z3"},
    {"z1 z2 + 2 z1 z3 + z1 z2 z3", "2 z1 z2 + 2 z1 z3 + z1 z2 z3"},
    {"z1 z3 + z1 z2 z3", "2 z1 z3 + z1 z2 z3"},
};
const double kTangleSq[4] = {65, 97, 113, 145};

}  // namespace

TEST_CASE("three-tangle of simple states") {
  const double r = 1 / std::sqrt(2.0);
  StateVector ghz({r, 0, 0, 0, 0, 0, 0, r});
  CHECK(three_tangle(ghz) == doctest::Approx(1.0));
  CHECK(three_tangle(StateVector::basis(3, 0)) == 0.0);
  CHECK_THROWS_AS(three_tangle(StateVector::basis(2, 0)), ArgumentError);
}

TEST_CASE("concurrence of simple states") {
  const double r = 1 / std::sqrt(2.0);
  StateVector ghz({r, 0, 0, 0, 0, 0, 0, r});
  CHECK(pairwise_concurrence(ghz, 1, 2) == doctest::Approx(0.0));
  CHECK(pairwise_concurrence(ghz, 2, 3) == doctest::Approx(0.0));
  StateVector bell({r, 0, 0, r});
  CHECK(pairwise_concurrence(bell, 1, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(pairwise_concurrence(bell, 1, 1), ArgumentError);
  StateVector w({0, 1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 0, 1 / std::sqrt(3.0), 0, 0, 0});
  CHECK(pairwise_concurrence(w, 1, 3) == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("invariants of the eight three-qubit representatives") {
  for (int row = 0; row < 4; ++row)
    for (int e = 0; e < 2; ++e) {
      const auto psi = fiducial3(kRows[row][e]);
      const double t = std::sqrt(kTangleSq[row]);
      CHECK(three_tangle(psi) == doctest::Approx(t / 16).epsilon(1e-12));
      const auto c2 = pairwise_concurrence_sq(psi);
      REQUIRE(c2.size() == 3);
      for (double c : c2) {
        CHECK(std::abs(c - (13 - t) / 32) < 1e-10);
        CHECK(std::abs(c - c2[0]) < 1e-10);
        CHECK(c <= 1.0);
      }
      CHECK(three_tangle(psi) <= 1.0);
    }
}

TEST_CASE("permutation stabilizer orders") {
  CHECK(permutation_stabilizer_order(fiducial3(kRows[0][0])) == 6);
  CHECK(permutation_stabilizer_order(fiducial3(kRows[3][0])) == 2);
  CHECK(permutation_stabilizer_order(StateVector::basis(3, 0b001)) == 2);
  const std::size_t swap12[] = {1, 0, 2};
  CHECK(permute_qubits(StateVector::basis(3, 0b001), swap12)[0b001] == Complex{1.0});
  CHECK(permute_qubits(StateVector::basis(3, 0b100), swap12)[0b010] == Complex{1.0});
}

TEST_CASE("fingerprints") {
  const Basis row2 = basis_from_polynomial(parse_polynomial(kRows[1][0], 3, 2));
  const auto fp = invariant_fingerprint(row2);
  CHECK(*fp.tangle == doctest::Approx(std::sqrt(97.0) / 16).epsilon(1e-12));
  for (double c : fp.concurrence_sq) CHECK(c == doctest::Approx((13 - std::sqrt(97.0)) / 32).epsilon(1e-10));

  const auto ref = invariant_fingerprint(ejm_reference_basis());
  CHECK_FALSE(ref.tangle.has_value());
  CHECK(ref.concurrence_sq[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(*ref.r == doctest::Approx(kSqrt3 / 2).epsilon(1e-12));
  CHECK(ref.chirality == std::vector<int>{-1});

  const Basis row1 = basis_from_polynomial(parse_polynomial(kRows[0][0], 3, 2));
  const Basis conj = orbit_basis(conjugate_state(row1.fiducial), build_tetra_group(3));
  CHECK(class_key(invariant_fingerprint(row1)) == class_key(invariant_fingerprint(conj)));
}

TEST_CASE("tangle and concurrence are local-unitary invariant") {
  std::mt19937_64 rng(61);
  for (int row = 0; row < 4; ++row) {
    const auto psi = fiducial3(kRows[row][0]);
    const double t0 = three_tangle(psi);
    const auto c0 = pairwise_concurrence_sq(psi);
    for (int t = 0; t < 15; ++t) {
      const auto moved = apply_local_unitaries(psi, random_locals(3, rng));
      CHECK(std::abs(three_tangle(moved) - t0) < 1e-9);
      const auto c = pairwise_concurrence_sq(moved);
      for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(c[k] - c0[k]) < 1e-9);
    }
  }
}

TEST_CASE("conjugation keeps the tangle") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 20; ++t) {
    const auto psi = random_state(3, rng);
    CHECK(std::abs(three_tangle(conjugate_state(psi)) - three_tangle(psi)) < 1e-12);
  }
}
