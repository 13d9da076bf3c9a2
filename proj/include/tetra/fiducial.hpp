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

#pragma once

// Fiducial normal form |psi> = S(n) H_n D_f H^{(x)n} |0...0>, where D_f is
// the diagonal phase gate of a phase polynomial, H_n a Hadamard on the last
// qubit, and S(n) the CNOT staircase CNOT(2->1) ... CNOT(n->n-1).

#include <cmath>
#include <numbers>
#include <vector>

#include "tetra/polynomial.hpp"
#include "tetra/qcore.hpp"

namespace tetra {

/// exp(2 pi i v / 2^m)
inline Complex root_of_unity(std::uint64_t v, int m) {
  const std::uint64_t mod = std::uint64_t{1} << m;
  v %= mod;
  // Exact values on the axes keep m=2 constructions free of rounding.
  if ((v * 4) % mod == 0) {
    switch ((v * 4 / mod) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(mod));
}

inline std::vector<Complex> diagonal_phases(const PhasePolynomial& f) {
  const std::size_t d = std::size_t{1} << f.qubits();
  std::vector<Complex> out(d);
  for (std::size_t b = 0; b < d; ++b) out[b] = root_of_unity(f.evaluate_index(b), f.precision());
  return out;
}

inline Matrix diagonal_gate(const PhasePolynomial& f) { return Matrix::diagonal(diagonal_phases(f)); }

/// CNOT with 1-based control c and target t: flips bit t when bit c is 1.
inline Matrix cnot(std::size_t n, std::size_t control, std::size_t target) {
  if (control < 1 || control > n || target < 1 || target > n || control == target) {
    throw ArgumentError("invalid CNOT qubits");
  }
  const std::size_t d = std::size_t{1} << n;
  Matrix m(d);
  const std::size_t cbit = std::size_t{1} << (n - control), tbit = std::size_t{1} << (n - target);
  for (std::size_t b = 0; b < d; ++b) m((b & cbit) ? (b ^ tbit) : b, b) = 1.0;
  return m;
}

/// Index permutation of S(n): basis state b goes to staircase_image(b).
inline std::size_t staircase_image(std::size_t n, std::size_t b) {
  // CNOT(n->n-1) acts first, CNOT(2->1) last.
  for (std::size_t c = n; c >= 2; --c) {
    const std::size_t cbit = std::size_t{1} << (n - c), tbit = std::size_t{1} << (n - c + 1);
    if (b & cbit) b ^= tbit;
  }
  return b;
}

inline Matrix staircase_circuit(std::size_t n) {
  if (n < 1) throw ArgumentError("staircase needs n >= 1");
  const std::size_t d = std::size_t{1} << n;
  detail::check_dim(d);
  Matrix m(d);
  for (std::size_t b = 0; b < d; ++b) m(staircase_image(n, b), b) = 1.0;
  return m;
}

inline Matrix hadamard_all(std::size_t n) {
  Matrix h = gates::H();
  for (std::size_t k = 2; k <= n; ++k) h = tensor_product(h, gates::H());
  return h;
}

/// V = S(n) H_n D_f H^{(x)n}, so that V|0...0> is the fiducial.
inline Matrix fiducial_circuit(const PhasePolynomial& f) {
  const std::size_t n = f.qubits();
  return staircase_circuit(n) * gates::on_qubit(n, n, gates::H()) * diagonal_gate(f) * hadamard_all(n);
}

inline StateVector build_fiducial(const PhasePolynomial& f) {
  const std::size_t n = f.qubits();
  const std::size_t d = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> v = diagonal_phases(f);
  for (auto& x : v) x *= amp;
  // H on the last qubit pairs indices (2k, 2k+1).
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t b = 0; b < d; b += 2) {
    const Complex a0 = v[b], a1 = v[b + 1];
    v[b] = (a0 + a1) * s;
    v[b + 1] = (a0 - a1) * s;
  }
  std::vector<Complex> out(d);
  for (std::size_t b = 0; b < d; ++b) out[staircase_image(n, b)] = v[b];
  return StateVector::normalized(std::move(out));
}

}  // namespace tetra
