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

#include <array>
#include <cmath>

#include "tetra/qcore.hpp"

namespace tetra {

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  BlochVector cross(const BlochVector& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  BlochVector normalized() const {
    const double r = norm();
    return {x / r, y / r, z / r};
  }
  std::array<double, 3> array() const { return {x, y, z}; }

  friend BlochVector operator+(BlochVector a, BlochVector b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend BlochVector operator-(BlochVector a, BlochVector b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend BlochVector operator-(BlochVector a) { return {-a.x, -a.y, -a.z}; }
  friend BlochVector operator*(double s, BlochVector a) { return {s * a.x, s * a.y, s * a.z}; }

  double distance(const BlochVector& o) const { return (*this - o).norm(); }
};

/// Unit vertices m_1..m_4 (1-based) of the reference regular tetrahedron:
/// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), each over sqrt(3).
inline BlochVector tetrahedron_vertex(int i) {
  static constexpr std::array<std::array<double, 3>, 4> kSigns = {
      {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  if (i < 1 || i > 4) throw ArgumentError("tetrahedron vertex index must be 1..4");
  const double s = 1.0 / std::sqrt(3.0);
  const auto& v = kSigns[static_cast<std::size_t>(i - 1)];
  return {s * v[0], s * v[1], s * v[2]};
}

/// Bloch vector of a 2x2 density matrix: (Tr rho X, Tr rho Y, Tr rho Z).
inline BlochVector bloch_of_density(const Matrix& rho) {
  if (rho.dim() != 2) throw ArgumentError("single-qubit density matrix expected");
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

/// Action of U on Bloch vectors: components of U (v.sigma) U^dagger.
inline BlochVector rotate_bloch(const Matrix& u, const BlochVector& v) {
  const Matrix s = gates::X() * v.x + gates::Y() * v.y + gates::Z() * v.z;
  const Matrix r = u * s * u.adjoint();
  // r = a.sigma, so r01 = ax - i ay and r10 = ax + i ay.
  return {0.5 * (r(0, 1) + r(1, 0)).real(), 0.5 * (r(1, 0) - r(0, 1)).imag(),
          0.5 * (r(0, 0) - r(1, 1)).real()};
}

}  // namespace tetra
