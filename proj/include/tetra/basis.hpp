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

// Tetrahedral group <Z_i Z_{i+1}, X^{(x)n}>, orbit bases and the measurement
// unitary whose column g is U_g|psi>.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "tetra/bloch_vector.hpp"
#include "tetra/fiducial.hpp"
#include "tetra/polynomial.hpp"
#include "tetra/qcore.hpp"

namespace tetra {

struct TetraGroup {
  std::size_t n = 0;
  std::vector<PauliString> elements;  // indexed by label g, g_1 most significant

  std::size_t size() const noexcept { return elements.size(); }
  const PauliString& operator[](std::size_t g) const { return elements[g]; }
};

/// Label g = (g_1..g_n) maps to (Z1Z2)^{g_1} ... (Z_{n-1}Z_n)^{g_{n-1}} (X^{(x)n})^{g_n},
/// multiplied left to right.
inline TetraGroup build_tetra_group(std::size_t n) {
  if (n < 2) throw ArgumentError("tetrahedral group needs n >= 2");
  if (n > kMaxQubits) throw CapacityError("tetrahedral group limited to 6 qubits");
  std::vector<PauliString> gens;
  for (std::size_t i = 1; i < n; ++i) {
    gens.push_back(single_pauli(n, i, Pauli::Z) * single_pauli(n, i + 1, Pauli::Z));
  }
  gens.emplace_back(std::vector<Pauli>(n, Pauli::X));

  TetraGroup out{n, {}};
  const std::size_t count = std::size_t{1} << n;
  out.elements.reserve(count);
  for (std::size_t g = 0; g < count; ++g) {
    PauliString u(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((g >> (n - 1 - i)) & 1u) u = u * gens[i];
    out.elements.push_back(u);
  }
  return out;
}

struct Basis {
  std::size_t n = 0;
  std::vector<StateVector> columns;   // column g = actions[g] |fiducial>
  std::vector<PauliString> actions;
  StateVector fiducial;
  std::optional<PhasePolynomial> polynomial;

  std::size_t size() const noexcept { return columns.size(); }
};

inline Basis orbit_basis(const StateVector& psi, const TetraGroup& group) {
  if (psi.dim() != (std::size_t{1} << group.n)) throw ArgumentError("fiducial dimension does not match the group");
  Basis b;
  b.n = group.n;
  b.fiducial = psi;
  b.actions = group.elements;
  b.columns.reserve(group.size());
  for (const auto& u : group.elements) b.columns.push_back(apply_pauli(u, psi));
  return b;
}

/// Orbit basis of the fiducial of f.
inline Basis basis_from_polynomial(const PhasePolynomial& f) {
  Basis b = orbit_basis(build_fiducial(f), build_tetra_group(f.qubits()));
  b.polynomial = f;
  return b;
}

struct OrthonormalityReport {
  bool ok = false;
  double max_violation = 0.0;
};

/// Largest deviation of the Gram matrix from the identity.
inline OrthonormalityReport check_orthonormal(const Basis& b, double eps = Tolerances{}.norm) {
  OrthonormalityReport rep;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) {
      const Complex g = inner(b.columns[i], b.columns[j]);
      const double v = i == j ? std::abs(g - 1.0) : std::abs(g);
      rep.max_violation = std::max(rep.max_violation, v);
    }
  }
  rep.ok = b.size() == (std::size_t{1} << b.n) && rep.max_violation <= eps;
  return rep;
}

inline Matrix basis_matrix(const Basis& b) {
  std::vector<std::vector<Complex>> cols;
  cols.reserve(b.size());
  for (const auto& c : b.columns) cols.push_back(c.vec());
  return Matrix::from_columns(cols);
}

/// M with M|g> = U_g|psi>.
inline Matrix measurement_unitary(const Basis& b, double eps = Tolerances{}.norm) {
  const auto rep = check_orthonormal(b, eps);
  if (!rep.ok) {
    throw StateError("basis is not orthonormal (violation " + std::to_string(rep.max_violation) + ")");
  }
  return basis_matrix(b);
}

/// |+m> = cos(t/2)|0> + sin(t/2) e^{i p}|1>, |-m> = sin(t/2)|0> - cos(t/2) e^{i p}|1>.
inline StateVector bloch_state(const BlochVector& m, int sign, double eps = 1e-9) {
  if (std::abs(m.norm() - 1.0) > eps) throw ArgumentError("Bloch direction must be a unit vector");
  if (sign != 1 && sign != -1) throw ArgumentError("sign must be +1 or -1");
  const double theta = std::acos(std::clamp(m.z, -1.0, 1.0));
  const double phi = std::atan2(m.y, m.x);
  const Complex e = std::polar(1.0, phi);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  if (sign > 0) return StateVector::normalized({c, s * e});
  return StateVector::normalized({s, -c * e});
}

/// Relabeling that matches every column of `a` to a column of `b` up to phase.
inline std::optional<std::vector<std::size_t>> bases_equal_up_to_relabeling(const Basis& a, const Basis& b,
                                                                            double eps = 1e-9) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<std::size_t> perm(a.size());
  std::vector<bool> used(b.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j]) continue;
      if (std::abs(std::abs(inner(a.columns[i], b.columns[j])) - 1.0) <= eps) {
        used[j] = true;
        perm[i] = j;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return perm;
}

/// Two-qubit reference basis a|m_i,-m_i> + b|-m_i,m_i> over the four vertices.
/// Column i is U|psi_1> for U in {II, XX, YY, ZZ}, identified numerically.
inline Basis ejm_reference_basis() {
  const double a = (std::sqrt(3.0) + 1) / (2 * std::sqrt(2.0));
  const double bcoef = (std::sqrt(3.0) - 1) / (2 * std::sqrt(2.0));
  Basis out;
  out.n = 2;
  for (int i = 1; i <= 4; ++i) {
    const BlochVector m = tetrahedron_vertex(i);
    const auto p = bloch_state(m, 1), q = bloch_state(m, -1);
    const auto pq = tensor_product(p, q), qp = tensor_product(q, p);
    std::vector<Complex> amps(4);
    for (std::size_t k = 0; k < 4; ++k) amps[k] = a * pq[k] + bcoef * qp[k];
    out.columns.push_back(StateVector::normalized(std::move(amps)));
  }
  out.fiducial = out.columns[0];
  const char* candidates[] = {"II", "XX", "YY", "ZZ"};
  for (const auto& col : out.columns) {
    bool found = false;
    for (const char* c : candidates) {
      const PauliString p = PauliString::parse(c);
      if (std::abs(std::abs(inner(apply_pauli(p, out.fiducial), col)) - 1.0) < 1e-9) {
        out.actions.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) throw StateError("reference basis is not a Pauli orbit");
  }
  return out;
}

/// The 4x4 computational-basis matrix listed for the two-qubit reference
/// measurement, normalized (the printed entries carry an overall sqrt 2).
inline Basis ejm_listed_matrix_basis() {
  const Complex i{0, 1};
  const Complex rows[4][4] = {
      {0.5 + 0.5 * i, -0.5 + 0.5 * i, 0.5 - 0.5 * i, -0.5 - 0.5 * i},
      {-i, 0, 0, -i},
      {0, i, i, 0},
      {0.5 - 0.5 * i, -0.5 - 0.5 * i, 0.5 + 0.5 * i, -0.5 + 0.5 * i},
  };
  Basis out;
  out.n = 2;
  for (std::size_t c = 0; c < 4; ++c) {
    std::vector<Complex> col(4);
    for (std::size_t r = 0; r < 4; ++r) col[r] = rows[r][c] / std::sqrt(2.0);
    out.columns.emplace_back(std::move(col));
  }
  out.fiducial = out.columns[0];
  return out;
}

/// Basis with every column (and the fiducial) replaced by U|.>; actions are
/// kept, so the result is only a Pauli orbit again when U is Clifford.
inline Basis transform_basis(const Basis& b, const Matrix& u) {
  Basis out = b;
  for (auto& c : out.columns) c = apply(u, c);
  out.fiducial = apply(u, b.fiducial);
  out.polynomial.reset();
  return out;
}

}  // namespace tetra
