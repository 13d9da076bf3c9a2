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

// Single-qubit Bloch geometry of a basis: the table b_l(g), its shape class
// per qubit, and relational chirality between qubits.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "tetra/basis.hpp"
#include "tetra/bloch_vector.hpp"
#include "tetra/qcore.hpp"

namespace tetra {

inline BlochVector bloch_vector(const StateVector& psi, std::size_t l) {
  return bloch_of_density(partial_trace(psi, {l}));
}

struct BlochTable {
  std::size_t n = 0;
  std::vector<std::vector<BlochVector>> vectors;  // [qubit-1][g]
  std::vector<std::vector<Pauli>> letters;        // [qubit-1][g]; empty when the basis has no actions

  std::size_t columns() const { return vectors.empty() ? 0 : vectors[0].size(); }
  bool has_letters() const { return !letters.empty(); }
};

inline BlochTable basis_bloch_table(const Basis& b) {
  BlochTable t;
  t.n = b.n;
  t.vectors.assign(b.n, {});
  for (std::size_t l = 1; l <= b.n; ++l)
    for (const auto& c : b.columns) t.vectors[l - 1].push_back(bloch_vector(c, l));
  if (b.actions.size() == b.columns.size() && !b.actions.empty()) {
    t.letters.assign(b.n, {});
    for (std::size_t l = 0; l < b.n; ++l)
      for (const auto& a : b.actions) t.letters[l].push_back(a[l]);
  }
  return t;
}

enum class GeometryClass { regular_tetrahedron, disphenoid, planar_rectangle, collinear, degenerate };

inline std::string to_string(GeometryClass c) {
  switch (c) {
    case GeometryClass::regular_tetrahedron: return "regular_tetrahedron";
    case GeometryClass::disphenoid: return "disphenoid";
    case GeometryClass::planar_rectangle: return "planar_rectangle";
    case GeometryClass::collinear: return "collinear";
    default: return "degenerate";
  }
}

struct GeometryReport {
  std::vector<GeometryClass> classes;            // per qubit
  std::vector<double> lengths;                   // per qubit; NaN if lengths differ across columns
  std::optional<double> r;                       // common length over all qubits and columns
  std::vector<std::vector<BlochVector>> lines;   // per qubit, one unit direction per line
  std::vector<std::vector<int>> chirality;       // n x n, 0 = undefined
  bool nonzero_components = false;

  bool all_regular() const {
    return !classes.empty() &&
           std::all_of(classes.begin(), classes.end(), [](auto c) { return c == GeometryClass::regular_tetrahedron; });
  }

  /// Pair signs (k<l) sorted ascending.
  std::vector<int> chirality_signature() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < chirality.size(); ++k)
      for (std::size_t l = k + 1; l < chirality.size(); ++l) out.push_back(chirality[k][l]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Pair signs (k<l) in pair order (1,2),(1,3),...,(n-1,n).
  std::vector<int> chirality_pairs() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < chirality.size(); ++k)
      for (std::size_t l = k + 1; l < chirality.size(); ++l) out.push_back(chirality[k][l]);
    return out;
  }
};

namespace detail {

using Mat3 = std::array<std::array<double, 3>, 3>;

inline double det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

inline Mat3 inverse3(const Mat3& a) {
  const double d = det3(a);
  Mat3 inv{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      inv[r][c] = (a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]) / d;
    }
  return inv;
}

inline Mat3 mul3(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k) out[r][c] += a[r][k] * b[k][c];
  return out;
}

inline BlochVector apply3(const Mat3& a, const BlochVector& v) {
  return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z, a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
          a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
}

// Columns are the given vectors.
inline Mat3 columns3(const BlochVector& a, const BlochVector& b, const BlochVector& c) {
  return {{{a.x, b.x, c.x}, {a.y, b.y, c.y}, {a.z, b.z, c.z}}};
}

// Direction lines (v ~ -v) of nonzero vectors, in first-seen order, each
// with its sign fixed so the first nonzero component is positive.
inline std::vector<BlochVector> direction_lines(const std::vector<BlochVector>& vs, double eps) {
  std::vector<BlochVector> lines;
  for (const auto& v : vs) {
    if (v.norm() <= eps) continue;
    const BlochVector u = v.normalized();
    bool seen = false;
    for (const auto& w : lines)
      if (std::abs(std::abs(u.dot(w)) - 1.0) <= eps) seen = true;
    if (seen) continue;
    const auto a = u.array();
    double lead = 0.0;
    for (double x : a)
      if (std::abs(x) > eps) {
        lead = x;
        break;
      }
    lines.push_back(lead < 0 ? -u : u);
  }
  return lines;
}

}  // namespace detail

struct ChiralityResult {
  int sign = 0;
  detail::Mat3 map{};
};

/// Orthogonal O with O b_k = b_l on matched vertices; sign = sign(det O).
/// Vertices are matched by the Pauli letter each group element applies to
/// the qubit when the table carries letters, by column index otherwise.
inline ChiralityResult relational_chirality(const BlochTable& t, std::size_t k, std::size_t l,
                                            double eps = Tolerances{}.geo) {
  if (k < 1 || k > t.n || l < 1 || l > t.n) throw ArgumentError("qubit index out of range");
  std::vector<BlochVector> from, to;
  if (t.has_letters()) {
    for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      std::optional<BlochVector> a, b;
      for (std::size_t g = 0; g < t.columns(); ++g) {
        if (!a && t.letters[k - 1][g] == p) a = t.vectors[k - 1][g];
        if (!b && t.letters[l - 1][g] == p) b = t.vectors[l - 1][g];
      }
      if (a && b) {
        from.push_back(*a);
        to.push_back(*b);
      }
    }
  } else {
    from = t.vectors[k - 1];
    to = t.vectors[l - 1];
  }
  if (from.size() < 3) throw StateError("degenerate geometry: fewer than three vertices");

  // Unit-length frames so O can be orthogonal even when lengths differ.
  auto unit = [&](const BlochVector& v) {
    if (v.norm() <= eps) throw StateError("degenerate geometry: zero Bloch vector");
    return v.normalized();
  };
  std::size_t best[3] = {0, 0, 0};
  double best_det = 0.0;
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = a + 1; b < from.size(); ++b)
      for (std::size_t c = b + 1; c < from.size(); ++c) {
        const double d = std::abs(detail::det3(detail::columns3(unit(from[a]), unit(from[b]), unit(from[c]))));
        if (d > best_det + 1e-12) {
          best_det = d;
          best[0] = a, best[1] = b, best[2] = c;
        }
      }
  if (best_det <= eps) throw StateError("degenerate geometry: no three independent vertices");

  const detail::Mat3 fk = detail::columns3(unit(from[best[0]]), unit(from[best[1]]), unit(from[best[2]]));
  const detail::Mat3 fl = detail::columns3(unit(to[best[0]]), unit(to[best[1]]), unit(to[best[2]]));
  ChiralityResult res;
  res.map = detail::mul3(fl, detail::inverse3(fk));

  const double tol = std::max(eps, 1e-7);
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (detail::apply3(res.map, unit(from[i])).distance(unit(to[i])) > tol) {
      throw StateError("inconsistent geometry: no linear map aligns the two qubits");
    }
  }
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      double s = 0.0;
      for (int j = 0; j < 3; ++j) s += res.map[j][r] * res.map[j][c];
      if (std::abs(s - (r == c ? 1.0 : 0.0)) > tol) throw StateError("inconsistent geometry: aligning map is not orthogonal");
    }
  res.sign = detail::det3(res.map) > 0 ? 1 : -1;
  return res;
}

inline GeometryReport classify_geometry(const BlochTable& t, double eps = Tolerances{}.geo) {
  GeometryReport rep;
  rep.classes.resize(t.n);
  rep.lengths.resize(t.n);
  rep.lines.resize(t.n);
  rep.nonzero_components = true;
  bool common = true;
  double r0 = -1.0;
  for (std::size_t q = 0; q < t.n; ++q) {
    const auto& vs = t.vectors[q];
    double lo = 1e300, hi = -1e300;
    for (const auto& v : vs) {
      lo = std::min(lo, v.norm());
      hi = std::max(hi, v.norm());
      for (double c : v.array())
        if (std::abs(c) <= eps) rep.nonzero_components = false;
    }
    const bool equal = hi - lo <= eps;
    rep.lengths[q] = equal ? 0.5 * (lo + hi) : std::nan("");
    if (!equal) common = false;
    else if (r0 < 0) r0 = rep.lengths[q];
    else if (std::abs(rep.lengths[q] - r0) > eps) common = false;

    rep.lines[q] = detail::direction_lines(vs, eps);
    const auto& ls = rep.lines[q];
    if (!equal || hi <= eps) {
      rep.classes[q] = GeometryClass::degenerate;
    } else if (ls.size() == 1) {
      rep.classes[q] = GeometryClass::collinear;
    } else if (ls.size() == 2) {
      rep.classes[q] = GeometryClass::planar_rectangle;
    } else if (ls.size() == 4) {
      bool regular = true;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
          if (std::abs(std::abs(ls[a].dot(ls[b])) - 1.0 / 3.0) > eps) regular = false;
      rep.classes[q] = regular ? GeometryClass::regular_tetrahedron : GeometryClass::disphenoid;
    } else {
      rep.classes[q] = GeometryClass::degenerate;
    }
  }
  if (common && r0 >= 0) rep.r = r0;

  rep.chirality.assign(t.n, std::vector<int>(t.n, 0));
  for (std::size_t k = 0; k < t.n; ++k) {
    if (rep.classes[k] != GeometryClass::regular_tetrahedron) continue;
    rep.chirality[k][k] = 1;
    for (std::size_t l = k + 1; l < t.n; ++l) {
      if (rep.classes[l] != GeometryClass::regular_tetrahedron) continue;
      try {
        const int s = relational_chirality(t, k + 1, l + 1, eps).sign;
        rep.chirality[k][l] = rep.chirality[l][k] = s;
      } catch (const StateError&) {
      }
    }
  }
  return rep;
}

inline GeometryReport classify_basis(const Basis& b, double eps = Tolerances{}.geo) {
  return classify_geometry(basis_bloch_table(b), eps);
}

inline StateVector conjugate_state(const StateVector& psi) {
  std::vector<Complex> out(psi.vec());
  for (auto& a : out) a = std::conj(a);
  return StateVector(std::move(out), 1e-8);
}

inline Matrix local_operator(std::span<const Matrix> us, double eps = Tolerances{}.unitary) {
  if (us.empty()) throw ArgumentError("need at least one local factor");
  for (const auto& u : us) {
    if (u.dim() != 2) throw ArgumentError("local factors must be 2x2");
    if (!u.is_unitary(eps)) throw ArgumentError("local factor is not unitary");
  }
  Matrix out = us[0];
  for (std::size_t i = 1; i < us.size(); ++i) out = tensor_product(out, us[i]);
  return out;
}

/// (U_1 (x) ... (x) U_n)|psi>, applied one qubit at a time.
inline StateVector apply_local_unitaries(const StateVector& psi, std::span<const Matrix> us,
                                         double eps = Tolerances{}.unitary) {
  const std::size_t n = psi.qubits();
  if (us.size() != n) throw ArgumentError("need one local factor per qubit");
  for (const auto& u : us) {
    if (u.dim() != 2) throw ArgumentError("local factors must be 2x2");
    if (!u.is_unitary(eps)) throw ArgumentError("local factor is not unitary");
  }
  std::vector<Complex> v(psi.vec());
  for (std::size_t q = 1; q <= n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - q);
    const Matrix& u = us[q - 1];
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (b & bit) continue;
      const Complex a0 = v[b], a1 = v[b | bit];
      v[b] = u(0, 0) * a0 + u(0, 1) * a1;
      v[b | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
  return StateVector(std::move(v), 1e-8);
}

inline Basis apply_local_unitaries(const Basis& b, std::span<const Matrix> us, double eps = Tolerances{}.unitary) {
  Basis out = b;
  for (auto& c : out.columns) c = apply_local_unitaries(c, us, eps);
  out.fiducial = apply_local_unitaries(b.fiducial, us, eps);
  out.polynomial.reset();
  return out;
}

/// Sign pattern of index s: bit (n-l) set means qubit l takes -dirs_l.
inline std::string sign_pattern(std::size_t n, std::size_t s) {
  std::string out;
  for (std::size_t l = 1; l <= n; ++l) out += ((s >> (n - l)) & 1u) ? '-' : '+';
  return out;
}

inline StateVector tetra_product_state(std::span<const BlochVector> dirs, std::size_t s) {
  const std::size_t n = dirs.size();
  StateVector out = bloch_state(dirs[0], ((s >> (n - 1)) & 1u) ? -1 : 1);
  for (std::size_t l = 2; l <= n; ++l) out = tensor_product(out, bloch_state(dirs[l - 1], ((s >> (n - l)) & 1u) ? -1 : 1));
  return out;
}

/// Coefficients c_s = <s|psi> in the product basis (x)_l {|+dirs_l>, |-dirs_l>}.
inline std::vector<Complex> tetra_product_decomposition(const StateVector& psi, std::span<const BlochVector> dirs) {
  const std::size_t n = psi.qubits();
  if (dirs.size() != n) throw ArgumentError("need one direction per qubit");
  std::vector<Complex> out(psi.dim());
  for (std::size_t s = 0; s < psi.dim(); ++s) out[s] = inner(tetra_product_state(dirs, s), psi);
  return out;
}

inline std::vector<Complex> tetra_product_reconstruct(std::span<const Complex> coeffs,
                                                      std::span<const BlochVector> dirs) {
  std::vector<Complex> out(coeffs.size());
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    const auto v = tetra_product_state(dirs, s);
    for (std::size_t b = 0; b < out.size(); ++b) out[b] += coeffs[s] * v[b];
  }
  return out;
}

}  // namespace tetra
