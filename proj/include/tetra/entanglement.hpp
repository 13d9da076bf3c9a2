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

// Local-unitary invariants: three-tangle, pairwise concurrence, and the
// order of the qubit-permutation stabilizer.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tetra/basis.hpp"
#include "tetra/geometry.hpp"
#include "tetra/qcore.hpp"

namespace tetra {

/// 4|d1 - 2 d2 + 4 d3| over the raw amplitudes a_ijk (no conjugates).
inline double three_tangle(const StateVector& psi) {
  if (psi.dim() != 8) throw ArgumentError("three-tangle needs a three-qubit state");
  auto a = [&](int i) { return psi[static_cast<std::size_t>(i)]; };
  const Complex d1 = a(0) * a(0) * a(7) * a(7) + a(1) * a(1) * a(6) * a(6) + a(2) * a(2) * a(5) * a(5) +
                     a(4) * a(4) * a(3) * a(3);
  const Complex d2 = a(0) * a(7) * (a(3) * a(4) + a(5) * a(2) + a(6) * a(1)) + a(3) * a(4) * a(5) * a(2) +
                     a(3) * a(4) * a(6) * a(1) + a(5) * a(2) * a(6) * a(1);
  const Complex d3 = a(0) * a(6) * a(5) * a(3) + a(7) * a(1) * a(2) * a(4);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

/// Concurrence max(0, s1 - s2 - s3 - s4) for the (k, l) marginal.
///
/// With rho = V V^dagger (V = eigenvectors scaled by sqrt p, directions with
/// p <= eps_psd dropped), the s_i are the singular values of the symmetric
/// matrix V^T (Y (x) Y) V, i.e. the square roots of the eigenvalues of
/// rho rho~. They are read off as the top eigenvalues of the Hermitian
/// matrix [[0, T], [T^dagger, 0]], which keeps structural zeros at rounding
/// level instead of the square root of rounding level.
inline double pairwise_concurrence(const StateVector& psi, std::size_t k, std::size_t l,
                                   const Tolerances& tol = {}) {
  const std::size_t n = psi.qubits();
  if (k == l) throw ArgumentError("concurrence needs two distinct qubits");
  if (k < 1 || l < 1 || k > n || l > n) throw ArgumentError("qubit index out of range");
  if (n == 2) {
    const double c = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    return std::clamp(c, 0.0, 1.0);
  }
  const Matrix rho = partial_trace(psi, {k, l});
  const EigenSystem es = hermitian_eig(rho, std::max(tol.eig, 1e-12));
  if (es.values.back() < -tol.psd) throw StateError("marginal is not positive semidefinite");

  Matrix v(4);
  for (std::size_t j = 0; j < 4; ++j) {
    if (es.values[j] <= tol.psd) continue;
    const double w = std::sqrt(es.values[j]);
    for (std::size_t r = 0; r < 4; ++r) v(r, j) = w * es.vectors(r, j);
  }
  const Matrix yy = tensor_product(gates::Y(), gates::Y());
  Matrix vt(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) vt(r, c) = v(c, r);
  const Matrix t = vt * yy * v;

  Matrix bordered(8);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      bordered(r, c + 4) = t(r, c);
      bordered(c + 4, r) = std::conj(t(r, c));
    }
  const EigenSystem bs = hermitian_eig(bordered, 1e-12);
  double c = bs.values[0];
  for (std::size_t i = 1; i < 4; ++i) c -= std::max(bs.values[i], 0.0);
  return std::clamp(c, 0.0, 1.0);
}

/// Permutes qubit wires: the qubit at 1-based position i moves to perm[i-1]+1.
inline StateVector permute_qubits(const StateVector& psi, std::span<const std::size_t> perm) {
  const std::size_t n = psi.qubits();
  if (perm.size() != n) throw ArgumentError("permutation length differs from qubit count");
  std::vector<Complex> out(psi.dim());
  for (std::size_t b = 0; b < psi.dim(); ++b) {
    std::size_t nb = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((b >> (n - 1 - i)) & 1u) nb |= std::size_t{1} << (n - 1 - perm[i]);
    out[nb] = psi[b];
  }
  return StateVector(std::move(out), 1e-8);
}

inline int permutation_stabilizer_order(const StateVector& psi, double eps = 1e-9) {
  const std::size_t n = psi.qubits();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    if (std::abs(inner(psi, permute_qubits(psi, perm))) >= 1.0 - eps) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

struct InvariantFingerprint {
  std::optional<double> tangle;          // n = 3 only
  std::vector<double> concurrence_sq;    // one per pair, ascending
  std::optional<double> r;               // common Bloch length
  std::vector<int> chirality;            // pair signs, ascending
  int stab_order = 0;
  std::optional<bool> conjugate_flag;    // set by class grouping
};

/// Concurrence squared for every pair (k<l), in pair order.
inline std::vector<double> pairwise_concurrence_sq(const StateVector& psi, const Tolerances& tol = {}) {
  std::vector<double> out;
  const std::size_t n = psi.qubits();
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = k + 1; l <= n; ++l) {
      const double c = pairwise_concurrence(psi, k, l, tol);
      out.push_back(c * c);
    }
  return out;
}

inline InvariantFingerprint invariant_fingerprint(const Basis& b, const GeometryReport& geo,
                                                  const Tolerances& tol = {}) {
  InvariantFingerprint fp;
  if (b.n == 3) fp.tangle = three_tangle(b.fiducial);
  fp.concurrence_sq = pairwise_concurrence_sq(b.fiducial, tol);
  std::sort(fp.concurrence_sq.begin(), fp.concurrence_sq.end());
  fp.r = geo.r;
  fp.chirality = geo.chirality_signature();
  fp.stab_order = permutation_stabilizer_order(b.fiducial);
  return fp;
}

inline InvariantFingerprint invariant_fingerprint(const Basis& b, const Tolerances& tol = {}) {
  return invariant_fingerprint(b, classify_basis(b, tol.geo), tol);
}

namespace detail {

inline std::string key_number(double x) {
  char buf[48];
  double v = std::round(x * 1e10) / 1e10;
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

}  // namespace detail

/// Rounded (tangle, sorted C^2, r) key used to group search hits before LC
/// clustering. Chirality and stabilizer order are not part of it: both can
/// differ between LC-equivalent members.
inline std::string class_key(const InvariantFingerprint& fp) {
  std::string key = "t=" + (fp.tangle ? detail::key_number(*fp.tangle) : std::string("-"));
  key += ";c2=";
  for (std::size_t i = 0; i < fp.concurrence_sq.size(); ++i) {
    if (i) key += ',';
    key += detail::key_number(fp.concurrence_sq[i]);
  }
  key += ";r=" + (fp.r ? detail::key_number(*fp.r) : std::string("-"));
  return key;
}

}  // namespace tetra
