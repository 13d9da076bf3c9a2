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

// Dense complex linear algebra for registers of up to six qubits, plus the
// Pauli-string algebra used by the tetrahedral group.
//
// Bit ordering is global: qubit 1 is the most significant bit of a
// computational-basis index, so |z1 z2 ... zn> sits at index
// z1*2^(n-1) + ... + zn.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tetra {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 6;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;
inline constexpr std::size_t kMaxEigDim = 16;

struct Tolerances {
  double norm = 1e-10;
  double unitary = 1e-10;
  double psd = 1e-9;
  double eig = 1e-10;
  double geo = 1e-8;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class StateError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

inline std::size_t log2_exact(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

inline void check_dim(std::size_t dim) {
  if (!is_power_of_two(dim)) {
    throw ArgumentError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  if (dim > kMaxDim) {
    throw CapacityError("dimension " + std::to_string(dim) + " exceeds 2^" +
                        std::to_string(kMaxQubits));
  }
}

inline int parity(std::uint64_t x) { return __builtin_parityll(x); }

}  // namespace detail

/// Dense square complex matrix in row-major order. Used for unitaries,
/// density matrices and general Hermitian grids.
class Matrix {
 public:
  Matrix() = default;

  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) { detail::check_dim(dim); }

  Matrix(std::size_t dim, std::initializer_list<Complex> row_major) : Matrix(dim) {
    if (row_major.size() != dim * dim) {
      throw ArgumentError("matrix literal has wrong number of entries");
    }
    std::copy(row_major.begin(), row_major.end(), data_.begin());
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::span<const Complex> entries) {
    Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const std::vector<Complex>> columns) {
    Matrix m(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != columns.size()) throw ArgumentError("column length mismatch");
      for (std::size_t r = 0; r < columns.size(); ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t qubits() const { return detail::log2_exact(dim_); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }

  std::vector<Complex> column(std::size_t c) const {
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Matrix conj() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = std::conj(x);
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_sq() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return s;
  }

  double max_abs_diff(const Matrix& other) const {
    if (other.dim_ != dim_) throw ArgumentError("dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) d = std::max(d, std::abs(data_[i] - other.data_[i]));
    return d;
  }

  bool is_hermitian(double eps) const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = r; c < dim_; ++c)
        if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > eps) return false;
    return true;
  }

  /// Largest entry of |U^dagger U - I|.
  double unitarity_violation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < dim_; ++k) s += std::conj((*this)(k, i)) * (*this)(k, j);
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    }
    return worst;
  }

  bool is_unitary(double eps) const { return unitarity_violation() <= eps; }

  Matrix& operator+=(const Matrix& o) {
    if (o.dim_ != dim_) throw ArgumentError("dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    if (o.dim_ != dim_) throw ArgumentError("dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw ArgumentError("dimension mismatch");
    const std::size_t d = a.dim_;
    Matrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) {
        const Complex x = a(r, k);
        if (x == Complex{}) continue;
        for (std::size_t c = 0; c < d; ++c) out(r, c) += x * b(k, c);
      }
    }
    return out;
  }

  std::vector<Complex> apply(std::span<const Complex> v) const {
    if (v.size() != dim_) throw ArgumentError("dimension mismatch");
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      Complex s = 0.0;
      for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Normalized pure state of n qubits.
class StateVector {
 public:
  StateVector() = default;

  /// Takes amplitudes that must already be normalized within `eps`.
  explicit StateVector(std::vector<Complex> amps, double eps = Tolerances{}.norm)
      : amps_(std::move(amps)) {
    detail::check_dim(amps_.size());
    const double nrm = std::sqrt(norm_sq());
    if (std::abs(nrm - 1.0) > eps) {
      throw ArgumentError("state vector is not normalized (norm " + std::to_string(nrm) + ")");
    }
  }

  static StateVector normalized(std::vector<Complex> amps) {
    detail::check_dim(amps.size());
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    if (s == 0.0) throw ArgumentError("cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(s);
    for (auto& a : amps) a *= inv;
    return StateVector(std::move(amps));
  }

  static StateVector basis(std::size_t n, std::size_t index) {
    std::vector<Complex> amps(std::size_t{1} << n);
    if (index >= amps.size()) throw ArgumentError("basis index out of range");
    amps[index] = 1.0;
    return StateVector(std::move(amps));
  }

  std::size_t dim() const noexcept { return amps_.size(); }
  std::size_t qubits() const { return detail::log2_exact(amps_.size()); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amps() const noexcept { return amps_; }
  const std::vector<Complex>& vec() const noexcept { return amps_; }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

 private:
  std::vector<Complex> amps_;
};

/// <a|b>
inline Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw ArgumentError("dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline Complex inner(const StateVector& a, const StateVector& b) { return inner(a.amps(), b.amps()); }

/// Applies a unitary; the result is renormalized only through the unitarity
/// check, so a non-unitary matrix is rejected by the StateVector invariant.
inline StateVector apply(const Matrix& u, const StateVector& psi) {
  return StateVector(u.apply(psi.amps()), 1e-8);
}

inline Matrix tensor_product(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  if (da * db > kMaxDim) throw CapacityError("tensor product exceeds 2^6 dimensions");
  Matrix out(da * db);
  for (std::size_t ra = 0; ra < da; ++ra)
    for (std::size_t ca = 0; ca < da; ++ca) {
      const Complex x = a(ra, ca);
      if (x == Complex{}) continue;
      for (std::size_t rb = 0; rb < db; ++rb)
        for (std::size_t cb = 0; cb < db; ++cb) out(ra * db + rb, ca * db + cb) = x * b(rb, cb);
    }
  return out;
}

inline StateVector tensor_product(const StateVector& a, const StateVector& b) {
  if (a.dim() * b.dim() > kMaxDim) throw CapacityError("tensor product exceeds 2^6 dimensions");
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return StateVector(std::move(out), 1e-8);
}

/// Reduced density matrix of |psi><psi| on the 1-based qubits in `keep`.
/// The kept qubits keep their relative order, the first listed becoming the
/// most significant bit of the result.
inline Matrix partial_trace(const StateVector& psi, std::span<const std::size_t> keep) {
  const std::size_t n = psi.qubits();
  if (keep.empty()) throw ArgumentError("partial trace needs a nonempty keep set");
  std::uint64_t keep_mask = 0;
  for (std::size_t q : keep) {
    if (q < 1 || q > n) throw ArgumentError("qubit index " + std::to_string(q) + " outside 1.." + std::to_string(n));
    const std::uint64_t bit = std::uint64_t{1} << (n - q);
    if (keep_mask & bit) throw ArgumentError("duplicate qubit in keep set");
    keep_mask |= bit;
  }
  const std::size_t k = keep.size();
  const std::size_t dk = std::size_t{1} << k;
  const std::size_t dim = psi.dim();

  // Split each index into (kept bits in `keep` order, traced remainder).
  std::vector<std::size_t> kept_index(dim), rest_index(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t ki = 0;
    for (std::size_t j = 0; j < k; ++j) ki = (ki << 1) | ((b >> (n - keep[j])) & 1u);
    kept_index[b] = ki;
    std::size_t ri = 0;
    for (std::size_t q = 1; q <= n; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << (n - q);
      if (!(keep_mask & bit)) ri = (ri << 1) | ((b & bit) ? 1u : 0u);
    }
    rest_index[b] = ri;
  }
  const std::size_t dr = dim / dk;
  std::vector<Complex> grid(dk * dr);
  for (std::size_t b = 0; b < dim; ++b) grid[kept_index[b] * dr + rest_index[b]] = psi[b];

  Matrix rho(dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      Complex s = 0.0;
      for (std::size_t r = 0; r < dr; ++r) s += grid[i * dr + r] * std::conj(grid[j * dr + r]);
      rho(i, j) = s;
    }
  return rho;
}

inline Matrix partial_trace(const StateVector& psi, std::initializer_list<std::size_t> keep) {
  return partial_trace(psi, std::span<const std::size_t>(keep.begin(), keep.size()));
}

// ---------------------------------------------------------------------------
// Pauli strings

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw ArgumentError(std::string("not a Pauli letter: ") + c);
  }
}

inline bool pauli_has_x(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
inline bool pauli_has_z(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

/// Single-qubit product a*b as (letter, power of i).
inline std::pair<Pauli, int> multiply_letters(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  const Pauli c = static_cast<Pauli>(6 - ia - ib);
  const bool cyclic = (ia % 3) + 1 == ib;  // X->Y, Y->Z, Z->X
  return {c, cyclic ? 1 : 3};
}

/// n-qubit Pauli operator i^phase * P1 (x) ... (x) Pn.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : letters_(n, Pauli::I) {}
  PauliString(std::vector<Pauli> letters, int phase = 0)
      : letters_(std::move(letters)), phase_(((phase % 4) + 4) % 4) {}

  /// Accepts e.g. "XZ", "+XZ", "-YY", "iXI", "-iZ".
  static PauliString parse(std::string_view text) {
    int phase = 0;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') phase = 2;
      ++i;
    }
    if (i < text.size() && text[i] == 'i') {
      phase += 1;
      ++i;
    }
    std::vector<Pauli> letters;
    for (; i < text.size(); ++i) letters.push_back(pauli_from_char(text[i]));
    return PauliString(std::move(letters), phase);
  }

  std::size_t size() const noexcept { return letters_.size(); }
  Pauli operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Pauli>& letters() const noexcept { return letters_; }
  int phase() const noexcept { return phase_; }
  Complex phase_value() const {
    static constexpr std::array<Complex, 4> kPow = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                                    Complex{0, -1}};
    return kPow[phase_];
  }

  std::string letters_string() const {
    std::string s;
    for (auto p : letters_) s += pauli_char(p);
    return s;
  }

  std::string to_string() const {
    static constexpr std::array<const char*, 4> kPrefix = {"+", "+i", "-", "-i"};
    return kPrefix[phase_] + letters_string();
  }

  std::uint64_t x_mask() const {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < letters_.size(); ++q)
      if (pauli_has_x(letters_[q])) m |= std::uint64_t{1} << (letters_.size() - 1 - q);
    return m;
  }
  std::uint64_t z_mask() const {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < letters_.size(); ++q)
      if (pauli_has_z(letters_[q])) m |= std::uint64_t{1} << (letters_.size() - 1 - q);
    return m;
  }

  bool commutes_with(const PauliString& o) const {
    if (o.size() != size()) throw ArgumentError("Pauli strings of different length");
    int anti = 0;
    for (std::size_t q = 0; q < size(); ++q)
      if (letters_[q] != Pauli::I && o.letters_[q] != Pauli::I && letters_[q] != o.letters_[q]) ++anti;
    return anti % 2 == 0;
  }

  Matrix matrix() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> letters_;
  int phase_ = 0;
};

inline PauliString pauli_multiply(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size()) throw ArgumentError("Pauli strings of different length");
  std::vector<Pauli> letters(p.size());
  int phase = p.phase() + q.phase();
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto [c, ph] = multiply_letters(p[i], q[i]);
    letters[i] = c;
    phase += ph;
  }
  return PauliString(std::move(letters), phase);
}

inline PauliString operator*(const PauliString& p, const PauliString& q) { return pauli_multiply(p, q); }

/// Pauli string with letter `p` on 1-based qubit `q`.
inline PauliString single_pauli(std::size_t n, std::size_t q, Pauli p) {
  PauliString s(n);
  std::vector<Pauli> letters(n, Pauli::I);
  letters[q - 1] = p;
  return PauliString(std::move(letters));
}

namespace detail {

/// Column action of X^x Z^z with a Y letter written as i*X*Z:
/// P|b> = i^{|x&z|} (-1)^{z.b} |b ^ x>.
inline Complex xz_sign(std::uint64_t x, std::uint64_t z, std::uint64_t b) {
  static constexpr std::array<Complex, 4> kPow = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                                  Complex{0, -1}};
  int k = __builtin_popcountll(x & z) + 2 * parity(z & b);
  return kPow[k % 4];
}

}  // namespace detail

inline Matrix PauliString::matrix() const {
  const std::size_t n = size();
  detail::check_dim(std::size_t{1} << n);
  const std::size_t d = std::size_t{1} << n;
  const std::uint64_t x = x_mask(), z = z_mask();
  Matrix m(d);
  const Complex ph = phase_value();
  for (std::size_t b = 0; b < d; ++b) m(b ^ x, b) = ph * detail::xz_sign(x, z, b);
  return m;
}

/// |out> = P|psi>, computed in O(2^n).
inline std::vector<Complex> apply_pauli(const PauliString& p, std::span<const Complex> psi) {
  const std::size_t d = psi.size();
  if (d != (std::size_t{1} << p.size())) throw ArgumentError("dimension mismatch");
  const std::uint64_t x = p.x_mask(), z = p.z_mask();
  const Complex ph = p.phase_value();
  std::vector<Complex> out(d);
  for (std::size_t b = 0; b < d; ++b) out[b ^ x] = ph * detail::xz_sign(x, z, b) * psi[b];
  return out;
}

inline StateVector apply_pauli(const PauliString& p, const StateVector& psi) {
  return StateVector(apply_pauli(p, psi.amps()), 1e-8);
}

/// Pauli string (phase +1) for the index pair (x, z) over n qubits.
inline PauliString pauli_from_masks(std::size_t n, std::uint64_t x, std::uint64_t z) {
  std::vector<Pauli> letters(n);
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    const bool hx = x & bit, hz = z & bit;
    letters[q] = hx ? (hz ? Pauli::Y : Pauli::X) : (hz ? Pauli::Z : Pauli::I);
  }
  return PauliString(std::move(letters));
}

/// Tr(P^dagger U) / 2^n for the Hermitian Pauli with masks (x, z).
inline Complex pauli_coefficient(const Matrix& u, std::uint64_t x, std::uint64_t z) {
  const std::size_t d = u.dim();
  Complex s = 0.0;
  for (std::size_t b = 0; b < d; ++b) s += std::conj(detail::xz_sign(x, z, b)) * u(b ^ x, b);
  return s / static_cast<double>(d);
}

struct PauliTerm {
  PauliString pauli;
  Complex coefficient;
};

/// Coefficients c_P = Tr(P^dagger U)/2^n over all 4^n Hermitian Pauli
/// strings, in lexicographic letter order (I < X < Y < Z, qubit 1 first).
inline std::vector<PauliTerm> pauli_expansion(const Matrix& u) {
  const std::size_t n = u.qubits();
  const std::size_t count = std::size_t{1} << (2 * n);
  std::vector<PauliTerm> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::vector<Pauli> letters(n);
    std::uint64_t x = 0, z = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const auto p = static_cast<Pauli>((idx >> (2 * (n - 1 - q))) & 3u);
      letters[q] = p;
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
      if (pauli_has_x(p)) x |= bit;
      if (pauli_has_z(p)) z |= bit;
    }
    out.push_back({PauliString(std::move(letters)), pauli_coefficient(u, x, z)});
  }
  return out;
}

inline Matrix pauli_reconstruct(std::span<const PauliTerm> terms, std::size_t n) {
  Matrix m(std::size_t{1} << n);
  for (const auto& t : terms) {
    if (t.coefficient == Complex{}) continue;
    m += t.pauli.matrix() * t.coefficient;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver (cyclic complex Jacobi)

struct EigenSystem {
  std::vector<double> values;  // descending
  Matrix vectors;              // column k pairs with values[k]
};

inline EigenSystem hermitian_eig(const Matrix& h, double eps = Tolerances{}.eig) {
  const std::size_t d = h.dim();
  if (d > kMaxEigDim) throw CapacityError("eigensolver limited to dimension 16");
  if (!h.is_hermitian(eps)) throw ArgumentError("matrix is not Hermitian");

  Matrix a = h;
  Matrix v = Matrix::identity(d);
  const double scale = std::max(1.0, std::sqrt(a.frobenius_sq()));

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-15 * scale) break;

    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-300) continue;
        const Complex e = apq / g;  // e^{i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) plane.
        const Complex jpp = c, jpq = s, jqp = -s * std::conj(e), jqq = c * std::conj(e);
        for (std::size_t k = 0; k < d; ++k) {  // A <- A J
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < d; ++k) {  // A <- J^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < d; ++k) {  // V <- V J
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  EigenSystem out{std::vector<double>(d), Matrix(d)};
  for (std::size_t k = 0; k < d; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < d; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

/// V diag(f(lambda)) V^dagger
template <class F>
Matrix spectral_map(const EigenSystem& es, F&& f) {
  const std::size_t d = es.vectors.dim();
  Matrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double w = f(es.values[k]);
    if (w == 0.0) continue;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        out(r, c) += w * es.vectors(r, k) * std::conj(es.vectors(c, k));
  }
  return out;
}

inline Matrix psd_sqrt(const Matrix& h, double eps_psd = Tolerances{}.psd) {
  const EigenSystem es = hermitian_eig(h, std::max(eps_psd, Tolerances{}.eig));
  if (!es.values.empty() && es.values.back() < -eps_psd) {
    throw ArgumentError("matrix is not positive semidefinite (eigenvalue " +
                        std::to_string(es.values.back()) + ")");
  }
  return spectral_map(es, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

// ---------------------------------------------------------------------------
// Common gates

namespace gates {

inline Matrix I() { return Matrix::identity(2); }
inline Matrix X() { return Matrix(2, {0, 1, 1, 0}); }
inline Matrix Y() { return Matrix(2, {0, Complex{0, -1}, Complex{0, 1}, 0}); }
inline Matrix Z() { return Matrix(2, {1, 0, 0, -1}); }
inline Matrix H() {
  const double s = 1.0 / std::sqrt(2.0);
  return Matrix(2, {s, s, s, -s});
}
inline Matrix S() { return Matrix(2, {1, 0, 0, Complex{0, 1}}); }
inline Matrix T() { return Matrix(2, {1, 0, 0, std::polar(1.0, M_PI / 4)}); }

/// exp(i * angle * (n . sigma)) for a unit axis n.
inline Matrix axis_exp(double angle, const std::array<double, 3>& axis) {
  const double c = std::cos(angle), s = std::sin(angle);
  const Complex i{0, 1};
  Matrix m = I() * c;
  m += (X() * axis[0] + Y() * axis[1] + Z() * axis[2]) * (i * s);
  return m;
}

/// `u` acting on 1-based qubit `q` of an n-qubit register.
inline Matrix on_qubit(std::size_t n, std::size_t q, const Matrix& u) {
  if (q < 1 || q > n) throw ArgumentError("qubit index out of range");
  Matrix out = (q == 1) ? u : I();
  for (std::size_t k = 2; k <= n; ++k) out = tensor_product(out, k == q ? u : I());
  return out;
}

}  // namespace gates

}  // namespace tetra
