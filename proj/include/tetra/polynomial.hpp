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

// Phase polynomials f: Z_2^n -> Z_{2^m} and their text form.
//
// Text grammar (whitespace-insensitive):
//   poly   := term ('+' term)*
//   term   := [coeff ['*']] factor ('*'? factor)*   |   '0'
//   factor := 'z' index
// Repeated variables collapse (z^2 = z over Z_2), like monomials merge mod
// 2^m, and nonzero constants are rejected.

#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/qcore.hpp"

namespace tetra {

/// Set of variables as a bitmask: bit (i-1) stands for z_i.
using Monomial = std::uint32_t;

inline int monomial_degree(Monomial s) { return std::popcount(s); }

inline std::vector<std::size_t> monomial_indices(Monomial s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (s & (Monomial{1} << i)) out.push_back(i + 1);
  return out;
}

inline Monomial make_monomial(std::initializer_list<std::size_t> indices) {
  Monomial s = 0;
  for (auto i : indices) s |= Monomial{1} << (i - 1);
  return s;
}

/// Degree first, then lexicographic on the sorted index lists, so that
/// z1z2 < z1z3 < z2z3 < z1z2z3.
struct GradedLex {
  bool operator()(Monomial a, Monomial b) const {
    const int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return monomial_indices(a) < monomial_indices(b);
  }
};

class PhasePolynomial {
 public:
  using Terms = std::map<Monomial, std::uint64_t, GradedLex>;

  PhasePolynomial() = default;

  PhasePolynomial(std::size_t n, int m) : n_(n), m_(m) {
    if (n < 1 || n > kMaxQubits) throw ArgumentError("qubit count must be in 1..6");
    if (m < 1 || m > 30) throw ArgumentError("precision m must be in 1..30");
  }

  std::size_t qubits() const noexcept { return n_; }
  int precision() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << m_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Adds coeff * prod_{i in s} z_i, reducing mod 2^m.
  PhasePolynomial& add_term(Monomial s, std::int64_t coeff) {
    if (s == 0) throw ArgumentError("constant terms are not allowed");
    if (s >> n_) throw ArgumentError("monomial uses a variable beyond z" + std::to_string(n_));
    const std::int64_t mod = static_cast<std::int64_t>(modulus());
    const std::uint64_t c = static_cast<std::uint64_t>(((coeff % mod) + mod) % mod);
    const std::uint64_t merged = (terms_.count(s) ? terms_[s] : 0) + c;
    const std::uint64_t reduced = merged % modulus();
    if (reduced == 0)
      terms_.erase(s);
    else
      terms_[s] = reduced;
    return *this;
  }

  std::uint64_t coefficient(Monomial s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
  }

  int degree() const {
    int d = 0;
    for (const auto& [s, c] : terms_) d = std::max(d, monomial_degree(s));
    return d;
  }

  /// f(z) for the computational index b (z1 = most significant bit).
  std::uint64_t evaluate_index(std::size_t b) const {
    Monomial z = 0;
    for (std::size_t i = 1; i <= n_; ++i)
      if ((b >> (n_ - i)) & 1u) z |= Monomial{1} << (i - 1);
    std::uint64_t v = 0;
    for (const auto& [s, c] : terms_)
      if ((s & z) == s) v += c;
    return v % modulus();
  }

  std::uint64_t evaluate(std::span<const int> bits) const {
    if (bits.size() != n_) throw ArgumentError("bit vector length differs from qubit count");
    std::size_t b = 0;
    for (int x : bits) b = (b << 1) | (x ? 1u : 0u);
    return evaluate_index(b);
  }

  /// -f mod 2^m; the fiducial of -f is the complex conjugate of that of f.
  PhasePolynomial negated() const {
    PhasePolynomial out(n_, m_);
    for (const auto& [s, c] : terms_) out.add_term(s, -static_cast<std::int64_t>(c));
    return out;
  }

  PhasePolynomial operator+(const PhasePolynomial& o) const {
    if (o.n_ != n_ || o.m_ != m_) throw ArgumentError("polynomials over different spaces");
    PhasePolynomial out = *this;
    for (const auto& [s, c] : o.terms_) out.add_term(s, static_cast<std::int64_t>(c));
    return out;
  }

  /// Canonical text: graded-lex term order, coefficient 1 omitted, "0" if empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string term = c == 1 ? "" : std::to_string(c);
      for (auto i : monomial_indices(s)) {
        if (!term.empty()) term += ' ';
        term += 'z' + std::to_string(i);
      }
      out += term;
    }
    return out;
  }

  friend bool operator==(const PhasePolynomial&, const PhasePolynomial&) = default;

 private:
  std::size_t n_ = 1;
  int m_ = 1;
  Terms terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n, int m) : text_(text), poly_(n, m), n_(n) {}

  PhasePolynomial run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    term();
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
      ++pos_;
      term();
    }
    return poly_;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // Decimal integer; returns (value mod 2^m, was_zero_literal).
  std::pair<std::uint64_t, bool> number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    bool all_zero = true;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (digit != 0) all_zero = false;
      v = (v * 10 + static_cast<std::uint64_t>(digit)) % poly_.modulus();
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return {v, all_zero};
  }

  std::size_t index() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1000) break;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a variable index after 'z'", pos_);
    if (v < 1 || v > n_) {
      throw ParseError("variable index " + std::to_string(v) + " outside 1.." + std::to_string(n_), start);
    }
    return v;
  }

  void term() {
    skip_ws();
    const std::size_t term_start = pos_;
    std::uint64_t coeff = 1;
    bool zero_literal = false;
    bool has_coeff = false;
    if (at_digit()) {
      auto [v, z] = number();
      coeff = v;
      zero_literal = z;
      has_coeff = true;
      if (peek('*')) ++pos_;
    }
    Monomial s = 0;
    int factors = 0;
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'z') {
        ++pos_;
        s |= Monomial{1} << (index() - 1);
        ++factors;
        if (peek('*')) {
          ++pos_;
          skip_ws();
          if (pos_ >= text_.size() || text_[pos_] != 'z') throw ParseError("expected a factor after '*'", pos_);
        }
        continue;
      }
      break;
    }
    if (factors == 0) {
      if (has_coeff && zero_literal) return;  // literal "0"
      if (has_coeff) throw ParseError("constant terms are not allowed", term_start);
      if (pos_ < text_.size()) {
        throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
      }
      throw ParseError("expected a term", pos_);
    }
    poly_.add_term(s, static_cast<std::int64_t>(coeff));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  PhasePolynomial poly_;
  std::size_t n_;
};

}  // namespace detail

inline PhasePolynomial parse_polynomial(std::string_view text, std::size_t n, int m) {
  return detail::PolyParser(text, n, m).run();
}

inline std::uint64_t evaluate_polynomial(const PhasePolynomial& f, std::span<const int> z) {
  return f.evaluate(z);
}

}  // namespace tetra
