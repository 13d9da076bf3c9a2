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

// Clifford hierarchy levels. C_1 is the Pauli group (up to phase) and
// U is in C_k when U P U^dagger is in C_{k-1} for every Pauli P.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "tetra/basis.hpp"
#include "tetra/fiducial.hpp"
#include "tetra/polynomial.hpp"
#include "tetra/qcore.hpp"

namespace tetra {

inline int two_adic_valuation(std::uint64_t c) { return c == 0 ? 64 : std::countr_zero(c); }

/// max over terms of |S| + m - 1 - v2(c), at least 1.
inline int diagonal_clifford_level(const PhasePolynomial& f) {
  int level = 1;
  for (const auto& [s, c] : f.terms())
    level = std::max(level, monomial_degree(s) + f.precision() - 1 - two_adic_valuation(c));
  return level;
}

/// True when U is a single Pauli string times a phase.
inline bool is_pauli_like(const Matrix& u, double eps = 1e-9) {
  const std::size_t d = u.dim();
  // Row 0 of phase * X^x Z^z has its only entry in column x.
  std::size_t x = 0;
  double best = -1.0;
  for (std::size_t c = 0; c < d; ++c)
    if (std::abs(u(0, c)) > best) best = std::abs(u(0, c)), x = c;
  for (std::size_t z = 0; z < d; ++z)
    if (std::abs(std::abs(pauli_coefficient(u, x, z)) - 1.0) <= eps) {
      // Parseval: the other coefficients carry 1 - |c|^2 of the weight.
      return std::abs(u.frobenius_sq() / static_cast<double>(d) - 1.0) <= 10 * eps;
    }
  return false;
}

enum class LevelMode { generator, full };

inline std::string to_string(LevelMode m) { return m == LevelMode::generator ? "generator" : "full"; }

struct LevelResult {
  std::optional<int> level;  // empty when the level exceeds the cap
  int cap = 6;
  LevelMode mode = LevelMode::full;
  std::uint64_t nodes = 0;

  bool exceeds_cap() const { return !level.has_value(); }
  std::string to_string() const { return level ? std::to_string(*level) : std::string("exceeds_cap"); }
};

struct LevelOptions {
  int cap = 6;
  LevelMode mode = LevelMode::full;
  unsigned jobs = 1;
  std::uint64_t budget = 200'000'000;  // recursion nodes
  double eps = 1e-9;
};

namespace detail {

class LevelTester {
 public:
  LevelTester(std::size_t n, const LevelOptions& opt) : n_(n), opt_(opt) {
    const std::size_t d = std::size_t{1} << n;
    for (std::uint64_t x = 0; x < d; ++x)
      for (std::uint64_t z = 0; z < d; ++z)
        if (x | z) all_.push_back({x, z});
    for (std::size_t q = 0; q < n; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      generators_.push_back({bit, 0});
      generators_.push_back({0, bit});
    }
  }

  bool in_level(const Matrix& u, int k, unsigned jobs = 1) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= opt_.budget) {
      throw CapacityError("Clifford level test exceeded its recursion budget");
    }
    if (k == 1) return is_pauli_like(u, opt_.eps);
    const std::string key = memo_key(u, k);
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const auto& tests = uses_full_set(k) ? all_ : generators_;
    bool ok = true;
    if (jobs <= 1 || tests.size() < 2) {
      for (const auto& [x, z] : tests)
        if (!in_level(conjugate(u, x, z), k - 1)) {
          ok = false;
          break;
        }
    } else {
      std::atomic<bool> failed{false};
      std::atomic<std::size_t> next{0};
      std::exception_ptr error;
      std::mutex err_mu;
      auto worker = [&] {
        try {
          for (std::size_t i; !failed.load() && (i = next.fetch_add(1)) < tests.size();) {
            if (!in_level(conjugate(u, tests[i].first, tests[i].second), k - 1)) failed = true;
          }
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!error) error = std::current_exception();
          failed = true;
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(jobs, tests.size()); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      if (error) std::rethrow_exception(error);
      ok = !failed.load();
    }
    std::lock_guard lock(mu_);
    memo_.emplace(key, ok);
    return ok;
  }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  bool uses_full_set(int k) const { return opt_.mode == LevelMode::full && k >= 4; }

  // U P U^dagger for the Hermitian Pauli with masks (x, z).
  Matrix conjugate(const Matrix& u, std::uint64_t x, std::uint64_t z) const {
    const std::size_t d = u.dim();
    Matrix up(d);
    for (std::size_t b = 0; b < d; ++b) {
      const Complex s = xz_sign(x, z, b);
      for (std::size_t r = 0; r < d; ++r) up(r, b) = u(r, b ^ x) * s;
    }
    // xz_sign gives P(b^x, b); (U P)(r, b) = U(r, b^x) P(b^x, b).
    return up * u.adjoint();
  }

  // Rounded, global-phase-normalized matrix plus k.
  static std::string memo_key(const Matrix& u, int k) {
    Complex ref = 1.0;
    for (const auto& v : u.data())
      if (std::abs(v) > 1e-6) {
        ref = std::conj(v) / std::abs(v);
        break;
      }
    std::string key;
    key.reserve(u.data().size() * 16 + 4);
    key.push_back(static_cast<char>(k));
    for (const auto& v : u.data()) {
      const Complex w = v * ref;
      const std::int64_t re = std::llround(w.real() * 1e8), im = std::llround(w.imag() * 1e8);
      char buf[16];
      std::memcpy(buf, &re, 8);
      std::memcpy(buf + 8, &im, 8);
      key.append(buf, 16);
    }
    return key;
  }

  std::size_t n_;
  LevelOptions opt_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> all_, generators_;
  std::atomic<std::uint64_t> nodes_{0};
  std::mutex mu_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace detail

/// Smallest k <= cap with U in C_k. Generator mode tests only X_l and Z_l,
/// which decides membership exactly up to C_3; full mode tests all Paulis
/// whenever membership in C_j with j >= 4 is asked.
inline LevelResult clifford_level_test(const Matrix& u, const LevelOptions& opt = {}) {
  if (opt.cap < 1 || opt.cap > 6) throw ArgumentError("level cap must be in 1..6");
  if (!u.is_unitary(Tolerances{}.unitary * 100)) throw ArgumentError("matrix is not unitary");
  detail::LevelTester tester(u.qubits(), opt);
  LevelResult res;
  res.cap = opt.cap;
  res.mode = opt.mode;
  for (int k = 1; k <= opt.cap; ++k) {
    if (tester.in_level(u, k, opt.jobs)) {
      res.level = k;
      break;
    }
  }
  res.nodes = tester.nodes();
  return res;
}

inline LevelResult clifford_level_test(const Matrix& u, int cap, LevelMode mode) {
  LevelOptions opt;
  opt.cap = cap;
  opt.mode = mode;
  return clifford_level_test(u, opt);
}

struct Theorem1Report {
  int diagonal_level = 0;  // formula level k_D of D_f
  int bound = 0;           // max(2, k_D)
  LevelResult measurement_level;
  bool ok = false;
  bool strict = false;  // level(M) < k_D
};

/// Compares the recursive level of M_psi against the formula level of D_f.
/// A Pauli D_f still gives a Clifford M_psi (the staircase and Hadamards are
/// Clifford), so the bound is max(2, k_D).
inline Theorem1Report verify_theorem1(const PhasePolynomial& f, const LevelOptions& opt = {}) {
  Theorem1Report rep;
  rep.diagonal_level = diagonal_clifford_level(f);
  rep.bound = std::max(2, rep.diagonal_level);
  const Basis b = basis_from_polynomial(f);
  rep.measurement_level = clifford_level_test(measurement_unitary(b), opt);
  rep.ok = rep.measurement_level.level && *rep.measurement_level.level <= rep.bound;
  rep.strict = rep.measurement_level.level && *rep.measurement_level.level < rep.diagonal_level;
  return rep;
}

}  // namespace tetra
