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

// Exhaustive search over phase polynomials for regular tetrahedral bases,
// class grouping, and local-Clifford equivalence witnesses.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tetra/basis.hpp"
#include "tetra/entanglement.hpp"
#include "tetra/geometry.hpp"
#include "tetra/hierarchy.hpp"
#include "tetra/polynomial.hpp"
#include "tetra/qcore.hpp"

namespace tetra {

// ---------------------------------------------------------------------------
// Single-qubit Clifford group

namespace detail {

inline std::vector<std::int64_t> phase_free_key(const Matrix& u) {
  Complex ref = 1.0;
  for (const auto& v : u.data())
    if (std::abs(v) > 1e-6) {
      ref = std::conj(v) / std::abs(v);
      break;
    }
  std::vector<std::int64_t> key;
  for (const auto& v : u.data()) {
    const Complex w = v * ref;
    key.push_back(std::llround(w.real() * 1e6));
    key.push_back(std::llround(w.imag() * 1e6));
  }
  return key;
}

}  // namespace detail

/// The 24 single-qubit Cliffords up to phase, breadth first from I over
/// {H, S}. Index 0 is the identity.
inline const std::vector<Matrix>& single_qubit_cliffords() {
  static const std::vector<Matrix> group = [] {
    std::vector<Matrix> out{gates::I()};
    std::set<std::vector<std::int64_t>> seen{detail::phase_free_key(out[0])};
    const Matrix gens[2] = {gates::H(), gates::S()};
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (const auto& g : gens) {
        Matrix m = g * out[head];
        if (seen.insert(detail::phase_free_key(m)).second) out.push_back(std::move(m));
      }
    }
    return out;
  }();
  return group;
}

// ---------------------------------------------------------------------------
// Polynomial space

class PolynomialSpace {
 public:
  PolynomialSpace(std::size_t n, int m, int min_degree = 2) : n_(n), m_(m) {
    if (n < 1 || n > kMaxQubits) throw ArgumentError("qubit count must be in 1..6");
    if (m < 1 || m > 30) throw ArgumentError("precision m must be in 1..30");
    if (min_degree < 1) throw ArgumentError("minimum degree must be >= 1");
    for (Monomial s = 1; s < (Monomial{1} << n); ++s)
      if (monomial_degree(s) >= min_degree) monomials_.push_back(s);
    std::sort(monomials_.begin(), monomials_.end(), GradedLex{});
  }

  std::size_t qubits() const { return n_; }
  int precision() const { return m_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// (2^m)^(#monomials), or nullopt past 2^62.
  std::optional<std::uint64_t> size() const {
    const std::uint64_t bits = static_cast<std::uint64_t>(m_) * monomials_.size();
    if (bits > 62) return std::nullopt;
    return std::uint64_t{1} << bits;
  }

  /// Coefficients as base-2^m digits of the index, the last monomial least
  /// significant.
  PhasePolynomial at(std::uint64_t index) const {
    PhasePolynomial f(n_, m_);
    const std::uint64_t mask = (std::uint64_t{1} << m_) - 1;
    for (std::size_t i = monomials_.size(); i-- > 0;) {
      const std::uint64_t c = index & mask;
      index >>= m_;
      if (c) f.add_term(monomials_[i], static_cast<std::int64_t>(c));
    }
    return f;
  }

  /// Inverse of at().
  std::uint64_t index_of(const PhasePolynomial& f) const {
    std::uint64_t idx = 0;
    for (Monomial s : monomials_) idx = (idx << m_) | f.coefficient(s);
    return idx;
  }

 private:
  std::size_t n_;
  int m_;
  std::vector<Monomial> monomials_;
};

inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 22;

/// All polynomials of the space in index order.
inline std::vector<PhasePolynomial> enumerate_polynomials(std::size_t n, int m, int min_degree = 2) {
  const PolynomialSpace space(n, m, min_degree);
  const auto count = space.size();
  if (!count || *count > kMaxEnumeration) {
    throw CapacityError("polynomial space too large to enumerate; use a sample limit");
  }
  std::vector<PhasePolynomial> out;
  out.reserve(*count);
  for (std::uint64_t i = 0; i < *count; ++i) out.push_back(space.at(i));
  return out;
}

/// `k` distinct indices drawn uniformly with a seeded mt19937_64, ascending.
inline std::vector<std::uint64_t> sample_indices(const PolynomialSpace& space, std::uint64_t k, std::uint64_t seed) {
  const auto count = space.size();
  if (!count) throw CapacityError("polynomial space too large to sample");
  if (k >= *count) {
    std::vector<std::uint64_t> all(*count);
    for (std::uint64_t i = 0; i < *count; ++i) all[i] = i;
    return all;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, *count - 1);
  std::set<std::uint64_t> picked;
  while (picked.size() < k) picked.insert(dist(rng));
  return {picked.begin(), picked.end()};
}

// ---------------------------------------------------------------------------
// Search

struct SearchConfig {
  std::size_t n = 2;
  int m = 2;
  int min_degree = 2;
  bool require_regular = true;
  bool require_nonzero_components = false;
  int level_cap = 6;                              // drop candidates whose formula level exceeds it
  unsigned jobs = 1;
  std::size_t chunk = 64;
  std::optional<std::uint64_t> sample;            // random subset of the space
  std::uint64_t seed = 1;
  std::vector<PhasePolynomial> polynomials;       // explicit list overrides the space
  Tolerances tol;
};

struct SearchHit {
  PhasePolynomial polynomial;
  GeometryReport geometry;
  InvariantFingerprint fingerprint;
  int level = 0;  // formula level of D_f
  StateVector fiducial;
};

struct SearchResult {
  std::uint64_t candidates = 0;
  std::uint64_t non_orthonormal = 0;  // should stay 0
  std::vector<SearchHit> hits;
};

inline std::optional<SearchHit> evaluate_candidate(const PhasePolynomial& f, const SearchConfig& cfg,
                                                   bool* non_orthonormal = nullptr) {
  const Basis b = basis_from_polynomial(f);
  if (!check_orthonormal(b, cfg.tol.norm).ok) {
    if (non_orthonormal) *non_orthonormal = true;
    return std::nullopt;
  }
  if (diagonal_clifford_level(f) > cfg.level_cap) return std::nullopt;
  GeometryReport geo = classify_basis(b, cfg.tol.geo);
  if (cfg.require_regular && !geo.all_regular()) return std::nullopt;
  if (cfg.require_nonzero_components && !geo.nonzero_components) return std::nullopt;
  SearchHit hit{f, geo, invariant_fingerprint(b, geo, cfg.tol), diagonal_clifford_level(f), b.fiducial};
  return hit;
}

/// Candidates are split into contiguous chunks processed by `jobs` threads;
/// chunk results are concatenated in chunk order, so the output does not
/// depend on the thread count.
inline SearchResult search_regular(const SearchConfig& cfg) {
  if (cfg.n < 2) throw ArgumentError("search needs n >= 2");
  std::vector<PhasePolynomial> cands;
  if (!cfg.polynomials.empty()) {
    cands = cfg.polynomials;
  } else {
    const PolynomialSpace space(cfg.n, cfg.m, cfg.min_degree);
    if (cfg.sample) {
      for (auto i : sample_indices(space, *cfg.sample, cfg.seed)) cands.push_back(space.at(i));
    } else {
      cands = enumerate_polynomials(cfg.n, cfg.m, cfg.min_degree);
    }
  }
  const std::size_t chunk = std::max<std::size_t>(1, cfg.chunk);
  const std::size_t nchunks = (cands.size() + chunk - 1) / chunk;
  std::vector<std::vector<SearchHit>> parts(nchunks);
  std::vector<std::uint64_t> bad(nchunks, 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex err_mu;
  auto worker = [&] {
    try {
      for (std::size_t c; (c = next.fetch_add(1)) < nchunks;) {
        const std::size_t end = std::min(cands.size(), (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i) {
          bool non_orth = false;
          if (auto hit = evaluate_candidate(cands[i], cfg, &non_orth)) parts[c].push_back(std::move(*hit));
          if (non_orth) ++bad[c];
        }
      }
    } catch (...) {
      std::lock_guard lock(err_mu);
      if (!error) error = std::current_exception();
    }
  };
  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  SearchResult res;
  res.candidates = cands.size();
  for (std::size_t c = 0; c < nchunks; ++c) {
    res.non_orthonormal += bad[c];
    for (auto& h : parts[c]) res.hits.push_back(std::move(h));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Local-Clifford witnesses

struct LcWitness {
  std::vector<std::size_t> cliffords;  // index into single_qubit_cliffords(), per qubit
  bool conjugated = false;
  std::size_t column = 0;
  Complex phase = 1.0;                 // column = phase * (C_1 (x) ... (x) C_n) psi'
};

namespace detail {

inline void apply_single(std::vector<Complex>& v, std::size_t n, std::size_t q, const Matrix& u) {
  const std::size_t bit = std::size_t{1} << (n - q);
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (b & bit) continue;
    const Complex a0 = v[b], a1 = v[b | bit];
    v[b] = u(0, 0) * a0 + u(0, 1) * a1;
    v[b | bit] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

inline bool witness_dfs(const std::vector<Complex>& state, std::size_t q, std::size_t n, const Basis& target,
                        double eps, std::vector<std::size_t>& choice, LcWitness& out) {
  const auto& cl = single_qubit_cliffords();
  if (q > n) {
    for (std::size_t g = 0; g < target.size(); ++g) {
      const Complex ov = inner(state, target.columns[g].amps());
      if (std::abs(std::abs(ov) - 1.0) <= eps) {
        out.cliffords = choice;
        out.column = g;
        out.phase = ov / std::abs(ov);
        return true;
      }
    }
    return false;
  }
  for (std::size_t c = 0; c < cl.size(); ++c) {
    std::vector<Complex> next = state;
    apply_single(next, n, q, cl[c]);
    choice[q - 1] = c;
    if (witness_dfs(next, q + 1, n, target, eps, choice, out)) return true;
  }
  return false;
}

}  // namespace detail

/// First tuple (qubit 1 outermost, Clifford index ascending; unconjugated
/// before conjugated) mapping psi onto a column of `target` up to phase.
inline std::optional<LcWitness> lc_equivalence_witness(const StateVector& psi, const Basis& target,
                                                       bool allow_conjugation, double eps = 1e-9) {
  const std::size_t n = psi.qubits();
  if (n != target.n) throw ArgumentError("states of different qubit counts");
  if (n > 4) throw CapacityError("LC witness search limited to n <= 4");
  for (int conj = 0; conj <= (allow_conjugation ? 1 : 0); ++conj) {
    const StateVector start = conj ? conjugate_state(psi) : psi;
    std::vector<std::size_t> choice(n, 0);
    LcWitness w;
    if (detail::witness_dfs(start.vec(), 1, n, target, eps, choice, w)) {
      w.conjugated = conj == 1;
      return w;
    }
  }
  return std::nullopt;
}

/// max |column - phase * C psi'| for a witness; near zero when it is valid.
inline double witness_residual(const StateVector& psi, const Basis& target, const LcWitness& w) {
  const StateVector start = w.conjugated ? conjugate_state(psi) : psi;
  std::vector<Matrix> us;
  for (auto c : w.cliffords) us.push_back(single_qubit_cliffords()[c]);
  const StateVector mapped = apply_local_unitaries(start, us);
  double res = 0.0;
  for (std::size_t b = 0; b < mapped.dim(); ++b)
    res = std::max(res, std::abs(target.columns[w.column][b] - w.phase * mapped[b]));
  return res;
}

// ---------------------------------------------------------------------------
// Classes

struct WitnessLink {
  std::size_t member = 0;  // index into ClassRecord::members
  LcWitness witness;       // maps the member's fiducial onto the representative's basis
};

struct ClassRecord {
  std::string key;                          // rounded (tangle, C^2, r)
  InvariantFingerprint fingerprint;         // of the representative, with conjugate_flag set
  std::vector<PhasePolynomial> members;     // in search order; members[0] is the representative
  std::vector<WitnessLink> witness_links;
  std::set<int> stab_orders;
  std::set<std::vector<int>> chirality_patterns;  // pair signs in pair order
  std::optional<std::size_t> conjugate_partner;   // index into the class list
  std::optional<LcWitness> conjugate_witness;     // conj(rep) onto the partner's basis

  const PhasePolynomial& representative() const { return members.front(); }
};

struct Classification {
  std::vector<ClassRecord> classes;
  std::size_t merged_count = 0;  // classes after identifying conjugate partners
};

/// Groups hits by rounded (tangle, C^2, r), splits each group into clusters
/// linked by pure local-Clifford witnesses, then pairs clusters whose
/// representatives are related by complex conjugation plus local Cliffords.
inline Classification group_into_classes(const std::vector<SearchHit>& hits, double eps = 1e-9) {
  Classification out;
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const std::string key = class_key(hits[i].fingerprint);
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(i);
  }

  for (const auto& key : order) {
    const std::size_t first_class = out.classes.size();
    std::vector<Basis> rep_bases;
    std::vector<std::size_t> rep_hits;
    for (std::size_t h : groups[key]) {
      const SearchHit& hit = hits[h];
      bool placed = false;
      for (std::size_t c = 0; c < rep_bases.size() && !placed; ++c) {
        if (auto w = lc_equivalence_witness(hit.fiducial, rep_bases[c], false, eps)) {
          ClassRecord& rec = out.classes[first_class + c];
          rec.witness_links.push_back({rec.members.size(), *w});
          rec.members.push_back(hit.polynomial);
          rec.stab_orders.insert(hit.fingerprint.stab_order);
          rec.chirality_patterns.insert(hit.geometry.chirality_pairs());
          placed = true;
        }
      }
      if (placed) continue;
      ClassRecord rec;
      rec.key = key;
      rec.fingerprint = hit.fingerprint;
      rec.members.push_back(hit.polynomial);
      rec.stab_orders.insert(hit.fingerprint.stab_order);
      rec.chirality_patterns.insert(hit.geometry.chirality_pairs());
      out.classes.push_back(std::move(rec));
      rep_bases.push_back(orbit_basis(hit.fiducial, build_tetra_group(hit.polynomial.qubits())));
      rep_hits.push_back(h);
    }

    // Conjugation pairing inside the group.
    for (std::size_t a = 0; a < rep_bases.size(); ++a) {
      ClassRecord& ra = out.classes[first_class + a];
      if (ra.conjugate_partner) continue;
      const StateVector conj = conjugate_state(hits[rep_hits[a]].fiducial);
      for (std::size_t b = a; b < rep_bases.size(); ++b) {
        ClassRecord& rb = out.classes[first_class + b];
        if (b != a && rb.conjugate_partner) continue;
        if (auto w = lc_equivalence_witness(conj, rep_bases[b], false, eps)) {
          w->conjugated = true;
          ra.conjugate_partner = first_class + b;
          ra.conjugate_witness = *w;
          rb.conjugate_partner = first_class + a;
          if (b != a) rb.conjugate_witness = lc_equivalence_witness(conjugate_state(hits[rep_hits[b]].fiducial),
                                                                    rep_bases[a], false, eps);
          if (rb.conjugate_witness) rb.conjugate_witness->conjugated = true;
          ra.fingerprint.conjugate_flag = false;
          rb.fingerprint.conjugate_flag = b != a;
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    const auto& p = out.classes[i].conjugate_partner;
    if (!p || *p >= i) ++out.merged_count;
  }
  return out;
}

}  // namespace tetra
