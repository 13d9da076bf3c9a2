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

// Acceptance gate: one PASS/FAIL line per criterion. Tolerances and time
// limits are fixed here; a criterion fails when its check or its time limit
// fails. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tetra/tetra.hpp"

namespace {

using namespace tetra;

constexpr double kTol = 1e-9;
const double kSqrt3 = std::sqrt(3.0);

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

bool contains(const std::string& s, const char* needle) { return s.find(needle) != std::string::npos; }

Outcome suite_outcome(const ReproductionSuite& s, const std::function<bool(const Check&)>& filter) {
  Outcome o;
  for (const auto& c : s.checks)
    if (filter(c)) o.require(c.pass, c.description + " (expected " + c.expected + ", got " + c.actual + ")");
  return o;
}

auto all_checks = [](const Check&) { return true; };

Outcome criterion1() { return suite_outcome(reproduce_appA(), all_checks); }

Outcome criterion2() { return suite_outcome(reproduce_table1(), all_checks); }

Outcome criterion3() {
  // The full-factor permutation is an extra diagnostic, not part of the gate.
  return suite_outcome(reproduce_appB(), [](const Check& c) {
    return contains(c.description, "alignment output") || contains(c.description, "(Z-X)/sqrt2 maps");
  });
}

Outcome criterion4() { return suite_outcome(reproduce_appC(), all_checks); }

Outcome criterion5() {
  const auto s = reproduce_appD();
  Outcome o = suite_outcome(s, [](const Check& c) { return !contains(c.description, "stabilizer order"); });
  // Stabilizer order 24, or every qubit permutation fixing the state up to phase.
  const StateVector ex1 = build_fiducial(parse_polynomial(paper_data::kFourQubitExample1, 4, 2));
  const int stab = permutation_stabilizer_order(ex1);
  o.require(stab == 24, "example 1 permutation stabilizer order is " + std::to_string(stab) + ", not 24 (not PPI)");
  return o;
}

Outcome criterion6() {
  Outcome o;
  SearchConfig cfg;
  cfg.n = 2;
  cfg.require_regular = true;
  cfg.require_nonzero_components = true;
  const auto res = search_regular(cfg);
  std::vector<std::string> polys;
  for (const auto& h : res.hits) {
    polys.push_back(h.polynomial.to_string());
    o.require(h.level == 3, h.polynomial.to_string() + " level " + std::to_string(h.level));
  }
  o.require(polys == std::vector<std::string>{"z1 z2", "3 z1 z2"}, "hit set differs");
  const auto cls = group_into_classes(res.hits);
  o.require(cls.merged_count == 1, "merged class count " + std::to_string(cls.merged_count));
  return o;
}

Outcome criterion7() {
  Outcome o;
  SearchConfig cfg;
  cfg.n = 3;
  const auto res = search_regular(cfg);
  o.require(res.candidates == 256, "candidate count");
  o.require(res.non_orthonormal == 0, "non-orthonormal candidate");
  std::set<long long> tangles;
  for (const auto& h : res.hits) {
    o.require(h.fingerprint.r && std::abs(*h.fingerprint.r - kSqrt3 / 4) <= kTol, h.polynomial.to_string() + " r");
    for (double c : h.fingerprint.concurrence_sq)
      o.require(std::abs(c - h.fingerprint.concurrence_sq[0]) <= kTol, h.polynomial.to_string() + " unequal C^2");
    tangles.insert(std::llround(std::pow(16 * h.fingerprint.tangle.value_or(0), 2)));
  }
  o.require(tangles == std::set<long long>{65, 97, 113, 145}, "tangle set");
  const auto cls = group_into_classes(res.hits);
  o.require(cls.classes.size() == 8, "class count " + std::to_string(cls.classes.size()));
  std::set<std::string> keys;
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    const auto& rec = cls.classes[c];
    keys.insert(rec.key);
    o.require(rec.witness_links.size() + 1 == rec.members.size(), "member without LC witness in class " + rec.key);
    const Basis rep = basis_from_polynomial(rec.representative());
    for (const auto& link : rec.witness_links)
      o.require(witness_residual(build_fiducial(rec.members[link.member]), rep, link.witness) <= kTol,
                "witness residual");
    const bool paired = rec.conjugate_partner && *rec.conjugate_partner != c &&
                        cls.classes[*rec.conjugate_partner].key == rec.key && rec.conjugate_witness &&
                        rec.conjugate_witness->conjugated;
    o.require(paired, "class " + std::to_string(c) + " has no distinct conjugate partner");
  }
  o.require(keys.size() == 4, "distinct tangle classes " + std::to_string(keys.size()));
  return o;
}

Outcome criterion8() {
  Outcome o;
  LevelOptions opt;
  opt.mode = LevelMode::full;
  // Every non-constant two-qubit polynomial with m = 2 (superset of the canonical space).
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    PhasePolynomial f(2, 2);
    f.add_term(make_monomial({1}), static_cast<std::int64_t>(idx & 3));
    f.add_term(make_monomial({2}), static_cast<std::int64_t>((idx >> 2) & 3));
    f.add_term(make_monomial({1, 2}), static_cast<std::int64_t>(idx >> 4));
    const auto rep = verify_theorem1(f, opt);
    o.require(rep.ok, f.to_string() + ": level " + rep.measurement_level.to_string() + " above " +
                          std::to_string(rep.bound));
  }
  const auto z = verify_theorem1(parse_polynomial("z1 z2", 2, 2), opt);
  o.require(z.diagonal_level == 3 && z.measurement_level.level == 3, "z1 z2 is not level 3 on both sides");
  return o;
}

Matrix random_u2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  double q[4], s = 0.0;
  for (double& x : q) x = g(rng), s += x * x;
  s = std::sqrt(s);
  for (double& x : q) x /= s;
  std::uniform_real_distribution<double> ph(0, 2 * std::numbers::pi);
  return Matrix(2, {Complex{q[0], q[3]}, Complex{q[2], q[1]}, Complex{-q[2], q[1]}, Complex{q[0], -q[3]}}) *
         std::polar(1.0, ph(rng));
}

std::vector<Matrix> random_locals(std::size_t n, std::mt19937_64& rng) {
  std::vector<Matrix> us;
  for (std::size_t q = 0; q < n; ++q) us.push_back(random_u2(rng));
  return us;
}

PhasePolynomial random_polynomial(std::size_t n, int m, std::mt19937_64& rng) {
  PhasePolynomial f(n, m);
  std::uniform_int_distribution<std::int64_t> coeff(0, (std::int64_t{1} << m) - 1);
  for (Monomial s = 1; s < (Monomial{1} << n); ++s) f.add_term(s, coeff(rng));
  return f;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  for (int t = 0; t < 100; ++t) {
    const Basis b = basis_from_polynomial(random_polynomial(2 + t % 3, 6, rng));
    o.require(check_orthonormal(b).ok, "orthonormality of " + b.polynomial->to_string());
  }
  for (int t = 0; t < 50; ++t) {
    const StateVector psi = build_fiducial(random_polynomial(3, 6, rng));
    const StateVector moved = apply_local_unitaries(psi, random_locals(3, rng));
    o.require(std::abs(three_tangle(moved) - three_tangle(psi)) <= kTol, "tangle changed under local unitaries");
    const auto a = pairwise_concurrence_sq(psi), b = pairwise_concurrence_sq(moved);
    for (std::size_t k = 0; k < a.size(); ++k)
      o.require(std::abs(a[k] - b[k]) <= kTol, "concurrence changed under local unitaries");
  }
  for (int t = 0; t < 50; ++t) {
    const StateVector psi = build_fiducial(random_polynomial(4, 6, rng));
    const StateVector back = conjugate_state(conjugate_state(psi));
    for (std::size_t i = 0; i < psi.dim(); ++i) o.require(back[i] == psi[i], "conjugation is not an involution");
  }
  const std::vector<Basis> bases = {
      ejm_reference_basis(), basis_from_polynomial(parse_polynomial("z1 z3 + 3 z2 z3 + z1 z2 z3", 3, 2)),
      basis_from_polynomial(parse_polynomial("z1 z2 + z1 z3 + z2 z3 + 3 z1 z2 z3", 3, 2)),
      basis_from_polynomial(parse_polynomial(paper_data::kFourQubitExample2, 4, 2))};
  for (const auto& b : bases) {
    const auto before = classify_basis(b).chirality;
    for (int t = 0; t < 10; ++t) {
      std::vector<Matrix> us = random_locals(b.n, rng);
      for (auto& u : us) {
        // Strip the phase so the factor is in SU(2); the Bloch action is a proper rotation either way.
        const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
        u *= 1.0 / std::sqrt(det);
      }
      o.require(classify_basis(apply_local_unitaries(b, us)).chirality == before, "chirality changed");
    }
  }
  return o;
}

Outcome criterion10() {
  const auto s = reproduce_conjecture();
  return suite_outcome(s, all_checks);
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "two-qubit fiducial and listed basis", 0.1, criterion1},
      {2, "eight three-qubit representatives", 30, criterion2},
      {3, "alignment unitary and vertex permutation", 1, criterion3},
      {4, "tetrahedral product coefficients", 1, criterion4},
      {5, "four-qubit examples", 5, criterion5},
      {6, "two-qubit exhaustive search", 1, criterion6},
      {7, "three-qubit exhaustive search", 60, criterion7},
      {8, "diagonal bound on measurement levels", 60, criterion8},
      {9, "property suites", 120, criterion9},
      {10, "level and Bloch-length pattern at n = 2, 3, 4", 10, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s (limit %g s)", secs, c.limit_s);
    o.require(secs < c.limit_s, std::string("time ") + timing);
    std::string label = o.pass ? "PASS" : "FAIL";
    if (c.id == 10 && o.pass) label += " (consistent; not decidable here)";
    std::printf("criterion %2d %s  %s  [%s]\n", c.id, label.c_str(), c.name, timing);
    if (!o.pass) std::printf("             %s\n", o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed ? 1 : 0;
}
