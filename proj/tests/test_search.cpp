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


#include <sstream>

#include "test_util.hpp"

using namespace tetra;
using namespace tetra::testing;

namespace {

std::string csv_of(const std::vector<SearchHit>& hits) {
  std::ostringstream os;
  write_csv(os, hits);
  return os.str();
}

}  // namespace

TEST_CASE("single-qubit Clifford group") {
  const auto& cl = single_qubit_cliffords();
  REQUIRE(cl.size() == 24);
  CHECK(cl[0].max_abs_diff(gates::I()) == 0.0);
  for (const auto& c : cl) {
    CHECK(c.is_unitary(1e-12));
    CHECK(*clifford_level_test(c, 3, LevelMode::full).level <= 2);
  }
}

TEST_CASE("polynomial space sizes and ordering") {
  CHECK(*PolynomialSpace(2, 2).size() == 4);
  CHECK(*PolynomialSpace(3, 2).size() == 256);
  CHECK(*PolynomialSpace(4, 2).size() == 4194304);
  const auto all = enumerate_polynomials(2, 2);
  REQUIRE(all.size() == 4);
  CHECK(all[0].to_string() == "0");
  CHECK(all[1].to_string() == "z1 z2");
  CHECK(all[3].to_string() == "3 z1 z2");
  const PolynomialSpace s3(3, 2);
  for (std::uint64_t i = 0; i < 256; ++i) CHECK(s3.index_of(s3.at(i)) == i);
  CHECK(s3.at(1).to_string() == "z1 z2 z3");
  CHECK_THROWS_AS(enumerate_polynomials(5, 2), CapacityError);
}

TEST_CASE("seeded sampling is reproducible") {
  const PolynomialSpace s(4, 2);
  const auto a = sample_indices(s, 50, 9), b = sample_indices(s, 50, 9), c = sample_indices(s, 50, 10);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.size() == 50);
  CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("two-qubit search finds the conjugate pair") {
  SearchConfig cfg;
  cfg.n = 2;
  cfg.require_nonzero_components = true;
  const auto res = search_regular(cfg);
  CHECK(res.candidates == 4);
  CHECK(res.non_orthonormal == 0);
  REQUIRE(res.hits.size() == 2);
  CHECK(res.hits[0].polynomial.to_string() == "z1 z2");
  CHECK(res.hits[1].polynomial.to_string() == "3 z1 z2");
  for (const auto& h : res.hits) CHECK(h.level == 3);
  CHECK(class_key(res.hits[0].fingerprint) == class_key(res.hits[1].fingerprint));
  const auto cls = group_into_classes(res.hits);
  CHECK(cls.classes.size() == 1);
  CHECK(cls.merged_count == 1);
}

TEST_CASE("three-qubit search and classification") {
  SearchConfig cfg;
  cfg.n = 3;
  const auto res = search_regular(cfg);
  CHECK(res.candidates == 256);
  CHECK(res.non_orthonormal == 0);
  CHECK(res.hits.size() == 40);
  std::set<long long> tangles;
  for (const auto& h : res.hits) {
    CHECK(*h.fingerprint.r == doctest::Approx(kSqrt3 / 4).epsilon(1e-12));
    for (double c : h.fingerprint.concurrence_sq) CHECK(std::abs(c - h.fingerprint.concurrence_sq[0]) < 1e-10);
    tangles.insert(std::llround(std::pow(16 * *h.fingerprint.tangle, 2)));
    CHECK(check_orthonormal(basis_from_polynomial(h.polynomial)).ok);
  }
  CHECK(tangles == std::set<long long>{65, 97, 113, 145});

  const auto cls = group_into_classes(res.hits);
  CHECK(cls.classes.size() == 8);
  CHECK(cls.merged_count == 4);
  std::size_t members = 0;
  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    const auto& rec = cls.classes[c];
    members += rec.members.size();
    CHECK(rec.witness_links.size() + 1 == rec.members.size());
    REQUIRE(rec.conjugate_partner.has_value());
    CHECK(*rec.conjugate_partner != c);
    CHECK(cls.classes[*rec.conjugate_partner].conjugate_partner == c);
    CHECK(cls.classes[*rec.conjugate_partner].key == rec.key);
    const Basis rep = basis_from_polynomial(rec.representative());
    for (const auto& link : rec.witness_links) {
      const auto psi = build_fiducial(rec.members[link.member]);
      CHECK(witness_residual(psi, rep, link.witness) < 1e-9);
    }
  }
  CHECK(members == 40);
  CHECK(group_into_classes({}).classes.empty());
}

TEST_CASE("witnesses") {
  const auto row1a = basis_from_polynomial(parse_polynomial("z1 z3 + 3 z2 z3 + z1 z2 z3", 3, 2));
  const auto row1b = basis_from_polynomial(parse_polynomial("3 z1 z3 + z2 z3 + 3 z1 z2 z3", 3, 2));
  const auto row2 = basis_from_polynomial(parse_polynomial("z1 z2 + z1 z3 + z2 z3 + 3 z1 z2 z3", 3, 2));

  const auto self = lc_equivalence_witness(row1a.fiducial, row1a, false);
  REQUIRE(self.has_value());
  CHECK(self->cliffords == std::vector<std::size_t>{0, 0, 0});
  CHECK(self->column == 0);

  CHECK_FALSE(lc_equivalence_witness(row1a.fiducial, row1b, false).has_value());
  const auto conj = lc_equivalence_witness(row1a.fiducial, row1b, true);
  REQUIRE(conj.has_value());
  CHECK(conj->conjugated);
  CHECK(witness_residual(row1a.fiducial, row1b, *conj) < 1e-9);

  CHECK_FALSE(lc_equivalence_witness(row1a.fiducial, row2, true).has_value());
  CHECK_THROWS_AS(lc_equivalence_witness(row1a.fiducial, basis_from_polynomial(parse_polynomial("z1 z2", 2, 2)), true),
                  ArgumentError);
}

TEST_CASE("four-qubit examples as an explicit candidate list") {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.polynomials = {parse_polynomial(paper_data::kFourQubitExample1, 4, 2),
                     parse_polynomial(paper_data::kFourQubitExample2, 4, 2)};
  const auto res = search_regular(cfg);
  REQUIRE(res.hits.size() == 2);
  CHECK(*res.hits[0].fingerprint.r == doctest::Approx(kSqrt3 / 8).epsilon(1e-12));
  CHECK(*res.hits[1].fingerprint.r == doctest::Approx(3 * kSqrt3 / 8).epsilon(1e-12));
  for (const auto& h : res.hits) CHECK(h.level == 5);
}

TEST_CASE("search output does not depend on threads or chunking") {
  SearchConfig cfg;
  cfg.n = 3;
  const std::string base = csv_of(search_regular(cfg).hits);
  for (unsigned jobs : {2u, 3u, 8u})
    for (std::size_t chunk : {1, 7, 64, 1000}) {
      cfg.jobs = jobs;
      cfg.chunk = chunk;
      CHECK(csv_of(search_regular(cfg).hits) == base);
    }
  SearchConfig sampled;
  sampled.n = 4;
  sampled.sample = 40;
  sampled.seed = 5;
  const std::string a = csv_of(search_regular(sampled).hits);
  sampled.jobs = 4;
  CHECK(csv_of(search_regular(sampled).hits) == a);
}

TEST_CASE("level cap filters on the formula level") {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.level_cap = 3;
  CHECK(search_regular(cfg).hits.empty());
}

TEST_CASE("even degree-1 terms leave the invariants unchanged") {
  std::mt19937_64 rng(79);
  SearchConfig cfg;
  cfg.n = 3;
  const auto hits = search_regular(cfg).hits;
  for (const auto& h : hits) {
    PhasePolynomial f = h.polynomial;
    for (std::size_t q = 1; q <= 3; ++q) f.add_term(make_monomial({q}), 2 * static_cast<std::int64_t>(rng() % 2));
    const Basis b = basis_from_polynomial(f);
    const auto geo = classify_basis(b);
    REQUIRE(geo.all_regular());
    const auto fp = invariant_fingerprint(b, geo);
    CHECK(fp.stab_order >= 1);
    CHECK(class_key(fp) == class_key(h.fingerprint));
  }
}

TEST_CASE("degree-1 terms add no new tangle classes") {
  SearchConfig with_linear;
  with_linear.n = 3;
  with_linear.min_degree = 1;
  const auto res = search_regular(with_linear);
  CHECK(res.candidates == 16384);
  std::set<std::string> keys;
  for (const auto& h : res.hits) keys.insert(class_key(h.fingerprint));
  SearchConfig canonical;
  canonical.n = 3;
  std::set<std::string> base;
  for (const auto& h : search_regular(canonical).hits) base.insert(class_key(h.fingerprint));
  CHECK(keys == base);
}
