// Copyright 2026 The zdlab Authors
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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "zdlab/ring.hpp"

using namespace zdlab;

namespace {

RingPtr z(unsigned n) { return make_zmod(n); }
RingPtr z2z2() { return make_ring(RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(2))); }

std::vector<Elem> items(const Ideal& i) { return i.elements().items(); }

std::vector<Elem> parse_all(const RingPtr& r, std::initializer_list<const char*> labels) {
  std::vector<Elem> out;
  for (auto l : labels) out.push_back(r->parse_element(l));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("constructions have the expected sizes and descriptors") {
  CHECK(z(6)->size() == 6);
  CHECK(z(6)->descriptor() == "Z6");
  auto p = z2z2();
  CHECK(p->size() == 4);
  CHECK(p->descriptor() == "Prod(Z2,Z2)");
  auto q = make_ring(RingSpec::poly_quotient(2, {0, 0, 1}));
  CHECK(q->size() == 4);
  CHECK(q->descriptor() == "PolyQuot(Z2,x^2)");
  std::set<std::string> labels(q->labels().begin(), q->labels().end());
  CHECK(labels == std::set<std::string>{"0", "1", "x", "1+x"});
}

TEST_CASE("product arithmetic is componentwise with the first factor least significant") {
  auto p = z2z2();
  const Elem a = p->parse_element("(1,0)");
  const Elem b = p->parse_element("(0,1)");
  CHECK(a == 1);
  CHECK(b == 2);
  CHECK(p->mul(a, b) == 0);
  CHECK(p->add(a, b) == p->one());
  CHECK(p->label(p->one()) == "(1,1)");
}

TEST_CASE("polynomial quotients reduce modulo the relation") {
  auto q = make_ring(RingSpec::poly_quotient(2, {0, 0, 1}));
  const Elem x = q->parse_element("x");
  CHECK(q->mul(x, x) == 0);
  const Elem one_x = q->parse_element("1+x");
  CHECK(q->mul(one_x, one_x) == q->one());
  CHECK(q->parse_element("x^3 + 1") == q->one());

  auto f4 = make_ring(RingSpec::poly_quotient(2, {1, 1, 1}));
  CHECK(ring_predicates(f4).is_field);
  auto r = make_ring(RingSpec::poly_quotient(3, {0, 0, 0, 1}));
  CHECK(r->size() == 27);
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(make_zmod(1), Error);
  CHECK_THROWS_AS(make_ring(RingSpec::poly_quotient(2, {1, 0, 2})), Error);  // 2 = 0 leading coefficient
  CHECK_THROWS_AS(make_ring(RingSpec::poly_quotient(3, {1, 2})), Error);
  CHECK_THROWS_AS(make_ring(RingSpec::poly_quotient(3, {1})), Error);
  CHECK_THROWS_AS(z(6)->parse_element("banana"), Error);
}

TEST_CASE("ideal generation") {
  CHECK(items(ideal_generated(z(6), std::vector<Elem>{2})) == std::vector<Elem>{0, 2, 4});
  CHECK(items(ideal_generated(z(4), std::vector<Elem>{})) == std::vector<Elem>{0});
  auto p = z2z2();
  CHECK(items(ideal_generated(p, std::vector<Elem>{p->parse_element("(0,1)")})) == parse_all(p, {"(0,0)", "(0,1)"}));
  CHECK_THROWS_AS(ideal_generated(z(4), std::vector<Elem>{9}), Error);
}

TEST_CASE("ideal arithmetic") {
  auto r4 = z(4);
  Ideal two = ideal_generated(r4, std::vector<Elem>{2});
  CHECK(ideal_combine(two, two, IdealOp::Product).is_zero());
  auto r6 = z(6);
  Ideal a = ideal_generated(r6, std::vector<Elem>{2});
  Ideal b = ideal_generated(r6, std::vector<Elem>{3});
  CHECK(ideal_combine(a, b, IdealOp::Intersect).is_zero());
  CHECK(ideal_combine(a, b, IdealOp::Sum).is_whole());
  CHECK(ideal_power(a, 0).is_whole());
  CHECK(ideal_power(two, 2).is_zero());
  CHECK_THROWS_AS(ideal_combine(two, a, IdealOp::Sum), Error);
}

TEST_CASE("annihilators") {
  CHECK(items(annihilator(ideal_generated(z(4), std::vector<Elem>{2}))) == std::vector<Elem>{0, 2});
  CHECK(items(annihilator(ideal_generated(z(6), std::vector<Elem>{3}))) == std::vector<Elem>{0, 2, 4});
  CHECK(annihilator(ideal_generated(z(9), std::vector<Elem>{})).is_whole());
}

TEST_CASE("ideal lattices") {
  auto l4 = ideals_of(z(4));
  REQUIRE(l4.size() == 3);
  CHECK(items(l4[1]) == std::vector<Elem>{0, 2});
  auto l6 = ideals_of(z(6));
  REQUIRE(l6.size() == 4);
  CHECK(items(l6[1]) == std::vector<Elem>{0, 3});
  CHECK(items(l6[2]) == std::vector<Elem>{0, 2, 4});
  CHECK(ideals_of(z(7)).size() == 2);
  CHECK_THROWS_AS(all_ideals(z(12), 8), BoundExceeded);
}

TEST_CASE("zero divisors and ring flags") {
  CHECK(zero_divisors_ring(*z(6)).items() == std::vector<Elem>{0, 2, 3, 4});
  auto p = z2z2();
  CHECK(zero_divisors_ring(*p).items() == parse_all(p, {"(0,0)", "(1,0)", "(0,1)"}));
  CHECK(zero_divisors_ring(*z(5)).items() == std::vector<Elem>{0});

  auto f5 = ring_predicates(z(5));
  CHECK(f5.is_field);
  CHECK(f5.is_domain);
  CHECK(f5.is_local);
  auto f4 = ring_predicates(z(4));
  CHECK_FALSE(f4.is_domain);
  CHECK(f4.is_local);
  REQUIRE(f4.maximal_ideals.size() == 1);
  CHECK(items(f4.maximal_ideals[0]) == std::vector<Elem>{0, 2});
  auto fp = ring_predicates(p);
  CHECK_FALSE(fp.is_local);
  CHECK(fp.maximal_ideals.size() == 2);
}

TEST_CASE("multiplicative sets are closed and contain 1") {
  auto r = z(12);
  MultiplicativeSet s(r, std::vector<Elem>{2});
  CHECK_FALSE(s.was_closed());
  CHECK(s.elements().items() == std::vector<Elem>{1, 2, 4, 8});
  MultiplicativeSet u(r, std::vector<Elem>{1, 5, 7, 11});
  CHECK(u.was_closed());
}

TEST_CASE("every universe ring passes the axiom check and matches the oracles") {
  for (const auto& spec : oracle::small_specs()) {
    auto r = make_ring(spec);
    CAPTURE(r->descriptor());
    CHECK_FALSE(check_ring_axioms(*r).has_value());

    // Lattice against subset enumeration.
    std::set<std::vector<Elem>> lattice;
    for (const auto& i : ideals_of(r)) lattice.insert(items(i));
    CHECK(lattice.size() == ideals_of(r).size());
    CHECK(lattice == oracle::ideals_by_subsets(*r));

    // Z(R) by brute force, and Z(R) = R \ units.
    CHECK(r->zero_divisors().items() == oracle::zero_divisors(*r));
    CHECK(r->zero_divisors() == units(*r).complement());
  }
}

TEST_CASE("lattice counts for Z/n follow the divisor count") {
  for (unsigned n = 2; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(ideals_of(z(n)).size() == oracle::divisor_count(n));
    CHECK(units(*z(n)).size() == oracle::totient(n));
  }
}

TEST_CASE("ideal identities hold across each lattice") {
  for (const auto& spec : oracle::small_specs()) {
    auto r = make_ring(spec);
    CAPTURE(r->descriptor());
    auto lattice = ideals_of(r);
    std::set<std::vector<Elem>> known;
    for (const auto& i : lattice) known.insert(items(i));
    for (const auto& i : lattice) {
      CHECK(ideal_generated(r, i.elements().items()) == i);
      CHECK(ideal_generated(r, i.generators()) == i);
      for (const auto& j : lattice) {
        Ideal sum = ideal_combine(i, j, IdealOp::Sum);
        Ideal prod = ideal_combine(i, j, IdealOp::Product);
        Ideal meet = ideal_combine(i, j, IdealOp::Intersect);
        CHECK(annihilator(sum) == ideal_combine(annihilator(i), annihilator(j), IdealOp::Intersect));
        CHECK(prod.subset_of(meet));
        CHECK(known.count(items(sum)) == 1);
        CHECK(known.count(items(prod)) == 1);
        CHECK(known.count(items(meet)) == 1);
      }
    }
  }
}

TEST_CASE("primitive idempotents split the ring into local factors") {
  auto p = z2z2();
  CHECK(primitive_idempotents(*p) == parse_all(p, {"(1,0)", "(0,1)"}));
  CHECK(primitive_idempotents(*z(12)) == std::vector<Elem>{4, 9});
  CHECK(primitive_idempotents(*z(8)) == std::vector<Elem>{1});
}
