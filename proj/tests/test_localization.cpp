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

#include "doctest.h"
#include "oracles.hpp"
#include "zdlab/localization.hpp"
#include "zdlab/predicates.hpp"

using namespace zdlab;

namespace {

RingPtr z(unsigned n) { return make_zmod(n); }
RingPtr z2z2() { return make_ring(RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(2))); }

MultiplicativeSet mset(const RingPtr& r, std::initializer_list<const char*> labels) {
  std::vector<Elem> seed;
  for (auto l : labels) seed.push_back(r->parse_element(l));
  return MultiplicativeSet(r, seed);
}

// The defining relation, evaluated directly.
bool related(const FiniteRing& r, const ElementSet& s, Elem x, Elem a, Elem y, Elem b) {
  for (Elem u : s) {
    if (r.mul(u, r.sub(r.mul(b, x), r.mul(a, y))) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("inverting an idempotent kills the complementary factor") {
  auto r = z2z2();
  auto s = mset(r, {"(1,1)", "(1,0)"});
  LocalizedRing l = localize(r, s);
  CHECK(l.ring->size() == 2);
  CHECK_FALSE(l.degenerate);
  CHECK(l.canonical[r->parse_element("(0,1)")] == 0);
  CHECK(l.canonical[r->parse_element("(1,0)")] == l.ring->one());
  CHECK_FALSE(check_ring_axioms(*l.ring).has_value());
  CHECK(l.ring->descriptor() == "Localize(Prod(Z2,Z2),{(1,0),(1,1)})");

  auto m = cyclic_module(ideal_generated(r, std::vector<Elem>{r->parse_element("(0,1)")}));
  LocalizedModule lm = localize_module(m, s);
  CHECK(lm.module->size() == 2);
  CHECK(lm.canonical == std::vector<Elem>{0, 1});
  CHECK_FALSE(check_module_axioms(*lm.module).has_value());
}

TEST_CASE("localizing at units is an isomorphism") {
  for (const auto& spec : oracle::small_specs()) {
    auto r = make_ring(spec);
    auto u = units(*r).items();
    LocalizedRing l = localize(r, MultiplicativeSet(r, u));
    CAPTURE(r->descriptor());
    CHECK(canonical_is_isomorphism(l));
  }
}

TEST_CASE("total quotient rings of finite rings are the rings themselves") {
  CHECK(canonical_is_isomorphism(total_quotient(z(6))));
  CHECK(canonical_is_isomorphism(total_quotient(z(7))));
  CHECK(canonical_is_isomorphism(total_quotient(z2z2())));
}

TEST_CASE("zero in S gives the zero ring") {
  auto r = z(6);
  LocalizedRing l = localize(r, mset(r, {"0"}));
  CHECK(l.degenerate);
  CHECK(l.ring->size() == 1);
}

TEST_CASE("fractions parse and print") {
  auto r = z(12);
  auto s = mset(r, {"2"});
  LocalizedRing l = localize(r, s);
  // Z/12 at {1,2,4,8} is Z/3.
  CHECK(l.ring->size() == 3);
  const Elem half = l.ring->parse_element("1/2");
  CHECK(l.ring->mul(half, l.canonical[2]) == l.ring->one());
  CHECK(l.ring->parse_element(l.ring->label(half)) == half);
  CHECK_THROWS_AS(l.ring->parse_element("1/3"), Error);
}

TEST_CASE("the relation is an equivalence and the tables respect it") {
  for (const auto& spec : oracle::small_specs()) {
    auto r = make_ring(spec);
    if (r->size() > 9) continue;
    for (Elem seed = 0; seed < r->size(); ++seed) {
      MultiplicativeSet s(r, std::vector<Elem>{seed});
      LocalizedRing l = localize(r, s);
      CAPTURE(l.ring->descriptor());
      if (!l.degenerate) CHECK_FALSE(check_ring_axioms(*l.ring).has_value());
      for (Elem x = 0; x < r->size(); ++x)
        for (Elem a : s.elements())
          for (Elem y = 0; y < r->size(); ++y)
            for (Elem b : s.elements()) {
              CHECK(related(*r, s.elements(), x, a, y, b) == (l.fraction(x, a) == l.fraction(y, b)));
            }
      for (Elem x = 0; x < r->size(); ++x)
        for (Elem y = 0; y < r->size(); ++y) {
          CHECK(l.canonical[r->add(x, y)] == l.ring->add(l.canonical[x], l.canonical[y]));
          CHECK(l.canonical[r->mul(x, y)] == l.ring->mul(l.canonical[x], l.canonical[y]));
        }
    }
  }
}

TEST_CASE("natural map kernels match the torsion-free predicate") {
  auto r = z2z2();
  auto m = cyclic_module(ideal_generated(r, std::vector<Elem>{r->parse_element("(0,1)")}));
  CHECK(natural_map_kernel(m).is_zero());
  for (const auto& spec : oracle::small_specs()) {
    auto ring = make_ring(spec);
    std::vector<ModulePtr> mods{regular_module(ring)};
    for (const auto& i : ideals_of(ring))
      if (!i.is_whole()) mods.push_back(cyclic_module(i));
    for (const auto& mod : mods) {
      CAPTURE(mod->descriptor());
      CHECK(natural_map_kernel(mod).is_zero() == is_torsion_free(mod).holds);
    }
  }
}

TEST_CASE("fractions as modules over the base ring") {
  auto r = z(12);
  auto s = mset(r, {"3"});
  auto m = fractions_over_base(regular_module(r), s);
  CHECK(m->ring()->descriptor() == "Z12");
  CHECK(m->size() == 4);
  CHECK_FALSE(check_module_axioms(*m).has_value());
  // Z(R) and Z(R_S) agree for S inside the regular elements.
  for (const auto& spec : oracle::small_specs()) {
    auto ring = make_ring(spec);
    auto u = units(*ring).items();
    auto fm = fractions_over_base(regular_module(ring), MultiplicativeSet(ring, u));
    CHECK(zero_divisors_module(*fm) == ring->zero_divisors());
    CHECK(is_torsion_free(fm).holds);
    CHECK(is_auslander(fm).holds);
  }
}

TEST_CASE("multiplicative set enumeration") {
  auto r = z(6);
  auto all = multiplicative_sets_within(r, ElementSet::full(6));
  CHECK_FALSE(all.truncated);
  // Closed subsets of Z/6 containing 1.
  std::vector<std::vector<Elem>> got;
  for (const auto& s : all.sets) got.push_back(s.elements().items());
  std::vector<std::vector<Elem>> oracle_sets;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (!(mask & 2u)) continue;
    bool closed = true;
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> r->mul(a, b) & 1u)) closed = false;
    if (!closed) continue;
    std::vector<Elem> items;
    for (Elem e = 0; e < 6; ++e)
      if (mask >> e & 1u) items.push_back(e);
    oracle_sets.push_back(items);
  }
  std::sort(oracle_sets.begin(), oracle_sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  CHECK(got == oracle_sets);
  auto capped = multiplicative_sets_within(make_zmod(30), ElementSet::full(30), 5);
  CHECK(capped.truncated);
  CHECK(capped.sets.size() == 5);
}
