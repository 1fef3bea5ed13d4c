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
#include "zdlab/algebra.hpp"
#include "zdlab/ext.hpp"

using namespace zdlab;

namespace {

RingPtr z(unsigned n) { return make_zmod(n); }
RingPtr z2z2() { return make_ring(RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(2))); }

ExtElement poly(const RingPtr& r, const char* text) { return parse_ext(text, r); }

// Every polynomial with support in {1, X, X^2}, in encoding order.
std::vector<ExtElement> quadratics(const ExtElement::Base& base, std::size_t carrier, ExtShape shape = {}) {
  std::vector<ExtElement> out;
  for (Elem a = 0; a < carrier; ++a)
    for (Elem b = 0; b < carrier; ++b)
      for (Elem c = 0; c < carrier; ++c) {
        out.emplace_back(base, shape, ExtElement::Terms{{{{0, 0}}, c}, {{{1, 0}}, b}, {{{2, 0}}, a}});
      }
  return out;
}

// Ideal of R generated by products of coefficients.
Ideal product_content(const ExtElement& f, const ExtElement& g) {
  return ideal_combine(content_ideal(f), content_ideal(g), IdealOp::Product);
}

}  // namespace

TEST_CASE("parsing and printing") {
  auto r = z(4);
  ExtElement f = poly(r, "2*X^1 + 2");
  CHECK(f.to_string() == "2*X+2");
  CHECK(poly(r, "X^2 + 3*X + X^2").to_string() == "2*X^2+3*X");
  CHECK(poly(r, "0").is_zero());
  CHECK(poly(r, "0").to_string() == "0");
  ExtElement two = poly(r, "X1*X2 + X2^2 + 1");
  CHECK(two.shape().variables == 2);
  CHECK(two.to_string() == "X1*X2+X2^2+1");
  ExtElement s = poly(r, "series(3; X^4 + X + 1)");
  CHECK(s.shape().kind == ExtKind::Series);
  CHECK(s.truncated());
  CHECK(s.to_string() == "series(3; X+1)");

  auto p = z2z2();
  CHECK(poly(p, "(1,0)*X + (0,1)").to_string() == "(1,0)*X+(0,1)");
  auto q = make_ring(RingSpec::poly_quotient(3, {0, 0, 1}));
  ExtElement g = poly(q, "(1+x)*X + 2*x");
  CHECK(g.to_string() == "(1+x)*X+(2*x)");
  CHECK(parse_ext(g.to_string(), q).terms() == g.terms());
  CHECK_THROWS_AS(poly(r, "X + banana"), Error);
  CHECK_THROWS_AS(poly(r, "series(2; X1 + 1)"), Error);
}

TEST_CASE("arithmetic") {
  auto r4 = z(4);
  CHECK(ext_arith(poly(r4, "2*X+2"), poly(r4, "2"), ExtOp::Mul).is_zero());
  ExtElement f = poly(r4, "3*X^2 + X + 2");
  CHECK(ext_arith(f, poly(r4, "1"), ExtOp::Mul).terms() == f.terms());
  auto r2 = z(2);
  ExtElement s = poly(r2, "X1 + X2");
  CHECK(ext_arith(s, s, ExtOp::Mul).to_string() == "X1^2+X2^2");

  ExtElement a = poly(r4, "series(3; X + 1)");
  ExtElement sq = ext_arith(a, ext_arith(a, a, ExtOp::Mul), ExtOp::Mul);
  CHECK(sq.to_string() == "series(3; 3*X^2+3*X+1)");
  CHECK(sq.truncated());
  CHECK_THROWS_AS(ext_arith(a, f, ExtOp::Mul), Error);
  CHECK_THROWS_AS(ext_arith(a, poly(r4, "series(4; X)"), ExtOp::Add), Error);
  CHECK_THROWS_AS(ext_arith(f, poly(z(6), "X"), ExtOp::Add), Error);

  auto m = regular_module(r4);
  ExtElement g = parse_ext("2", m);
  CHECK(ext_arith(poly(r4, "2*X+2"), g, ExtOp::Act).is_zero());
}

TEST_CASE("content ideals") {
  CHECK(content_ideal(poly(z(4), "2*X+2")).elements().items() == std::vector<Elem>{0, 2});
  CHECK(content_ideal(poly(z(4), "0")).is_zero());
  CHECK(content_ideal(poly(z(6), "3*X^2 + 2")).is_whole());
}

TEST_CASE("zero divisors on extensions") {
  auto reg4 = regular_module(z(4));
  Verdict v = is_zd_on_extension(poly(z(4), "2*X+2"), reg4);
  CHECK(v.holds);
  CHECK(v.witness->labels == std::vector<std::string>{"2"});
  for (unsigned n : {2u, 4u, 6u, 9u}) CHECK_FALSE(is_zd_on_extension(poly(z(n), "X"), regular_module(z(n))).holds);
  auto p = z2z2();
  Verdict w = is_zd_on_extension(poly(p, "(1,0) + (1,0)*X"), regular_module(p));
  CHECK(w.holds);
  CHECK(w.witness->labels == std::vector<std::string>{"(0,1)"});

  Verdict b = brute_force_zd(poly(z(4), "2*X+2"), reg4, 0);
  CHECK(b.holds);
  CHECK(b.witness->labels == std::vector<std::string>{"2"});
  CHECK_FALSE(brute_force_zd(poly(z(4), "1"), reg4, 2).holds);
  Verdict b6 = brute_force_zd(poly(z(6), "3*X+3"), regular_module(z(6)), 0);
  CHECK(b6.holds);
  CHECK(b6.witness->labels == std::vector<std::string>{"2"});
  CHECK_THROWS_AS(brute_force_zd(poly(z(12), "X"), regular_module(z(12)), 8, 1000), BoundExceeded);
}

TEST_CASE("McCoy witnesses") {
  auto reg4 = regular_module(z(4));
  auto w = mccoy_witness(poly(z(4), "2*X+2"), parse_ext("2", reg4));
  CHECK(w.element == 2);
  CHECK(w.k == 1);
  auto w0 = mccoy_witness(poly(z(4), "0"), parse_ext("3*X + 2", reg4));
  CHECK(w0.element == 1);  // least nonzero element of c(g) = (1)

  auto p = z2z2();
  auto reg = regular_module(p);
  auto wp = mccoy_witness(poly(p, "(1,0)"), parse_ext("(0,1)*X + (0,1)", reg));
  CHECK(reg->label(wp.element) == "(0,1)");

  auto r8 = z(8);
  auto reg8 = regular_module(r8);
  ExtElement f = poly(r8, "2*X+2");
  ExtElement g = parse_ext("4", reg8);
  auto w8 = mccoy_witness(f, g);
  CHECK(w8.k == 1);
  CHECK(w8.element == 4);

  CHECK_THROWS_AS(mccoy_witness(poly(z(4), "X"), parse_ext("1", reg4)), Error);
  CHECK_THROWS_AS(mccoy_witness(poly(z(4), "2"), parse_ext("0", reg4)), Error);
  CHECK_THROWS_AS(mccoy_witness(poly(z(4), "series(2; X^3 + 2)"), parse_ext("series(2; 2)", reg4)), Error);
}

TEST_CASE("the least k can exceed one") {
  // Chain rings such as Z/8 are Gaussian (c(fg) = c(f)c(g)), so k = 1
  // there; Z4[x]/(x^2) has the non-principal ideal (2, x).
  auto r = make_ring(RingSpec::poly_quotient(4, {0, 0, 1}));
  auto reg = regular_module(r);
  std::vector<ExtElement> fs, gs;
  for (Elem a = 0; a < r->size(); ++a)
    for (Elem b = 0; b < r->size(); ++b) {
      fs.emplace_back(r, ExtShape{}, ExtElement::Terms{{{{0, 0}}, b}, {{{1, 0}}, a}});
      gs.emplace_back(reg, ExtShape{}, ExtElement::Terms{{{{0, 0}}, b}, {{{1, 0}}, a}});
    }
  unsigned max_k = 0;
  for (const auto& f : fs)
    for (const auto& g : gs) {
      if (g.is_zero() || !ext_exact_product(f, g).is_zero()) continue;
      auto w = mccoy_witness(f, g);
      max_k = std::max(max_k, w.k);
      for (const auto& [e, c] : f.terms()) CHECK(reg->act(c, w.element) == 0);
    }
  CHECK(max_k == 2);
}

TEST_CASE("criterion agrees with brute force") {
  std::size_t cases = 0;
  for (const auto& spec : oracle::small_specs()) {
    auto r = make_ring(spec);
    if (r->size() > 6) continue;
    std::vector<ModulePtr> mods{regular_module(r)};
    for (const auto& i : ideals_of(r))
      if (!i.is_whole()) mods.push_back(cyclic_module(i));
    if (r->size() <= 2) mods.push_back(free_module(r, 3));
    for (const auto& m : mods) {
      if (m->size() > 8) continue;
      for (const auto& f : quadratics(r, r->size())) {
        CAPTURE(m->descriptor());
        CAPTURE(f.to_string());
        const bool criterion = is_zd_on_extension(f, m).holds;
        CHECK(criterion == brute_force_zd(f, m, 0).holds);
        if (m->size() <= 4 && r->size() <= 4) CHECK(criterion == brute_force_zd(f, m, 1).holds);
        ++cases;
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("McCoy witness postcondition and content containment") {
  for (const auto& spec : oracle::small_specs()) {
    auto r = make_ring(spec);
    if (r->size() > 8) continue;
    auto reg = regular_module(r);
    auto fs = quadratics(r, r->size());
    auto gs = quadratics(reg, r->size());
    for (const auto& f : fs) {
      for (std::size_t j = 1; j < gs.size(); ++j) {
        const auto& g = gs[j];
        if (!ext_exact_product(f, g).is_zero()) continue;
        auto w = mccoy_witness(f, g);
        CHECK(w.element != 0);
        for (const auto& [e, c] : f.terms()) CHECK(reg->act(c, w.element) == 0);
      }
    }
    // c(fg) within c(f)c(g), on a sample of pairs.
    for (std::size_t i = 0; i < fs.size(); i += 7)
      for (std::size_t j = 0; j < fs.size(); j += 5) {
        ExtElement prod = ext_arith(fs[i], fs[j], ExtOp::Mul);
        CHECK(content_ideal(prod).subset_of(product_content(fs[i], fs[j])));
      }
  }
}

TEST_CASE("one variable embeds in two, series agree with polynomials") {
  for (const auto& spec : oracle::small_specs()) {
    auto r = make_ring(spec);
    if (r->size() > 6) continue;
    auto reg = regular_module(r);
    for (const auto& f : quadratics(r, r->size())) {
      ExtElement f2(r, ExtShape::polynomial(2), f.terms());
      ExtElement fs(r, ExtShape::series(8), f.terms());
      const bool one = is_zd_on_extension(f, reg).holds;
      CHECK(one == is_zd_on_extension(f2, reg).holds);
      CHECK(one == is_zd_on_extension(fs, reg).holds);
      CHECK(one == brute_force_zd(f2, reg, 0).holds);
    }
    for (const auto& m : {reg, free_module(r, 1)}) {
      const bool p1 = extension_auslander(m, ExtShape::polynomial(1)).holds;
      CHECK(p1 == extension_auslander(m, ExtShape::polynomial(2)).holds);
      CHECK(p1 == extension_auslander(m, ExtShape::series(8)).holds);
    }
  }
}

TEST_CASE("extension Auslander and torsion-free follow the base module") {
  auto p = z2z2();
  auto m = cyclic_module(ideal_generated(p, std::vector<Elem>{p->parse_element("(0,1)")}));
  Verdict a = extension_auslander(m, ExtShape::polynomial(1));
  CHECK_FALSE(a.holds);
  CHECK(a.witness->kind == WitnessKind::Polynomial);
  CHECK(a.witness->labels == std::vector<std::string>{"(1,0)"});
  CHECK(extension_torsion_free(m, ExtShape::series(8)).holds);
  CHECK(extension_auslander(regular_module(z(12)), ExtShape::polynomial(2)).holds);
}

TEST_CASE("Ohm-Rush and McCoy algebras") {
  for (unsigned n : {2u, 4u, 6u}) {
    auto self = canonical_algebra(z(n), z(n));
    CHECK(is_ohm_rush(self).holds);
    CHECK(is_mccoy_algebra(self).holds);
  }
  auto z2 = z(2);
  auto dual = canonical_algebra(make_ring(RingSpec::poly_quotient(2, {0, 0, 1})), z2);
  CHECK(is_ohm_rush(dual).holds);
  CHECK(algebra_content(dual, dual.algebra()->parse_element("x")).is_whole());
  Verdict dm = is_mccoy_algebra(dual);
  CHECK_FALSE(dm.holds);
  CHECK(dm.witness->labels == std::vector<std::string>{"x", "x"});

  auto split = canonical_algebra(z2z2(), z2);
  CHECK(is_ohm_rush(split).holds);
  Verdict sm = is_mccoy_algebra(split);
  CHECK_FALSE(sm.holds);
  CHECK(sm.witness->labels == std::vector<std::string>{"(1,0)", "(0,1)"});

  auto f4 = canonical_algebra(make_ring(RingSpec::poly_quotient(2, {1, 1, 1})), z2);
  CHECK(is_mccoy_algebra(f4).holds);
  CHECK(is_faithfully_flat(f4.as_module()).holds);

  CHECK_THROWS_AS(canonical_algebra(z(3), z(2)), Error);
  CHECK_THROWS_AS(FiniteAlgebra(z(4), z(2), {0, 1}, "bad"), Error);
}
