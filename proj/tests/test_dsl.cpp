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

#include <random>
#include <string>

#include "doctest.h"
#include "zdlab/dsl.hpp"
#include "zdlab/text.hpp"

using namespace zdlab;
using dsl::Node;

namespace {

// Random sentences of the grammar, with random spacing.
class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  std::string ring(int depth) {
    switch (depth > 0 ? pick(4) : 0) {
      case 1:
        return "Prod(" + sp() + ring(depth - 1) + sp() + "," + sp() + ring(depth - 1) + ")";
      case 2:
        return "PolyQuot(" + zmod() + "," + sp() + poly() + sp() + ")";
      case 3:
        return "Localize(" + ring(depth - 1) + ",{" + elems(1 + pick(2)) + "})";
      default:
        return zmod();
    }
  }

  std::string module(int depth) {
    switch (depth > 0 ? pick(9) : pick(3)) {
      case 0:
        return "Reg";
      case 1:
        return "Free(" + sp() + std::to_string(1 + pick(3)) + sp() + ")";
      case 2:
        return "Cyclic(" + elems(pick(3)) + ")";
      case 3:
        return "Sum(" + module(depth - 1) + "," + sp() + module(depth - 1) + ")";
      case 4:
        return "Hom(" + sp() + module(depth - 1) + ")";
      case 5:
        return "Tensor(" + module(depth - 1) + ", Algebra(" + ring(1) + "," + ring(1) + ", incl))";
      case 6:
        return "Localize(" + module(depth - 1) + ",{" + elems(1) + "})";
      case 7:
        return "Fractions(" + module(depth - 1) + ",{" + elems(2) + "})";
      default:
        return "Sub(" + module(depth - 1) + ",{" + elems(1 + pick(2)) + "})";
    }
  }

 private:
  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  std::string sp() { return pick(3) == 0 ? " " : ""; }
  std::string zmod() { return "Z" + std::to_string(2 + pick(11)); }

  std::string poly() {
    static const char* polys[] = {"x^2", "x^2 + x", "x^3+1", "x^2 + 2*x + 1", "x"};
    return polys[pick(5)];
  }

  std::string elems(unsigned count) {
    static const char* atoms[] = {"0", "1", "2", "(0,1)", "(1, 0)", "x+1", "2*x", "(x,(1,0))", "1/3"};
    std::string out;
    for (unsigned i = 0; i < count; ++i) out += (i ? "," + sp() : "") + atoms[pick(9)];
    return out;
  }

  std::mt19937 rng_;
};

void check_spans(const Node& n, std::size_t limit) {
  CHECK(n.span.begin < n.span.end);
  CHECK(n.span.end <= limit);
  for (const auto& c : n.children) {
    CHECK(c.span.begin >= n.span.begin);
    CHECK(c.span.end <= n.span.end);
    check_spans(c, limit);
  }
}

dsl::Span error_span(void (*f)(std::string_view), std::string_view text) {
  try {
    f(text);
  } catch (const dsl::DslError& e) {
    return e.span();
  }
  FAIL("no error for " << text);
  return {};
}

void parse_ring_only(std::string_view t) { dsl::parse_ring(t); }
void parse_module_only(std::string_view t) { dsl::parse_module(t); }
void build_ring_text(std::string_view t) { dsl::ring_from_text(t); }

}  // namespace

TEST_CASE("printing then reparsing gives an equal tree") {
  Generator gen(20261019);
  for (int i = 0; i < 400; ++i) {
    const std::string r = gen.ring(2);
    CAPTURE(r);
    const Node a = dsl::parse_ring(r);
    const std::string printed = dsl::print(a);
    CHECK(dsl::parse_ring(printed) == a);
    CHECK(dsl::print(dsl::parse_ring(printed)) == printed);

    const std::string m = gen.module(3);
    CAPTURE(m);
    const Node b = dsl::parse_module(m);
    CHECK(dsl::parse_module(dsl::print(b)) == b);
  }
}

TEST_CASE("spans cover the input and nest") {
  Generator gen(7);
  for (int i = 0; i < 200; ++i) {
    const std::string text = "  " + gen.module(3) + " ";
    CAPTURE(text);
    const Node n = dsl::parse_module(text);
    CHECK(text.substr(n.span.begin, n.span.end - n.span.begin) == text::trim(text));
    check_spans(n, text.size());
  }
}

TEST_CASE("canonical printing") {
  CHECK(dsl::print(dsl::parse_ring("Prod( Z2 , Z2 )")) == "Prod(Z2,Z2)");
  CHECK(dsl::print(dsl::parse_module("Sum(Cyclic((0, 1)), Reg)")) == "Sum(Cyclic((0,1)),Reg)");
  CHECK(dsl::print(dsl::parse_module("Cyclic()")) == "Cyclic()");
  const Node q = dsl::parse_ring("PolyQuot(Z2, x^2 + x)");
  CHECK(q.kind == dsl::Kind::PolyQuot);
  CHECK(dsl::ring_from_text("PolyQuot(Z2, x^2 + x)")->size() == 4);
}

TEST_CASE("the example module over a product of fields") {
  const Node n = dsl::parse_module("Cyclic((0,1))");
  CHECK(n.kind == dsl::Kind::Cyclic);
  REQUIRE(n.items.size() == 1);
  CHECK(n.items[0] == "(0,1)");
  auto r = dsl::ring_from_text("Prod(Z2,Z2)");
  auto m = dsl::build_module(n, r);
  CHECK(m->size() == 2);
  CHECK(m->descriptor() == "Cyclic((0,1))");
}

TEST_CASE("syntax errors point at the offending text") {
  dsl::Span s = error_span(parse_ring_only, "Prod(Z2,Z");
  CHECK(s.begin == 8);
  s = error_span(parse_ring_only, "Prod(Z2 Z2)");
  CHECK(s.begin == 8);
  s = error_span(parse_module_only, "Sum(Reg,Reg) extra");
  CHECK(s.begin == 13);
  CHECK(s.end == 18);
  s = error_span(parse_module_only, "Frob(Reg)");
  CHECK(s.begin == 0);
  CHECK(s.end == 4);
  s = error_span(parse_module_only, "Free(two)");
  CHECK(s.begin == 5);
}

TEST_CASE("semantic errors carry the span of their node") {
  // Not monic.
  dsl::Span s = error_span(build_ring_text, "Prod(Z2, PolyQuot(Z2, 2*x^2+1))");
  CHECK(s.begin == 9);
  CHECK(s.end == 30);
  s = error_span(build_ring_text, "PolyQuot(Prod(Z2,Z2), x^2)");
  CHECK(s.begin == 9);
  CHECK_THROWS_AS(dsl::ring_from_text("ZZ"), dsl::DslError);

  auto r = dsl::ring_from_text("Z4");
  try {
    dsl::module_from_text("Sum(Reg, Cyclic(7x))", r);
    FAIL("accepted a bad element");
  } catch (const dsl::DslError& e) {
    CHECK(e.span().begin == 9);
    const std::string shown = dsl::render_error("Sum(Reg, Cyclic(7x))", e);
    CHECK(shown.find("         ^") != std::string::npos);
  }
}

TEST_CASE("integer adapter modules") {
  CHECK(dsl::is_integers(dsl::parse_ring("ZZ")));
  CHECK(dsl::integer_module_modulus(dsl::parse_module("Cyclic(6)")) == 6);
  CHECK(dsl::integer_module_modulus(dsl::parse_module("Cyclic(-6)")) == 6);
  CHECK_THROWS_AS(dsl::integer_module_modulus(dsl::parse_module("Cyclic(0)")), dsl::DslError);
  CHECK_THROWS_AS(dsl::integer_module_modulus(dsl::parse_module("Reg")), dsl::DslError);
  CHECK_THROWS_AS(dsl::integer_module_modulus(dsl::parse_module("Cyclic(2,3)")), dsl::DslError);
}

TEST_CASE("algebras") {
  const FiniteAlgebra a = dsl::build_algebra(dsl::parse_algebra("Algebra(Prod(Z2,Z2), Z2, incl)"));
  CHECK(a.descriptor() == "Algebra(Prod(Z2,Z2),Z2,incl)");
  CHECK(a.algebra()->size() == 4);
  CHECK_THROWS_AS(dsl::parse_algebra("Algebra(Z4,Z2,frob)"), dsl::DslError);
  auto r = dsl::ring_from_text("Z2");
  auto t = dsl::module_from_text("Tensor(Free(2), Algebra(PolyQuot(Z2,x^2+x+1),Z2,incl))", r);
  CHECK(t->size() == 16);
  CHECK(t->ring()->size() == 4);
}
