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

#include "zdlab/dsl.hpp"

#include <cctype>

#include "zdlab/localization.hpp"
#include "zdlab/text.hpp"
#include "zdlab/zadapter.hpp"

namespace zdlab::dsl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Node ring() {
    skip();
    const std::size_t start = pos_;
    const std::string id = ident("a ring");
    Node n;
    if (id == "ZZ") {
      n.kind = Kind::Integers;
    } else if (id.size() > 1 && id[0] == 'Z' && all_digits(id.substr(1))) {
      n.kind = Kind::Zmod;
      n.number = to_unsigned(id.substr(1), start + 1);
    } else if (id == "Prod") {
      n.kind = Kind::Prod;
      expect('(');
      n.children.push_back(ring());
      expect(',');
      n.children.push_back(ring());
      expect(')');
    } else if (id == "PolyQuot") {
      n.kind = Kind::PolyQuot;
      expect('(');
      n.children.push_back(ring());
      expect(',');
      n.text = text::strip_spaces(atom("a polynomial"));
      expect(')');
    } else if (id == "Localize") {
      n.kind = Kind::LocalizeRing;
      expect('(');
      n.children.push_back(ring());
      expect(',');
      n.items = set();
      expect(')');
    } else if (id == "TotalQuotient") {
      n.kind = Kind::TotalQuotient;
      expect('(');
      n.children.push_back(ring());
      expect(')');
    } else {
      throw DslError("unknown ring constructor '" + id + "'", {start, pos_});
    }
    n.span = {start, pos_};
    return n;
  }

  Node module() {
    skip();
    const std::size_t start = pos_;
    const std::string id = ident("a module");
    Node n;
    if (id == "Reg") {
      n.kind = Kind::Reg;
    } else if (id == "Free") {
      n.kind = Kind::Free;
      expect('(');
      skip();
      const std::size_t at = pos_;
      n.number = to_unsigned(atom("a rank"), at);
      expect(')');
    } else if (id == "Cyclic") {
      n.kind = Kind::Cyclic;
      expect('(');
      n.items = list(')');
      expect(')');
    } else if (id == "Sum") {
      n.kind = Kind::Sum;
      expect('(');
      n.children.push_back(module());
      expect(',');
      n.children.push_back(module());
      expect(')');
    } else if (id == "Hom") {
      n.kind = Kind::Hom;
      expect('(');
      n.children.push_back(module());
      expect(')');
    } else if (id == "Tensor") {
      n.kind = Kind::Tensor;
      expect('(');
      n.children.push_back(module());
      expect(',');
      n.children.push_back(algebra());
      expect(')');
    } else if (id == "Localize" || id == "Fractions" || id == "Sub") {
      n.kind = id == "Localize" ? Kind::LocalizeModule : id == "Fractions" ? Kind::Fractions : Kind::Sub;
      expect('(');
      n.children.push_back(module());
      expect(',');
      n.items = set();
      expect(')');
    } else {
      throw DslError("unknown module constructor '" + id + "'", {start, pos_});
    }
    n.span = {start, pos_};
    return n;
  }

  Node algebra() {
    skip();
    const std::size_t start = pos_;
    const std::string id = ident("an algebra");
    if (id != "Algebra") throw DslError("expected Algebra(B,R,incl), got '" + id + "'", {start, pos_});
    Node n;
    n.kind = Kind::Algebra;
    expect('(');
    n.children.push_back(ring());
    expect(',');
    n.children.push_back(ring());
    expect(',');
    skip();
    const std::size_t at = pos_;
    n.text = ident("a structure map");
    if (n.text != "incl") throw DslError("only the canonical map 'incl' is supported", {at, pos_});
    expect(')');
    n.span = {start, pos_};
    return n;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw DslError("unexpected trailing text", {pos_, s_.size()});
  }

 private:
  static bool all_digits(std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  unsigned to_unsigned(std::string_view v, std::size_t at) const {
    if (!all_digits(v) || v.size() > 9) throw DslError("expected a number", {at, at + v.size()});
    return static_cast<unsigned>(std::stoul(std::string(v)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string ident(const char* what) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) throw DslError(std::string("expected ") + what, {start, std::min(start + 1, s_.size())});
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) {
      throw DslError(std::string("expected '") + c + "'", {pos_, std::min(pos_ + 1, s_.size())});
    }
    ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  // Raw text up to a ',' or closing bracket at depth zero.
  std::string atom(const char* what) {
    skip();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    std::string out = text::strip_spaces(s_.substr(start, pos_ - start));
    if (out.empty()) throw DslError(std::string("expected ") + what, {start, std::min(start + 1, s_.size())});
    return out;
  }

  std::vector<std::string> list(char close) {
    std::vector<std::string> out;
    if (peek(close)) return out;
    out.push_back(atom("an element"));
    while (peek(',')) {
      ++pos_;
      out.push_back(atom("an element"));
    }
    return out;
  }

  std::vector<std::string> set() {
    expect('{');
    auto out = list('}');
    expect('}');
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string join_items(const std::vector<std::string>& items) { return text::join(items, ","); }

RingSpec spec_of(const Node& n) {
  switch (n.kind) {
    case Kind::Zmod:
      return RingSpec::zmod(n.number);
    case Kind::Prod:
      return RingSpec::product(spec_of(n.children[0]), spec_of(n.children[1]));
    case Kind::PolyQuot: {
      const Node& base = n.children[0];
      if (base.kind != Kind::Zmod) throw DslError("PolyQuot needs a base ring Z<n>", base.span);
      std::map<unsigned, long long> poly;
      try {
        poly = text::parse_int_poly(n.text, 'x');
      } catch (const Error& e) {
        throw DslError(e.what(), n.span);
      }
      if (poly.empty()) throw DslError("relation must be a monic polynomial of positive degree", n.span);
      std::vector<unsigned> rel(poly.rbegin()->first + 1, 0);
      const long long m = base.number;
      for (auto [d, c] : poly) rel[d] = static_cast<unsigned>(((c % m) + m) % m);
      if (rel.size() < 2) throw DslError("relation must have positive degree", n.span);
      if (rel.back() != 1 % m) throw DslError("relation must be monic", n.span);
      return RingSpec::poly_quotient(base.number, std::move(rel));
    }
    default:
      throw DslError("this ring cannot be used as a factor or base", n.span);
  }
}

template <class F>
auto at_span(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DslError&) {
    throw;
  } catch (const BoundExceeded&) {
    throw;
  } catch (const Error& e) {
    throw DslError(e.what(), n.span);
  }
}

std::vector<Elem> ring_elements(const Node& n, const RingPtr& r) {
  std::vector<Elem> out;
  for (const auto& item : n.items) out.push_back(at_span(n, [&] { return r->parse_element(item); }));
  return out;
}

}  // namespace

Sort sort_of(Kind k) {
  switch (k) {
    case Kind::Zmod:
    case Kind::Integers:
    case Kind::Prod:
    case Kind::PolyQuot:
    case Kind::LocalizeRing:
    case Kind::TotalQuotient:
      return Sort::Ring;
    case Kind::Algebra:
      return Sort::Algebra;
    default:
      return Sort::Module;
  }
}

bool operator==(const Node& a, const Node& b) {
  return a.kind == b.kind && a.number == b.number && a.text == b.text && a.items == b.items &&
         a.children == b.children;
}

Node parse_ring(std::string_view text) {
  Parser p(text);
  Node n = p.ring();
  p.finish();
  return n;
}

Node parse_module(std::string_view text) {
  Parser p(text);
  Node n = p.module();
  p.finish();
  return n;
}

Node parse_algebra(std::string_view text) {
  Parser p(text);
  Node n = p.algebra();
  p.finish();
  return n;
}

std::string print(const Node& n) {
  auto child = [&](std::size_t i) { return print(n.children.at(i)); };
  switch (n.kind) {
    case Kind::Zmod:
      return "Z" + std::to_string(n.number);
    case Kind::Integers:
      return "ZZ";
    case Kind::Prod:
      return "Prod(" + child(0) + "," + child(1) + ")";
    case Kind::PolyQuot:
      return "PolyQuot(" + child(0) + "," + n.text + ")";
    case Kind::LocalizeRing:
    case Kind::LocalizeModule:
      return "Localize(" + child(0) + ",{" + join_items(n.items) + "})";
    case Kind::TotalQuotient:
      return "TotalQuotient(" + child(0) + ")";
    case Kind::Reg:
      return "Reg";
    case Kind::Free:
      return "Free(" + std::to_string(n.number) + ")";
    case Kind::Cyclic:
      return "Cyclic(" + join_items(n.items) + ")";
    case Kind::Sum:
      return "Sum(" + child(0) + "," + child(1) + ")";
    case Kind::Hom:
      return "Hom(" + child(0) + ")";
    case Kind::Tensor:
      return "Tensor(" + child(0) + "," + child(1) + ")";
    case Kind::Fractions:
      return "Fractions(" + child(0) + ",{" + join_items(n.items) + "})";
    case Kind::Sub:
      return "Sub(" + child(0) + ",{" + join_items(n.items) + "})";
    case Kind::Algebra:
      return "Algebra(" + child(0) + "," + child(1) + "," + n.text + ")";
  }
  return {};
}

bool is_integers(const Node& ring) { return ring.kind == Kind::Integers; }

RingPtr build_ring(const Node& n) {
  switch (n.kind) {
    case Kind::Integers:
      throw DslError("ZZ is infinite; only the integer adapter can use it", n.span);
    case Kind::LocalizeRing: {
      RingPtr base = build_ring(n.children[0]);
      auto seed = ring_elements(n, base);
      return at_span(n, [&] { return localize(base, MultiplicativeSet(base, seed)).ring; });
    }
    case Kind::TotalQuotient: {
      RingPtr base = build_ring(n.children[0]);
      return at_span(n, [&] { return total_quotient(base).ring; });
    }
    case Kind::Zmod:
    case Kind::Prod:
    case Kind::PolyQuot: {
      RingSpec spec = spec_of(n);
      return at_span(n, [&] { return make_ring(spec); });
    }
    default:
      throw DslError("expected a ring", n.span);
  }
}

FiniteAlgebra build_algebra(const Node& n) {
  if (n.kind != Kind::Algebra) throw DslError("expected an algebra", n.span);
  RingPtr b = build_ring(n.children[0]);
  RingPtr r = build_ring(n.children[1]);
  return at_span(n, [&] { return canonical_algebra(b, r); });
}

ModulePtr build_module(const Node& n, const RingPtr& ring, const ModuleLimits& limits) {
  switch (n.kind) {
    case Kind::Reg:
      return regular_module(ring);
    case Kind::Free:
      if (n.number == 0) throw DslError("Free needs rank >= 1", n.span);
      return at_span(n, [&] { return free_module(ring, n.number, limits); });
    case Kind::Cyclic: {
      auto gens = ring_elements(n, ring);
      return at_span(n, [&] { return cyclic_module(ideal_generated(ring, gens), limits); });
    }
    case Kind::Sum: {
      auto a = build_module(n.children[0], ring, limits);
      auto b = build_module(n.children[1], ring, limits);
      return at_span(n, [&] { return direct_sum(a, b, limits); });
    }
    case Kind::Hom: {
      auto a = build_module(n.children[0], ring, limits);
      return at_span(n, [&] { return hom_module(a, limits); });
    }
    case Kind::Tensor: {
      auto a = build_module(n.children[0], ring, limits);
      FiniteAlgebra alg = build_algebra(n.children[1]);
      if (alg.base()->descriptor() != a->ring()->descriptor()) {
        throw DslError("algebra base " + alg.base()->descriptor() + " does not match module ring " +
                           a->ring()->descriptor(),
                       n.children[1].span);
      }
      return at_span(n, [&] { return tensor_with_algebra(a, alg, limits); });
    }
    case Kind::LocalizeModule:
    case Kind::Fractions: {
      auto a = build_module(n.children[0], ring, limits);
      auto seed = ring_elements(n, a->ring());
      return at_span(n, [&] {
        MultiplicativeSet s(a->ring(), seed);
        return n.kind == Kind::Fractions ? fractions_over_base(a, s) : localize_module(a, s).module;
      });
    }
    case Kind::Sub: {
      auto a = build_module(n.children[0], ring, limits);
      std::vector<Elem> gens;
      for (const auto& item : n.items) gens.push_back(at_span(n, [&] { return a->parse_element(item); }));
      return at_span(n, [&] {
        Submodule s = submodule_generated(a, gens);
        return submodule_module(a, s.elements(), print(n));
      });
    }
    default:
      throw DslError("expected a module", n.span);
  }
}

RingPtr ring_from_text(std::string_view text) { return build_ring(parse_ring(text)); }

ModulePtr module_from_text(std::string_view text, const RingPtr& ring, const ModuleLimits& limits) {
  return build_module(parse_module(text), ring, limits);
}

unsigned integer_module_modulus(const Node& n) {
  if (n.kind != Kind::Cyclic || n.items.size() != 1) {
    throw DslError("over ZZ only Cyclic(n) is supported", n.span);
  }
  long long v = 0;
  try {
    v = text::parse_int(n.items[0]);
  } catch (const Error&) {
    throw DslError("expected an integer generator", n.span);
  }
  if (v < 0) v = -v;
  if (v == 0) throw DslError("Cyclic(0) over ZZ is ZZ itself, which is infinite", n.span);
  if (v > zz::kMaxModulus) throw DslError("modulus too large for the integer adapter", n.span);
  return static_cast<unsigned>(v);
}

std::string render_error(std::string_view text, const DslError& e) {
  const Span s = e.span();
  const std::size_t begin = std::min(s.begin, text.size());
  const std::size_t end = std::max(begin + 1, std::min(s.end, text.size()));
  std::string out = std::string(e.what()) + "\n  " + std::string(text) + "\n  ";
  out += std::string(begin, ' ') + std::string(end - begin, '^');
  return out;
}

}  // namespace zdlab::dsl
