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

#include "zdlab/ext.hpp"

#include <algorithm>
#include <cctype>

#include "zdlab/text.hpp"

namespace zdlab {

namespace {

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || a->descriptor() == b->descriptor(); }

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  return a == b || (a->descriptor() == b->descriptor() && a->context() == b->context());
}

std::string monomial(const Exponent& e, unsigned variables) {
  auto power = [](std::string var, unsigned k) {
    if (k == 0) return std::string();
    return k == 1 ? var : var + "^" + std::to_string(k);
  };
  if (variables == 1) return power("X", e.e[0]);
  std::string a = power("X1", e.e[0]);
  std::string b = power("X2", e.e[1]);
  if (!a.empty() && !b.empty()) return a + "*" + b;
  return a + b;
}

bool needs_parens(const std::string& label) {
  if (text::wrapped_in_parens(label)) return false;
  return label.find_first_of("+*") != std::string::npos;
}

}  // namespace

ExtElement::ExtElement(Base base, ExtShape shape, Terms terms) : base_(std::move(base)), shape_(shape) {
  if (shape_.variables < 1 || shape_.variables > kMaxVariables) throw Error("unsupported number of variables");
  if (shape_.kind == ExtKind::Series) {
    if (shape_.variables != 1) throw Error("power series are univariate");
    if (shape_.precision == 0) throw Error("series precision must be positive");
  }
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    if (shape_.variables == 1 && e.e[1] != 0) throw Error("exponent uses a second variable");
    if (shape_.kind == ExtKind::Series && e.e[0] >= shape_.precision) {
      truncated_ = true;
      continue;
    }
    terms_.emplace(e, c);
  }
}

const RingPtr& ExtElement::ring() const {
  if (auto r = std::get_if<RingPtr>(&base_)) return *r;
  return std::get<ModulePtr>(base_)->ring();
}

const ModulePtr& ExtElement::module() const {
  if (auto m = std::get_if<ModulePtr>(&base_)) return *m;
  throw Error("element has ring coefficients");
}

Elem ExtElement::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::string ExtElement::coefficient_label(Elem c) const {
  std::string label = over_ring() ? ring()->label(c) : module()->label(c);
  return needs_parens(label) ? "(" + label + ")" : label;
}

std::string ExtElement::to_string() const {
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial(e, shape_.variables);
    if (mono.empty()) {
      parts.push_back(coefficient_label(c));
    } else if (over_ring() && c == ring()->one()) {
      parts.push_back(mono);
    } else {
      parts.push_back(coefficient_label(c) + "*" + mono);
    }
  }
  std::string body = parts.empty() ? "0" : text::join(parts, "+");
  if (shape_.kind == ExtKind::Series) return "series(" + std::to_string(shape_.precision) + "; " + body + ")";
  return body;
}

namespace {

// Convolution; `mul(a, b)` gives the product coefficient, `add` accumulates
// in the target.
template <typename Mul, typename Add>
ExtElement::Terms convolve(const ExtElement::Terms& a, const ExtElement::Terms& b, Mul mul, Add add) {
  ExtElement::Terms out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e;
      for (unsigned i = 0; i < kMaxVariables; ++i) e.e[i] = ea.e[i] + eb.e[i];
      Elem p = mul(ca, cb);
      auto [it, fresh] = out.emplace(e, p);
      if (!fresh) it->second = add(it->second, p);
    }
  return out;
}

void check_shapes(const ExtElement& a, const ExtElement& b) {
  if (a.shape().kind != b.shape().kind) throw Error("variant mismatch");
  if (a.shape().variables != b.shape().variables) throw Error("variant mismatch: number of variables");
  if (a.shape().kind == ExtKind::Series && a.shape().precision != b.shape().precision) {
    throw Error("precision mismatch");
  }
}

ExtElement::Terms product_terms(const ExtElement& a, const ExtElement& b) {
  if (!a.over_ring()) throw Error("left factor must have ring coefficients");
  if (!same_ring(a.ring(), b.ring())) throw Error("different coefficient rings");
  if (b.over_ring()) {
    const FiniteRing& r = *a.ring();
    return convolve(
        a.terms(), b.terms(), [&](Elem x, Elem y) { return r.mul(x, y); },
        [&](Elem x, Elem y) { return r.add(x, y); });
  }
  const FiniteModule& m = *b.module();
  return convolve(
      a.terms(), b.terms(), [&](Elem x, Elem y) { return m.act(x, y); },
      [&](Elem x, Elem y) { return m.add(x, y); });
}

}  // namespace

ExtElement ext_arith(const ExtElement& a, const ExtElement& b, ExtOp op) {
  check_shapes(a, b);
  switch (op) {
    case ExtOp::Add: {
      ExtElement::Terms out = a.terms();
      if (a.over_ring() != b.over_ring()) throw Error("cannot add ring and module coefficients");
      std::function<Elem(Elem, Elem)> add;
      if (a.over_ring()) {
        if (!same_ring(a.ring(), b.ring())) throw Error("different coefficient rings");
        add = [r = a.ring()](Elem x, Elem y) { return r->add(x, y); };
      } else {
        if (!same_module(a.module(), b.module())) throw Error("different coefficient modules");
        add = [m = a.module()](Elem x, Elem y) { return m->add(x, y); };
      }
      for (const auto& [e, c] : b.terms()) {
        auto [it, fresh] = out.emplace(e, c);
        if (!fresh) it->second = add(it->second, c);
      }
      ExtElement r(a.base(), a.shape(), std::move(out));
      if (a.truncated() || b.truncated()) r.mark_truncated();
      return r;
    }
    case ExtOp::Mul:
    case ExtOp::Act: {
      if (op == ExtOp::Mul && !b.over_ring()) throw Error("multiplication needs ring coefficients");
      if (op == ExtOp::Act && b.over_ring()) throw Error("scalar action needs module coefficients");
      ExtElement r(b.base(), a.shape(), product_terms(a, b));
      if (a.truncated() || b.truncated()) r.mark_truncated();
      return r;
    }
  }
  throw Error("unknown operation");
}

ExtElement ext_exact_product(const ExtElement& a, const ExtElement& b) {
  ExtShape shape = ExtShape::polynomial(std::max(a.shape().variables, b.shape().variables));
  return ExtElement(b.base(), shape, product_terms(a, b));
}

Ideal content_ideal(const ExtElement& f) {
  if (!f.over_ring()) throw Error("content_ideal needs ring coefficients");
  std::vector<Elem> gens;
  for (const auto& [e, c] : f.terms()) gens.push_back(c);
  return ideal_generated(f.ring(), gens);
}

Submodule content_submodule(const ExtElement& g) {
  std::vector<Elem> gens;
  for (const auto& [e, c] : g.terms()) gens.push_back(c);
  return submodule_generated(g.module(), gens);
}

Verdict is_zd_on_extension(const ExtElement& f, const ModulePtr& m) {
  if (!f.over_ring()) throw Error("f must have ring coefficients");
  if (!same_ring(f.ring(), m->ring())) throw Error("f and M live over different rings");
  if (m->is_zero()) return Verdict::zero_module();
  ElementSet killed = annihilated_by(*m, content_ideal(f));
  if (killed.size() > 1) return Verdict::pass(module_witness(*m, killed.items()[1]));
  Verdict v = Verdict::fail({WitnessKind::Polynomial, {f.to_string()}, {}});
  v.note = "c(f) kills no nonzero element";
  return v;
}

Verdict brute_force_zd(const ExtElement& f, const ModulePtr& m, unsigned degree_bound, std::size_t budget) {
  if (!f.over_ring()) throw Error("f must have ring coefficients");
  if (!same_ring(f.ring(), m->ring())) throw Error("f and M live over different rings");
  if (m->is_zero()) return Verdict::zero_module();
  const unsigned vars = f.shape().variables;
  std::vector<Exponent> monos;
  for (unsigned a = 0; a <= degree_bound; ++a) {
    if (vars == 1) {
      monos.push_back({{a, 0}});
    } else {
      for (unsigned b = 0; a + b <= degree_bound; ++b) monos.push_back({{a, b}});
    }
  }
  std::sort(monos.begin(), monos.end());
  FreeCoords space{m->size(), static_cast<unsigned>(monos.size())};
  std::size_t total = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (total > budget / m->size()) throw BoundExceeded("brute-force search space exceeds the budget");
    total *= m->size();
  }
  for (std::size_t idx = 1; idx < total; ++idx) {
    auto coords = space.decode(idx);
    ExtElement::Terms terms;
    for (std::size_t i = 0; i < monos.size(); ++i) terms.emplace(monos[i], coords[i]);
    ExtElement g(m, ExtShape::polynomial(vars), std::move(terms));
    if (ext_exact_product(f, g).is_zero()) {
      return Verdict::pass(Witness{WitnessKind::Polynomial, {g.to_string()}, {}});
    }
  }
  Verdict v = Verdict::fail({WitnessKind::Polynomial, {f.to_string()}, {}});
  v.note = "no annihilating g up to degree " + std::to_string(degree_bound);
  return v;
}

McCoyResult mccoy_witness(const ExtElement& f, const ExtElement& g) {
  if (!f.over_ring() || g.over_ring()) throw Error("expected f over R and g over M");
  if (g.is_zero()) throw Error("g must be nonzero");
  if (f.truncated() || g.truncated()) throw Error("truncation-lossy series input");
  if (!ext_exact_product(f, g).is_zero()) throw Error("f g is not zero");
  const Ideal cf = content_ideal(f);
  Submodule p = content_submodule(g);
  for (unsigned k = 1;; ++k) {
    Submodule q = ideal_action(cf, p);
    if (q.is_zero()) {
      const Elem m = p.elements().items().at(1);
      const FiniteModule& mod = *g.module();
      for (const auto& [e, c] : f.terms()) {
        if (mod.act(c, m) != 0) throw Error("witness check failed");
      }
      return {m, k};
    }
    if (q.elements() == p.elements()) throw Error("content chain stabilized above zero");
    p = std::move(q);
  }
}

ExtElement polynomial_with_content(const Ideal& ideal, ExtShape shape) {
  ExtElement::Terms terms;
  const auto& gens = ideal.generators();
  for (unsigned i = 0; i < gens.size(); ++i) {
    Exponent e;
    if (shape.variables == 1) {
      e.e[0] = i;
    } else {
      e.e[0] = i / 2;
      e.e[1] = i % 2;
    }
    if (shape.kind == ExtKind::Series && e.e[0] >= shape.precision) {
      throw Error("too many generators for the series precision");
    }
    terms.emplace(e, gens[i]);
  }
  return ExtElement(ideal.ring(), shape, std::move(terms));
}

namespace {

Verdict extension_compare(const ModulePtr& m, ExtShape shape, bool auslander) {
  if (m->is_zero()) return Verdict::zero_module();
  const ModulePtr reg = regular_module(m->ring());
  for (const auto& ideal : ideals_of(m->ring())) {
    ExtElement f = polynomial_with_content(ideal, shape);
    const bool in_ring = is_zd_on_extension(f, reg).holds;
    const bool in_module = is_zd_on_extension(f, m).holds;
    if (auslander ? (in_ring && !in_module) : (in_module && !in_ring)) {
      Verdict v = Verdict::fail({WitnessKind::Polynomial, {f.to_string()}, {}});
      v.note = "c(f) = " + ideal.to_string();
      return v;
    }
  }
  return Verdict::pass();
}

struct MonomialToken {
  bool ok = false;
  unsigned var = 0;  // 0 for bare X, 1 or 2 for X1/X2
  unsigned power = 1;
};

MonomialToken monomial_token(std::string_view s) {
  MonomialToken t;
  if (s.empty() || s[0] != 'X') return t;
  std::size_t i = 1;
  if (i < s.size() && (s[i] == '1' || s[i] == '2')) t.var = static_cast<unsigned>(s[i++] - '0');
  if (i < s.size()) {
    if (s[i] != '^' || i + 1 == s.size()) return t;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) return t;
    }
    t.power = static_cast<unsigned>(text::parse_int(s.substr(i + 1)));
  }
  t.ok = true;
  return t;
}

Elem parse_coefficient(const ExtElement::Base& base, std::string_view s) {
  auto parse = [&](std::string_view x) {
    if (auto r = std::get_if<RingPtr>(&base)) return (*r)->parse_element(x);
    return std::get<ModulePtr>(base)->parse_element(x);
  };
  try {
    return parse(s);
  } catch (const Error&) {
    if (!text::wrapped_in_parens(s)) throw;
    return parse(s.substr(1, s.size() - 2));
  }
}

}  // namespace

Verdict extension_auslander(const ModulePtr& m, ExtShape shape) { return extension_compare(m, shape, true); }

Verdict extension_torsion_free(const ModulePtr& m, ExtShape shape) {
  return extension_compare(m, shape, false);
}

ExtElement parse_ext(std::string_view input, ExtElement::Base base, ExtShape shape) {
  std::string src = text::strip_spaces(input);
  std::string_view body = src;
  if (body.rfind("series(", 0) == 0 && body.back() == ')') {
    std::string_view inner = body.substr(7, body.size() - 8);
    auto semi = inner.find(';');
    if (semi == std::string_view::npos) throw Error("expected 'series(N; ...)'");
    long long n = text::parse_int(inner.substr(0, semi));
    if (n <= 0) throw Error("series precision must be positive");
    shape = ExtShape::series(static_cast<unsigned>(n));
    body = inner.substr(semi + 1);
  }
  if (body.empty()) throw Error("empty polynomial");

  struct Term {
    Exponent e;
    Elem c;
  };
  std::vector<Term> parsed;
  bool two_vars = false;
  for (auto term : text::split_top(body, '+')) {
    if (term.empty()) throw Error("empty term in '" + std::string(input) + "'");
    Exponent e;
    std::vector<std::string> coeff;
    for (auto factor : text::split_top(term, '*')) {
      MonomialToken t = monomial_token(factor);
      if (!t.ok) {
        coeff.emplace_back(factor);
        continue;
      }
      if (t.var != 0) two_vars = true;
      e.e[t.var == 2 ? 1 : 0] += t.power;
    }
    Elem c;
    if (coeff.empty()) {
      auto r = std::get_if<RingPtr>(&base);
      if (!r) throw Error("module-valued term needs a coefficient: '" + std::string(term) + "'");
      c = (*r)->one();
    } else {
      c = parse_coefficient(base, text::join(coeff, "*"));
    }
    parsed.push_back({e, c});
  }
  if (two_vars) {
    if (shape.kind == ExtKind::Series) throw Error("power series are univariate");
    shape.variables = 2;
  }
  // Accumulate through ext_arith so repeated exponents add.
  ExtElement acc(base, shape);
  for (const auto& t : parsed) {
    ExtElement single(base, shape, {{t.e, t.c}});
    acc = ext_arith(acc, single, ExtOp::Add);
  }
  return acc;
}

}  // namespace zdlab
