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

// Witness re-validation. Each check rebuilds the structure from its DSL text
// and tests the defining property directly on the tables.

#include <algorithm>

#include "harness_internal.hpp"
#include "zdlab/dsl.hpp"
#include "zdlab/text.hpp"
#include "zdlab/zadapter.hpp"

namespace zdlab::harness {

namespace detail {

ElementSet ring_zero_divisors(const FiniteRing& r, const Bounds& b) {
  ElementSet z = r.zero_divisors();
  if (b.zero_in_zero_divisors || !z.contains(0)) return z;
  std::vector<char> mask = z.mask();
  mask[0] = 0;
  return ElementSet::from_mask(std::move(mask));
}

ElementSet module_zero_divisors(const FiniteModule& m, const Bounds& b) {
  ElementSet z = zero_divisors_module(m);
  if (b.zero_in_zero_divisors || !z.contains(0)) return z;
  std::vector<char> mask = z.mask();
  mask[0] = 0;
  return ElementSet::from_mask(std::move(mask));
}

Verdict auslander(const ModulePtr& m, const Bounds& b) {
  if (b.zero_in_zero_divisors) return is_auslander(m);
  if (m->is_zero()) return Verdict::zero_module();
  auto missing = ring_zero_divisors(*m->ring(), b).first_not_in(module_zero_divisors(*m, b));
  if (missing) return Verdict::fail(ring_witness(*m->ring(), *missing));
  return Verdict::pass();
}

Verdict torsion_free(const ModulePtr& m, const Bounds& b) {
  if (b.zero_in_zero_divisors) return is_torsion_free(m);
  if (m->is_zero()) return Verdict::zero_module();
  auto extra = module_zero_divisors(*m, b).first_not_in(ring_zero_divisors(*m->ring(), b));
  if (extra) return Verdict::fail(ring_witness(*m->ring(), *extra));
  return Verdict::pass();
}

WitnessRecord record(const std::string& predicate, const ModulePtr& m, const Verdict& v) {
  WitnessRecord w;
  w.predicate = predicate;
  w.ring = m->context();
  w.subject = m->descriptor();
  w.holds = v.holds;
  if (v.witness) {
    w.kind = v.witness->kind;
    w.labels = v.witness->labels;
  }
  return w;
}

}  // namespace detail

namespace {

using Check = std::optional<std::string>;

Check problem(std::string s) { return s; }

bool kills_nonzero(const FiniteModule& m, Elem r) {
  for (Elem x = 1; x < m.size(); ++x)
    if (m.act(r, x) == 0) return true;
  return false;
}

bool ring_zero_divisor(const FiniteRing& r, Elem a) {
  for (Elem s = 1; s < r.size(); ++s)
    if (r.mul(a, s) == 0) return true;
  return false;
}

Ideal parse_ideal(const RingPtr& r, const std::string& label) {
  std::string_view body = label;
  if (!text::wrapped_in_parens(body)) throw Error("ideal label must be parenthesized: " + label);
  body = body.substr(1, body.size() - 2);
  std::vector<Elem> gens;
  for (auto part : text::split_top(body, ',')) gens.push_back(r->parse_element(part));
  return ideal_generated(r, gens);
}

constexpr std::size_t kSearchBudget = std::size_t{1} << 16;

// Largest d <= cap with |M|^(monomials of degree <= d) within the budget.
unsigned search_degree(std::size_t module_size, const ExtShape& shape, unsigned cap) {
  unsigned best = 0;
  for (unsigned d = 0; d <= cap; ++d) {
    const std::size_t monos = shape.variables == 2 ? (d + 1) * (d + 2) / 2 : d + 1;
    double space = 1;
    for (std::size_t i = 0; i < monos; ++i) space *= static_cast<double>(module_size);
    if (space > static_cast<double>(kSearchBudget)) break;
    best = d;
  }
  return best;
}

const std::string& only_label(const WitnessRecord& w, std::size_t count = 1) {
  if (w.labels.size() != count) throw Error("expected " + std::to_string(count) + " witness labels");
  return w.labels.front();
}

Check integer_witness(const WitnessRecord& w) {
  const unsigned n = dsl::integer_module_modulus(dsl::parse_module(w.subject));
  const std::string& label = only_label(w);
  if (w.predicate == "torsion_free") {
    const long long k = text::parse_int(label);
    if (zz::is_zero_divisor_of_ring(k)) return problem("witness is a zero-divisor of ZZ");
    if (!zz::is_zero_divisor_on(k, n)) return problem("witness kills no nonzero element of Z/n");
    return std::nullopt;
  }
  if (w.predicate == "faithful") {
    const long long k = text::parse_int(label);
    if (k == 0 || k % n != 0) return problem("witness does not annihilate Z/n");
    return std::nullopt;
  }
  if (w.predicate == "flat" || w.predicate == "faithfully_flat") {
    const long long d = text::parse_int(std::string_view(label).substr(1, label.size() - 2));
    // (d) (x) Z/n is Z/n for d != 0, while (d) Z/n = 0 needs n | d.
    if (d == 0 || d % n != 0) return problem("ideal does not witness non-flatness");
    return std::nullopt;
  }
  return problem("no integer re-check for predicate " + w.predicate);
}

Check module_witness_check(const WitnessRecord& w, const Bounds& b) {
  const RingPtr context = dsl::ring_from_text(w.ring);
  const ModulePtr m = dsl::module_from_text(w.subject, context);
  const FiniteRing& r = *m->ring();
  const std::string& p = w.predicate;

  if (p == "auslander" || p == "torsion_free" || p == "faithful" || p == "content_surjective") {
    const Elem a = r.parse_element(only_label(w));
    const bool in_ring = ring_zero_divisor(r, a) && (b.zero_in_zero_divisors || a != 0);
    const bool in_module = kills_nonzero(*m, a) && (b.zero_in_zero_divisors || a != 0);
    if (p == "auslander") {
      if (!in_ring) return problem("witness is not a zero-divisor of R");
      if (in_module) return problem("witness is a zero-divisor on M");
      return std::nullopt;
    }
    if (p == "torsion_free") {
      if (!in_module) return problem("witness is not a zero-divisor on M");
      if (in_ring) return problem("witness is a zero-divisor of R");
      return std::nullopt;
    }
    if (p == "faithful") {
      if (a == 0) return problem("witness is zero");
      for (Elem x = 0; x < m->size(); ++x)
        if (m->act(a, x) != 0) return problem("witness does not annihilate M");
      return std::nullopt;
    }
    const Ideal target = ideal_generated(m->ring(), std::vector<Elem>{a});
    for (Elem x = 0; x < m->size(); ++x)
      if (content_of_element(m, x) == target) return problem("some element has content (s)");
    return std::nullopt;
  }

  if (p == "content_module") {
    const Elem x = m->parse_element(only_label(w));
    // c(x) from the definition: meet of all ideals I with x in IM.
    ElementSet meet = ElementSet::full(r.size());
    for (const auto& ideal : ideals_of(m->ring()))
      if (ideal_action(ideal, m).contains(x)) meet = meet.intersect(ideal.elements());
    if (ideal_action(ideal_from_elements(m->ring(), meet), m).contains(x)) return problem("x lies in c(x)M");
    return std::nullopt;
  }

  if (p == "property_a") {
    const Ideal ideal = parse_ideal(m->ring(), only_label(w));
    const ElementSet zm = zero_divisors_module(*m);
    if (!ideal.elements().subset_of(zm)) return problem("ideal is not inside Z(M)");
    for (Elem x = 1; x < m->size(); ++x) {
      bool killed = true;
      for (Elem a : ideal.elements()) killed = killed && m->act(a, x) == 0;
      if (killed) return problem("ideal kills a nonzero element");
    }
    return std::nullopt;
  }

  if (p == "flat" || p == "faithfully_flat") {
    const Ideal ideal = parse_ideal(m->ring(), only_label(w));
    const bool not_injective = tensor_ideal_size(ideal, m) != ideal_action(ideal, m).size();
    if (not_injective) return std::nullopt;
    if (p == "faithfully_flat") {
      const auto maximal = ring_predicates(m->ring()).maximal_ideals;
      const bool is_max = std::find(maximal.begin(), maximal.end(), ideal) != maximal.end();
      if (is_max && ideal_action(ideal, m).size() == m->size()) return std::nullopt;
    }
    return problem("I (x) M -> M is injective for the witness ideal");
  }

  if (p == "polynomial_auslander" || p == "polynomial_torsion_free" || p == "series_auslander" ||
      p == "series_torsion_free") {
    const bool series = p.rfind("series", 0) == 0;
    const std::string& label = only_label(w);
    const bool two = label.find("X1") != std::string::npos || label.find("X2") != std::string::npos;
    const ExtShape shape = series ? ExtShape::series(b.precision) : ExtShape::polynomial(two ? 2 : 1);
    const ExtElement f = parse_ext(label, m->ring(), shape);
    const ModulePtr reg = regular_module(m->ring());
    // Membership found by search is certain; non-membership is the
    // criterion, confirmed by an empty search up to the largest degree
    // whose search space fits the budget.
    auto member = [&](const ModulePtr& target) { return brute_force_zd(f, target, search_degree(target->size(), shape, b.degree)).holds; };
    auto non_member = [&](const ModulePtr& target) {
      return !is_zd_on_extension(f, target).holds &&
             !brute_force_zd(f, target, search_degree(target->size(), shape, b.degree)).holds;
    };
    if (p.find("auslander") != std::string::npos) {
      if (!member(reg)) return problem("f is not a zero-divisor of the ring extension");
      if (!non_member(m)) return problem("f is a zero-divisor on the module extension");
    } else {
      if (!member(m)) return problem("f is not a zero-divisor on the module extension");
      if (!non_member(reg)) return problem("f is a zero-divisor of the ring extension");
    }
    return std::nullopt;
  }

  if (p == "mccoy_witness") {
    if (w.labels.size() != 3) throw Error("mccoy witness needs f, g and m");
    const ExtElement f = parse_ext(w.labels[0], m->ring());
    const ExtElement g = parse_ext(w.labels[1], m, f.shape());
    const Elem x = m->parse_element(w.labels[2]);
    if (g.is_zero()) return problem("g is zero");
    if (!ext_exact_product(f, g).is_zero()) return problem("f g is not zero");
    if (x == 0) return problem("m is zero");
    for (const auto& [e, c] : f.terms())
      if (m->act(c, x) != 0) return problem("f m is not zero");
    return std::nullopt;
  }

  return problem("no module re-check for predicate " + p);
}

Check algebra_witness_check(const WitnessRecord& w) {
  const FiniteAlgebra alg = dsl::build_algebra(dsl::parse_algebra(w.subject));
  const FiniteRing& b = *alg.algebra();
  if (w.predicate == "ohm_rush" || (w.predicate == "mccoy_algebra" && w.labels.size() == 1)) {
    const Elem f = b.parse_element(only_label(w));
    if (extended_ideal(alg, algebra_content(alg, f)).contains(f)) return problem("f lies in c(f)B");
    return std::nullopt;
  }
  if (w.predicate == "mccoy_algebra") {
    if (w.labels.size() != 2) throw Error("McCoy witness needs a pair");
    const Elem f = b.parse_element(w.labels[0]);
    const Elem g = b.parse_element(w.labels[1]);
    if (g == 0) return problem("g is zero");
    if (b.mul(f, g) != 0) return problem("f g is not zero");
    if (!annihilator(algebra_content(alg, f)).is_zero()) return problem("c(f) has a nonzero annihilator");
    return std::nullopt;
  }
  return problem("no algebra re-check for predicate " + w.predicate);
}

}  // namespace

std::optional<std::string> revalidate(const WitnessRecord& w, const Bounds& bounds) {
  try {
    if (w.ring == "ZZ") return integer_witness(w);
    if (w.subject.rfind("Algebra(", 0) == 0) return algebra_witness_check(w);
    return module_witness_check(w, bounds);
  } catch (const Error& e) {
    return std::string("re-check failed: ") + e.what();
  }
}

}  // namespace zdlab::harness
