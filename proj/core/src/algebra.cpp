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

#include "zdlab/algebra.hpp"

#include <algorithm>

namespace zdlab {

FiniteAlgebra::FiniteAlgebra(RingPtr algebra, RingPtr base, std::vector<Elem> structure_map,
                             std::string descriptor)
    : algebra_(std::move(algebra)), base_(std::move(base)), map_(std::move(structure_map)),
      descriptor_(std::move(descriptor)) {
  const FiniteRing& r = *base_;
  const FiniteRing& b = *algebra_;
  if (map_.size() != r.size()) throw Error("structure map has the wrong domain");
  if (map_[r.one()] != b.one()) throw Error("structure map does not send 1 to 1");
  for (Elem x = 0; x < r.size(); ++x) {
    if (map_[x] >= b.size()) throw Error("structure map leaves the algebra carrier");
    for (Elem y = 0; y < r.size(); ++y) {
      if (map_[r.add(x, y)] != b.add(map_[x], map_[y])) throw Error("structure map is not additive");
      if (map_[r.mul(x, y)] != b.mul(map_[x], map_[y])) throw Error("structure map is not multiplicative");
    }
  }
}

ModulePtr FiniteAlgebra::as_module() const {
  return restrict_scalars(regular_module(algebra_), base_, map_, "AlgebraModule(" + descriptor_ + ")",
                          base_->descriptor());
}

FiniteAlgebra canonical_algebra(const RingPtr& algebra, const RingPtr& base) {
  const std::string desc = "Algebra(" + algebra->descriptor() + "," + base->descriptor() + ",incl)";
  std::vector<Elem> map(base->size());
  if (algebra->descriptor() == base->descriptor()) {
    for (Elem x = 0; x < base->size(); ++x) map[x] = x;
    return FiniteAlgebra(algebra, base, std::move(map), desc);
  }
  if (algebra->kind() == RingKind::Product && algebra->parts().size() == 2 &&
      algebra->parts()[0]->descriptor() == base->descriptor() &&
      algebra->parts()[1]->descriptor() == base->descriptor()) {
    for (Elem x = 0; x < base->size(); ++x) map[x] = static_cast<Elem>(x + base->size() * x);
    return FiniteAlgebra(algebra, base, std::move(map), desc);
  }
  if (algebra->kind() == RingKind::PolyQuotient && base->kind() == RingKind::Modular &&
      algebra->descriptor().rfind("PolyQuot(" + base->descriptor() + ",", 0) == 0) {
    for (Elem x = 0; x < base->size(); ++x) map[x] = algebra->from_int(x);
    return FiniteAlgebra(algebra, base, std::move(map), desc);
  }
  throw Error("no canonical inclusion " + base->descriptor() + " -> " + algebra->descriptor());
}

Ideal extended_ideal(const FiniteAlgebra& b, const Ideal& ideal) {
  std::vector<Elem> gens;
  for (Elem g : ideal.generators()) gens.push_back(b.map(g));
  return ideal_generated(b.algebra(), gens);
}

namespace {

struct ContentTable {
  std::vector<Ideal> ideals;
  std::vector<Ideal> extended;
};

ContentTable content_table(const FiniteAlgebra& b) {
  ContentTable t;
  t.ideals = ideals_of(b.base());
  for (const auto& i : t.ideals) t.extended.push_back(extended_ideal(b, i));
  return t;
}

// Index into the lattice of c(f).
std::size_t content_index(const FiniteAlgebra& b, const ContentTable& t, Elem f) {
  ElementSet acc = ElementSet::full(b.base()->size());
  for (std::size_t i = 0; i < t.ideals.size(); ++i) {
    if (t.extended[i].contains(f)) acc = acc.intersect(t.ideals[i].elements());
  }
  for (std::size_t i = 0; i < t.ideals.size(); ++i) {
    if (t.ideals[i].elements() == acc) return i;
  }
  throw Error("content is not an ideal");
}

}  // namespace

Ideal algebra_content(const FiniteAlgebra& b, Elem f) {
  auto t = content_table(b);
  return t.ideals[content_index(b, t, f)];
}

Verdict is_ohm_rush(const FiniteAlgebra& b) {
  auto t = content_table(b);
  for (Elem f = 0; f < b.algebra()->size(); ++f) {
    if (!t.extended[content_index(b, t, f)].contains(f)) return Verdict::fail(ring_witness(*b.algebra(), f));
  }
  return Verdict::pass();
}

Verdict is_mccoy_algebra(const FiniteAlgebra& b) {
  Verdict ohm_rush = is_ohm_rush(b);
  if (!ohm_rush.holds) {
    ohm_rush.note = "not Ohm-Rush";
    return ohm_rush;
  }
  const FiniteRing& alg = *b.algebra();
  auto t = content_table(b);
  for (Elem f = 0; f < alg.size(); ++f) {
    const Ideal& c = t.ideals[content_index(b, t, f)];
    if (!annihilator(c).is_zero()) continue;
    for (Elem g = 1; g < alg.size(); ++g) {
      if (alg.mul(f, g) == 0) {
        Witness w{WitnessKind::ElementPair, {alg.label(f), alg.label(g)}, {f, g}};
        Verdict v = Verdict::fail(std::move(w));
        v.note = "c(f) = " + c.to_string() + " has zero annihilator";
        return v;
      }
    }
  }
  return Verdict::pass();
}

ModulePtr tensor_with_algebra(const ModulePtr& m, const FiniteAlgebra& b, const ModuleLimits& limits) {
  if (m->ring()->descriptor() != b.base()->descriptor()) {
    throw Error("module and algebra have different base rings");
  }
  Presentation p = presentation_of(*m, limits);
  const std::string desc = "Tensor(" + m->descriptor() + "," + b.descriptor() + ")";
  if (p.generators == 0) {
    // Zero module: B^1 / B.
    return quotient_of_free(b.algebra(), 1, {{b.algebra()->one()}}, desc, m->context(), limits,
                            ModuleTag::Tensor);
  }
  std::vector<std::vector<Elem>> relations;
  for (const auto& rel : p.relations) {
    std::vector<Elem> v;
    for (Elem x : rel) v.push_back(b.map(x));
    relations.push_back(std::move(v));
  }
  return quotient_of_free(b.algebra(), p.generators, std::move(relations), desc, m->context(), limits,
                          ModuleTag::Tensor);
}

}  // namespace zdlab
