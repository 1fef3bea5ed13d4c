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

#include "zdlab/predicates.hpp"

#include <algorithm>

namespace zdlab {

std::string_view witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::RingElement: return "ring-element";
    case WitnessKind::ModuleElement: return "module-element";
    case WitnessKind::Ideal: return "ideal";
    case WitnessKind::ElementPair: return "element-pair";
    case WitnessKind::Polynomial: return "polynomial";
    case WitnessKind::MultiplicativeSet: return "multiplicative-set";
  }
  return "unknown";
}

Witness ring_witness(const FiniteRing& r, Elem e) { return {WitnessKind::RingElement, {r.label(e)}, {e}}; }

Witness module_witness(const FiniteModule& m, Elem e) {
  return {WitnessKind::ModuleElement, {m.label(e)}, {e}};
}

Witness ideal_witness(const Ideal& i) { return {WitnessKind::Ideal, {i.to_string()}, i.generators()}; }

ElementSet zero_divisors_module(const FiniteModule& m) {
  const FiniteRing& r = *m.ring();
  ElementSet out(r.size());
  for (Elem s = 0; s < r.size(); ++s) {
    for (Elem x = 1; x < m.size(); ++x) {
      if (m.act(s, x) == 0) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

Ideal ann_module(const ModulePtr& m) {
  const FiniteRing& r = *m->ring();
  ElementSet out(r.size());
  for (Elem s = 0; s < r.size(); ++s) {
    bool kills = true;
    for (Elem x = 0; x < m->size() && kills; ++x) kills = m->act(s, x) == 0;
    if (kills) out.insert(s);
  }
  return ideal_from_elements(m->ring(), std::move(out));
}

Ideal ann_element(const ModulePtr& m, Elem x) {
  if (x >= m->size()) throw Error("element outside module carrier");
  const FiniteRing& r = *m->ring();
  ElementSet out(r.size());
  for (Elem s = 0; s < r.size(); ++s) {
    if (m->act(s, x) == 0) out.insert(s);
  }
  return ideal_from_elements(m->ring(), std::move(out));
}

ElementSet annihilated_by(const FiniteModule& m, const Ideal& ideal) {
  ElementSet out(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    bool killed = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                              [&](Elem a) { return m.act(a, x) == 0; });
    if (killed) out.insert(x);
  }
  return out;
}

namespace {

void require_ring(const Ideal& ideal, const FiniteModule& m) {
  if (ideal.ring() != m.ring() && ideal.ring()->descriptor() != m.ring()->descriptor()) {
    throw Error("ideal and module live over different rings");
  }
}

ElementSet product_set(const Ideal& ideal, const FiniteModule& m, const ElementSet& within) {
  std::vector<char> seen(m.size(), 0);
  std::vector<Elem> gens;
  for (Elem a : ideal.generators())
    for (Elem x : within) {
      Elem p = m.act(a, x);
      if (!seen[p]) {
        seen[p] = 1;
        gens.push_back(p);
      }
    }
  // Generators of I times all of N already span a submodule additively.
  return additive_closure(m.size(), gens, [&m](Elem a, Elem b) { return m.add(a, b); });
}

// (ideal, IM) for every ideal of the ring.
std::vector<std::pair<Ideal, ElementSet>> ideal_products(const ModulePtr& m) {
  std::vector<std::pair<Ideal, ElementSet>> out;
  const ElementSet whole = ElementSet::full(m->size());
  for (auto& ideal : ideals_of(m->ring())) {
    ElementSet im = product_set(ideal, *m, whole);
    out.emplace_back(std::move(ideal), std::move(im));
  }
  return out;
}

Ideal content_from(const ModulePtr& m, const std::vector<std::pair<Ideal, ElementSet>>& products, Elem x) {
  ElementSet acc = ElementSet::full(m->ring()->size());
  for (const auto& [ideal, im] : products) {
    if (im.contains(x)) acc = acc.intersect(ideal.elements());
  }
  return ideal_from_elements(m->ring(), std::move(acc));
}

}  // namespace

Submodule ideal_action(const Ideal& ideal, const ModulePtr& m) {
  require_ring(ideal, *m);
  ElementSet s = product_set(ideal, *m, ElementSet::full(m->size()));
  auto gens = module_generators(*m, s);
  return Submodule(m, std::move(gens), std::move(s));
}

Submodule ideal_action(const Ideal& ideal, const Submodule& n) {
  require_ring(ideal, *n.module());
  ElementSet s = product_set(ideal, *n.module(), n.elements());
  auto gens = module_generators(*n.module(), s);
  return Submodule(n.module(), std::move(gens), std::move(s));
}

Ideal content_of_element(const ModulePtr& m, Elem x) {
  if (x >= m->size()) throw Error("element outside module carrier");
  return content_from(m, ideal_products(m), x);
}

Verdict is_content_module(const ModulePtr& m) {
  auto products = ideal_products(m);
  for (Elem x = 0; x < m->size(); ++x) {
    Ideal c = content_from(m, products, x);
    auto it = std::find_if(products.begin(), products.end(), [&](const auto& p) { return p.first == c; });
    if (it == products.end()) throw Error("content is not in the ideal lattice");
    if (!it->second.contains(x)) return Verdict::fail(module_witness(*m, x));
  }
  return Verdict::pass();
}

Verdict has_property_A(const ModulePtr& m) {
  if (m->is_zero()) return Verdict::zero_module();
  const ElementSet zd = zero_divisors_module(*m);
  for (const auto& ideal : ideals_of(m->ring())) {
    if (!ideal.elements().subset_of(zd)) continue;
    if (annihilated_by(*m, ideal).size() < 2) return Verdict::fail(ideal_witness(ideal));
  }
  return Verdict::pass();
}

Verdict is_auslander(const ModulePtr& m) {
  if (m->is_zero()) return Verdict::zero_module();
  auto missing = m->ring()->zero_divisors().first_not_in(zero_divisors_module(*m));
  if (missing) return Verdict::fail(ring_witness(*m->ring(), *missing));
  return Verdict::pass();
}

Verdict is_torsion_free(const ModulePtr& m) {
  if (m->is_zero()) return Verdict::zero_module();
  auto extra = zero_divisors_module(*m).first_not_in(m->ring()->zero_divisors());
  if (extra) return Verdict::fail(ring_witness(*m->ring(), *extra));
  return Verdict::pass();
}

Verdict is_faithful(const ModulePtr& m) {
  Ideal ann = ann_module(m);
  if (!ann.is_zero()) return Verdict::fail(ring_witness(*m->ring(), ann.elements().items().at(1)));
  return Verdict::pass();
}

Verdict is_content_surjective(const ModulePtr& m) {
  const RingPtr& ring = m->ring();
  auto products = ideal_products(m);
  std::vector<Ideal> contents;
  for (Elem x = 0; x < m->size(); ++x) contents.push_back(content_from(m, products, x));
  for (Elem s = 0; s < ring->size(); ++s) {
    Ideal target = ideal_generated(ring, std::vector<Elem>{s});
    bool hit = std::any_of(contents.begin(), contents.end(), [&](const Ideal& c) { return c == target; });
    if (!hit) return Verdict::fail(ring_witness(*ring, s));
  }
  return Verdict::pass();
}

std::size_t tensor_ideal_size(const Ideal& ideal, const ModulePtr& mp, const ModuleLimits& limits) {
  const FiniteRing& r = *ideal.ring();
  const FiniteModule& m = *mp;
  const auto& gens = ideal.generators();
  const unsigned g = static_cast<unsigned>(gens.size());
  if (g == 0) return 1;
  FreeCoords rg{r.size(), g};
  if (rg.count() > limits.max_free_enumeration) throw BoundExceeded("ideal presentation too large");
  FreeCoords mg{m.size(), g};
  if (mg.count() > limits.max_tensor_enumeration) throw BoundExceeded("I (x) M too large to enumerate");

  // I = R^g / K with K the syzygies of the generators; I (x) M = M^g / K M.
  std::vector<Elem> relation_images;
  std::vector<char> seen(mg.count(), 0);
  for (std::size_t idx = 0; idx < rg.count(); ++idx) {
    auto k = rg.decode(idx);
    Elem sum = 0;
    for (unsigned i = 0; i < g; ++i) sum = r.add(sum, r.mul(k[i], gens[i]));
    if (sum != 0) continue;
    std::vector<Elem> v(g);
    for (Elem x = 0; x < m.size(); ++x) {
      for (unsigned i = 0; i < g; ++i) v[i] = m.act(k[i], x);
      std::size_t e = mg.encode(v);
      if (!seen[e]) {
        seen[e] = 1;
        relation_images.push_back(static_cast<Elem>(e));
      }
    }
  }
  auto vadd = [&](Elem a, Elem b) {
    auto x = mg.decode(a), y = mg.decode(b);
    for (unsigned i = 0; i < g; ++i) x[i] = m.add(x[i], y[i]);
    return static_cast<Elem>(mg.encode(x));
  };
  ElementSet n = additive_closure(mg.count(), relation_images, vadd);
  return mg.count() / n.size();
}

Verdict is_flat(const ModulePtr& m, const ModuleLimits& limits) {
  for (const auto& ideal : ideals_of(m->ring())) {
    std::size_t tensor = tensor_ideal_size(ideal, m, limits);
    std::size_t image = ideal_action(ideal, m).size();
    if (tensor != image) {
      Verdict v = Verdict::fail(ideal_witness(ideal));
      v.note = "|I (x) M| = " + std::to_string(tensor) + ", |IM| = " + std::to_string(image);
      return v;
    }
  }
  return Verdict::pass();
}

Verdict is_locally_free(const ModulePtr& mp) {
  const FiniteRing& r = *mp->ring();
  const FiniteModule& m = *mp;
  for (Elem e : primitive_idempotents(r)) {
    ElementSet local(r.size());
    for (Elem x = 0; x < r.size(); ++x) local.insert(r.mul(e, x));
    ElementSet nonunits(r.size());
    for (Elem x : local) {
      bool unit = std::any_of(local.begin(), local.end(), [&](Elem y) { return r.mul(x, y) == e; });
      if (!unit) nonunits.insert(x);
    }
    ElementSet component(m.size());
    for (Elem x = 0; x < m.size(); ++x) component.insert(m.act(e, x));
    std::vector<Elem> gens;
    for (Elem a : nonunits)
      for (Elem x : component) gens.push_back(m.act(a, x));
    ElementSet radical_part = additive_closure(m.size(), gens, [&m](Elem a, Elem b) { return m.add(a, b); });

    const std::size_t residue = local.size() / nonunits.size();
    const std::size_t top = component.size() / radical_part.size();
    // top = residue^k, where k is the minimal number of generators of eM.
    std::size_t k = 0, power = 1;
    while (power < top) {
      power *= residue;
      ++k;
    }
    if (power != top) throw Error("residue dimension is not integral");
    std::size_t free_size = 1;
    for (std::size_t i = 0; i < k; ++i) free_size *= local.size();
    if (free_size != component.size()) {
      Verdict v = Verdict::fail(ring_witness(r, e));
      v.note = "component is not free";
      return v;
    }
  }
  return Verdict::pass();
}

Verdict is_faithfully_flat(const ModulePtr& m, const ModuleLimits& limits) {
  Verdict flat = is_flat(m, limits);
  if (!flat.holds) return flat;
  for (const auto& p : ring_predicates(m->ring()).maximal_ideals) {
    if (ideal_action(p, m).size() == m->size()) {
      Verdict v = Verdict::fail(ideal_witness(p));
      v.note = "pM = M";
      return v;
    }
  }
  return Verdict::pass();
}

}  // namespace zdlab
