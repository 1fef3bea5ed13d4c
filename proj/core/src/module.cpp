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

#include "zdlab/module.hpp"

#include <algorithm>
#include <map>

#include "zdlab/text.hpp"

namespace zdlab {

std::string_view tag_name(ModuleTag tag) {
  switch (tag) {
    case ModuleTag::Regular: return "regular";
    case ModuleTag::Free: return "free";
    case ModuleTag::Quotient: return "quotient";
    case ModuleTag::DirectSum: return "direct-sum";
    case ModuleTag::Hom: return "hom";
    case ModuleTag::Tensor: return "tensor";
    case ModuleTag::Localized: return "localized";
    case ModuleTag::Restricted: return "restricted";
    case ModuleTag::Submodule: return "submodule";
  }
  return "unknown";
}

std::size_t FreeCoords::count() const {
  std::size_t c = 1;
  for (unsigned i = 0; i < rank; ++i) c *= base;
  return c;
}

std::vector<Elem> FreeCoords::decode(std::size_t index) const {
  std::vector<Elem> v(rank);
  for (unsigned i = 0; i < rank; ++i) {
    v[i] = static_cast<Elem>(index % base);
    index /= base;
  }
  return v;
}

std::size_t FreeCoords::encode(std::span<const Elem> coords) const {
  std::size_t e = 0;
  for (std::size_t i = coords.size(); i-- > 0;) e = e * base + coords[i];
  return e;
}

FiniteModule::FiniteModule(RingPtr ring, ModuleTag tag, std::string descriptor, std::string context,
                           Tables tables, std::optional<Presentation> presentation,
                           std::vector<ModulePtr> parts, ElementParser parser)
    : ring_(std::move(ring)),
      tag_(tag),
      descriptor_(std::move(descriptor)),
      context_(std::move(context)),
      m_(tables.neg.size()),
      t_(std::move(tables)),
      presentation_(std::move(presentation)),
      parts_(std::move(parts)),
      parser_(std::move(parser)) {
  if (m_ == 0) throw Error("module carrier must be nonempty");
  if (t_.add.size() != m_ * m_ || t_.act.size() != ring_->size() * m_ || t_.labels.size() != m_) {
    throw Error("inconsistent module tables for " + descriptor_);
  }
}

Elem FiniteModule::parse_element(std::string_view text) const {
  const std::string key = text::strip_spaces(text);
  for (Elem e = 0; e < m_; ++e) {
    if (text::strip_spaces(t_.labels[e]) == key) return e;
  }
  if (parser_) return parser_(text);
  throw Error("'" + std::string(text) + "' is not an element of " + descriptor_);
}

std::optional<std::string> check_module_axioms(const FiniteModule& m) {
  const FiniteRing& r = *m.ring();
  const std::size_t n = m.size();
  for (Elem a = 0; a < n; ++a) {
    if (m.add(a, 0) != a) return "0 is not an additive identity";
    if (m.add(a, m.neg(a)) != 0) return "negation fails";
    if (m.act(r.one(), a) != a) return "1 does not act as the identity";
    for (Elem b = 0; b < n; ++b) {
      if (m.add(a, b) != m.add(b, a)) return "addition not commutative";
      for (Elem c = 0; c < n; ++c) {
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c))) return "addition not associative";
      }
      for (Elem s = 0; s < r.size(); ++s) {
        if (m.act(s, m.add(a, b)) != m.add(m.act(s, a), m.act(s, b))) return "action not additive in M";
      }
    }
    for (Elem s = 0; s < r.size(); ++s)
      for (Elem t = 0; t < r.size(); ++t) {
        if (m.act(r.add(s, t), a) != m.add(m.act(s, a), m.act(t, a))) return "action not additive in R";
        if (m.act(r.mul(s, t), a) != m.act(s, m.act(t, a))) return "action not associative";
      }
  }
  return std::nullopt;
}

Submodule::Submodule(ModulePtr module, std::vector<Elem> generators, ElementSet elements)
    : module_(std::move(module)), gens_(std::move(generators)), elems_(std::move(elements)) {}

namespace {

ElementSet submodule_closure(const FiniteModule& m, std::span<const Elem> gens) {
  const FiniteRing& r = *m.ring();
  std::vector<char> seen(m.size(), 0);
  std::vector<Elem> multiples;
  for (Elem g : gens) {
    if (g >= m.size()) throw Error("generator outside module carrier");
    for (Elem s = 0; s < r.size(); ++s) {
      Elem p = m.act(s, g);
      if (!seen[p]) {
        seen[p] = 1;
        multiples.push_back(p);
      }
    }
  }
  return additive_closure(m.size(), multiples, [&m](Elem a, Elem b) { return m.add(a, b); });
}

std::string tuple_label(const FiniteRing& r, std::span<const Elem> coords) {
  if (coords.size() == 1) return r.label(coords[0]);
  std::vector<std::string> parts;
  for (Elem c : coords) parts.push_back(r.label(c));
  return "<" + text::join(parts, ",") + ">";
}

// Parses "<a,b>" or a bare ring element into R^g coordinates.
std::vector<Elem> parse_tuple(const FiniteRing& r, unsigned rank, std::string_view s) {
  std::string_view body = text::trim(s);
  if (rank == 1) return {r.parse_element(body)};
  if (body.size() < 2 || body.front() != '<' || body.back() != '>') {
    throw Error("expected a tuple '<a,...>', got '" + std::string(s) + "'");
  }
  auto parts = text::split_top(body.substr(1, body.size() - 2), ',');
  if (parts.size() != rank) throw Error("tuple has the wrong length: '" + std::string(s) + "'");
  std::vector<Elem> out;
  for (auto p : parts) out.push_back(r.parse_element(p));
  return out;
}

}  // namespace

Submodule submodule_generated(const ModulePtr& m, std::span<const Elem> gens) {
  return Submodule(m, std::vector<Elem>(gens.begin(), gens.end()), submodule_closure(*m, gens));
}

std::vector<Elem> module_generators(const FiniteModule& m, const ElementSet& within) {
  std::vector<Elem> gens;
  ElementSet span = submodule_closure(m, gens);
  for (Elem e : within) {
    if (span.size() == within.size()) break;
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = submodule_closure(m, gens);
  }
  return gens;
}

std::vector<ElementSet> all_submodules(const ModulePtr& m, std::size_t max_count) {
  std::map<std::vector<char>, std::size_t> seen;
  std::vector<ElementSet> order;
  auto add_set = [&](ElementSet s) {
    if (seen.emplace(s.mask(), order.size()).second) order.push_back(std::move(s));
  };
  for (Elem x = 0; x < m->size(); ++x) add_set(submodule_closure(*m, std::vector<Elem>{x}));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elem> gens = order[i].items();
      gens.insert(gens.end(), order[j].items().begin(), order[j].items().end());
      add_set(additive_closure(m->size(), gens, [&](Elem a, Elem b) { return m->add(a, b); }));
      if (order.size() > max_count) throw BoundExceeded("submodule lattice too large for " + m->descriptor());
    }
  }
  std::sort(order.begin(), order.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.items() < b.items();
  });
  return order;
}

ModulePtr regular_module(const RingPtr& ring) {
  const std::size_t n = ring->size();
  FiniteModule::Tables t;
  t.add.resize(n * n);
  t.act.resize(n * n);
  t.neg.resize(n);
  for (Elem a = 0; a < n; ++a) {
    t.neg[a] = ring->neg(a);
    t.labels.push_back(ring->label(a));
    for (Elem b = 0; b < n; ++b) {
      t.add[a * n + b] = ring->add(a, b);
      t.act[a * n + b] = ring->mul(a, b);
    }
  }
  Presentation p;
  p.generators = 1;
  p.generator_images = {ring->one()};
  auto parser = [ring](std::string_view s) { return ring->parse_element(s); };
  return std::make_shared<FiniteModule>(ring, ModuleTag::Regular, "Reg", ring->descriptor(), std::move(t),
                                        std::move(p), std::vector<ModulePtr>{}, parser);
}

namespace {

// Shared builder for R^g / K. With no relations this is the free module.
ModulePtr build_free_quotient(const RingPtr& ring, unsigned g, const std::vector<std::vector<Elem>>& relations,
                              ModuleTag tag, std::string descriptor, std::string context,
                              const ModuleLimits& limits) {
  const FiniteRing& r = *ring;
  FreeCoords coords{r.size(), g};
  const std::size_t total = coords.count();
  if (g == 0) throw Error("free module needs rank >= 1");
  if (total > limits.max_free_enumeration) throw BoundExceeded("R^g too large to enumerate for " + descriptor);

  auto vadd = [&](Elem a, Elem b) {
    auto x = coords.decode(a), y = coords.decode(b);
    for (unsigned i = 0; i < g; ++i) x[i] = r.add(x[i], y[i]);
    return static_cast<Elem>(coords.encode(x));
  };
  auto vact = [&](Elem s, Elem a) {
    auto x = coords.decode(a);
    for (unsigned i = 0; i < g; ++i) x[i] = r.mul(s, x[i]);
    return static_cast<Elem>(coords.encode(x));
  };

  std::vector<Elem> rel_multiples;
  for (const auto& rel : relations) {
    if (rel.size() != g) throw Error("relation has wrong length");
    Elem v = static_cast<Elem>(coords.encode(rel));
    for (Elem s = 0; s < r.size(); ++s) rel_multiples.push_back(vact(s, v));
  }
  ElementSet kernel = additive_closure(total, rel_multiples, vadd);

  // Cosets of the kernel, each represented by its least vector.
  std::vector<Elem> coset_of(total, static_cast<Elem>(-1));
  std::vector<Elem> reps;
  for (Elem v = 0; v < total; ++v) {
    if (coset_of[v] != static_cast<Elem>(-1)) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(v);
    for (Elem k : kernel) coset_of[vadd(v, k)] = id;
  }
  const std::size_t m = reps.size();
  if (m > limits.max_module) throw BoundExceeded("module too large: " + descriptor);

  FiniteModule::Tables t;
  t.add.resize(m * m);
  t.neg.resize(m);
  t.act.resize(r.size() * m);
  t.labels.resize(m);
  const bool quotient = kernel.size() > 1;
  for (Elem i = 0; i < m; ++i) {
    auto rep = coords.decode(reps[i]);
    std::string base = tuple_label(r, rep);
    t.labels[i] = quotient ? "[" + base + "]" : base;
    std::vector<Elem> negv(g);
    for (unsigned c = 0; c < g; ++c) negv[c] = r.neg(rep[c]);
    t.neg[i] = coset_of[coords.encode(negv)];
    for (Elem j = 0; j < m; ++j) t.add[i * m + j] = coset_of[vadd(reps[i], reps[j])];
    for (Elem s = 0; s < r.size(); ++s) t.act[s * m + i] = coset_of[vact(s, reps[i])];
  }
  Presentation p;
  p.generators = g;
  p.relations = relations;
  for (unsigned i = 0; i < g; ++i) {
    std::vector<Elem> e(g, 0);
    e[i] = r.one();
    p.generator_images.push_back(coset_of[coords.encode(e)]);
  }
  auto parser = [ring, g, coords, coset_of, quotient](std::string_view s) -> Elem {
    std::string_view body = text::trim(s);
    if (quotient && body.size() >= 2 && body.front() == '[' && body.back() == ']') {
      body = body.substr(1, body.size() - 2);
    }
    auto v = parse_tuple(*ring, g, body);
    return coset_of[coords.encode(v)];
  };
  return std::make_shared<FiniteModule>(ring, tag, std::move(descriptor), std::move(context), std::move(t),
                                        std::move(p), std::vector<ModulePtr>{}, parser);
}

}  // namespace

ModulePtr free_module(const RingPtr& ring, unsigned rank, const ModuleLimits& limits) {
  return build_free_quotient(ring, rank, {}, ModuleTag::Free, "Free(" + std::to_string(rank) + ")",
                             ring->descriptor(), limits);
}

ModulePtr quotient_of_free(const RingPtr& ring, unsigned generators, std::vector<std::vector<Elem>> relations,
                           std::string descriptor, std::string context, const ModuleLimits& limits,
                           ModuleTag tag) {
  return build_free_quotient(ring, generators, relations, tag, std::move(descriptor),
                             std::move(context), limits);
}

ModulePtr cyclic_module(const Ideal& ideal, const ModuleLimits& limits) {
  std::vector<std::vector<Elem>> rels;
  for (Elem g : ideal.generators()) rels.push_back({g});
  std::vector<std::string> gl;
  for (Elem g : ideal.generators()) gl.push_back(ideal.ring()->label(g));
  std::string desc = "Cyclic(" + text::join(gl, ",") + ")";
  return quotient_of_free(ideal.ring(), 1, std::move(rels), std::move(desc), ideal.ring()->descriptor(), limits);
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b, const ModuleLimits& limits) {
  if (a->ring() != b->ring() && a->ring()->descriptor() != b->ring()->descriptor()) {
    throw Error("direct sum of modules over different rings");
  }
  const FiniteRing& r = *a->ring();
  const std::size_t na = a->size(), nb = b->size(), m = na * nb;
  if (m > limits.max_module) throw BoundExceeded("direct sum too large");
  auto enc = [na](Elem x, Elem y) { return static_cast<Elem>(x + na * y); };
  FiniteModule::Tables t;
  t.add.resize(m * m);
  t.neg.resize(m);
  t.act.resize(r.size() * m);
  t.labels.resize(m);
  for (Elem u = 0; u < m; ++u) {
    Elem ux = u % na, uy = u / na;
    t.labels[u] = "(" + a->label(ux) + "|" + b->label(uy) + ")";
    t.neg[u] = enc(a->neg(ux), b->neg(uy));
    for (Elem v = 0; v < m; ++v) t.add[u * m + v] = enc(a->add(ux, v % na), b->add(uy, v / na));
    for (Elem s = 0; s < r.size(); ++s) t.act[s * m + u] = enc(a->act(s, ux), b->act(s, uy));
  }
  std::optional<Presentation> pres;
  if (a->tag_presentation() && b->tag_presentation()) {
    const auto& pa = *a->tag_presentation();
    const auto& pb = *b->tag_presentation();
    Presentation p;
    p.generators = pa.generators + pb.generators;
    for (auto rel : pa.relations) {
      rel.resize(p.generators, 0);
      p.relations.push_back(std::move(rel));
    }
    for (const auto& rel : pb.relations) {
      std::vector<Elem> v(pa.generators, 0);
      v.insert(v.end(), rel.begin(), rel.end());
      p.relations.push_back(std::move(v));
    }
    for (Elem x : pa.generator_images) p.generator_images.push_back(enc(x, 0));
    for (Elem y : pb.generator_images) p.generator_images.push_back(enc(0, y));
    pres = std::move(p);
  }
  std::string desc = "Sum(" + a->descriptor() + "," + b->descriptor() + ")";
  return std::make_shared<FiniteModule>(a->ring(), ModuleTag::DirectSum, std::move(desc), a->context(),
                                        std::move(t), std::move(pres), std::vector<ModulePtr>{a, b});
}

namespace {

// For each element of M, one coefficient tuple over the generators
// expressing it, plus every tuple that expresses zero.
struct GeneratorCoordinates {
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> expression;
  std::vector<std::vector<Elem>> zero_tuples;
};

// Greedy by span size: each step adds the least element that enlarges the
// span the most. Usually far smaller than module_generators' choice.
std::vector<Elem> small_generating_set(const FiniteModule& m) {
  std::vector<Elem> gens;
  ElementSet span = submodule_closure(m, gens);
  while (span.size() < m.size()) {
    Elem best = 0;
    std::size_t best_size = 0;
    for (Elem x = 1; x < m.size(); ++x) {
      if (span.contains(x)) continue;
      gens.push_back(x);
      const std::size_t s = submodule_closure(m, gens).size();
      gens.pop_back();
      if (s > best_size) {
        best = x;
        best_size = s;
      }
    }
    gens.push_back(best);
    span = submodule_closure(m, gens);
  }
  return gens;
}

GeneratorCoordinates coordinates_for(const FiniteModule& m, std::size_t max_enum) {
  const FiniteRing& r = *m.ring();
  GeneratorCoordinates gc;
  if (m.tag_presentation() && !m.tag_presentation()->generator_images.empty()) {
    gc.gens = m.tag_presentation()->generator_images;
  } else {
    gc.gens = small_generating_set(m);
  }
  FreeCoords coords{r.size(), static_cast<unsigned>(gc.gens.size())};
  if (gc.gens.empty()) {
    gc.expression.assign(m.size(), {});
    return gc;
  }
  if (coords.count() > max_enum) throw BoundExceeded("too many generator combinations for " + m.descriptor());
  gc.expression.assign(m.size(), {});
  std::vector<char> have(m.size(), 0);
  for (std::size_t idx = 0; idx < coords.count(); ++idx) {
    auto c = coords.decode(idx);
    Elem x = 0;
    for (std::size_t i = 0; i < c.size(); ++i) x = m.add(x, m.act(c[i], gc.gens[i]));
    if (!have[x]) {
      have[x] = 1;
      gc.expression[x] = c;
    }
    if (x == 0) gc.zero_tuples.push_back(std::move(c));
  }
  return gc;
}

}  // namespace

ModulePtr hom_module(const ModulePtr& mp, const ModuleLimits& limits) {
  const FiniteModule& m = *mp;
  const FiniteRing& r = *m.ring();
  if (m.size() > limits.max_hom_source) throw BoundExceeded("Hom source too large: " + m.descriptor());
  auto gc = coordinates_for(m, limits.max_free_enumeration);
  const std::size_t g = gc.gens.size();
  FreeCoords cand{m.size(), static_cast<unsigned>(g)};
  if (cand.count() > limits.max_hom_candidates) throw BoundExceeded("too many Hom candidates: " + m.descriptor());

  std::vector<std::vector<Elem>> maps;
  for (std::size_t idx = 0; idx < cand.count(); ++idx) {
    auto images = cand.decode(idx);
    auto combine = [&](const std::vector<Elem>& coeffs) {
      Elem y = 0;
      for (std::size_t i = 0; i < g; ++i) y = m.add(y, m.act(coeffs[i], images[i]));
      return y;
    };
    // Cheap rejection on the generator relations first.
    bool ok = std::all_of(gc.zero_tuples.begin(), gc.zero_tuples.end(),
                          [&](const auto& z) { return combine(z) == 0; });
    if (!ok) continue;
    std::vector<Elem> f(m.size());
    for (Elem x = 0; x < m.size(); ++x) f[x] = combine(gc.expression[x]);
    for (Elem x = 0; x < m.size() && ok; ++x) {
      for (Elem y = 0; y < m.size() && ok; ++y) ok = f[m.add(x, y)] == m.add(f[x], f[y]);
      for (Elem s = 0; s < r.size() && ok; ++s) ok = f[m.act(s, x)] == m.act(s, f[x]);
    }
    if (ok) maps.push_back(std::move(f));
  }
  std::sort(maps.begin(), maps.end());
  const std::size_t h = maps.size();
  if (h > limits.max_module) throw BoundExceeded("Hom module too large");
  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < h; ++i) index.emplace(maps[i], i);

  FiniteModule::Tables t;
  t.add.resize(h * h);
  t.neg.resize(h);
  t.act.resize(r.size() * h);
  t.labels.resize(h);
  std::vector<Elem> buf(m.size());
  for (Elem i = 0; i < h; ++i) {
    std::vector<std::string> imgs;
    for (Elem gen : gc.gens) imgs.push_back(m.label(maps[i][gen]));
    t.labels[i] = "hom[" + text::join(imgs, ";") + "]";
    for (Elem x = 0; x < m.size(); ++x) buf[x] = m.neg(maps[i][x]);
    t.neg[i] = index.at(buf);
    for (Elem j = 0; j < h; ++j) {
      for (Elem x = 0; x < m.size(); ++x) buf[x] = m.add(maps[i][x], maps[j][x]);
      t.add[i * h + j] = index.at(buf);
    }
    for (Elem s = 0; s < r.size(); ++s) {
      for (Elem x = 0; x < m.size(); ++x) buf[x] = m.act(s, maps[i][x]);
      t.act[s * h + i] = index.at(buf);
    }
  }
  return std::make_shared<FiniteModule>(m.ring(), ModuleTag::Hom, "Hom(" + m.descriptor() + ")", m.context(),
                                        std::move(t), std::nullopt, std::vector<ModulePtr>{mp});
}

ModulePtr restrict_scalars(const ModulePtr& mp, const RingPtr& base, std::vector<Elem> ring_map,
                           std::string descriptor, std::string context) {
  const FiniteModule& m = *mp;
  if (ring_map.size() != base->size()) throw Error("ring map has wrong domain size");
  FiniteModule::Tables t;
  t.add.resize(m.size() * m.size());
  t.neg.resize(m.size());
  t.act.resize(base->size() * m.size());
  for (Elem a = 0; a < m.size(); ++a) {
    t.labels.push_back(m.label(a));
    t.neg[a] = m.neg(a);
    for (Elem b = 0; b < m.size(); ++b) t.add[a * m.size() + b] = m.add(a, b);
    for (Elem s = 0; s < base->size(); ++s) t.act[s * m.size() + a] = m.act(ring_map[s], a);
  }
  auto parser = [mp](std::string_view s) { return mp->parse_element(s); };
  return std::make_shared<FiniteModule>(base, ModuleTag::Restricted, std::move(descriptor), std::move(context),
                                        std::move(t), std::nullopt, std::vector<ModulePtr>{mp}, parser);
}

ModulePtr submodule_module(const ModulePtr& mp, const ElementSet& elements, std::string descriptor) {
  const FiniteModule& m = *mp;
  const FiniteRing& r = *m.ring();
  std::vector<Elem> items = elements.items();
  std::vector<Elem> local(m.size(), static_cast<Elem>(-1));
  for (Elem i = 0; i < items.size(); ++i) local[items[i]] = i;
  const std::size_t k = items.size();
  FiniteModule::Tables t;
  t.add.resize(k * k);
  t.neg.resize(k);
  t.act.resize(r.size() * k);
  auto at = [&](Elem x) {
    Elem v = local[x];
    if (v == static_cast<Elem>(-1)) throw Error("element set is not a submodule");
    return v;
  };
  for (Elem i = 0; i < k; ++i) {
    t.labels.push_back(m.label(items[i]));
    t.neg[i] = at(m.neg(items[i]));
    for (Elem j = 0; j < k; ++j) t.add[i * k + j] = at(m.add(items[i], items[j]));
    for (Elem s = 0; s < r.size(); ++s) t.act[s * k + i] = at(m.act(s, items[i]));
  }
  if (items.empty() || items[0] != 0) throw Error("submodule must contain zero");
  auto parser = [mp, local](std::string_view s) {
    Elem v = local.at(mp->parse_element(s));
    if (v == static_cast<Elem>(-1)) throw Error("element not in submodule");
    return v;
  };
  return std::make_shared<FiniteModule>(m.ring(), ModuleTag::Submodule, std::move(descriptor), m.context(),
                                        std::move(t), std::nullopt, std::vector<ModulePtr>{mp}, parser);
}

Presentation presentation_of(const FiniteModule& m, const ModuleLimits& limits) {
  if (m.tag_presentation()) return *m.tag_presentation();
  const FiniteRing& r = *m.ring();
  auto gc = coordinates_for(m, limits.max_free_enumeration);
  Presentation p;
  p.from_tag = false;
  p.generators = static_cast<unsigned>(gc.gens.size());
  p.generator_images = gc.gens;
  if (gc.gens.empty()) return p;
  // Reduce the relation module to a small generating set.
  FreeCoords coords{r.size(), p.generators};
  auto vadd = [&](Elem a, Elem b) {
    auto x = coords.decode(a), y = coords.decode(b);
    for (unsigned i = 0; i < p.generators; ++i) x[i] = r.add(x[i], y[i]);
    return static_cast<Elem>(coords.encode(x));
  };
  auto vact = [&](Elem s, Elem a) {
    auto x = coords.decode(a);
    for (unsigned i = 0; i < p.generators; ++i) x[i] = r.mul(s, x[i]);
    return static_cast<Elem>(coords.encode(x));
  };
  std::vector<Elem> chosen_multiples;
  ElementSet span = additive_closure(coords.count(), chosen_multiples, vadd);
  for (const auto& z : gc.zero_tuples) {
    Elem v = static_cast<Elem>(coords.encode(z));
    if (span.contains(v)) continue;
    p.relations.push_back(z);
    for (Elem s = 0; s < r.size(); ++s) chosen_multiples.push_back(vact(s, v));
    span = additive_closure(coords.count(), chosen_multiples, vadd);
  }
  return p;
}

}  // namespace zdlab
