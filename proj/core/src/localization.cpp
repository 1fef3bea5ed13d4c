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

#include "zdlab/localization.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "zdlab/predicates.hpp"
#include "zdlab/text.hpp"

namespace zdlab {

namespace {

constexpr Elem kUnassigned = static_cast<Elem>(-1);

// Equivalence classes of pairs (x, s), pair index x * |S| + j for s = S[j].
struct PairClasses {
  std::vector<Elem> set;         // S in increasing order
  std::vector<Elem> position;    // s -> j, or kUnassigned
  std::vector<Elem> class_of;    // pair -> class
  std::vector<std::size_t> rep;  // class -> representative pair
  std::size_t pair(Elem x, Elem s) const { return x * set.size() + position[s]; }
  Elem of(Elem x, Elem s) const { return class_of[pair(x, s)]; }
  Elem rep_x(Elem c) const { return static_cast<Elem>(rep[c] / set.size()); }
  Elem rep_s(Elem c) const { return set[rep[c] % set.size()]; }
};

PairClasses pair_classes(std::size_t points, const MultiplicativeSet& s, Elem one,
                         const std::function<bool(Elem, Elem, Elem, Elem, Elem)>& kills) {
  PairClasses pc;
  pc.set = s.elements().items();
  pc.position.assign(s.ring()->size(), kUnassigned);
  for (Elem j = 0; j < pc.set.size(); ++j) pc.position[pc.set[j]] = j;
  const std::size_t k = pc.set.size();
  const std::size_t total = points * k;
  pc.class_of.assign(total, kUnassigned);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t p = 0; p < total; ++p) {
    if (pc.class_of[p] != kUnassigned) continue;
    const Elem c = static_cast<Elem>(members.size());
    members.emplace_back();
    const Elem x = static_cast<Elem>(p / k), sx = pc.set[p % k];
    for (std::size_t q = p; q < total; ++q) {
      if (pc.class_of[q] != kUnassigned) continue;
      const Elem y = static_cast<Elem>(q / k), ty = pc.set[q % k];
      bool same = false;
      for (Elem u : pc.set) {
        if (kills(u, x, sx, y, ty)) {
          same = true;
          break;
        }
      }
      if (same) {
        pc.class_of[q] = c;
        members.back().push_back(q);
      }
    }
  }
  // Prefer a representative with denominator 1.
  for (const auto& ms : members) {
    std::size_t best = ms.front();
    for (std::size_t q : ms) {
      if (pc.set[q % k] == one) {
        best = q;
        break;
      }
    }
    pc.rep.push_back(best);
  }
  return pc;
}

std::string fraction_label(const std::string& x, const std::string& s, bool unit_denominator) {
  return unit_denominator ? x : x + "/" + s;
}

std::string set_suffix(const MultiplicativeSet& s) { return s.to_string(); }

}  // namespace

LocalizedRing localize(const RingPtr& ring, const MultiplicativeSet& s) {
  const FiniteRing& r = *ring;
  if (s.ring()->descriptor() != r.descriptor()) throw Error("multiplicative set lives in another ring");
  auto kills = [&r](Elem u, Elem x, Elem sx, Elem y, Elem ty) {
    return r.mul(u, r.sub(r.mul(ty, x), r.mul(sx, y))) == 0;
  };
  auto pc = std::make_shared<PairClasses>(pair_classes(r.size(), s, r.one(), kills));
  const std::size_t n = pc->rep.size();

  FiniteRing::Tables t;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  for (Elem a = 0; a < n; ++a) {
    const Elem x = pc->rep_x(a), sx = pc->rep_s(a);
    t.neg[a] = pc->of(r.neg(x), sx);
    t.labels.push_back(fraction_label(r.label(x), r.label(sx), sx == r.one()));
    for (Elem b = 0; b < n; ++b) {
      const Elem y = pc->rep_x(b), ty = pc->rep_s(b);
      const Elem st = r.mul(sx, ty);
      t.add[a * n + b] = pc->of(r.add(r.mul(ty, x), r.mul(sx, y)), st);
      t.mul[a * n + b] = pc->of(r.mul(x, y), st);
    }
  }
  t.one = pc->of(r.one(), r.one());

  auto parser = [ring, pc](std::string_view text) -> Elem {
    auto parts = text::split_top(text::strip_spaces(text), '/');
    if (parts.size() > 2) throw Error("malformed fraction '" + std::string(text) + "'");
    Elem x = ring->parse_element(parts[0]);
    Elem d = parts.size() == 2 ? ring->parse_element(parts[1]) : ring->one();
    if (pc->position[d] == kUnassigned) throw Error("denominator is not in the multiplicative set");
    return pc->of(x, d);
  };

  LocalizedRing out;
  out.source = ring;
  out.set = s.elements();
  out.degenerate = s.contains(0);
  for (Elem x = 0; x < r.size(); ++x) out.canonical.push_back(pc->of(x, r.one()));
  out.fraction = [pc](Elem x, Elem d) { return pc->of(x, d); };
  out.ring = std::make_shared<FiniteRing>(RingKind::Localized,
                                          "Localize(" + r.descriptor() + "," + set_suffix(s) + ")", std::move(t),
                                          std::vector<RingPtr>{ring}, parser);
  return out;
}

LocalizedModule localize_module(const ModulePtr& mp, const MultiplicativeSet& s) {
  const FiniteModule& m = *mp;
  const FiniteRing& r = *m.ring();
  LocalizedRing lr = localize(m.ring(), s);
  auto kills = [&](Elem u, Elem x, Elem sx, Elem y, Elem ty) {
    return m.act(u, m.sub(m.act(ty, x), m.act(sx, y))) == 0;
  };
  auto pc = std::make_shared<PairClasses>(pair_classes(m.size(), s, r.one(), kills));
  const std::size_t k = pc->rep.size();
  const FiniteRing& rs = *lr.ring;

  // Ring classes: representative (x, t) from the ring's own localization.
  std::vector<std::pair<Elem, Elem>> ring_rep(rs.size());
  {
    std::vector<bool> seen(rs.size(), false);
    for (Elem t : s.elements())
      for (Elem x = 0; x < r.size(); ++x) {
        Elem c = lr.fraction(x, t);
        if (!seen[c]) {
          seen[c] = true;
          ring_rep[c] = {x, t};
        }
      }
  }

  FiniteModule::Tables t;
  t.add.resize(k * k);
  t.neg.resize(k);
  t.act.resize(rs.size() * k);
  for (Elem a = 0; a < k; ++a) {
    const Elem x = pc->rep_x(a), sx = pc->rep_s(a);
    t.neg[a] = pc->of(m.neg(x), sx);
    t.labels.push_back(fraction_label(m.label(x), r.label(sx), sx == r.one()));
    for (Elem b = 0; b < k; ++b) {
      const Elem y = pc->rep_x(b), ty = pc->rep_s(b);
      t.add[a * k + b] = pc->of(m.add(m.act(ty, x), m.act(sx, y)), r.mul(sx, ty));
    }
    for (Elem c = 0; c < rs.size(); ++c) {
      auto [rx, rt] = ring_rep[c];
      t.act[c * k + a] = pc->of(m.act(rx, x), r.mul(rt, sx));
    }
  }

  auto parser = [mp, pc, ring = m.ring()](std::string_view text) -> Elem {
    auto parts = text::split_top(text::strip_spaces(text), '/');
    if (parts.size() > 2) throw Error("malformed fraction '" + std::string(text) + "'");
    Elem x = mp->parse_element(parts[0]);
    Elem d = parts.size() == 2 ? ring->parse_element(parts[1]) : ring->one();
    if (pc->position[d] == kUnassigned) throw Error("denominator is not in the multiplicative set");
    return pc->of(x, d);
  };

  LocalizedModule out;
  out.degenerate = lr.degenerate;
  for (Elem x = 0; x < m.size(); ++x) out.canonical.push_back(pc->of(x, r.one()));
  out.module = std::make_shared<FiniteModule>(lr.ring, ModuleTag::Localized,
                                              "Localize(" + m.descriptor() + "," + set_suffix(s) + ")",
                                              m.context(), std::move(t), std::nullopt,
                                              std::vector<ModulePtr>{mp}, parser);
  out.ring = std::move(lr);
  return out;
}

ModulePtr fractions_over_base(const ModulePtr& m, const MultiplicativeSet& s) {
  LocalizedModule lm = localize_module(m, s);
  return restrict_scalars(lm.module, m->ring(), lm.ring.canonical,
                          "Fractions(" + m->descriptor() + "," + set_suffix(s) + ")", m->context());
}

MultiplicativeSet regular_elements(const RingPtr& ring) {
  ElementSet reg = ring->zero_divisors().complement();
  auto items = reg.items();
  return MultiplicativeSet(ring, items);
}

LocalizedRing total_quotient(const RingPtr& ring) { return localize(ring, regular_elements(ring)); }

bool canonical_is_isomorphism(const LocalizedRing& l) {
  const FiniteRing& r = *l.source;
  const FiniteRing& q = *l.ring;
  if (q.size() != r.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (Elem x = 0; x < r.size(); ++x) {
    if (hit[l.canonical[x]]) return false;
    hit[l.canonical[x]] = true;
    for (Elem y = 0; y < r.size(); ++y) {
      if (l.canonical[r.add(x, y)] != q.add(l.canonical[x], l.canonical[y])) return false;
      if (l.canonical[r.mul(x, y)] != q.mul(l.canonical[x], l.canonical[y])) return false;
    }
  }
  return l.canonical[r.one()] == q.one();
}

Submodule natural_map_kernel(const ModulePtr& m) {
  LocalizedModule lm = localize_module(m, regular_elements(m->ring()));
  std::vector<Elem> kernel;
  for (Elem x = 0; x < m->size(); ++x) {
    if (lm.canonical[x] == 0) kernel.push_back(x);
  }
  return submodule_generated(m, kernel);
}

MultiplicativeSets multiplicative_sets_within(const RingPtr& ring, const ElementSet& allowed, std::size_t cap) {
  MultiplicativeSets out;
  const FiniteRing& r = *ring;
  if (!allowed.contains(r.one())) return out;
  std::map<std::vector<char>, bool> seen;
  std::vector<MultiplicativeSet> queue;
  const Elem one = r.one();
  queue.emplace_back(ring, std::span<const Elem>(&one, 1));
  seen[queue.front().elements().mask()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (queue.size() > cap) {
      out.truncated = true;
      queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(cap), queue.end());
      break;
    }
    for (Elem a : allowed) {
      if (queue[i].contains(a)) continue;
      std::vector<Elem> seed = queue[i].elements().items();
      seed.push_back(a);
      MultiplicativeSet next(ring, seed);
      if (!next.elements().subset_of(allowed)) continue;
      if (seen.emplace(next.elements().mask(), true).second) queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end(), [](const MultiplicativeSet& a, const MultiplicativeSet& b) {
    if (a.elements().size() != b.elements().size()) return a.elements().size() < b.elements().size();
    return a.elements().items() < b.elements().items();
  });
  out.sets = std::move(queue);
  return out;
}

}  // namespace zdlab
