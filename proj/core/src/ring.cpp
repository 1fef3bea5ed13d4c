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

#include "zdlab/ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "zdlab/text.hpp"

namespace zdlab {

namespace {

long long mod_floor(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

std::string poly_label(const std::vector<unsigned>& coeffs) {
  std::vector<std::string> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    unsigned c = coeffs[d];
    if (c == 0) continue;
    if (d == 0) {
      terms.push_back(std::to_string(c));
      continue;
    }
    std::string mono = d == 1 ? "x" : "x^" + std::to_string(d);
    terms.push_back(c == 1 ? mono : std::to_string(c) + "*" + mono);
  }
  return terms.empty() ? "0" : text::join(terms, "+");
}

std::string relation_text(const std::vector<unsigned>& rel) {
  std::vector<std::string> terms;
  for (std::size_t d = rel.size(); d-- > 0;) {
    unsigned c = rel[d];
    if (c == 0) continue;
    if (d == 0) {
      terms.push_back(std::to_string(c));
      continue;
    }
    std::string mono = d == 1 ? "x" : "x^" + std::to_string(d);
    terms.push_back(c == 1 ? mono : std::to_string(c) + "*" + mono);
  }
  return text::join(terms, "+");
}

std::uint64_t fnv(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

RingPtr build_modular(unsigned n) {
  if (n < 2) throw Error("Z<n> needs n >= 2, got " + std::to_string(n));
  if (n > kMaxRingSize) throw BoundExceeded("ring Z" + std::to_string(n) + " exceeds size bound");
  FiniteRing::Tables t;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  for (unsigned a = 0; a < n; ++a) {
    t.neg[a] = (n - a) % n;
    t.labels.push_back(std::to_string(a));
    for (unsigned b = 0; b < n; ++b) {
      t.add[a * n + b] = (a + b) % n;
      t.mul[a * n + b] = static_cast<Elem>((static_cast<unsigned long long>(a) * b) % n);
    }
  }
  t.one = 1;
  auto parser = [n](std::string_view s) -> Elem {
    return static_cast<Elem>(mod_floor(text::parse_int(s), n));
  };
  return std::make_shared<FiniteRing>(RingKind::Modular, "Z" + std::to_string(n), std::move(t),
                                      std::vector<RingPtr>{}, parser);
}

RingPtr build_product(RingPtr a, RingPtr b) {
  const std::size_t na = a->size(), nb = b->size();
  const std::size_t n = na * nb;
  if (n > kMaxRingSize) throw BoundExceeded("product ring exceeds size bound");
  // (x, y) is encoded as x + |A| * y, first component least significant.
  auto enc = [na](Elem x, Elem y) { return static_cast<Elem>(x + na * y); };
  FiniteRing::Tables t;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  t.neg.resize(n);
  t.labels.resize(n);
  for (Elem u = 0; u < n; ++u) {
    Elem ux = u % na, uy = u / na;
    t.neg[u] = enc(a->neg(ux), b->neg(uy));
    t.labels[u] = "(" + a->label(ux) + "," + b->label(uy) + ")";
    for (Elem v = 0; v < n; ++v) {
      Elem vx = v % na, vy = v / na;
      t.add[u * n + v] = enc(a->add(ux, vx), b->add(uy, vy));
      t.mul[u * n + v] = enc(a->mul(ux, vx), b->mul(uy, vy));
    }
  }
  t.one = enc(a->one(), b->one());
  auto parser = [a, b, enc](std::string_view s) -> Elem {
    std::string_view body = text::trim(s);
    if (!text::wrapped_in_parens(body)) throw Error("expected a pair '(a,b)', got '" + std::string(s) + "'");
    auto parts = text::split_top(body.substr(1, body.size() - 2), ',');
    if (parts.size() != 2) throw Error("expected a pair '(a,b)', got '" + std::string(s) + "'");
    return enc(a->parse_element(parts[0]), b->parse_element(parts[1]));
  };
  std::string desc = "Prod(" + a->descriptor() + "," + b->descriptor() + ")";
  return std::make_shared<FiniteRing>(RingKind::Product, std::move(desc), std::move(t),
                                      std::vector<RingPtr>{a, b}, parser);
}

RingPtr build_poly_quotient(unsigned n, const std::vector<unsigned>& rel) {
  if (n < 2) throw Error("PolyQuot base needs n >= 2");
  if (rel.size() < 2) throw Error("relation must have degree >= 1");
  if (rel.back() % n != 1) throw Error("relation must be monic");
  const std::size_t k = rel.size() - 1;
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    size *= n;
    if (size > kMaxRingSize) throw BoundExceeded("polynomial quotient exceeds size bound");
  }
  auto decode = [n, k](Elem e) {
    std::vector<unsigned> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = e % n;
      e /= n;
    }
    return c;
  };
  auto encode = [n, k](const std::vector<unsigned>& c) {
    Elem e = 0;
    for (std::size_t i = k; i-- > 0;) e = e * n + c[i];
    return e;
  };
  // Reduces an arbitrary integer coefficient vector modulo (n, rel).
  auto reduce = [n, k, rel](std::vector<long long> c) {
    for (std::size_t d = c.size(); d-- > k;) {
      long long lead = mod_floor(c[d], n);
      c[d] = 0;
      if (lead == 0) continue;
      for (std::size_t i = 0; i < k; ++i) {
        c[d - k + i] = mod_floor(c[d - k + i] - lead * static_cast<long long>(rel[i]), n);
      }
    }
    std::vector<unsigned> out(k);
    for (std::size_t i = 0; i < k && i < c.size(); ++i) out[i] = static_cast<unsigned>(mod_floor(c[i], n));
    return out;
  };
  FiniteRing::Tables t;
  t.add.resize(size * size);
  t.mul.resize(size * size);
  t.neg.resize(size);
  t.labels.resize(size);
  for (Elem u = 0; u < size; ++u) {
    auto cu = decode(u);
    t.labels[u] = poly_label(cu);
    std::vector<unsigned> neg(k);
    for (std::size_t i = 0; i < k; ++i) neg[i] = (n - cu[i]) % n;
    t.neg[u] = encode(neg);
    for (Elem v = 0; v < size; ++v) {
      auto cv = decode(v);
      std::vector<unsigned> sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = (cu[i] + cv[i]) % n;
      t.add[u * size + v] = encode(sum);
      std::vector<long long> prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] += static_cast<long long>(cu[i]) * cv[j];
      t.mul[u * size + v] = encode(reduce(std::move(prod)));
    }
  }
  std::vector<unsigned> one(k, 0);
  one[0] = 1 % n;
  t.one = encode(one);
  auto parser = [reduce, encode](std::string_view s) -> Elem {
    auto terms = text::parse_int_poly(s, 'x');
    std::vector<long long> c(terms.rbegin()->first + 1, 0);
    for (auto [d, v] : terms) c[d] += v;
    return encode(reduce(std::move(c)));
  };
  std::vector<unsigned> relm(rel.size());
  for (std::size_t i = 0; i < rel.size(); ++i) relm[i] = rel[i] % n;
  std::string desc = "PolyQuot(Z" + std::to_string(n) + "," + relation_text(relm) + ")";
  return std::make_shared<FiniteRing>(RingKind::PolyQuotient, std::move(desc), std::move(t),
                                      std::vector<RingPtr>{}, parser);
}

}  // namespace

RingSpec RingSpec::zmod(unsigned n) {
  RingSpec s;
  s.kind = RingKind::Modular;
  s.modulus = n;
  return s;
}

RingSpec RingSpec::product(RingSpec a, RingSpec b) {
  RingSpec s;
  s.kind = RingKind::Product;
  s.factors = {std::move(a), std::move(b)};
  return s;
}

RingSpec RingSpec::poly_quotient(unsigned n, std::vector<unsigned> relation) {
  RingSpec s;
  s.kind = RingKind::PolyQuotient;
  s.modulus = n;
  s.relation = std::move(relation);
  return s;
}

std::string RingSpec::to_string() const {
  switch (kind) {
    case RingKind::Modular:
      return "Z" + std::to_string(modulus);
    case RingKind::Product:
      return "Prod(" + factors.at(0).to_string() + "," + factors.at(1).to_string() + ")";
    case RingKind::PolyQuotient: {
      std::vector<unsigned> rel(relation.size());
      for (std::size_t i = 0; i < rel.size(); ++i) rel[i] = modulus ? relation[i] % modulus : relation[i];
      return "PolyQuot(Z" + std::to_string(modulus) + "," + relation_text(rel) + ")";
    }
    case RingKind::Localized:
      break;
  }
  throw Error("localized rings have no construction descriptor");
}

FiniteRing::FiniteRing(RingKind kind, std::string descriptor, Tables tables,
                       std::vector<RingPtr> parts, ElementParser parser)
    : kind_(kind),
      descriptor_(std::move(descriptor)),
      n_(tables.neg.size()),
      t_(std::move(tables)),
      parts_(std::move(parts)),
      parser_(std::move(parser)) {
  if (n_ == 0) throw Error("ring carrier must be nonempty");
  if (t_.add.size() != n_ * n_ || t_.mul.size() != n_ * n_ || t_.labels.size() != n_) {
    throw Error("inconsistent ring tables for " + descriptor_);
  }
}

std::optional<Elem> FiniteRing::find_label(std::string_view text) const {
  const std::string key = text::strip_spaces(text);
  for (Elem e = 0; e < n_; ++e) {
    if (text::strip_spaces(t_.labels[e]) == key) return e;
  }
  return std::nullopt;
}

Elem FiniteRing::parse_element(std::string_view text) const {
  if (auto hit = find_label(text)) return *hit;
  if (!parser_) throw Error("'" + std::string(text) + "' is not an element of " + descriptor_);
  try {
    Elem e = parser_(text);
    if (e >= n_) throw Error("element out of range");
    return e;
  } catch (const Error& err) {
    throw Error("'" + std::string(text) + "' is not an element of " + descriptor_ + ": " + err.what());
  }
}

Elem FiniteRing::from_int(long long k) const {
  bool negative = k < 0;
  unsigned long long m = negative ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Elem acc = zero(), base = one();
  while (m) {
    if (m & 1u) acc = add(acc, base);
    base = add(base, base);
    m >>= 1;
  }
  return negative ? neg(acc) : acc;
}

const std::vector<ElementSet>& FiniteRing::ideal_lattice() const {
  std::call_once(lattice_once_, [this] {
    auto ideals = all_ideals(shared_from_this());
    std::vector<ElementSet> sets;
    sets.reserve(ideals.size());
    for (auto& i : ideals) sets.push_back(i.elements());
    std::lock_guard lock(cache_mu_);
    lattice_ = std::move(sets);
    lattice_ready_ = true;
  });
  return lattice_;
}

bool FiniteRing::seed_lattice(std::vector<ElementSet> lattice) const {
  bool installed = false;
  std::call_once(lattice_once_, [&] {
    std::lock_guard lock(cache_mu_);
    lattice_ = std::move(lattice);
    lattice_ready_ = true;
    installed = true;
  });
  return installed;
}

const std::vector<std::vector<Elem>>& FiniteRing::lattice_generators() const {
  const auto& lattice = ideal_lattice();
  std::call_once(gens_once_, [&] {
    auto self = shared_from_this();
    for (const auto& s : lattice) lattice_gens_.push_back(greedy_generators(self, s));
  });
  return lattice_gens_;
}

bool FiniteRing::lattice_ready() const {
  std::lock_guard lock(cache_mu_);
  return lattice_ready_;
}

const ElementSet& FiniteRing::zero_divisors() const {
  std::call_once(zd_once_, [this] { zero_divisors_ = zero_divisors_ring(*this); });
  return zero_divisors_;
}

std::uint64_t FiniteRing::checksum() const {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv(h, n_);
  h = fnv(h, t_.one);
  for (Elem e : t_.add) h = fnv(h, e);
  for (Elem e : t_.mul) h = fnv(h, e);
  return h;
}

RingPtr make_zmod(unsigned n) { return build_modular(n); }

RingPtr make_ring(const RingSpec& spec) {
  switch (spec.kind) {
    case RingKind::Modular:
      return build_modular(spec.modulus);
    case RingKind::Product:
      if (spec.factors.size() != 2) throw Error("Prod takes exactly two rings");
      return build_product(make_ring(spec.factors[0]), make_ring(spec.factors[1]));
    case RingKind::PolyQuotient:
      return build_poly_quotient(spec.modulus, spec.relation);
    case RingKind::Localized:
      break;
  }
  throw Error("localized rings are built by localize()");
}

std::optional<std::string> check_ring_axioms(const FiniteRing& r) {
  const std::size_t n = r.size();
  if (n < 2 || r.one() == r.zero()) return "ring must have 0 != 1";
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, 0) != a) return "0 is not an additive identity for " + r.label(a);
    if (r.mul(a, r.one()) != a) return "1 is not a multiplicative identity for " + r.label(a);
    if (r.add(a, r.neg(a)) != 0) return "negation fails for " + r.label(a);
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return "addition not commutative";
      if (r.mul(a, b) != r.mul(b, a)) return "multiplication not commutative";
      for (Elem c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "addition not associative";
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplication not associative";
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "distributivity fails";
      }
    }
  }
  return std::nullopt;
}

Ideal::Ideal(RingPtr ring, std::vector<Elem> generators, ElementSet elements)
    : ring_(std::move(ring)), gens_(std::move(generators)), elems_(std::move(elements)) {}

std::string Ideal::to_string() const {
  std::vector<std::string> parts;
  for (Elem g : gens_) parts.push_back(ring_->label(g));
  if (parts.empty()) parts.push_back(ring_->label(0));
  return "(" + text::join(parts, ",") + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  bool same_ring = a.ring_ == b.ring_ || a.ring_->descriptor() == b.ring_->descriptor();
  return same_ring && a.elems_ == b.elems_;
}

namespace {

ElementSet ideal_closure(const FiniteRing& r, std::span<const Elem> gens) {
  std::vector<Elem> multiples;
  std::vector<char> seen(r.size(), 0);
  for (Elem g : gens) {
    if (g >= r.size()) throw Error("generator outside ring carrier");
    for (Elem x = 0; x < r.size(); ++x) {
      Elem p = r.mul(x, g);
      if (!seen[p]) {
        seen[p] = 1;
        multiples.push_back(p);
      }
    }
  }
  return additive_closure(r.size(), multiples, [&r](Elem a, Elem b) { return r.add(a, b); });
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring() && a.ring()->descriptor() != b.ring()->descriptor()) {
    throw Error("ideals belong to different rings");
  }
}

}  // namespace

std::vector<Elem> greedy_generators(const RingPtr& ring, const ElementSet& ideal) {
  std::vector<Elem> gens;
  ElementSet span = ElementSet::from_items(ring->size(), std::vector<Elem>{0});
  for (Elem e : ideal) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = ideal_closure(*ring, gens);
    if (span.size() == ideal.size()) break;
  }
  return gens;
}

Ideal ideal_generated(const RingPtr& ring, std::span<const Elem> gens) {
  ElementSet elems = ideal_closure(*ring, gens);
  return Ideal(ring, std::vector<Elem>(gens.begin(), gens.end()), std::move(elems));
}

Ideal ideal_from_elements(const RingPtr& ring, ElementSet elements) {
  auto gens = greedy_generators(ring, elements);
  return Ideal(ring, std::move(gens), std::move(elements));
}

Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealOp op) {
  require_same_ring(a, b);
  const FiniteRing& r = *a.ring();
  switch (op) {
    case IdealOp::Sum: {
      std::vector<Elem> gens = a.generators();
      gens.insert(gens.end(), b.generators().begin(), b.generators().end());
      return ideal_from_elements(a.ring(), ideal_closure(r, gens));
    }
    case IdealOp::Product: {
      std::vector<Elem> gens;
      for (Elem x : a.generators())
        for (Elem y : b.generators()) gens.push_back(r.mul(x, y));
      return ideal_from_elements(a.ring(), ideal_closure(r, gens));
    }
    case IdealOp::Intersect:
      return ideal_from_elements(a.ring(), a.elements().intersect(b.elements()));
  }
  throw Error("unknown ideal operation");
}

Ideal ideal_power(const Ideal& a, unsigned k) {
  Ideal acc = ideal_generated(a.ring(), std::vector<Elem>{a.ring()->one()});
  for (unsigned i = 0; i < k; ++i) acc = ideal_combine(acc, a, IdealOp::Product);
  return acc;
}

Ideal ideal_scale(Elem r, const Ideal& a) {
  const FiniteRing& ring = *a.ring();
  ElementSet out(ring.size());
  for (Elem x : a.elements()) out.insert(ring.mul(r, x));
  return ideal_from_elements(a.ring(), std::move(out));
}

Ideal annihilator(const Ideal& ideal) {
  const FiniteRing& r = *ideal.ring();
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool kills = std::all_of(ideal.elements().begin(), ideal.elements().end(),
                             [&](Elem a) { return r.mul(x, a) == 0; });
    if (kills) out.insert(x);
  }
  return ideal_from_elements(ideal.ring(), std::move(out));
}

std::vector<Ideal> all_ideals(const RingPtr& ring, std::size_t bound) {
  const FiniteRing& r = *ring;
  if (r.size() > bound) throw BoundExceeded("ideal lattice bound exceeded for " + r.descriptor());
  std::map<std::vector<char>, ElementSet> found;
  std::vector<ElementSet> order;
  auto add_set = [&](ElementSet s) {
    auto [it, inserted] = found.emplace(s.mask(), s);
    if (inserted) order.push_back(std::move(s));
    return inserted;
  };
  for (Elem a = 0; a < r.size(); ++a) add_set(ideal_closure(r, std::vector<Elem>{a}));
  // Every ideal of a finite ring is a finite sum of cyclic ideals, so the
  // pairwise-sum fixpoint reaches all of them.
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elem> gens = order[i].items();
      gens.insert(gens.end(), order[j].items().begin(), order[j].items().end());
      add_set(additive_closure(r.size(), gens, [&r](Elem x, Elem y) { return r.add(x, y); }));
    }
  }
  std::sort(order.begin(), order.end(), [](const ElementSet& x, const ElementSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.items() < y.items();
  });
  std::vector<Ideal> out;
  out.reserve(order.size());
  for (auto& s : order) out.push_back(ideal_from_elements(ring, s));
  return out;
}

std::vector<Ideal> ideals_of(const RingPtr& ring) {
  const auto& sets = ring->ideal_lattice();
  const auto& gens = ring->lattice_generators();
  std::vector<Ideal> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) out.emplace_back(ring, gens[i], sets[i]);
  return out;
}

ElementSet zero_divisors_ring(const FiniteRing& r) {
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    for (Elem s = 1; s < r.size(); ++s) {
      if (r.mul(x, s) == 0) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

ElementSet units(const FiniteRing& r) {
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    for (Elem y = 0; y < r.size(); ++y) {
      if (r.mul(x, y) == r.one()) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

RingFlags ring_predicates(const RingPtr& ring) {
  RingFlags f;
  const auto& zd = ring->zero_divisors();
  f.is_domain = zd.size() == 1;
  f.is_field = f.is_domain;
  const auto& lattice = ring->ideal_lattice();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& cand = lattice[i];
    if (cand.size() == ring->size()) continue;
    bool maximal = true;
    for (const auto& other : lattice) {
      if (other.size() > cand.size() && other.size() < ring->size() && cand.subset_of(other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) f.maximal_ideals.push_back(ideal_from_elements(ring, cand));
  }
  f.is_local = f.maximal_ideals.size() == 1;
  return f;
}

std::vector<Elem> primitive_idempotents(const FiniteRing& r) {
  std::vector<Elem> idem;
  for (Elem e = 1; e < r.size(); ++e) {
    if (r.mul(e, e) == e) idem.push_back(e);
  }
  std::vector<Elem> out;
  for (Elem e : idem) {
    bool primitive = std::none_of(idem.begin(), idem.end(), [&](Elem f) {
      return f != e && r.mul(e, f) == f;
    });
    if (primitive) out.push_back(e);
  }
  return out;
}

MultiplicativeSet::MultiplicativeSet(RingPtr ring, std::span<const Elem> seed)
    : ring_(std::move(ring)), elems_(ring_->size()) {
  const FiniteRing& r = *ring_;
  for (Elem s : seed) elems_.insert(s);
  if (!elems_.contains(r.one())) {
    was_closed_ = false;
    elems_.insert(r.one());
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> snapshot = elems_.items();
    for (Elem a : snapshot)
      for (Elem b : snapshot) {
        if (elems_.insert(r.mul(a, b))) {
          grew = true;
          was_closed_ = false;
        }
      }
  }
}

std::string MultiplicativeSet::to_string() const {
  std::vector<std::string> parts;
  for (Elem e : elems_) parts.push_back(ring_->label(e));
  return "{" + text::join(parts, ",") + "}";
}

}  // namespace zdlab
