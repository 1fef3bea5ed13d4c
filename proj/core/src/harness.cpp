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

#include "zdlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "harness_internal.hpp"
#include "zdlab/localization.hpp"
#include "zdlab/text.hpp"
#include "zdlab/zadapter.hpp"

namespace zdlab::harness {

namespace {

std::atomic<unsigned> g_workers{0};

// ---------------------------------------------------------------------------
// Tallies

struct Tally {
  std::size_t evaluated = 0;
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::vector<Failure> failures;
  std::vector<std::string> log;
  std::vector<WitnessRecord> witnesses;

  void check(bool ok, const std::function<Failure()>& failure) {
    ++applicable;
    if (ok) {
      ++passed;
    } else {
      failures.push_back(failure());
    }
  }

  void merge(Tally&& o) {
    evaluated += o.evaluated;
    applicable += o.applicable;
    passed += o.passed;
    for (auto& f : o.failures) failures.push_back(std::move(f));
    for (auto& l : o.log) log.push_back(std::move(l));
    for (auto& w : o.witnesses) witnesses.push_back(std::move(w));
  }
};

template <class F>
Tally over_modules(const Universe& u, F&& body) {
  auto parts = parallel_map<Tally>(u.modules.size(), [&](std::size_t i) {
    Tally t;
    ++t.evaluated;
    body(u.modules[i], t);
    return t;
  });
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

template <class F>
Tally over_rings(const Universe& u, F&& body) {
  auto parts = parallel_map<Tally>(u.rings.size(), [&](std::size_t i) {
    Tally t;
    body(i, t);
    return t;
  });
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

Failure failure_at(const ModulePtr& m, std::string detail, std::vector<WitnessRecord> ws = {}) {
  return Failure{m->context(), m->descriptor(), std::move(detail), std::move(ws)};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

StatementReport make_report(Tally t, std::vector<std::string> notes = {}) {
  StatementReport r;
  r.evaluated = t.evaluated;
  r.applicable = t.applicable;
  r.passed = t.passed;
  r.failures = std::move(t.failures);
  r.log = std::move(t.log);
  r.witnesses = std::move(t.witnesses);
  r.notes = std::move(notes);
  return r;
}

// ---------------------------------------------------------------------------
// Predicate shorthands

bool auslander(const ModulePtr& m, const Bounds& b) { return detail::auslander(m, b).holds; }
bool torsion_free(const ModulePtr& m, const Bounds& b) { return detail::torsion_free(m, b).holds; }
bool tf_auslander(const ModulePtr& m, const Bounds& b) { return auslander(m, b) && torsion_free(m, b); }

bool is_domain(const RingPtr& r) { return ring_predicates(r).is_domain; }

std::vector<WitnessRecord> failing_records(const ModulePtr& m, const Bounds& b, bool want_tf = true) {
  std::vector<WitnessRecord> out;
  Verdict a = detail::auslander(m, b);
  if (!a.holds) out.push_back(detail::record("auslander", m, a));
  if (want_tf) {
    Verdict t = detail::torsion_free(m, b);
    if (!t.holds) out.push_back(detail::record("torsion_free", m, t));
  }
  return out;
}

std::vector<ExtShape> polynomial_shapes(const Bounds& b) {
  std::vector<ExtShape> out{ExtShape::polynomial(1)};
  if (b.variables >= 2) out.push_back(ExtShape::polynomial(2));
  return out;
}

std::string shape_name(const ExtShape& s) {
  if (s.kind == ExtKind::Series) return "M[[X]] (precision " + std::to_string(s.precision) + ")";
  return s.variables == 1 ? "M[X]" : "M[X1,X2]";
}

std::string ext_predicate(const ExtShape& s, bool auslander_side) {
  const std::string base = s.kind == ExtKind::Series ? "series_" : "polynomial_";
  return base + (auslander_side ? "auslander" : "torsion_free");
}

WitnessRecord ext_record(const ModulePtr& m, const ExtShape& s, bool auslander_side, const Verdict& v) {
  WitnessRecord w = detail::record(ext_predicate(s, auslander_side), m, v);
  return w;
}

// iff check between a base predicate and its extension counterpart.
void extension_iff(const ModulePtr& m, const ExtShape& shape, bool check_auslander, bool check_tf,
                   const Bounds& b, Tally& t) {
  bool base = true;
  bool ext = true;
  std::vector<WitnessRecord> ws;
  if (check_auslander) {
    base = base && auslander(m, b);
    Verdict v = extension_auslander(m, shape);
    ext = ext && v.holds;
    if (!v.holds) ws.push_back(ext_record(m, shape, true, v));
  }
  if (check_tf) {
    base = base && torsion_free(m, b);
    Verdict v = extension_torsion_free(m, shape);
    ext = ext && v.holds;
    if (!v.holds) ws.push_back(ext_record(m, shape, false, v));
  }
  t.check(base == ext, [&] {
    return failure_at(m, "M: " + yes_no(base) + ", " + shape_name(shape) + ": " + yes_no(ext), ws);
  });
  // Reverse-direction evidence, kept for small modules where the
  // re-check is cheap.
  if (base == ext && !ext && m->size() <= b.cross_module) {
    for (auto& w : ws) t.witnesses.push_back(std::move(w));
  }
}

// ---------------------------------------------------------------------------
// Statements

StatementReport st_auslander_domain(const Universe& u, const Bounds& b) {
  Tally t = over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!is_domain(m->ring())) return;
    t.check(auslander(m, b), [&] { return failure_at(m, "module over a domain is not Auslander", failing_records(m, b)); });
  });
  for (unsigned n : u.integer_moduli) {
    ++t.evaluated;
    t.check(zz::auslander(n).holds, [&] { return Failure{"ZZ", integer_member(n), "Z/n is not Auslander", {}}; });
  }
  return make_report(std::move(t), {"finite domains are fields; the integer adapter members Z/n over ZZ are the "
                                    "non-field instances"});
}

StatementReport st_auslander_flat_content(const Universe& u, const Bounds& b) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!is_flat(m).holds || !is_content_module(m).holds || !is_content_surjective(m).holds) return;
    t.check(auslander(m, b), [&] { return failure_at(m, "not Auslander", failing_records(m, b, false)); });
  }));
}

StatementReport st_auslander_faithful(const Universe& u, const Bounds& b) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!is_faithful(m).holds) return;
    t.check(auslander(m, b), [&] { return failure_at(m, "faithful but not Auslander", failing_records(m, b, false)); });
  }));
}

// Hom(M, M) under the given hypothesis, or nullptr when a cap is hit.
ModulePtr try_hom(const ModulePtr& m, Tally& t) {
  try {
    return hom_module(m);
  } catch (const BoundExceeded&) {
    t.log.push_back("skipped Hom(" + m->descriptor() + ") over " + m->context() + ": size cap");
    return nullptr;
  }
}

StatementReport st_auslander_faithful_endo(const Universe& u, const Bounds& b) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!is_faithful(m).holds) return;
    ModulePtr h = try_hom(m, t);
    if (!h) return;
    t.check(auslander(h, b), [&] { return failure_at(h, "Hom(M,M) is not Auslander", failing_records(h, b, false)); });
  }));
}

StatementReport st_auslander_submodule(const Universe& u, const Bounds& b) {
  Tally t = over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (m->size() > 32) return;
    const bool whole = auslander(m, b);
    for (const auto& s : all_submodules(m)) {
      if (s.size() < 2) continue;
      std::vector<std::string> gens;
      for (Elem g : module_generators(*m, s)) gens.push_back(m->label(g));
      std::string desc = "Sub(" + m->descriptor() + ",{";
      for (std::size_t i = 0; i < gens.size(); ++i) desc += (i ? "," : "") + gens[i];
      desc += "})";
      ModulePtr n = submodule_module(m, s, desc);
      if (!auslander(n, b)) continue;
      t.check(whole, [&] { return failure_at(m, "Auslander submodule " + desc + " inside a non-Auslander module",
                                             failing_records(m, b, false)); });
    }
  });
  return make_report(std::move(t), {"modules with |M| <= 32; every nonzero submodule"});
}

std::vector<std::vector<ModulePtr>> modules_by_ring(const Universe& u) {
  std::vector<std::vector<ModulePtr>> out(u.rings.size());
  for (const auto& um : u.modules) out[um.ring].push_back(um.module);
  return out;
}

// M + M' (and M + M' + M'' when `three`) over pairs from the same ring.
template <class Hyp, class Claim>
Tally sums(const Universe& u, bool three, Hyp&& hyp_first, Hyp&& hyp_other, Claim&& claim) {
  const auto by_ring = modules_by_ring(u);
  struct Job {
    ModulePtr a, b;
  };
  std::vector<Job> jobs;
  for (const auto& mods : by_ring)
    for (const auto& a : mods)
      for (const auto& c : mods) jobs.push_back({a, c});
  auto parts = parallel_map<Tally>(jobs.size(), [&](std::size_t i) {
    Tally t;
    ++t.evaluated;
    const auto& [a, c] = jobs[i];
    if (!hyp_first(a) || !hyp_other(c)) return t;
    const std::size_t size = three ? a->size() * c->size() * c->size() : a->size() * c->size();
    if (size > 1024) return t;
    ModulePtr s = direct_sum(a, c);
    if (three) s = direct_sum(s, c);
    t.check(claim(s), [&] { return failure_at(s, "conclusion fails for the sum", {}); });
    return t;
  });
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

const char* kFiniteIndex = "finite-index instantiation: families of two or three summands; finite products coincide "
                           "with finite direct sums";

StatementReport st_auslander_direct_sum(const Universe& u, const Bounds& b) {
  auto aus = [&](const ModulePtr& m) { return auslander(m, b); };
  auto any = [](const ModulePtr&) { return true; };
  auto hyp_first = std::function<bool(const ModulePtr&)>(aus);
  auto hyp_other = std::function<bool(const ModulePtr&)>(any);
  Tally t = sums(u, false, hyp_first, hyp_other, aus);
  t.merge(sums(u, true, hyp_first, hyp_other, aus));
  return make_report(std::move(t), {kFiniteIndex, "sums with |M| > 1024 are skipped"});
}

StatementReport st_auslander_localization(const Universe& u, const Bounds& b) {
  std::atomic<std::size_t> outside_units{0}, degenerate{0}, probes{0};
  Tally t = over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    const RingPtr& r = m->ring();
    const ElementSet zm = detail::module_zero_divisors(*m, b);
    const ElementSet zr = detail::ring_zero_divisors(*r, b);
    const ElementSet unit = units(*r);
    const bool hyp = auslander(m, b);
    if (!hyp && r->size() > 16) return;
    auto sets = multiplicative_sets_within(r, zm.complement(), hyp ? 256 : 64);
    if (sets.truncated) t.log.push_back("multiplicative sets truncated for " + m->descriptor() + " over " + r->descriptor());
    for (const auto& s : sets.sets) {
      if (hyp) {
        if (!s.elements().subset_of(unit)) ++outside_units;
        LocalizedModule lm = localize_module(m, s);
        if (lm.degenerate || lm.module->is_zero()) {
          ++degenerate;
          continue;
        }
        t.check(auslander(lm.module, b), [&] {
          return failure_at(lm.module, "M_S is not Auslander over R_S", failing_records(lm.module, b, false));
        });
        continue;
      }
      // Probe: the set avoids Z(M) but meets Z(R); excluded by the hypothesis.
      if (s.elements().intersect(zr).empty() || s.contains(0)) continue;
      ++probes;
      if (r->descriptor() != "Prod(Z2,Z2)") continue;
      LocalizedModule lm = localize_module(m, s);
      t.log.push_back("hypothesis-excluded probe: " + m->descriptor() + " over " + r->descriptor() + ", S = " +
                      s.to_string() + " (M not Auslander; S meets Z(R) and acts regularly on M); M_S Auslander: " +
                      yes_no(auslander(lm.module, b)));
    }
  });
  std::vector<std::string> notes{
      "for Auslander M, every S inside R \\ Z(M) lies in the units, so R_S = R at finite scale",
      "applicable sets outside the units: " + std::to_string(outside_units.load()),
      "degenerate localizations excluded: " + std::to_string(degenerate.load()),
      "hypothesis-excluded probes evaluated: " + std::to_string(probes.load())};
  return make_report(std::move(t), std::move(notes));
}

// Criterion against exhaustive search, for all f of degree <= bound.
void criterion_cross_check(const ModulePtr& m, const Bounds& b, Tally& t, std::size_t& polys) {
  const FiniteRing& r = *m->ring();
  FreeCoords space{r.size(), b.degree + 1};
  for (std::size_t idx = 0; idx < space.count(); ++idx) {
    auto coords = space.decode(idx);
    ExtElement::Terms terms;
    for (unsigned i = 0; i < coords.size(); ++i) terms.emplace(Exponent{{i, 0}}, coords[i]);
    ExtElement f(m->ring(), ExtShape::polynomial(1), std::move(terms));
    const bool criterion = is_zd_on_extension(f, m).holds;
    const bool search = brute_force_zd(f, m, b.degree).holds;
    ++polys;
    if (criterion != search) {
      t.failures.push_back(failure_at(m, "criterion and search disagree on f = " + f.to_string(), {}));
    }
  }
}

StatementReport st_auslander_monoid_ring(const Universe& u, const Bounds& b) {
  std::atomic<std::size_t> pairs{0}, polys_total{0};
  Tally t = over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    // Property (A) is the hypothesis; it is evaluated, never assumed.
    if (!has_property_A(m).holds) return;
    for (const auto& shape : polynomial_shapes(b)) extension_iff(m, shape, true, false, b, t);
    if (m->ring()->size() <= b.cross_ring && m->size() <= b.cross_module) {
      std::size_t polys = 0;
      criterion_cross_check(m, b, t, polys);
      ++pairs;
      polys_total += polys;
    }
  });
  t.log.push_back("criterion vs exhaustive search: " + std::to_string(polys_total.load()) + " polynomials over " +
                  std::to_string(pairs.load()) + " pairs (|R| <= " + std::to_string(b.cross_ring) + ", |M| <= " +
                  std::to_string(b.cross_module) + ", degree <= " + std::to_string(b.degree) + ")");
  return make_report(std::move(t),
                     {"both directions; one f per ideal through the content criterion",
                      "property (A) holds for every finite module, so the hypothesis never excludes a member"});
}

StatementReport st_mccoy_witness(const Universe& u, const Bounds& b) {
  std::atomic<std::size_t> pairs{0};
  Tally t = over_rings(u, [&](std::size_t i, Tally& t) {
    const RingPtr& ring = u.rings[i];
    if (ring->size() > b.mccoy_ring) return;
    ++t.evaluated;
    const FiniteRing& r = *ring;
    const ModulePtr reg = regular_module(ring);
    const unsigned len = b.degree + 1;
    FreeCoords space{r.size(), len};
    std::vector<std::vector<Elem>> all;
    for (std::size_t idx = 0; idx < space.count(); ++idx) all.push_back(space.decode(idx));
    auto to_ext = [&](const std::vector<Elem>& c, bool module) {
      ExtElement::Terms terms;
      for (unsigned k = 0; k < c.size(); ++k) terms.emplace(Exponent{{k, 0}}, c[k]);
      return module ? ExtElement(reg, ExtShape::polynomial(1), std::move(terms))
                    : ExtElement(ring, ExtShape::polynomial(1), std::move(terms));
    };
    std::size_t count = 0;
    unsigned max_k = 0;
    bool recorded = false;
    std::vector<Elem> prod(2 * len - 1);
    for (const auto& f : all) {
      for (std::size_t gi = 1; gi < all.size(); ++gi) {
        const auto& g = all[gi];
        std::fill(prod.begin(), prod.end(), 0);
        for (unsigned a = 0; a < len; ++a)
          for (unsigned c = 0; c < len; ++c) prod[a + c] = r.add(prod[a + c], r.mul(f[a], g[c]));
        if (std::any_of(prod.begin(), prod.end(), [](Elem e) { return e != 0; })) continue;
        ++count;
        const ExtElement fe = to_ext(f, false);
        const ExtElement ge = to_ext(g, true);
        McCoyResult res = mccoy_witness(fe, ge);
        bool ok = res.element != 0;
        for (Elem c : f) ok = ok && r.mul(c, res.element) == 0;
        max_k = std::max(max_k, res.k);
        t.check(ok, [&] {
          return Failure{ring->descriptor(), "Reg", "bad witness for f = " + fe.to_string() + ", g = " + ge.to_string(), {}};
        });
        if (!recorded && !fe.is_zero()) {
          recorded = true;
          t.witnesses.push_back({"mccoy_witness", ring->descriptor(), "Reg", WitnessKind::Polynomial,
                                 {fe.to_string(), ge.to_string(), reg->label(res.element)}, true});
        }
      }
    }
    pairs += count;
    t.log.push_back(ring->descriptor() + ": " + std::to_string(count) + " pairs, largest k = " + std::to_string(max_k));
  });
  return make_report(std::move(t), {"all f, g in R[X] of degree <= " + std::to_string(b.degree) + " with f g = 0, g != 0, over |R| <= " +
                                    std::to_string(b.mccoy_ring) + "; " + std::to_string(pairs.load()) + " pairs"});
}

StatementReport series_iff(const Universe& u, const Bounds& b, std::vector<unsigned> precisions, bool aus, bool tf) {
  Tally t = over_modules(u, [&](const UniverseModule& um, Tally& t) {
    for (unsigned p : precisions) extension_iff(um.module, ExtShape::series(p), aus, tf, b, t);
  });
  std::string ps;
  for (unsigned p : precisions) ps += (ps.empty() ? "" : ", ") + std::to_string(p);
  return make_report(std::move(t), {"both directions; power series truncated at precision " + ps +
                                    ", decided by the content criterion (exact for genuine series over finite rings)"});
}

StatementReport st_auslander_series(const Universe& u, const Bounds& b) { return series_iff(u, b, {b.precision}, true, false); }

StatementReport st_auslander_series_fg(const Universe& u, const Bounds& b) {
  auto r = series_iff(u, b, {4, b.precision}, true, false);
  r.notes.push_back("finite rings are Noetherian and finite modules finitely generated");
  return r;
}

StatementReport st_ohm_rush(const Universe& u, const Bounds& b) {
  Tally t;
  auto parts = parallel_map<Tally>(u.algebras.size(), [&](std::size_t i) {
    Tally t;
    ++t.evaluated;
    const FiniteAlgebra& a = u.algebras[i].algebra;
    if (!is_locally_free(a.as_module()).holds) return t;
    Verdict v = is_ohm_rush(a);
    t.check(v.holds, [&] {
      WitnessRecord w{"ohm_rush", a.base()->descriptor(), a.descriptor(), WitnessKind::RingElement,
                      v.witness ? v.witness->labels : std::vector<std::string>{}, false};
      return Failure{a.base()->descriptor(), a.descriptor(), "projective algebra is not Ohm-Rush", {w}};
    });
    return t;
  });
  for (auto& p : parts) t.merge(std::move(p));
  // Power series: the lattice content of f equals the coefficient ideal,
  // and f lies in c(f)R[[X]].
  t.merge(over_rings(u, [&](std::size_t i, Tally& t) {
    const RingPtr& ring = u.rings[i];
    if (ring->size() > b.mccoy_ring) return;
    ++t.evaluated;
    FreeCoords space{ring->size(), 3};
    const auto lattice = ideals_of(ring);
    bool ok = true;
    std::string bad;
    for (std::size_t idx = 0; idx < space.count() && ok; ++idx) {
      auto c = space.decode(idx);
      ExtElement::Terms terms;
      for (unsigned k = 0; k < c.size(); ++k) terms.emplace(Exponent{{k, 0}}, c[k]);
      ExtElement f(ring, ExtShape::series(b.precision), std::move(terms));
      ElementSet meet = ElementSet::full(ring->size());
      for (const auto& ideal : lattice) {
        bool inside = std::all_of(c.begin(), c.end(), [&](Elem e) { return ideal.contains(e); });
        if (inside) meet = meet.intersect(ideal.elements());
      }
      const Ideal content = content_ideal(f);
      ok = meet == content.elements() && std::all_of(c.begin(), c.end(), [&](Elem e) { return content.contains(e); });
      if (!ok) bad = f.to_string();
    }
    t.check(ok, [&] { return Failure{ring->descriptor(), "R[[X]]", "content mismatch at " + bad, {}}; });
  }));
  return make_report(std::move(t), {"projective universe algebras are Ohm-Rush", "R[[X]]: c(f) = A_f for every series with "
                                    "three coefficients over |R| <= " + std::to_string(b.mccoy_ring)});
}

StatementReport st_mccoy_calibration(const Universe& u, const Bounds&) {
  Tally t;
  auto z2 = make_zmod(2);
  auto p = make_ring(RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(2)));
  FiniteAlgebra prod = canonical_algebra(p, z2);
  Verdict v = is_mccoy_algebra(prod);
  ++t.evaluated;
  const std::vector<std::string> expected{"(1,0)", "(0,1)"};
  const bool rejected = !v.holds && v.witness && v.witness->labels == expected;
  t.check(rejected, [&] { return Failure{"Z2", prod.descriptor(), "expected rejection with ((1,0),(0,1))", {}}; });
  if (v.witness) {
    t.witnesses.push_back({"mccoy_algebra", "Z2", prod.descriptor(), v.witness->kind, v.witness->labels, false});
  }
  t.log.push_back(prod.descriptor() + ": McCoy " + yes_no(v.holds) + ", witness pair (" +
                  (v.witness ? text::join(v.witness->labels, ",") : std::string()) + ")");
  t.merge(over_rings(u, [&](std::size_t i, Tally& t) {
    ++t.evaluated;
    FiniteAlgebra self = canonical_algebra(u.rings[i], u.rings[i]);
    t.check(is_mccoy_algebra(self).holds,
            [&] { return Failure{u.rings[i]->descriptor(), self.descriptor(), "R over itself is not McCoy", {}}; });
  }));
  return make_report(std::move(t));
}

// Modules M over the base of each faithfully flat McCoy algebra B.
Tally algebra_base_change(const Universe& u, const Bounds& b, bool need_flat) {
  const auto by_ring = modules_by_ring(u);
  struct AlgebraFacts {
    bool ff = false;
    bool mccoy = false;
  };
  auto facts = parallel_map<AlgebraFacts>(u.algebras.size(), [&](std::size_t i) {
    const FiniteAlgebra& a = u.algebras[i].algebra;
    return AlgebraFacts{is_faithfully_flat(a.as_module()).holds, is_mccoy_algebra(a).holds};
  });
  struct Job {
    std::size_t algebra;
    ModulePtr module;
  };
  std::vector<Job> jobs;
  Tally total;
  for (std::size_t i = 0; i < u.algebras.size(); ++i) {
    const auto& ua = u.algebras[i];
    if (!facts[i].ff || !facts[i].mccoy) {
      total.log.push_back("excluded " + ua.algebra.descriptor() + ": faithfully flat " + yes_no(facts[i].ff) +
                          ", McCoy " + yes_no(facts[i].mccoy));
      continue;
    }
    for (const auto& m : by_ring[ua.ring]) jobs.push_back({i, m});
  }
  ModuleLimits limits;
  auto parts = parallel_map<Tally>(jobs.size(), [&](std::size_t j) {
    Tally t;
    ++t.evaluated;
    const FiniteAlgebra& a = u.algebras[jobs[j].algebra].algebra;
    const ModulePtr& m = jobs[j].module;
    if (!auslander(m, b) || !has_property_A(m).holds) return t;
    if (need_flat && !is_flat(m).holds) return t;
    ModulePtr tm;
    try {
      tm = tensor_with_algebra(m, a, limits);
    } catch (const BoundExceeded&) {
      t.log.push_back("skipped " + m->descriptor() + " (x) " + a.descriptor() + ": size cap");
      return t;
    }
    const bool ok = need_flat ? tf_auslander(tm, b) : auslander(tm, b);
    t.check(ok, [&] { return failure_at(tm, "base change fails the conclusion", failing_records(tm, b, need_flat)); });
    if (!a.is_trivial()) {
      t.log.push_back("non-trivial instance: " + tm->descriptor() + " over " + a.algebra()->descriptor() + " (|M (x) B| = " +
                      std::to_string(tm->size()) + "): " + (ok ? "holds" : "FAILS"));
    }
    return t;
  });
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

StatementReport st_auslander_mccoy_algebra(const Universe& u, const Bounds& b) {
  return make_report(algebra_base_change(u, b, false),
                     {"universe algebras filtered by faithfully flat and McCoy; the polynomial algebra is exercised "
                      "through the monoid-ring criterion"});
}

StatementReport st_tf_auslander_mccoy_algebra(const Universe& u, const Bounds& b) {
  return make_report(algebra_base_change(u, b, true),
                     {"universe algebras filtered by faithfully flat and McCoy; M additionally flat"});
}

StatementReport content_algebra(const Universe& u, const Bounds& b, bool flat_tf) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!auslander(m, b) || !has_property_A(m).holds) return;
    if (flat_tf && !is_flat(m).holds) return;
    for (const auto& shape : polynomial_shapes(b)) {
      Verdict a = extension_auslander(m, shape);
      Verdict tf = flat_tf ? extension_torsion_free(m, shape) : Verdict::pass();
      t.check(a.holds && tf.holds, [&] {
        std::vector<WitnessRecord> ws;
        if (!a.holds) ws.push_back(ext_record(m, shape, true, a));
        if (!tf.holds) ws.push_back(ext_record(m, shape, false, tf));
        return failure_at(m, shape_name(shape) + " fails the conclusion", ws);
      });
    }
  }), {"the content algebras R[X] and R[X1,X2], through the content criterion"});
}

StatementReport st_tf_characterization(const Universe& u, const Bounds& b) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    const bool kernel_zero = natural_map_kernel(m).is_zero();
    const bool tf = torsion_free(m, b);
    t.check(kernel_zero == tf, [&] {
      return failure_at(m, "kernel zero: " + yes_no(kernel_zero) + ", Z(M) in Z(R): " + yes_no(tf), failing_records(m, b));
    });
  }), {"natural map M -> M (x) Q with Q the total quotient ring"});
}

StatementReport st_tf_monoid_ring(const Universe& u, const Bounds& b) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!has_property_A(regular_module(m->ring())).holds) return;
    for (const auto& shape : polynomial_shapes(b)) extension_iff(m, shape, false, true, b, t);
  }), {"both directions", "property (A) of R holds for every finite ring"});
}

StatementReport st_tf_series(const Universe& u, const Bounds& b) { return series_iff(u, b, {b.precision}, false, true); }

StatementReport st_regular_localization(const Universe& u, const Bounds& b) {
  return make_report(over_rings(u, [&](std::size_t i, Tally& t) {
    const RingPtr& r = u.rings[i];
    auto sets = multiplicative_sets_within(r, detail::ring_zero_divisors(*r, b).complement());
    for (const auto& s : sets.sets) {
      ++t.evaluated;
      if (s.contains(0)) continue;
      ModulePtr f = fractions_over_base(regular_module(r), s);
      const bool same_zd = detail::module_zero_divisors(*f, b) == detail::ring_zero_divisors(*r, b);
      t.check(same_zd && tf_auslander(f, b),
              [&] { return failure_at(f, "R_S is not a torsion-free Auslander R-module", failing_records(f, b)); });
    }
  }), {"every multiplicative set inside R \\ Z(R)"});
}

StatementReport st_domain_quotient(const Universe& u, const Bounds&) {
  Tally t;
  for (unsigned n : zz::registered_cases()) {
    ++t.evaluated;
    zz::CaseReport c = zz::check_case(n);
    if (c.degenerate) {
      t.log.push_back("Z/1 is the zero module; excluded as degenerate");
      continue;
    }
    if (std::find(u.integer_moduli.begin(), u.integer_moduli.end(), n) == u.integer_moduli.end()) continue;
    t.check(c.passed, [&] { return Failure{"ZZ", integer_member(n), "Z/n over ZZ fails the example", {}}; });
    if (c.torsion_free.witness) {
      t.witnesses.push_back({"torsion_free", "ZZ", integer_member(n), WitnessKind::RingElement,
                             c.torsion_free.witness->labels, false});
    }
  }
  return make_report(std::move(t), {"integer adapter: Z(Z/n) computed by gcd, never by enumerating ZZ",
                                    "finite domains are fields, where every nonzero module has Z(M) = {0}"});
}

StatementReport st_tf_not_auslander(const Universe& u, const Bounds& b) {
  Tally t;
  for (const auto& um : u.modules) {
    const ModulePtr& m = um.module;
    const RingPtr& r = m->ring();
    if (r->kind() != RingKind::Product || m->tag() != ModuleTag::Quotient) continue;
    const auto& parts = r->parts();
    if (!ring_predicates(parts[0]).is_field || !ring_predicates(parts[1]).is_field) continue;
    // R/I with I = (0) + k'.
    const Elem e2 = r->parse_element("(0,1)");
    if (m->descriptor() != "Cyclic(" + r->label(e2) + ")") continue;
    ++t.evaluated;
    Verdict a = detail::auslander(m, b);
    const bool tf = torsion_free(m, b);
    t.check(tf && !a.holds, [&] { return failure_at(m, "expected torsion-free and not Auslander", {}); });
    if (a.witness) t.witnesses.push_back(detail::record("auslander", m, a));
    std::string zr, zm;
    for (Elem e : detail::ring_zero_divisors(*r, b)) zr += (zr.empty() ? "" : ",") + r->label(e);
    for (Elem e : detail::module_zero_divisors(*m, b)) zm += (zm.empty() ? "" : ",") + r->label(e);
    t.log.push_back(m->descriptor() + " over " + r->descriptor() + ": Z(R) = {" + zr + "}, Z(M) = {" + zm +
                    "}, torsion-free " + yes_no(tf) + ", Auslander " + yes_no(a.holds) +
                    (a.witness ? ", witness " + a.witness->labels.at(0) : ""));
  }
  return make_report(std::move(t), {"every product of two finite fields in the universe"});
}

template <class Hyp>
StatementReport tf_family(const Universe& u, const Bounds& b, Hyp&& hyp, std::vector<std::string> notes) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!hyp(m)) return;
    t.check(tf_auslander(m, b), [&] { return failure_at(m, "not torsion-free Auslander", failing_records(m, b)); });
  }), std::move(notes));
}

StatementReport st_tf_domain_flat(const Universe& u, const Bounds& b) {
  return tf_family(u, b, [](const ModulePtr& m) { return is_domain(m->ring()) && is_flat(m).holds; },
                   {"finite domains are fields"});
}

StatementReport st_tf_flat_content(const Universe& u, const Bounds& b) {
  return tf_family(u, b, [](const ModulePtr& m) {
    return is_flat(m).holds && is_content_module(m).holds && is_content_surjective(m).holds;
  }, {});
}

StatementReport st_tf_flat_endo(const Universe& u, const Bounds& b) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!is_flat(m).holds || !is_faithful(m).holds) return;
    ModulePtr h = try_hom(m, t);
    if (!h) return;
    t.check(tf_auslander(h, b), [&] { return failure_at(h, "Hom(M,M) is not torsion-free Auslander", failing_records(h, b)); });
  }), {"finite rings are Noetherian"});
}

StatementReport flat_sums(const Universe& u, const Bounds& b, bool three) {
  auto first = std::function<bool(const ModulePtr&)>([&](const ModulePtr& m) { return is_flat(m).holds && auslander(m, b); });
  auto other = std::function<bool(const ModulePtr&)>([](const ModulePtr& m) { return is_flat(m).holds; });
  return make_report(sums(u, three, first, other, [&](const ModulePtr& s) { return tf_auslander(s, b); }),
                     {kFiniteIndex, three ? "three factors" : "two summands"});
}

StatementReport st_tf_flat_sum(const Universe& u, const Bounds& b) { return flat_sums(u, b, false); }
StatementReport st_tf_flat_product(const Universe& u, const Bounds& b) {
  auto r = flat_sums(u, b, true);
  r.notes.push_back("finite rings are coherent");
  return r;
}

StatementReport tf_aus_monoid(const Universe& u, const Bounds& b, ExtShape shape) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    if (!has_property_A(m).holds || !has_property_A(regular_module(m->ring())).holds) return;
    extension_iff(m, shape, true, true, b, t);
  }), {"both directions", "property (A) holds for R and M throughout the universe"});
}

StatementReport st_tf_aus_monoid(const Universe& u, const Bounds& b) { return tf_aus_monoid(u, b, ExtShape::polynomial(1)); }
StatementReport st_tf_aus_monoid_noetherian(const Universe& u, const Bounds& b) {
  auto r = tf_aus_monoid(u, b, ExtShape::polynomial(b.variables >= 2 ? 2 : 1));
  r.notes.push_back("G = N^" + std::to_string(b.variables >= 2 ? 2 : 1));
  return r;
}

StatementReport st_tf_aus_series(const Universe& u, const Bounds& b) { return series_iff(u, b, {b.precision}, true, true); }

StatementReport st_zero_toggle(const Universe& u, const Bounds& b) {
  Bounds with = b, without = b;
  with.zero_in_zero_divisors = true;
  without.zero_in_zero_divisors = false;
  Tally t = over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    const bool same = auslander(m, with) == auslander(m, without) && torsion_free(m, with) == torsion_free(m, without);
    t.check(same, [&] { return failure_at(m, "verdict depends on whether 0 is a zero-divisor", {}); });
  });
  // The boundary: the zero module is degenerate under both conventions.
  auto zero = cyclic_module(ideal_generated(make_zmod(2), std::vector<Elem>{1}));
  const bool boundary = detail::auslander(zero, with).degenerate && detail::auslander(zero, without).degenerate;
  t.check(boundary, [] { return Failure{"Z2", "Cyclic(1)", "zero module not flagged degenerate", {}}; });
  t.log.push_back("only boundary reporting changes: 0 leaves Z(R) and Z(M); the zero module stays degenerate");
  return make_report(std::move(t), {"suite verdicts are compared under both conventions by the test suite"});
}

StatementReport st_property_a(const Universe& u, const Bounds&) {
  return make_report(over_modules(u, [&](const UniverseModule& um, Tally& t) {
    const ModulePtr& m = um.module;
    Verdict v = has_property_A(m);
    t.check(v.holds, [&] { return failure_at(m, "property (A) fails", {detail::record("property_a", m, v)}); });
  }), {"finitely generated modules over Noetherian rings have property (A)"});
}

const std::vector<std::string> kRequiredIds{
    "auslander.domain",
    "auslander.flat-content-surjective",
    "auslander.faithful",
    "auslander.faithful-endomorphisms",
    "auslander.submodule",
    "auslander.direct-sum",
    "auslander.localization",
    "auslander.monoid-ring",
    "mccoy.witness",
    "auslander.power-series",
    "auslander.power-series-fg",
    "algebra.ohm-rush",
    "algebra.mccoy-calibration",
    "auslander.mccoy-algebra",
    "auslander.content-algebra",
    "torsion-free.characterization",
    "torsion-free.monoid-ring",
    "torsion-free.power-series",
    "examples.regular-localization",
    "examples.domain-quotient",
    "examples.torsion-free-not-auslander",
    "tf-auslander.domain-flat",
    "tf-auslander.flat-content-surjective",
    "tf-auslander.flat-endomorphisms",
    "tf-auslander.flat-direct-sum",
    "tf-auslander.flat-product",
    "tf-auslander.monoid-ring",
    "tf-auslander.monoid-ring-noetherian",
    "tf-auslander.mccoy-algebra",
    "tf-auslander.content-algebra",
    "tf-auslander.power-series",
    "convention.zero-divisor-toggle",
    "property-a.finite-modules",
};

std::vector<Statement> build_registry() {
  std::vector<Statement> r{
      {"auslander.domain", "modules over a domain are Auslander", st_auslander_domain},
      {"auslander.flat-content-surjective", "flat content modules with every principal content are Auslander",
       st_auslander_flat_content},
      {"auslander.faithful", "faithful modules are Auslander", st_auslander_faithful},
      {"auslander.faithful-endomorphisms", "Hom(M,M) is Auslander for faithful M", st_auslander_faithful_endo},
      {"auslander.submodule", "a module with an Auslander submodule is Auslander", st_auslander_submodule},
      {"auslander.direct-sum", "sums with an Auslander summand are Auslander", st_auslander_direct_sum},
      {"auslander.localization", "M_S is Auslander over R_S for S avoiding Z(M)", st_auslander_localization},
      {"auslander.monoid-ring", "M[G] is Auslander iff M is", st_auslander_monoid_ring},
      {"mccoy.witness", "f g = 0 with g != 0 gives a nonzero constant m with f m = 0", st_mccoy_witness},
      {"auslander.power-series", "M[[X]] is Auslander iff M is (property (A))", st_auslander_series},
      {"auslander.power-series-fg", "M[[X]] is Auslander iff M is (finitely generated over Noetherian R)",
       st_auslander_series_fg},
      {"algebra.ohm-rush", "projective algebras and R[[X]] are Ohm-Rush", st_ohm_rush},
      {"algebra.mccoy-calibration", "the McCoy predicate on known algebras", st_mccoy_calibration},
      {"auslander.mccoy-algebra", "M (x) B is Auslander for faithfully flat McCoy B", st_auslander_mccoy_algebra},
      {"auslander.content-algebra", "M (x) B is Auslander for content algebras B",
       [](const Universe& u, const Bounds& b) { return content_algebra(u, b, false); }},
      {"torsion-free.characterization", "M -> M (x) Q injective iff Z(M) in Z(R)", st_tf_characterization},
      {"torsion-free.monoid-ring", "M[G] is torsion-free iff M is", st_tf_monoid_ring},
      {"torsion-free.power-series", "M[[X]] is torsion-free iff M is", st_tf_series},
      {"examples.regular-localization", "R_S is a torsion-free Auslander R-module for S inside R \\ Z(R)",
       st_regular_localization},
      {"examples.domain-quotient", "Z/n over ZZ is Auslander and not torsion-free", st_domain_quotient},
      {"examples.torsion-free-not-auslander", "R/((0) + k) over k + k is torsion-free and not Auslander",
       st_tf_not_auslander},
      {"tf-auslander.domain-flat", "flat modules over a domain are torsion-free Auslander", st_tf_domain_flat},
      {"tf-auslander.flat-content-surjective", "flat content modules with every principal content are torsion-free Auslander",
       st_tf_flat_content},
      {"tf-auslander.flat-endomorphisms", "Hom(M,M) is torsion-free Auslander for flat faithful M", st_tf_flat_endo},
      {"tf-auslander.flat-direct-sum", "sums of flat modules with an Auslander summand", st_tf_flat_sum},
      {"tf-auslander.flat-product", "products of flat modules with an Auslander factor", st_tf_flat_product},
      {"tf-auslander.monoid-ring", "M[G] is torsion-free Auslander iff M is", st_tf_aus_monoid},
      {"tf-auslander.monoid-ring-noetherian", "M[G] is torsion-free Auslander iff M is (Noetherian R)",
       st_tf_aus_monoid_noetherian},
      {"tf-auslander.mccoy-algebra", "M (x) B is torsion-free Auslander for flat M and faithfully flat McCoy B",
       st_tf_auslander_mccoy_algebra},
      {"tf-auslander.content-algebra", "M (x) B is torsion-free Auslander for flat M and content algebras B",
       [](const Universe& u, const Bounds& b) { return content_algebra(u, b, true); }},
      {"tf-auslander.power-series", "M[[X]] is torsion-free Auslander iff M is", st_tf_aus_series},
      {"convention.zero-divisor-toggle", "verdicts do not depend on whether 0 counts as a zero-divisor", st_zero_toggle},
      {"property-a.finite-modules", "every finite module has property (A)", st_property_a},
  };
  // Completeness: every required id exactly once, nothing else.
  std::set<std::string> seen;
  for (const auto& s : r) {
    if (!seen.insert(s.id).second) throw Error("duplicate statement id " + s.id);
    if (std::find(kRequiredIds.begin(), kRequiredIds.end(), s.id) == kRequiredIds.end()) {
      throw Error("unregistered statement id " + s.id);
    }
  }
  for (const auto& id : kRequiredIds)
    if (!seen.count(id)) throw Error("statement " + id + " has no check");
  return r;
}

// ---------------------------------------------------------------------------
// Universe

void self_check(const RingPtr& r) {
  if (auto bad = check_ring_axioms(*r)) throw Error("universe ring " + r->descriptor() + ": " + *bad);
}

void self_check(const ModulePtr& m) {
  if (auto bad = check_module_axioms(*m)) throw Error("universe module " + m->descriptor() + ": " + *bad);
}

}  // namespace

Universe generate_universe(const UniverseLimits& limits, const RingHook& prepare) {
  if (limits.max_modulus < 2 || limits.max_module == 0 || limits.max_algebra == 0) {
    throw Error("universe caps must be positive");
  }
  Universe u;
  u.limits = limits;
  std::vector<RingSpec> specs;
  for (unsigned n = 2; n <= limits.max_modulus; ++n) specs.push_back(RingSpec::zmod(n));
  if (limits.include_products) {
    for (unsigned a = 2; a <= limits.max_factor; ++a)
      for (unsigned b = a; b <= limits.max_factor; ++b)
        specs.push_back(RingSpec::product(RingSpec::zmod(a), RingSpec::zmod(b)));
  }
  if (limits.include_poly_quotients) {
    for (unsigned p : {2u, 3u}) {
      specs.push_back(RingSpec::poly_quotient(p, {0, 0, 1}));
      specs.push_back(RingSpec::poly_quotient(p, {0, 0, 0, 1}));
    }
    specs.push_back(RingSpec::poly_quotient(4, {0, 0, 1}));
    specs.push_back(RingSpec::poly_quotient(4, {1, 1, 1}));
  }
  static const char* kKind[] = {"ring.Zmod", "ring.Prod", "ring.PolyQuot", "ring.Localize"};
  for (const auto& s : specs) {
    RingPtr r = make_ring(s);
    if (prepare) prepare(r);
    self_check(r);
    u.rings.push_back(r);
    ++u.counts[kKind[static_cast<int>(s.kind)]];
  }

  auto add_module = [&](std::size_t ring, ModulePtr m, const char* kind) {
    self_check(m);
    u.modules.push_back({ring, std::move(m)});
    ++u.counts[std::string("module.") + kind];
  };
  for (std::size_t i = 0; i < u.rings.size(); ++i) {
    const RingPtr& r = u.rings[i];
    add_module(i, regular_module(r), "Reg");
    if (r->size() * r->size() <= limits.max_module) {
      add_module(i, free_module(r, 2), "Free");
    } else {
      u.skipped.push_back("Free(2) over " + r->descriptor() + ": size cap");
    }
    std::vector<ModulePtr> cyclics;
    for (const auto& ideal : ideals_of(r)) {
      // R/(0) is Reg and R/R is the zero module.
      if (ideal.is_zero() || ideal.is_whole()) continue;
      auto c = cyclic_module(ideal);
      if (c->size() > limits.max_module) continue;
      cyclics.push_back(c);
      add_module(i, c, "Cyclic");
    }
    for (std::size_t a = 0; a < cyclics.size(); ++a)
      for (std::size_t b = a; b < cyclics.size(); ++b) {
        if (cyclics[a]->size() * cyclics[b]->size() > limits.max_module) {
          u.skipped.push_back("Sum(" + cyclics[a]->descriptor() + "," + cyclics[b]->descriptor() + ") over " +
                              r->descriptor() + ": size cap");
          continue;
        }
        add_module(i, direct_sum(cyclics[a], cyclics[b]), "Sum");
      }
    for (const auto& c : cyclics) {
      try {
        add_module(i, hom_module(c), "Hom");
      } catch (const BoundExceeded&) {
        u.skipped.push_back("Hom(" + c->descriptor() + ") over " + r->descriptor() + ": size cap");
      }
    }
  }

  auto add_algebra = [&](std::size_t ring, const RingPtr& b, const char* kind) {
    if (b->size() > limits.max_algebra) {
      u.skipped.push_back(b->descriptor() + " over " + u.rings[ring]->descriptor() + ": algebra size cap");
      return;
    }
    if (prepare && b != u.rings[ring]) prepare(b);
    self_check(b);
    u.algebras.push_back({ring, canonical_algebra(b, u.rings[ring])});
    ++u.counts[std::string("algebra.") + kind];
  };
  for (std::size_t i = 0; i < u.rings.size(); ++i) {
    add_algebra(i, u.rings[i], "self");
    if (specs[i].kind != RingKind::Localized && u.rings[i]->size() * u.rings[i]->size() <= limits.max_algebra) {
      add_algebra(i, make_ring(RingSpec::product(specs[i], specs[i])), "Prod");
    }
    if (specs[i].kind == RingKind::Modular) {
      const unsigned n = specs[i].modulus;
      if (static_cast<std::size_t>(n) * n > limits.max_algebra) continue;
      for (std::vector<unsigned> rel : {std::vector<unsigned>{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}) {
        add_algebra(i, make_ring(RingSpec::poly_quotient(n, rel)), "PolyQuot");
      }
    }
  }

  for (unsigned n = 2; n <= limits.max_integer_modulus; ++n) u.integer_moduli.push_back(n);
  u.counts["integer.Cyclic"] = u.integer_moduli.size();
  return u;
}

const std::vector<Statement>& registry() {
  static const std::vector<Statement> r = build_registry();
  return r;
}

std::vector<std::string> statement_ids() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.id);
  return out;
}

StatementReport run_statement(std::string_view id, const Universe& u, const Bounds& bounds) {
  for (const auto& s : registry()) {
    if (s.id != id) continue;
    StatementReport r = s.run(u, bounds);
    r.id = s.id;
    r.title = s.title;
    return r;
  }
  throw Error("unknown statement id '" + std::string(id) + "'");
}

bool glob_match(std::string_view p, std::string_view t) {
  if (p == "all") return true;
  // Iterative match with backtracking to the last '*'.
  std::size_t i = 0, j = 0, star = std::string_view::npos, mark = 0;
  while (j < t.size()) {
    if (i < p.size() && (p[i] == '?' || p[i] == t[j])) {
      ++i;
      ++j;
    } else if (i < p.size() && p[i] == '*') {
      star = i++;
      mark = j;
    } else if (star != std::string_view::npos) {
      i = star + 1;
      j = ++mark;
    } else {
      return false;
    }
  }
  while (i < p.size() && p[i] == '*') ++i;
  return i == p.size();
}

std::vector<std::string> select_statements(std::string_view pattern) {
  std::vector<std::string> out;
  for (const auto& id : statement_ids())
    if (glob_match(pattern, id)) out.push_back(id);
  return out;
}

std::vector<StatementReport> run_suite(std::string_view pattern, const Universe& u, const Bounds& bounds) {
  std::vector<StatementReport> out;
  for (const auto& id : select_statements(pattern)) out.push_back(run_statement(id, u, bounds));
  return out;
}

std::vector<WitnessRecord> content_observations(const Universe& u) {
  auto parts = parallel_map<std::optional<WitnessRecord>>(u.modules.size(), [&](std::size_t i) {
    const ModulePtr& m = u.modules[i].module;
    Verdict v = is_content_module(m);
    if (v.holds) return std::optional<WitnessRecord>{};
    return std::optional<WitnessRecord>{detail::record("content_module", m, v)};
  });
  std::vector<WitnessRecord> out;
  for (auto& p : parts)
    if (p) out.push_back(std::move(*p));
  return out;
}

unsigned worker_count() {
  unsigned n = g_workers.load();
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

void set_worker_count(unsigned n) { g_workers.store(n); }

}  // namespace zdlab::harness
