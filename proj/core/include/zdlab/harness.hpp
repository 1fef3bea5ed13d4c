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

#pragma once

// Exhaustive checks over a universe of small rings, modules and algebras.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdlab/algebra.hpp"
#include "zdlab/ext.hpp"
#include "zdlab/module.hpp"
#include "zdlab/predicates.hpp"
#include "zdlab/ring.hpp"

namespace zdlab::harness {

struct UniverseLimits {
  /// Z<n> for 2 <= n <= max_modulus.
  unsigned max_modulus = 12;
  /// Prod(Za,Zb) for 2 <= a <= b <= max_factor.
  unsigned max_factor = 4;
  bool include_products = true;
  bool include_poly_quotients = true;
  std::size_t max_module = 64;
  /// Algebras B over R are kept when |B| <= max_algebra.
  std::size_t max_algebra = 64;
  /// Integer adapter members Z/n for 2 <= n <= max_integer_modulus (0: none).
  unsigned max_integer_modulus = 30;
};

struct UniverseModule {
  std::size_t ring;
  ModulePtr module;
};

struct UniverseAlgebra {
  std::size_t ring;
  FiniteAlgebra algebra;
};

struct Universe {
  UniverseLimits limits;
  std::vector<RingPtr> rings;
  std::vector<UniverseModule> modules;
  std::vector<UniverseAlgebra> algebras;
  /// Moduli n of the integer adapter members Z/n over ZZ.
  std::vector<unsigned> integer_moduli;
  /// Members per construction kind, e.g. "ring.Prod" or "module.Hom".
  std::map<std::string, std::size_t> counts;
  /// Constructions dropped by a cap, with the reason.
  std::vector<std::string> skipped;
};

/// Called on every ring (and algebra ring) right after it is built, before
/// any ideal lattice is computed. The CLI uses it to seed cached lattices.
using RingHook = std::function<void(const RingPtr&)>;

/// Deterministic: same limits, same universe in the same order. Every member
/// passes the axiom self-checks (throws Error otherwise).
Universe generate_universe(const UniverseLimits& limits = {}, const RingHook& prepare = {});

struct Bounds {
  /// Degree bound for brute-force cross-checks on polynomial extensions.
  unsigned degree = 2;
  unsigned precision = 8;
  /// Polynomial extensions are checked in 1 and in up to this many variables.
  unsigned variables = 2;
  /// Brute-force cross-checks run over |R| <= this and |M| <= cross_module.
  std::size_t cross_ring = 6;
  std::size_t cross_module = 8;
  /// The McCoy witness sweep runs over rings with |R| <= this.
  std::size_t mccoy_ring = 8;
  /// When false, 0 is left out of Z(R) and Z(M).
  bool zero_in_zero_divisors = true;
};

/// A re-checkable claim about one structure, in DSL form.
struct WitnessRecord {
  /// Predicate whose verdict the witness supports, e.g. "auslander".
  std::string predicate;
  std::string ring;
  /// Module DSL, or the algebra DSL for algebra predicates.
  std::string subject;
  WitnessKind kind = WitnessKind::RingElement;
  std::vector<std::string> labels;
  /// Verdict the witness certifies (normally false).
  bool holds = false;
};

/// Rebuilds the structure from the DSL and re-checks the witness against
/// the definition. Returns an explanation when it does not re-validate.
std::optional<std::string> revalidate(const WitnessRecord& w, const Bounds& bounds = {});

struct Failure {
  std::string ring;
  std::string subject;
  std::string detail;
  std::vector<WitnessRecord> witnesses;
};

struct StatementReport {
  std::string id;
  std::string title;
  std::size_t evaluated = 0;
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::vector<Failure> failures;
  /// Instances worth listing (non-trivial algebras, probes, examples).
  std::vector<std::string> log;
  std::vector<std::string> notes;
  std::vector<WitnessRecord> witnesses;
  bool zero_applicable_warning() const { return applicable == 0; }
  bool ok() const { return failures.empty() && applicable > 0; }
};

struct Statement {
  std::string id;
  std::string title;
  std::function<StatementReport(const Universe&, const Bounds&)> run;
};

const std::vector<Statement>& registry();

/// Ids in registry order.
std::vector<std::string> statement_ids();

/// Throws Error for an unknown id.
StatementReport run_statement(std::string_view id, const Universe& u, const Bounds& bounds = {});

/// Shell-style glob with '*' and '?'; "all" selects everything.
bool glob_match(std::string_view pattern, std::string_view text);
std::vector<std::string> select_statements(std::string_view pattern);

std::vector<StatementReport> run_suite(std::string_view pattern, const Universe& u, const Bounds& bounds = {});

/// Universe modules that are not content modules. Nothing claims they
/// should be; they are reported as observations.
std::vector<WitnessRecord> content_observations(const Universe& u);

/// Z-adapter member Z/n over the integers, as DSL text.
inline std::string integer_member(unsigned n) { return "Cyclic(" + std::to_string(n) + ")"; }

// Predicate vocabulary for counterexample search.

/// torsion_free, auslander, property_a, flat, faithfully_flat,
/// content_module, faithful, reg_module, free_module.
const std::vector<std::string>& vocabulary();

/// Boolean expression over the vocabulary with !, &, | and parentheses.
class Expr {
 public:
  /// Throws Error on a syntax error or an unknown predicate.
  static Expr parse(std::string_view text);
  const std::string& text() const { return text_; }
  /// Predicates mentioned, in order of appearance.
  std::vector<std::string> atoms() const;
  bool eval(const std::function<bool(const std::string&)>& atom) const;

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

struct SearchHit {
  std::string ring;
  std::string module;
  /// Witnesses for the conclusion atoms that fail.
  std::vector<WitnessRecord> witnesses;
};

struct SearchResult {
  std::size_t members = 0;
  std::size_t hypothesis_holds = 0;
  std::vector<SearchHit> hits;
  /// Members skipped because a predicate does not apply to them.
  std::size_t unsupported = 0;
};

/// All universe members (including integer adapter members) with
/// hyp and not concl.
SearchResult search_counterexample(const Expr& hyp, const Expr& concl, const Universe& u,
                                   const Bounds& bounds = {});

/// Predicate verdict on a finite module, by vocabulary name.
Verdict evaluate_predicate(const std::string& name, const ModulePtr& m, const Bounds& bounds = {});
/// Same for the integer adapter module Z/n. Nullopt when unsupported.
std::optional<Verdict> evaluate_integer_predicate(const std::string& name, unsigned n);

/// Order-preserving parallel map over [0, count).
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& f);

/// Number of worker threads used by parallel_map (at least 1).
unsigned worker_count();
void set_worker_count(unsigned n);

}  // namespace zdlab::harness

#include "zdlab/detail/parallel.hpp"
