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

#include "zdlab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "harness_internal.hpp"
#include "report.hpp"
#include "zdlab/cache.hpp"
#include "zdlab/dsl.hpp"
#include "zdlab/localization.hpp"
#include "zdlab/zadapter.hpp"

namespace zdlab::cli {

namespace {

using report::Json;
using Clock = std::chrono::steady_clock;

struct Global {
  std::string format = "json";
  bool no_cache = false;
  std::string cache_dir;
  bool timing = false;
};

struct SuiteOptions {
  harness::Bounds bounds;
  harness::UniverseLimits limits;
  bool zero_excluded = false;
  unsigned workers = 0;
};

struct AnalyzeOptions {
  std::string ring;
  std::string module;
  std::string algebra;
  std::string check;
  std::vector<std::string> labels;
  unsigned precision = 8;
  unsigned degree = 2;
  bool zero_excluded = false;
};

struct WitnessOptions {
  std::string ring;
  std::string module = "Reg";
  std::string f;
  std::string g;
};

/// Raised for bad input; the message is printed as is and the exit is 2.
struct UsageError : Error {
  using Error::Error;
};

class Session {
 public:
  Session(const Global& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {
    if (g.no_cache) return;
    std::optional<std::filesystem::path> dir;
    if (!g.cache_dir.empty()) {
      dir = g.cache_dir;
    } else if (const char* env = std::getenv("ZDLAB_CACHE_DIR"); env && *env) {
      dir = env;
    }
    cache_ = std::make_unique<cache::LatticeCache>(dir, &err);
  }

  void prime(const RingPtr& r) {
    if (cache_) cache_->prime(r);
  }

  harness::RingHook hook() {
    if (!cache_) return {};
    return [this](const RingPtr& r) { cache_->prime(r); };
  }

  bool timing() const { return g_.timing; }

  int emit(const Json& doc, int status) {
    if (g_.format == "text") {
      out_ << report::render_text(doc);
    } else {
      out_ << doc.dump(2) << "\n";
    }
    return status;
  }

  std::ostream& err() { return err_; }

 private:
  const Global& g_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<cache::LatticeCache> cache_;
};

Json header(const char* command) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

double millis(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

// DSL parse with a caret diagnostic on failure.
template <class Parse>
dsl::Node parse_or_usage(const std::string& what, const std::string& text, Parse&& parse) {
  try {
    return parse(text);
  } catch (const dsl::DslError& e) {
    throw UsageError("invalid " + what + ":\n" + dsl::render_error(text, e));
  }
}

Json guarded(const std::function<Verdict()>& f) {
  try {
    return report::verdict(f());
  } catch (const BoundExceeded& e) {
    return Json{{"skipped", e.what()}};
  }
}

// ---------------------------------------------------------------------------
// analyze

Json ring_section(const RingPtr& r, const harness::Bounds& b) {
  const RingFlags flags = ring_predicates(r);
  Json j;
  j["descriptor"] = r->descriptor();
  j["size"] = r->size();
  j["zero_divisors"] = report::labels(*r, harness::detail::ring_zero_divisors(*r, b));
  j["units"] = report::labels(*r, units(*r));
  j["ideals"] = r->ideal_lattice().size();
  j["is_field"] = flags.is_field;
  j["is_domain"] = flags.is_domain;
  j["is_local"] = flags.is_local;
  return j;
}

Json module_predicates(const ModulePtr& m, const AnalyzeOptions& a, const harness::Bounds& b) {
  const ExtShape poly = ExtShape::polynomial(1);
  const ExtShape series = ExtShape::series(a.precision);
  Json p;
  p["auslander"] = guarded([&] { return harness::detail::auslander(m, b); });
  p["torsion_free"] = guarded([&] { return harness::detail::torsion_free(m, b); });
  p["property_a"] = guarded([&] { return has_property_A(m); });
  p["faithful"] = guarded([&] { return is_faithful(m); });
  p["flat"] = guarded([&] { return is_flat(m); });
  p["faithfully_flat"] = guarded([&] { return is_faithfully_flat(m); });
  p["content_module"] = guarded([&] { return is_content_module(m); });
  p["content_surjective"] = guarded([&] { return is_content_surjective(m); });
  p["polynomial_auslander"] = guarded([&] { return extension_auslander(m, poly); });
  p["polynomial_torsion_free"] = guarded([&] { return extension_torsion_free(m, poly); });
  p["series_auslander"] = guarded([&] { return extension_auslander(m, series); });
  p["series_torsion_free"] = guarded([&] { return extension_torsion_free(m, series); });
  return p;
}

Json integer_analysis(unsigned n, const harness::Bounds& b) {
  Json ring{{"descriptor", "ZZ"}, {"size", "infinite"}, {"is_domain", true}};
  ring["zero_divisors"] = b.zero_in_zero_divisors ? Json::array({"0"}) : Json::array();
  Json module{{"descriptor", harness::integer_member(n)}, {"size", n}};
  module["zero_divisor_rule"] = "k with gcd(k mod " + std::to_string(n) + ", " + std::to_string(n) + ") > 1";
  Json residues = Json::array();
  for (unsigned r : zz::zero_divisor_residues(n)) residues.push_back(std::to_string(r));
  module["zero_divisor_residues"] = residues;
  Json p;
  for (const auto& name : harness::vocabulary()) {
    if (name == "reg_module" || name == "free_module") continue;
    auto v = harness::evaluate_integer_predicate(name, n);
    p[name] = v ? report::verdict(*v) : Json{{"supported", false}};
  }
  return Json{{"ring", ring}, {"module", module}, {"predicates", p}};
}

Json run_check(const AnalyzeOptions& a, const std::string& ring, const std::string& subject, const Json& predicates,
               const harness::Bounds& b, bool& ok) {
  harness::WitnessRecord w;
  w.predicate = a.check;
  w.ring = ring;
  w.subject = subject;
  w.labels = a.labels;
  Json j{{"predicate", a.check}, {"labels", a.labels}};
  auto problem = harness::revalidate(w, b);
  j["valid"] = !problem;
  if (problem) j["problem"] = *problem;
  ok = !problem;
  if (predicates.contains(a.check)) {
    const Json& v = predicates[a.check];
    const bool agrees = v.contains("holds") && !v["holds"].get<bool>();
    j["verdict_agrees"] = agrees;
    ok = ok && agrees;
  }
  return j;
}

bool algebra_predicate(const std::string& p) { return p == "ohm_rush" || p == "mccoy_algebra"; }

int analyze(Session& s, const AnalyzeOptions& a) {
  if (a.module.empty() && a.algebra.empty()) throw UsageError("analyze needs --module or --algebra");
  if (!a.labels.empty() && a.check.empty()) throw UsageError("--label needs --check");
  harness::Bounds b;
  b.precision = a.precision;
  b.degree = a.degree;
  b.zero_in_zero_divisors = !a.zero_excluded;

  const dsl::Node ring_node = parse_or_usage("ring", a.ring, dsl::parse_ring);
  const std::string ring_text = dsl::print(ring_node);
  Json doc = header("analyze");
  Json input{{"ring", ring_text}};

  std::string subject;
  Json body;
  if (dsl::is_integers(ring_node)) {
    if (!a.algebra.empty()) throw UsageError("algebras over ZZ are not supported");
    const dsl::Node mn = parse_or_usage("module", a.module, dsl::parse_module);
    unsigned n = 0;
    try {
      n = dsl::integer_module_modulus(mn);
    } catch (const dsl::DslError& e) {
      throw UsageError("invalid module over ZZ:\n" + dsl::render_error(a.module, e));
    }
    subject = dsl::print(mn);
    input["module"] = subject;
    body = integer_analysis(n, b);
  } else {
    RingPtr ring;
    try {
      ring = dsl::build_ring(ring_node);
    } catch (const dsl::DslError& e) {
      throw UsageError("invalid ring:\n" + dsl::render_error(a.ring, e));
    }
    s.prime(ring);
    ModulePtr m;
    if (!a.module.empty()) {
      const dsl::Node mn = parse_or_usage("module", a.module, dsl::parse_module);
      try {
        m = dsl::build_module(mn, ring);
      } catch (const dsl::DslError& e) {
        throw UsageError("invalid module:\n" + dsl::render_error(a.module, e));
      }
      subject = dsl::print(mn);
      input["module"] = subject;
    }
    std::optional<FiniteAlgebra> alg;
    if (!a.algebra.empty()) {
      const dsl::Node an = parse_or_usage("algebra", a.algebra, dsl::parse_algebra);
      try {
        alg = dsl::build_algebra(an);
      } catch (const dsl::DslError& e) {
        throw UsageError("invalid algebra:\n" + dsl::render_error(a.algebra, e));
      }
      if (alg->base()->descriptor() != ring->descriptor()) {
        throw UsageError("algebra base " + alg->base()->descriptor() + " differs from --ring " + ring->descriptor());
      }
      input["algebra"] = alg->descriptor();
      if (algebra_predicate(a.check) || a.module.empty()) subject = alg->descriptor();
    }
    if (m) {
      if (m->ring() != ring) s.prime(m->ring());
      body["ring"] = ring_section(m->ring(), b);
      Json mj{{"descriptor", m->descriptor()}, {"ring", m->ring()->descriptor()}, {"size", m->size()}};
      mj["zero_divisors"] = report::labels(*m->ring(), harness::detail::module_zero_divisors(*m, b));
      mj["annihilator"] = ann_module(m).to_string();
      body["module"] = mj;
      body["predicates"] = module_predicates(m, a, b);
    } else {
      body["ring"] = ring_section(ring, b);
    }
    if (alg) {
      Json aj{{"descriptor", alg->descriptor()}, {"size", alg->algebra()->size()}};
      aj["projective"] = guarded([&] { return is_locally_free(alg->as_module()); });
      aj["faithfully_flat"] = guarded([&] { return is_faithfully_flat(alg->as_module()); });
      aj["ohm_rush"] = guarded([&] { return is_ohm_rush(*alg); });
      aj["mccoy_algebra"] = guarded([&] { return is_mccoy_algebra(*alg); });
      if (m) {
        try {
          ModulePtr tm = tensor_with_algebra(m, *alg);
          aj["tensor"] = Json{{"module", tm->descriptor()},
                              {"ring", tm->ring()->descriptor()},
                              {"size", tm->size()},
                              {"auslander", report::verdict(harness::detail::auslander(tm, b))},
                              {"torsion_free", report::verdict(harness::detail::torsion_free(tm, b))}};
        } catch (const BoundExceeded& e) {
          aj["tensor"] = Json{{"skipped", e.what()}};
        }
      }
      body["algebra"] = aj;
    }
  }

  doc["input"] = input;
  doc["bounds"] = Json{{"precision", b.precision}, {"degree", b.degree}, {"zero_in_zero_divisors", b.zero_in_zero_divisors}};
  for (const auto& [k, v] : body.items()) doc[k] = v;

  int status = kOk;
  if (!a.check.empty()) {
    Json predicates = doc.value("predicates", Json::object());
    if (doc.contains("algebra")) {
      for (const char* k : {"ohm_rush", "mccoy_algebra"}) predicates[k] = doc["algebra"][k];
    }
    bool ok = false;
    doc["check"] = run_check(a, ring_text, subject, predicates, b, ok);
    if (!ok) status = kSuiteFailure;
  }
  return s.emit(doc, status);
}

// ---------------------------------------------------------------------------
// theorems, search

harness::Bounds effective(const SuiteOptions& o) {
  harness::Bounds b = o.bounds;
  b.zero_in_zero_divisors = !o.zero_excluded;
  if (o.workers > 0) harness::set_worker_count(o.workers);
  return b;
}

int theorems(Session& s, const SuiteOptions& o, const std::string& suite) {
  const auto ids = harness::select_statements(suite);
  if (ids.empty()) throw UsageError("no statement matches '" + suite + "'");
  const harness::Bounds b = effective(o);
  const auto t0 = Clock::now();
  const harness::Universe u = harness::generate_universe(o.limits, s.hook());
  const auto t1 = Clock::now();

  Json doc = header("theorems");
  doc["input"] = Json{{"suite", suite}};
  doc["bounds"] = report::bounds(b);
  doc["universe"] = report::universe(u);
  Json statements = Json::array();
  std::size_t passed = 0, failed = 0, vacuous = 0;
  for (const auto& id : ids) {
    const auto a = Clock::now();
    const auto r = harness::run_statement(id, u, b);
    Json j = report::statement(r);
    if (s.timing()) j["time_ms"] = millis(a, Clock::now());
    const std::string st = report::status(r);
    (st == "pass" ? passed : st == "fail" ? failed : vacuous)++;
    statements.push_back(std::move(j));
  }
  doc["statements"] = std::move(statements);
  Json obs = Json::array();
  for (const auto& w : harness::content_observations(u)) obs.push_back(report::witness_record(w));
  doc["observations"] = Json{{"non_content_modules", std::move(obs)}};
  doc["summary"] = Json{{"statements", ids.size()}, {"passed", passed}, {"failed", failed}, {"vacuous", vacuous}};
  if (s.timing()) doc["timing"] = Json{{"universe_ms", millis(t0, t1)}, {"total_ms", millis(t0, Clock::now())}};
  return s.emit(doc, failed > 0 ? kSuiteFailure : kOk);
}

int search(Session& s, const SuiteOptions& o, const std::string& hyp_text, const std::string& concl_text) {
  harness::Expr hyp, concl;
  try {
    hyp = harness::Expr::parse(hyp_text);
    concl = harness::Expr::parse(concl_text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const harness::Bounds b = effective(o);
  const harness::Universe u = harness::generate_universe(o.limits, s.hook());
  const auto r = harness::search_counterexample(hyp, concl, u, b);
  Json doc = header("search");
  doc["input"] = Json{{"hypothesis", hyp.text()}, {"conclusion", concl.text()}};
  doc["bounds"] = report::bounds(b);
  doc["universe"] = report::universe(u);
  doc["members"] = r.members;
  doc["hypothesis_holds"] = r.hypothesis_holds;
  doc["unsupported"] = r.unsupported;
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json hj{{"ring", h.ring}, {"module", h.module}, {"witnesses", Json::array()}};
    for (const auto& w : h.witnesses) hj["witnesses"].push_back(report::witness_record(w));
    hits.push_back(std::move(hj));
  }
  doc["counterexamples"] = hits.size();
  doc["hits"] = std::move(hits);
  return s.emit(doc, kOk);
}

// ---------------------------------------------------------------------------
// witness

int witness(Session& s, const WitnessOptions& o) {
  const dsl::Node ring_node = parse_or_usage("ring", o.ring, dsl::parse_ring);
  if (dsl::is_integers(ring_node)) throw UsageError("witness needs a finite ring");
  RingPtr ring;
  ModulePtr m;
  try {
    ring = dsl::build_ring(ring_node);
    s.prime(ring);
    m = dsl::build_module(parse_or_usage("module", o.module, dsl::parse_module), ring);
  } catch (const dsl::DslError& e) {
    throw UsageError(std::string("invalid input: ") + e.what());
  }
  std::optional<ExtElement> f, g;
  try {
    f = parse_ext(o.f, m->ring());
    g = parse_ext(o.g, m, f->shape());
    // A bivariate g forces the bivariate shape on f as well.
    if (g->shape() != f->shape()) {
      f = parse_ext(o.f, m->ring(), g->shape());
      g = parse_ext(o.g, m, f->shape());
    }
  } catch (const Error& e) {
    throw UsageError(std::string("invalid polynomial: ") + e.what());
  }
  McCoyResult res;
  try {
    res = mccoy_witness(*f, *g);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Json doc = header("witness");
  doc["input"] = Json{{"ring", dsl::print(ring_node)}, {"module", m->descriptor()}, {"f", o.f}, {"g", o.g}};
  doc["f"] = f->to_string();
  doc["g"] = g->to_string();
  doc["content_f"] = ideal_from_elements(m->ring(), content_ideal(*f).elements()).to_string();
  doc["m"] = m->label(res.element);
  doc["k"] = res.k;
  harness::WitnessRecord w{"mccoy_witness", dsl::print(ring_node), m->descriptor(), WitnessKind::Polynomial,
                           {f->to_string(), g->to_string(), m->label(res.element)}, true};
  auto problem = harness::revalidate(w);
  doc["valid"] = !problem;
  if (problem) doc["problem"] = *problem;
  return s.emit(doc, problem ? kSuiteFailure : kOk);
}

void add_suite_options(CLI::App* cmd, SuiteOptions& o) {
  cmd->add_option("--degree", o.bounds.degree, "degree bound for brute-force cross-checks")->check(CLI::Range(0u, 4u));
  cmd->add_option("--precision", o.bounds.precision, "power series truncation")->check(CLI::Range(1u, 64u));
  cmd->add_option("--variables", o.bounds.variables, "polynomial variables (1 or 2)")->check(CLI::Range(1u, 2u));
  cmd->add_option("--cross-ring", o.bounds.cross_ring, "cross-check rings up to this size");
  cmd->add_option("--cross-module", o.bounds.cross_module, "cross-check modules up to this size");
  cmd->add_option("--mccoy-ring", o.bounds.mccoy_ring, "McCoy sweep over rings up to this size");
  cmd->add_option("--max-modulus", o.limits.max_modulus, "Z<n> for n up to this")->check(CLI::Range(2u, 64u));
  cmd->add_option("--max-factor", o.limits.max_factor, "product factors Z<n> up to this")->check(CLI::Range(2u, 16u));
  cmd->add_option("--max-module", o.limits.max_module, "largest universe module")->check(CLI::Range(1u, 1024u));
  cmd->add_option("--max-algebra", o.limits.max_algebra, "largest universe algebra")->check(CLI::Range(1u, 1024u));
  cmd->add_option("--max-integer-modulus", o.limits.max_integer_modulus, "integer members Z/n up to this")
      ->check(CLI::Range(0u, 1000u));
  cmd->add_flag("!--no-products", o.limits.include_products, "leave out product rings");
  cmd->add_flag("!--no-poly-quotients", o.limits.include_poly_quotients, "leave out polynomial quotients");
  cmd->add_flag("--zero-excluded", o.zero_excluded, "do not count 0 as a zero-divisor");
  cmd->add_option("--workers", o.workers, "worker threads (0: hardware)");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite commutative rings and modules: zero-divisor predicates and exhaustive checks", "zdlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-cache", g.no_cache, "do not read or write the lattice cache");
  app.add_option("--cache-dir", g.cache_dir, "cache directory (default: $ZDLAB_CACHE_DIR)");
  app.add_flag("--timing", g.timing, "add timings to the report");

  AnalyzeOptions a;
  auto* analyze_cmd = app.add_subcommand("analyze", "every predicate on one module");
  analyze_cmd->add_option("--ring", a.ring, "ring DSL")->required();
  analyze_cmd->add_option("--module", a.module, "module DSL");
  analyze_cmd->add_option("--algebra", a.algebra, "algebra DSL, Algebra(B,R,incl)");
  analyze_cmd->add_option("--check", a.check, "re-check a witness for this predicate");
  analyze_cmd->add_option("--label", a.labels, "witness label (repeatable)");
  analyze_cmd->add_option("--precision", a.precision, "power series truncation")->check(CLI::Range(1u, 64u));
  analyze_cmd->add_option("--degree", a.degree, "brute-force degree used by --check")->check(CLI::Range(0u, 4u));
  analyze_cmd->add_flag("--zero-excluded", a.zero_excluded, "do not count 0 as a zero-divisor");

  SuiteOptions theorem_opts;
  std::string suite = "all";
  auto* theorems_cmd = app.add_subcommand("theorems", "run statement suites over the universe");
  theorems_cmd->add_option("--suite", suite, "statement id glob, or 'all'");
  add_suite_options(theorems_cmd, theorem_opts);

  SuiteOptions search_opts;
  std::string hyp, concl;
  auto* search_cmd = app.add_subcommand("search", "members satisfying --hyp but not --concl");
  search_cmd->add_option("--hyp", hyp, "hypothesis expression")->required();
  search_cmd->add_option("--concl", concl, "conclusion expression")->required();
  add_suite_options(search_cmd, search_opts);

  WitnessOptions w;
  auto* witness_cmd = app.add_subcommand("witness", "constant annihilator from f g = 0");
  witness_cmd->add_option("--ring", w.ring, "ring DSL")->required();
  witness_cmd->add_option("--module", w.module, "module DSL (default Reg)");
  witness_cmd->add_option("--f", w.f, "polynomial over R")->required();
  witness_cmd->add_option("--g", w.g, "nonzero polynomial over M")->required();

  std::vector<std::string> argv_store = args.empty() ? std::vector<std::string>{"zdlab"} : args;
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  Session session(g, out, err);
  try {
    if (analyze_cmd->parsed()) return analyze(session, a);
    if (theorems_cmd->parsed()) return theorems(session, theorem_opts, suite);
    if (search_cmd->parsed()) return search(session, search_opts, hyp, concl);
    return witness(session, w);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    err << "error: size cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace zdlab::cli
