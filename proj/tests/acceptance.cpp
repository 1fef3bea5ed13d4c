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

// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time limit.
// Exit status is 0 only when every criterion passes within its limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zdlab/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zdlab");
  std::ostringstream out, err;
  const int status = zdlab::cli::run_command(args, out, err);
  return {status, out.str(), err.str()};
}

json parse(const Run& r) { return json::parse(r.out); }

// Result of a criterion body: empty string means success, otherwise the reason.
using Body = std::function<std::string()>;

json statement(const std::string& id) {
  const Run r = run({"--no-cache", "theorems", "--suite", id});
  const json d = parse(r);
  if (d["statements"].size() != 1) throw std::runtime_error("expected one statement for " + id);
  return d["statements"][0];
}

bool log_contains(const json& s, const std::string& needle) {
  for (const auto& line : s["log"])
    if (line.get<std::string>().find(needle) != std::string::npos) return true;
  return false;
}

std::string expect_pass(const json& s, std::size_t min_applicable = 1) {
  if (s["status"] != "pass") return s["id"].get<std::string>() + " status " + s["status"].get<std::string>();
  if (!s["failures"].empty()) return s["id"].get<std::string>() + " has failures";
  if (s["applicable"].get<std::size_t>() < min_applicable)
    return s["id"].get<std::string>() + " applicable " + s["applicable"].dump();
  return {};
}

std::string c1() {
  const Run r = run({"--no-cache", "analyze", "--ring", "Prod(Z2,Z2)", "--module", "Cyclic((0,1))"});
  if (r.status != 0) return "exit " + std::to_string(r.status);
  const json d = parse(r);
  if (d["ring"]["zero_divisors"] != json({"(0,0)", "(1,0)", "(0,1)"})) return "Z(R) " + d["ring"]["zero_divisors"].dump();
  if (d["module"]["zero_divisors"] != json({"(0,0)", "(0,1)"})) return "Z(M) " + d["module"]["zero_divisors"].dump();
  const json& p = d["predicates"];
  if (p["torsion_free"]["holds"] != true) return "torsion_free not true";
  if (p["auslander"]["holds"] != false) return "auslander not false";
  if (p["auslander"]["witness"]["labels"] != json({"(1,0)"})) return "witness " + p["auslander"]["witness"].dump();
  return {};
}

std::string c2() {
  for (int n = 2; n <= 30; ++n) {
    const Run r = run({"--no-cache", "analyze", "--ring", "ZZ", "--module", "Cyclic(" + std::to_string(n) + ")"});
    if (r.status != 0) return "exit " + std::to_string(r.status) + " for n = " + std::to_string(n);
    const json p = parse(r)["predicates"];
    if (p["auslander"]["holds"] != true || p["torsion_free"]["holds"] != false) return "wrong verdict for n = " + std::to_string(n);
  }
  return {};
}

std::string c3() { return expect_pass(statement("property-a.finite-modules"), 60); }

std::string c4() {
  const json a = statement("auslander.monoid-ring");
  if (auto e = expect_pass(a); !e.empty()) return e;
  if (!log_contains(a, "(|R| <= 6, |M| <= 8, degree <= 2)")) return "cross-check bounds not logged";
  return expect_pass(statement("torsion-free.monoid-ring"));
}

std::string c5() {
  const json s = statement("mccoy.witness");
  if (auto e = expect_pass(s); !e.empty()) return e;
  const Run r = run({"--no-cache", "theorems", "--suite", "mccoy.witness"});
  const json b = parse(r)["bounds"];
  if (b["mccoy_ring"] != 8 || b["degree"] != 2) return "bounds " + b.dump();
  return {};
}

std::string c6() {
  const json s = statement("auslander.localization");
  if (auto e = expect_pass(s); !e.empty()) return e;
  if (!log_contains(s, "hypothesis-excluded probe: Cyclic((1,0)) over Prod(Z2,Z2)")) return "Prod(Z2,Z2) probe missing";
  if (!log_contains(s, "acts regularly on M")) return "probe does not record the regular zero-divisor";
  return {};
}

std::string c7() { return expect_pass(statement("torsion-free.characterization")); }

std::string c8() {
  const json s = statement("algebra.mccoy-calibration");
  if (auto e = expect_pass(s); !e.empty()) return e;
  if (!log_contains(s, "witness pair ((1,0),(0,1))")) return "witness pair not logged";
  const Run r = run({"--no-cache", "analyze", "--ring", "Z2", "--algebra", "Algebra(Prod(Z2,Z2),Z2,incl)"});
  const json v = parse(r)["algebra"]["mccoy_algebra"];
  if (v["holds"] != false || v["witness"]["labels"] != json({"(1,0)", "(0,1)"})) return "analyze verdict " + v.dump();
  return {};
}

std::string c9() {
  std::size_t nontrivial = 0;
  for (const char* id : {"auslander.mccoy-algebra", "tf-auslander.mccoy-algebra"}) {
    const json s = statement(id);
    if (auto e = expect_pass(s); !e.empty()) return e;
    for (const auto& line : s["log"])
      if (line.get<std::string>().rfind("non-trivial instance:", 0) == 0) ++nontrivial;
  }
  if (nontrivial < 3) return "only " + std::to_string(nontrivial) + " non-trivial instances";
  return {};
}

std::vector<std::string> check_args(const json& w, const json& bounds) {
  std::vector<std::string> args{"--no-cache", "analyze", "--ring", w["ring"].get<std::string>()};
  const std::string pred = w["predicate"].get<std::string>();
  if (pred == "mccoy_algebra" || pred == "ohm_rush") {
    args.insert(args.end(), {"--algebra", w["subject"].get<std::string>()});
  } else {
    args.insert(args.end(), {"--module", w["subject"].get<std::string>()});
  }
  args.insert(args.end(), {"--check", pred, "--precision", bounds["precision"].dump(), "--degree", bounds["degree"].dump()});
  for (const auto& l : w["labels"]) args.insert(args.end(), {"--label", l.get<std::string>()});
  return args;
}

std::string c10() {
  const Run first = run({"--no-cache", "theorems"});
  const Run second = run({"--no-cache", "theorems"});
  if (first.status != 0) return "suite exit " + std::to_string(first.status);
  if (first.out != second.out) return "reports differ between runs";
  const json d = parse(first);
  std::vector<json> witnesses;
  for (const auto& s : d["statements"]) {
    for (const auto& w : s["witnesses"]) witnesses.push_back(w);
    for (const auto& f : s["failures"])
      for (const auto& w : f["witnesses"]) witnesses.push_back(w);
  }
  for (const auto& w : d["observations"]["non_content_modules"]) witnesses.push_back(w);
  std::set<std::vector<std::string>> seen;
  std::size_t checked = 0;
  for (const auto& w : witnesses) {
    const auto args = check_args(w, d["bounds"]);
    if (!seen.insert(args).second) continue;
    const Run r = run(args);
    if (r.status != 0) return "witness rejected: " + w.dump() + "\n" + r.out + r.err;
    ++checked;
  }
  if (checked == 0) return "no witnesses emitted";
  std::cout << "  " << checked << " distinct witnesses re-validated\n";
  return {};
}

struct Criterion {
  int number;
  std::string what;
  double limit_s;
  Body body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Prod(Z2,Z2) torsion-free module that is not Auslander", 1, c1},
      {2, "ZZ-modules Z/n, 2 <= n <= 30: Auslander, not torsion-free", 1, c2},
      {3, "property (A) on every universe pair (>= 60)", 120, c3},
      {4, "polynomial extension both directions plus criterion vs brute force", 600, c4},
      {5, "McCoy witness for every zero product f*g, degrees <= 2, |R| <= 8", 300, c5},
      {6, "localization at sets avoiding Z(M), with the Prod(Z2,Z2) probe logged", 300, c6},
      {7, "natural-map kernel zero iff Z(M) inside Z(R)", 60, c7},
      {8, "McCoy algebra calibration", 60, c8},
      {9, "base change along faithfully flat McCoy algebras, >= 3 non-trivial", 600, c9},
      {10, "byte-identical reports and witness re-validation", 900, c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && secs > c.limit_s) problem = "time limit exceeded";
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (problem.empty() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.what << " (" << secs
         << " s, limit " << c.limit_s << " s)";
    if (!problem.empty()) line << " - " << problem;
    std::cout << line.str() << std::endl;
    if (!problem.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
