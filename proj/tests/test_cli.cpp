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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zdlab/cache.hpp"
#include "zdlab/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zdlab");
  std::ostringstream out, err;
  const int status = zdlab::cli::run_command(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("zdlab-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("analyze the product-of-fields example") {
  const Run r = run({"--no-cache", "analyze", "--ring", "Prod(Z2,Z2)", "--module", "Cyclic((0,1))"});
  REQUIRE(r.status == 0);
  const json d = r.doc();
  CHECK(d["schema_version"] == zdlab::cli::kSchemaVersion);
  CHECK(d["ring"]["zero_divisors"] == json({"(0,0)", "(1,0)", "(0,1)"}));
  CHECK(d["module"]["zero_divisors"] == json({"(0,0)", "(0,1)"}));
  CHECK(d["predicates"]["torsion_free"]["holds"] == true);
  CHECK(d["predicates"]["auslander"]["holds"] == false);
  CHECK(d["predicates"]["auslander"]["witness"]["labels"] == json({"(1,0)"}));
  CHECK_FALSE(d.contains("timing"));
}

TEST_CASE("analyze over the integers") {
  for (int n = 2; n <= 30; ++n) {
    const Run r = run({"--no-cache", "analyze", "--ring", "ZZ", "--module", "Cyclic(" + std::to_string(n) + ")"});
    REQUIRE(r.status == 0);
    const json d = r.doc();
    CHECK(d["predicates"]["auslander"]["holds"] == true);
    CHECK(d["predicates"]["torsion_free"]["holds"] == false);
  }
  CHECK(run({"analyze", "--ring", "ZZ", "--module", "Reg"}).status == 2);
  CHECK(run({"analyze", "--ring", "ZZ", "--module", "Cyclic(0)"}).status == 2);
}

TEST_CASE("witness command") {
  const Run r = run({"--no-cache", "witness", "--f", "2*X+2", "--g", "2", "--ring", "Z4"});
  REQUIRE(r.status == 0);
  const json d = r.doc();
  CHECK(d["m"] == "2");
  CHECK(d["k"] == 1);
  CHECK(d["valid"] == true);
  CHECK(run({"witness", "--f", "X+1", "--g", "2", "--ring", "Z4"}).status == 2);
  CHECK(run({"witness", "--f", "2*X", "--g", "0", "--ring", "Z4"}).status == 2);
  CHECK(run({"witness", "--f", "2*X", "--g", "2", "--ring", "ZZ"}).status == 2);
  const Run two = run({"--no-cache", "witness", "--f", "2*X1+2*X2", "--g", "2", "--ring", "Z4"});
  CHECK(two.status == 0);
}

TEST_CASE("exit codes for usage errors") {
  CHECK(run({}).status == 2);
  CHECK(run({"analyze"}).status == 2);
  CHECK(run({"analyze", "--ring", "Z4"}).status == 2);
  CHECK(run({"analyze", "--ring", "Z4", "--module", "Reg", "--bogus"}).status == 2);
  CHECK(run({"--format", "xml", "analyze", "--ring", "Z4", "--module", "Reg"}).status == 2);
  CHECK(run({"theorems", "--suite", "nothing.here"}).status == 2);
  CHECK(run({"search", "--hyp", "flat &", "--concl", "auslander"}).status == 2);
  CHECK(run({"--help"}).status == 0);
  CHECK(run({"analyze", "--help"}).out.find("--ring") != std::string::npos);
}

TEST_CASE("DSL errors are shown with a caret") {
  const Run r = run({"analyze", "--ring", "Prod(Z2,Z", "--module", "Reg"});
  CHECK(r.status == 2);
  CHECK(r.err.find("Prod(Z2,Z\n") != std::string::npos);
  CHECK(r.err.find("^") != std::string::npos);
  CHECK(r.out.empty());
  const Run m = run({"analyze", "--ring", "PolyQuot(Z2, 2*x^2+1)", "--module", "Reg"});
  CHECK(m.status == 2);
  CHECK(m.err.find("monic") != std::string::npos);
}

TEST_CASE("witness checks through analyze") {
  const std::vector<std::string> base{"--no-cache", "analyze", "--ring", "Prod(Z2,Z2)", "--module", "Cyclic((0,1))"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
  };
  const Run good = with({"--check", "auslander", "--label", "(1,0)"});
  CHECK(good.status == 0);
  CHECK(good.doc()["check"]["valid"] == true);
  const Run bad = with({"--check", "auslander", "--label", "(1,1)"});
  CHECK(bad.status == 1);
  CHECK(bad.doc()["check"]["valid"] == false);
  // A valid-looking witness for a predicate that holds is still refused.
  CHECK(with({"--check", "torsion_free", "--label", "(1,0)"}).status == 1);
  CHECK(with({"--label", "(1,0)"}).status == 2);

  const Run alg = run({"--no-cache", "analyze", "--ring", "Z2", "--algebra", "Algebra(Prod(Z2,Z2),Z2,incl)", "--check",
                       "mccoy_algebra", "--label", "(1,0)", "--label", "(0,1)"});
  CHECK(alg.status == 0);
  CHECK(alg.doc()["algebra"]["mccoy_algebra"]["holds"] == false);
  CHECK(run({"analyze", "--ring", "Z3", "--algebra", "Algebra(Prod(Z2,Z2),Z2,incl)"}).status == 2);
}

TEST_CASE("text rendering is derived from the report") {
  const Run r = run({"--no-cache", "--format", "text", "analyze", "--ring", "Z6", "--module", "Cyclic(3)"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("schema_version: 1") == 0);
  CHECK(r.out.find("  auslander:\n    holds: false\n") != std::string::npos);
  CHECK(r.out.find("zero_divisors: 0, 2, 3, 4") != std::string::npos);
}

TEST_CASE("theorems and search") {
  const Run t = run({"--no-cache", "theorems", "--suite", "examples.*"});
  REQUIRE(t.status == 0);
  const json d = t.doc();
  CHECK(d["summary"]["statements"] == 3);
  CHECK(d["summary"]["passed"] == 3);
  CHECK(d["statements"][0]["status"] == "pass");
  CHECK_FALSE(d["statements"][0].contains("time_ms"));

  const Run timed = run({"--no-cache", "--timing", "theorems", "--suite", "examples.domain-quotient"});
  CHECK(timed.doc()["statements"][0].contains("time_ms"));

  const Run s = run({"--no-cache", "search", "--hyp", "torsion_free", "--concl", "auslander"});
  REQUIRE(s.status == 0);
  bool found = false;
  const json hits = s.doc()["hits"];
  for (const auto& h : hits)
    found = found || (h["ring"].get<std::string>() == "Prod(Z2,Z2)" && h["module"].get<std::string>() == "Cyclic((0,1))");
  CHECK(found);

  const Run small = run({"--no-cache", "theorems", "--suite", "property-a.*", "--max-modulus", "4", "--no-products",
                         "--no-poly-quotients", "--max-integer-modulus", "0"});
  CHECK(small.status == 0);
  CHECK(small.doc()["universe"]["rings"].size() == 3);
}

TEST_CASE("reports are identical with the cache on, off, warm and corrupted") {
  const fs::path dir = fresh_dir("cache");
  const std::vector<std::string> cmd{"theorems", "--suite", "torsion-free.characterization"};
  auto with_cache = [&] {
    std::vector<std::string> args{"--cache-dir", dir.string()};
    args.insert(args.end(), cmd.begin(), cmd.end());
    return run(args);
  };
  std::vector<std::string> off{"--no-cache"};
  off.insert(off.end(), cmd.begin(), cmd.end());

  const Run cold = with_cache();
  REQUIRE(cold.status == 0);
  CHECK(cold.err.empty());
  const std::size_t entries = std::distance(fs::directory_iterator(dir), fs::directory_iterator{});
  CHECK(entries > 10);
  const Run warm = with_cache();
  const Run none = run(off);
  CHECK(warm.out == cold.out);
  CHECK(none.out == cold.out);

  // Flip one element index inside the Z12 entry; the digest no longer matches.
  const fs::path z12 = dir / zdlab::cache::LatticeCache::file_name("Z12");
  REQUIRE(fs::exists(z12));
  std::string text;
  {
    std::ifstream in(z12);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto at = text.find("\n2 0 6\n");
  REQUIRE(at != std::string::npos);
  text[at + 5] = '4';
  std::ofstream(z12) << text;
  const Run corrupted = with_cache();
  CHECK(corrupted.out == cold.out);
  CHECK(corrupted.err.find("corrupt or stale") != std::string::npos);
  CHECK(with_cache().err.empty());

  // Truncated entries are treated the same way.
  std::ofstream(z12) << "zdlab-lattice 1\n";
  CHECK(with_cache().out == cold.out);
  fs::remove_all(dir);
}

TEST_CASE("the cache directory comes from the environment") {
  const fs::path dir = fresh_dir("env");
  ::setenv("ZDLAB_CACHE_DIR", dir.string().c_str(), 1);
  const Run r = run({"analyze", "--ring", "Z12", "--module", "Reg"});
  ::unsetenv("ZDLAB_CACHE_DIR");
  CHECK(r.status == 0);
  CHECK(fs::exists(dir / zdlab::cache::LatticeCache::file_name("Z12")));
  fs::remove_all(dir);
}

TEST_CASE("an unusable cache directory falls back to memory") {
  const fs::path file = fresh_dir("file");
  std::ofstream(file) << "not a directory";
  const Run r = run({"--cache-dir", (file / "sub").string(), "analyze", "--ring", "Z6", "--module", "Reg"});
  CHECK(r.status == 0);
  CHECK(r.err.find("in memory") != std::string::npos);
  fs::remove(file);
}

TEST_CASE("cache entries round-trip") {
  auto r = zdlab::make_zmod(12);
  const auto text = zdlab::cache::encode_entry(*r, r->ideal_lattice());
  const auto back = zdlab::cache::decode_entry(*r, text);
  REQUIRE(back.has_value());
  CHECK(*back == r->ideal_lattice());
  CHECK_FALSE(zdlab::cache::decode_entry(*zdlab::make_zmod(6), text).has_value());
  CHECK_FALSE(zdlab::cache::decode_entry(*r, text.substr(0, text.size() / 2)).has_value());
}
