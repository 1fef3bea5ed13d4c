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

#include "report.hpp"

#include <sstream>

namespace zdlab::report {

Json verdict(const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  if (v.degenerate) j["degenerate"] = true;
  if (v.witness) {
    j["witness"] = Json{{"kind", std::string(witness_kind_name(v.witness->kind))}, {"labels", v.witness->labels}};
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json witness_record(const harness::WitnessRecord& w) {
  return Json{{"predicate", w.predicate},
              {"ring", w.ring},
              {"subject", w.subject},
              {"kind", std::string(witness_kind_name(w.kind))},
              {"labels", w.labels},
              {"holds", w.holds}};
}

Json bounds(const harness::Bounds& b) {
  return Json{{"degree", b.degree},
              {"precision", b.precision},
              {"variables", b.variables},
              {"cross_ring", b.cross_ring},
              {"cross_module", b.cross_module},
              {"mccoy_ring", b.mccoy_ring},
              {"zero_in_zero_divisors", b.zero_in_zero_divisors}};
}

Json limits(const harness::UniverseLimits& l) {
  return Json{{"max_modulus", l.max_modulus},
              {"max_factor", l.max_factor},
              {"include_products", l.include_products},
              {"include_poly_quotients", l.include_poly_quotients},
              {"max_module", l.max_module},
              {"max_algebra", l.max_algebra},
              {"max_integer_modulus", l.max_integer_modulus}};
}

Json universe(const harness::Universe& u) {
  Json j;
  j["limits"] = limits(u.limits);
  j["rings"] = Json::array();
  for (const auto& r : u.rings) j["rings"].push_back(r->descriptor());
  j["modules"] = u.modules.size();
  j["algebras"] = u.algebras.size();
  j["integer_members"] = u.integer_moduli.size();
  Json counts = Json::object();
  for (const auto& [k, v] : u.counts) counts[k] = v;
  j["counts"] = counts;
  j["skipped"] = u.skipped;
  return j;
}

std::string status(const harness::StatementReport& r) {
  if (!r.failures.empty()) return "fail";
  return r.applicable == 0 ? "vacuous" : "pass";
}

Json statement(const harness::StatementReport& r) {
  Json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["status"] = status(r);
  j["evaluated"] = r.evaluated;
  j["applicable"] = r.applicable;
  j["passed"] = r.passed;
  if (r.zero_applicable_warning()) j["warning"] = "no applicable instances";
  j["notes"] = r.notes;
  j["log"] = r.log;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json fj{{"ring", f.ring}, {"subject", f.subject}, {"detail", f.detail}, {"witnesses", Json::array()}};
    for (const auto& w : f.witnesses) fj["witnesses"].push_back(witness_record(w));
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_record(w));
  j["witnesses"] = std::move(ws);
  return j;
}

Json labels(const FiniteRing& r, const ElementSet& s) {
  Json j = Json::array();
  for (Elem e : s) j.push_back(r.label(e));
  return j;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

void render(const Json& v, int indent, std::ostringstream& os);

void render_entry(const std::string& key, const Json& v, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (!v.is_structured()) {
    os << pad << key << ": " << scalar(v) << "\n";
  } else if (v.empty()) {
    os << pad << key << ": (none)\n";
  } else if (v.is_array() && all_scalars(v)) {
    os << pad << key << ": ";
    bool first = true;
    for (const auto& x : v) {
      os << (first ? "" : ", ") << scalar(x);
      first = false;
    }
    os << "\n";
  } else {
    os << pad << key << ":\n";
    render(v, indent + 2, os);
  }
}

void render(const Json& v, int indent, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) render_entry(k, x, indent, os);
    return;
  }
  const std::string pad(indent, ' ');
  for (const auto& x : v) {
    if (!x.is_structured()) {
      os << pad << "- " << scalar(x) << "\n";
      continue;
    }
    // First line of each element carries the list marker.
    std::ostringstream inner;
    render(x, indent + 2, inner);
    std::string text = inner.str();
    if (text.size() >= static_cast<std::size_t>(indent + 2)) text.replace(indent, 2, "- ");
    os << text;
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(doc, 0, os);
  return os.str();
}

}  // namespace zdlab::report
