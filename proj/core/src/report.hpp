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

// JSON report builders. Private to the library: nlohmann::json does not
// appear in any installed header.

#include <string>

#include "json.hpp"
#include "zdlab/harness.hpp"

namespace zdlab::report {

using Json = nlohmann::ordered_json;

Json verdict(const Verdict& v);
Json witness_record(const harness::WitnessRecord& w);
Json bounds(const harness::Bounds& b);
Json limits(const harness::UniverseLimits& l);
Json universe(const harness::Universe& u);
Json statement(const harness::StatementReport& r);
Json labels(const FiniteRing& r, const ElementSet& s);

/// "pass", "fail", or "vacuous" when nothing was applicable.
std::string status(const harness::StatementReport& r);

/// Indented plain-text rendering of a report document.
std::string render_text(const Json& doc);

}  // namespace zdlab::report
