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

// Helpers shared by the harness sources.

#include "zdlab/harness.hpp"

namespace zdlab::harness::detail {

/// Z(R) and Z(M) under the configured convention on 0.
ElementSet ring_zero_divisors(const FiniteRing& r, const Bounds& b);
ElementSet module_zero_divisors(const FiniteModule& m, const Bounds& b);

/// Auslander and torsion-free under the configured convention. With 0
/// included these are the library predicates.
Verdict auslander(const ModulePtr& m, const Bounds& b);
Verdict torsion_free(const ModulePtr& m, const Bounds& b);

WitnessRecord record(const std::string& predicate, const ModulePtr& m, const Verdict& v);

}  // namespace zdlab::harness::detail
