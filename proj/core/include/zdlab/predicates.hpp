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

#include <optional>
#include <string>
#include <vector>

#include "zdlab/module.hpp"
#include "zdlab/ring.hpp"

namespace zdlab {

enum class WitnessKind { RingElement, ModuleElement, Ideal, ElementPair, Polynomial, MultiplicativeSet };

std::string_view witness_kind_name(WitnessKind kind);

/// A structured witness. `labels` is the printable form, `items` the raw
/// carrier indices where that makes sense.
struct Witness {
  WitnessKind kind;
  std::vector<std::string> labels;
  std::vector<Elem> items;
};

/// Outcome of a predicate. A false verdict always carries a witness;
/// a degenerate verdict marks the zero module, which the definitions exclude.
struct Verdict {
  bool holds = false;
  bool degenerate = false;
  std::optional<Witness> witness;
  std::string note;

  static Verdict pass(std::optional<Witness> w = std::nullopt) { return {true, false, std::move(w), {}}; }
  static Verdict fail(Witness w) { return {false, false, std::move(w), {}}; }
  static Verdict zero_module() { return {true, true, std::nullopt, "zero module"}; }
};

Witness ring_witness(const FiniteRing& r, Elem e);
Witness module_witness(const FiniteModule& m, Elem e);
Witness ideal_witness(const Ideal& i);

/// Z_R(M) = {r : r m = 0 for some m != 0}. Empty for the zero module.
ElementSet zero_divisors_module(const FiniteModule& m);

/// Ann(M).
Ideal ann_module(const ModulePtr& m);
/// Ann(x) for one element.
Ideal ann_element(const ModulePtr& m, Elem x);
/// {m : I m = 0}.
ElementSet annihilated_by(const FiniteModule& m, const Ideal& ideal);

/// I M, and I N for a submodule N.
Submodule ideal_action(const Ideal& ideal, const ModulePtr& m);
Submodule ideal_action(const Ideal& ideal, const Submodule& n);

/// c(x) = intersection of all ideals I with x in IM.
Ideal content_of_element(const ModulePtr& m, Elem x);

Verdict is_content_module(const ModulePtr& m);
/// Every ideal inside Z_R(M) kills a nonzero element of M.
Verdict has_property_A(const ModulePtr& m);
/// Z_R(R) in Z_R(M).
Verdict is_auslander(const ModulePtr& m);
/// Z_R(M) in Z_R(R).
Verdict is_torsion_free(const ModulePtr& m);
/// Ann(M) = (0).
Verdict is_faithful(const ModulePtr& m);
/// For every s there is x with c(x) = (s).
Verdict is_content_surjective(const ModulePtr& m);

/// Ideal criterion: I (x) M -> M injective for every ideal I, with I (x) M
/// computed from a presentation of I. Witness: the offending ideal.
Verdict is_flat(const ModulePtr& m, const ModuleLimits& limits = {});
/// |I (x) M| for one ideal; exposed for tests.
std::size_t tensor_ideal_size(const Ideal& ideal, const ModulePtr& m, const ModuleLimits& limits = {});
/// Independent route: M is flat iff eM is free over eR for every primitive
/// idempotent e. Witness: the idempotent of a non-free component.
Verdict is_locally_free(const ModulePtr& m);
/// Flat, and pM != M for every maximal ideal p.
Verdict is_faithfully_flat(const ModulePtr& m, const ModuleLimits& limits = {});

}  // namespace zdlab
