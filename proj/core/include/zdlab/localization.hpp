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

#include <functional>
#include <vector>

#include "zdlab/module.hpp"
#include "zdlab/ring.hpp"

namespace zdlab {

/// R_S together with the canonical map R -> R_S.
struct LocalizedRing {
  RingPtr ring;
  RingPtr source;
  ElementSet set;
  std::vector<Elem> canonical;
  /// The class of x/s for s in S.
  std::function<Elem(Elem, Elem)> fraction;
  /// 0 in S: R_S is the zero ring.
  bool degenerate = false;
};

/// M_S as an R_S-module together with the canonical map M -> M_S.
struct LocalizedModule {
  ModulePtr module;
  LocalizedRing ring;
  std::vector<Elem> canonical;
  bool degenerate = false;
};

/// Pairs (x, s) modulo (x, s) ~ (y, t) iff u (t x - s y) = 0 for some u in S.
/// Each class is labelled by a representative "x/s", or "x" when s = 1 is
/// available.
LocalizedRing localize(const RingPtr& ring, const MultiplicativeSet& s);
LocalizedModule localize_module(const ModulePtr& m, const MultiplicativeSet& s);

/// M_S viewed as an R-module through R -> R_S.
ModulePtr fractions_over_base(const ModulePtr& m, const MultiplicativeSet& s);

/// R localized at R \ Z(R).
LocalizedRing total_quotient(const RingPtr& ring);
/// The set R \ Z(R).
MultiplicativeSet regular_elements(const RingPtr& ring);

/// True when the canonical map is a bijection preserving + and *.
bool canonical_is_isomorphism(const LocalizedRing& l);

/// Kernel of M -> M localized at R \ Z(R).
Submodule natural_map_kernel(const ModulePtr& m);

struct MultiplicativeSets {
  std::vector<MultiplicativeSet> sets;
  bool truncated = false;
};

/// Every multiplicatively closed set containing 1 and contained in
/// `allowed`, sorted by (size, elements). Stops after `cap` sets.
MultiplicativeSets multiplicative_sets_within(const RingPtr& ring, const ElementSet& allowed,
                                              std::size_t cap = 256);

}  // namespace zdlab
