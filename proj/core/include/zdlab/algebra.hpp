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
#include "zdlab/predicates.hpp"
#include "zdlab/ring.hpp"

namespace zdlab {

/// A finite R-algebra B given by a unital ring homomorphism R -> B.
class FiniteAlgebra {
 public:
  /// Validates that `structure_map` is additive, multiplicative and sends 1
  /// to 1; throws Error otherwise.
  FiniteAlgebra(RingPtr algebra, RingPtr base, std::vector<Elem> structure_map, std::string descriptor);

  const RingPtr& algebra() const { return algebra_; }
  const RingPtr& base() const { return base_; }
  Elem map(Elem r) const { return map_.at(r); }
  const std::vector<Elem>& structure_map() const { return map_; }
  const std::string& descriptor() const { return descriptor_; }
  bool is_trivial() const { return algebra_->descriptor() == base_->descriptor(); }

  /// B viewed as an R-module.
  ModulePtr as_module() const;

 private:
  RingPtr algebra_;
  RingPtr base_;
  std::vector<Elem> map_;
  std::string descriptor_;
};

/// The canonical inclusion R -> B for the supported shapes: B = R
/// (identity), B = Prod(R,R) (diagonal), and B = PolyQuot(Zn, f) over Zn
/// (constants).
FiniteAlgebra canonical_algebra(const RingPtr& algebra, const RingPtr& base);

/// IB, the ideal of B generated by the image of I.
Ideal extended_ideal(const FiniteAlgebra& b, const Ideal& ideal);

/// c(f) = intersection of the ideals I of R with f in IB.
Ideal algebra_content(const FiniteAlgebra& b, Elem f);

/// f in c(f)B for every f. Witness: the offending f.
Verdict is_ohm_rush(const FiniteAlgebra& b);
/// Ohm-Rush, and f g = 0 with g != 0 forces a nonzero r in R killing c(f).
/// Witness: the least offending pair (f, g).
Verdict is_mccoy_algebra(const FiniteAlgebra& b);

/// M (x)_R B as a B-module, by base change of a presentation of M.
ModulePtr tensor_with_algebra(const ModulePtr& m, const FiniteAlgebra& b, const ModuleLimits& limits = {});

}  // namespace zdlab
