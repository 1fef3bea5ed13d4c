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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zdlab/element_set.hpp"
#include "zdlab/ring.hpp"

namespace zdlab {

/// Size caps for module constructions. Tables are dense, so the carrier cap
/// bounds memory at roughly 4 * max_module^2 bytes.
struct ModuleLimits {
  std::size_t max_module = 1024;
  /// Cap on |R|^g when a free module R^g is enumerated.
  std::size_t max_free_enumeration = 1u << 16;
  /// Hom-modules enumerate candidate maps, so they get a stricter cap.
  std::size_t max_hom_source = 64;
  std::size_t max_hom_candidates = 1u << 14;
  /// Cap on |M|^g when tensoring an ideal with M.
  std::size_t max_tensor_enumeration = 1u << 22;
};

enum class ModuleTag { Regular, Free, Quotient, DirectSum, Hom, Tensor, Localized, Restricted, Submodule };

std::string_view tag_name(ModuleTag tag);

/// M = R^g / K, with K given by generating relation vectors.
struct Presentation {
  unsigned generators = 0;
  std::vector<std::vector<Elem>> relations;
  /// Image in the carrier of each standard basis vector.
  std::vector<Elem> generator_images;
  /// False when derived from the carrier instead of the construction tag.
  bool from_tag = true;
};

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// A finite unital module stored as dense tables. Index 0 is zero.
///
/// `descriptor` is the module DSL text and `context` the ring DSL text it is
/// interpreted against; for base-changed or localized modules `ring()` is the
/// new ring while `context` still names the ring the construction started
/// from.
class FiniteModule : public std::enable_shared_from_this<FiniteModule> {
 public:
  struct Tables {
    std::vector<Elem> add;
    std::vector<Elem> neg;
    /// act[r * size + m] = r . m
    std::vector<Elem> act;
    std::vector<std::string> labels;
  };
  using ElementParser = std::function<Elem(std::string_view)>;

  FiniteModule(RingPtr ring, ModuleTag tag, std::string descriptor, std::string context,
               Tables tables, std::optional<Presentation> presentation,
               std::vector<ModulePtr> parts = {}, ElementParser parser = {});

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return m_; }
  bool is_zero() const { return m_ == 1; }
  Elem add(Elem a, Elem b) const { return t_.add[a * m_ + b]; }
  Elem neg(Elem a) const { return t_.neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem act(Elem r, Elem x) const { return t_.act[r * m_ + x]; }

  ModuleTag tag() const { return tag_; }
  const std::string& descriptor() const { return descriptor_; }
  const std::string& context() const { return context_; }
  const std::string& label(Elem e) const { return t_.labels.at(e); }
  const std::vector<ModulePtr>& parts() const { return parts_; }
  const std::optional<Presentation>& tag_presentation() const { return presentation_; }

  Elem parse_element(std::string_view text) const;

 private:
  RingPtr ring_;
  ModuleTag tag_;
  std::string descriptor_;
  std::string context_;
  std::size_t m_;
  Tables t_;
  std::optional<Presentation> presentation_;
  std::vector<ModulePtr> parts_;
  ElementParser parser_;
};

/// Checks abelian-group and unital module axioms on the full tables.
std::optional<std::string> check_module_axioms(const FiniteModule& m);

/// A submodule with generators and its closure.
class Submodule {
 public:
  Submodule(ModulePtr module, std::vector<Elem> generators, ElementSet elements);
  const ModulePtr& module() const { return module_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const ElementSet& elements() const { return elems_; }
  bool contains(Elem e) const { return elems_.contains(e); }
  std::size_t size() const { return elems_.size(); }
  bool is_zero() const { return elems_.size() == 1; }

 private:
  ModulePtr module_;
  std::vector<Elem> gens_;
  ElementSet elems_;
};

Submodule submodule_generated(const ModulePtr& m, std::span<const Elem> gens);
/// Greedy generating set: elements in increasing order, each outside the span
/// of the earlier ones.
std::vector<Elem> module_generators(const FiniteModule& m, const ElementSet& within);
/// Every submodule exactly once, by saturating cyclic submodules under sums.
std::vector<ElementSet> all_submodules(const ModulePtr& m, std::size_t max_count = 4096);

ModulePtr regular_module(const RingPtr& ring);
ModulePtr free_module(const RingPtr& ring, unsigned rank, const ModuleLimits& limits = {});
/// R^g modulo the submodule generated by `relations`.
ModulePtr quotient_of_free(const RingPtr& ring, unsigned generators,
                           std::vector<std::vector<Elem>> relations, std::string descriptor,
                           std::string context, const ModuleLimits& limits = {},
                           ModuleTag tag = ModuleTag::Quotient);
/// R/I.
ModulePtr cyclic_module(const Ideal& ideal, const ModuleLimits& limits = {});
ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b, const ModuleLimits& limits = {});
/// Hom_R(M, M) with pointwise operations.
ModulePtr hom_module(const ModulePtr& m, const ModuleLimits& limits = {});
/// View an S-module as an R-module through a ring map R -> S.
ModulePtr restrict_scalars(const ModulePtr& m, const RingPtr& base, std::vector<Elem> ring_map,
                           std::string descriptor, std::string context);
/// A submodule as a module in its own right.
ModulePtr submodule_module(const ModulePtr& m, const ElementSet& elements, std::string descriptor);

/// Presentation from the construction tag when available, otherwise derived
/// from the carrier. Throws BoundExceeded when R^g cannot be enumerated.
Presentation presentation_of(const FiniteModule& m, const ModuleLimits& limits = {});

/// Little-endian base-|R| indexing of R^g.
struct FreeCoords {
  std::size_t base;
  unsigned rank;
  std::size_t count() const;
  std::vector<Elem> decode(std::size_t index) const;
  std::size_t encode(std::span<const Elem> coords) const;
};

}  // namespace zdlab
