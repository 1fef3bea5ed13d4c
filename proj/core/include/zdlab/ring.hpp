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

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zdlab/element_set.hpp"

namespace zdlab {

/// Largest carrier for which full arithmetic tables are built.
inline constexpr std::size_t kMaxRingSize = 1024;

enum class RingKind { Modular, Product, PolyQuotient, Localized };

/// Construction descriptor for the rings that can be built directly:
/// Z/n, binary products, and Z/n[x] modulo a monic relation.
struct RingSpec {
  RingKind kind = RingKind::Modular;
  unsigned modulus = 0;
  std::vector<RingSpec> factors;
  /// Ascending coefficients of the relation, leading coefficient last.
  std::vector<unsigned> relation;

  static RingSpec zmod(unsigned n);
  static RingSpec product(RingSpec a, RingSpec b);
  static RingSpec poly_quotient(unsigned n, std::vector<unsigned> relation);

  /// Canonical DSL text, e.g. "Prod(Z2,Z2)" or "PolyQuot(Z2,x^2+x)".
  std::string to_string() const;
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite commutative ring with identity, stored as full operation tables.
///
/// Element indices are canonical encodings: equal indices iff equal ring
/// elements. Index 0 is zero. Instances are immutable apart from the
/// publish-once caches for the ideal lattice and zero-divisor set.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
 public:
  struct Tables {
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    Elem one = 0;
    std::vector<std::string> labels;
  };
  using ElementParser = std::function<Elem(std::string_view)>;

  FiniteRing(RingKind kind, std::string descriptor, Tables tables,
             std::vector<RingPtr> parts, ElementParser parser);

  std::size_t size() const { return n_; }
  Elem zero() const { return 0; }
  Elem one() const { return t_.one; }
  Elem add(Elem a, Elem b) const { return t_.add[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return t_.mul[a * n_ + b]; }
  Elem neg(Elem a) const { return t_.neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  RingKind kind() const { return kind_; }
  const std::string& descriptor() const { return descriptor_; }
  const std::string& label(Elem e) const { return t_.labels.at(e); }
  const std::vector<std::string>& labels() const { return t_.labels; }
  /// Factors of a product, or the source ring of a localization.
  const std::vector<RingPtr>& parts() const { return parts_; }

  /// Parses an element literal in this ring's syntax (integers for Z/n,
  /// "(a,b)" for products, polynomials in x for quotients, "a/s" for
  /// fractions). Throws Error when the text names no element.
  Elem parse_element(std::string_view text) const;
  std::optional<Elem> find_label(std::string_view text) const;

  /// The image of the integer k under Z -> R.
  Elem from_int(long long k) const;

  /// All ideals, sorted by (size, element list); computed once per ring.
  const std::vector<ElementSet>& ideal_lattice() const;
  /// Installs a lattice obtained elsewhere (a disk cache). Returns false
  /// when the lattice was already published.
  bool seed_lattice(std::vector<ElementSet> lattice) const;
  bool lattice_ready() const;
  /// Greedy generating set for each entry of ideal_lattice().
  const std::vector<std::vector<Elem>>& lattice_generators() const;

  /// Z_R(R), including 0.
  const ElementSet& zero_divisors() const;

  /// FNV-1a digest of the operation tables.
  std::uint64_t checksum() const;

 private:
  RingKind kind_;
  std::string descriptor_;
  std::size_t n_;
  Tables t_;
  std::vector<RingPtr> parts_;
  ElementParser parser_;

  mutable std::mutex cache_mu_;
  mutable std::once_flag lattice_once_;
  mutable bool lattice_ready_ = false;
  mutable std::vector<ElementSet> lattice_;
  mutable std::once_flag gens_once_;
  mutable std::vector<std::vector<Elem>> lattice_gens_;
  mutable std::once_flag zd_once_;
  mutable ElementSet zero_divisors_;
};

RingPtr make_ring(const RingSpec& spec);
RingPtr make_zmod(unsigned n);

/// Checks commutative ring axioms on the full tables. Returns a description
/// of the first violation, or nullopt.
std::optional<std::string> check_ring_axioms(const FiniteRing& r);

/// An ideal, carried with a generator list and its full element set.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Elem> generators, ElementSet elements);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const ElementSet& elements() const { return elems_; }
  bool contains(Elem e) const { return elems_.contains(e); }
  std::size_t size() const { return elems_.size(); }
  bool is_zero() const { return elems_.size() == 1; }
  bool is_whole() const { return elems_.size() == ring_->size(); }
  bool subset_of(const Ideal& other) const { return elems_.subset_of(other.elems_); }

  /// "(g1,g2)" over a small generating set.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  RingPtr ring_;
  std::vector<Elem> gens_;
  ElementSet elems_;
};

/// Smallest ideal containing `gens`.
Ideal ideal_generated(const RingPtr& ring, std::span<const Elem> gens);
/// Wraps a set already known to be an ideal; picks a greedy generating set.
Ideal ideal_from_elements(const RingPtr& ring, ElementSet elements);

/// Elements chosen in increasing order, each one outside the ideal spanned
/// by the previous ones.
std::vector<Elem> greedy_generators(const RingPtr& ring, const ElementSet& ideal);

enum class IdealOp { Sum, Product, Intersect };
Ideal ideal_combine(const Ideal& a, const Ideal& b, IdealOp op);
Ideal ideal_power(const Ideal& a, unsigned k);
/// r * I = {r a : a in I}, which is again an ideal.
Ideal ideal_scale(Elem r, const Ideal& a);

/// {r : r a = 0 for all a in I}.
Ideal annihilator(const Ideal& ideal);

/// The cached lattice of `ring` as Ideal values.
std::vector<Ideal> ideals_of(const RingPtr& ring);

/// Every ideal exactly once. Starts from the cyclic ideals and saturates under
/// pairwise sums. Throws BoundExceeded past `bound`.
std::vector<Ideal> all_ideals(const RingPtr& ring, std::size_t bound = kMaxRingSize);

/// {r : exists s != 0 with r s = 0}; contains 0 for every nonzero ring.
ElementSet zero_divisors_ring(const FiniteRing& ring);
ElementSet units(const FiniteRing& ring);

struct RingFlags {
  bool is_field = false;
  bool is_domain = false;
  bool is_local = false;
  std::vector<Ideal> maximal_ideals;
};
RingFlags ring_predicates(const RingPtr& ring);

/// Idempotents e != 0 that do not split as a sum of two orthogonal nonzero
/// idempotents. eR runs over the local factors of R.
std::vector<Elem> primitive_idempotents(const FiniteRing& ring);

/// A multiplicatively closed subset containing 1.
class MultiplicativeSet {
 public:
  /// Closes `seed` under multiplication and adds 1. `was_closed` reports
  /// whether the seed was already closed.
  MultiplicativeSet(RingPtr ring, std::span<const Elem> seed);

  const RingPtr& ring() const { return ring_; }
  const ElementSet& elements() const { return elems_; }
  bool contains(Elem e) const { return elems_.contains(e); }
  bool was_closed() const { return was_closed_; }
  std::string to_string() const;

 private:
  RingPtr ring_;
  ElementSet elems_;
  bool was_closed_ = true;
};

}  // namespace zdlab
