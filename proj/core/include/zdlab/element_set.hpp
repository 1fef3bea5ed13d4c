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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdlab {

/// Index of an element in the carrier of a finite ring or module.
/// Carriers are enumerated 0..n-1 and index 0 is always the zero element.
using Elem = std::uint32_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded; callers shrink the universe and retry.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Subset of a finite carrier {0, ..., universe-1}, kept both as a sorted
/// list and as a membership mask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : mask_(universe, 0) {}

  static ElementSet from_mask(std::vector<char> mask) {
    ElementSet s;
    s.mask_ = std::move(mask);
    for (std::size_t i = 0; i < s.mask_.size(); ++i) {
      if (s.mask_[i]) s.items_.push_back(static_cast<Elem>(i));
    }
    return s;
  }

  static ElementSet from_items(std::size_t universe, std::span<const Elem> items) {
    ElementSet s(universe);
    for (Elem e : items) s.insert(e);
    return s;
  }

  static ElementSet full(std::size_t universe) {
    return from_mask(std::vector<char>(universe, 1));
  }

  bool contains(Elem e) const { return e < mask_.size() && mask_[e] != 0; }

  bool insert(Elem e) {
    if (e >= mask_.size()) throw Error("element index outside carrier");
    if (mask_[e]) return false;
    mask_[e] = 1;
    items_.insert(std::upper_bound(items_.begin(), items_.end(), e), e);
    return true;
  }

  const std::vector<Elem>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  std::size_t universe() const { return mask_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool subset_of(const ElementSet& other) const {
    return std::all_of(items_.begin(), items_.end(),
                       [&](Elem e) { return other.contains(e); });
  }

  /// Least element of this set that is missing from `other`, if any.
  std::optional<Elem> first_not_in(const ElementSet& other) const {
    for (Elem e : items_) {
      if (!other.contains(e)) return e;
    }
    return std::nullopt;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet out(universe());
    for (Elem e : items_) {
      if (other.contains(e)) out.insert(e);
    }
    return out;
  }

  ElementSet complement() const {
    std::vector<char> m(mask_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = mask_[i] ? 0 : 1;
    return from_mask(std::move(m));
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.mask_ == b.mask_;
  }

  const std::vector<char>& mask() const { return mask_; }

 private:
  std::vector<char> mask_;
  std::vector<Elem> items_;
};

/// Subgroup of a finite abelian group generated by `gens`.
///
/// The group is given by its order and an addition callback with 0 as the
/// identity. Each generator that is not yet covered multiplies the subgroup
/// by the union of its cosets H + j*g, so the cost is linear in the size of
/// the result times the number of effective generators.
template <class AddFn>
ElementSet additive_closure(std::size_t order, std::span<const Elem> gens, AddFn&& add) {
  std::vector<char> mask(order, 0);
  std::vector<Elem> members{0};
  mask[0] = 1;
  for (Elem g : gens) {
    if (mask[g]) continue;
    const std::vector<Elem> base = members;
    Elem shift = g;
    while (!mask[shift]) {
      for (Elem h : base) {
        Elem s = add(h, shift);
        if (!mask[s]) {
          mask[s] = 1;
          members.push_back(s);
        }
      }
      shift = add(shift, g);
    }
  }
  return ElementSet::from_mask(std::move(mask));
}

}  // namespace zdlab
