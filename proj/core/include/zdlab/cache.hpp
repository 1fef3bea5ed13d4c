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

// Disk cache for ideal lattices, keyed by the canonical ring descriptor.
//
// One file per ring. An entry records the descriptor, the table checksum of
// the ring it was computed for, and a digest of its own contents. Entries
// that fail any of those checks are recomputed and rewritten, never used.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "zdlab/ring.hpp"

namespace zdlab::cache {

struct Stats {
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t corrupt = 0;
  std::size_t writes = 0;
};

class LatticeCache {
 public:
  /// Without a directory (or when it cannot be created) entries live in
  /// memory for the lifetime of the object. Warnings go to `warnings`.
  explicit LatticeCache(std::optional<std::filesystem::path> dir, std::ostream* warnings = nullptr);

  /// Seeds the lattice of `ring` from the cache, or computes and stores it.
  void prime(const RingPtr& ring);

  const Stats& stats() const { return stats_; }
  /// Directory in use; nullopt when running from memory.
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  /// File name for a descriptor: a hash of the text plus ".lattice".
  static std::string file_name(std::string_view descriptor);

 private:
  std::optional<std::vector<ElementSet>> load(const FiniteRing& ring);
  void store(const FiniteRing& ring, const std::vector<ElementSet>& lattice);
  void warn(const std::string& what);

  std::optional<std::filesystem::path> dir_;
  std::ostream* warnings_;
  std::map<std::string, std::vector<ElementSet>> memory_;
  Stats stats_;
};

/// Text form of an entry, and its inverse. `decode` returns nullopt for
/// anything malformed, stale (checksum) or tampered with (digest).
std::string encode_entry(const FiniteRing& ring, const std::vector<ElementSet>& lattice);
std::optional<std::vector<ElementSet>> decode_entry(const FiniteRing& ring, std::string_view text);

}  // namespace zdlab::cache
