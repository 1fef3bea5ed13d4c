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

#include "zdlab/cache.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace zdlab::cache {

namespace {

constexpr std::string_view kMagic = "zdlab-lattice 1";

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

// Cheap structural checks; the digest catches everything else.
bool plausible(const FiniteRing& ring, const std::vector<ElementSet>& lattice) {
  if (lattice.empty()) return false;
  if (lattice.front().size() != 1 || lattice.back().size() != ring.size()) return false;
  for (const auto& s : lattice)
    if (!s.contains(0)) return false;
  return true;
}

}  // namespace

std::string encode_entry(const FiniteRing& ring, const std::vector<ElementSet>& lattice) {
  std::ostringstream os;
  os << kMagic << "\n";
  os << "descriptor " << ring.descriptor() << "\n";
  os << "tables " << hex(ring.checksum()) << "\n";
  os << "ideals " << lattice.size() << "\n";
  for (const auto& s : lattice) {
    os << s.size();
    for (Elem e : s) os << ' ' << e;
    os << "\n";
  }
  std::string body = os.str();
  return body + "digest " + hex(fnv1a(body)) + "\n";
}

std::optional<std::vector<ElementSet>> decode_entry(const FiniteRing& ring, std::string_view text) {
  const auto at = text.rfind("digest ");
  if (at == std::string_view::npos) return std::nullopt;
  const std::string_view body = text.substr(0, at);
  std::string digest(text.substr(at + 7));
  while (!digest.empty() && (digest.back() == '\n' || digest.back() == '\r')) digest.pop_back();
  if (digest != hex(fnv1a(body))) return std::nullopt;

  std::istringstream in{std::string(body)};
  std::string line;
  if (!std::getline(in, line) || line != kMagic) return std::nullopt;
  if (!std::getline(in, line) || line != "descriptor " + ring.descriptor()) return std::nullopt;
  if (!std::getline(in, line) || line != "tables " + hex(ring.checksum())) return std::nullopt;
  std::string word;
  std::size_t count = 0;
  if (!(in >> word >> count) || word != "ideals") return std::nullopt;
  std::vector<ElementSet> lattice;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t size = 0;
    if (!(in >> size) || size == 0 || size > ring.size()) return std::nullopt;
    ElementSet s(ring.size());
    long long prev = -1;
    for (std::size_t k = 0; k < size; ++k) {
      long long e = 0;
      if (!(in >> e) || e <= prev || e >= static_cast<long long>(ring.size())) return std::nullopt;
      s.insert(static_cast<Elem>(e));
      prev = e;
    }
    lattice.push_back(std::move(s));
  }
  if (!plausible(ring, lattice)) return std::nullopt;
  return lattice;
}

LatticeCache::LatticeCache(std::optional<std::filesystem::path> dir, std::ostream* warnings)
    : dir_(std::move(dir)), warnings_(warnings) {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec || !std::filesystem::is_directory(*dir_)) {
    warn("cache directory " + dir_->string() + " is unusable; keeping entries in memory");
    dir_.reset();
  }
}

std::string LatticeCache::file_name(std::string_view descriptor) { return hex(fnv1a(descriptor)) + ".lattice"; }

void LatticeCache::warn(const std::string& what) {
  if (warnings_) *warnings_ << "warning: " << what << "\n";
}

std::optional<std::vector<ElementSet>> LatticeCache::load(const FiniteRing& ring) {
  if (!dir_) {
    auto it = memory_.find(ring.descriptor());
    if (it == memory_.end()) return std::nullopt;
    return it->second;
  }
  const auto path = *dir_ / file_name(ring.descriptor());
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  auto lattice = decode_entry(ring, buf.str());
  if (!lattice) {
    ++stats_.corrupt;
    warn("cache entry for " + ring.descriptor() + " (" + path.string() + ") is corrupt or stale; recomputing");
  }
  return lattice;
}

void LatticeCache::store(const FiniteRing& ring, const std::vector<ElementSet>& lattice) {
  if (!dir_) {
    memory_[ring.descriptor()] = lattice;
    return;
  }
  static std::atomic<unsigned> counter{0};
  const auto final_path = *dir_ / file_name(ring.descriptor());
  const auto tmp = *dir_ / (file_name(ring.descriptor()) + ".tmp." + std::to_string(::getpid()) + "." +
                            std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << encode_entry(ring, lattice);
    if (!out.flush()) {
      warn("could not write cache entry " + tmp.string());
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    warn("could not publish cache entry " + final_path.string() + ": " + ec.message());
    std::filesystem::remove(tmp, ec);
    return;
  }
  ++stats_.writes;
}

void LatticeCache::prime(const RingPtr& ring) {
  if (ring->lattice_ready()) return;
  if (auto lattice = load(*ring)) {
    ++stats_.hits;
    ring->seed_lattice(std::move(*lattice));
    return;
  }
  ++stats_.misses;
  store(*ring, ring->ideal_lattice());
}

}  // namespace zdlab::cache
