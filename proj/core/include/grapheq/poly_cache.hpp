#pragma once

#include <atomic>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grapheq/canonical.hpp"
#include "grapheq/intpoly.hpp"

namespace grapheq {

/// Memo table CanonicalKey -> I(G,x), keyed per connected component.
///
/// Lookups take a shared lock; insert is insert-if-absent under an exclusive
/// lock, so racing writers storing the same value are harmless.
class PolyCache {
 public:
  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t entries = 0;
  };

  struct LoadReport {
    std::size_t loaded = 0;
    std::size_t skipped = 0;
    std::vector<std::string> warnings;
  };

  PolyCache() = default;
  PolyCache(const PolyCache&) = delete;
  PolyCache& operator=(const PolyCache&) = delete;

  std::optional<IntPoly> find(const CanonicalKey& key) const;
  /// Returns false when the key was already present (the stored value wins).
  bool insert(const CanonicalKey& key, IntPoly poly);

  Stats stats() const;
  std::size_t size() const;
  void clear();

  /// Entries sorted by key.
  std::vector<std::pair<CanonicalKey, IntPoly>> entries() const;

  /// JSON-lines: {"key": "<base64>", "coeffs": ["1", "3", ...]} per line.
  /// Lines that fail to parse or validate are skipped with a warning. An entry
  /// is accepted only if its key decodes to a graph whose canonical key is
  /// itself, the low coefficients match (1, |V|, C(|V|,2) - |E|), all
  /// coefficients are positive with degree at most |V|, and, for graphs of at
  /// most kBruteForceValidation vertices, the brute-force polynomial agrees.
  LoadReport load_jsonl(std::istream& in);
  /// Writes entries sorted by key.
  void save_jsonl(std::ostream& out) const;

  static constexpr std::size_t kBruteForceValidation = 16;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, IntPoly, CanonicalKeyHash> map_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

}  // namespace grapheq
