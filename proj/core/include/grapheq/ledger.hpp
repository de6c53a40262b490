#pragma once

#include <string>
#include <vector>

#include "grapheq/poly_cache.hpp"

namespace grapheq {

/// One published number recomputed from scratch.
struct LedgerEntry {
  std::string id;
  /// Where the expected value is stated.
  std::string source;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct LedgerOptions {
  /// Largest odd n whose class is recomputed by the structured search.
  unsigned max_n = 21;
  unsigned threads = 1;
  PolyCache* cache = nullptr;
};

/// Recomputes the worked-example factors and cycle polynomials, the named
/// graphs' polynomials, the classes of C_n for odd n <= max_n, the class of
/// C_6, C_n ~ D_n for n <= 60 and agreement of both f_n routes for odd n <= 99.
std::vector<LedgerEntry> run_ledger(const LedgerOptions& options = {});

bool ledger_passed(const std::vector<LedgerEntry>& entries);

}  // namespace grapheq
