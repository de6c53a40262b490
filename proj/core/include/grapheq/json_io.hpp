#pragma once

#include <string>
#include <vector>

#include "grapheq/class_search.hpp"
#include "grapheq/graph.hpp"
#include "grapheq/intpoly.hpp"
#include "grapheq/ledger.hpp"
#include "grapheq/spectral.hpp"

namespace grapheq {

// JSON renderers. Keys are sorted and integers are decimal strings, so equal
// inputs give byte-identical output.

/// {"coeffs": ["1", "9", ...]}
std::string poly_to_json(const IntPoly& p);
/// Inverse of poly_to_json. Throws std::invalid_argument.
IntPoly poly_from_json(const std::string& text);

/// {n, factors: {m: [coeffs]}, route, root_check: {max_residual, tolerance, pass}}
std::string factor_to_json(const FactorSet& factors, const RootCheck& roots);

/// Members carry graph6, description, coeffs and checks. Wall time is included
/// only when include_timing is set.
std::string class_to_json(const ClassReport& report, bool include_timing = false);

std::string ledger_to_json(const std::vector<LedgerEntry>& entries);

std::string unicyclic_to_json(unsigned v, const std::vector<Graph>& graphs);

}  // namespace grapheq
