#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grapheq/canonical.hpp"
#include "grapheq/graph.hpp"
#include "grapheq/graph_spec.hpp"
#include "grapheq/intpoly.hpp"
#include "grapheq/poly_cache.hpp"

namespace grapheq {

/// Results of the structural identities a member of the class of C_n must
/// satisfy. A clause is std::nullopt where it does not apply at this n.
struct StructuralChecks {
  static constexpr std::size_t kClauses = 7;
  /// (i) sum g_i = n, (ii) sum i g_i = 2n, (iii) sum C(i,2) g_i = n + triangles,
  /// (iv) g_0 = 0, (v) max degree <= 3 and triangles = g_3,
  /// (vi) every component unicyclic, (vii) the i_4 census identity
  /// n(3n-11)/2 = e2 + P3∪K1 - C3∪K1 - P4 - K13 + D4 + C4.
  static const std::array<std::string_view, kClauses> kNames;

  std::array<std::optional<bool>, kClauses> clauses{};
  long long i4_lhs = 0;
  long long i4_rhs = 0;

  bool all_pass() const;
};

/// (iii) and (v) compare against C_n's triangle-free count and are skipped for
/// n = 3. (vi) and (vii) hold for odd n only and are skipped for even n;
/// (vii) is also skipped for n < 5.
StructuralChecks structural_checks(const Graph& g, unsigned n);

/// A component shape used by the structured search.
struct CandidateComponent {
  enum class Kind { C, D, A, B, E, C3 };
  Kind kind = Kind::C;
  std::vector<int> params;

  std::size_t vertex_count() const;
  Graph build() const;
  GraphSpec spec() const;
  friend bool operator==(const CandidateComponent&, const CandidateComponent&) = default;
};

/// Closed-form independence number of A(m1,m2) or B(m1,m2,m3) by parameter
/// parity. E(m1,m2) uses the A formula. Throws std::invalid_argument for other
/// kinds or out-of-range parameters.
unsigned alpha_formula(const CandidateComponent& special);

/// Values r in {2, 3} consistent with 2 alpha(special) = |V(special)| + r - 2
/// when every other component is an odd cycle or D_m.
std::vector<unsigned> component_count_bound(unsigned n, const CandidateComponent& special);

enum class SearchMode { Structured, AllGraphs, Unicyclic };
std::string to_string(SearchMode mode);
/// Accepts "structured", "all-graphs", "unicyclic". Throws std::invalid_argument.
SearchMode parse_search_mode(std::string_view text);

struct SearchOptions {
  /// Restrict extra cycles to divisors of n and require component polynomials
  /// to divide I(C_n,x). Turning it off widens the search; the member set must
  /// not change.
  bool divisor_pruning = true;
  unsigned threads = 1;
  /// Shared memo; a private one is used when null.
  PolyCache* cache = nullptr;
};

struct SearchStats {
  std::size_t generated = 0;
  std::size_t pruned = 0;
  std::size_t polynomial_tested = 0;
  double wall_seconds = 0.0;
};

struct ClassMember {
  CanonicalKey key;
  Graph graph;
  std::string description;
  IntPoly poly;
  StructuralChecks checks;
};

struct ClassReport {
  unsigned n = 0;
  SearchMode mode = SearchMode::Structured;
  /// Sorted by key.
  std::vector<ClassMember> members;
  SearchStats stats;

  std::set<CanonicalKey> keys() const;
  bool contains(const Graph& g) const;
};

/// Class of C_n (odd n >= 3) from the component case analysis: C_n and D_n,
/// and when 3 | n the shapes C3 + S and C3 + X + S with X in {C_m, D_m},
/// m | n odd >= 5 with 3 not dividing m, and S an A, B or E graph whose
/// parameters pass component_count_bound. Every candidate is tested by exact
/// polynomial equality. When 3 does not divide n, a scan over multisets of
/// proper divisors confirms that no product of smaller cycle polynomials
/// reproduces I(C_n,x).
ClassReport structured_class_search(unsigned n, const SearchOptions& options = {});

inline constexpr unsigned kMaxAllGraphsN = 9;
inline constexpr unsigned kMaxUnicyclicN = 21;

/// AllGraphs: every graph on n vertices and n edges (3 <= n <= 9), pruned by
/// the i_3 count, then tested by brute force. Unicyclic: every multiset of
/// connected unicyclic graphs with n vertices in total (odd 3 <= n <= 21).
/// Throws std::invalid_argument outside those ranges.
ClassReport exhaustive_class_search(unsigned n, SearchMode mode, const SearchOptions& options = {});

/// Family description of each component, joined with " + ", e.g.
/// "C3 + A(2,1)". Components that match no family are given as g6:... terms.
std::string describe_graph(const Graph& g);

/// The named graph (Ga, ..., Gc') isomorphic to a component, if any.
std::optional<std::string> named_alias(const Graph& component);

/// Human-readable listing of a report.
std::string render_class_text(const ClassReport& report);

}  // namespace grapheq
