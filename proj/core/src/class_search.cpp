#include "grapheq/class_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grapheq/census.hpp"
#include "grapheq/graph6.hpp"
#include "grapheq/indpoly.hpp"
#include "grapheq/spectral.hpp"
#include "grapheq/unicyclic.hpp"

namespace grapheq {

const std::array<std::string_view, StructuralChecks::kClauses> StructuralChecks::kNames = {
    "vertex-count",
    "degree-sum",
    "degree-pairs-triangles",
    "no-isolated-vertex",
    "max-degree-and-triangles",
    "unicyclic-components",
    "i4-census-identity"};

bool StructuralChecks::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const std::optional<bool>& c) { return c.value_or(true); });
}

StructuralChecks structural_checks(const Graph& g, unsigned n) {
  StructuralChecks out;
  const auto hist = degree_histogram(g);
  const SubgraphCensus census = subgraph_census(g);
  long long pairs = 0;
  long long g3 = 0;
  for (auto [d, count] : hist) {
    pairs += static_cast<long long>(d * (d - 1) / 2 * count);
    if (d == 3) g3 = static_cast<long long>(count);
  }
  const long long nn = n;
  const auto tri = static_cast<long long>(census.triangles);

  out.clauses[0] = g.vertex_count() == n;
  out.clauses[1] = 2 * g.edge_count() == 2 * static_cast<std::size_t>(n);
  if (n >= 4) out.clauses[2] = pairs == nn + tri;
  out.clauses[3] = !hist.contains(0);
  if (n >= 4) out.clauses[4] = g.max_degree() <= 3 && tri == g3;
  bool unicyclic = true;
  for (const auto& vs : component_vertex_sets(g)) {
    std::vector<bool> keep(g.vertex_count(), false);
    for (Vertex v : vs) keep[v] = true;
    unicyclic = unicyclic && is_unicyclic(induced_subgraph(g, keep));
  }
  if (n % 2 == 1) out.clauses[5] = unicyclic;

  out.i4_lhs = nn * (3 * nn - 11) / 2;
  out.i4_rhs = static_cast<long long>(census.e2 + census.p3_k1 + census.d4 + census.c4) -
               static_cast<long long>(census.c3_k1 + census.p4 + census.k13);
  if (n >= 5 && n % 2 == 1) out.clauses[6] = out.i4_lhs == out.i4_rhs;
  return out;
}

std::size_t CandidateComponent::vertex_count() const {
  switch (kind) {
    case Kind::C:
    case Kind::D:
      return static_cast<std::size_t>(params.at(0));
    case Kind::A:
    case Kind::E:
      return static_cast<std::size_t>(params.at(0) + params.at(1) + 3);
    case Kind::B:
      return static_cast<std::size_t>(params.at(0) + params.at(1) + params.at(2) + 4);
    case Kind::C3:
      return 3;
  }
  return 0;
}

GraphSpec CandidateComponent::spec() const {
  switch (kind) {
    case Kind::C:
      return GraphSpec::cycle(params.at(0));
    case Kind::D:
      return GraphSpec::dn(params.at(0));
    case Kind::A:
      return GraphSpec::a(params.at(0), params.at(1));
    case Kind::B:
      return GraphSpec::b(params.at(0), params.at(1), params.at(2));
    case Kind::E:
      return GraphSpec::e(params.at(0), params.at(1));
    case Kind::C3:
      return GraphSpec::cycle(3);
  }
  return {};
}

Graph CandidateComponent::build() const { return build_graph(spec()); }

unsigned alpha_formula(const CandidateComponent& special) {
  const auto& p = special.params;
  switch (special.kind) {
    case CandidateComponent::Kind::A:
    case CandidateComponent::Kind::E: {
      if (p.size() != 2 || p[0] < 1 || p[1] < 1) {
        throw std::invalid_argument("alpha_formula: A/E parameters must be two positive integers");
      }
      const int odd = (p[0] % 2) + (p[1] % 2);
      const int sum = p[0] + p[1];
      if (odd == 2) return static_cast<unsigned>((sum + 4) / 2);
      if (odd == 1) return static_cast<unsigned>((sum + 3) / 2);
      return static_cast<unsigned>((sum + 2) / 2);
    }
    case CandidateComponent::Kind::B: {
      if (p.size() != 3 || p[0] < 0 || p[1] < 1 || p[2] < 1) {
        throw std::invalid_argument(
            "alpha_formula: B parameters must satisfy m1 >= 0, m2, m3 >= 1");
      }
      const int odd = (p[0] % 2) + (p[1] % 2) + (p[2] % 2);
      const int sum = p[0] + p[1] + p[2];
      if (odd == 3) return static_cast<unsigned>((sum + 5) / 2);
      if (odd == 0 || odd == 2) return static_cast<unsigned>((sum + 4) / 2);
      return static_cast<unsigned>((sum + 3) / 2);
    }
    default:
      throw std::invalid_argument("alpha_formula: only A, B and E components have a closed form");
  }
}

std::vector<unsigned> component_count_bound(unsigned /*n*/, const CandidateComponent& special) {
  const long r = 2L * alpha_formula(special) - static_cast<long>(special.vertex_count()) + 2;
  if (r == 2 || r == 3) return {static_cast<unsigned>(r)};
  return {};
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Structured:
      return "structured";
    case SearchMode::AllGraphs:
      return "all-graphs";
    case SearchMode::Unicyclic:
      return "unicyclic";
  }
  return {};
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "structured") return SearchMode::Structured;
  if (text == "all-graphs") return SearchMode::AllGraphs;
  if (text == "unicyclic") return SearchMode::Unicyclic;
  throw std::invalid_argument("unknown search mode '" + std::string(text) + "'");
}

std::set<CanonicalKey> ClassReport::keys() const {
  std::set<CanonicalKey> out;
  for (const auto& m : members) out.insert(m.key);
  return out;
}

bool ClassReport::contains(const Graph& g) const { return keys().contains(canonical_key(g)); }

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  std::mutex error_mutex;
  std::exception_ptr error;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

// Keys for every family member of a given vertex count, built once per size.
const std::map<CanonicalKey, std::string>& family_keys(std::size_t v) {
  static std::mutex mutex;
  static std::map<std::size_t, std::map<CanonicalKey, std::string>> by_size;
  std::lock_guard lock(mutex);
  if (auto it = by_size.find(v); it != by_size.end()) return it->second;
  std::map<CanonicalKey, std::string> keys;
  const int n = static_cast<int>(v);
  auto add = [&](const GraphSpec& s) {
    keys.try_emplace(canonical_key(build_graph(s)), to_string(s));
  };
  if (n >= 3) add(GraphSpec::cycle(n));
  if (n >= 1) add(GraphSpec::path(n));
  if (n >= 4) add(GraphSpec::dn(n));
  if (n == 4) {
    add({GraphSpec::Kind::K1_3, {}, {}, {}});
    add({GraphSpec::Kind::K4MinusE, {}, {}, {}});
  }
  for (int m1 = 1; m1 + 1 <= n - 3; ++m1) add(GraphSpec::a(m1, n - 3 - m1));
  for (int m1 = 1; m1 + 1 <= n - 3; ++m1) add(GraphSpec::e(m1, n - 3 - m1));
  for (int m1 = 0; m1 + 2 <= n - 4; ++m1) {
    for (int m2 = 1; m1 + m2 + 1 <= n - 4; ++m2) add(GraphSpec::b(m1, m2, n - 4 - m1 - m2));
  }
  return by_size.emplace(v, std::move(keys)).first->second;
}

std::string describe_component(const Graph& comp) {
  if (comp.vertex_count() <= kMaxCanonicalComponent) {
    const auto& keys = family_keys(comp.vertex_count());
    if (auto it = keys.find(canonical_key(comp)); it != keys.end()) return it->second;
  }
  if (comp.vertex_count() <= kMaxGraph6Vertices) return "g6:" + emit_graph6(comp);
  return "el:" + to_edge_list(comp);
}

class MemberSet {
 public:
  MemberSet(unsigned n, IntPoly target) : n_(n), target_(std::move(target)) {}

  const IntPoly& target() const { return target_; }

  void add(Graph g, IntPoly poly) {
    CanonicalKey key = canonical_key(g);
    std::lock_guard lock(mutex_);
    if (members_.contains(key)) return;
    ClassMember m;
    m.key = key;
    m.description = describe_graph(g);
    m.checks = structural_checks(g, n_);
    m.graph = std::move(g);
    m.poly = std::move(poly);
    members_.emplace(std::move(key), std::move(m));
  }

  std::vector<ClassMember> take() {
    std::vector<ClassMember> out;
    for (auto& [k, m] : members_) out.push_back(std::move(m));
    return out;
  }

 private:
  unsigned n_;
  IntPoly target_;
  std::mutex mutex_;
  std::map<CanonicalKey, ClassMember> members_;
};

Graph union_of(const std::vector<CandidateComponent>& parts) {
  std::vector<Graph> graphs;
  for (const auto& c : parts) graphs.push_back(c.build());
  return disjoint_union(graphs);
}

bool divides(const IntPoly& p, const IntPoly& q) { return try_exact_div(p, q).has_value(); }

// Multisets of proper divisors >= 3 of n, pairwise coprime, summing to n;
// returns how many reproduce the multiset of factor indices of I(C_n,x).
std::pair<std::size_t, std::size_t> divisor_multiset_scan(unsigned n) {
  std::vector<unsigned long> parts;
  for (unsigned long d : divisors(n)) {
    if (d >= 3 && d < n) parts.push_back(d);
  }
  std::vector<unsigned long> want;
  for (unsigned long d : divisors(n)) {
    if (d >= 3) want.push_back(d);
  }
  std::size_t scanned = 0;
  std::size_t matches = 0;
  std::vector<unsigned long> chosen;
  auto rec = [&](auto&& self, std::size_t from, unsigned long remaining) -> void {
    if (remaining == 0) {
      ++scanned;
      std::vector<unsigned long> have;
      for (unsigned long c : chosen) {
        for (unsigned long d : divisors(c)) {
          if (d >= 3) have.push_back(d);
        }
      }
      std::sort(have.begin(), have.end());
      if (have == want) ++matches;
      return;
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
      if (parts[i] > remaining) break;
      const bool coprime = std::all_of(chosen.begin(), chosen.end(),
                                       [&](unsigned long c) { return std::gcd(c, parts[i]) == 1; });
      if (!coprime) continue;
      chosen.push_back(parts[i]);
      self(self, i, remaining - parts[i]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, n);
  return {scanned, matches};
}

void add_special_shapes(std::vector<CandidateComponent>& out, int size) {
  using K = CandidateComponent::Kind;
  for (int m1 = 1; m1 <= size - 4; ++m1) out.push_back({K::A, {m1, size - 3 - m1}});
  for (int m1 = 1; m1 <= size - 4; ++m1) out.push_back({K::E, {m1, size - 3 - m1}});
  for (int m1 = 0; m1 <= size - 6; ++m1) {
    for (int m2 = 1; m1 + m2 <= size - 5; ++m2) out.push_back({K::B, {m1, m2, size - 4 - m1 - m2}});
  }
}

void check_structured_n(unsigned n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("class search: n must be odd and at least 3, got " +
                                std::to_string(n));
  }
  if (n > kMaxCanonicalComponent) {
    throw std::invalid_argument("class search: n = " + std::to_string(n) +
                                " exceeds the canonical labelling bound of " +
                                std::to_string(kMaxCanonicalComponent));
  }
}

}  // namespace

std::string describe_graph(const Graph& g) {
  if (g.vertex_count() == 0) return "empty";
  std::string out;
  for (const Graph& comp : connected_components(g)) {
    if (!out.empty()) out += " + ";
    out += describe_component(comp);
  }
  return out;
}

std::optional<std::string> named_alias(const Graph& component) {
  if (component.vertex_count() < 6 || component.vertex_count() > 7) return std::nullopt;
  const CanonicalKey key = canonical_key(component);
  for (const auto& id : named_graph_ids()) {
    if (canonical_key(named_graph(id)) == key) return id;
  }
  return std::nullopt;
}

ClassReport structured_class_search(unsigned n, const SearchOptions& options) {
  check_structured_n(n);
  const auto start = Clock::now();
  PolyCache local;
  PolyCache& cache = options.cache ? *options.cache : local;
  using K = CandidateComponent::Kind;

  ClassReport report;
  report.n = n;
  report.mode = SearchMode::Structured;
  MemberSet members(n, cycle_poly(n));
  const IntPoly& target = members.target();

  std::vector<std::vector<CandidateComponent>> candidates;
  candidates.push_back({{K::C, {static_cast<int>(n)}}});
  if (n >= 4) candidates.push_back({{K::D, {static_cast<int>(n)}}});
  report.stats.generated += candidates.size();

  if (n % 3 != 0) {
    const auto [scanned, matches] = divisor_multiset_scan(n);
    report.stats.generated += scanned;
    report.stats.pruned += scanned;
    if (matches != 0) {
      throw std::logic_error(
          "class search: a product of smaller cycle polynomials reproduces I(C_" +
          std::to_string(n) + ",x)");
    }
  } else if (n > 3) {
    const IntPoly after_c3 = poly_exact_div(target, cycle_poly(3));
    const int ni = static_cast<int>(n);

    auto consider = [&](std::vector<CandidateComponent> prefix, const CandidateComponent& s,
                        unsigned r, const IntPoly& quotient) {
      ++report.stats.generated;
      const auto rs = component_count_bound(n, s);
      if (std::find(rs.begin(), rs.end(), r) == rs.end()) {
        ++report.stats.pruned;
        return;
      }
      if (options.divisor_pruning && !divides(quotient, indpoly(s.build(), cache))) {
        ++report.stats.pruned;
        return;
      }
      prefix.push_back(s);
      candidates.push_back(std::move(prefix));
    };

    std::vector<CandidateComponent> shapes;
    add_special_shapes(shapes, ni - 3);
    for (const auto& s : shapes) consider({{K::C3, {}}}, s, 2, after_c3);

    for (int m = 5; m + 5 <= ni - 3; m += 2) {
      if (m % 3 == 0) continue;
      if (options.divisor_pruning && ni % m != 0) {
        ++report.stats.pruned;
        continue;
      }
      const auto quotient = options.divisor_pruning
                                ? try_exact_div(after_c3, cycle_poly(static_cast<unsigned>(m)))
                                : std::optional<IntPoly>(after_c3);
      if (!quotient) {
        ++report.stats.pruned;
        continue;
      }
      shapes.clear();
      add_special_shapes(shapes, ni - 3 - m);
      for (const auto& s : shapes) consider({{K::C3, {}}, {K::C, {m}}}, s, 3, *quotient);
    }
  }

  // Exact test of every surviving candidate; verified members containing
  // C_m (m >= 4) are expanded into all C_m / D_m substitutions.
  std::vector<std::vector<std::vector<CandidateComponent>>> variants(candidates.size());
  std::atomic<std::size_t> tested{0};
  parallel_for(candidates.size(), options.threads, [&](std::size_t i) {
    const auto& parts = candidates[i];
    ++tested;
    Graph g = union_of(parts);
    IntPoly p = indpoly(g, cache);
    if (p != target) return;
    members.add(std::move(g), std::move(p));
    std::vector<std::size_t> cycles;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k].kind == K::C && parts[k].params[0] >= 4) cycles.push_back(k);
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << cycles.size()); ++mask) {
      auto alt = parts;
      for (std::size_t b = 0; b < cycles.size(); ++b) {
        if (mask >> b & 1) alt[cycles[b]].kind = K::D;
      }
      variants[i].push_back(std::move(alt));
    }
  });
  std::vector<std::vector<CandidateComponent>> expanded;
  for (auto& v : variants) {
    for (auto& alt : v) expanded.push_back(std::move(alt));
  }
  parallel_for(expanded.size(), options.threads, [&](std::size_t i) {
    ++tested;
    Graph g = union_of(expanded[i]);
    IntPoly p = indpoly(g, cache);
    if (p == target) members.add(std::move(g), std::move(p));
  });
  report.stats.polynomial_tested = tested;
  report.members = members.take();
  report.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

namespace {

// Every labelled graph on n vertices with exactly n edges, edges chosen in
// lexicographic order. The running value sum_v C(deg v, 2) - triangles never
// decreases as edges are added, so any branch overshooting C_n's value is cut.
class AllGraphsSearch {
 public:
  AllGraphsSearch(unsigned n, const IntPoly& target) : n_(static_cast<int>(n)) {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
    }
    const Graph cn = cycle_graph(n_);
    target_i3_ = static_cast<long>(n_) - static_cast<long>(subgraph_census(cn).triangles);
    for (const auto& c : target.coeffs()) target_coeffs_.push_back(c.get_ui());
  }

  std::size_t first_edge_choices() const {
    return pairs_.size() - static_cast<std::size_t>(n_) + 1;
  }

  struct Result {
    std::vector<Graph> members;
    std::size_t leaves = 0;
    std::size_t cuts = 0;
    std::size_t tested = 0;
  };

  Result run_from(std::size_t first) const {
    State st;
    st.chosen.push_back(static_cast<int>(first));
    apply(st, first, +1);
    Result res;
    dfs(st, first + 1, res);
    return res;
  }

 private:
  struct State {
    std::array<std::uint16_t, 16> adj{};
    std::array<int, 16> deg{};
    long i3 = 0;
    std::vector<int> chosen;
  };

  void apply(State& st, std::size_t idx, int sign) const {
    const auto [u, v] = pairs_[idx];
    if (sign > 0) {
      st.i3 += st.deg[u] + st.deg[v] - std::popcount(static_cast<unsigned>(st.adj[u] & st.adj[v]));
      st.adj[u] |= static_cast<std::uint16_t>(1u << v);
      st.adj[v] |= static_cast<std::uint16_t>(1u << u);
      ++st.deg[u];
      ++st.deg[v];
    } else {
      st.adj[u] &= static_cast<std::uint16_t>(~(1u << v));
      st.adj[v] &= static_cast<std::uint16_t>(~(1u << u));
      --st.deg[u];
      --st.deg[v];
      st.i3 -= st.deg[u] + st.deg[v] - std::popcount(static_cast<unsigned>(st.adj[u] & st.adj[v]));
    }
  }

  void dfs(State& st, std::size_t from, Result& res) const {
    if (st.i3 > target_i3_) {
      ++res.cuts;
      return;
    }
    if (st.chosen.size() == static_cast<std::size_t>(n_)) {
      ++res.leaves;
      if (st.i3 != target_i3_) return;
      ++res.tested;
      if (matches(st)) {
        std::vector<Edge> edges;
        for (int idx : st.chosen) edges.emplace_back(pairs_[idx].first, pairs_[idx].second);
        res.members.emplace_back(n_, std::move(edges));
      }
      return;
    }
    const std::size_t need = static_cast<std::size_t>(n_) - st.chosen.size();
    for (std::size_t idx = from; idx + need <= pairs_.size(); ++idx) {
      apply(st, idx, +1);
      st.chosen.push_back(static_cast<int>(idx));
      dfs(st, idx + 1, res);
      st.chosen.pop_back();
      apply(st, idx, -1);
    }
  }

  // Independent-set counts by size over all vertex masks.
  bool matches(const State& st) const {
    std::array<unsigned long, 17> counts{};
    const unsigned full = 1u << n_;
    for (unsigned mask = 0; mask < full; ++mask) {
      bool independent = true;
      for (unsigned rest = mask; rest && independent; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        independent = (st.adj[v] & mask) == 0;
      }
      if (independent) ++counts[std::popcount(mask)];
    }
    std::size_t deg = counts.size();
    while (deg > 0 && counts[deg - 1] == 0) --deg;
    if (deg != target_coeffs_.size()) return false;
    for (std::size_t k = 0; k < deg; ++k) {
      if (counts[k] != target_coeffs_[k]) return false;
    }
    return true;
  }

  int n_;
  std::vector<std::pair<int, int>> pairs_;
  long target_i3_ = 0;
  std::vector<unsigned long> target_coeffs_;
};

ClassReport all_graphs_search(unsigned n, const SearchOptions& options) {
  if (n < 3 || n > kMaxAllGraphsN) {
    throw std::invalid_argument("all-graphs search: n must be in 3.." +
                                std::to_string(kMaxAllGraphsN) + ", got " + std::to_string(n));
  }
  const auto start = Clock::now();
  ClassReport report;
  report.n = n;
  report.mode = SearchMode::AllGraphs;
  MemberSet members(n, cycle_poly(n));
  const AllGraphsSearch search(n, members.target());
  std::vector<AllGraphsSearch::Result> results(search.first_edge_choices());
  parallel_for(results.size(), options.threads,
               [&](std::size_t i) { results[i] = search.run_from(i); });
  for (auto& r : results) {
    report.stats.generated += r.leaves;
    report.stats.pruned += r.cuts;
    report.stats.polynomial_tested += r.tested;
    for (auto& g : r.members) members.add(g, members.target());
  }
  report.members = members.take();
  // Confirm with the recursive engine, which shares no code with the mask count.
  for (const auto& m : report.members) {
    if (indpoly(m.graph) != members.target()) {
      throw std::logic_error("all-graphs search: member polynomial mismatch");
    }
  }
  report.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

ClassReport unicyclic_search(unsigned n, const SearchOptions& options) {
  if (n < 3 || n > kMaxUnicyclicN || n % 2 == 0) {
    throw std::invalid_argument("unicyclic search: n must be odd in 3.." +
                                std::to_string(kMaxUnicyclicN) + ", got " + std::to_string(n));
  }
  const auto start = Clock::now();
  PolyCache local;
  PolyCache& cache = options.cache ? *options.cache : local;
  ClassReport report;
  report.n = n;
  report.mode = SearchMode::Unicyclic;
  MemberSet members(n, cycle_poly(n));
  const IntPoly& target = members.target();

  // Components other than C3 have excess >= 0 and C3 has -1; a member sums to
  // 0, so a component's excess is at most the number of C3 components beside
  // it. That number is bounded by the remaining vertices and, with divisor
  // pruning, by the multiplicity of 1 + 3x in I(C_n,x).
  long triangle_power = static_cast<long>(n / 3);
  if (options.divisor_pruning) {
    triangle_power = 0;
    IntPoly q = target;
    while (auto next = try_exact_div(q, cycle_poly(3))) {
      q = *next;
      ++triangle_power;
    }
  }

  struct Piece {
    Graph graph;
    IntPoly poly;
    long excess;
    unsigned size;
  };
  std::vector<Piece> pieces;
  for (unsigned v = 3; v <= n; ++v) {
    const long budget = std::min<long>(triangle_power, static_cast<long>((n - v) / 3));
    const auto graphs = enumerate_unicyclic(v, budget);
    report.stats.generated += graphs.size();
    std::vector<Piece> batch(graphs.size());
    std::vector<char> keep(graphs.size(), 0);
    parallel_for(graphs.size(), options.threads, [&](std::size_t i) {
      IntPoly p = indpoly(graphs[i], cache);
      if (options.divisor_pruning && !divides(target, p)) return;
      batch[i] = {graphs[i], std::move(p), triangle_degree_excess(graphs[i]), v};
      keep[i] = 1;
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (keep[i]) {
        pieces.push_back(std::move(batch[i]));
      } else {
        ++report.stats.pruned;
      }
    }
  }

  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from, unsigned remaining, long excess,
                 const IntPoly& acc) -> void {
    if (excess - static_cast<long>(remaining / 3) > 0) {
      ++report.stats.pruned;
      return;
    }
    if (remaining == 0) {
      if (excess != 0) return;
      ++report.stats.polynomial_tested;
      // With pruning acc is the quotient still to be matched, else the product.
      const bool ok = options.divisor_pruning ? acc == IntPoly{1} : acc == target;
      if (!ok) return;
      std::vector<Graph> parts;
      for (std::size_t i : chosen) parts.push_back(pieces[i].graph);
      Graph g = disjoint_union(parts);
      IntPoly p = indpoly(g, cache);
      if (p == target) members.add(std::move(g), std::move(p));
      return;
    }
    for (std::size_t i = from; i < pieces.size(); ++i) {
      const Piece& pc = pieces[i];
      if (pc.size > remaining) continue;
      IntPoly next;
      if (options.divisor_pruning) {
        auto q = try_exact_div(acc, pc.poly);
        if (!q) {
          ++report.stats.pruned;
          continue;
        }
        next = std::move(*q);
      } else {
        next = acc * pc.poly;
      }
      chosen.push_back(i);
      self(self, i, remaining - pc.size, excess + pc.excess, next);
      chosen.pop_back();
    }
  };
  rec(rec, 0, n, 0, options.divisor_pruning ? target : IntPoly{1});

  report.members = members.take();
  report.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace

ClassReport exhaustive_class_search(unsigned n, SearchMode mode, const SearchOptions& options) {
  switch (mode) {
    case SearchMode::AllGraphs:
      return all_graphs_search(n, options);
    case SearchMode::Unicyclic:
      return unicyclic_search(n, options);
    case SearchMode::Structured:
      break;
  }
  throw std::invalid_argument("exhaustive_class_search: mode must be all-graphs or unicyclic");
}

std::string render_class_text(const ClassReport& report) {
  std::ostringstream os;
  os << "I(C_" << report.n << ") [" << to_string(report.mode) << "]: " << report.members.size()
     << (report.members.size() == 1 ? " member" : " members") << '\n';
  if (!report.members.empty())
    os << "I(C_" << report.n << ",x) = " << report.members.front().poly.to_string() << '\n';
  for (const auto& m : report.members) {
    os << "  " << m.description;
    std::string aliases;
    for (const Graph& comp : connected_components(m.graph)) {
      if (auto id = named_alias(comp)) aliases += (aliases.empty() ? "" : ", ") + *id;
    }
    if (!aliases.empty()) os << "  (" << aliases << ')';
    if (!m.checks.all_pass()) {
      os << "  FAILED:";
      for (std::size_t c = 0; c < StructuralChecks::kClauses; ++c) {
        if (m.checks.clauses[c] == false) os << ' ' << StructuralChecks::kNames[c];
      }
    }
    os << '\n';
  }
  os << "candidates " << report.stats.generated << ", pruned " << report.stats.pruned
     << ", polynomial-tested " << report.stats.polynomial_tested << '\n';
  return os.str();
}

}  // namespace grapheq
