#include "grapheq/unicyclic.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "grapheq/canonical.hpp"
#include "grapheq/census.hpp"

namespace grapheq {

long triangle_degree_excess(const Graph& g) {
  long x = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const long d = static_cast<long>(g.degree(v));
    if (d >= 3) x += (d - 1) * (d - 2) / 2;
  }
  return x - static_cast<long>(subgraph_census(g).triangles);
}

namespace {

long choose2(long k) { return k * (k - 1) / 2; }

// Rooted trees up to isomorphism; a tree is its root plus a multiset of child
// trees, stored as child ids in nonincreasing order.
struct RootedTree {
  int size = 1;
  std::vector<int> children;
  // sum of C(children, 2) over non-root nodes
  long inner_cost = 0;

  long cost_as_child() const { return inner_cost + choose2(static_cast<long>(children.size())); }
  long cost_on_cycle() const {
    return inner_cost + choose2(static_cast<long>(children.size()) + 1);
  }
};

class TreeCatalog {
 public:
  TreeCatalog(int max_size, long budget) : budget_(budget) {
    trees_.push_back({});
    by_size_.assign(max_size + 1, {});
    by_size_[1].push_back(0);
    for (int s = 2; s <= max_size; ++s) {
      std::vector<int> kids;
      grow(s, s - 1, static_cast<int>(trees_.size()) - 1, kids, 0);
    }
  }

  const RootedTree& operator[](int id) const { return trees_[id]; }
  const std::vector<int>& of_size(int s) const { return by_size_[s]; }

 private:
  // Children are chosen with nonincreasing ids among trees built before size s.
  void grow(int s, int remaining, int max_id, std::vector<int>& kids, long cost) {
    const long k = static_cast<long>(kids.size());
    if (remaining == 0) {
      RootedTree t;
      t.size = s;
      t.children = kids;
      t.inner_cost = cost;
      // As a child its root has children.size() children; on the cycle one more
      // neighbour counts. Keep it if the cheaper use fits.
      if (t.cost_as_child() <= budget_) {
        by_size_[s].push_back(static_cast<int>(trees_.size()));
        trees_.push_back(std::move(t));
      }
      return;
    }
    for (int id = max_id; id >= 0; --id) {
      const RootedTree& c = trees_[id];
      if (c.size > remaining) continue;
      const long next = cost + c.cost_as_child();
      if (next + choose2(k + 1) > budget_) continue;
      kids.push_back(id);
      grow(s, remaining - c.size, id, kids, next);
      kids.pop_back();
    }
  }

  long budget_;
  std::vector<RootedTree> trees_;
  std::vector<std::vector<int>> by_size_;
};

void emit_tree(const TreeCatalog& cat, int id, Vertex root, Vertex& next,
               std::vector<Edge>& edges) {
  for (int child : cat[id].children) {
    const Vertex c = next++;
    edges.emplace_back(root, c);
    emit_tree(cat, child, c, next, edges);
  }
}

}  // namespace

std::vector<Graph> enumerate_unicyclic(unsigned v, std::optional<long> max_excess) {
  const unsigned limit =
      max_excess ? static_cast<unsigned>(kMaxCanonicalComponent) : kMaxUnboundedUnicyclic;
  if (v < 3 || v > limit) {
    throw std::invalid_argument("enumerate_unicyclic: v must be in 3.." + std::to_string(limit) +
                                ", got " + std::to_string(v));
  }
  // A triangle contributes -1 to the excess, so its budget on X is one larger.
  constexpr long kUnbounded = 1L << 40;
  const long tri_budget = max_excess ? *max_excess + 1 : kUnbounded;
  if (tri_budget < 0) return {};
  const TreeCatalog cat(static_cast<int>(v) - 2, tri_budget);

  std::map<CanonicalKey, Graph> found;
  std::vector<int> slots;
  for (unsigned c = 3; c <= v; ++c) {
    const long budget = max_excess ? (c == 3 ? *max_excess + 1 : *max_excess) : kUnbounded;
    if (budget < 0) continue;
    slots.assign(c, 0);
    // Fill cycle positions in order; every position gets at least its root.
    auto place = [&](auto&& self, unsigned pos, int remaining, long left) -> void {
      if (pos == c) {
        if (remaining != 0) return;
        std::vector<Edge> edges;
        for (unsigned i = 0; i < c; ++i) edges.emplace_back(i, (i + 1) % c);
        Vertex next = c;
        for (unsigned i = 0; i < c; ++i) emit_tree(cat, slots[i], i, next, edges);
        Graph g(v, std::move(edges));
        found.try_emplace(canonical_key(g), std::move(g));
        return;
      }
      const int slots_after = static_cast<int>(c - pos - 1);
      for (int s = 1; s <= remaining - slots_after; ++s) {
        for (int id : cat.of_size(s)) {
          const long cost = cat[id].cost_on_cycle();
          if (cost > left) continue;
          slots[pos] = id;
          self(self, pos + 1, remaining - s, left - cost);
        }
      }
    };
    place(place, 0, static_cast<int>(v), budget);
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace grapheq
