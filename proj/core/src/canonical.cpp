#include "grapheq/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <numeric>

#include "base64.hpp"

namespace grapheq {

std::string CanonicalKey::to_base64() const { return base64_encode(bytes_); }

CanonicalKey CanonicalKey::from_base64(std::string_view text) {
  auto bytes = base64_decode(text);
  if (!bytes) throw std::invalid_argument("canonical key: invalid base64");
  return CanonicalKey(std::move(*bytes));
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  const auto& b = k.bytes();
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(b.data()), b.size()));
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kWidth = 64;

// Ordered partition of positions 0..n-1. lab[p] is the vertex at position p;
// for every cell starting at p, end[p] is one past its last position.
struct Partition {
  std::array<std::uint8_t, kWidth> lab{};
  std::array<std::uint8_t, kWidth> end{};
  int n = 0;
  int cells = 0;

  bool discrete() const { return cells == n; }
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(static_cast<int>(g.vertex_count())) {
    for (int v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj_[v] |= Mask{1} << w;
    }
  }

  CanonicalForm run() {
    Partition root;
    root.n = n_;
    root.cells = 1;
    for (int p = 0; p < n_; ++p) root.lab[p] = static_cast<std::uint8_t>(p);
    root.end[0] = static_cast<std::uint8_t>(n_);
    std::vector<int> splitters{0};
    refine(root, splitters);

    std::vector<int> path;
    search(root, 0, true, path);

    CanonicalForm out;
    out.order.assign(best_order_.begin(), best_order_.begin() + n_);
    out.key = CanonicalKey(encode_block(best_rows_, n_));
    return out;
  }

  static std::vector<std::uint8_t> encode_block(const std::vector<Mask>& rows, int n) {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n));
    std::uint8_t cur = 0;
    int filled = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        cur = static_cast<std::uint8_t>((cur << 1) | ((rows[i] >> j) & 1u));
        if (++filled == 8) {
          out.push_back(cur);
          cur = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) out.push_back(static_cast<std::uint8_t>(cur << (8 - filled)));
    return out;
  }

 private:
  static constexpr int kNoAbort = INT_MAX;

  void refine(Partition& part, std::vector<int>& queue) const {
    std::array<bool, kWidth> queued{};
    for (int s : queue) queued[s] = true;
    std::array<int, kWidth> count{};
    std::array<std::uint8_t, kWidth> scratch{};
    std::size_t head = 0;
    while (head < queue.size() && !part.discrete()) {
      const int s = queue[head++];
      queued[s] = false;
      Mask splitter = 0;
      for (int p = s; p < part.end[s]; ++p) splitter |= Mask{1} << part.lab[p];

      for (int c = 0; c < n_;) {
        const int e = part.end[c];
        if (e - c > 1) {
          int lo = INT_MAX;
          int hi = -1;
          for (int p = c; p < e; ++p) {
            count[p] = std::popcount(adj_[part.lab[p]] & splitter);
            lo = std::min(lo, count[p]);
            hi = std::max(hi, count[p]);
          }
          if (lo != hi) {
            // Counting sort of the cell by neighbour count, ascending.
            int w = c;
            std::vector<int> starts;
            for (int k = lo; k <= hi; ++k) {
              const int start = w;
              for (int p = c; p < e; ++p) {
                if (count[p] == k) scratch[w++] = part.lab[p];
              }
              if (w > start) starts.push_back(start);
            }
            for (int p = c; p < e; ++p) part.lab[p] = scratch[p];
            for (std::size_t i = 0; i < starts.size(); ++i) {
              const int st = starts[i];
              const int en = i + 1 < starts.size() ? starts[i + 1] : e;
              part.end[st] = static_cast<std::uint8_t>(en);
              if (!queued[st]) {
                queued[st] = true;
                queue.push_back(st);
              }
            }
            part.cells += static_cast<int>(starts.size()) - 1;
          }
        }
        c = e;
      }
    }
  }

  std::vector<Mask> rows_of(const Partition& part) const {
    std::array<int, kWidth> pos{};
    for (int p = 0; p < n_; ++p) pos[part.lab[p]] = p;
    std::vector<Mask> rows(n_, 0);
    for (int p = 0; p < n_; ++p) {
      Mask nb = adj_[part.lab[p]];
      Mask row = 0;
      while (nb) {
        const int w = std::countr_zero(nb);
        nb &= nb - 1;
        row |= Mask{1} << pos[w];
      }
      rows[p] = row;
    }
    return rows;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t m = std::min(a.size(), b.size());
    std::size_t k = 0;
    while (k < m && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  void record_automorphism(const std::array<std::uint8_t, kWidth>& from,
                           const std::array<std::uint8_t, kWidth>& to) {
    if (automorphisms_.size() >= 256) return;
    std::array<std::uint8_t, kWidth> gamma{};
    for (int p = 0; p < n_; ++p) gamma[from[p]] = to[p];
    automorphisms_.push_back(gamma);
  }

  int leaf(const Partition& part, const std::vector<int>& path) {
    if (++leaves_ > kCanonicalLeafBudget) {
      throw CanonicalizationRefused("canonical labelling search exceeded its leaf budget");
    }
    std::vector<Mask> rows = rows_of(part);
    if (!have_first_) {
      have_first_ = true;
      first_rows_ = rows;
      first_order_ = part.lab;
      first_path_ = path;
      best_rows_ = std::move(rows);
      best_order_ = part.lab;
      best_path_ = path;
      return kNoAbort;
    }
    if (rows == first_rows_) {
      record_automorphism(first_order_, part.lab);
      return common_prefix(first_path_, path);
    }
    if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = part.lab;
      best_path_ = path;
      return kNoAbort;
    }
    if (rows == best_rows_) {
      record_automorphism(best_order_, part.lab);
      return common_prefix(best_path_, path);
    }
    return kNoAbort;
  }

  int orbit_root(std::array<int, kWidth>& parent, int v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  // Returns the depth to resume at; values below `depth` unwind further.
  int search(const Partition& part, int depth, bool first_path, std::vector<int>& path) {
    if (part.discrete()) return leaf(part, path);

    int target = 0;
    while (part.end[target] - target == 1) target = part.end[target];
    const int target_end = part.end[target];

    std::vector<int> explored;
    for (int i = target; i < target_end; ++i) {
      const int v = part.lab[i];
      if (first_path && !explored.empty() && !automorphisms_.empty()) {
        std::array<int, kWidth> parent{};
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : automorphisms_) {
          for (int x = 0; x < n_; ++x) {
            const int a = orbit_root(parent, x);
            const int b = orbit_root(parent, gamma[x]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
          }
        }
        const int rv = orbit_root(parent, v);
        const bool equivalent = std::any_of(explored.begin(), explored.end(),
                                            [&](int u) { return orbit_root(parent, u) == rv; });
        if (equivalent) continue;
      }
      explored.push_back(v);

      Partition child = part;
      std::swap(child.lab[target], child.lab[i]);
      child.end[target] = static_cast<std::uint8_t>(target + 1);
      child.end[target + 1] = static_cast<std::uint8_t>(target_end);
      ++child.cells;
      std::vector<int> splitters{target};
      refine(child, splitters);

      path.push_back(v);
      const int resume = search(child, depth + 1, first_path && explored.size() == 1, path);
      path.pop_back();
      if (resume < depth) return resume;
    }
    return kNoAbort;
  }

  int n_;
  std::array<Mask, kWidth> adj_{};

  bool have_first_ = false;
  std::vector<Mask> first_rows_;
  std::array<std::uint8_t, kWidth> first_order_{};
  std::vector<int> first_path_;
  std::vector<Mask> best_rows_;
  std::array<std::uint8_t, kWidth> best_order_{};
  std::vector<int> best_path_;
  std::vector<std::array<std::uint8_t, kWidth>> automorphisms_;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form_connected(const Graph& component) {
  const std::size_t n = component.vertex_count();
  if (n > kMaxCanonicalComponent) {
    throw CanonicalizationRefused("component with " + std::to_string(n) +
                                  " vertices exceeds the canonical labelling bound of " +
                                  std::to_string(kMaxCanonicalComponent));
  }
  if (n == 0) return {};
  return Canonicalizer(component).run();
}

CanonicalKey canonical_key(const Graph& g) {
  std::vector<std::vector<std::uint8_t>> blocks;
  for (const auto& vs : component_vertex_sets(g)) {
    std::vector<bool> keep(g.vertex_count(), false);
    for (Vertex v : vs) keep[v] = true;
    blocks.push_back(canonical_form_connected(induced_subgraph(g, keep)).key.bytes());
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<std::uint8_t> bytes;
  for (const auto& b : blocks) bytes.insert(bytes.end(), b.begin(), b.end());
  return CanonicalKey(std::move(bytes));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  return canonical_key(g) == canonical_key(h);
}

Graph graph_from_key(const CanonicalKey& key) {
  const auto& b = key.bytes();
  std::size_t at = 0;
  std::size_t offset = 0;
  std::vector<Edge> edges;
  while (at < b.size()) {
    const std::size_t n = b[at++];
    if (n == 0 || n > kMaxCanonicalComponent) {
      throw std::invalid_argument("canonical key: bad component size");
    }
    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t nbytes = (bits + 7) / 8;
    if (at + nbytes > b.size()) throw std::invalid_argument("canonical key: truncated block");
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++bit) {
        if ((b[at + bit / 8] >> (7 - bit % 8)) & 1u) {
          edges.emplace_back(static_cast<Vertex>(offset + i), static_cast<Vertex>(offset + j));
        }
      }
    }
    if (bits % 8 != 0 && (b[at + nbytes - 1] & ((1u << (8 - bits % 8)) - 1)) != 0) {
      throw std::invalid_argument("canonical key: nonzero padding");
    }
    at += nbytes;
    offset += n;
  }
  return Graph(offset, std::move(edges));
}

}  // namespace grapheq
