#pragma once

#include <pentakirch/matrix.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pentakirch {

enum class Variant { Cylinder, Moebius };

inline std::string_view to_string(Variant v) {
  return v == Variant::Cylinder ? "cylinder" : "moebius";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "cylinder") return Variant::Cylinder;
  if (s == "moebius" || s == "mobius") return Variant::Moebius;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "' (expected cylinder or moebius)");
}

/// One member of the two chain families: P_n (cylinder) or P'_n (Moebius).
struct GraphFamily {
  Variant variant = Variant::Cylinder;
  int n = 2;

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

inline void require_chain_length(int n) {
  if (n < 2) {
    throw std::domain_error("chain length n must be >= 2 (got " + std::to_string(n) + ")");
  }
}

enum class VertexKind { Upper, Lower, Middle };

/// Structured vertex name. Upper/Lower indices run 1..2n, Middle 1..n.
struct VertexLabel {
  VertexKind kind = VertexKind::Upper;
  int index = 1;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

inline VertexLabel upper(int j) { return {VertexKind::Upper, j}; }
inline VertexLabel lower(int j) { return {VertexKind::Lower, j}; }
inline VertexLabel middle(int k) { return {VertexKind::Middle, k}; }

/// Flat id layout: Upper block [0, 2n), Lower block [2n, 4n), Middle block [4n, 5n).
inline std::size_t vertex_id(VertexLabel v, int n) {
  const int limit = v.kind == VertexKind::Middle ? n : 2 * n;
  if (v.index < 1 || v.index > limit) {
    throw std::out_of_range("vertex index " + std::to_string(v.index) + " outside [1, " +
                            std::to_string(limit) + "]");
  }
  switch (v.kind) {
    case VertexKind::Upper:
      return static_cast<std::size_t>(v.index - 1);
    case VertexKind::Lower:
      return static_cast<std::size_t>(2 * n + v.index - 1);
    case VertexKind::Middle:
      return static_cast<std::size_t>(4 * n + v.index - 1);
  }
  return 0;
}

inline VertexLabel vertex_label(std::size_t id, int n) {
  const auto i = static_cast<int>(id);
  if (i < 0 || i >= 5 * n) throw std::out_of_range("vertex id out of range");
  if (i < 2 * n) return upper(i + 1);
  if (i < 4 * n) return lower(i - 2 * n + 1);
  return middle(i - 4 * n + 1);
}

/// Simple undirected graph with sorted adjacency lists.
///
/// Values are immutable after construction. Graphs built by the chain
/// builders remember their family; fixtures built from edge lists do not.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::optional<GraphFamily> family = std::nullopt) {
    Graph g;
    g.adjacency_.assign(vertex_count, {});
    g.family_ = family;
    for (auto [u, v] : edges) {
      if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      g.adjacency_[u].push_back(v);
      g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
        throw std::invalid_argument("multi-edge in edge list");
      }
    }
    g.edge_count_ = edges.size();
    return g;
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::optional<GraphFamily>& family() const noexcept { return family_; }

  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  bool has_edge(std::size_t u, std::size_t v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
      for (std::size_t v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
  std::optional<GraphFamily> family_;
};

namespace detail {

inline Graph build_chain(int n, Variant variant) {
  require_chain_length(n);
  auto id = [n](VertexLabel v) { return vertex_id(v, n); };
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(7 * n));
  for (int j = 1; j < 2 * n; ++j) {
    edges.emplace_back(id(upper(j)), id(upper(j + 1)));
    edges.emplace_back(id(lower(j)), id(lower(j + 1)));
  }
  if (variant == Variant::Cylinder) {
    edges.emplace_back(id(upper(2 * n)), id(upper(1)));
    edges.emplace_back(id(lower(2 * n)), id(lower(1)));
  } else {
    edges.emplace_back(id(upper(2 * n)), id(lower(1)));
    edges.emplace_back(id(lower(2 * n)), id(upper(1)));
  }
  for (int k = 1; k <= n; ++k) {
    edges.emplace_back(id(upper(2 * k - 1)), id(lower(2 * k - 1)));
    edges.emplace_back(id(middle(k)), id(upper(2 * k)));
    edges.emplace_back(id(middle(k)), id(lower(2 * k)));
  }
  return Graph::from_edges(static_cast<std::size_t>(5 * n), edges, GraphFamily{variant, n});
}

}  // namespace detail

/// Linear pentagonal cylinder P_n on 5n vertices and 7n edges.
inline Graph build_pentagonal_cylinder(int n) { return detail::build_chain(n, Variant::Cylinder); }

/// Pentagonal Moebius chain P'_n: the cylinder with both closure edges twisted.
inline Graph build_pentagonal_moebius(int n) { return detail::build_chain(n, Variant::Moebius); }

inline Graph build_chain(GraphFamily f) { return detail::build_chain(f.n, f.variant); }

/// Degree matrix minus adjacency matrix.
template <typename S>
DenseMatrix<S> laplacian(const Graph& g) {
  DenseMatrix<S> l(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    l(v, v) = S(static_cast<long>(g.degree(v)));
    for (std::size_t u : g.neighbors(v)) l(v, u) = S(-1);
  }
  return l;
}

/// BFS hop counts from one source; -1 marks unreachable vertices.
inline std::vector<std::int64_t> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  std::queue<std::size_t> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        frontier.push(u);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::int64_t d) { return d < 0; });
}

/// Symmetric shortest-path matrix with zero diagonal. Throws std::domain_error
/// when some pair is unreachable.
inline DenseMatrix<std::int64_t> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DenseMatrix<std::int64_t> d(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] < 0) throw std::domain_error("graph is disconnected");
      d(s, t) = dist[t];
    }
  }
  return d;
}

/// Sum of shortest-path lengths over unordered pairs.
inline std::int64_t wiener_index_bfs(const Graph& g) {
  std::int64_t twice = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    for (std::int64_t d : bfs_distances(g, s)) {
      if (d < 0) throw std::domain_error("graph is disconnected");
      twice += d;
    }
  }
  return twice / 2;
}

}  // namespace pentakirch
