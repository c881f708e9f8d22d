#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deza {

/// Largest vertex count a Graph may hold.
inline constexpr std::size_t kVertexCap = 512;

using Edge = std::pair<std::size_t, std::size_t>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computed object violates an invariant that the
/// mathematics guarantees; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Immutable simple undirected graph stored as bit rows.
///
/// Row i holds the neighbourhood of vertex i as ceil(v/64) machine words,
/// so a common-neighbour count is one AND + popcount pass over two rows.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(std::size_t u, std::size_t w) const noexcept {
    return (bits_[u * words_ + (w >> 6)] >> (w & 63)) & 1U;
  }

  std::span<const std::uint64_t> row(std::size_t u) const noexcept {
    return {bits_.data() + u * words_, words_};
  }

  std::size_t degree(std::size_t u) const noexcept;
  std::vector<std::size_t> degrees() const;
  std::vector<std::size_t> neighbours(std::size_t u) const;

  /// |N(u) ∩ N(w)|, no argument checks.
  std::size_t common_neighbours(std::size_t u, std::size_t w) const noexcept;

  std::size_t edge_count() const noexcept;
  std::vector<Edge> edges() const;

  /// π·g: vertex u of this graph becomes vertex perm[u] of the result.
  Graph relabeled(std::span<const std::size_t> perm) const;

  /// Induced subgraph on `vertices`, in the given order.
  Graph induced(std::span<const std::size_t> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order) : graph_(order) {}
  explicit GraphBuilder(Graph g) : graph_(std::move(g)) {}

  std::size_t order() const noexcept { return graph_.order_; }

  /// Adds {u,w}; throws GraphError on a loop or out-of-range endpoint.
  GraphBuilder& add_edge(std::size_t u, std::size_t w);
  GraphBuilder& remove_edge(std::size_t u, std::size_t w);
  bool adjacent(std::size_t u, std::size_t w) const noexcept {
    return graph_.adjacent(u, w);
  }

  Graph build() const& { return graph_; }
  Graph build() && { return std::move(graph_); }

 private:
  void set(std::size_t u, std::size_t w, bool on) noexcept;

  Graph graph_;
};

Graph make_graph(std::size_t order, std::span<const Edge> edges);
inline Graph make_graph(std::size_t order, std::initializer_list<Edge> edges) {
  return make_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g);
Graph disjoint_union(std::span<const Graph> parts);
Graph cartesian_product(const Graph& g, const Graph& h);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph hypercube(std::size_t dimension);

/// K_rows □ K_cols; grid(4,2) is the 8-vertex strictly Deza graph and
/// grid(3,3) the rook graph.
Graph grid(std::size_t rows, std::size_t cols);

/// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
Graph petersen();

/// Points 0..6, lines 7..13; line j is {j+1, j+2, j+4} mod 7.
Graph fano_incidence();
Graph fano_non_incidence();

/// Breadth-first distances from `source`; unreachable vertices get
/// std::size_t max.
std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace deza
