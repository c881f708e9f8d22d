#include "deza/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>

namespace deza {

namespace {

std::string pair_text(std::size_t u, std::size_t w) {
  return "(" + std::to_string(u) + "," + std::to_string(w) + ")";
}

}  // namespace

Graph::Graph(std::size_t order) : order_(order), words_((order + 63) / 64) {
  if (order > kVertexCap) {
    throw GraphError("vertex count " + std::to_string(order) +
                     " exceeds the cap of " + std::to_string(kVertexCap));
  }
  bits_.assign(order_ * words_, 0);
}

std::size_t Graph::degree(std::size_t u) const noexcept {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order_);
  for (std::size_t u = 0; u < order_; ++u) out[u] = degree(u);
  return out;
}

std::vector<std::size_t> Graph::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < order_; ++w) {
    if (adjacent(u, w)) out.push_back(w);
  }
  return out;
}

std::size_t Graph::common_neighbours(std::size_t u,
                                     std::size_t w) const noexcept {
  const auto* a = bits_.data() + u * words_;
  const auto* b = bits_.data() + w * words_;
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_; ++i) {
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return c;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t u = 0; u < order_; ++u) total += degree(u);
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < order_; ++u) {
    for (std::size_t w = u + 1; w < order_; ++w) {
      if (adjacent(u, w)) out.emplace_back(u, w);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != order_) {
    throw GraphError("permutation length does not match vertex count");
  }
  std::vector<bool> seen(order_, false);
  for (auto p : perm) {
    if (p >= order_ || seen[p]) throw GraphError("not a permutation");
    seen[p] = true;
  }
  GraphBuilder b(order_);
  for (auto [u, w] : edges()) b.add_edge(perm[u], perm[w]);
  return std::move(b).build();
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

void GraphBuilder::set(std::size_t u, std::size_t w, bool on) noexcept {
  auto& g = graph_;
  auto mask_w = std::uint64_t{1} << (w & 63);
  auto mask_u = std::uint64_t{1} << (u & 63);
  auto& a = g.bits_[u * g.words_ + (w >> 6)];
  auto& b = g.bits_[w * g.words_ + (u >> 6)];
  if (on) {
    a |= mask_w;
    b |= mask_u;
  } else {
    a &= ~mask_w;
    b &= ~mask_u;
  }
}

GraphBuilder& GraphBuilder::add_edge(std::size_t u, std::size_t w) {
  if (u == w) throw GraphError("loop edge " + pair_text(u, w));
  if (u >= order() || w >= order()) {
    throw GraphError("endpoint out of range in edge " + pair_text(u, w));
  }
  set(u, w, true);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(std::size_t u, std::size_t w) {
  if (u == w || u >= order() || w >= order()) {
    throw GraphError("invalid edge " + pair_text(u, w));
  }
  set(u, w, false);
  return *this;
}

Graph make_graph(std::size_t order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, w] : edges) b.add_edge(u, w);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t w = u + 1; w < g.order(); ++w) {
      if (!g.adjacent(u, w)) b.add_edge(u, w);
    }
  }
  return std::move(b).build();
}

Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw GraphError("disjoint union of an empty list");
  std::size_t total = 0;
  for (const auto& p : parts) total += p.order();
  GraphBuilder b(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (auto [u, w] : p.edges()) b.add_edge(offset + u, offset + w);
    offset += p.order();
  }
  return std::move(b).build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto n = g.order();
  const auto m = h.order();
  // vertex (a,b) -> a*m + b
  GraphBuilder out(n * m);
  for (std::size_t a = 0; a < n; ++a) {
    for (auto [b1, b2] : h.edges()) out.add_edge(a * m + b1, a * m + b2);
  }
  for (std::size_t b = 0; b < m; ++b) {
    for (auto [a1, a2] : g.edges()) out.add_edge(a1 * m + b, a2 * m + b);
  }
  return std::move(out).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) b.add_edge(u, w);
  }
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return std::move(b).build();
}

Graph hypercube(std::size_t dimension) {
  if (dimension >= 64 || (std::size_t{1} << dimension) > kVertexCap) {
    throw GraphError("hypercube of dimension " + std::to_string(dimension) +
                     " exceeds the vertex cap of " +
                     std::to_string(kVertexCap));
  }
  const std::size_t n = std::size_t{1} << dimension;
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t bit = 0; bit < dimension; ++bit) {
      auto w = u ^ (std::size_t{1} << bit);
      if (u < w) b.add_edge(u, w);
    }
  }
  return std::move(b).build();
}

Graph grid(std::size_t rows, std::size_t cols) {
  return cartesian_product(complete_graph(rows), complete_graph(cols));
}

Graph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  }
  GraphBuilder b(subsets.size());
  for (std::size_t x = 0; x < subsets.size(); ++x) {
    for (std::size_t y = x + 1; y < subsets.size(); ++y) {
      auto [a1, a2] = subsets[x];
      auto [b1, b2] = subsets[y];
      if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2) b.add_edge(x, y);
    }
  }
  return std::move(b).build();
}

namespace {

bool fano_incident(std::size_t point, std::size_t line) {
  for (std::size_t d : {1, 2, 4}) {
    if ((line + d) % 7 == point) return true;
  }
  return false;
}

Graph fano_bipartite(bool incidence) {
  GraphBuilder b(14);
  for (std::size_t p = 0; p < 7; ++p) {
    for (std::size_t l = 0; l < 7; ++l) {
      if (fano_incident(p, l) == incidence) b.add_edge(p, 7 + l);
    }
  }
  return std::move(b).build();
}

}  // namespace

Graph fano_incidence() { return fano_bipartite(true); }
Graph fano_non_incidence() { return fano_bipartite(false); }

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kInf);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < g.order(); ++w) {
      if (g.adjacent(u, w) && dist[w] == kInf) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::ranges::none_of(dist, [](auto d) {
    return d == std::numeric_limits<std::size_t>::max();
  });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < g.order(); ++w) {
        if (!g.adjacent(u, w)) continue;
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace deza
