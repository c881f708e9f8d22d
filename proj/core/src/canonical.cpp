#include "deza/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <deque>
#include <limits>
#include <numeric>

#include "deza/graph6.hpp"

namespace deza {

namespace {

using u32 = std::uint32_t;
constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return (h ^ x) * 0x100000001b3ULL + 0x632be59bd9b4e019ULL;
}

struct Partition {
  std::vector<u32> lab;
  // cell_end[s] is one past the last position of the cell starting at s;
  // only meaningful at cell starts.
  std::vector<u32> cell_end;
  u32 cells = 0;

  bool discrete() const noexcept { return cells == lab.size(); }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g)
      : g_(g), n_(static_cast<u32>(g.order())), words_(g.words_per_row()) {}

  CanonicalForm run() {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), u32{0});
    p.cell_end.assign(n_, 0);
    if (n_ > 0) {
      p.cell_end[0] = n_;
      p.cells = 1;
    }
    std::vector<u32> queue;
    if (n_ > 0) queue.push_back(0);
    trace_.push_back(refine(p, queue));
    search(p, 0);

    CanonicalForm out;
    auto& cert = out.certificate;
    cert.labeling.assign(best_lab_.begin(), best_lab_.end());
    std::vector<std::size_t> perm(n_);
    for (u32 i = 0; i < n_; ++i) perm[best_lab_[i]] = i;
    cert.bytes = graph6_encode(g_.relabeled(perm));

    UnionFind uf(n_);
    for (const auto& gen : gens_) {
      out.generators.emplace_back(gen.begin(), gen.end());
      for (u32 x = 0; x < n_; ++x) uf.unite(x, gen[x]);
    }
    out.orbit.resize(n_);
    for (u32 x = 0; x < n_; ++x) out.orbit[x] = uf.find(x);
    return out;
  }

 private:
  std::uint64_t refine(Partition& p, const std::vector<u32>& initial) {
    std::vector<char> queued(n_, 0);
    std::deque<u32> queue;
    for (auto s : initial) {
      queued[s] = 1;
      queue.push_back(s);
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    std::vector<std::uint64_t> splitter(words_);
    std::vector<u32> count(n_);
    while (!queue.empty() && !p.discrete()) {
      const u32 s = queue.front();
      queue.pop_front();
      queued[s] = 0;
      std::fill(splitter.begin(), splitter.end(), 0);
      for (u32 pos = s; pos < p.cell_end[s]; ++pos) {
        auto x = p.lab[pos];
        splitter[x >> 6] |= std::uint64_t{1} << (x & 63);
      }
      for (u32 start = 0; start < n_;) {
        const u32 end = p.cell_end[start];
        if (end - start > 1) {
          bool uniform = true;
          for (u32 pos = start; pos < end; ++pos) {
            auto r = g_.row(p.lab[pos]);
            u32 c = 0;
            for (std::size_t w = 0; w < words_; ++w) {
              c += static_cast<u32>(std::popcount(r[w] & splitter[w]));
            }
            count[p.lab[pos]] = c;
            if (count[p.lab[pos]] != count[p.lab[start]]) uniform = false;
          }
          if (!uniform) {
            std::sort(p.lab.begin() + start, p.lab.begin() + end,
                      [&](u32 a, u32 b) {
                        return count[a] != count[b] ? count[a] < count[b]
                                                    : a < b;
                      });
            h = mix(h, start);
            u32 piece = start;
            for (u32 pos = start + 1; pos <= end; ++pos) {
              if (pos == end || count[p.lab[pos]] != count[p.lab[piece]]) {
                p.cell_end[piece] = pos;
                h = mix(h, (std::uint64_t{count[p.lab[piece]]} << 32) |
                               (pos - piece));
                if (piece != start) ++p.cells;
                if (!queued[piece]) {
                  queued[piece] = 1;
                  queue.push_back(piece);
                }
                piece = pos;
              }
            }
          }
        }
        start = end;
      }
    }
    return mix(h, p.cells);
  }

  std::uint64_t individualize(Partition& p, u32 start, u32 vertex) {
    const u32 end = p.cell_end[start];
    auto it = std::find(p.lab.begin() + start, p.lab.begin() + end, vertex);
    std::iter_swap(p.lab.begin() + start, it);
    std::sort(p.lab.begin() + start + 1, p.lab.begin() + end);
    p.cell_end[start] = start + 1;
    p.cell_end[start + 1] = end;
    ++p.cells;
    return mix(refine(p, {start}), start);
  }

  static int compare_prefix(const std::vector<std::uint64_t>& node,
                            const std::vector<std::uint64_t>& best) {
    const auto common = std::min(node.size(), best.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (node[i] != best[i]) return node[i] < best[i] ? -1 : 1;
    }
    // A leaf below this node has a trace extending `node`; if `best` is a
    // proper prefix, every such leaf compares greater.
    return node.size() > best.size() ? 1 : 0;
  }

  std::vector<std::uint64_t> leaf_key(const Partition& p) const {
    std::vector<std::uint64_t> key(std::size_t{n_} * words_, 0);
    for (u32 i = 0; i < n_; ++i) {
      for (u32 j = 0; j < n_; ++j) {
        if (g_.adjacent(p.lab[i], p.lab[j])) {
          key[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
        }
      }
    }
    return key;
  }

  void add_automorphism(const std::vector<u32>& from,
                        const std::vector<u32>& to) {
    std::vector<u32> gamma(n_);
    bool identity = true;
    for (u32 i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) gens_.push_back(std::move(gamma));
  }

  std::size_t leaf(const Partition& p) {
    auto key = leaf_key(p);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_trace_ = best_trace_ = trace_;
      first_lab_ = best_lab_ = p.lab;
      first_key_ = best_key_ = key;
      first_path_ = path_;
      return kNoJump;
    }
    if (trace_ == first_trace_ && key == first_key_) {
      add_automorphism(first_lab_, p.lab);
      std::size_t d = 0;
      while (d < path_.size() && d < first_path_.size() &&
             path_[d] == first_path_[d]) {
        ++d;
      }
      return d;
    }
    int c = 0;
    if (trace_ != best_trace_) {
      c = std::lexicographical_compare(trace_.begin(), trace_.end(),
                                       best_trace_.begin(), best_trace_.end())
              ? -1
              : 1;
    } else if (key != best_key_) {
      c = key < best_key_ ? -1 : 1;
    }
    if (c < 0) {
      best_trace_ = trace_;
      best_lab_ = p.lab;
      best_key_ = std::move(key);
    } else if (c == 0) {
      add_automorphism(best_lab_, p.lab);
    }
    return kNoJump;
  }

  bool same_orbit_as_explored(u32 v, const std::vector<u32>& explored) {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gen : gens_) {
      bool fixes = std::ranges::all_of(path_, [&](u32 x) { return gen[x] == x; });
      if (!fixes) continue;
      any = true;
      for (u32 x = 0; x < n_; ++x) uf.unite(x, gen[x]);
    }
    if (!any) return false;
    auto root = uf.find(v);
    return std::ranges::any_of(explored,
                               [&](u32 x) { return uf.find(x) == root; });
  }

  std::size_t search(const Partition& p, std::size_t level) {
    if (have_leaf_) {
      bool on_first = trace_.size() <= first_trace_.size() &&
                      std::equal(trace_.begin(), trace_.end(),
                                 first_trace_.begin());
      if (!on_first && compare_prefix(trace_, best_trace_) > 0) {
        return kNoJump;
      }
    }
    if (p.discrete()) return leaf(p);

    // First smallest non-singleton cell.
    u32 target = n_;
    u32 target_size = n_ + 1;
    for (u32 s = 0; s < n_; s = p.cell_end[s]) {
      auto size = p.cell_end[s] - s;
      if (size > 1 && size < target_size) {
        target = s;
        target_size = size;
      }
    }
    std::vector<u32> candidates(p.lab.begin() + target,
                                p.lab.begin() + p.cell_end[target]);
    std::sort(candidates.begin(), candidates.end());

    std::vector<u32> explored;
    for (auto v : candidates) {
      if (!explored.empty() && same_orbit_as_explored(v, explored)) continue;
      Partition child = p;
      trace_.push_back(individualize(child, target, v));
      path_.push_back(v);
      auto r = search(child, level + 1);
      trace_.pop_back();
      path_.pop_back();
      explored.push_back(v);
      if (r != kNoJump && r < level) return r;
    }
    return kNoJump;
  }

  const Graph& g_;
  u32 n_;
  std::size_t words_;

  bool have_leaf_ = false;
  std::vector<std::uint64_t> trace_, first_trace_, best_trace_;
  std::vector<u32> path_, first_path_;
  std::vector<u32> first_lab_, best_lab_;
  std::vector<std::uint64_t> first_key_, best_key_;
  std::vector<std::vector<u32>> gens_;
};

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t CanonicalCertificate::hash() const noexcept {
  return fnv1a64(bytes);
}

std::string CanonicalCertificate::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash()));
  return buf;
}

std::vector<std::size_t> CanonicalForm::positions() const {
  std::vector<std::size_t> pos(certificate.labeling.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    pos[certificate.labeling[i]] = i;
  }
  return pos;
}

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

CanonicalCertificate canonical_certificate(const Graph& g) {
  return canonical_form(g).certificate;
}

Graph canonical_graph(const Graph& g) {
  return graph6_decode(canonical_certificate(g).bytes);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace deza
