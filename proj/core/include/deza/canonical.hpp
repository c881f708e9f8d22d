#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

/// Canonical labelling of a graph together with the bytes of the
/// canonically relabelled adjacency.
///
/// Two graphs are isomorphic exactly when their `bytes` agree. The labelling
/// itself is only determined up to automorphisms.
struct CanonicalCertificate {
  /// labeling[i] is the input vertex placed at canonical position i.
  std::vector<std::size_t> labeling;
  /// graph6 line of the canonical graph.
  std::string bytes;

  std::uint64_t hash() const noexcept;
  std::string hash_hex() const;

  friend bool operator==(const CanonicalCertificate& a,
                         const CanonicalCertificate& b) noexcept {
    return a.bytes == b.bytes;
  }
};

using Permutation = std::vector<std::size_t>;

/// Canonical labelling plus the automorphism group information collected
/// by the same search.
struct CanonicalForm {
  CanonicalCertificate certificate;
  /// Generators of Aut(g); identity is never listed.
  std::vector<Permutation> generators;
  /// orbit[u] is the smallest vertex in the Aut(g)-orbit of u.
  std::vector<std::size_t> orbit;

  /// Canonical position of input vertex u.
  std::vector<std::size_t> positions() const;
};

/// Individualisation-refinement search with automorphism pruning. The
/// canonical leaf is the least (refinement trace, relabelled adjacency)
/// over the whole search tree, so the result is exact.
CanonicalForm canonical_form(const Graph& g);

CanonicalCertificate canonical_certificate(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// 64-bit FNV-1a; used for certificate hashes in census files.
std::uint64_t fnv1a64(const std::string& bytes) noexcept;

}  // namespace deza
