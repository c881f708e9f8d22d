#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "deza/graph.hpp"

namespace deza {

using Rational = boost::rational<long long>;

/// Renders n or n/d.
std::string to_string(const Rational& r);

struct DezaParams {
  std::size_t v = 0, k = 0, b = 0, a = 0;
  friend bool operator==(const DezaParams&, const DezaParams&) = default;
  friend auto operator<=>(const DezaParams&, const DezaParams&) = default;
};

struct SrgParams {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const DezaParams& p);
std::string to_string(const SrgParams& p);

enum class Degenerate { none, complete, edgeless };

struct ClassificationReport {
  std::size_t v = 0;
  bool connected = false;
  std::optional<std::size_t> regular;
  /// Distinct common-neighbour counts over unordered pairs, ascending.
  std::vector<std::size_t> common_values;
  std::optional<DezaParams> deza;
  std::optional<SrgParams> srg;
  bool strictly_deza = false;
  std::optional<std::size_t> zero_lambda;
  /// nullopt for a disconnected graph.
  std::optional<std::size_t> diameter;
  Degenerate degenerate = Degenerate::none;
  /// Counts of vertices sharing a (resp. b) common neighbours with any
  /// vertex; set only for Deza graphs.
  std::optional<std::size_t> alpha, beta;

  friend bool operator==(const ClassificationReport&,
                         const ClassificationReport&) = default;
};

/// |N(u) ∩ N(w)|; throws GraphError when u == w or out of range.
std::size_t common_neighbor_count(const Graph& g, std::size_t u, std::size_t w);

/// Graph diameter; nullopt when disconnected.
std::optional<std::size_t> diameter(const Graph& g);

ClassificationReport classify(const Graph& g);

/// beta = (k(k-1) - a(v-1)) / (b-a). Throws std::invalid_argument when
/// b == a.
Rational beta_formula(long long v, long long k, long long b, long long a);

/// Checks a (0,lambda)-graph against the bounds v <= 2^k and
/// diameter <= k (applicable for lambda >= 2 on regular graphs; equality
/// forces the hypercube).
struct ZeroLambdaAudit {
  std::size_t lambda = 0;
  std::size_t v = 0;
  std::optional<std::size_t> k;
  std::size_t diameter = 0;
  bool bounds_applicable = false;
  bool vertex_bound_holds = true;
  bool diameter_bound_holds = true;
  bool vertex_bound_equality = false;
  bool diameter_bound_equality = false;
  /// Set when an equality case occurred: whether g is the k-cube.
  std::optional<bool> hypercube_confirmed;
};

/// Throws std::invalid_argument when g is not a (0,lambda)-graph.
ZeroLambdaAudit zero_lambda_audit(const Graph& g);

}  // namespace deza
