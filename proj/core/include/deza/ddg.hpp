#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deza/classify.hpp"
#include "deza/graph.hpp"

namespace deza {

struct DdgParams {
  std::size_t v = 0, k = 0, lambda1 = 0, lambda2 = 0, m = 0, n = 0;
  friend bool operator==(const DdgParams&, const DdgParams&) = default;
  friend auto operator<=>(const DdgParams&, const DdgParams&) = default;
};

std::string to_string(const DdgParams& p);

using VertexPartition = std::vector<std::vector<std::size_t>>;
using QuotientMatrix = std::vector<std::vector<std::size_t>>;

/// A divisible design graph structure on a graph: the canonical partition
/// and its parameters. Classes are sorted, and ordered by smallest vertex.
struct DdgResult {
  DdgParams params;
  VertexPartition partition;
  bool proper = false;
  QuotientMatrix quotient;
};

struct ImproperForm {
  enum class Kind { single_class, singletons };
  Kind kind;
  std::size_t lambda;
};

struct DdgDetection {
  std::optional<DdgResult> proper;
  std::vector<ImproperForm> improper;
};

/// Tests the two count-induced relations "equal or exactly c common
/// neighbours" for c in the Deza value pair. At most one can give a proper
/// partition.
DdgDetection ddg_detect(const Graph& g);

/// Checks `partition` against the DDG definition directly; returns the
/// result when every same-class pair has one count and every cross-class
/// pair another.
std::optional<DdgResult> ddg_from_partition(const Graph& g,
                                            const VertexPartition& partition);

/// Classes of the relation "equal or exactly c common neighbours", or
/// nullopt when that relation is not transitive.
std::optional<VertexPartition> count_relation_classes(const Graph& g,
                                                      std::size_t c);

/// When a < 2b - k (or beta = 1) the b-relation is an equivalence; returns
/// its classes. Throws std::invalid_argument("shortcut inapplicable")
/// otherwise, and InvariantViolation if the relation is not transitive.
VertexPartition rho_closure_shortcut(const Graph& g, const DezaParams& deza);

struct EquitableResult {
  std::optional<QuotientMatrix> quotient;
  /// (vertex, class) of the first vertex whose count into that class
  /// differs from the first vertex of its own class.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Throws std::invalid_argument for a partition that does not cover the
/// vertex set disjointly.
EquitableResult equitable_check(const Graph& g,
                                const VertexPartition& partition);

/// Common neighbourhood W(B) of a class B and the derived flags.
struct ClassAudit {
  std::size_t class_id = 0;
  std::vector<std::size_t> common_neighbourhood;
  std::size_t w_size = 0;
  bool coclique = false;
  bool n_divides_w = false;
};

std::vector<ClassAudit> class_audits(const Graph& g, const DdgResult& ddg);

void validate_partition(std::size_t order, const VertexPartition& partition);

}  // namespace deza
