#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deza/canonical.hpp"
#include "deza/classify.hpp"
#include "deza/ddg.hpp"
#include "deza/graph.hpp"

namespace deza {

class CensusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest order the generator accepts (vertex sets are 64-bit masks).
inline constexpr std::size_t kGeneratorHardCap = 64;

/// Generation limits. `max_vertices` defaults to 20 and is read from
/// DEZA_MAX_VERTICES when set.
///
/// Desk scale means every k for v <= 10 and k <= 4 for v <= 14; anything
/// else needs `long_run`.
struct GenerationLimits {
  std::size_t max_vertices = 20;
  bool long_run = false;

  static GenerationLimits from_environment();
  static bool desk_scale(std::size_t v, std::size_t k) noexcept;

  /// Throws CensusError naming the violated limit.
  void check(std::size_t v, std::size_t k) const;
};

struct GenerateOptions {
  /// Monotone prune: discard partial graphs in which some pair already
  /// has more than this many common neighbours.
  std::optional<std::size_t> max_common;
  /// Optional monotone predicate on partial graphs: returning false must
  /// imply that no completion is wanted.
  std::function<bool(const Graph&)> keep;
  /// Worker threads; output order does not depend on it.
  unsigned jobs = 1;
};

/// One representative per isomorphism class of k-regular graphs on v
/// vertices (surviving the prune), by vertex-by-vertex canonical
/// augmentation. Throws CensusError when v*k is odd, k >= v or v exceeds
/// kGeneratorHardCap.
std::vector<Graph> generate_regular(std::size_t v, std::size_t k,
                                    const GenerateOptions& options = {});

/// Streaming single-threaded variant of generate_regular.
void for_each_regular(std::size_t v, std::size_t k, const GenerateOptions& options,
                      const std::function<void(const Graph&)>& visit);

/// Conjunction of terms joined by '+':
///   connected | deza | deza(v,k,b,a) with '*' wildcards
///   b=k-N | b=N | a=k-N | a=N | strictly-deza | srg | ddg | zero-lambda
/// The empty string accepts everything.
class CensusFilter {
 public:
  CensusFilter() = default;
  /// Throws CensusError on a malformed term.
  static CensusFilter parse(const std::string& text);

  const std::string& text() const noexcept { return text_; }

  bool matches(const ClassificationReport& report,
               const std::optional<DdgResult>& ddg) const;

  /// Upper bound on common-neighbour counts implied by the filter for
  /// degree k, usable as a generation prune.
  std::optional<std::size_t> max_common(std::size_t k) const;

  bool needs_ddg() const noexcept { return ddg_; }

 private:
  struct Value {
    bool relative = false;  // k - offset
    std::int64_t amount = 0;
    std::optional<std::size_t> resolve(std::size_t k) const;
  };

  std::string text_;
  bool connected_ = false;
  bool deza_ = false;
  std::optional<std::size_t> v_, k_;
  std::optional<Value> b_, a_;
  bool strictly_ = false;
  bool srg_ = false;
  bool ddg_ = false;
  bool zero_lambda_ = false;
};

struct CensusOptions {
  std::size_t vmin = 1, vmax = 1;
  std::size_t kmin = 0, kmax = 0;
  CensusFilter filter;
  unsigned jobs = 1;
  /// Use the filter's common-neighbour bound as a generation prune.
  bool prune = true;
  GenerationLimits limits = GenerationLimits::from_environment();
};

struct CensusRecord {
  /// Canonical representative.
  Graph graph;
  std::string graph6;
  std::size_t v = 0, k = 0;
  ClassificationReport report;
  std::optional<DdgParams> ddg;
  std::string certificate_hash;
  std::optional<std::size_t> prune;
};

struct Census {
  CensusOptions options;
  std::vector<CensusRecord> records;
  /// Graphs produced by the generator before filtering.
  std::size_t generated = 0;
};

/// Enumerates every (v,k) in range with v*k even and k < v, filters, and
/// returns records sorted by (v, k, certificate bytes).
Census census(const CensusOptions& options);

/// Builds the record for one graph (canonicalises it first).
CensusRecord make_record(const Graph& g, std::optional<std::size_t> prune = {});

inline constexpr const char* kCensusFormatVersion = "deza-census/1";

/// One metadata line (JSON, fixed key order, no trailing newline).
std::string record_json(const CensusRecord& record, const CensusOptions& options);

/// Writes `<prefix>.g6` and `<prefix>.meta.jsonl`, appending line by line
/// and syncing both files to disk at the end. Throws std::runtime_error on
/// I/O failure.
void write_census(const std::string& prefix, const Census& census);

}  // namespace deza
