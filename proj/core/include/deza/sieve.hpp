#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace deza {

/// Arithmetic necessary conditions on Deza and DDG parameter tuples.
/// "feasible" never claims that a graph exists.

enum class RuleStatus { pass, fail, skipped };

struct RuleOutcome {
  std::string id;
  RuleStatus status = RuleStatus::skipped;
  std::string witness;
  /// Passed, but only through a degenerate boundary case.
  bool warning = false;
};

struct SieveVerdict {
  bool feasible = true;
  std::vector<RuleOutcome> trace;

  const RuleOutcome* first_failure() const;
  const RuleOutcome* rule(const std::string& id) const;
  bool failed(const std::string& id) const;
  /// "feasible" or "infeasible: R2 beta=3/2".
  std::string summary() const;
};

class SieveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rules R1..R6; requires 0 <= a <= b <= k < v.
SieveVerdict deza_sieve(std::int64_t v, std::int64_t k, std::int64_t b,
                        std::int64_t a);

/// Rules D1..D8; requires positive v, k, m, n and 0 <= l1, l2 <= k < v.
SieveVerdict ddg_sieve(std::int64_t v, std::int64_t k, std::int64_t lambda1,
                       std::int64_t lambda2, std::int64_t m, std::int64_t n);

/// True iff x^2 = c (mod n) for some x; brute force. Requires n >= 1.
bool quadratic_residue(std::int64_t c, std::int64_t n);

/// Eigenvalue multiplicities found by rule D4.
struct Multiplicities {
  std::int64_t f1 = 0, f2 = 0, g1 = 0, g2 = 0;
};

/// Nonnegative integers f1+f2 = m(n-1), g1+g2 = m-1 (any split summing to
/// v-1 for improper tuples) with k + (f1-f2)sqrt(k-l1) + (g1-g2)sqrt(k^2-l2 v)
/// = 0 exactly. nullopt when no solution exists or a radicand is negative.
std::optional<Multiplicities> solve_multiplicities(std::int64_t v, std::int64_t k,
                                                   std::int64_t lambda1,
                                                   std::int64_t lambda2,
                                                   std::int64_t m,
                                                   std::int64_t n);

/// Named tuple families for range scans.
struct ScanRow {
  std::vector<std::int64_t> tuple;
  SieveVerdict verdict;
};

struct ScanResult {
  std::string family;
  std::int64_t max = 0;
  std::size_t scanned = 0;
  std::size_t feasible = 0;
  std::vector<ScanRow> survivors;
};

/// Families:
///   deza-b=k-2   all (v,k,k-2,a), 3 <= k < v <= max, a < k-2
///   ddg-n2       all (2m,k,k-2,a,m,2), 1 <= a <= k <= max, k < 2m <= k^2+2
///   ddg-n3456    all (mn,k,k-2,l2,m,n), n in 3..6, k <= max, m*n <= 4*max
/// Throws SieveError for an unknown family.
ScanResult sieve_scan(const std::string& family, std::int64_t max);

std::vector<std::string> scan_families();

}  // namespace deza
