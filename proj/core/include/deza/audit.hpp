#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deza/census.hpp"

namespace deza {

struct AuditBounds {
  std::size_t vmax = 14;
  std::optional<std::size_t> kmin;
  /// Overrides the desk-scale degree policy for every v.
  std::optional<std::size_t> kmax;
  unsigned jobs = 1;
  GenerationLimits limits = GenerationLimits::from_environment();
};

/// Default bounds per classification audit: vmax 14 for ids 1 and 3, 10 for 2.
AuditBounds default_audit_bounds(int theorem);

struct AuditFinding {
  std::string graph6;
  std::string parameters;
  bool connected = true;
  std::optional<std::size_t> diameter;
  /// Case label the graph was matched to, empty when unmatched.
  std::string matched_case;
};

struct Discrepancy {
  enum class Kind { found_unexpected, expected_missing, parameter_mismatch };
  Kind kind;
  std::string subject;
  std::string detail;
};

std::string to_string(Discrepancy::Kind kind);

struct AuditReport {
  int theorem = 0;
  AuditBounds bounds;
  /// (v,k) cells that were searched.
  std::vector<std::pair<std::size_t, std::size_t>> searched;
  std::string scope;
  std::vector<std::string> expected;
  std::vector<AuditFinding> found;
  std::vector<Discrepancy> discrepancies;

  std::size_t matches() const;
  bool clean() const noexcept { return discrepancies.empty(); }
};

/// Exhaustive check of one classification statement over the bounds:
///   1  connected Deza graphs (v,k,k-2,0)
///   2  connected Deza graphs (v,k,k-2,a)
///   3  proper DDGs whose larger count is k-2
/// Throws CensusError when the bounds exceed the generation limits and
/// std::invalid_argument for an unknown id.
AuditReport audit_theorem(int theorem, const AuditBounds& bounds);

}  // namespace deza
