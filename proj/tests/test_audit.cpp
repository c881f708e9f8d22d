#include <gtest/gtest.h>

#include <algorithm>

#include "deza/audit.hpp"
#include "deza/canonical.hpp"
#include "deza/graph6.hpp"

using namespace deza;

namespace {

AuditBounds small(std::size_t vmax) {
  AuditBounds b;
  b.vmax = vmax;
  b.limits = GenerationLimits{};
  return b;
}

const AuditFinding* find_case(const AuditReport& r, const std::string& prefix) {
  for (const auto& f : r.found)
    if (f.matched_case.rfind(prefix, 0) == 0) return &f;
  return nullptr;
}

}  // namespace

TEST(Audit, ZeroSmallerCountUpToTen) {
  auto r = audit_theorem(1, small(10));
  EXPECT_TRUE(r.clean()) << r.discrepancies.size();
  EXPECT_EQ(r.matches(), r.found.size());
  ASSERT_NE(find_case(r, "case 1"), nullptr);
  ASSERT_NE(find_case(r, "case 5"), nullptr);
  EXPECT_EQ(find_case(r, "case 1")->graph6, canonical_certificate(grid(4, 2)).bytes);
  for (const auto& f : r.found) {
    auto rep = classify(graph6_decode(f.graph6));
    EXPECT_TRUE(rep.connected);
    EXPECT_EQ(rep.deza->a, 0u);
    EXPECT_EQ(rep.deza->b + 2, rep.deza->k);
  }
}

TEST(Audit, GeneralSmallerCountUpToNine) {
  auto r = audit_theorem(2, small(9));
  EXPECT_TRUE(r.clean());
  std::vector<std::string> params;
  for (const auto& f : r.found) params.push_back(f.parameters);
  for (const char* p : {"(8,4,2,0)", "(8,4,2,1)", "(9,4,2,1)"})
    EXPECT_NE(std::find(params.begin(), params.end(), p), params.end()) << p;
}

TEST(Audit, DdgAuditFlagsListedParameters) {
  auto b = small(10);
  b.kmax = 4;
  auto r = audit_theorem(3, b);
  ASSERT_NE(find_case(r, "3"), nullptr);
  auto mismatch = std::count_if(r.discrepancies.begin(), r.discrepancies.end(), [](const Discrepancy& d) {
    return d.kind == Discrepancy::Kind::parameter_mismatch;
  });
  EXPECT_EQ(mismatch, 1);
  EXPECT_EQ(r.discrepancies.size(), 1u);
  EXPECT_EQ(to_string(Discrepancy::Kind::parameter_mismatch), "parameter-mismatch");
}

TEST(Audit, SearchedCellsRespectBounds) {
  auto b = small(12);
  b.kmin = 3;
  auto r = audit_theorem(1, b);
  for (auto [v, k] : r.searched) {
    EXPECT_LE(v, 12u);
    EXPECT_GE(k, 3u);
    EXPECT_LT(k, v);
    EXPECT_EQ((v * k) % 2, 0u);
    if (v > 10) EXPECT_LE(k, 4u);
  }
}

TEST(Audit, Errors) {
  EXPECT_THROW(audit_theorem(4, small(8)), std::invalid_argument);
  auto b = small(16);
  b.kmax = 6;
  EXPECT_THROW(audit_theorem(1, b), CensusError);
  EXPECT_EQ(default_audit_bounds(2).vmax, 10u);
  EXPECT_EQ(default_audit_bounds(1).vmax, 14u);
}
