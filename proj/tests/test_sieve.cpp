#include <gtest/gtest.h>

#include "deza/catalog.hpp"
#include "deza/census.hpp"
#include "deza/sieve.hpp"

using namespace deza;

namespace {

bool brute_residue(std::int64_t c, std::int64_t n) {
  const std::int64_t target = ((c % n) + n) % n;
  for (std::int64_t x = 0; x < n; ++x)
    if ((x * x) % n == target) return true;
  return false;
}

}  // namespace

TEST(DezaSieve, BetaMustBeIntegral) {
  auto v = deza_sieve(18, 5, 3, 1);
  EXPECT_FALSE(v.feasible);
  ASSERT_NE(v.first_failure(), nullptr);
  EXPECT_EQ(v.first_failure()->id, "R2");
  EXPECT_EQ(v.first_failure()->witness, "beta=3/2");
  EXPECT_EQ(v.summary(), "infeasible: R2 beta=3/2");
}

TEST(DezaSieve, KnownGraphsPass) {
  for (const auto& e : catalog()) {
    auto r = classify(e.build());
    if (!r.deza) continue;
    const auto& p = *r.deza;
    auto v = deza_sieve(p.v, p.k, p.b, p.a);
    EXPECT_TRUE(v.feasible) << e.name << " " << v.summary();
    EXPECT_EQ(v.summary(), "feasible");
  }
}

TEST(DezaSieve, ParityRule) {
  auto v = deza_sieve(9, 3, 1, 0);
  EXPECT_FALSE(v.feasible);
  EXPECT_EQ(v.first_failure()->id, "R1");
}

TEST(DezaSieve, TraceCoversEveryRule) {
  auto v = deza_sieve(8, 4, 2, 0);
  for (const char* id : {"R1", "R2", "R3", "R4", "R5", "R6"}) EXPECT_NE(v.rule(id), nullptr) << id;
}

TEST(DezaSieve, RejectsOutOfRangeTuples) {
  EXPECT_THROW(deza_sieve(8, 4, 1, 2), SieveError);
  EXPECT_THROW(deza_sieve(4, 4, 2, 0), SieveError);
  EXPECT_THROW(deza_sieve(8, 4, 5, 0), SieveError);
}

TEST(DdgSieve, KnownGraphsPass) {
  for (const auto& e : catalog()) {
    auto d = ddg_detect(e.build());
    if (!d.proper) continue;
    const auto& p = d.proper->params;
    auto v = ddg_sieve(p.v, p.k, p.lambda1, p.lambda2, p.m, p.n);
    EXPECT_TRUE(v.feasible) << e.name << " " << v.summary();
  }
}

TEST(DdgSieve, MultiplicitiesForFano) {
  auto m = solve_multiplicities(14, 3, 1, 0, 2, 7);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->f1 + m->f2, 12);
  EXPECT_EQ(m->g1 + m->g2, 1);
  EXPECT_EQ(m->f1, m->f2);
  EXPECT_EQ(m->g2, 1);
}

TEST(DdgSieve, RationalAndIrrationalRootsSeparate) {
  auto m = solve_multiplicities(10, 5, 4, 2, 5, 2);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->f1, 0);
  EXPECT_EQ(m->f2, 5);
  EXPECT_EQ(m->g1, m->g2);
  EXPECT_TRUE(ddg_sieve(10, 5, 4, 2, 5, 2).feasible);
}

TEST(DdgSieve, ClassSizeProductMustBeOrder) {
  auto v = ddg_sieve(14, 3, 1, 0, 2, 6);
  EXPECT_FALSE(v.feasible);
}

TEST(DdgSieve, TwoClassesNeedZeroCrossCount) {
  auto v = ddg_sieve(12, 4, 2, 1, 6, 2);
  EXPECT_FALSE(v.feasible);
  ASSERT_NE(v.rule("D8"), nullptr);
}

TEST(SieveScan, DdgPairsRejectedByTheLastRuleAreAlsoRejectedEarlier) {
  auto r = sieve_scan("ddg-n2", 10);
  EXPECT_GT(r.scanned, 0u);
  for (std::int64_t k = 2; k <= 10; ++k)
    for (std::int64_t a = 1; a <= k; ++a)
      for (std::int64_t m = std::max<std::int64_t>(2, k / 2 + 1); 2 * m <= k * k + 2; ++m) {
        auto v = ddg_sieve(2 * m, k, k - 2, a, m, 2);
        if (v.failed("D8")) {
          EXPECT_TRUE(v.failed("D2") || v.failed("D4")) << 2 * m << "," << k << "," << a;
        }
      }
}

TEST(SieveScan, LargerClassCountsAllRejected) {
  auto r = sieve_scan("ddg-n3456", 8);
  EXPECT_GT(r.scanned, 0u);
  EXPECT_EQ(r.feasible, 0u);
  EXPECT_TRUE(r.survivors.empty());
}

TEST(SieveScan, DezaFamilyContainsKnownGraphs) {
  auto r = sieve_scan("deza-b=k-2", 16);
  EXPECT_EQ(r.feasible, r.survivors.size());
  auto has = [&](std::vector<std::int64_t> t) {
    for (const auto& s : r.survivors)
      if (s.tuple == t) return true;
    return false;
  };
  EXPECT_TRUE(has({8, 4, 2, 0}));
  EXPECT_TRUE(has({14, 3, 1, 0}));
  EXPECT_TRUE(has({16, 4, 2, 0}));
  EXPECT_FALSE(has({18, 5, 3, 1}));
  EXPECT_THROW(sieve_scan("nope", 5), SieveError);
}

TEST(SieveSoundness, EveryGeneratedDezaGraphPasses) {
  CensusOptions o;
  o.vmin = 4;
  o.vmax = 10;
  o.kmin = 2;
  o.kmax = 9;
  o.filter = CensusFilter::parse("deza");
  auto c = census(o);
  ASSERT_FALSE(c.records.empty());
  for (const auto& rec : c.records) {
    const auto& p = *rec.report.deza;
    EXPECT_TRUE(deza_sieve(p.v, p.k, p.b, p.a).feasible) << rec.graph6;
    if (rec.ddg) {
      const auto& d = *rec.ddg;
      EXPECT_TRUE(ddg_sieve(d.v, d.k, d.lambda1, d.lambda2, d.m, d.n).feasible) << rec.graph6;
    }
  }
}

TEST(QuadraticResidue, AgreesWithDefinition) {
  EXPECT_TRUE(quadratic_residue(2, 7));
  EXPECT_FALSE(quadratic_residue(2, 3));
  EXPECT_TRUE(quadratic_residue(0, 1));
  for (std::int64_t n = 1; n < 40; ++n)
    for (std::int64_t c = -5; c < 45; ++c) EXPECT_EQ(quadratic_residue(c, n), brute_residue(c, n)) << c << " " << n;
  EXPECT_THROW(quadratic_residue(1, 0), std::invalid_argument);
}
