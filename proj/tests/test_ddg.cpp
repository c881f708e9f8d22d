#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "deza/catalog.hpp"
#include "deza/census.hpp"
#include "deza/ddg.hpp"
#include "deza/graph6.hpp"
#include "deza/spectra.hpp"
#include "oracle.hpp"

using namespace deza;

namespace {

// Every set partition of 0..v-1 into equal classes of size at least two,
// at least two classes, checked against the definition entry by entry.
std::vector<DdgParams> brute_proper_ddgs(const oracle::Matrix& a) {
  const std::size_t v = a.size();
  std::vector<DdgParams> out;
  std::vector<std::size_t> label(v, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == v) {
      if (used < 2) return;
      std::vector<std::size_t> sizes(used, 0);
      for (auto l : label) ++sizes[l];
      if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end()) return;
      if (sizes[0] < 2) return;
      int same = -1, cross = -1;
      for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
          int c = oracle::common(a, x, y);
          int& slot = label[x] == label[y] ? same : cross;
          if (slot == -1) slot = c;
          else if (slot != c) return;
        }
      if (same == cross) return;
      std::size_t k = 0;
      for (auto e : a[0]) k += static_cast<std::size_t>(e);
      out.push_back({v, k, static_cast<std::size_t>(same), static_cast<std::size_t>(cross), used, sizes[0]});
      return;
    }
    for (std::size_t l = 0; l <= used && l < v; ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return out;
}

VertexPartition partition_by(const Graph& g, const std::function<std::size_t(std::size_t)>& key) {
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t u = 0; u < g.order(); ++u) classes[key(u)].push_back(u);
  VertexPartition p;
  for (auto& [_, c] : classes) p.push_back(c);
  return p;
}

}  // namespace

TEST(Ddg, FanoIncidence) {
  auto d = ddg_detect(fano_incidence());
  ASSERT_TRUE(d.proper);
  EXPECT_EQ(d.proper->params, (DdgParams{14, 3, 1, 0, 2, 7}));
  EXPECT_EQ(d.proper->partition[0], (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(d.proper->quotient, (QuotientMatrix{{0, 3}, {3, 0}}));
}

TEST(Ddg, FanoNonIncidence) {
  auto d = ddg_detect(fano_non_incidence());
  ASSERT_TRUE(d.proper);
  EXPECT_EQ(d.proper->params, (DdgParams{14, 4, 2, 0, 2, 7}));
  EXPECT_EQ(d.proper->quotient, (QuotientMatrix{{0, 4}, {4, 0}}));
}

TEST(Ddg, GridComputedParameters) {
  auto g = grid(4, 2);
  auto d = ddg_detect(g);
  ASSERT_TRUE(d.proper);
  EXPECT_EQ(d.proper->params, (DdgParams{8, 4, 0, 2, 4, 2}));
  for (const auto& cls : d.proper->partition) {
    ASSERT_EQ(cls.size(), 2u);
    EXPECT_TRUE(g.adjacent(cls[0], cls[1]));
    EXPECT_EQ(g.common_neighbours(cls[0], cls[1]), 0u);
  }
}

TEST(Ddg, WrongGridPartitionIsRejected) {
  auto g = grid(4, 2);
  // The two K4 columns of K4 x K2.
  auto p = partition_by(g, [](std::size_t u) { return u % 2; });
  ASSERT_EQ(p.size(), 2u);
  ASSERT_EQ(p[0].size(), 4u);
  EXPECT_FALSE(ddg_from_partition(g, p));
}

TEST(Ddg, HypercubeThreeSplitsByParity) {
  auto g = hypercube(3);
  auto d = ddg_detect(g);
  ASSERT_TRUE(d.proper);
  EXPECT_EQ(d.proper->params, (DdgParams{8, 3, 2, 0, 2, 4}));
  auto parity = partition_by(g, [](std::size_t u) { return std::popcount(u) % 2; });
  EXPECT_EQ(d.proper->partition, parity);
}

TEST(Ddg, NonDdgCatalogGraphs) {
  for (const char* name : {"petersen", "complement-petersen", "rook-3x3", "hypercube-4",
                           "complement-2-cubes", "complement-3-cubes"}) {
    const auto* e = find_catalog_entry(name);
    ASSERT_NE(e, nullptr) << name;
    EXPECT_FALSE(ddg_detect(e->build()).proper) << name;
  }
}

TEST(Ddg, ImproperFormsForSingleCount) {
  auto d = ddg_detect(complete_graph(5));
  EXPECT_FALSE(d.proper);
  ASSERT_EQ(d.improper.size(), 2u);
  EXPECT_EQ(d.improper[0].lambda, 3u);
}

TEST(Ddg, DetectionAgreesWithExhaustivePartitionSearch) {
  for (std::size_t v = 4; v <= 8; ++v)
    for (std::size_t k = 1; k < v; ++k) {
      if ((v * k) % 2) continue;
      for (const auto& g : generate_regular(v, k)) {
        auto brute = brute_proper_ddgs(oracle::adjacency(g));
        auto d = ddg_detect(g);
        ASSERT_LE(brute.size(), 1u) << graph6_encode(g);
        EXPECT_EQ(d.proper.has_value(), brute.size() == 1) << graph6_encode(g);
        if (d.proper && brute.size() == 1) EXPECT_EQ(d.proper->params, brute[0]);
      }
    }
}

TEST(Ddg, DetectedPartitionSatisfiesDefinition) {
  std::mt19937_64 rng(5);
  for (const auto& e : catalog()) {
    auto g = e.build();
    auto d = ddg_detect(g);
    if (!d.proper) continue;
    auto perm = oracle::random_permutation(g.order(), rng);
    auto h = g.relabeled(perm);
    auto dh = ddg_detect(h);
    ASSERT_TRUE(dh.proper) << e.name;
    EXPECT_EQ(dh.proper->params, d.proper->params) << e.name;
    auto a = oracle::adjacency(g);
    std::vector<std::size_t> cls(g.order());
    for (std::size_t i = 0; i < d.proper->partition.size(); ++i)
      for (auto x : d.proper->partition[i]) cls[x] = i;
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = x + 1; y < g.order(); ++y) {
        auto want = cls[x] == cls[y] ? d.proper->params.lambda1 : d.proper->params.lambda2;
        EXPECT_EQ(static_cast<std::size_t>(oracle::common(a, x, y)), want) << e.name;
      }
  }
}

TEST(Ddg, ClassAuditsForFanoNonIncidence) {
  auto g = fano_non_incidence();
  auto d = ddg_detect(g);
  ASSERT_TRUE(d.proper);
  auto audits = class_audits(g, *d.proper);
  ASSERT_EQ(audits.size(), 2u);
  auto a = oracle::adjacency(g);
  for (const auto& au : audits) {
    const auto& cls = d.proper->partition[au.class_id];
    bool coclique = true;
    for (auto x : cls)
      for (auto y : cls)
        if (x != y && a[x][y]) coclique = false;
    EXPECT_EQ(au.coclique, coclique);
    EXPECT_TRUE(au.coclique);
    std::size_t w = 0;
    for (std::size_t z = 0; z < g.order(); ++z) {
      bool all = true;
      for (auto x : cls) all = all && a[z][x];
      w += all;
    }
    EXPECT_EQ(au.w_size, w);
    EXPECT_EQ(au.n_divides_w, w % d.proper->params.n == 0);
  }
}

TEST(Ddg, RhoShortcut) {
  auto cube = hypercube(3);
  auto classes = rho_closure_shortcut(cube, *classify(cube).deza);
  EXPECT_EQ(classes, ddg_detect(cube).proper->partition);
  auto grid42 = grid(4, 2);
  EXPECT_THROW(rho_closure_shortcut(grid42, *classify(grid42).deza), std::invalid_argument);
  EXPECT_THROW(rho_closure_shortcut(fano_incidence(), *classify(fano_incidence()).deza),
               std::invalid_argument);
  EXPECT_THROW(rho_closure_shortcut(petersen(), *classify(petersen()).deza), std::invalid_argument);
}

TEST(Ddg, PerfectSquareAndSurdRadicands) {
  auto g = graph6_decode("IJ]C{~cxG");
  auto d = ddg_detect(g);
  ASSERT_TRUE(d.proper);
  EXPECT_EQ(d.proper->params, (DdgParams{10, 5, 4, 2, 5, 2}));
  EXPECT_TRUE(a2_identity_check(g, *d.proper).holds);
}

TEST(Equitable, DetectsViolation) {
  auto g = petersen();
  VertexPartition p{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
  auto e = equitable_check(g, p);
  auto a = oracle::adjacency(g);
  bool equitable = true;
  for (const auto& ci : p)
    for (const auto& cj : p) {
      std::set<int> counts;
      for (auto x : ci) {
        int c = 0;
        for (auto y : cj) c += a[x][y];
        counts.insert(c);
      }
      equitable = equitable && counts.size() == 1;
    }
  EXPECT_EQ(e.quotient.has_value(), equitable);
  EXPECT_EQ(e.violation.has_value(), !equitable);
  EXPECT_THROW(equitable_check(g, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(equitable_check(g, {{0, 1}}), std::invalid_argument);
}
