#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "deza/catalog.hpp"
#include "deza/census.hpp"
#include "deza/graph6.hpp"
#include "oracle.hpp"

using namespace deza;

namespace {

std::set<std::string> certificates(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const auto& g : graphs) out.insert(canonical_certificate(g).bytes);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t max_common_count(const Graph& g) {
  std::size_t m = 0;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t w = u + 1; w < g.order(); ++w) m = std::max(m, g.common_neighbours(u, w));
  return m;
}

CensusOptions desk(std::size_t vmin, std::size_t vmax, std::size_t kmin, std::size_t kmax,
                   const std::string& filter) {
  CensusOptions o;
  o.vmin = vmin;
  o.vmax = vmax;
  o.kmin = kmin;
  o.kmax = kmax;
  o.filter = CensusFilter::parse(filter);
  o.limits = GenerationLimits{};
  return o;
}

}  // namespace

TEST(Generate, ClassCountsMatchBruteForceUpToSeven) {
  for (std::size_t v = 1; v <= 7; ++v)
    for (std::size_t k = 0; k < v; ++k) {
      if ((v * k) % 2) continue;
      std::set<std::string> classes;
      oracle::labelled_regular(v, k, [&](const oracle::Matrix& a) { classes.insert(oracle::brute_canonical(a)); });
      auto gens = generate_regular(v, k);
      EXPECT_EQ(gens.size(), classes.size()) << v << "," << k;
      EXPECT_EQ(certificates(gens).size(), gens.size()) << v << "," << k;
      std::set<std::string> mine;
      for (const auto& g : gens) {
        for (std::size_t u = 0; u < v; ++u) ASSERT_EQ(g.degree(u), k);
        mine.insert(oracle::brute_canonical(oracle::adjacency(g)));
      }
      EXPECT_EQ(mine, classes) << v << "," << k;
    }
}

TEST(Generate, OrbitCountingIdentityAtEight) {
  for (std::size_t k = 1; k < 8; ++k) {
    std::uint64_t labelled = 0;
    oracle::labelled_regular(8, k, [&](const oracle::Matrix&) { ++labelled; });
    std::uint64_t total = 0;
    for (const auto& g : generate_regular(8, k)) {
      auto aut = oracle::automorphisms(oracle::adjacency(g)).size();
      ASSERT_EQ(oracle::factorial(8) % aut, 0u);
      total += oracle::factorial(8) / aut;
    }
    EXPECT_EQ(total, labelled) << "k=" << k;
  }
}

TEST(Generate, KnownSmallCounts) {
  auto connected = [](const std::vector<Graph>& gs) {
    return std::count_if(gs.begin(), gs.end(), [](const Graph& g) { return is_connected(g); });
  };
  EXPECT_EQ(connected(generate_regular(8, 3)), 5);
  EXPECT_EQ(generate_regular(7, 4).size(), 2u);
  EXPECT_EQ(connected(generate_regular(10, 3)), 19);
  EXPECT_EQ(generate_regular(10, 3).size(), 21u);
}

TEST(Generate, PruneIsSound) {
  for (std::size_t v = 4; v <= 9; ++v)
    for (std::size_t k = 2; k < v; ++k) {
      if ((v * k) % 2) continue;
      auto all = generate_regular(v, k);
      for (std::size_t c = 0; c <= k; ++c) {
        std::vector<Graph> kept;
        for (const auto& g : all)
          if (max_common_count(g) <= c) kept.push_back(g);
        GenerateOptions o;
        o.max_common = c;
        EXPECT_EQ(certificates(generate_regular(v, k, o)), certificates(kept)) << v << "," << k << "," << c;
      }
    }
}

TEST(Generate, ParallelOutputIsIdentical) {
  GenerateOptions one, many;
  many.jobs = 4;
  auto a = generate_regular(10, 4, one);
  auto b = generate_regular(10, 4, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(graph6_encode(a[i]), graph6_encode(b[i]));
}

TEST(Generate, Errors) {
  EXPECT_THROW(generate_regular(7, 3), CensusError);
  EXPECT_THROW(generate_regular(5, 5), CensusError);
  EXPECT_THROW(generate_regular(0, 0), CensusError);
  EXPECT_THROW(generate_regular(66, 2), CensusError);
}

TEST(Limits, DeskScaleAndCap) {
  GenerationLimits l;
  l.max_vertices = 12;
  EXPECT_NO_THROW(l.check(10, 7));
  EXPECT_NO_THROW(l.check(12, 4));
  EXPECT_THROW(l.check(12, 5), CensusError);
  EXPECT_THROW(l.check(13, 3), CensusError);
  l.long_run = true;
  EXPECT_NO_THROW(l.check(12, 5));
  EXPECT_THROW(l.check(13, 3), CensusError);
  try {
    GenerationLimits{}.check(14, 5);
    FAIL();
  } catch (const CensusError& e) {
    EXPECT_NE(std::string(e.what()).find("--long"), std::string::npos);
  }
}

TEST(Filter, ParseErrorsListValidTerms) {
  EXPECT_THROW(CensusFilter::parse("deza+bogus"), CensusError);
  EXPECT_THROW(CensusFilter::parse("deza(1,2)"), CensusError);
  EXPECT_THROW(CensusFilter::parse("b=k-x"), CensusError);
  try {
    CensusFilter::parse("cubic");
    FAIL();
  } catch (const CensusError& e) {
    EXPECT_NE(std::string(e.what()).find("strictly-deza"), std::string::npos);
  }
  EXPECT_EQ(CensusFilter::parse("deza+b=k-2").max_common(5), 3u);
  EXPECT_EQ(CensusFilter::parse("deza(8,4,*,*)").max_common(4), std::nullopt);
}

TEST(Census, StrictlyDezaSmallCases) {
  auto c = census(desk(8, 9, 4, 4, "strictly-deza"));
  std::set<std::string> params;
  for (const auto& r : c.records) params.insert(to_string(*r.report.deza));
  EXPECT_TRUE(params.count("(8,4,2,1)"));
  EXPECT_TRUE(params.count("(9,4,2,1)"));
  EXPECT_TRUE(params.count("(8,4,2,0)"));
}

TEST(Census, UniqueEightVertexGraphWithTwoAndZero) {
  auto c = census(desk(8, 8, 4, 4, "deza(8,4,2,0)"));
  ASSERT_EQ(c.records.size(), 1u);
  EXPECT_EQ(c.records[0].graph6, canonical_certificate(grid(4, 2)).bytes);
  ASSERT_TRUE(c.records[0].ddg);
  EXPECT_EQ(*c.records[0].ddg, (DdgParams{8, 4, 0, 2, 4, 2}));
}

TEST(Census, CubicStronglyRegularOnTenIsPetersen) {
  auto c = census(desk(10, 10, 3, 3, "srg"));
  ASSERT_EQ(c.records.size(), 1u);
  EXPECT_TRUE(isomorphic(c.records[0].graph, petersen()));
}

TEST(Census, RecordsRoundTripAndRecompute) {
  auto o = desk(4, 10, 2, 9, "deza");
  auto c = census(o);
  ASSERT_FALSE(c.records.empty());
  for (const auto& r : c.records) {
    auto g = graph6_decode(r.graph6);
    EXPECT_EQ(graph6_encode(g), r.graph6);
    EXPECT_EQ(canonical_certificate(g).bytes, r.graph6);
    auto j = nlohmann::json::parse(record_json(r, o));
    EXPECT_EQ(j["graph6"], r.graph6);
    EXPECT_EQ(j["v"], g.order());
    auto rep = classify(g);
    EXPECT_EQ(j["k"], *rep.regular);
    EXPECT_EQ(j["connected"], rep.connected);
    auto deza = j["deza"].get<std::vector<std::size_t>>();
    EXPECT_EQ(deza, (std::vector<std::size_t>{rep.deza->v, rep.deza->k, rep.deza->b, rep.deza->a}));
    EXPECT_EQ(j["strictly_deza"], rep.strictly_deza);
    EXPECT_EQ(j["srg"].is_null(), !rep.srg);
    EXPECT_EQ(j["ddg"].is_null(), !ddg_detect(g).proper);
    EXPECT_EQ(j["certificate_hash"], canonical_certificate(g).hash_hex());
    EXPECT_EQ(j["generator"]["version"], kCensusFormatVersion);
    EXPECT_EQ(j["generator"]["filter"], "deza");
  }
}

TEST(Census, JobsGiveByteIdenticalFiles) {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "deza-census-test";
  fs::create_directories(dir);
  auto o = desk(8, 12, 3, 4, "deza");
  auto a = census(o);
  o.jobs = 3;
  auto b = census(o);
  write_census((dir / "one").string(), a);
  write_census((dir / "many").string(), b);
  EXPECT_EQ(slurp(dir / "one.g6"), slurp(dir / "many.g6"));
  auto meta = slurp(dir / "one.meta.jsonl");
  EXPECT_FALSE(meta.empty());
  EXPECT_EQ(std::count(meta.begin(), meta.end(), '\n'), static_cast<long>(a.records.size()));
  EXPECT_EQ(slurp(dir / "one.g6"), [&] {
    std::string s;
    for (const auto& r : a.records) s += r.graph6 + "\n";
    return s;
  }());
  fs::remove_all(dir);
}

TEST(Census, LimitsCheckedBeforeWork) {
  auto o = desk(10, 16, 3, 6, "deza");
  EXPECT_THROW(census(o), CensusError);
}
