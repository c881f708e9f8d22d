#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "deza/canonical.hpp"
#include "deza/catalog.hpp"
#include "oracle.hpp"

using namespace deza;

TEST(Certificate, PentagonLabellingsAgree) {
  auto a = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto b = make_graph(5, {{2, 0}, {0, 3}, {3, 1}, {1, 4}, {4, 2}});
  EXPECT_EQ(canonical_certificate(a), canonical_certificate(b));
}

TEST(Certificate, GridAndCubeDiffer) {
  EXPECT_NE(canonical_certificate(grid(4, 2)), canonical_certificate(hypercube(3)));
}

TEST(Certificate, PetersenUnderKneserRelabelling) {
  auto g = petersen();
  std::vector<std::size_t> perm{9, 4, 7, 0, 2, 5, 8, 1, 3, 6};
  EXPECT_EQ(canonical_certificate(g), canonical_certificate(g.relabeled(perm)));
}

TEST(Certificate, ComplementOfCubeIsTheGrid) {
  EXPECT_TRUE(isomorphic(complement(hypercube(3)), grid(4, 2)));
}

TEST(Certificate, InvariantUnderRandomRelabellingOfCatalog) {
  std::mt19937_64 rng(2024);
  for (const auto& e : catalog()) {
    auto g = e.build();
    const auto cert = canonical_certificate(g);
    for (int t = 0; t < 100; ++t) {
      auto p = oracle::random_permutation(g.order(), rng);
      ASSERT_EQ(canonical_certificate(g.relabeled(p)), cert) << e.name << " trial " << t;
    }
  }
}

TEST(Certificate, LabelingReproducesTheCanonicalGraph) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_graph(3 + t % 12, 0.45, rng);
    auto form = canonical_form(g);
    auto canon = g.relabeled(form.positions());
    EXPECT_EQ(canon, canonical_graph(g));
    std::vector<std::size_t> seen = form.certificate.labeling;
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], i);
  }
}

// Isomorphism classes of all 2^10 labelled graphs on 5 vertices, once by
// brute-force canonical strings and once by certificates: the induced
// partitions must coincide.
TEST(Certificate, AgreesWithBruteForceOnAllFiveVertexGraphs) {
  std::map<std::string, std::string> by_cert;
  std::map<std::string, std::string> by_brute;
  std::set<std::string> brute_classes, cert_classes;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    GraphBuilder b(5);
    unsigned bit = 0;
    for (std::size_t j = 1; j < 5; ++j)
      for (std::size_t i = 0; i < j; ++i, ++bit)
        if (mask >> bit & 1u) b.add_edge(i, j);
    auto g = std::move(b).build();
    auto brute = oracle::brute_canonical(oracle::adjacency(g));
    auto cert = canonical_certificate(g).bytes;
    brute_classes.insert(brute);
    cert_classes.insert(cert);
    auto [it1, new1] = by_brute.emplace(brute, cert);
    EXPECT_EQ(it1->second, cert);
    auto [it2, new2] = by_cert.emplace(cert, brute);
    EXPECT_EQ(it2->second, brute);
  }
  EXPECT_EQ(brute_classes.size(), 34u);
  EXPECT_EQ(cert_classes.size(), 34u);
}

TEST(Certificate, AgreesWithBruteForceOnRandomSevenVertexGraphs) {
  std::mt19937_64 rng(99);
  std::map<std::string, std::string> by_brute, by_cert;
  for (int t = 0; t < 300; ++t) {
    auto g = oracle::random_graph(7, 0.5, rng);
    auto brute = oracle::brute_canonical(oracle::adjacency(g));
    auto cert = canonical_certificate(g).bytes;
    EXPECT_EQ(by_brute.emplace(brute, cert).first->second, cert);
    EXPECT_EQ(by_cert.emplace(cert, brute).first->second, brute);
  }
}

TEST(CanonicalForm, GeneratorsAreAutomorphismsAndOrbitsMatchBruteForce) {
  std::mt19937_64 rng(17);
  std::vector<Graph> graphs{petersen(), hypercube(3), grid(4, 2), cycle_graph(7),
                            complete_graph(5)};
  for (int t = 0; t < 40; ++t) graphs.push_back(oracle::random_graph(4 + t % 5, 0.5, rng));
  for (const auto& g : graphs) {
    auto a = oracle::adjacency(g);
    auto form = canonical_form(g);
    for (const auto& gen : form.generators) EXPECT_TRUE(oracle::is_automorphism(a, gen));
    if (g.order() > 8) continue;
    auto autos = oracle::automorphisms(a);
    for (std::size_t u = 0; u < g.order(); ++u) {
      std::size_t least = u;
      for (const auto& p : autos) least = std::min(least, p[u]);
      EXPECT_EQ(form.orbit[u], least) << "vertex " << u;
    }
  }
}

TEST(CanonicalForm, PetersenIsVertexTransitive) {
  auto form = canonical_form(petersen());
  for (auto o : form.orbit) EXPECT_EQ(o, 0u);
}

TEST(Certificate, HashIsFnvOfBytes) {
  auto cert = canonical_certificate(petersen());
  EXPECT_EQ(cert.hash(), fnv1a64(cert.bytes));
  EXPECT_EQ(cert.hash_hex().size(), 16u);
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}
