#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "deza/canonical.hpp"
#include "deza/cli.hpp"
#include "deza/graph6.hpp"

using namespace deza;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, ConstructEmitsGraph6) {
  auto r = run({"construct", "petersen"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(r.out, graph6_encode(petersen()) + "\n");
  auto adj = run({"construct", "grid-4x2", "--adj"});
  EXPECT_EQ(adj.code, 0);
  EXPECT_EQ(std::count(adj.out.begin(), adj.out.end(), '\n'), 8);
}

TEST(Cli, UnknownNameIsUsageError) {
  auto r = run({"construct", "nosuchgraph"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ClassifyFromStdin) {
  auto r = run({"classify", "--g6", "-", "--json"}, graph6_encode(grid(4, 2)) + "\n");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
  EXPECT_EQ(j["deza"], nlohmann::json::parse("[8,4,2,0]"));
  EXPECT_EQ(j["strictly_deza"], true);
}

TEST(Cli, JsonOutputsRedumpIdentically) {
  std::vector<std::vector<std::string>> cmds{
      {"classify", "petersen", "--json"},
      {"ddg", "fano-incidence", "--json"},
      {"spectrum", "grid-4x2", "--json"},
      {"sieve", "deza", "8", "4", "2", "0", "--json"},
      {"sieve", "ddg", "14", "3", "1", "0", "2", "7", "--json"},
      {"sieve", "scan", "--family", "ddg-n2", "--max", "6", "--json"},
      {"enumerate", "--v", "8", "--k", "4", "--filter", "deza", "--json"},
      {"catalog", "--json"},
  };
  for (const auto& c : cmds) {
    auto r = run(c);
    ASSERT_EQ(r.code, 0) << c[0] << ": " << r.err;
    if (c[0] == "enumerate") {
      std::istringstream lines(r.out);
      for (std::string line; std::getline(lines, line);)
        EXPECT_EQ(nlohmann::ordered_json::parse(line).dump(), line);
    } else {
      EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out) << c[0];
    }
  }
}

TEST(Cli, SieveSummaryLine) {
  auto r = run({"sieve", "deza", "18", "5", "3", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "infeasible: R2 beta=3/2");
  auto ok = run({"sieve", "deza", "8", "4", "2", "0"});
  EXPECT_EQ(first_line(ok.out), "feasible");
}

TEST(Cli, SieveRejectsMalformedTuple) {
  EXPECT_EQ(run({"sieve", "deza", "8", "4", "5", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"sieve", "deza", "8", "4"}).code, cli::kUsage);
}

TEST(Cli, DdgReportsListedMismatch) {
  auto r = run({"ddg", "grid-4x2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(8,4,0,2,4,2)"), std::string::npos);
  EXPECT_NE(r.out.find("parameter mismatch"), std::string::npos);
}

TEST(Cli, SpectrumFactored) {
  auto r = run({"spectrum", "fano-incidence"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(x^2 - 2)^6"), std::string::npos) << r.out;
}

TEST(Cli, EnumerateLimitsAndFilters) {
  EXPECT_EQ(run({"enumerate", "--v", "14", "--k", "5"}).code, cli::kUsage);
  EXPECT_EQ(run({"enumerate", "--v", "8", "--filter", "bogus"}).code, cli::kUsage);
  auto r = run({"enumerate", "--v", "8..9", "--k", "4", "--filter", "strictly-deza"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(8,4,2,1)"), std::string::npos);
}

TEST(Cli, AuditExitCodes) {
  auto clean = run({"audit", "--theorem", "1", "--vmax", "10"});
  EXPECT_EQ(clean.code, cli::kSuccess) << clean.out;
  auto flagged = run({"audit", "--theorem", "3", "--vmax", "8", "--kmax", "4"});
  EXPECT_EQ(flagged.code, cli::kDiscrepancy) << flagged.out;
  EXPECT_NE(flagged.out.find("parameter-mismatch"), std::string::npos);
  EXPECT_EQ(run({"audit", "--theorem", "7"}).code, cli::kUsage);
}

TEST(Cli, HelpAndUnknownCommand) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--g6", "-"}, "B!\n").code, cli::kUsage);
}
