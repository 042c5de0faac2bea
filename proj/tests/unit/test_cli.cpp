#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "graphicable/families.hpp"
#include "graphicable/io.hpp"
#include "json.hpp"
#include "oracles/oracles.hpp"

using namespace graphicable;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("graphicable-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }
  std::string algebra_file(const FamilySpec& spec) {
    return write(to_string(spec) + ".json", serialize({kAlgebraSchemaVersion, family_law(spec), to_string(spec)}));
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST(Cli, LawStarThree) {
  const Invocation r = run({"law", "star:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "e_1^2 = e_4\ne_2^2 = e_4\ne_3^2 = e_4\ne_4^2 = e_1 + e_2 + e_3\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, LawJsonIsAnAlgebraDocument) {
  const Invocation r = run({"law", "tietze", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(deserialize(r.out).algebra, family_law(family::Tietze{}));
}

TEST(Cli, VerifyFriendshipPasses) {
  const Invocation r = run({"verify", "friendship:3"});
  ASSERT_EQ(r.code, 0);
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["passed_all"], true);
  for (const auto& c : report["checks"]) EXPECT_EQ(c["passed"], true) << c["name"];
}

TEST(Cli, VerifyExitCodeTracksReportOverGrid) {
  for (const FamilySpec& spec : ci_grid()) {
    const Invocation r = run({"verify", to_string(spec)});
    const bool passed = nlohmann::json::parse(r.out)["passed_all"];
    ASSERT_EQ(r.code, passed ? 0 : 1) << to_string(spec);
  }
}

TEST(Cli, VerifyAllSummarizesGrid) {
  const Invocation r = run({"verify", "--all"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto summary = nlohmann::json::parse(r.out);
  EXPECT_EQ(summary["total"], ci_grid().size());
  EXPECT_TRUE(summary["failed"].empty());
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"frobnicate"}, {"verify", "npartite:9999999"}, {"verify", "hexagon"},
        {"verify"}, {"verify", "star:3", "--all"}, {"generate", "star:3", "--format", "svg"},
        {"chain", "1"}, {"chain", "two"}, {"check", "/nonexistent/file.json", "--snark"},
        {"law", "gp:6,3"}}) {
    const Invocation r = run(args);
    EXPECT_EQ(r.code, 2) << testing::PrintToString(args);
    EXPECT_TRUE(r.out.empty()) << testing::PrintToString(args);
    EXPECT_FALSE(r.err.empty()) << testing::PrintToString(args);
  }
}

TEST(Cli, HelpExitsZero) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, GenerateFormats) {
  const Invocation dot = run({"generate", "star:3", "--format", "dot"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("  e1 -- e4;\n  e2 -- e4;\n  e3 -- e4;\n"), std::string::npos);
  const Invocation json = run({"generate", "petersen"});
  ASSERT_EQ(json.code, 0);
  EXPECT_EQ(graph_from_json(json.out), generate_graph(family::kPetersen));
}

TEST_F(CliFiles, CheckProperties) {
  const std::string c4 = write("c4.json", graph_to_json(oracle::to_graph(oracle::cycle(4))));
  const Invocation friendless = run({"check", c4, "--friendship"});
  EXPECT_EQ(friendless.code, 1);
  EXPECT_EQ(nlohmann::json::parse(friendless.out)["witness"].size(), 2u);
  EXPECT_EQ(run({"check", algebra_file(family::Friendship{4}), "--friendship"}).code, 0);

  EXPECT_EQ(run({"check", algebra_file(family::FlowerJ5{}), "--snark"}).code, 0);
  EXPECT_EQ(run({"check", algebra_file(family::Tietze{}), "--snark"}).code, 1);
  EXPECT_EQ(run({"check", algebra_file(family::Tietze{}), "--snark", "--girth-threshold", "3"}).code, 0);

  EXPECT_EQ(run({"check", algebra_file(family::kDesargues), "--hamiltonian"}).code, 0);
  EXPECT_EQ(run({"check", algebra_file(family::Tietze{}), "--hamiltonian"}).code, 1);

  EXPECT_EQ(run({"check", c4, "--s-graphicable"}).code, 0);
  const std::string mutant = write("mutant.json", R"({"schema_version":1,"dimension":2,"structure":["0","1","0","0"]})");
  const Invocation asym = run({"check", mutant, "--s-graphicable"});
  EXPECT_EQ(asym.code, 1);
  EXPECT_EQ(nlohmann::json::parse(asym.out)["s_graphicable"], false);
  EXPECT_EQ(run({"check", mutant, "--snark"}).code, 2);

  EXPECT_EQ(run({"check", c4, "--snark", "--hamiltonian"}).code, 2);
  EXPECT_EQ(run({"check", c4}).code, 2);
  const std::string big = write("big.json", graph_to_json(oracle::to_graph(oracle::cycle(40))));
  EXPECT_EQ(run({"check", big, "--hamiltonian"}).code, 3);
  EXPECT_EQ(run({"check", write("bad.json", "{\"n\": 3, "), "--snark"}).code, 2);
}

TEST_F(CliFiles, EmbedWithIdentityAndMapFile) {
  EXPECT_EQ(run({"embed", "star:6", "friendship:3"}).code, 0);
  EXPECT_EQ(run({"embed", "friendship:3", "wheel:7"}).code, 0);
  const Invocation reverse = run({"embed", "friendship:3", "star:6"});
  EXPECT_EQ(reverse.code, 1);
  EXPECT_EQ(nlohmann::json::parse(reverse.out)["embedded"], false);
  EXPECT_EQ(run({"embed", "path:3", "cycle:5", "--map", write("map.json", "[2,3,4]")}).code, 0);
  EXPECT_EQ(run({"embed", "path:3", "cycle:5", "--map", write("bad.json", "[1,3,5]")}).code, 1);
  EXPECT_EQ(run({"embed", "wheel:7", "star:2"}).code, 2);
}

TEST_F(CliFiles, MultiplyElements) {
  const std::string s3 = algebra_file(family::Star{3});
  const Invocation r = run({"mul", s3, "2,3,0,0", "1,-1,0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-e_4\n");
  const Invocation j = run({"mul", s3, "1/2,0,0,1", "1,0,0,1", "--format", "json"});
  EXPECT_EQ(j.out, "[\"1\",\"1\",\"1\",\"1/2\"]\n");
  EXPECT_EQ(run({"mul", s3, "1,2", "1,2,3,4"}).code, 2);
}

TEST(Cli, ChainReport) {
  const Invocation r = run({"chain", "4"});
  ASSERT_EQ(r.code, 0);
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["passed"], true);
  EXPECT_EQ(report["errata"][0]["id"], "chain-wheel-index");
}
