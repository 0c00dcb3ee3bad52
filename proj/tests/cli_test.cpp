#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <circulant/report.hpp>

#include "cli.hpp"

using namespace circulant;
using cli::Format;
using cli::RunConfig;

namespace {

struct Result
{
  int code;
  std::string out, err;
};

Result run(RunConfig config)
{
  std::ostringstream out, err;
  int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig command(std::string name, std::string instance = {}, Format format = Format::text)
{
  RunConfig c;
  c.command = std::move(name);
  c.instance = std::move(instance);
  c.format = format;
  return c;
}

std::size_t count(std::string const &text, std::regex const &re)
{
  return static_cast<std::size_t>(
    std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::string temp_file(std::string const &content)
{
  auto path = testing::TempDir() + "corpus_" + std::to_string(std::rand()) + ".txt";
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST(Cli, AnalyzeExample)
{
  auto r = run(command("analyze", "n=45;S=0,1,15,30"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("minimal=Z45"), std::string::npos);
  EXPECT_NE(r.out.find("realizable=[Z45]"), std::string::npos);
  EXPECT_NE(r.out.find("exact=true"), std::string::npos);

  auto j = Json::parse(run(command("analyze", "n=45;S=0,1,15,30", Format::json)).out);
  EXPECT_EQ(j["minimal_group"], "Z9xZ5");
  EXPECT_EQ(j["realizable"], Json::array({"Z9xZ5"}));
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["arithmetic_condition"], true);
  EXPECT_EQ(j["per_prime"][0]["p"], 3);
  EXPECT_EQ(j["per_prime"][0]["layers"], Json::array({2}));
}

TEST(Cli, VerifyExample)
{
  auto r = run(command("verify", "n=9;S=3,6"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict=exact-match"), std::string::npos);
  EXPECT_NE(r.out.find("|Aut|=1296"), std::string::npos);
}

TEST(Cli, VerifyMismatchExitsWithTwo)
{
  auto r = run(command("verify", "n=16;S=1,4,5,9,13"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("verdict=MISMATCH"), std::string::npos);
}

TEST(Cli, CapacityExitCodes)
{
  auto relaxed = run(command("verify", "n=16;S="));
  EXPECT_EQ(relaxed.code, 0);
  EXPECT_NE(relaxed.out.find("oracle-capped"), std::string::npos);

  auto strict = command("verify", "n=16;S=");
  strict.strict = true;
  EXPECT_EQ(run(strict).code, 3);

  auto vcap = command("verify", "n=12;S=1");
  vcap.vertex_cap = 8;
  vcap.strict = true;
  EXPECT_EQ(run(vcap).code, 3);
}

TEST(Cli, PosetDot)
{
  auto c = command("poset", {}, Format::dot);
  c.n = 32;
  auto r = run(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count(r.out, std::regex(R"(^  "[^"]+";$)", std::regex::multiline)), 7u);
  EXPECT_EQ(count(r.out, std::regex(R"( -> )")), 9u);
  EXPECT_NE(r.out.find("\"Z8xZ4\" -> \"Z32\""), std::string::npos);
}

TEST(Cli, PosetText)
{
  auto c = command("poset");
  c.n = 72;
  auto r = run(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("6 groups", 0), 0u);
  c.n = 1;
  EXPECT_EQ(run(c).code, 1);
}

TEST(Cli, Decompose)
{
  auto r = run(command("decompose", "n=8;S=4"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("valid_levels={1,2}"), std::string::npos);
  EXPECT_NE(r.out.find("minimal_sylow=Z2^3"), std::string::npos);

  auto filtered = command("decompose", "n=45;S=0,1,15,30");
  filtered.prime = 5;
  r = run(filtered);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("p=3"), std::string::npos);
  EXPECT_NE(r.out.find("p=5"), std::string::npos);

  filtered.prime = 7;
  EXPECT_EQ(run(filtered).code, 1);
}

TEST(Cli, WitnessEdgeLists)
{
  auto r = run(command("witness", "n=45;S=0,1,15,30"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# p=3 layers=2\nn=9\n"), std::string::npos);
  EXPECT_NE(r.out.find("# p=5 layers=1\nn=5\n"), std::string::npos);

  auto dot = run(command("witness", "n=9;S=3,6", Format::dot));
  EXPECT_NE(dot.out.find("digraph W_3"), std::string::npos);
}

TEST(Cli, GenerateRoundTripsThroughAnalyze)
{
  auto c = command("generate");
  c.p = 2;
  c.layers = {2, 1};
  auto r = run(c);
  EXPECT_EQ(r.code, 0);
  auto s = r.out.substr(0, r.out.size() - 1);
  EXPECT_EQ(s, tower_connection_set(2, {2, 1}).to_string());
  auto j = Json::parse(run(command("analyze", s, Format::json)).out);
  EXPECT_EQ(j["per_prime"][0]["layers"], Json::array({1, 2}));

  c.p = 4;
  EXPECT_EQ(run(c).code, 1);
  c.p = 0;
  EXPECT_EQ(run(c).code, 1);
}

TEST(Cli, ParseErrorsReportPosition)
{
  auto r = run(command("analyze", "n=45;S=0,1,x"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("column 12"), std::string::npos) << r.err;
  EXPECT_EQ(run(command("explode")).code, 1);
}

TEST(Cli, ReducesOutOfRangeWithWarning)
{
  auto r = run(command("analyze", "n=9;S=12,-3"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n=9; S=3,6"), std::string::npos);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, StripLoops)
{
  auto c = command("analyze", "n=45;S=0,1,15,30");
  c.strip_loops = true;
  EXPECT_NE(run(c).out.find("n=45; S=1,15,30"), std::string::npos);
}

TEST(Cli, JsonRoundTripIsByteIdentical)
{
  std::vector<RunConfig> configs{command("analyze", "n=45;S=0,1,15,30", Format::json),
                                 command("analyze", "n=12;S=1,6", Format::json),
                                 command("verify", "n=9;S=3,6", Format::json),
                                 command("verify", "n=16;S=", Format::json),
                                 command("decompose", "n=72;S=1,9", Format::json)};
  auto poset = command("poset", {}, Format::json);
  poset.n = 32;
  configs.push_back(poset);
  for (auto const &c : configs) {
    auto text = run(c).out;
    ASSERT_FALSE(text.empty());
    auto line = text.substr(0, text.size() - 1);
    EXPECT_EQ(Json::parse(line).dump(), line);
  }
}

TEST(Cli, AnalyzeAndVerifyAgreeOnPrediction)
{
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint64_t n = 2 + rng() % 30;
    std::vector<std::uint64_t> m;
    for (std::uint64_t x = 0; x < n; ++x)
      if (rng() & 1)
        m.push_back(x);
    auto s = ConnectionSet(n, m).to_string();
    auto a = Json::parse(run(command("analyze", s, Format::json)).out);
    auto v = Json::parse(run(command("verify", s, Format::json)).out);
    ASSERT_EQ(a["realizable"], v["predicted"]);
    ASSERT_EQ(a["exact"], v["exact"]);
  }
}

TEST(Cli, SampleIsSeeded)
{
  auto c = command("sample");
  c.n = 12;
  c.count = 5;
  c.seed = 42;
  auto first = run(c).out;
  EXPECT_EQ(first, run(c).out);
  EXPECT_EQ(count(first, std::regex("n=12; S=")), 5u);
  c.seed = 43;
  EXPECT_NE(first, run(c).out);
}

TEST(Cli, BatchKeepsInputOrder)
{
  auto path = temp_file("# corpus\nn=9;S=3,6\n\nn=45; S=0,1,15,30  # example\nn=16;S=1,4,5,9,13\nn=8;S=4\n");
  auto c = command("batch");
  c.corpus = path;
  auto r = run(c);
  EXPECT_EQ(r.code, 2);
  std::istringstream lines(r.out);
  std::vector<std::string> got;
  for (std::string line; std::getline(lines, line);)
    got.push_back(line.substr(0, line.find("  ")));
  EXPECT_EQ(got, (std::vector<std::string>{"n=9; S=3,6", "n=45; S=0,1,15,30", "n=16; S=1,4,5,9,13",
                                           "n=8; S=4"}));
  std::remove(path.c_str());

  auto bad = temp_file("n=9;S=3\nn=9;S=3;\n");
  c.corpus = bad;
  r = run(c);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  std::remove(bad.c_str());

  c.corpus = "/nonexistent/corpus.txt";
  EXPECT_EQ(run(c).code, 1);
}
