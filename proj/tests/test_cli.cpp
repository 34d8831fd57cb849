#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EALA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, BracketExamples) {
  EXPECT_EQ(run("bracket 'Xplus (0,0)' 'Xminus (0,0)'").out, "1 * Halpha\n");
  EXPECT_EQ(run("bracket 'ChiDer (2,0)' 'Xplus (1,1)'").out, "-2 * Xplus (3,1)\n");
  EXPECT_EQ(run("bracket 'Lop (1,0)' 'Lop (1,0)'").out, "0\n");
  EXPECT_EQ(run("bracket '2 * Xplus (0,0)' 'Xminus (0,0)'").out, "2 * Halpha\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("dims --jordan nonsense").code, 2);
  EXPECT_EQ(run("dims --radius 0").code, 2);
  EXPECT_EQ(run("dims --radius 3 --tau-radius 2").code, 2);
  EXPECT_EQ(run("verify --ring Q").code, 2);
  EXPECT_EQ(run("verify --jordan laurent --inject-fault").code, 2);
  EXPECT_EQ(run("bracket 'Xplus (9,9)' 'Lop (1,0)'").code, 2);
  EXPECT_EQ(run("bracket 'Xplus (1,1)' 'Lop (1,0)' --jordan semilattice:S:v=2,cosets=00+10+01").code, 2);
  EXPECT_EQ(run("bracket 'Frob (1,1)' 'Lop (1,0)'").code, 2);
  EXPECT_EQ(run("lemmas --nu 7").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, DimsSweeps) {
  const auto js = run("dims --jordan semilattice:S:v=2,cosets=00+10+01 --radius 3");
  EXPECT_EQ(js.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(js.out)["all_match"].get<bool>());
  const auto q2 = run("dims --jordan quantum:q=root:2 --radius 3 --format csv");
  EXPECT_EQ(q2.code, 0);
  EXPECT_NE(q2.out.find("\"(2,0)\",00,1,1,1,3,1,"), std::string::npos);
  EXPECT_NE(q2.out.find("\"(1,0)\",10,2,0,0,2,2,"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --jordan laurent --radius 2 --ring Z").code, 0);
  EXPECT_EQ(run("verify --jordan quantum:q=formal --radius 1 --ring Z").code, 1);
  EXPECT_EQ(run("verify --jordan semilattice:S:full,v=2 --radius 1 --inject-fault").code, 1);
}

TEST(Cli, VerifyReportSchemaAndDeterminism) {
  const std::string a = ::testing::TempDir() + "verify_a.json";
  const std::string b = ::testing::TempDir() + "verify_b.json";
  ASSERT_EQ(run("verify --jordan semilattice:S:v=2,cosets=00+10+01 --radius 2 --workers 3 --out " + a).code, 0);
  ASSERT_EQ(run("verify --jordan semilattice:S:v=2,cosets=00+10+01 --radius 2 --workers 1 --out " + b).code, 0);
  const std::string ta = slurp(a);
  EXPECT_EQ(ta, slurp(b));
  const auto j = nlohmann::json::parse(ta);
  for (const char* key : {"family", "radius", "ring", "pairs", "skipped", "failures", "suppressed_rows"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["ring"], "Z");
  EXPECT_FALSE(j["suppressed_rows"].empty());
  EXPECT_TRUE(j["failures"].empty());
}

TEST(Cli, Lemmas) {
  EXPECT_EQ(run("lemmas --jordan semilattice:S:v=2,cosets=00+10+01 --radius 2").code, 0);
  EXPECT_EQ(run("lemmas --nu 3 --radius 2").code, 0);
  const auto broken = run("lemmas --jordan semilattice:S:full,v=2 --inject-fault --radius 2 --format csv");
  EXPECT_EQ(broken.code, 1);
  EXPECT_NE(broken.out.find(",false,"), std::string::npos);
  EXPECT_EQ(run("lemmas --jordan quantum:q=formal --radius 2").code, 0);
}
