#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(KN3_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  CliRun r{-1, {}};
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(KN3_FIXTURES) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "kn3_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, BuildReportsGenus) {
  const CliRun r = run("build --n 8 --orientable --out " + scratch("o8.set").string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "genus: 11")) << r.out;
  const CliRun v = run("verify " + scratch("o8.set").string());
  EXPECT_EQ(v.code, 0) << v.out;

  const CliRun n6 = run("build --n 6 --nonorientable --json --out " + scratch("n6.set").string());
  ASSERT_EQ(n6.code, 0) << n6.out;
  const auto j = nlohmann::json::parse(n6.out);
  EXPECT_EQ(j["crosscap"], 6);
  EXPECT_EQ(j["orientable"], false);

  const CliRun kb = run("build --n 4 --multiplicity 2 --nonorientable --scheme-out " + scratch("kb.scheme").string() +
                     " --out " + scratch("kb.set").string());
  EXPECT_EQ(kb.code, 0) << kb.out;
  EXPECT_TRUE(contains(kb.out, "crosscap: 2")) << kb.out;
  const CliRun g = run("genus " + scratch("kb.scheme").string());
  EXPECT_EQ(g.code, 0) << g.out;
  EXPECT_TRUE(contains(g.out, "euler genus: 2")) << g.out;
}

TEST(Cli, BuildErrors) {
  EXPECT_EQ(run("build --n 7").code, 2);
  EXPECT_EQ(run("build --n 4 --nonorientable").code, 2);
  EXPECT_EQ(run("build --n 6 --orientable --nonorientable").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, VerifyFixtures) {
  const CliRun ex = run("verify " + fixture("strong_6.set"));
  EXPECT_EQ(ex.code, 0) << ex.out;
  EXPECT_TRUE(contains(ex.out, "genus: 3")) << ex.out;

  const CliRun non = run("verify " + fixture("nonorientable_6.set"));
  EXPECT_EQ(non.code, 0) << non.out;
  EXPECT_TRUE(contains(non.out, "crosscap: 6")) << non.out;

  const CliRun strict = run("verify --strict-strong " + fixture("nonorientable_6.set"));
  EXPECT_EQ(strict.code, 1) << strict.out;
  EXPECT_TRUE(contains(strict.out, "FAIL strength")) << strict.out;
  EXPECT_TRUE(contains(strict.out, "(3,5)")) << strict.out;

  const CliRun printed = run("verify " + fixture("nonorientable_6_printed.set"));
  EXPECT_EQ(printed.code, 1) << printed.out;
  EXPECT_TRUE(contains(printed.out, "FAIL compatibility")) << printed.out;

  const CliRun kb = run("verify --json " + fixture("multi_nonorientable_4.set"));
  ASSERT_EQ(kb.code, 0) << kb.out;
  EXPECT_EQ(nlohmann::json::parse(kb.out)["euler_genus"], 2);
}

TEST(Cli, VerifyParseErrors) {
  const auto path = scratch("corrupt.set");
  {
    FILE* f = fopen(path.c_str(), "w");
    fputs("# kn3-embedding-set v1\nn=4 m=1 orientable=1\nT 1: 2 3 4\nT 2: 1 three 4\n", f);
    fclose(f);
  }
  const CliRun r = run("verify " + path.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "line 4")) << r.out;
  EXPECT_EQ(run("verify /nonexistent.set").code, 2);
}

TEST(Cli, GenusOfExample) {
  const auto path = scratch("ex.scheme");
  ASSERT_EQ(run("build --n 6 --scheme-out " + path.string()).code, 0);
  const CliRun r = run("genus --json " + path.string());
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["faces"], 30);
  EXPECT_EQ(j["face_lengths"]["4"], 30);
  EXPECT_EQ(j["euler_genus"], 6);
  EXPECT_EQ(j["orientable"], true);
}

TEST(Cli, Enumerate) {
  const CliRun r = run("enumerate --n 6 --count 6 --seed 1 --json --out " + scratch("c6a.txt").string());
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"], 6);
  EXPECT_EQ(j["count_lower_bound"], "6");
  EXPECT_EQ(j["count_upper_bound"], "14348907");
  ASSERT_EQ(run("enumerate --n 6 --count 6 --seed 1 --serial --out " + scratch("c6b.txt").string()).code, 0);
  std::ifstream a(scratch("c6a.txt")), b(scratch("c6b.txt"));
  const std::string ta((std::istreambuf_iterator<char>(a)), {}), tb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, tb);

  const CliRun resumed = run("enumerate --n 6 --count 8 --seed 9 --resume " + scratch("c6a.txt").string());
  EXPECT_EQ(resumed.code, 0) << resumed.out;
  EXPECT_TRUE(contains(resumed.out, "classes: 8 of 8")) << resumed.out;
}

TEST(Cli, Formula) {
  const CliRun six = run("formula --n 6");
  EXPECT_TRUE(contains(six.out, "orientable genus: 3")) << six.out;
  EXPECT_TRUE(contains(six.out, "non-orientable genus: 6")) << six.out;
  const CliRun twelve = run("formula --n 12 --json");
  const auto j = nlohmann::json::parse(twelve.out);
  EXPECT_EQ(j["orientable_genus"], "50");
  EXPECT_EQ(j["nonorientable_genus"], "100");
  const CliRun seven = run("formula --n 7");
  EXPECT_EQ(seven.code, 0);
  EXPECT_TRUE(contains(seven.out, "lower bound: 13")) << seven.out;
  EXPECT_TRUE(contains(seven.out, "out of scope (odd)")) << seven.out;
}
