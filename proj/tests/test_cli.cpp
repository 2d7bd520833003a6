#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "golden.hpp"
#include "motivzeta/cli.hpp"
#include "motivzeta/errors.hpp"

using namespace motivzeta;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = cli::run(args, out, err);
  return {s, out.str(), err.str()};
}

// Exit status of the installed binary, or -1 when MZ_CLI is not set.
int run_binary(const std::string& args) {
  const char* bin = std::getenv("MZ_CLI");
  if (!bin) return -1;
  std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
  int s = std::system(cmd.c_str());
  return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

}  // namespace

TEST(Golden, OutputsMatchFiles) {
  bool update = std::getenv("MZ_UPDATE_GOLDENS") != nullptr;
  auto cases = golden::load_cases();
  ASSERT_GE(cases.size(), 30u);
  for (const auto& c : cases) {
    int status = 0;
    std::string text = golden::render(c, status);
    EXPECT_EQ(status, c.exit_status) << c.name << "\n" << text;
    if (update) {
      std::ofstream(golden::path_of(c), std::ios::binary) << text;
      continue;
    }
    ASSERT_TRUE(std::filesystem::exists(golden::path_of(c))) << golden::path_of(c);
    EXPECT_EQ(text, golden::read(golden::path_of(c))) << c.name;
  }
}

TEST(Golden, RepeatedRunsAreIdentical) {
  for (const auto& c : golden::load_cases()) {
    int a = 0, b = 0;
    EXPECT_EQ(golden::render(c, a), golden::render(c, b)) << c.name;
  }
}

TEST(Golden, JsonOutputsCarrySchemaVersion) {
  for (const auto& c : golden::load_cases()) {
    if (!c.json() || c.exit_status) continue;
    int status = 0;
    auto doc = nlohmann::json::parse(golden::render(c, status));
    EXPECT_EQ(doc.at("schema"), cli::kSchemaVersion) << c.name;
  }
}

TEST(ParsePolynomial, Examples) {
  cli::PolyExpr a = cli::parse_polynomial("x^3 - y^3");
  ASSERT_TRUE(a.brieskorn.has_value());
  EXPECT_EQ(*a.brieskorn, BrieskornSpec({{1, 3}, {-1, 3}}));
  EXPECT_FALSE(cli::parse_polynomial("x^2 + x*y").brieskorn.has_value());
  EXPECT_FALSE(cli::parse_polynomial("2*x^2 + y^3").brieskorn.has_value());
  try {
    cli::parse_polynomial("x^3 - ");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 1);
    EXPECT_EQ(e.column, 7);
  }
}

TEST(ParsePolynomial, CorpusRoundTrip) {
  std::ifstream in(golden::data_dir() + "/corpus.txt");
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++n;
    cli::PolyExpr p = cli::parse_polynomial(line);
    EXPECT_EQ(p.poly.str(), line);
    EXPECT_EQ(cli::parse_polynomial(p.poly.str()).poly, p.poly) << line;
  }
  EXPECT_EQ(n, 50);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run({"parse", "x^3-y^3"}).status, 0);
  EXPECT_EQ(run({"parse", "x^3 -"}).status, 1);
  EXPECT_EQ(run({"zeta", "brieskorn", "x^2+x*y"}).status, 1);
  EXPECT_EQ(run({"zeta", "resolution", "/nonexistent.json"}).status, 1);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"zeta"}).status, 2);
  EXPECT_EQ(run({"zeta", "brieskorn", "x^3", "--order", "abc"}).status, 2);
  EXPECT_EQ(run({"recover", "--self-test", "x^3-y^3"}).status, 2);
  Result r = run({"parse", "x^3 -"});
  EXPECT_EQ(r.err.rfind("error: ParseError: ", 0), 0u) << r.err;
}

TEST(Run, BinaryExitCodes) {
  if (!std::getenv("MZ_CLI")) GTEST_SKIP() << "MZ_CLI not set";
  EXPECT_EQ(run_binary("parse 'x^3 - y^3'"), 0);
  EXPECT_EQ(run_binary("parse 'x^3 - '"), 1);
  EXPECT_EQ(run_binary("frobnicate"), 2);
}

TEST(Run, RecoverExample) {
  Result r = run({"recover", "--dim", "2", "--self-test", "x^3 - y^3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("exponents: 3,3\n", 0), 0u) << r.out;
}

TEST(Run, RecoverFromDump) {
  std::string path = (std::filesystem::temp_directory_path() / "mz_cli_dump.json").string();
  Result a = run({"recover", "--dim", "2", "--self-test", "x^2 + y^5", "--dump", path});
  ASSERT_EQ(a.status, 0) << a.err;
  Result b = run({"recover", "--dim", "2", "--oracle", path});
  ASSERT_EQ(b.status, 0) << b.err;
  EXPECT_EQ(b.out.substr(0, b.out.find('\n')), "exponents: 2,5");
  Result c = run({"recover", "--dim", "3", "--oracle", path});
  EXPECT_EQ(c.status, 1);
  std::filesystem::remove(path);
}

TEST(Run, VerifyExitStatus) {
  Result ok = run({"verify", "ts", "x^2", "y^3"});
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(run({"verify", "ts", "x^2+x*y", "y^3"}).status, 1);
}

TEST(Run, OrderFromEnvironment) {
  ::setenv("MOTIVZETA_ORDER", "5", 1);
  EXPECT_EQ(cli::default_order(), 5);
  Result r = run({"zeta", "brieskorn", "x^3-y^3", "--series"});
  ::unsetenv("MOTIVZETA_ORDER");
  EXPECT_NE(r.out.find("O(T^6)"), std::string::npos) << r.out;
  EXPECT_EQ(cli::default_order(), cli::kDefaultOrder);
}

TEST(Run, ResolutionFixtureThroughCli) {
  Result r = run({"milnor", "resolution", golden::data_dir() + "/x3y3_resolution.json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "milnor fiber: unit\n");
}
