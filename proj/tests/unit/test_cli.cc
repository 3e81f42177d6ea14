#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mspg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(fs::path const &p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_line(std::string const &text, std::string const &line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line)
      return true;
  }
  return false;
}

fs::path scratch(std::string const &name) {
  auto p = fs::temp_directory_path() / ("mspg_cli_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, AnalyzeS3) {
  auto r = run({"analyze", "S3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "order: 6")) << r.out;
  EXPECT_TRUE(has_line(r.out, "supersoluble: yes")) << r.out;
  EXPECT_TRUE(has_line(r.out, "chief factors: 3,2")) << r.out;
  EXPECT_TRUE(has_line(r.out, "subgroups: 6 (normal: 3)")) << r.out;
}

TEST(Cli, AnalyzeRecipeAndA4) {
  auto r = run({"analyze", "alternating(4)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "supersoluble: no")) << r.out;
  EXPECT_TRUE(has_line(r.out, "wU: no")) << r.out;
}

TEST(Cli, FactorizeA4) {
  auto r = run({"factorize", "A4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("msp: no"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("msp+U hits:"), std::string::npos);
}

TEST(Cli, BadArguments) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--classes", "X"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorems", "l99"}).code, 2);
  EXPECT_EQ(run({"verify", "--workers", "0"}).code, 2);
  EXPECT_EQ(run({"analyze", "no_such_group"}).code, 2);
  EXPECT_EQ(run({"analyze", "symmetric(3"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyWritesBundle) {
  auto dir = scratch("bundle");
  auto r = run({"verify", "--max-order", "12", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto tsv = slurp(dir / "summary.tsv");
  EXPECT_EQ(r.out.substr(0, tsv.size()), tsv);
  EXPECT_TRUE(fs::exists(dir / "groups.json"));
  EXPECT_TRUE(fs::exists(dir / "reports" / "th2.U.json"));
  EXPECT_FALSE(fs::exists(dir.string() + ".partial"));
  fs::remove_all(dir);
}

TEST(Cli, VerifyTheoremSelection) {
  auto dir = scratch("selection");
  auto r = run({"verify", "--max-order", "12", "--theorems", "th2", "--classes", "U,wU,vU", "--out",
                dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t n = 0;
  for (auto const &e : fs::directory_iterator(dir / "reports")) {
    (void)e;
    ++n;
  }
  EXPECT_EQ(n, 3u);
  fs::remove_all(dir);
}

TEST(Cli, MalformedGroupFileLeavesNoBundle) {
  auto dir = scratch("malformed");
  auto file = scratch("bad.gens");
  {
    std::ofstream f(file);
    f << "# bad\ndegree 3\n(1 2 4)\n";
  }
  auto r = run({"verify", "--catalog", "none", "--group", file.string(), "--out", dir.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(fs::exists(dir));
  EXPECT_FALSE(fs::exists(dir.string() + ".partial"));
  fs::remove(file);
}

TEST(Cli, CatalogAndExport) {
  auto r = run({"catalog", "--max-order", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("S3\t6\t3\t"), std::string::npos) << r.out;

  auto file = scratch("s3.gens");
  ASSERT_EQ(run({"export", "S3", "--out", file.string()}).code, 0);
  auto a = run({"analyze", file.string()});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(has_line(a.out, "order: 6")) << a.out;
  fs::remove(file);
}
