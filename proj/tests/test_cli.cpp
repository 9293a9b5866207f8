#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frobcert/certify.hpp"

using namespace frobcert;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(FROBCERT_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "frobcert_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, ExampleText) {
  const CliRun r = run("example --p 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("a-invariant  3"), std::string::npos);
  const CliRun j = run("example --p 3 --format json");
  EXPECT_EQ(j.status, 0);
  EXPECT_EQ(Json::parse(j.out).at("a_invariant"), 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("example --p 4").status, 2);
  EXPECT_EQ(run("example").status, 2);
  EXPECT_EQ(run("frobnicate --p 2").status, 2);
  EXPECT_EQ(run("certify anti-nilpotent --p 2 --window 0").status, 2);
  EXPECT_EQ(run("certify nonsense --p 2").status, 2);
  EXPECT_EQ(run("basis --p 2 --degree 0 --format yaml").status, 2);
  EXPECT_EQ(run("verify /nonexistent/cert.json").status, 2);
}

TEST(Cli, FrobeniusJsonRoundTrips) {
  const CliRun r = run("frobenius --p 2 --degree 0 --format json");
  ASSERT_EQ(r.status, 0);
  const PLinearMap phi = map_from_json(Json::parse(r.out));
  EXPECT_EQ(phi, frobenius_matrix_on_piece(make_example(2), 0));
  EXPECT_EQ(map_to_json(phi).dump(2) + "\n", r.out);
}

TEST(Cli, BasisPieces) {
  const CliRun empty = run("basis --p 2 --degree 4 --format json");
  ASSERT_EQ(empty.status, 0);
  EXPECT_TRUE(Json::parse(empty.out).at("basis").empty());
  const CliRun two = run("basis --p 3 --degree 0 --format json");
  const GradedPiece piece = piece_from_json(Json::parse(two.out));
  EXPECT_EQ(piece.basis, basis_of_degree(make_example(3), 0).basis);
  const CliRun ver = run("basis --p 2 --degree -1 --n 7 --format json");
  EXPECT_EQ(piece_from_json(Json::parse(ver.out)).basis, basis_of_degree(make_example(2), -7).basis);
}

TEST(Cli, CertifyWritesSortedNewlineTerminatedJson) {
  const auto path = scratch("nff2.json");
  const CliRun r = run("certify not-f-full --p 2 --out " + path.string());
  ASSERT_EQ(r.status, 0);
  const std::string text = slurp(path);
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  const Json cert = Json::parse(text);
  EXPECT_EQ(cert.dump(2) + "\n", text);
  EXPECT_TRUE(cert.at("verified").get<bool>());
  EXPECT_EQ(run("verify " + path.string()).status, 0);
}

TEST(Cli, NormalityWithoutF) {
  const CliRun r = run("certify normality --p 2 --no-f");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out).at("computed").at("containment").at("exponents"), (Json{2, 7, 11}));
}

TEST(Cli, VerifyRejectsTamperedCertificate) {
  const auto path = scratch("geo2.json");
  ASSERT_EQ(run("certify geo-f-injective --p 2 --out " + path.string()).status, 0);
  Json cert = Json::parse(slurp(path));
  cert["computed"]["kernel_dim"] = 2;
  const auto bad = scratch("geo2_bad.json");
  std::ofstream(bad) << cert.dump(2) << "\n";
  EXPECT_EQ(run("verify " + bad.string()).status, 1);
  const auto junk = scratch("junk.json");
  std::ofstream(junk) << "{not json";
  EXPECT_EQ(run("verify " + junk.string()).status, 2);
}

TEST(Cli, SelftestIsSeeded) {
  const CliRun a = run("selftest --seed 7 --cases 50 --format json");
  const CliRun b = run("selftest --seed 7 --cases 50 --format json");
  const CliRun c = run("selftest --seed 8 --cases 50 --format json");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_TRUE(Json::parse(a.out).at("ok").get<bool>());
}
