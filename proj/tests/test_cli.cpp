#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded; args are passed through the shell.
Run cli(const std::string& args) {
  const std::string cmd = std::string(POLARDEG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, TrianglePolarDegree) {
  const auto r = cli("polar --poly 'x0*x1*x2' --i 0 --json");
  EXPECT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["command"], "polar");
  EXPECT_EQ(cli("polar --poly 'x0*x1*x2' --i 0").out, "deg_0 = 1\n");
}

TEST(Cli, DolgachevSuitePasses) {
  const auto r = cli("verify dolgachev");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all passed"), std::string::npos);
  const auto j = json_of(cli("verify dolgachev --json"));
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["outcomes"].size(), 6u);
}

TEST(Cli, ZeroDegreeIsRejected) {
  const auto r = cli("polar --poly 'x0^2' --poly 'x1^3' --weights '1,-2/3' --json");
  EXPECT_EQ(r.code, 1);
  const auto j = json_of(r);
  EXPECT_EQ(j["status"], "error");
  EXPECT_NE(j["message"].get<std::string>().find("zero"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("polar").code, 2);
  EXPECT_EQ(cli("polar --poly 'x0*x1' --i 0 --profile").code, 2);
  EXPECT_EQ(cli("verify no-such-claim").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  const auto r = cli("polar --poly 'x0 x1' --json");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json_of(r)["status"], "usage-error");
  EXPECT_EQ(cli("polar --poly 'x0*x1*x2' --i 5").code, 2);
  EXPECT_EQ(cli("polar --poly 'x0' --poly 'x1' --weights '1'").code, 2);
}

TEST(Cli, SameArgumentsSameBytes) {
  const std::string args = "polar --poly 'x0^3 + x1^3 + x2^3' --profile --seed 17 --json";
  const auto a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json_of(a)["degrees"], nlohmann::json::array({4, 2}));
  EXPECT_NE(cli("polar --poly 'x0^3 + x1^3 + x2^3' --profile --seed 18 --json").out, a.out);
}

TEST(Cli, PrimeAndTrialsAreHonored) {
  const auto j = json_of(cli("polar --poly 'x0^2 + x1^2 + x2^2' --profile --prime 1000000007 --trials 3 --json"));
  EXPECT_EQ(j["field"]["prime"], 1000000007);
  EXPECT_EQ(j["trials"].size(), 6u);
  EXPECT_EQ(cli("polar --poly 'x0*x1*x2' --prime 1000").code, 2);
  EXPECT_EQ(cli("polar --poly 'x0*x1*x2' --prime 2147483649").code, 2);
}

TEST(Cli, GaussDegrees) {
  const auto r = cli("gauss --foliation-from 'x0;x1;x2|1,1,1' --json");
  EXPECT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["ambient"], 3);
  EXPECT_EQ(j["foliation_degree"], 2);
  EXPECT_EQ(j["degrees"], nlohmann::json::array({1, 3, 3}));
  const auto one = json_of(cli("gauss --foliation-from 'x0;x1;x2' --k 2 --i 1 --json"));
  EXPECT_EQ(one["value"], 3);
}

TEST(Cli, FoliationSingularDegree) {
  const auto r = cli("foliation --foliation-from 'x0;x1;x0 + x1;x2;x0 + 3*x1 + 5*x2|1,1,-2,1,-1' --sing-degree --json");
  EXPECT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["ambient"], 2);
  EXPECT_EQ(j["foliation_degree"], 3);
  EXPECT_EQ(j["sing_degree"], 13);
  EXPECT_EQ(j["integrable"], true);
}

TEST(Cli, VerifyWithInstanceFlags) {
  EXPECT_EQ(cli("verify polar-relation --poly 'x0^3 + x1^3 + x2^3' --i 1").code, 0);
  EXPECT_EQ(cli("verify product-bound --poly 'x0*x1' --poly 'x2'").code, 0);
  EXPECT_EQ(cli("verify invariance --poly x0 --poly x1 --poly x2 --weight-set '2,5,11'").code, 0);
  EXPECT_EQ(cli("verify invariance --poly x0 --poly x1 --poly x2 --weight-set '1,-1,1'").code, 1);
  const auto j =
      json_of(cli("verify invariance --poly x0 --poly x1 --poly x2 --weight-set '1,-1,1' --allow-unverified --json"));
  EXPECT_EQ(j["outcomes"][0]["label"], "hypothesis-unverified");
  EXPECT_EQ(cli("verify resonance --k 3").code, 0);
  EXPECT_EQ(cli("verify gauss-theorem --foliation-from 'x0^2 + x1^2 + x2^2' --k 3 --i 1").code, 0);
}
