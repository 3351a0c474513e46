#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "sbt/scalar.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run sbt_cli(const std::string& args) {
  const std::string cmd = std::string(SBT_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

sbt::Scalar value(const Run& r) { return sbt::parse_scalar(strip(r.out)); }

}  // namespace

TEST_CASE("invariant command") {
  const Run unknot = sbt_cli("invariant --strands 1");
  CHECK(unknot.code == 0);
  CHECK(strip(unknot.out) == "1");
  CHECK(value(sbt_cli("invariant t1")) == sbt::parse_scalar("x/(a*w) + y + z"));
  CHECK(value(sbt_cli("invariant t1 --mode upsilon_prime")) == sbt::parse_scalar("x*b/(a*w) + y"));
  CHECK(value(sbt_cli("invariant t1 --mode upsilon_hat")) == sbt::parse_scalar("x/(a*w) + y + z"));
  CHECK(sbt_cli("invariant s1 s1 s1").code == 0);
  CHECK(sbt_cli("invariant t1 s1^-1 --ties 1,2").code == 0);
}

TEST_CASE("output is identical across runs and thread settings") {
  const Run a = sbt_cli("invariant t1 s2 s1^-1 t2 s3");
  const Run b = sbt_cli("--serial invariant t1 s2 s1^-1 t2 s3");
  const Run c = sbt_cli("--threads 3 invariant t1 s2 s1^-1 t2 s3");
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("specializations and substitutions") {
  // After a specialization, w in the output is the root of the specialized w^2.
  const auto psi = sbt::parse_scalar("x/(a*w) + y").substitute({{sbt::Var::v, sbt::Polynomial::variable(sbt::Var::u)}});
  CHECK(strip(sbt_cli("invariant t1 --spec psi").out) == psi.to_string());
  CHECK(strip(sbt_cli("specialize \"(u-1)*x\" --spec psi_prime").out) == "0");
  CHECK(strip(sbt_cli("invariant t1 --set x=0 --set y=0 --set z=1").out) == "1");
}

TEST_CASE("exit codes") {
  CHECK(sbt_cli("invariant x y").code == 1);
  CHECK(sbt_cli("invariant s1 --mode bogus").code == 1);
  CHECK(sbt_cli("frobnicate").code == 1);
  CHECK(sbt_cli("invariant s1 --ties 1,2").code == 2);
  CHECK(sbt_cli("invariant s3 --strands 3").code == 2);
  CHECK(sbt_cli("invariant s1 s2 s3 s4 s5 s6 s7").code == 2);
  CHECK(sbt_cli("--big invariant --strands 7").code == 0);
  CHECK(sbt_cli("check relations").code == 3);
  CHECK(sbt_cli("check trace --samples 5").code == 0);
  CHECK(sbt_cli("invariant s1 s2^-1 t1 --verify").code == 0);
  CHECK(sbt_cli("graded t1 t2 s1 --verify").code == 0);
}

TEST_CASE("compare command") {
  CHECK(strip(sbt_cli("compare --a \"t1 s1^-1\" --ties-a \"1|2\" --b \"t1 s1^-1\" --ties-b 1,2").out) == "distinct");
  CHECK(strip(sbt_cli("compare --mode upsilon_prime --a \"t1 s1^-1\" --ties-a \"1|2\" --b \"t1 s1^-1\" --ties-b 1,2").out) ==
        "equal");
  CHECK(strip(sbt_cli("compare --a \"s1 s1 s1\" --b \"s1 s1 s1\"").out) == "equal");
}

TEST_CASE("corpus command") {
  const std::string path = "cli_corpus_test.txt";
  {
    std::ofstream f(path);
    f << "# test corpus\n"
      << "n=1 ; - ; upsilon ; 1\n"
      << "t1 ; - ; upsilon ; x/(a*w) + y + z\n"
      << "s1 s1 s1 ; - ; upsilon ; ?\n";
  }
  const Run ok = sbt_cli("corpus " + path);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("recorded") != std::string::npos);
  {
    std::ofstream f(path);
    f << "t1 ; - ; upsilon ; x + y\n";
  }
  CHECK(sbt_cli("corpus " + path).code == 3);
  CHECK(sbt_cli("corpus does_not_exist.txt").code == 2);
}
