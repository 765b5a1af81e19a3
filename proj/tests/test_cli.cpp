#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args, const std::string& outfile) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " > " + outfile + " 2>&1";
  REQUIRE(std::system(cmd.c_str()) != -1);
  std::ifstream in(outfile);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(run("validate --family beauville") == 0);
  CHECK(run("homology --family d4xz2") == 0);
  CHECK(run("validate --family no-such-family") == 2);
  CHECK(run("validate") == 2);                       // neither --family nor --input
  CHECK(run("validate --input /no/such/file") == 2);
  CHECK(run("frobnicate") == 2);                     // unknown subcommand

  // semantic failure: a datum whose long relation fails
  std::string path = "cli_bad_input.txt";
  {
    std::ofstream out(path);
    out << "[group]\nabelian 5 5\n[vector1]\ne1\ne2\n[vector2]\ne1\ne2\n";
  }
  CHECK(run("validate --input " + path) == 1);
  std::remove(path.c_str());
}

TEST_CASE("deterministic output") {
  std::string a = run_capture("homology --family beauville --json", "cli_out_a.json");
  std::string b = run_capture("homology --family beauville --json", "cli_out_b.json");
  CHECK(a == b);
  CHECK(a.find("\"trivial_central_set\"") != std::string::npos);
  std::remove("cli_out_a.json");
  std::remove("cli_out_b.json");
}

TEST_CASE("validate text output mentions the invariants") {
  std::string out = run_capture("validate --family beauville", "cli_out_v.txt");
  CHECK(out.find("chi=1") != std::string::npos);
  CHECK(out.find("q=0") != std::string::npos);
  CHECK(out.find("OK") != std::string::npos);
  std::remove("cli_out_v.txt");
}

TEST_CASE("autbound on a family with an input-file twin") {
  // the same datum through --input must agree with the embedded family
  std::string path = "cli_beauville.txt";
  {
    std::ofstream out(path);
    out << "[group]\nabelian 5 5\n"
           "[vector1]\n(1,0)\n(0,1)\n(-1,-1)\n"
           "[vector2]\n(1,-1)\n(1,2)\n(-2,-1)\n";
  }
  std::string a = run_capture("homology --input " + path + " --json", "cli_out_c.json");
  std::string b = run_capture("homology --family beauville --json", "cli_out_d.json");
  CHECK(a == b);
  std::remove(path.c_str());
  std::remove("cli_out_c.json");
  std::remove("cli_out_d.json");
}
