#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef DUNWOODY_CLI_PATH
#error "DUNWOODY_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
  int exitCode;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd =
      std::string(DUNWOODY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check: exit codes follow the admissibility verdict") {
  CHECK(run("check 0,0,1,1,0,0").exitCode == 0);
  CHECK(run("check 2,0,2,1,2,0").exitCode == 1);
  CHECK(run("check 1,0,2,1,2,0").exitCode == 1);
  CHECK(run("check 0,0,0,1,0,0").exitCode == 2);
  CHECK(run("check not-a-tuple").exitCode == 2);
  CHECK(run("check 1,2,3").exitCode == 2);
}

TEST_CASE("check: report content") {
  RunResult res = run("check 2,0,2,1,2,0");
  CHECK(contains(res.output, "m (cycles)   2"));
  CHECK(contains(res.output, "admissible   no"));
}

TEST_CASE("classify: lens space and homology") {
  RunResult res = run("classify 0,0,5,1,2,0");
  CHECK(res.exitCode == 0);
  CHECK(contains(res.output, "L(5,2)"));
  CHECK(contains(res.output, "Z/5"));

  RunResult s1s2 = run("classify 1,0,0,1,1,0");
  CHECK(s1s2.exitCode == 0);
  CHECK(contains(s1s2.output, "S1xS2"));

  CHECK(run("classify 2,0,2,1,2,0").exitCode == 1);
}

TEST_CASE("classify: symbolic s resolves to the sphere-covering family") {
  RunResult res = run("classify 1,0,1,3,1,auto");
  CHECK(res.exitCode == 0);
  CHECK(contains(res.output, "quotient class   S3"));
  CHECK(contains(res.output, "covering degree  3"));
}

TEST_CASE("word and homology subcommands") {
  RunResult word = run("word 0,0,5,1,2,0");
  CHECK(word.exitCode == 0);
  CHECK(contains(word.output, "exponent sum 5"));
  RunResult hom = run("homology 1,0,0,1,1,0");
  CHECK(hom.exitCode == 0);
  CHECK(contains(hom.output, "infinite"));
}

TEST_CASE("json output parses and round-trips") {
  RunResult res = run("--format json check 0,0,5,1,2,0");
  CHECK(res.exitCode == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["admissible"] == true);
  CHECK(j["sigma"]["c"] == 5);
  CHECK(j["p"] == 5);
  // Round-trip: re-serializing the parsed value preserves it.
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("sweep: csv header and deterministic parallel output") {
  RunResult seq = run("--format csv sweep --a 0..1 --b 0..1 --c 0..1 --n 1..2");
  CHECK(seq.exitCode == 0);
  CHECK(contains(seq.output, "a,b,c,n,r,s,admissible,m,p,q,eps,quotient,h1_order"));
  RunResult par = run(
      "--format csv sweep --a 0..1 --b 0..1 --c 0..1 --n 1..2 --jobs 4");
  CHECK(par.output == seq.output);
}

TEST_CASE("sweep: filters") {
  RunResult res =
      run("--format csv sweep --a 0..1 --b 0 --c 0..2 --n 1..2 "
          "--filter admissible");
  CHECK(res.exitCode == 0);
  std::istringstream lines(res.output);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    // admissible flag is field 7
    std::istringstream fields(line);
    std::string f;
    for (int i = 0; i < 7; ++i) std::getline(fields, f, ',');
    CHECK(f == "1");
  }
  CHECK(rows > 0);
}

TEST_CASE("sweep: config file") {
  const std::string path = "/tmp/dunwoody_sweep_test.cfg";
  {
    std::ofstream cfg(path);
    cfg << "# test box\n"
        << "a=0..1\nb=0\nc=0..2\nn=1..2\nfilter=admissible\nformat=csv\n";
  }
  RunResult res = run("sweep --config " + path);
  CHECK(res.exitCode == 0);
  CHECK(contains(res.output, "a,b,c,n,r,s,"));
  RunResult flags =
      run("--format csv sweep --a 0..1 --b 0 --c 0..2 --n 1..2 "
          "--filter admissible");
  CHECK(res.output == flags.output);
  std::remove(path.c_str());
}

TEST_CASE("sweep: bad config exits 2") {
  CHECK(run("sweep --a 2..1").exitCode == 2);
  CHECK(run("sweep --config /nonexistent.cfg").exitCode == 2);
  CHECK(run("sweep --filter bogus").exitCode == 2);
}

TEST_CASE("two-bridge: verification table") {
  RunResult res = run("two-bridge 3 2 --n-max 5");
  CHECK(res.exitCode == 0);
  CHECK(contains(res.output, "match"));
  CHECK(run("two-bridge 4 2 --n-max 3").exitCode == 2);
  CHECK(run("two-bridge 9 3 --n-max 3").exitCode == 2);
  // beta is taken mod 2*alpha rather than rejected.
  CHECK(run("two-bridge 3 4 --n-max 3").exitCode == 0);
  CHECK(run("two-bridge 3 8 --n-max 3").exitCode == 0);
}
