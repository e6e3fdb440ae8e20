#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " '" + WEYLREPS_CLI_PATH + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) out += buffer.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("weylreps_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("product") {
    const auto u1 = write_temp("u1", "{a: \"1\", b: \"0\", re: 1, im: 0}\n");
    const auto v1 = write_temp("v1", "{a: \"0\", b: \"1\", re: 1, im: 0}\n");
    const auto zero = write_temp("zero", "# nothing\n");

    const auto uv = run("product " + u1 + " " + v1);
    CHECK(uv.code == 0);
    CHECK(uv.out == "{a: \"1\", b: \"1\", re: 1, im: 0}\n");

    const auto vu = run("product " + v1 + " " + u1);
    CHECK(vu.code == 0);
    CHECK(vu.out == "{a: \"1\", b: \"1\", re: 0.5403023058681398, im: 0.8414709848078965}\n");

    const auto z = run("product " + u1 + " " + zero);
    CHECK(z.code == 0);
    CHECK(z.out.empty());
  }

  TEST_CASE("parse failures exit 2 with a location") {
    const auto bad = write_temp("bad", "{a: \"1\", b: \"0\", re: 1}\n{a: \"x/2\", b: \"0\", re: 1}\n");
    const auto u1 = write_temp("u1b", "{a: \"1\", b: \"0\", re: 1}\n");
    const auto r = run("product " + u1 + " " + bad);
    CHECK(r.code == 2);
    CHECK(r.out.find("line 2") != std::string::npos);
    CHECK(run("product " + u1 + " /nonexistent/file").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
  }

  TEST_CASE("continuity scans") {
    const auto p = run("continuity-scan --state position:0 --direction V --grid 0,1/8,1/64");
    CHECK(p.code == 0);
    CHECK(p.out == "parameter,re,im\n0,1,0\n1/8,0,0\n1/64,0,0\n");
    CHECK(run("continuity-scan --state vacuum --direction V --grid 0").out == "parameter,re,im\n0,1,0\n");
    CHECK(run("continuity-scan --state vacuum --direction U --grid 1").out == "parameter,re,im\n1,0.7788007830714049,0\n");
    CHECK(run("continuity-scan --state bogus:1 --direction V --grid 0").code == 2);
    CHECK(run("continuity-scan --state vacuum --direction W --grid 0").code == 2);
    CHECK(run("continuity-scan --state vacuum --direction U --grid 1/0").code == 2);
  }

  TEST_CASE("eval-state and gns-build") {
    const auto x = write_temp("x", "{a: 2, b: 0, re: 1} {a: 0, b: 1, re: 1}\n");
    const auto e = run("eval-state --state position:1 " + x);
    CHECK(e.code == 0);
    CHECK(e.out.find("re: -0.41614683654714") != std::string::npos);

    const auto g = run("gns-build --state position:0 " + x);
    CHECK(g.code == 0);
    CHECK(g.out.find("positivity: PASS") != std::string::npos);
    CHECK(run("gns-build --state vacuum " + x).code == 0);
  }

  TEST_CASE("mean") {
    const auto f = write_temp("f", "{freq: \"0\", re: 2} {freq: \"1/2\", re: 5} {freq: \"-3\", re: 0, im: -1}\n");
    const auto r = run("mean " + f + " --N 1000");
    CHECK(r.code == 0);
    CHECK(r.out.find("mean: 2 + 0i") != std::string::npos);
    CHECK(r.out.find("cross-check: PASS") != std::string::npos);
  }

  TEST_CASE("verify") {
    const auto a = run("verify --suite algebra");
    CHECK(a.code == 0);
    CHECK(a.out.rfind("seed: 42\n", 0) == 0);
    CHECK(a.out.find("Weyl relation U_a V_b = e^{-iab} V_b U_a: PASS (200 samples") != std::string::npos);

    const auto g = run("verify --suite gns");
    CHECK(g.code == 0);
    CHECK(g.out.find("Eigenvector complementarity witness (position)") != std::string::npos);

    const auto ap = run("verify --suite ap");
    CHECK(ap.out.find("Haar Fourier witness") != std::string::npos);

    CHECK(run("verify --suite algebra --seed 7").out.rfind("seed: 7\n", 0) == 0);
    CHECK(run("verify --suite algebra --seed 7", "WEYLREPS_SEED=99").out.rfind("seed: 99\n", 0) == 0);
    CHECK(run("verify --suite algebra", "WEYLREPS_SEED=abc").code == 2);
    CHECK(run("verify --suite nope").code == 2);

    // Same seed, same report.
    CHECK(run("verify --suite reps --seed 5").out == run("verify --suite reps --seed 5").out);
  }
}
