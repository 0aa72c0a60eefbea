#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "scdt/catalog.hpp"
#include "scdt/report.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(SCDT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("reports are identical across worker counts") {
  for (const char* name : {"icosahedron", "clebsch16", "cell24", "cross_polytope(5)"}) {
    auto code = scdt::construct(name);
    auto expected = scdt::catalog_entry(name).expected;
    scdt::ReportOptions one;
    auto base = scdt::analyze_report(code, one, expected);
    CHECK(base.exit_code == 0);
    for (unsigned w : {2u, 4u, 7u}) {
      scdt::ReportOptions opt;
      opt.workers = w;
      auto other = scdt::analyze_report(code, opt, expected);
      CHECK(other.text == base.text);
      CHECK(other.exit_code == base.exit_code);
      CHECK(scdt::scheme_report(code, opt).text == scdt::scheme_report(code, one).text);
      CHECK(scdt::bound_report(code, opt).text == scdt::bound_report(code, one).text);
    }
  }
}

TEST_CASE("approximate hints are appended only on request") {
  auto code = scdt::icosahedron();
  scdt::ReportOptions plain, approx;
  approx.approx = true;
  auto a = scdt::analyze_report(code, plain).text;
  auto b = scdt::analyze_report(code, approx).text;
  CHECK_FALSE(contains(a, "untrusted"));
  CHECK(contains(b, "untrusted"));
  CHECK(b.substr(0, 40) == a.substr(0, 40));
}

TEST_CASE("analyze icosahedron through the binary") {
  auto r = run("analyze catalog:icosahedron");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "exception: icosahedron"));
  CHECK(contains(r.out, "verdict: ok"));
  CHECK(contains(r.out, "1/5*sqrt(5)"));
}

TEST_CASE("analyze e8 through the binary") {
  auto r = run("analyze catalog:e8_kissing --workers 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "bound: 240"));
  CHECK(contains(r.out, "all rational: yes"));
}

TEST_CASE("usage and input errors exit with 2") {
  const auto bad = std::filesystem::temp_directory_path() / "scdt_cli_bad.txt";
  {
    std::ofstream f(bad);
    f << "scdt-code v1\nlabel bad\ndim 3\nsize 2\nkind gram\n1 0\n";
  }
  CHECK(run("analyze " + bad.string()).status == 2);
  CHECK(run("analyze /nonexistent/path.txt").status == 2);
  CHECK(run("analyze catalog:leech").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("scan --s 7 --n-min 3 --n-max 4").status == 2);
  CHECK(run("analyze catalog:cell600").status == 2);
  std::filesystem::remove(bad);
}

TEST_CASE("constancy failures exit with 1") {
  const auto path = std::filesystem::temp_directory_path() / "scdt_cli_penta.txt";
  {
    // five vertices of the octahedron
    std::ofstream f(path);
    f << "scdt-code v1\nlabel five\ndim 3\nsize 5\nkind coords 1\n1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n";
  }
  auto r = run("scheme " + path.string());
  CHECK(r.status == 1);
  CHECK(contains(r.out, "verdict: violated"));
  std::filesystem::remove(path);
}

TEST_CASE("catalog subcommands") {
  auto list = run("catalog list");
  CHECK(list.status == 0);
  CHECK(contains(list.out, "simplex(10)"));
  CHECK_FALSE(contains(list.out, "cell600"));
  CHECK(contains(run("catalog list --extended").out, "cell600"));

  const auto path = std::filesystem::temp_directory_path() / "scdt_cli_emit.txt";
  CHECK(run("catalog emit clebsch16 " + path.string()).status == 0);
  auto r = run("analyze " + path.string());
  CHECK(r.status == 0);
  CHECK(contains(r.out, "bound: 16"));
  std::filesystem::remove(path);
}

TEST_CASE("scan through the binary") {
  auto r = run("scan --s 4 --n-min 3 --n-max 6");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "6/7"));
}

TEST_CASE("golden reports on the corpus") {
  const std::filesystem::path dir = SCDT_GOLDEN_DIR;
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".out") continue;
    const std::string name = entry.path().stem().string();
    std::ifstream f(entry.path());
    std::string golden((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CAPTURE(name);
    auto r = run("analyze 'catalog:" + name + "'");
    CHECK(r.status == 0);
    CHECK(r.out == golden);
    ++seen;
  }
  CHECK(seen >= 5);
}
