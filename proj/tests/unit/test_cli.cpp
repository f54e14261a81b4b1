#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "support/oracles.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, bool tty = false) {
  std::ostringstream out, err;
  const int code = xdt::cli::run(args, out, err, tty);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& rel) { return oracle::source_path(rel); }

}  // namespace

TEST_CASE("encode writes the golden module to stdout") {
  auto r = run({"encode", fx("fixtures/typx.xdt")});
  CHECK(r.code == 0);
  CHECK(r.out == oracle::read_text(fx("tests/golden/typx.compact.hs")));
  CHECK(r.err.empty());
  auto n = run({"encode", "--mode", "naive", fx("fixtures/typx.xdt")});
  CHECK(n.code == 0);
  CHECK(n.out == oracle::read_text(fx("tests/golden/typx.naive.hs")));
}

TEST_CASE("encode to a file and in echo mode") {
  const auto path = (std::filesystem::temp_directory_path() / "xdt_cli_test.hs").string();
  auto r = run({"encode", fx("fixtures/typdot.xdt"), "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(oracle::read_text(path) == oracle::read_text(fx("tests/golden/typdot.compact.hs")));
  std::remove(path.c_str());

  auto e = run({"encode", "--backend", "dsl-echo", fx("fixtures/typdot.xdt")});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("extensible data TypX", 0) == 0);
}

TEST_CASE("partial flag lets uncovered constructors through") {
  auto strict = run({"encode", fx("tests/fixtures/invalid/e008_not_covered.xdt")});
  CHECK(strict.code == 1);
  CHECK(strict.out.empty());
  auto lax = run({"encode", "--partial", fx("tests/fixtures/invalid/e008_not_covered.xdt")});
  CHECK(lax.code == 0);
  CHECK(lax.out.find("data instance Ext_TypDot \"ArrX\" = None_ArrX") != std::string::npos);
  CHECK(lax.out.find("pattern ArrDot") == std::string::npos);
}

TEST_CASE("check exit codes") {
  auto clean = run({"check", fx("fixtures/growlang.xdt")});
  CHECK(clean.code == 0);
  CHECK(clean.out.empty());
  auto bad = run({"check", fx("fixtures/bad_parammap.xdt")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error[E003]") != std::string::npos);
  CHECK(bad.out.empty());
  for (const auto& f : std::filesystem::directory_iterator(fx("tests/fixtures/invalid")))
    CHECK(run({"check", f.path().string()}).code == 1);
}

TEST_CASE("warnings do not fail a check") {
  const auto path = (std::filesystem::temp_directory_path() / "xdt_cli_warn.xdt").string();
  {
    std::ofstream f(path);
    f << "extensible data B a = B1\n";
  }
  auto r = run({"check", path});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning[W001]") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "/no/such/file.xdt"}).code == 2);
  CHECK(run({"encode", "--mode", "sideways", fx("fixtures/typx.xdt")}).code == 2);
  CHECK(run({"demo", fx("fixtures/id_app.gl")}).code == 2);
}

TEST_CASE("help and version") {
  auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(xdt::cli::kVersion) != std::string::npos);
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("encode") != std::string::npos);
}

TEST_CASE("demo pipeline") {
  auto inf = run({"demo", "infer", fx("fixtures/id_app.gl")});
  CHECK(inf.code == 0);
  CHECK(inf.out.find("type: Int\n") != std::string::npos);
  CHECK(inf.out.find("App {Int}") != std::string::npos);

  auto pr = run({"demo", "print", fx("fixtures/id_app.gl")});
  CHECK(pr.code == 0);
  CHECK(pr.out == "((λx.x) :: ((Int) → Int)) (1)\n");

  auto chk = run({"demo", "check", fx("fixtures/id_app.gl")});
  CHECK(chk.code == 0);
  CHECK(chk.out == "ok: Int\n");

  for (const auto& f : std::filesystem::directory_iterator(fx("tests/corpus/well_typed")))
    CHECK(run({"demo", "check", f.path().string()}).code == 0);
  for (const auto& f : std::filesystem::directory_iterator(fx("tests/corpus/ill_typed"))) {
    auto r = run({"demo", "infer", f.path().string()});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("expect header") {
  bool found = false;
  CHECK(xdt::cli::expected_type_header("-- note\n--  expect:  Int -> Int \n1", found) == "Int -> Int");
  CHECK(found);
  xdt::cli::expected_type_header("1\n-- expect: Int\n", found);
  CHECK_FALSE(found);
}

TEST_CASE("colour is controlled by XDT_COLOR") {
  const std::string bad = fx("fixtures/bad_parammap.xdt");
  ::setenv("XDT_COLOR", "never", 1);
  CHECK(run({"check", bad}, true).err.find("\x1b[") == std::string::npos);
  ::setenv("XDT_COLOR", "auto", 1);
  CHECK(run({"check", bad}, true).err.find("\x1b[31m") != std::string::npos);
  CHECK(run({"check", bad}, false).err.find("\x1b[") == std::string::npos);
  ::setenv("XDT_COLOR", "rainbow", 1);
  CHECK(run({"check", bad}).code == 2);
  ::unsetenv("XDT_COLOR");
}
