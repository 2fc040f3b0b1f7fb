#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mm/cli.hpp"
#include "mm/report.hpp"
#include "support.hpp"

using namespace mm;

namespace {

const char* kSample =
    "p = 32003\n"
    "vars = [x, y]\n"
    "gamma = []\n"
    "J = [\"x\", \"y\"]\n"
    "I = [[\"x^2\", \"y^3\"]]\n"
    "base0 = 4\n"
    "window = 3\n"
    "seed = 7\n";

struct Run {
  int status;
  Json json;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, Json::parse(out.str())};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = (std::filesystem::temp_directory_path() / ("mm_test_" + name + ".txt")).string();
  std::ofstream(path) << text;
  return path;
}

ErrorCode load_error(const std::string& text) {
  try {
    build_instance(parse_problem_text(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInput;
}

}  // namespace

TEST_CASE("sample problem parses and prints back") {
  auto pf = parse_problem_text(kSample);
  CHECK(pf.vars == std::vector<std::string>{"x", "y"});
  CHECK(pf.I.size() == 1);
  CHECK(pf.base0 == 4);
  CHECK(pf.seed == 7u);
  CHECK(print_problem(pf) == kSample);
  CHECK(parse_problem_text(print_problem(pf)) == pf);

  auto loaded = build_instance(pf);
  CHECK(loaded.instance.s() == 1);
  CHECK(loaded.ring->nvars() == 2);
  CHECK(std::vector<int>(loaded.ring->weights().begin(), loaded.ring->weights().end()) == std::vector<int>{3, 2});
}

TEST_CASE("comments, identifiers and optional keys") {
  auto pf = parse_problem_text("# header\nvars = [a, b]   # two\nweights = [1, 2]\nJ = [\"a\", \"b\"]\nI = [[\"a#1\"]]\nretries = 9\n");
  CHECK(pf.weights == std::vector<int>{1, 2});
  CHECK(pf.I[0][0] == "a#1");
  CHECK(pf.retries == 9);
  CHECK(pf.p == 32003u);
  CHECK(parse_problem_text(print_problem(pf)) == pf);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_problem_text("vars = [x, y]\nJ = [\"x\", \"y\"\nI = [[\"x\"]]\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_problem_text("vars = [x, y]\n  colour = 3\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_problem_text("vars = [x]\nvars = [y]\n"), SyntaxError);
  CHECK_THROWS_AS(parse_problem_text("vars = [x]\nI = [[\"x\"]]\n"), SyntaxError);
}

TEST_CASE("validation errors are distinct") {
  CHECK(load_error("vars = [x, y]\nJ = [\"x\"]\nI = [[\"y\"]]\n") == ErrorCode::kJNotMPrimary);
  CHECK(load_error("vars = [x, y]\ngamma = [\"x^2\"]\nJ = [\"x\", \"y\"]\nI = [[\"x\"]]\n") == ErrorCode::kINilpotent);
  CHECK(load_error("vars = [x, y]\nJ = [\"x\", \"y\"]\nI = [[\"x + y^2\", \"x*y + y\"]]\n") == ErrorCode::kHomogeneity);
  CHECK(load_error("vars = [x, y]\nJ = [\"x\", \"z\"]\nI = [[\"x\"]]\n") == ErrorCode::kSyntax);
  CHECK(load_error("vars = [x, y]\nweights = [1, 1]\nJ = [\"x\", \"y\"]\nI = [[\"x^2 + y^3\"]]\n") ==
        ErrorCode::kHomogeneity);
}

TEST_CASE("automatic weights") {
  auto pf = parse_problem_text("vars = [x, y]\nJ = [\"x\", \"y\"]\nI = [[\"x\", \"y\"]]\n");
  CHECK(choose_weights(pf) == std::vector<int>{1, 1});
  pf = parse_problem_text("vars = [x, y, z]\ngamma = [\"x^3 - y*z\"]\nJ = [\"x\", \"y\", \"z\"]\nI = [[\"x\"]]\n");
  auto w = choose_weights(pf);
  CHECK(3 * w[0] == w[1] + w[2]);
}

TEST_CASE("cli commands") {
  auto path = write_temp("sample", kSample);
  auto mixed = cli({"mixed", path});
  CHECK(mixed.status == 0);
  CHECK(mixed.json["ell"] == 2);
  CHECK(mixed.json["e"]["(1,0)"] == 1);
  CHECK(mixed.json["e"]["(0,1)"] == 2);
  CHECK(mixed.json.dump().rfind(R"j({"ell":2,"e":{"(1,0)":1,"(0,1)":2})j", 0) == 0);

  auto v = cli({"verify", path, "--type", "0,1"});
  CHECK(v.status == 0);
  CHECK(v.json["results"][0]["status"] == "equal");

  auto f = cli({"free", "--d", "2", "--t", "2"});
  CHECK(f.status == 0);
  CHECK(f.json["e"]["(1,1)"] == 1);
  CHECK(f.json["e"]["(2,0)"] == 0);
  CHECK(f.json["e"]["(0,2)"] == 0);

  auto h = cli({"hsm", path, "--H", "x^2 + 5*y^3"});
  CHECK(h.status == 0);
  CHECK(h.json["mult"] == 2);

  auto t = cli({"table", path, "--serial"});
  CHECK(t.status == 0);
  CHECK(t.json["stabilized"] == true);
}

TEST_CASE("cli exit codes") {
  auto bad = write_temp("bad", "vars = [x, y]\nJ = [\"x\"]\nI = [[\"y\"]]\n");
  auto r = cli({"mixed", bad});
  CHECK(r.status == 1);
  CHECK(r.json["error"]["code"] == "J_NOT_M_PRIMARY");

  CHECK(cli({"nonsense"}).status == 1);
  CHECK(cli({"mixed"}).status == 1);
  CHECK(cli({"mixed", "/nonexistent/problem"}).status == 1);

  auto path = write_temp("sample2", kSample);
  auto st = cli({"mixed", path, "--base0", "1", "--window", "1"});
  CHECK(st.status == 1);  // window below ell is a precondition error

  auto fc = cli({"fc", path, "--type", "0,3"});
  CHECK(fc.status == 1);
  CHECK(fc.json["error"]["code"] == "PRECONDITION");
}

TEST_CASE("difftest is reproducible") {
  auto a = cli({"difftest", "--count", "6", "--seed", "11"});
  auto b = cli({"difftest", "--count", "6", "--seed", "11", "--serial"});
  CHECK(a.status == 0);
  CHECK(a.json == b.json);
  CHECK(a.json["mismatches"].empty());
}
