#include <doctest.h>

#include "fourcalc/script.hpp"

using namespace fourcalc;

namespace {

const char* kZ3Script =
    "let A = block(\"S_hat\")  # S # CP2bar\n"
    "let B = block(\"X_km\", 3, 1)\n"
    "let Z = sum(A, \"Rtilde\", B, \"Sigma6\")\n"
    "assert Z.e == 52\n"
    "assert Z.sigma == 0\n"
    "assert Z.c1sq == 104\n"
    "assert Z.chi_h == 13\n"
    "let T = homeo(Z)\n"
    "assert T.a == 25\n"
    "assert T.b == 25\n";

}  // namespace

TEST_CASE("parse accepts the construction ledger") {
  Script s = parse_script(kZ3Script);
  CHECK(s.statements.size() == 10);
}

TEST_CASE("syntax errors carry position and expectation") {
  try {
    parse_script("let = 3");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.pos.line == 1);
    CHECK(e.pos.column == 5);
    CHECK(std::string(e.what()).find("expected IDENT") != std::string::npos);
    CHECK(std::string(e.what()).find("'='") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_script("let x = "), SyntaxError);
  CHECK_THROWS_AS(parse_script("assert 1 < 2"), SyntaxError);  // only == != <= >=
  CHECK_THROWS_AS(parse_script("let x = \"unterminated"), SyntaxError);
}

TEST_CASE("static name checks") {
  CHECK_THROWS_AS(parse_script("print missing"), UnboundName);
  CHECK_THROWS_AS(parse_script("let a = 1\nlet a = 2"), UnboundName);
  CHECK_NOTHROW(parse_script("let a = 1\nprint a"));
}

TEST_CASE("running the Z3 assembly succeeds") {
  RunResult r = run_script(parse_script(kZ3Script));
  CHECK(r.exit_code == 0);
  CHECK(r.transcript.empty());
}

TEST_CASE("failed asserts report both sides and stop") {
  Script s = parse_script(
      "let Z = pipeline(\"Z3\")\n"
      "assert Z.e == 53\n"
      "print Z.e\n");
  RunResult r = run_script(s);
  CHECK(r.exit_code == 1);
  REQUIRE(r.transcript.size() == 1);  // the print never runs
  CHECK(r.transcript[0].find("52 != 53") != std::string::npos);
  CHECK(r.transcript[0].find("line 2") != std::string::npos);
}

TEST_CASE("runtime errors surface with the statement span") {
  Script s = parse_script("let A = block(\"no_such_block\")");
  try {
    run_script(s);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.pos.line == 1);
    CHECK(std::string(e.what()).find("no_such_block") != std::string::npos);
  }
  CHECK_THROWS_AS(run_script(parse_script("let t = threshold(1, 2)")), ArityMismatch);
  CHECK_THROWS_AS(run_script(parse_script("let x = block(1)")), EvalError);
}

TEST_CASE("threshold and comparisons work in scripts") {
  RunResult r = run_script(parse_script(
      "let k = threshold(27, 1, 1)\n"
      "assert k == 27\n"
      "assert k <= 27\n"
      "assert k >= 27\n"
      "assert k != 26\n"));
  CHECK(r.exit_code == 0);
}

TEST_CASE("print emits deterministic transcripts") {
  Script s = parse_script("let Z = pipeline(\"Z3\")\nprint Z.e\nprint Z\n");
  RunResult a = run_script(s);
  RunResult b = run_script(s);
  CHECK(a.exit_code == 0);
  REQUIRE(a.transcript.size() == 2);
  CHECK(a.transcript[0] == "52");
  CHECK(a.transcript == b.transcript);
  CHECK(a.transcript[1].find("\"pi1\":\"trivial\"") != std::string::npos);
}

TEST_CASE("render round-trips through the parser") {
  for (const char* src : {kZ3Script,
                          "let k = threshold(25, 0, 0)\nassert k >= 25\n",
                          "let A = block(\"T4\")\nlet B = resolve(A, \"Ta\", \"Tb\")\n"
                          "print B.b2plus\n",
                          "let A = block(\"Yn\", 2)\nlet L = luttinger(A, \"Sigma2\", \"g\", -1)\n"}) {
    Script parsed = parse_script(src);
    std::string rendered = render_script(parsed);
    CHECK(script_equal(parse_script(rendered), parsed));
    // rendering is a fixed point
    CHECK(render_script(parse_script(rendered)) == rendered);
  }
}

TEST_CASE("negative integer literals") {
  Script s = parse_script("let A = block(\"X_km\", 3, -1)\nassert A.sigma == -4\n");
  CHECK(run_script(s).exit_code == 0);
}
