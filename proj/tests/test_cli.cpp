#include <doctest.h>

#include <sstream>

#include "castkit/cli.hpp"
#include "castkit/harness.hpp"
#include "castkit/parser.hpp"

using namespace castkit;

namespace {
std::string run_out(const std::string& src, const std::string& calc, bool trace = false,
                    int* code = nullptr, const std::string& variant = "cc") {
  std::ostringstream out, err;
  int c = cmd_run(src, calc, variant, 0, trace, out, err);
  if (code) *code = c;
  return out.str();
}
}  // namespace

TEST_CASE("parse and print round-trip") {
  std::vector<std::string> programs = {
      "((lam (x : Dyn) x) 4)@1",
      "(if true 1 2)@3",
      "(cons (inl Bool 1) (inr Nat true))",
      "(fst (cons 1 2))@2",
      "(case (inl Bool 1) ((a : Nat) a) ((b : Bool) 0))@4",
      "((lam (f : (-> Nat Nat)) (f 1)@1) inc)@2",
      "(snd (cons unit -3))@7",
  };
  for (const std::string& p : programs) {
    GTerm m = parse_program(p);
    std::string printed = print_program(m);
    GTerm again = parse_program(printed);
    CHECK(print_program(again) == printed);
  }
}

TEST_CASE("parse errors carry positions or reasons") {
  CHECK_THROWS_AS(parse_program("((lam (x : Dyn) x) 4)"), ParseError);  // missing label
  CHECK_THROWS_AS(parse_program("(lam (x : Wat) x)"), ParseError);
  CHECK_THROWS_AS(parse_program("(f 1)@1"), ParseError);  // unbound variable
  CHECK_THROWS_AS(parse_program("(cons 1"), ParseError);
  CHECK_THROWS_AS(parse_program("((lam (x : Dyn) x) 4)@0"), ParseError);  // labels positive
}

TEST_CASE("run prints values and exit codes") {
  int code = -1;
  CHECK(run_out("((lam (x : Dyn) x) 4)@1", "eda", false, &code) == "value 4\n");
  CHECK(code == kExitValue);

  // A Bool injected then projected at Nat blames the projection's label.
  std::string blame = run_out(
      "((lam (x : Nat) x) ((lam (y : Dyn) y) true)@1)@2", "eda", false, &code);
  CHECK(blame == "blame 2\n");
  CHECK(code == kExitBlame);

  std::ostringstream out, err;
  code = cmd_run("(syntax", "eda", "cc", 0, false, out, err);
  CHECK(code == kExitParseError);
  code = cmd_run("(true 1)@1", "eda", "cc", 0, false, out, err);
  CHECK(code == kExitTypeError);

  std::string omega =
      "((lam (x : Dyn) (x x)@1) (lam (x : Dyn) (x x)@2))@3";
  code = -1;
  CHECK(run_out(omega, "eda", false, &code) == "timeout\n");
  CHECK(code == kExitTimeout);
}

TEST_CASE("cast-free arithmetic agrees across every calculus") {
  for (const char* calc : {"eda", "edi", "lambda-b1", "lambda-b2", "edc", "ldc", "lambda-c",
                           "lambda-s", "hyper"}) {
    CHECK(run_out("((add 2)@1 3)@2", calc) == "value 5\n");
  }
}

TEST_CASE("trace emits one line per step") {
  int code = -1;
  std::string traced = run_out("((lam (x : Dyn) x) 4)@1", "eda", true, &code);
  REQUIRE(code == kExitValue);
  // Count lines; the last one is the outcome.
  int lines = 0;
  for (char c : traced)
    if (c == '\n') ++lines;
  std::ostringstream plain_out, err;
  cmd_run("((lam (x : Dyn) x) 4)@1", "eda", "cc", 0, false, plain_out, err);
  CHECK(plain_out.str() == "value 4\n");
  // Re-run through eval to count steps.
  GTerm g = parse_program("((lam (x : Dyn) x) 4)@1");
  CompileOutput out = compile(TypingCtx(), g, Discipline::Eda, CCMode::CC);
  Outcome o = eval(out.term, Discipline::Eda, CCMode::CC);
  CHECK(lines == o.steps + 1);
}

TEST_CASE("cc and cc-prime variants both run") {
  int code = -1;
  CHECK(run_out("((lam (x : Dyn) x) 4)@1", "edi", false, &code, "cc-prime") == "value 4\n");
  CHECK(code == kExitValue);
}

TEST_CASE("measure emits records and a verdict") {
  std::ostringstream out, err;
  int code = cmd_measure("((lam (x : Dyn) x) 4)@1", "lambda-s", 0, out, err);
  CHECK(code == kExitValue);
  std::string s = out.str();
  CHECK(s.find("\"rule\":\"init\"") != std::string::npos);
  CHECK(s.find("PASS") != std::string::npos);
  std::ostringstream out2, err2;
  code = cmd_measure("((lam (x : Dyn) x) 4)@1", "eda", 0, out2, err2);
  CHECK(code == kExitParseError);
}

TEST_CASE("diff prints a row per calculus and exits zero") {
  std::ostringstream out, err;
  int code = cmd_diff("((lam (x : Dyn) x) 4)@1",
                      {"eda", "edi", "lambda-b1", "lambda-s"}, 0, out, err);
  CHECK(code == 0);
  std::string s = out.str();
  CHECK(s.find("eda: value 4") != std::string::npos);
  CHECK(s.find("lambda-s: value 4") != std::string::npos);
  CHECK(s.find("agree") != std::string::npos);
}

TEST_CASE("environment fuel override") {
  CHECK(default_fuel() == 10000);
  setenv("CASTKIT_FUEL", "123", 1);
  CHECK(default_fuel() == 123);
  // A tiny budget turns the identity program into a timeout.
  std::ostringstream out, err;
  setenv("CASTKIT_FUEL", "1", 1);
  int code = cmd_run("((lam (x : Dyn) x) 4)@1", "eda", "cc", 0, false, out, err);
  CHECK(code == kExitTimeout);
  unsetenv("CASTKIT_FUEL");
  CHECK(default_fuel() == 10000);
}
