#include "support.hpp"

#include <sstream>

#include "hopfkit/cli.hpp"

using namespace hopfkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("printed built-ins parse back to themselves") {
  for (const std::string& name : builtin_examples()) {
    const Presentation p = builtin(name);
    CHECK_MESSAGE(parse_presentation(print_presentation(p)) == p, name);
  }
  const Presentation j = corrupt_drop_dd_correction(builtin("J"));
  CHECK(parse_presentation(print_presentation(j)) == j);
}

TEST_CASE("the shipped L file is the built-in") {
  CHECK(load_presentation_file(std::string(HOPFKIT_DATA_DIR) + "/L.hopf") == builtin("L"));
  CHECK_ERROR_KIND(load_presentation_file(std::string(HOPFKIT_DATA_DIR) + "/missing.hopf"), ErrorKind::SyntaxError);
}

TEST_CASE("presentation parse errors") {
  CHECK_ERROR_KIND(parse_presentation("generators: a:1 b:1\nrel: b a = a b\nrel: b a = a b + 1\n"),
                   ErrorKind::DuplicateRelation);
  try {
    parse_presentation("name: x\ngenerators: a:1 b:1\nrel: b a = a b +\n");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(has(e.what(), "line 3"));
  }
  CHECK_ERROR_KIND(parse_presentation("rel: b a = a b\n"), ErrorKind::SyntaxError);
  CHECK_ERROR_KIND(parse_presentation("generators: a:1 b:1\nrel: b a = a q\n"), ErrorKind::UnknownGenerator);
  CHECK_ERROR_KIND(builtin("nope"), ErrorKind::UnknownBuiltin);
  CHECK_ERROR_KIND(builtin("qplane(0)"), ErrorKind::ZeroQ);
}

TEST_CASE("a relation whose tail is a single lower letter") {
  const Presentation p = parse_presentation("generators: a:1 b:1 z:1\nrel: z a = a z + b\n");
  const Algebra a(p);
  CHECK(testing::show(a, testing::nf(a, "z a")) == "az + b");
}

TEST_CASE("expressions") {
  const Presentation l = builtin("L");
  CHECK(render(parse_pbw_expression(l, "2 a b - 1/2 c + 3"), l.alphabet()) == "2 ab - 1/2 c + 3");
  CHECK(render(parse_free_expression(l, "b a")) == "ba");
  CHECK_ERROR_KIND(parse_pbw_expression(l, "b a"), ErrorKind::TailNotNormal);
  CHECK_ERROR_KIND(parse_free_expression(l, "a +* b"), ErrorKind::SyntaxError);
  CHECK_ERROR_KIND(parse_free_expression(l, "q"), ErrorKind::UnknownGenerator);
}

TEST_CASE("command line: exit codes and report keys") {
  Run r = invoke({"check", "--builtin", "J"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "check.result=pass"));
  CHECK(has(r.out, "check.relations.passed=15"));

  r = invoke({"check", "--builtin", "J", "--corrupt", "drop-dd-correction"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "check.result=fail"));
  CHECK(has(r.out, "check.relation.[z,w]-d=fail"));

  r = invoke({"nf", "--builtin", "H6", "--expr", "b a a"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "nf.result=a^2b - 2 ac"));

  r = invoke({"hilbert", "--builtin", "L", "--degree", "6"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "hilbert.exponents=(2,1,2)"));
  CHECK(has(r.out, "hilbert.gk=5"));

  r = invoke({"compare-centers", "--builtin", "L", "--builtin", "U_n5"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "compare.verdict=not-isomorphic"));
  CHECK(has(r.out, "compare.left.center_dim=13"));
  CHECK(has(r.out, "compare.right.center_dim=11"));

  r = invoke({"obstruct", "--builtin", "qplane(2)"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "obstruction.theorem=skew-commutation"));
  CHECK(invoke({"obstruct", "--builtin", "L"}).code == 0);

  r = invoke({"antipode", "--builtin", "J"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "antipode.S.d=-d"));

  r = invoke({"signature", "--builtin", "J", "--weight-bound", "8"});
  CHECK(has(r.out, "signature.value=(1,1,1,1,2,2)"));

  CHECK(invoke({"gr", "--builtin", "L", "--weights", "1,1,2,4,4"}).code == 0);
  CHECK(invoke({"truncate", "--builtin", "L"}).code == 0);

  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"check", "--builtin", "nope"}).code == 2);
  CHECK(invoke({"check", "--builtin", "L", "--file", std::string(HOPFKIT_DATA_DIR) + "/L.hopf"}).code == 2);
  CHECK(invoke({"truncate", "--builtin", "L", "--weight-bound", "3"}).code == 2);
  r = invoke({"check", "--builtin", "jordan"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "check.coproduct=none"));

  r = invoke({"dump-builtin", "L"});
  CHECK(r.code == 0);
  CHECK(parse_presentation(r.out) == builtin("L"));
}

TEST_CASE("command line: resource limit") {
  setenv("HOPFKIT_MAX_TERMS", "3", 1);
  const Run r = invoke({"nf", "--builtin", "L", "--expr", "w z w z"});
  unsetenv("HOPFKIT_MAX_TERMS");
  CHECK(r.code == 3);
}
