#include <doctest.h>

#include "powerspace/errors.hpp"
#include "powerspace/expression.hpp"
#include "powerspace/space_io.hpp"
#include "powerspace/suites.hpp"

using namespace powerspace;

TEST_CASE("suite names") {
  for (const char* n : {"all", "homeo", "monad", "consonance", "pi02", "wilker", "naturality", "counterexamples"})
    CHECK(suite_name(*parse_suite(n)) == n);
  CHECK_FALSE(parse_suite("everything").has_value());
}

TEST_CASE("homeomorphism suite on three points") {
  SuiteOptions o;
  o.max_points = 3;
  SuiteReport r = run_suite(Suite::Homeo, o);
  CHECK(r.spaces == 8);
  std::size_t pair_checks = 0;
  for (const auto& c : r.checks) pair_checks += c.verdict.check.find('/') != std::string::npos;
  CHECK(pair_checks == 8 * 4);
  CHECK(r.failed() == 0);
  CHECK(r.exit_code() == 0);
  CHECK(r.to_text().find("0 failed") != std::string::npos);
}

TEST_CASE("counterexample suite and the trivial run") {
  SuiteReport c = run_suite(Suite::Counterexamples, {});
  CHECK(c.checks.size() == 3);
  CHECK(c.failed() == 0);

  SuiteOptions one;
  one.max_points = 1;
  SuiteReport all = run_suite(Suite::All, one);
  CHECK(all.spaces == 1);
  CHECK(all.failed() == 0);
  CHECK(all.exit_code() == 0);
}

TEST_CASE("reports do not depend on the number of jobs") {
  SuiteOptions o;
  o.max_points = 3;
  o.include_empty = true;
  SuiteReport a = run_suite(Suite::All, o);
  o.jobs = 4;
  SuiteReport b = run_suite(Suite::All, o);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_text() == b.to_text());
  CHECK_FALSE(a.to_json().contains("timings"));
  CHECK(a.to_json(true).contains("timings"));
  CHECK(a.failed() == 0);
}

TEST_CASE("a tight cap is reported, not failed") {
  SuiteOptions o;
  o.max_points = 3;
  o.limits.max_points = 16;
  SuiteReport r = run_suite(Suite::Monad, o);
  CHECK(r.capped);
  CHECK(r.failed() == 0);
  CHECK(r.exit_code() == 2);
  CHECK(r.to_text().find("CAPPED") != std::string::npos);
}

TEST_CASE("space labels") {
  CHECK(space_label(chain(3)) == "3:c0<c1,c1<c2");
  CHECK(space_label(empty_space()) == "0:");
}

TEST_CASE("expressions") {
  CHECK(parse_expression("X").to_string() == "X");
  CHECK(parse_expression(" K ( A(X) ) ").to_string() == "K(A(X))");
  for (const char* bad : {"", "A(X", "A X", "Q(X)", "X)", "A()"}) {
    try {
      parse_expression(bad);
      FAIL("accepted ", bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  auto S = make_ref(sierpinski());
  CHECK(built_space(evaluate(parse_expression("K(A(X))"), S)).size() == 4);
  CHECK(built_space(evaluate(parse_expression("X"), S)).size() == 2);
  auto D2 = make_ref(discrete(2));
  CHECK(built_space(evaluate(parse_expression("O(O(X))"), D2)).size() == 6);
  CHECK(built_space(evaluate(parse_expression("L(X)"), D2)).size() == 4);
  CHECK(built_space(evaluate(parse_expression("O(O(X))"), make_ref(discrete(3)))).size() == 20);
}

TEST_CASE("fixture files") {
  CHECK(load_space(PSPACE_DATA_DIR "/sierpinski.json").size() == 2);
  CHECK(load_space(PSPACE_DATA_DIR "/d2.json").opens().size() == 4);
  CHECK(load_space(PSPACE_DATA_DIR "/chain3.json").opens().size() == 4);
  CHECK(load_space(PSPACE_DATA_DIR "/antichain3.json").opens().size() == 8);
}
