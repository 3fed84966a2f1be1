#include <doctest.h>

#include <functional>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "powerspace/errors.hpp"
#include "powerspace/space_io.hpp"

using namespace powerspace;
using testing::pts;

namespace {

FiniteSpace from_order(const oracle::Order& o) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (int i = 0; i < o.n; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j)
      if (i != j && o.le[i][j]) rel.emplace_back(i, j);
  return FiniteSpace::from_poset(names, rel);
}

std::vector<bool> matrix(const FiniteSpace& X) {
  std::vector<bool> m;
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j) m.push_back(X.leq(i, j));
  return m;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("spaces from opens") {
  FiniteSpace S = FiniteSpace::from_opens({"bot", "top"}, {PtSet(2), PtSet::of(2, {1}), PtSet::full(2)});
  CHECK(S.leq(0, 1));
  CHECK_FALSE(S.leq(1, 0));

  FiniteSpace D2 = FiniteSpace::from_opens({"a", "b"}, {PtSet::of(2, {0}), PtSet::of(2, {1})});
  CHECK_FALSE(D2.leq(0, 1));
  CHECK_FALSE(D2.leq(1, 0));
  CHECK(D2.opens().size() == 4);

  try {
    FiniteSpace::from_opens({"a", "b"}, {PtSet(2), PtSet::full(2)});
    FAIL("indiscrete space accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotT0);
    std::string msg = e.what();
    CHECK(msg.find(" a ") != std::string::npos);
    CHECK(msg.find(" b ") != std::string::npos);
  }
}

TEST_CASE("spaces from posets") {
  FiniteSpace C = chain(3);
  auto opens = C.opens();
  REQUIRE(opens.size() == 4);
  std::set<std::vector<std::size_t>> got;
  for (const auto& o : opens) got.insert(o.indices());
  CHECK(got == std::set<std::vector<std::size_t>>{{}, {2}, {1, 2}, {0, 1, 2}});
  CHECK(C.hasse().size() == 2);

  CHECK(discrete(3).opens().size() == 8);
  CHECK(code_of([] { FiniteSpace::from_poset({"x", "y"}, {{0, 1}, {1, 0}}); }) == ErrorCode::CycleDetected);
  CHECK(code_of([] { FiniteSpace::from_poset({"x", "x"}, {}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("closure, saturation and interior") {
  FiniteSpace S = sierpinski();
  CHECK(S.closure(pts(S, {"top"})) == S.full());
  CHECK(S.saturation(pts(S, {"bot"})) == S.full());
  CHECK(S.interior(pts(S, {"bot"})).empty());
  CHECK(S.is_open(pts(S, {"top"})));
  CHECK(S.is_closed(pts(S, {"bot"})));

  FiniteSpace D2 = discrete(2);
  PtSet a = pts(D2, {"a"});
  CHECK(D2.closure(a) == a);
  CHECK(D2.saturation(a) == a);
  CHECK(D2.interior(a) == a);
}

TEST_CASE("opens are exactly the upper sets, for every labelled poset on up to 4 points") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& o : oracle::labeled_posets(n)) {
      FiniteSpace X = from_order(o);
      std::set<oracle::Mask> expect;
      for (auto m : oracle::upper_sets(o)) expect.insert(m);
      std::set<oracle::Mask> got;
      for (const auto& U : X.opens()) got.insert(U.words().empty() ? 0 : U.words()[0]);
      CHECK(got == expect);
      CHECK(X.closed_sets().size() == expect.size());

      // Regenerating from the opens, or from the minimal neighbourhoods as a
      // subbasis, gives back the same order.
      std::vector<PtSet> ups;
      for (std::size_t x = 0; x < X.size(); ++x) ups.push_back(X.up(x));
      CHECK(matrix(FiniteSpace::from_opens(X.names(), X.opens())) == matrix(X));
      CHECK(matrix(FiniteSpace::from_subbasis(X.names(), ups)) == matrix(X));
      CHECK(matrix(FiniteSpace::from_subbasis(X.names(), ups, true)) == matrix(X));
    }
}

TEST_CASE("enumeration up to isomorphism matches the brute-force classes") {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::vector<bool>> expect;
    for (const auto& o : oracle::labeled_posets(static_cast<int>(n))) expect.insert(oracle::canonical_code(o));

    std::set<std::vector<bool>> got;
    std::size_t exactly_n = 0;
    for (const auto& X : enumerate_spaces(n, true, true)) {
      if (X.size() != n) continue;
      ++exactly_n;
      got.insert(oracle::canonical_code(oracle::order_of(X)));
    }
    CHECK(exactly_n == expect.size());  // no class listed twice
    CHECK(got == expect);
  }
  // Sizes 1, 2, 5, 16 on exactly 1..4 points.
  CHECK(enumerate_spaces(2).size() == 3);
  CHECK(enumerate_spaces(3).size() == 8);
  CHECK(enumerate_spaces(4, true, true).size() == 25);
  CHECK(enumerate_spaces(0, true, true).size() == 1);
  CHECK(enumerate_spaces(0).empty());
}

TEST_CASE("labelled enumeration matches brute force") {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::vector<bool>> expect;
    for (const auto& o : oracle::labeled_posets(n)) {
      std::vector<bool> m;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.push_back(o.le[i][j]);
      expect.insert(m);
    }
    std::set<std::vector<bool>> got;
    std::size_t count = 0;
    for (const auto& X : enumerate_spaces(n, false, true))
      if (X.size() == static_cast<std::size_t>(n)) {
        got.insert(matrix(X));
        ++count;
      }
    CHECK(count == expect.size());
    CHECK(got == expect);
  }
  CHECK(oracle::labeled_posets(4).size() == 219);
}

TEST_CASE("enumeration limit") {
  CHECK(code_of([] { enumerate_spaces(7); }) == ErrorCode::LimitExceeded);
  CHECK(enumerate_spaces(3, true, false, 3).size() == 8);
}

TEST_CASE("continuity examples") {
  auto S = make_ref(sierpinski());
  CHECK(check_continuous(identity_map(S)).holds);

  Verdict swap = check_continuous(make_map(S, S, {1, 0}));
  CHECK_FALSE(swap.holds);
  REQUIRE(swap.witness);
  CHECK((*swap.witness)["open"] == json::array({"top"}));

  auto D2 = make_ref(discrete(2));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(check_continuous(make_map(D2, S, {a, b})).holds);
}

TEST_CASE("basis continuity, exhaustive continuity and monotonicity agree") {
  auto spaces = enumerate_spaces(3, true, true);
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      auto X = make_ref(x), Y = make_ref(y);
      if (X->size() > 0 && Y->size() == 0) continue;
      std::vector<std::size_t> t(X->size(), 0);
      while (true) {
        SpaceMap f = make_map(X, Y, t);
        bool basis = check_continuous(f).holds;
        CHECK(basis == check_continuous_exhaustive(f).holds);
        CHECK(basis == is_monotone(f));
        std::size_t i = 0;
        while (i < t.size() && ++t[i] == Y->size()) t[i++] = 0;
        if (i == t.size()) break;
      }
    }
}

TEST_CASE("map construction and composition") {
  auto S = make_ref(sierpinski());
  auto D2 = make_ref(discrete(2));
  CHECK(code_of([&] { make_map(S, D2, {0, 5}); }) == ErrorCode::InvalidInput);
  SpaceMap f = make_map(D2, S, {0, 1});
  SpaceMap g = make_map(S, S, {1, 1});
  CHECK(compose(g, f).table == std::vector<std::size_t>{1, 1});
  CHECK(code_of([&] { compose(f, g); }) == ErrorCode::ShapeMismatch);
  CHECK(f.preimage(PtSet::of(2, {1})) == PtSet::of(2, {1}));
  CHECK(f.image(PtSet::full(2)) == PtSet::full(2));
}

TEST_CASE("space JSON round trip and DOT export") {
  for (const auto& X : enumerate_spaces(4, true, true)) {
    FiniteSpace Y = space_from_json(space_to_json(X));
    CHECK(matrix(Y) == matrix(X));
    CHECK(Y.names() == X.names());
  }
  FiniteSpace S = space_from_json(json::parse(R"({"points":["bot","top"],"order":[[0,"top"]]})"));
  CHECK(S.leq(0, 1));
  FiniteSpace T = space_from_json(json::parse(R"({"points":["bot","top"],"opens":[["top"]]})"));
  CHECK(matrix(T) == matrix(S));

  CHECK(code_of([] { space_from_json(json::parse(R"({"order":[]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { space_from_json(json::parse(R"({"points":["a"],"order":[["a","z"]]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { load_space("/nonexistent/space.json"); }) == ErrorCode::ParseError);

  std::ostringstream dot;
  write_dot(dot, chain(3), "c");
  CHECK(dot.str().find("rankdir=BT") != std::string::npos);
  CHECK(dot.str().find("->") != std::string::npos);
}
