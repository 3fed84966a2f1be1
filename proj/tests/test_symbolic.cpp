#include <doctest.h>

#include <random>
#include <set>

#include "powerspace/symbolic.hpp"

using namespace powerspace;

namespace {

// Membership on 0..47 plus the top point, read only through contains().
std::vector<bool> members(const CofinSet& s) {
  std::vector<bool> m;
  for (std::uint64_t i = 0; i < 48; ++i) m.push_back(s.contains(i));
  m.push_back(s.includes_top());
  return m;
}

CofinSet random_cofin(std::mt19937_64& g) {
  std::set<std::uint64_t> sup;
  for (int k = g() % 5; k > 0; --k) sup.insert(g() % 40);
  bool top = g() & 1;
  return (g() & 1) ? CofinSet::finite(sup, top) : CofinSet::cofinite(sup, top);
}

}  // namespace

TEST_CASE("set algebra pointwise on a window past the supports") {
  std::mt19937_64 g(3);
  for (int i = 0; i < 500; ++i) {
    CofinSet a = random_cofin(g), b = random_cofin(g);
    auto ma = members(a), mb = members(b);
    auto mu = members(a | b), mi = members(a & b), md = members(a - b), mc = members(a.complement());
    bool sub = true, meet = false;
    for (std::size_t k = 0; k < ma.size(); ++k) {
      CHECK(mu[k] == (ma[k] || mb[k]));
      CHECK(mi[k] == (ma[k] && mb[k]));
      CHECK(md[k] == (ma[k] && !mb[k]));
      CHECK(mc[k] == !ma[k]);
      sub = sub && (!ma[k] || mb[k]);
      meet = meet || (ma[k] && mb[k]);
    }
    // Supports stay below 40, so the window decides inclusion and meeting.
    CHECK(a.subset_of(b) == sub);
    CHECK(a.intersects(b) == meet);
    CHECK(a.complement().complement() == a);
  }
}

TEST_CASE("sizes, supports and printing") {
  CHECK(CofinSet::of({1, 4}).size() == 2u);
  CHECK(CofinSet::finite({1}, true).size() == 2u);
  CHECK_FALSE(CofinSet::cofinite({}).size().has_value());
  CHECK(CofinSet::of({1, 4}).max_support() == 4u);
  CHECK(CofinSet::empty().is_empty());
  CHECK_FALSE(CofinSet::finite({}, true).is_empty());
  CHECK(CofinSet::of({0, 2}).to_string() == "{0,2}");
  CHECK(CofinSet::everything().complement() == CofinSet::empty());
}

TEST_CASE("truncation") {
  Truncated t = truncate(CofinSet::cofinite({0}, true));
  CHECK_FALSE(t[0]);
  CHECK(t[31]);
  CHECK(t[32]);
  CHECK(truncate(CofinSet::of({40})).none());
}

TEST_CASE("opens and closures of the one-point compactified naturals") {
  const auto T = SymbolicSpace::OmegaTop;
  CHECK(is_open(T, CofinSet::empty()));
  CHECK(is_open(T, CofinSet::cofinite({1, 2}, true)));
  CHECK_FALSE(is_open(T, CofinSet::cofinite({1}, false)));
  CHECK_FALSE(is_open(T, CofinSet::of({1})));
  CHECK(is_closed(T, CofinSet::of({1, 5})));
  CHECK(is_closed(T, CofinSet::everything()));
  CHECK_FALSE(is_closed(T, CofinSet::finite({1}, true)));
  CHECK(omega_top_closure(CofinSet::of({3})) == CofinSet::of({3}));
  CHECK(omega_top_closure(CofinSet::finite({}, true)) == CofinSet::everything());
  CHECK(omega_top_closure(CofinSet::cofinite({0})) == CofinSet::everything());
}

TEST_CASE("witness rules on the fixed instances") {
  const auto T = SymbolicSpace::OmegaTop;
  const CofinSet X = CofinSet::everything();
  // F1 = {0,1}: the fresh singleton {2} meets X minus F1 and has one point.
  CofinSet U = X - CofinSet::of({0, 1});
  CHECK(is_open(T, U));
  CHECK(CofinSet::of({2}).intersects(U));
  CHECK(is_closed(T, CofinSet::of({2})));
  CHECK(CofinSet::of({2}).size() == 1u);

  // K1 = {3} in the discrete naturals: {4} avoids K1.
  CHECK_FALSE(CofinSet::of({3}).subset_of(CofinSet::of({4})));

  // F = {{0},{1,2}}: {3} contains no member of F.
  CHECK_FALSE(CofinSet::of({0}).subset_of(CofinSet::of({3})));
  CHECK_FALSE(CofinSet::of({1, 2}).subset_of(CofinSet::of({3})));
}

TEST_CASE("the three verdicts hold for several seeds") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    for (const Verdict& v : {verify_lower_not_scott(seed), verify_upper_not_weak(seed), verify_AX_not_coconsonant(seed),
                             check_cofin_algebra(seed)}) {
      CHECK_MESSAGE(v.holds, v.to_json().dump());
      CHECK(v.instances >= 100);
    }
  }
}
