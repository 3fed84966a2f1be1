#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "powerspace/errors.hpp"
#include "powerspace/property_checkers.hpp"

using namespace powerspace;
using testing::pts;

namespace {

// Irreducible closed sets of a finite T0 space are the principal down-sets.
std::set<oracle::Mask> principal_downsets(const oracle::Order& o) {
  std::set<oracle::Mask> out;
  for (int x = 0; x < o.n; ++x) {
    oracle::Mask m = 0;
    for (int y = 0; y < o.n; ++y)
      if (o.le[y][x]) m |= oracle::Mask{1} << y;
    out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("consonance and co-consonance on small spaces") {
  auto S = make_ref(sierpinski());
  auto D2 = make_ref(discrete(2));
  auto E = make_ref(empty_space());
  for (const auto& X : {S, D2, E}) {
    CHECK(is_consonant(X).holds);
    CHECK(is_co_consonant(X).holds);
    Verdict eq = consonance_equivalence(X);
    CHECK(eq.holds);
    REQUIRE(!eq.notes.empty());
    CHECK(eq.notes.front().find("consonant=true") != std::string::npos);
  }
  // S has 3 opens forming a chain, whose upper sets are the 4 Scott-open families.
  auto fams = scott_open_families(*open_lattice(S), {});
  CHECK(fams.families.size() == 4);
  CHECK_FALSE(fams.sampled);
}

TEST_CASE("family enumeration switches to sampling past the cap") {
  auto X = make_ref(discrete(3));
  CheckOptions small;
  small.family_cap = 8;
  small.samples = 16;
  auto fams = scott_open_families(*open_lattice(X), small);
  CHECK(fams.sampled);
  // Every sampled family is still an upper set; the empty and full families are always present.
  auto OX = open_lattice(X);
  bool has_empty = false, has_full = false;
  for (const auto& f : fams.families) {
    CHECK(OX->space->is_open(f));
    has_empty = has_empty || f.empty();
    has_full = has_full || f.is_full();
  }
  CHECK(has_empty);
  CHECK(has_full);
  Verdict v = is_consonant(X, small);
  CHECK(v.holds);
  CHECK(v.sampled);
  CHECK(scott_open_families(*OX, {}).families.size() == 20);
}

TEST_CASE("strong compactness") {
  FiniteSpace S = sierpinski();
  CHECK(is_strongly_compact(S, pts(S, {"top"})).holds);
  FiniteSpace D2 = discrete(2);
  CHECK(is_strongly_compact(D2, D2.full()).holds);
  CHECK_THROWS_AS(is_strongly_compact(S, pts(S, {"bot"})), Error);
  for (const auto& X : enumerate_spaces(4, true, true)) CHECK(all_strongly_compact(X).holds);
}

TEST_CASE("irreducible closed sets and sobriety") {
  FiniteSpace S = sierpinski();
  std::set<std::vector<std::size_t>> irr;
  for (const auto& A : irreducible_closed_sets(S)) irr.insert(A.indices());
  CHECK(irr == std::set<std::vector<std::size_t>>{{0}, {0, 1}});

  FiniteSpace D2 = discrete(2);
  CHECK(irreducible_closed_sets(D2).size() == 2);

  for (const auto& X : enumerate_spaces(4, true, true)) {
    std::set<oracle::Mask> got;
    for (const auto& A : irreducible_closed_sets(X)) got.insert(A.words().empty() ? 0 : A.words()[0]);
    CHECK(got == principal_downsets(oracle::order_of(X)));
    CHECK(is_sober(X).holds);
    CHECK(is_wilker(X).holds);
  }
}

TEST_CASE("topology coincidence") {
  auto S = make_ref(sierpinski());
  CHECK(topology_coincidence(*lower_powerspace(S), Reference::Weak).holds);
  CHECK(topology_coincidence(*upper_powerspace(S), Reference::Scott).holds);
  CHECK(topology_coincidence(*upper_powerspace(lower_powerspace(make_ref(discrete(2)))), Reference::Weak).holds);

  // The same extents over a discrete 3-point space: the weak topology is coarser, so this must fail.
  ConstructedSpace fake = *lower_powerspace(S);
  fake.space = make_ref(discrete(3));
  Verdict v = topology_coincidence(fake, Reference::Weak);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(v.witness->contains("open_in"));
}

TEST_CASE("every property on every space up to 4 points") {
  for (const auto& x : enumerate_spaces(4, true, true)) {
    auto X = make_ref(x);
    CHECK(consonance_equivalence(X).holds);
    CHECK(is_consonant(open_lattice(X)->space).holds);
    CHECK(is_co_consonant(upper_powerspace(X)->space).holds);
    CHECK(is_sober(*lower_powerspace(X)->space).holds);
    CHECK(topology_coincidence(*convex_powerspace(X), Reference::Scott).holds);
  }
}
