#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "powerspace/errors.hpp"
#include "powerspace/powerspaces.hpp"

using namespace powerspace;
using testing::at;
using testing::pts;

namespace {

bool is_chain(const FiniteSpace& X) {
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      if (!X.leq(i, j) && !X.leq(j, i)) return false;
  return true;
}

// Specialization order of C against the expected extent order, pointwise.
void check_extent_order(const ConstructedSpace& C) {
  for (std::size_t p = 0; p < C.size(); ++p)
    for (std::size_t q = 0; q < C.size(); ++q) {
      bool expect = false;
      switch (C.kind) {
        case Kind::Lower:
        case Kind::OpenLattice: expect = C.extents[p].subset_of(C.extents[q]); break;
        case Kind::Upper: expect = C.extents[q].subset_of(C.extents[p]); break;
        case Kind::Convex:
          expect = C.lenses[p].closed.subset_of(C.lenses[q].closed) &&
                   C.lenses[q].saturated.subset_of(C.lenses[p].saturated);
          break;
      }
      CHECK(C.space->leq(p, q) == expect);
    }
}

}  // namespace

TEST_CASE("small powerspaces") {
  auto S = make_ref(sierpinski());
  auto D2 = make_ref(discrete(2));
  auto E = make_ref(empty_space());

  auto AS = lower_powerspace(S);
  CHECK(AS->size() == 3);
  CHECK(is_chain(*AS->space));
  CHECK(lower_powerspace(D2)->size() == 4);
  CHECK(lower_powerspace(E)->size() == 1);

  auto KS = upper_powerspace(S);
  CHECK(KS->size() == 3);
  CHECK(is_chain(*KS->space));
  // X is the bottom of K(S).
  CHECK(KS->space->up(KS->at(S->full())).is_full());
  CHECK(upper_powerspace(make_ref(chain(3)))->size() == 4);
  CHECK(is_chain(*upper_powerspace(make_ref(chain(3)))->space));

  auto LS = convex_powerspace(S);
  CHECK(LS->size() == 4);
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> lenses;
  for (const auto& l : LS->lenses) lenses.insert({l.closed.indices(), l.saturated.indices()});
  // bot = 0, top = 1
  CHECK(lenses == std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>{
                      {{}, {}}, {{0}, {0, 1}}, {{0, 1}, {1}}, {{0, 1}, {0, 1}}});
  CHECK(convex_powerspace(D2)->size() == 4);
  CHECK(convex_powerspace(E)->size() == 1);

  CHECK(open_lattice(S)->size() == 3);
  CHECK(is_chain(*open_lattice(S)->space));
  CHECK(open_lattice(make_ref(discrete(3)))->size() == 8);
  CHECK(open_lattice(open_lattice(make_ref(discrete(3))))->size() == 20);
}

TEST_CASE("extents, orders and sizes on every space up to 4 points") {
  for (const auto& x : enumerate_spaces(4, true, true)) {
    auto X = make_ref(x);
    auto o = oracle::order_of(x);
    auto A = lower_powerspace(X), K = upper_powerspace(X), L = convex_powerspace(X), O = open_lattice(X);
    CHECK(A->size() == oracle::lower_sets(o).size());
    CHECK(K->size() == oracle::upper_sets(o).size());
    CHECK(O->size() == oracle::upper_sets(o).size());
    CHECK(L->size() == oracle::count_lenses(o));
    for (const auto& e : A->extents) CHECK(X->is_closed(e));
    for (const auto& e : K->extents) CHECK(X->is_open(e));
    for (std::size_t p = 0; p < L->size(); ++p) {
      const Lens& l = L->lenses[p];
      CHECK(L->extents[p] == (l.closed & l.saturated));
      CHECK(X->closure(L->extents[p]) == l.closed);
      CHECK(X->saturation(L->extents[p]) == l.saturated);
    }
    for (const auto* C : {A.get(), K.get(), L.get(), O.get()}) check_extent_order(*C);
  }
}

TEST_CASE("modal operators by definition") {
  auto X = make_ref(chain(3));
  auto A = lower_powerspace(X), K = upper_powerspace(X), L = convex_powerspace(X);
  for (const auto& U : X->opens()) {
    for (std::size_t p = 0; p < A->size(); ++p) CHECK(diamond(*A, U).test(p) == A->extents[p].intersects(U));
    for (std::size_t p = 0; p < K->size(); ++p) CHECK(box(*K, U).test(p) == K->extents[p].subset_of(U));
    for (std::size_t p = 0; p < L->size(); ++p) {
      CHECK(diamond(*L, U).test(p) == L->lenses[p].closed.intersects(U));
      CHECK(box(*L, U).test(p) == L->lenses[p].saturated.subset_of(U));
    }
    CHECK(A->space->is_open(diamond(*A, U)));
    CHECK(K->space->is_open(box(*K, U)));
  }
  CHECK_THROWS_AS(box(*A, X->full()), Error);
  CHECK_THROWS_AS(diamond(*K, X->full()), Error);
}

TEST_CASE("functorial action") {
  auto S = make_ref(sierpinski());
  auto D2 = make_ref(discrete(2));
  SpaceMap f = make_map(D2, S, {at(*S, "bot"), at(*S, "top")});

  SpaceMap Aid = functor_map(Kind::Lower, identity_map(S));
  CHECK(Aid == identity_map(Aid.domain));

  auto AD = lower_powerspace(D2), AS = lower_powerspace(S);
  SpaceMap Af = lower_map(*AD, *AS, f);
  CHECK(AS->extents[Af(AD->at(D2->full()))] == S->full());

  auto OS = open_lattice(S), OD = open_lattice(D2);
  SpaceMap Of = open_map(*OS, *OD, f);
  CHECK(OD->extents[Of(OS->at(pts(*S, {"top"})))] == pts(*D2, {"b"}));

  CHECK_THROWS_AS(functor_map(Kind::Lower, make_map(S, S, {1, 0})), Error);
  CHECK_THROWS_AS(functor_map(Kind::Convex, identity_map(S)), Error);
}

TEST_CASE("functor laws on all maps between spaces up to 3 points") {
  auto spaces = enumerate_spaces(3);
  for (Kind k : {Kind::Lower, Kind::Upper, Kind::OpenLattice}) {
    for (const auto& x : spaces)
      for (const auto& y : spaces) {
        auto X = make_ref(x), Y = make_ref(y);
        std::vector<std::size_t> t(X->size(), 0);
        std::vector<SpaceMap> maps;
        while (true) {
          SpaceMap f = make_map(X, Y, t);
          if (is_monotone(f)) maps.push_back(f);
          std::size_t i = 0;
          while (i < t.size() && ++t[i] == Y->size()) t[i++] = 0;
          if (i == t.size()) break;
        }
        for (const auto& f : maps) {
          SpaceMap Tf = functor_map(k, f);
          CHECK(check_continuous(Tf).holds);
          // T(g . f) = T(g) . T(f) with g a constant self-map of Y, which is always continuous.
          SpaceMap g = make_map(Y, Y, std::vector<std::size_t>(Y->size(), 0));
          SpaceMap lhs = functor_map(k, compose(g, f));
          SpaceMap Tg = functor_map(k, g);
          SpaceMap rhs = k == Kind::OpenLattice ? compose(Tf, Tg) : compose(Tg, Tf);
          CHECK(lhs.table == rhs.table);
        }
      }
  }
}

TEST_CASE("monad units and multiplications") {
  auto S = make_ref(sierpinski());
  auto AS = lower_powerspace(S);
  auto KS = upper_powerspace(S);
  CHECK(AS->extents[lower_unit(*AS)(at(*S, "top"))] == S->full());
  CHECK(KS->extents[upper_unit(*KS)(at(*S, "bot"))] == S->full());

  auto D2 = make_ref(discrete(2));
  auto AD = lower_powerspace(D2);
  auto AAD = lower_powerspace(AD);
  PtSet family(AD->size());
  family.set(AD->at(pts(*D2, {"a"})));
  family.set(AD->at(D2->full()));
  family = AD->space->closure(family);  // adds the empty set
  SpaceMap mu = lower_mult(*AAD);
  CHECK(AD->extents[mu(AAD->at(family))] == D2->full());

  CHECK_THROWS_AS(lower_mult(*AD), Error);
  CHECK_THROWS_AS(monad_unit(Kind::Convex, *AD), Error);
}

TEST_CASE("union and intersection structure maps") {
  auto S = make_ref(sierpinski());
  auto OS = open_lattice(S);
  auto AOS = lower_powerspace(OS);
  auto KOS = upper_powerspace(OS);
  const std::size_t top = OS->at(pts(*S, {"top"}));

  SpaceMap u = structure_union(*AOS);
  CHECK(S->set_label(OS->extents[u(AOS->at(OS->space->closure(OS->space->singleton(top))))]) == "{top}");
  SpaceMap n = structure_intersection(*KOS);
  CHECK(S->set_label(OS->extents[n(KOS->at(OS->space->saturation(OS->space->singleton(top))))]) == "{top}");
  CHECK(check_continuous(u).holds);
  CHECK(check_continuous(n).holds);
  CHECK(compose(u, lower_unit(*AOS)) == identity_map(OS->space));
}

TEST_CASE("point cap") {
  Limits tight;
  tight.max_points = 10;
  auto X = make_ref(discrete(3));
  CHECK(lower_powerspace(X, tight)->size() == 8);
  try {
    lower_powerspace(lower_powerspace(X), tight);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PowerspaceTooLarge);
    CHECK(e.is_resource_limit());
  }
}
