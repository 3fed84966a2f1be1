#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "powerspace/errors.hpp"
#include "powerspace/pi02.hpp"

using namespace powerspace;
using testing::pts;

TEST_CASE("presentation evaluation") {
  auto S = make_ref(sierpinski());
  CHECK(pi02_eval({S, {{pts(*S, {"top"}), S->empty_set()}}}) == pts(*S, {"bot"}));
  CHECK(pi02_eval({S, {}}) == S->full());
  auto D2 = make_ref(discrete(2));
  CHECK(pi02_eval({D2, {{D2->full(), pts(*D2, {"a"})}}}) == pts(*D2, {"a"}));
  CHECK_THROWS_AS(pi02_eval({S, {{pts(*S, {"bot"}), S->full()}}}), Error);
}

TEST_CASE("generated presentations evaluate to their subset") {
  for (const auto& y : enumerate_spaces(3, true, true)) {
    auto Y = make_ref(y);
    for (std::size_t m = 0; m < (std::size_t{1} << y.size()); ++m) {
      PtSet S(y.size());
      for (std::size_t i = 0; i < y.size(); ++i)
        if ((m >> i) & 1) S.set(i);
      CHECK(pi02_eval(canonical_presentation(Y, S)) == S);
      CHECK(pi02_eval(saturated_presentation(Y, S)) == S);
      CHECK(validate_embedding(subspace(Y, S).inclusion).holds);
    }
  }
}

TEST_CASE("embedding ranges on the Sierpinski space") {
  auto S = make_ref(sierpinski());
  PtSet top = pts(*S, {"top"});
  Subspace sub = subspace(S, top);
  Pi02Presentation p{S, {{S->full(), top}}};
  CHECK(lower_embedding_range(sub.inclusion, p).holds);
  CHECK(upper_embedding_range(sub.inclusion, p).holds);

  auto D2 = make_ref(discrete(2));
  Subspace whole = subspace(D2, D2->full());
  CHECK(lower_embedding_range(whole.inclusion, {D2, {}}).holds);
  CHECK(upper_embedding_range(whole.inclusion, {D2, {}}).holds);
}

TEST_CASE("embedding preconditions") {
  auto S = make_ref(sierpinski());
  auto D2 = make_ref(discrete(2));
  SpaceMap collapse = make_map(D2, S, {1, 1});
  CHECK_FALSE(validate_embedding(collapse).holds);
  // Continuous and injective but not order reflecting.
  CHECK_FALSE(validate_embedding(make_map(D2, S, {0, 1})).holds);
  try {
    lower_embedding_range(collapse, {S, {}});
    FAIL("non-embedding accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEmbedding);
  }
  Subspace sub = subspace(S, pts(*S, {"top"}));
  try {
    upper_embedding_range(sub.inclusion, {S, {}});
    FAIL("mismatched presentation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PresentationMismatch);
  }
}

TEST_CASE("lens and eta-image characterizations") {
  for (const auto& x : enumerate_spaces(4, true, true)) {
    auto X = make_ref(x);
    CHECK(lens_pi02(X).holds);
    CHECK(eta_image_characterizations(X).holds);
    CHECK(convex_powerspace(X)->size() == oracle::count_lenses(oracle::order_of(x)));
  }
  CHECK(convex_powerspace(make_ref(sierpinski()))->size() == 4);
  CHECK(convex_powerspace(make_ref(empty_space()))->size() == 1);
}
