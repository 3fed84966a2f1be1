#include "powerspace/pi02.hpp"

#include <algorithm>

#include "powerspace/errors.hpp"
#include "powerspace/property_checkers.hpp"

namespace powerspace {

PtSet pi02_eval(const Pi02Presentation& p) {
  const FiniteSpace& Y = *p.ambient;
  PtSet out = Y.full();
  for (const auto& [U, V] : p.pairs) {
    if (U.universe() != Y.size() || V.universe() != Y.size() || !Y.is_open(U) || !Y.is_open(V))
      throw Error(ErrorCode::PreconditionViolated, "presentation pair is not a pair of opens");
    out -= U - V;
  }
  return out;
}

Pi02Presentation canonical_presentation(SpaceRef Y, const PtSet& S) {
  Pi02Presentation p{Y, {}};
  for (std::size_t x = 0; x < Y->size(); ++x)
    if (!S.test(x)) p.pairs.emplace_back(Y->up(x), Y->down(x).complement());
  return p;
}

Pi02Presentation saturated_presentation(SpaceRef Y, const PtSet& S) {
  Pi02Presentation p{Y, {}};
  const auto opens = Y->opens();
  for (const auto& U : opens)
    for (const auto& V : opens)
      if ((S & U).subset_of(V)) p.pairs.emplace_back(U, V);
  return p;
}

json presentation_to_json(const Pi02Presentation& p) {
  const auto opens = p.ambient->opens();
  auto index = [&](const PtSet& s) {
    return static_cast<std::size_t>(std::find(opens.begin(), opens.end(), s) - opens.begin());
  };
  json pairs = json::array();
  for (const auto& [U, V] : p.pairs) pairs.push_back({index(U), index(V)});
  return pairs;
}

Subspace subspace(SpaceRef Y, const PtSet& S) {
  const auto members = S.indices();
  const std::size_t n = members.size();
  std::vector<std::string> names;
  std::vector<PtSet> up(n, PtSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(Y->name(members[i]));
    for (std::size_t j = 0; j < n; ++j)
      if (Y->leq(members[i], members[j])) up[i].set(j);
  }
  auto X = make_ref(FiniteSpace::from_up_sets(std::move(names), std::move(up)));
  return Subspace{X, make_map(X, Y, members)};
}

Verdict validate_embedding(const SpaceMap& e) {
  const auto& X = *e.domain;
  const auto& Y = *e.codomain;
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = a + 1; b < X.size(); ++b)
      if (e(a) == e(b)) return Verdict::fail("embedding", json{{"not_injective", {X.name(a), X.name(b)}}});
  Verdict c = check_continuous(e);
  if (!c.holds) {
    c.check = "embedding";
    return c;
  }
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = 0; b < X.size(); ++b)
      if (Y.leq(e(a), e(b)) && !X.leq(a, b))
        return Verdict::fail("embedding", json{{"order_not_reflected", {X.name(a), X.name(b)}}});
  return Verdict::pass("embedding", X.size() * X.size());
}

namespace {

void require_embedding(const SpaceMap& e, const Pi02Presentation& p) {
  if (const auto v = validate_embedding(e); !v.holds)
    throw Error(ErrorCode::NotEmbedding, v.witness->dump());
  if (p.ambient->fingerprint() != e.codomain->fingerprint() || p.ambient->size() != e.codomain->size())
    throw Error(ErrorCode::PresentationMismatch, "presentation lives on a different space");
  if (pi02_eval(p) != e.image(e.domain->full()))
    throw Error(ErrorCode::PresentationMismatch, "presentation does not evaluate to the image of the embedding");
}

Verdict compare_range(const std::string& check, const ConstructedSpace& TY, const SpaceMap& Te,
                      const PtSet& condition_set) {
  Verdict emb = validate_embedding(Te);
  if (!emb.holds) {
    emb.check = check;
    return emb;
  }
  const PtSet range = Te.image(Te.domain->full());
  if (range != condition_set) {
    return Verdict::fail(check, json{{"range", TY.space->set_json(range)},
                                     {"condition_set", TY.space->set_json(condition_set)}},
                         TY.size());
  }
  return Verdict::pass(check, TY.size());
}

}  // namespace

Verdict lower_embedding_range(const SpaceMap& e, const Pi02Presentation& p, const Limits& limits) {
  require_embedding(e, p);
  const auto AX = lower_powerspace(e.domain, limits);
  const auto AY = lower_powerspace(e.codomain, limits);
  const SpaceMap Ae = lower_map(*AX, *AY, e);
  const auto basis = e.codomain->opens();
  PtSet cut(AY->size());
  for (std::size_t a = 0; a < AY->size(); ++a) {
    const PtSet& A = AY->extents[a];
    bool in = true;
    for (const auto& [U, V] : p.pairs)
      for (const auto& B : basis)
        if (A.intersects(B & U) && !A.intersects(B & V)) in = false;
    if (in) cut.set(a);
  }
  return compare_range("lower embedding range", *AY, Ae, cut);
}

Verdict upper_embedding_range(const SpaceMap& e, const Pi02Presentation& p, const Limits& limits) {
  require_embedding(e, p);
  const auto KX = upper_powerspace(e.domain, limits);
  const auto KY = upper_powerspace(e.codomain, limits);
  const SpaceMap Ke = upper_map(*KX, *KY, e);
  const auto basis = e.codomain->opens();
  PtSet cut(KY->size());
  for (std::size_t k = 0; k < KY->size(); ++k) {
    const PtSet& K = KY->extents[k];
    bool in = true;
    for (const auto& [U, V] : p.pairs)
      for (const auto& B : basis)
        if (K.subset_of(B | U) && !K.subset_of(B | V)) in = false;
    if (in) cut.set(k);
  }
  return compare_range("upper embedding range", *KY, Ke, cut);
}

Verdict lens_pi02(SpaceRef X, const Limits& limits) {
  const auto A = lower_powerspace(X, limits);
  const auto K = upper_powerspace(X, limits);
  const auto L = convex_powerspace(X, limits);
  const auto opens = X->opens(limits.max_points);

  struct Pair {
    std::size_t a, k;
  };
  std::vector<Pair> cut;
  for (std::size_t a = 0; a < A->size(); ++a) {
    for (std::size_t k = 0; k < K->size(); ++k) {
      const PtSet& Aa = A->extents[a];
      const PtSet& Kk = K->extents[k];
      bool in = true;
      for (std::size_t i = 0; i < opens.size() && in; ++i) {
        for (std::size_t j = 0; j < opens.size() && in; ++j) {
          const PtSet& U = opens[i];
          const PtSet& V = opens[j];
          if (Aa.intersects(U) && Kk.subset_of(V) && !Aa.intersects(U & V)) in = false;
          if (Kk.subset_of(U | V) && !Aa.intersects(U) && !Kk.subset_of(V)) in = false;
        }
      }
      if (in) cut.push_back({a, k});
    }
  }

  Verdict v = Verdict::pass("lens pi02", A->size() * K->size());
  // Pair set against the lenses of L(X).
  std::vector<std::size_t> as_lens;
  for (const auto& [a, k] : cut) {
    std::optional<std::size_t> hit;
    for (std::size_t l = 0; l < L->size(); ++l)
      if (L->lenses[l].closed == A->extents[a] && L->lenses[l].saturated == K->extents[k]) hit = l;
    if (!hit)
      return Verdict::fail(v.check, json{{"extra_pair", {A->space->name(a), K->space->name(k)}}}, v.instances);
    as_lens.push_back(*hit);
  }
  if (cut.size() != L->size())
    return Verdict::fail(v.check, json{{"condition_pairs", cut.size()}, {"lenses", L->size()}}, v.instances);

  // Product order restricted to the cut versus the order of L(X).
  for (std::size_t i = 0; i < cut.size(); ++i) {
    for (std::size_t j = 0; j < cut.size(); ++j) {
      const bool product = A->space->leq(cut[i].a, cut[j].a) && K->space->leq(cut[i].k, cut[j].k);
      if (product != L->space->leq(as_lens[i], as_lens[j])) {
        return Verdict::fail(v.check, json{{"order_mismatch", {L->space->name(as_lens[i]), L->space->name(as_lens[j])}},
                                           {"product_leq", product}},
                             v.instances);
      }
    }
  }
  v.notes.push_back("lenses: " + std::to_string(L->size()));
  return v;
}

Verdict eta_image_characterizations(SpaceRef X, const Limits& limits) {
  const auto A = lower_powerspace(X, limits);
  const auto K = upper_powerspace(X, limits);
  const auto opens = X->opens(limits.max_points);
  Verdict v = Verdict::pass("eta image characterizations");

  // Lower side: pairs (◇U∩◇V, ◇(U∩V)) plus (A(X), ◇X) for non-emptiness.
  Pi02Presentation pa{A->space, {}};
  for (const auto& U : opens)
    for (const auto& V : opens) pa.pairs.emplace_back(diamond(*A, U) & diamond(*A, V), diamond(*A, U & V));
  pa.pairs.emplace_back(A->space->full(), diamond(*A, X->full()));
  const PtSet condA = pi02_eval(pa);
  const PtSet rangeA = lower_unit(*A).image(X->full());
  PtSet irreducible(A->size());
  for (const auto& I : irreducible_closed_sets(*X)) irreducible.set(A->at(I));
  v.instances += A->size();
  if (rangeA != condA || rangeA != irreducible) {
    return Verdict::fail(v.check, json{{"side", "A"},
                                       {"range", A->space->set_json(rangeA)},
                                       {"condition_set", A->space->set_json(condA)},
                                       {"irreducible", A->space->set_json(irreducible)}},
                         v.instances);
  }

  // Upper side: pairs (□(U∪V), □U∪□V) plus (□∅, ∅) for non-emptiness.
  Pi02Presentation pk{K->space, {}};
  for (const auto& U : opens)
    for (const auto& V : opens) pk.pairs.emplace_back(box(*K, U | V), box(*K, U) | box(*K, V));
  pk.pairs.emplace_back(box(*K, X->empty_set()), K->space->empty_set());
  const PtSet condK = pi02_eval(pk);
  const PtSet rangeK = upper_unit(*K).image(X->full());
  v.instances += K->size();
  if (rangeK != condK) {
    return Verdict::fail(v.check, json{{"side", "K"},
                                       {"range", K->space->set_json(rangeK)},
                                       {"condition_set", K->space->set_json(condK)}},
                         v.instances);
  }
  return v;
}

}  // namespace powerspace
