#include "powerspace/property_checkers.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "powerspace/canonical_maps.hpp"
#include "powerspace/errors.hpp"

namespace powerspace {

FamilySet scott_open_families(const ConstructedSpace& OX, const CheckOptions& options) {
  FamilySet out;
  try {
    out.families = OX.space->opens(options.family_cap);
    return out;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PowerspaceTooLarge) throw;
  }
  out.sampled = true;
  const FiniteSpace& P = *OX.space;
  std::mt19937_64 rng(options.seed);
  std::unordered_set<PtSet, PtSetHash> seen;
  auto add = [&](PtSet s) {
    if (seen.insert(s).second) out.families.push_back(std::move(s));
  };
  add(P.empty_set());
  add(P.full());
  std::uniform_int_distribution<std::size_t> pick(0, P.size() - 1);
  std::uniform_int_distribution<std::size_t> width(1, 4);
  for (std::size_t i = 0; i < options.samples; ++i) {
    PtSet gens(P.size());
    for (std::size_t g = width(rng); g > 0; --g) gens.set(pick(rng));
    add(P.saturation(gens));
  }
  std::sort(out.families.begin(), out.families.end(), canonical_less);
  return out;
}

namespace {

json family_json(const ConstructedSpace& OX, const PtSet& fam) { return OX.space->set_json(fam); }

}  // namespace

Verdict is_consonant(SpaceRef X, const CheckOptions& options) {
  const auto OX = open_lattice(X, options.limits);
  const auto fams = scott_open_families(*OX, options);
  // ▽K for every saturated K; in a finite space the saturated sets are the opens.
  std::vector<PtSet> nab;
  nab.reserve(OX->size());
  for (const auto& K : OX->extents) nab.push_back(nabla(*OX, K));

  Verdict v = Verdict::pass("consonance");
  v.sampled = fams.sampled;
  for (const auto& H : fams.families) {
    for (std::size_t u : H.indices()) {
      ++v.instances;
      bool found = false;
      for (std::size_t k = 0; k < OX->size() && !found; ++k)
        found = OX->extents[k].subset_of(OX->extents[u]) && nab[k].subset_of(H);
      if (!found) {
        v.holds = false;
        v.witness = json{{"family", family_json(*OX, H)}, {"U", X->set_json(OX->extents[u])}};
        return v;
      }
    }
  }
  return v;
}

Verdict is_co_consonant(SpaceRef X, const CheckOptions& options) {
  const auto OX = open_lattice(X, options.limits);
  const auto fams = scott_open_families(*OX, options);
  // Closed sets are complements of opens; △A for each.
  std::vector<PtSet> closed;
  std::vector<PtSet> tri;
  for (const auto& U : OX->extents) {
    closed.push_back(U.complement());
    tri.push_back(triangle(*OX, closed.back()));
  }

  Verdict v = Verdict::pass("co-consonance");
  v.sampled = fams.sampled;
  for (const auto& H : fams.families) {
    for (std::size_t u : H.indices()) {
      ++v.instances;
      // Any admissible finite F consists of closed sets meeting U, so the
      // family of all of them gives the smallest intersection.
      PtSet meet = OX->space->full();
      for (std::size_t a = 0; a < closed.size(); ++a)
        if (closed[a].intersects(OX->extents[u])) meet &= tri[a];
      if (!meet.subset_of(H)) {
        v.holds = false;
        v.witness = json{{"family", family_json(*OX, H)},
                         {"U", X->set_json(OX->extents[u])},
                         {"escaping", OX->space->set_json(meet - H)}};
        return v;
      }
    }
  }
  return v;
}

Verdict is_strongly_compact(const FiniteSpace& X, const PtSet& K) {
  if (!X.is_open(K)) throw Error(ErrorCode::NotSaturated, X.set_label(K) + " is not saturated");
  PtSet F(X.size());
  K.for_each([&](std::size_t x) {
    bool minimal = true;
    X.down(x).for_each([&](std::size_t y) { minimal = minimal && (y == x || !K.test(y)); });
    if (minimal) F.set(x);
  });
  const PtSet upF = X.saturation(F);
  Verdict v = Verdict::pass("strong compactness");
  for (const auto& U : X.opens()) {
    if (!K.subset_of(U)) continue;
    ++v.instances;
    if (!(K.subset_of(upF) && upF.subset_of(U))) {
      return Verdict::fail(v.check, json{{"K", X.set_json(K)}, {"U", X.set_json(U)}, {"F", X.set_json(F)}},
                           v.instances);
    }
  }
  v.notes.push_back("F = " + X.set_label(F));
  return v;
}

Verdict all_strongly_compact(const FiniteSpace& X) {
  Verdict v = Verdict::pass("all saturated sets strongly compact");
  for (const auto& K : X.opens()) {
    Verdict k = is_strongly_compact(X, K);
    k.notes.clear();
    v.absorb(k);
    if (!v.holds) break;
  }
  return v;
}

Verdict is_wilker(const FiniteSpace& X) {
  const auto sat = X.opens();  // saturated sets and opens coincide
  Verdict v = Verdict::pass("wilker");
  for (const auto& U1 : sat) {
    for (const auto& U2 : sat) {
      const PtSet cover = U1 | U2;
      for (const auto& K : sat) {
        if (!K.subset_of(cover)) continue;
        ++v.instances;
        bool found = false;
        for (const auto& K1 : sat) {
          if (!K1.subset_of(U1)) continue;
          for (const auto& K2 : sat) {
            if (K2.subset_of(U2) && K.subset_of(K1 | K2)) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) {
          return Verdict::fail(v.check, json{{"K", X.set_json(K)}, {"U1", X.set_json(U1)}, {"U2", X.set_json(U2)}},
                               v.instances);
        }
      }
    }
  }
  return v;
}

std::vector<PtSet> irreducible_closed_sets(const FiniteSpace& X) {
  const auto opens = X.opens();
  std::vector<PtSet> out;
  for (const auto& A : X.closed_sets()) {
    if (A.empty()) continue;
    bool irreducible = true;
    for (std::size_t i = 0; i < opens.size() && irreducible; ++i) {
      if (!A.intersects(opens[i])) continue;
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        if (A.intersects(opens[j]) && !A.intersects(opens[i] & opens[j])) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) out.push_back(A);
  }
  return out;
}

Verdict is_sober(const FiniteSpace& X) {
  Verdict v = Verdict::pass("sobriety");
  for (const auto& A : irreducible_closed_sets(X)) {
    ++v.instances;
    std::size_t generic = 0;
    for (std::size_t x = 0; x < X.size(); ++x)
      if (X.down(x) == A) ++generic;
    if (generic != 1)
      return Verdict::fail(v.check, json{{"irreducible", X.set_json(A)}, {"generic_points", generic}}, v.instances);
  }
  return v;
}

Verdict consonance_equivalence(SpaceRef X, const CheckOptions& options) {
  const bool consonant = is_consonant(X, options).holds;

  const auto A = lower_powerspace(X, options.limits);
  const auto K = upper_powerspace(X, options.limits);
  const auto AK = lower_powerspace(K, options.limits);
  const auto KA = upper_powerspace(A, options.limits);
  const auto O = open_lattice(X, options.limits);
  const auto sigma = sigma_map(*AK, *KA);
  std::vector<bool> hit(KA->size(), false);
  bool injective = true;
  for (auto y : sigma.table) {
    if (hit[y]) injective = false;
    hit[y] = true;
  }
  const bool bijective = injective && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

  const auto tau = tau_map(*KA, *AK);
  bool tau_identity = true;
  for (const auto& U : O->extents)
    tau_identity = tau_identity && tau.preimage(diamond(*AK, box(*K, U))) == box(*KA, diamond(*A, U));

  Verdict v;
  v.check = "consonance equivalence";
  v.instances = 3;
  v.holds = consonant == bijective && bijective == tau_identity;
  v.notes.push_back(std::string("consonant=") + (consonant ? "true" : "false") +
                    " sigma_bijective=" + (bijective ? "true" : "false") +
                    " tau_identity=" + (tau_identity ? "true" : "false"));
  if (!v.holds)
    v.witness = json{{"consonant", consonant}, {"sigma_bijective", bijective}, {"tau_identity", tau_identity}};
  return v;
}

Verdict topology_coincidence(const ConstructedSpace& C, Reference against) {
  const std::size_t n = C.size();
  // leq[p] = {q : p <= q} in the extent order.
  std::vector<PtSet> leq(n, PtSet(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      bool le = false;
      switch (C.kind) {
        case Kind::Lower:
        case Kind::OpenLattice: le = C.extents[p].subset_of(C.extents[q]); break;
        case Kind::Upper: le = C.extents[q].subset_of(C.extents[p]); break;
        case Kind::Convex:
          le = C.lenses[p].closed.subset_of(C.lenses[q].closed) && C.lenses[q].saturated.subset_of(C.lenses[p].saturated);
          break;
      }
      if (le) leq[p].set(q);
    }
  }

  std::vector<PtSet> ref(n, PtSet::full(n));
  if (against == Reference::Scott) {
    ref = leq;
  } else {
    // Subbasis: complements of principal down-sets.
    for (std::size_t p = 0; p < n; ++p) {
      PtSet down(n);
      for (std::size_t q = 0; q < n; ++q)
        if (leq[q].test(p)) down.set(q);
      const PtSet sub = down.complement();
      sub.for_each([&](std::size_t q) { ref[q] &= sub; });
    }
  }

  const FiniteSpace& S = *C.space;
  auto open_in_ref = [&](const PtSet& s) {
    bool ok = true;
    s.for_each([&](std::size_t q) { ok = ok && ref[q].subset_of(s); });
    return ok;
  };
  const std::string name = std::string("topology of ") + std::string(kind_letter(C.kind)) + "(X) vs " +
                           (against == Reference::Weak ? "weak" : "Scott");
  for (std::size_t p = 0; p < n; ++p) {
    if (S.up(p) == ref[p]) continue;
    const bool constructed_only = !open_in_ref(S.up(p));
    const PtSet& w = constructed_only ? S.up(p) : ref[p];
    return Verdict::fail(name, json{{"set", S.set_json(w)}, {"open_in", constructed_only ? "constructed" : "reference"}},
                         p + 1);
  }
  return Verdict::pass(name, n);
}

}  // namespace powerspace
