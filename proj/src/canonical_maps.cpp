#include "powerspace/canonical_maps.hpp"

#include "powerspace/errors.hpp"

namespace powerspace {

namespace {

const ConstructedSpace& inner(const ConstructedSpace& C, Kind outer, Kind in, const char* what) {
  if (C.kind != outer || !C.base_construction || C.base_construction->kind != in)
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " has the wrong construction shape");
  return *C.base_construction;
}

void same_base(const ConstructedSpace& a, const ConstructedSpace& b) {
  if (a.base != b.base && a.base->fingerprint() != b.base->fingerprint())
    throw Error(ErrorCode::ShapeMismatch, "powerspaces built over different spaces");
}

// ◇U over A(X) for every open U of X, indexed by the O(X) point of U.
std::vector<PtSet> diamonds(const ConstructedSpace& A, const ConstructedSpace& O) {
  std::vector<PtSet> out;
  out.reserve(O.size());
  for (const auto& U : O.extents) out.push_back(diamond(A, U));
  return out;
}

std::vector<PtSet> boxes(const ConstructedSpace& K, const ConstructedSpace& O) {
  std::vector<PtSet> out;
  out.reserve(O.size());
  for (const auto& U : O.extents) out.push_back(box(K, U));
  return out;
}

// {p in C : extent(p) meets every member of `family`} for families of base subsets.
PtSet meeting_all(const std::vector<PtSet>& candidates, const std::vector<PtSet>& family_extents, const PtSet& family) {
  PtSet out(candidates.size());
  for (std::size_t p = 0; p < candidates.size(); ++p) {
    bool ok = true;
    family.for_each([&](std::size_t q) { ok = ok && candidates[p].intersects(family_extents[q]); });
    if (ok) out.set(p);
  }
  return out;
}

}  // namespace

PtSet nabla(const ConstructedSpace& OX, const PtSet& K) {
  if (OX.kind != Kind::OpenLattice) throw Error(ErrorCode::ShapeMismatch, "▽ lives in O(X)");
  if (K.universe() != OX.base->size() || !OX.base->is_open(K))
    throw Error(ErrorCode::ShapeMismatch, "▽ needs a saturated subset of X");
  PtSet out(OX.size());
  for (std::size_t u = 0; u < OX.size(); ++u)
    if (K.subset_of(OX.extents[u])) out.set(u);
  return out;
}

PtSet triangle(const ConstructedSpace& OX, const PtSet& A) {
  if (OX.kind != Kind::OpenLattice) throw Error(ErrorCode::ShapeMismatch, "△ lives in O(X)");
  if (A.universe() != OX.base->size() || !OX.base->is_closed(A))
    throw Error(ErrorCode::ShapeMismatch, "△ needs a closed subset of X");
  PtSet out(OX.size());
  for (std::size_t u = 0; u < OX.size(); ++u)
    if (A.intersects(OX.extents[u])) out.set(u);
  return out;
}

PtSet boxtimes(const ConstructedSpace& OOX, const PtSet& U) {
  const auto& OX = inner(OOX, Kind::OpenLattice, Kind::OpenLattice, "⊠ space");
  const auto u = OX.find(U);
  if (!u) throw Error(ErrorCode::ShapeMismatch, "⊠ needs an open of X");
  PtSet out(OOX.size());
  for (std::size_t h = 0; h < OOX.size(); ++h)
    if (OOX.extents[h].test(*u)) out.set(h);
  return out;
}

PtSet modal_set(const ConstructedSpace& space, const ModalGenerator& gen) {
  switch (gen.shape) {
    case ModalShape::Diamond:
    case ModalShape::Box:
      if (gen.argument.universe() != space.base->size() || !space.base->is_open(gen.argument))
        throw Error(ErrorCode::ShapeMismatch, "◇/□ need an open argument");
      return gen.shape == ModalShape::Diamond ? diamond(space, gen.argument) : box(space, gen.argument);
    case ModalShape::BoxTimes: return boxtimes(space, gen.argument);
    case ModalShape::Nabla: return nabla(space, gen.argument);
    case ModalShape::Triangle: return triangle(space, gen.argument);
  }
  throw Error(ErrorCode::ShapeMismatch, "unknown modal shape");
}

Tower build_tower(SpaceRef X, const Limits& limits) {
  Tower t;
  t.X = X;
  t.O = open_lattice(X, limits);
  t.A = lower_powerspace(X, limits);
  t.K = upper_powerspace(X, limits);
  t.AK = lower_powerspace(t.K, limits);
  t.KA = upper_powerspace(t.A, limits);
  t.OO = open_lattice(t.O, limits);
  t.AO = lower_powerspace(t.O, limits);
  t.OK = open_lattice(t.K, limits);
  t.KO = upper_powerspace(t.O, limits);
  t.OA = open_lattice(t.A, limits);
  return t;
}

SpaceMap sigma_map(const ConstructedSpace& AK, const ConstructedSpace& KA) {
  const auto& K = inner(AK, Kind::Lower, Kind::Upper, "σ domain");
  const auto& A = inner(KA, Kind::Upper, Kind::Lower, "σ codomain");
  same_base(K, A);
  std::vector<std::size_t> t(AK.size());
  for (std::size_t p = 0; p < AK.size(); ++p) t[p] = KA.at(meeting_all(A.extents, K.extents, AK.extents[p]));
  return SpaceMap{AK.space, KA.space, std::move(t)};
}

SpaceMap tau_map(const ConstructedSpace& KA, const ConstructedSpace& AK) {
  const auto& A = inner(KA, Kind::Upper, Kind::Lower, "τ domain");
  const auto& K = inner(AK, Kind::Lower, Kind::Upper, "τ codomain");
  same_base(K, A);
  std::vector<std::size_t> t(KA.size());
  for (std::size_t p = 0; p < KA.size(); ++p) t[p] = AK.at(meeting_all(K.extents, A.extents, KA.extents[p]));
  return SpaceMap{KA.space, AK.space, std::move(t)};
}

SpaceMap phi_map(const ConstructedSpace& KA, const ConstructedSpace& OO) {
  const auto& A = inner(KA, Kind::Upper, Kind::Lower, "φ domain");
  const auto& O = inner(OO, Kind::OpenLattice, Kind::OpenLattice, "φ codomain");
  same_base(A, O);
  std::vector<std::size_t> t(KA.size());
  for (std::size_t p = 0; p < KA.size(); ++p) t[p] = OO.at(meeting_all(O.extents, A.extents, KA.extents[p]));
  return SpaceMap{KA.space, OO.space, std::move(t)};
}

SpaceMap psi_map(const ConstructedSpace& OO, const ConstructedSpace& KA) {
  const auto& O = inner(OO, Kind::OpenLattice, Kind::OpenLattice, "ψ domain");
  const auto& A = inner(KA, Kind::Upper, Kind::Lower, "ψ codomain");
  same_base(A, O);
  const auto dia = diamonds(A, O);
  std::vector<std::size_t> t(OO.size());
  for (std::size_t h = 0; h < OO.size(); ++h) {
    PtSet meet = PtSet::full(A.size());
    OO.extents[h].for_each([&](std::size_t u) { meet &= dia[u]; });
    t[h] = KA.at(meet);
  }
  return SpaceMap{OO.space, KA.space, std::move(t)};
}

SpaceMap alpha_map(const ConstructedSpace& AO, const ConstructedSpace& OK) {
  const auto& O = inner(AO, Kind::Lower, Kind::OpenLattice, "α domain");
  const auto& K = inner(OK, Kind::OpenLattice, Kind::Upper, "α codomain");
  same_base(O, K);
  const auto bx = boxes(K, O);
  std::vector<std::size_t> t(AO.size());
  for (std::size_t p = 0; p < AO.size(); ++p) {
    PtSet join(K.size());
    AO.extents[p].for_each([&](std::size_t u) { join |= bx[u]; });
    t[p] = OK.at(join);
  }
  return SpaceMap{AO.space, OK.space, std::move(t)};
}

SpaceMap beta_map(const ConstructedSpace& OK, const ConstructedSpace& AO) {
  const auto& K = inner(OK, Kind::OpenLattice, Kind::Upper, "β domain");
  const auto& O = inner(AO, Kind::Lower, Kind::OpenLattice, "β codomain");
  same_base(O, K);
  const auto bx = boxes(K, O);
  std::vector<std::size_t> t(OK.size());
  for (std::size_t p = 0; p < OK.size(); ++p) {
    PtSet fam(O.size());
    for (std::size_t u = 0; u < O.size(); ++u)
      if (bx[u].subset_of(OK.extents[p])) fam.set(u);
    t[p] = AO.at(fam);
  }
  return SpaceMap{OK.space, AO.space, std::move(t)};
}

SpaceMap gamma_map(const ConstructedSpace& KO, const ConstructedSpace& OA) {
  const auto& O = inner(KO, Kind::Upper, Kind::OpenLattice, "γ domain");
  const auto& A = inner(OA, Kind::OpenLattice, Kind::Lower, "γ codomain");
  same_base(O, A);
  const auto dia = diamonds(A, O);
  std::vector<std::size_t> t(KO.size());
  for (std::size_t p = 0; p < KO.size(); ++p) {
    PtSet meet = PtSet::full(A.size());
    KO.extents[p].for_each([&](std::size_t u) { meet &= dia[u]; });
    t[p] = OA.at(meet);
  }
  return SpaceMap{KO.space, OA.space, std::move(t)};
}

SpaceMap delta_map(const ConstructedSpace& OA, const ConstructedSpace& KO) {
  const auto& A = inner(OA, Kind::OpenLattice, Kind::Lower, "δ domain");
  const auto& O = inner(KO, Kind::Upper, Kind::OpenLattice, "δ codomain");
  same_base(O, A);
  const auto dia = diamonds(A, O);
  std::vector<std::size_t> t(OA.size());
  for (std::size_t p = 0; p < OA.size(); ++p) {
    PtSet fam(O.size());
    for (std::size_t u = 0; u < O.size(); ++u)
      if (OA.extents[p].subset_of(dia[u])) fam.set(u);
    t[p] = KO.at(fam);
  }
  return SpaceMap{OA.space, KO.space, std::move(t)};
}

CanonicalMapPair sigma_tau(const Tower& t) {
  return {"sigma/tau", sigma_map(*t.AK, *t.KA), tau_map(*t.KA, *t.AK), t.X};
}
CanonicalMapPair phi_psi(const Tower& t) { return {"phi/psi", phi_map(*t.KA, *t.OO), psi_map(*t.OO, *t.KA), t.X}; }
CanonicalMapPair alpha_beta(const Tower& t) {
  return {"alpha/beta", alpha_map(*t.AO, *t.OK), beta_map(*t.OK, *t.AO), t.X};
}
CanonicalMapPair gamma_delta(const Tower& t) {
  return {"gamma/delta", gamma_map(*t.KO, *t.OA), delta_map(*t.OA, *t.KO), t.X};
}

Verdict maps_agree(const std::string& check, const SpaceMap& lhs, const SpaceMap& rhs) {
  if (lhs.table.size() != rhs.table.size())
    return Verdict::fail(check, json{{"reason", "domains differ in size"}});
  for (std::size_t p = 0; p < lhs.table.size(); ++p) {
    if (lhs.table[p] != rhs.table[p]) {
      return Verdict::fail(check, json{{"point", lhs.domain->name(p)},
                                       {"lhs", lhs.codomain->name(lhs.table[p])},
                                       {"rhs", rhs.codomain->name(rhs.table[p])}},
                           p + 1);
    }
  }
  return Verdict::pass(check, lhs.table.size());
}

Verdict check_pair(const CanonicalMapPair& pair, bool order_iso) {
  Verdict v = Verdict::pass(pair.name);
  auto tag = [&](Verdict sub, const char* what) {
    sub.check = pair.name + " " + what;
    v.absorb(sub);
  };
  tag(maps_agree("", compose(pair.backward, pair.forward), identity_map(pair.forward.domain)), "backward∘forward=id");
  tag(maps_agree("", compose(pair.forward, pair.backward), identity_map(pair.backward.domain)), "forward∘backward=id");
  tag(check_continuous(pair.forward), "forward continuous");
  tag(check_continuous(pair.backward), "backward continuous");
  if (order_iso) {
    if (!is_monotone(pair.forward) || !is_monotone(pair.backward))
      v.absorb(Verdict::fail(pair.name + " order isomorphism", json{{"reason", "not monotone both ways"}}));
  }
  return v;
}

namespace {

Verdict equal_sets(const std::string& check, const FiniteSpace& space, const PtSet& lhs, const PtSet& rhs, json where) {
  if (lhs == rhs) return Verdict::pass(check, 1);
  where["lhs"] = space.set_json(lhs);
  where["rhs"] = space.set_json(rhs);
  return Verdict::fail(check, std::move(where), 1);
}

}  // namespace

Verdict check_preimage_identities(const Tower& t) {
  const auto st = sigma_tau(t);
  const auto pp = phi_psi(t);
  const auto ab = alpha_beta(t);
  const auto gd = gamma_delta(t);
  const auto& X = *t.X;

  Verdict v = Verdict::pass("preimage identities");
  for (const auto& U : t.O->extents) {
    const json at{{"U", X.set_json(U)}};
    const PtSet box_dia = box(*t.KA, diamond(*t.A, U));
    const PtSet dia_box = diamond(*t.AK, box(*t.K, U));
    const PtSet bt = boxtimes(*t.OO, U);
    v.absorb(equal_sets("sigma^-1(box dia U) = dia box U", *t.AK->space, st.forward.preimage(box_dia), dia_box, at));
    v.absorb(equal_sets("tau^-1(dia box U) = box dia U", *t.KA->space, st.backward.preimage(dia_box), box_dia, at));
    v.absorb(equal_sets("phi^-1(boxtimes U) = box dia U", *t.KA->space, pp.forward.preimage(bt), box_dia, at));
    v.absorb(equal_sets("psi^-1(box dia U) = boxtimes U", *t.OO->space, pp.backward.preimage(box_dia), bt, at));
  }
  for (std::size_t a = 0; a < t.AK->size(); ++a) {
    const json at{{"family", t.AK->space->name(a)}};
    const PtSet lhs = ab.forward.preimage(triangle(*t.OK, t.AK->extents[a]));
    const std::size_t h = pp.forward(st.forward(a));
    v.absorb(equal_sets("alpha^-1(triangle A) = dia phi(sigma(A))", *t.AO->space, lhs, diamond(*t.AO, t.OO->extents[h]), at));
  }
  for (std::size_t h = 0; h < t.OO->size(); ++h) {
    const json at{{"family", t.OO->space->name(h)}};
    const PtSet lhs_b = ab.backward.preimage(diamond(*t.AO, t.OO->extents[h]));
    const std::size_t a = st.backward(pp.backward(h));
    v.absorb(equal_sets("beta^-1(dia H) = triangle tau(psi(H))", *t.OK->space, lhs_b, triangle(*t.OK, t.AK->extents[a]), at));
    const PtSet lhs_d = gd.backward.preimage(box(*t.KO, t.OO->extents[h]));
    v.absorb(equal_sets("delta^-1(box H) = nabla psi(H)", *t.OA->space, lhs_d,
                        nabla(*t.OA, t.KA->extents[pp.backward(h)]), at));
  }
  for (std::size_t k = 0; k < t.KA->size(); ++k) {
    const json at{{"family", t.KA->space->name(k)}};
    const PtSet lhs = gd.forward.preimage(nabla(*t.OA, t.KA->extents[k]));
    v.absorb(equal_sets("gamma^-1(nabla K) = box phi(K)", *t.KO->space, lhs, box(*t.KO, t.OO->extents[pp.forward(k)]), at));
  }
  return v;
}

Verdict check_tau_inclusion(const Tower& t) {
  const auto tau = tau_map(*t.KA, *t.AK);
  Verdict v = Verdict::pass("tau^-1(dia box U) within box dia U");
  for (const auto& U : t.O->extents) {
    const PtSet lhs = tau.preimage(diamond(*t.AK, box(*t.K, U)));
    const PtSet rhs = box(*t.KA, diamond(*t.A, U));
    ++v.instances;
    if (!lhs.subset_of(rhs)) {
      return Verdict::fail(v.check, json{{"U", t.X->set_json(U)}, {"extra", t.KA->space->set_json(lhs - rhs)}},
                           v.instances);
    }
  }
  return v;
}

std::string_view map_name(MapName m) {
  switch (m) {
    case MapName::Sigma: return "sigma";
    case MapName::Tau: return "tau";
    case MapName::Phi: return "phi";
    case MapName::Psi: return "psi";
    case MapName::Alpha: return "alpha";
    case MapName::Beta: return "beta";
    case MapName::Gamma: return "gamma";
    case MapName::Delta: return "delta";
  }
  return "?";
}

Verdict check_naturality(const SpaceMap& f, MapName which, const Limits& limits) {
  if (const auto c = check_continuous(f); !c.holds)
    throw Error(ErrorCode::NotContinuous, "naturality needs a continuous map: " + c.witness->dump());
  return check_naturality(f, build_tower(f.domain, limits), build_tower(f.codomain, limits), which);
}

Verdict check_naturality(const SpaceMap& f, const Tower& tx, const Tower& ty, MapName which) {
  if (const auto c = check_continuous(f); !c.holds)
    throw Error(ErrorCode::NotContinuous, "naturality needs a continuous map: " + c.witness->dump());
  // Rebase f onto the tower's own X so the functor checks see identical spaces.
  const SpaceMap g{tx.X, ty.X, f.table};
  const SpaceMap Af = lower_map(*tx.A, *ty.A, g);
  const SpaceMap Kf = upper_map(*tx.K, *ty.K, g);
  const SpaceMap Of = open_map(*ty.O, *tx.O, g);
  const std::string name = "naturality " + std::string(map_name(which));

  switch (which) {
    case MapName::Sigma: {
      const auto AKf = lower_map(*tx.AK, *ty.AK, Kf);
      const auto KAf = upper_map(*tx.KA, *ty.KA, Af);
      return maps_agree(name, compose(sigma_map(*ty.AK, *ty.KA), AKf), compose(KAf, sigma_map(*tx.AK, *tx.KA)));
    }
    case MapName::Tau: {
      const auto AKf = lower_map(*tx.AK, *ty.AK, Kf);
      const auto KAf = upper_map(*tx.KA, *ty.KA, Af);
      return maps_agree(name, compose(tau_map(*ty.KA, *ty.AK), KAf), compose(AKf, tau_map(*tx.KA, *tx.AK)));
    }
    case MapName::Phi: {
      const auto KAf = upper_map(*tx.KA, *ty.KA, Af);
      const auto OOf = open_map(*tx.OO, *ty.OO, Of);
      return maps_agree(name, compose(phi_map(*ty.KA, *ty.OO), KAf), compose(OOf, phi_map(*tx.KA, *tx.OO)));
    }
    case MapName::Psi: {
      const auto KAf = upper_map(*tx.KA, *ty.KA, Af);
      const auto OOf = open_map(*tx.OO, *ty.OO, Of);
      return maps_agree(name, compose(psi_map(*ty.OO, *ty.KA), OOf), compose(KAf, psi_map(*tx.OO, *tx.KA)));
    }
    case MapName::Alpha: {
      const auto AOf = lower_map(*ty.AO, *tx.AO, Of);
      const auto OKf = open_map(*ty.OK, *tx.OK, Kf);
      return maps_agree(name, compose(alpha_map(*tx.AO, *tx.OK), AOf), compose(OKf, alpha_map(*ty.AO, *ty.OK)));
    }
    case MapName::Beta: {
      const auto AOf = lower_map(*ty.AO, *tx.AO, Of);
      const auto OKf = open_map(*ty.OK, *tx.OK, Kf);
      return maps_agree(name, compose(beta_map(*tx.OK, *tx.AO), OKf), compose(AOf, beta_map(*ty.OK, *ty.AO)));
    }
    case MapName::Gamma: {
      const auto KOf = upper_map(*ty.KO, *tx.KO, Of);
      const auto OAf = open_map(*ty.OA, *tx.OA, Af);
      return maps_agree(name, compose(gamma_map(*tx.KO, *tx.OA), KOf), compose(OAf, gamma_map(*ty.KO, *ty.OA)));
    }
    case MapName::Delta: {
      const auto KOf = upper_map(*ty.KO, *tx.KO, Of);
      const auto OAf = open_map(*ty.OA, *tx.OA, Af);
      return maps_agree(name, compose(delta_map(*tx.OA, *tx.KO), OAf), compose(KOf, delta_map(*ty.OA, *ty.KO)));
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown map name");
}

Verdict check_distributive_law(SpaceRef X, const Limits& limits, bool allow_large) {
  if (X->size() > 2 && !allow_large)
    throw Error(ErrorCode::PowerspaceTooLarge, "distributive-law check is limited to spaces with at most 2 points");

  const auto A = lower_powerspace(X, limits);
  const auto K = upper_powerspace(X, limits);
  const auto AK = lower_powerspace(K, limits);
  const auto KA = upper_powerspace(A, limits);
  const auto AA = lower_powerspace(A, limits);
  const auto KK = upper_powerspace(K, limits);
  const auto AKK = lower_powerspace(KK, limits);
  const auto KAK = upper_powerspace(AK, limits);
  const auto KKA = upper_powerspace(KA, limits);
  const auto AAK = lower_powerspace(AK, limits);
  const auto AKA = lower_powerspace(KA, limits);
  const auto KAA = upper_powerspace(AA, limits);

  const auto sigma = sigma_map(*AK, *KA);
  const auto tau = tau_map(*KA, *AK);
  const auto etaA = lower_unit(*A);
  const auto etaK = upper_unit(*K);
  const auto muA_X = lower_mult(*AA);
  const auto muK_X = upper_mult(*KK);

  Verdict v = Verdict::pass("Beck diagrams for sigma");
  v.absorb(maps_agree("sigma unit A(eta^K)", compose(sigma, lower_map(*A, *AK, etaK)), upper_unit(*KA)));
  v.absorb(maps_agree("sigma unit eta^A", compose(sigma, lower_unit(*AK)), upper_map(*K, *KA, etaA)));
  v.absorb(maps_agree("sigma mult mu^K",
                      compose(sigma, lower_map(*AKK, *AK, muK_X)),
                      compose(upper_mult(*KKA), compose(upper_map(*KAK, *KKA, sigma), sigma_map(*AKK, *KAK)))));
  v.absorb(maps_agree("sigma mult mu^A",
                      compose(sigma, lower_mult(*AAK)),
                      compose(upper_map(*KAA, *KA, muA_X), compose(sigma_map(*AKA, *KAA), lower_map(*AAK, *AKA, sigma)))));

  Verdict w = Verdict::pass("Beck diagrams for tau");
  w.absorb(maps_agree("tau unit K(eta^A)", compose(tau, upper_map(*K, *KA, etaA)), lower_unit(*AK)));
  w.absorb(maps_agree("tau unit eta^K", compose(tau, upper_unit(*KA)), lower_map(*A, *AK, etaK)));
  w.absorb(maps_agree("tau mult mu^A",
                      compose(tau, upper_map(*KAA, *KA, muA_X)),
                      compose(lower_mult(*AAK), compose(lower_map(*AKA, *AAK, tau), tau_map(*KAA, *AKA)))));
  w.absorb(maps_agree("tau mult mu^K",
                      compose(tau, upper_mult(*KKA)),
                      compose(lower_map(*AKK, *AK, muK_X), compose(tau_map(*KAK, *AKK), upper_map(*KKA, *KAK, tau)))));

  v.notes.push_back(std::string("tau orientation: ") + (w.holds ? "all four diagrams commute" : "fails"));
  if (!w.holds) v.notes.push_back("tau witness: " + w.witness->dump());
  return v;
}

}  // namespace powerspace
