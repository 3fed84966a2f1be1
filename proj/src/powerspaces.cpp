#include "powerspace/powerspaces.hpp"

#include <algorithm>

#include "powerspace/errors.hpp"
#include "powerspace/kernels.hpp"

namespace powerspace {

namespace {

bool same_space(const SpaceRef& a, const SpaceRef& b) {
  return a == b || (a->size() == b->size() && a->fingerprint() == b->fingerprint());
}

void require(bool ok, ErrorCode code, const char* what) {
  if (!ok) throw Error(code, what);
}

std::vector<PtSet> upper_sets(const FiniteSpace& X, const Limits& limits) {
  return limits.parallel ? upper_sets_parallel(X, limits.max_points) : upper_sets_serial(X, limits.max_points);
}

std::vector<PtSet> lower_sets(const FiniteSpace& X, const Limits& limits) {
  auto sets = upper_sets(X, limits);
  for (auto& s : sets) s = s.complement();
  std::sort(sets.begin(), sets.end(), canonical_less);
  return sets;
}

std::vector<std::string> labels(const FiniteSpace& X, const std::vector<PtSet>& extents) {
  std::vector<std::string> out;
  out.reserve(extents.size());
  for (const auto& e : extents) out.push_back(X.set_label(e));
  return out;
}

ConstructedRef finish(ConstructedSpace c) {
  c.index();
  return std::make_shared<const ConstructedSpace>(std::move(c));
}

ConstructedSpace build_lower(SpaceRef X, const Limits& limits) {
  ConstructedSpace c;
  c.kind = Kind::Lower;
  c.base = X;
  c.extents = lower_sets(*X, limits);
  c.index();
  std::vector<PtSet> subbasis;
  for (const auto& U : X->opens(limits.max_points)) subbasis.push_back(diamond(c, U));
  c.space = make_ref(FiniteSpace::from_subbasis(labels(*X, c.extents), subbasis, limits.parallel));
  return c;
}

ConstructedSpace build_upper(SpaceRef X, const Limits& limits) {
  ConstructedSpace c;
  c.kind = Kind::Upper;
  c.base = X;
  c.extents = upper_sets(*X, limits);
  c.index();
  // Every saturated set of a finite space is also open, so the extents double
  // as the opens U for the subbasis □U.
  std::vector<PtSet> subbasis;
  subbasis.reserve(c.extents.size());
  for (const auto& U : c.extents) subbasis.push_back(box(c, U));
  c.space = make_ref(FiniteSpace::from_subbasis(labels(*X, c.extents), subbasis, limits.parallel));
  return c;
}

ConstructedSpace build_convex(SpaceRef X, const Limits& limits) {
  ConstructedSpace c;
  c.kind = Kind::Convex;
  c.base = X;
  const auto closed = lower_sets(*X, limits);
  const auto saturated = upper_sets(*X, limits);
  std::vector<std::pair<PtSet, Lens>> found;
  for (const auto& A : closed) {
    for (const auto& K : saturated) {
      const PtSet L = A & K;
      if (X->closure(L) == A && X->saturation(L) == K) {
        found.push_back({L, Lens{A, K}});
        if (found.size() > limits.max_points)
          throw Error(ErrorCode::PowerspaceTooLarge, "more than " + std::to_string(limits.max_points) + " lenses");
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  std::vector<std::string> names;
  for (auto& [L, lens] : found) {
    names.push_back("<" + X->set_label(lens.closed) + "," + X->set_label(lens.saturated) + ">");
    c.extents.push_back(L);
    c.lenses.push_back(std::move(lens));
  }
  c.index();
  std::vector<PtSet> subbasis;
  for (const auto& U : saturated) {
    subbasis.push_back(diamond(c, U));
    subbasis.push_back(box(c, U));
  }
  c.space = make_ref(FiniteSpace::from_subbasis(std::move(names), subbasis, limits.parallel));
  return c;
}

ConstructedSpace build_open(SpaceRef X, const Limits& limits) {
  ConstructedSpace c;
  c.kind = Kind::OpenLattice;
  c.base = X;
  c.extents = upper_sets(*X, limits);
  c.index();
  // Scott topology of a finite poset: the opens are the upper sets of ⊆.
  const std::size_t n = c.extents.size();
  std::vector<PtSet> up(n, PtSet(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (c.extents[u].subset_of(c.extents[v])) up[u].set(v);
  c.space = make_ref(FiniteSpace::from_up_sets(labels(*X, c.extents), std::move(up)));
  return c;
}

ConstructedSpace build(Kind kind, SpaceRef X, const Limits& limits) {
  switch (kind) {
    case Kind::Lower: return build_lower(std::move(X), limits);
    case Kind::Upper: return build_upper(std::move(X), limits);
    case Kind::Convex: return build_convex(std::move(X), limits);
    case Kind::OpenLattice: return build_open(std::move(X), limits);
  }
  throw Error(ErrorCode::InvalidInput, "unknown powerspace kind");
}

}  // namespace

std::string_view kind_letter(Kind k) {
  switch (k) {
    case Kind::Lower: return "A";
    case Kind::Upper: return "K";
    case Kind::Convex: return "L";
    case Kind::OpenLattice: return "O";
  }
  return "?";
}

std::optional<std::size_t> ConstructedSpace::find(const PtSet& extent) const {
  auto it = index_.find(extent);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConstructedSpace::at(const PtSet& extent) const {
  if (auto i = find(extent)) return *i;
  throw Error(ErrorCode::MapUndefined, "value " + base->set_label(extent) + " is not a point of " +
                                           std::string(kind_letter(kind)) + "(X)");
}

void ConstructedSpace::index() {
  index_.clear();
  index_.reserve(extents.size());
  for (std::size_t i = 0; i < extents.size(); ++i) index_.emplace(extents[i], i);
}

ConstructedRef construct(Kind kind, SpaceRef X, const Limits& limits) { return finish(build(kind, std::move(X), limits)); }

ConstructedRef construct(Kind kind, const ConstructedRef& X, const Limits& limits) {
  auto c = build(kind, X->space, limits);
  c.base_construction = X;
  return finish(std::move(c));
}

ConstructedRef lower_powerspace(SpaceRef X, const Limits& l) { return construct(Kind::Lower, std::move(X), l); }
ConstructedRef upper_powerspace(SpaceRef X, const Limits& l) { return construct(Kind::Upper, std::move(X), l); }
ConstructedRef convex_powerspace(SpaceRef X, const Limits& l) { return construct(Kind::Convex, std::move(X), l); }
ConstructedRef open_lattice(SpaceRef X, const Limits& l) { return construct(Kind::OpenLattice, std::move(X), l); }
ConstructedRef lower_powerspace(const ConstructedRef& X, const Limits& l) { return construct(Kind::Lower, X, l); }
ConstructedRef upper_powerspace(const ConstructedRef& X, const Limits& l) { return construct(Kind::Upper, X, l); }
ConstructedRef convex_powerspace(const ConstructedRef& X, const Limits& l) { return construct(Kind::Convex, X, l); }
ConstructedRef open_lattice(const ConstructedRef& X, const Limits& l) { return construct(Kind::OpenLattice, X, l); }

PtSet diamond(const ConstructedSpace& C, const PtSet& U) {
  require(C.kind == Kind::Lower || C.kind == Kind::Convex, ErrorCode::ShapeMismatch, "◇ needs a lower or convex powerspace");
  require(U.universe() == C.base->size(), ErrorCode::ShapeMismatch, "◇ argument over a different space");
  PtSet out(C.size());
  for (std::size_t p = 0; p < C.size(); ++p) {
    const PtSet& A = C.kind == Kind::Convex ? C.lenses[p].closed : C.extents[p];
    if (A.intersects(U)) out.set(p);
  }
  return out;
}

PtSet box(const ConstructedSpace& C, const PtSet& U) {
  require(C.kind == Kind::Upper || C.kind == Kind::Convex, ErrorCode::ShapeMismatch, "□ needs an upper or convex powerspace");
  require(U.universe() == C.base->size(), ErrorCode::ShapeMismatch, "□ argument over a different space");
  PtSet out(C.size());
  for (std::size_t p = 0; p < C.size(); ++p) {
    const PtSet& K = C.kind == Kind::Convex ? C.lenses[p].saturated : C.extents[p];
    if (K.subset_of(U)) out.set(p);
  }
  return out;
}

SpaceMap lower_map(const ConstructedSpace& AX, const ConstructedSpace& AY, const SpaceMap& f) {
  require(AX.kind == Kind::Lower && AY.kind == Kind::Lower, ErrorCode::ShapeMismatch, "lower_map needs A(X) and A(Y)");
  require(same_space(AX.base, f.domain) && same_space(AY.base, f.codomain), ErrorCode::ShapeMismatch,
          "lower_map spaces do not match the map");
  std::vector<std::size_t> t(AX.size());
  for (std::size_t p = 0; p < AX.size(); ++p) t[p] = AY.at(f.codomain->closure(f.image(AX.extents[p])));
  return SpaceMap{AX.space, AY.space, std::move(t)};
}

SpaceMap upper_map(const ConstructedSpace& KX, const ConstructedSpace& KY, const SpaceMap& f) {
  require(KX.kind == Kind::Upper && KY.kind == Kind::Upper, ErrorCode::ShapeMismatch, "upper_map needs K(X) and K(Y)");
  require(same_space(KX.base, f.domain) && same_space(KY.base, f.codomain), ErrorCode::ShapeMismatch,
          "upper_map spaces do not match the map");
  std::vector<std::size_t> t(KX.size());
  for (std::size_t p = 0; p < KX.size(); ++p) t[p] = KY.at(f.codomain->saturation(f.image(KX.extents[p])));
  return SpaceMap{KX.space, KY.space, std::move(t)};
}

SpaceMap open_map(const ConstructedSpace& OY, const ConstructedSpace& OX, const SpaceMap& f) {
  require(OY.kind == Kind::OpenLattice && OX.kind == Kind::OpenLattice, ErrorCode::ShapeMismatch,
          "open_map needs O(Y) and O(X)");
  require(same_space(OX.base, f.domain) && same_space(OY.base, f.codomain), ErrorCode::ShapeMismatch,
          "open_map spaces do not match the map");
  std::vector<std::size_t> t(OY.size());
  for (std::size_t p = 0; p < OY.size(); ++p) t[p] = OX.at(f.preimage(OY.extents[p]));
  return SpaceMap{OY.space, OX.space, std::move(t)};
}

SpaceMap functor_map(Kind kind, const SpaceMap& f, const Limits& limits) {
  if (const auto v = check_continuous(f); !v.holds)
    throw Error(ErrorCode::NotContinuous, "functor applied to a discontinuous map: " + v.witness->dump());
  switch (kind) {
    case Kind::Lower: return lower_map(*lower_powerspace(f.domain, limits), *lower_powerspace(f.codomain, limits), f);
    case Kind::Upper: return upper_map(*upper_powerspace(f.domain, limits), *upper_powerspace(f.codomain, limits), f);
    case Kind::OpenLattice: return open_map(*open_lattice(f.codomain, limits), *open_lattice(f.domain, limits), f);
    case Kind::Convex: break;
  }
  throw Error(ErrorCode::ShapeMismatch, "L has no functorial action here");
}

SpaceMap lower_unit(const ConstructedSpace& AX) {
  require(AX.kind == Kind::Lower, ErrorCode::ShapeMismatch, "lower_unit needs A(X)");
  std::vector<std::size_t> t(AX.base->size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = AX.at(AX.base->down(x));
  return SpaceMap{AX.base, AX.space, std::move(t)};
}

SpaceMap upper_unit(const ConstructedSpace& KX) {
  require(KX.kind == Kind::Upper, ErrorCode::ShapeMismatch, "upper_unit needs K(X)");
  std::vector<std::size_t> t(KX.base->size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = KX.at(KX.base->up(x));
  return SpaceMap{KX.base, KX.space, std::move(t)};
}

namespace {

// Members of an extent over T(X), collapsed by union onto X.
SpaceMap union_collapse(const ConstructedSpace& TTX, Kind kind) {
  require(TTX.kind == kind && TTX.base_construction && TTX.base_construction->kind == kind, ErrorCode::ShapeMismatch,
          "multiplication needs T(T(X)) over T(X)");
  const auto& TX = *TTX.base_construction;
  std::vector<std::size_t> t(TTX.size());
  for (std::size_t p = 0; p < TTX.size(); ++p) {
    PtSet u(TX.base->size());
    TTX.extents[p].for_each([&](std::size_t q) { u |= TX.extents[q]; });
    t[p] = TX.at(u);
  }
  return SpaceMap{TTX.space, TX.space, std::move(t)};
}

}  // namespace

SpaceMap lower_mult(const ConstructedSpace& AAX) { return union_collapse(AAX, Kind::Lower); }
SpaceMap upper_mult(const ConstructedSpace& KKX) { return union_collapse(KKX, Kind::Upper); }

SpaceMap monad_unit(Kind kind, const ConstructedSpace& TX) {
  if (kind == Kind::Lower) return lower_unit(TX);
  if (kind == Kind::Upper) return upper_unit(TX);
  throw Error(ErrorCode::ShapeMismatch, "only A and K carry a monad here");
}

SpaceMap monad_mult(Kind kind, const ConstructedSpace& TTX) {
  if (kind == Kind::Lower) return lower_mult(TTX);
  if (kind == Kind::Upper) return upper_mult(TTX);
  throw Error(ErrorCode::ShapeMismatch, "only A and K carry a monad here");
}

SpaceMap structure_union(const ConstructedSpace& AOX) {
  require(AOX.kind == Kind::Lower && AOX.base_construction && AOX.base_construction->kind == Kind::OpenLattice,
          ErrorCode::ShapeMismatch, "union map needs A(O(X))");
  const auto& OX = *AOX.base_construction;
  std::vector<std::size_t> t(AOX.size());
  for (std::size_t p = 0; p < AOX.size(); ++p) {
    PtSet u(OX.base->size());
    AOX.extents[p].for_each([&](std::size_t q) { u |= OX.extents[q]; });
    t[p] = OX.at(u);
  }
  return SpaceMap{AOX.space, OX.space, std::move(t)};
}

SpaceMap structure_intersection(const ConstructedSpace& KOX) {
  require(KOX.kind == Kind::Upper && KOX.base_construction && KOX.base_construction->kind == Kind::OpenLattice,
          ErrorCode::ShapeMismatch, "intersection map needs K(O(X))");
  const auto& OX = *KOX.base_construction;
  std::vector<std::size_t> t(KOX.size());
  for (std::size_t p = 0; p < KOX.size(); ++p) {
    PtSet u = OX.base->full();  // empty family of opens meets to X
    KOX.extents[p].for_each([&](std::size_t q) { u &= OX.extents[q]; });
    t[p] = OX.at(u);
  }
  return SpaceMap{KOX.space, OX.space, std::move(t)};
}

json constructed_to_json(const ConstructedSpace& C) {
  json points = json::array();
  for (std::size_t p = 0; p < C.size(); ++p) {
    json pt{{"name", C.space->name(p)}};
    if (C.kind == Kind::Convex) {
      pt["closed"] = C.base->set_json(C.lenses[p].closed);
      pt["saturated"] = C.base->set_json(C.lenses[p].saturated);
    } else {
      pt["extent"] = C.base->set_json(C.extents[p]);
    }
    points.push_back(std::move(pt));
  }
  json order = json::array();
  for (auto [a, b] : C.space->hasse()) order.push_back({C.space->name(a), C.space->name(b)});
  return json{{"kind", std::string(kind_letter(C.kind))}, {"size", C.size()}, {"points", points}, {"order", order}};
}

}  // namespace powerspace
