#pragma once

#include <string>
#include <string_view>

#include "powerspace/powerspaces.hpp"

namespace powerspace {

enum class ModalShape { Diamond, Box, BoxTimes, Nabla, Triangle };

struct ModalGenerator {
  ModalShape shape;
  PtSet argument;  // subset of the base of the space the generator is applied to
};

/// ◇ and □ on A/K/L; ▽K and △A on O(X); ⊠U on O(O(X)), where U is an open
/// of X. Throws ShapeMismatch when shape, kind or argument disagree.
PtSet modal_set(const ConstructedSpace& space, const ModalGenerator& gen);

PtSet nabla(const ConstructedSpace& OX, const PtSet& K);
PtSet triangle(const ConstructedSpace& OX, const PtSet& A);
PtSet boxtimes(const ConstructedSpace& OOX, const PtSet& U);

/// Every powerspace the four homeomorphism pairs need, all over one X.
struct Tower {
  SpaceRef X;
  ConstructedRef O, A, K;
  ConstructedRef AK, KA, OO, AO, OK, KO, OA;
};

Tower build_tower(SpaceRef X, const Limits& limits = {});

// The eight maps. Arguments are the relevant powerspaces; they must be built
// over a common X (checked).
SpaceMap sigma_map(const ConstructedSpace& AK, const ConstructedSpace& KA);
SpaceMap tau_map(const ConstructedSpace& KA, const ConstructedSpace& AK);
SpaceMap phi_map(const ConstructedSpace& KA, const ConstructedSpace& OO);
SpaceMap psi_map(const ConstructedSpace& OO, const ConstructedSpace& KA);
SpaceMap alpha_map(const ConstructedSpace& AO, const ConstructedSpace& OK);
SpaceMap beta_map(const ConstructedSpace& OK, const ConstructedSpace& AO);
SpaceMap gamma_map(const ConstructedSpace& KO, const ConstructedSpace& OA);
SpaceMap delta_map(const ConstructedSpace& OA, const ConstructedSpace& KO);

struct CanonicalMapPair {
  std::string name;  // "sigma/tau", ...
  SpaceMap forward;
  SpaceMap backward;
  SpaceRef base;
};

CanonicalMapPair sigma_tau(const Tower& t);
CanonicalMapPair phi_psi(const Tower& t);
CanonicalMapPair alpha_beta(const Tower& t);
CanonicalMapPair gamma_delta(const Tower& t);

/// Mutually inverse and continuous both ways; with `order_iso` also monotone
/// both ways in the specialization orders.
Verdict check_pair(const CanonicalMapPair& pair, bool order_iso = false);

/// Pointwise table equality; witness names the first disagreeing point.
Verdict maps_agree(const std::string& check, const SpaceMap& lhs, const SpaceMap& rhs);

/// The eight preimage identities for every quantified instance.
Verdict check_preimage_identities(const Tower& t);

/// Only the inclusion τ⁻¹(◇□U) ⊆ □◇U, which holds without consonance.
Verdict check_tau_inclusion(const Tower& t);

enum class MapName { Sigma, Tau, Phi, Psi, Alpha, Beta, Gamma, Delta };
std::string_view map_name(MapName m);
inline constexpr MapName kAllMapNames[] = {MapName::Sigma, MapName::Tau,   MapName::Phi,   MapName::Psi,
                                           MapName::Alpha, MapName::Beta, MapName::Gamma, MapName::Delta};

/// Naturality square for f: X -> Y. Throws NotContinuous.
Verdict check_naturality(const SpaceMap& f, MapName which, const Limits& limits = {});
Verdict check_naturality(const SpaceMap& f, const Tower& tx, const Tower& ty, MapName which);

/// Beck compatibility of σ with both units and multiplications (the τ
/// orientation is evaluated too and reported in the notes). Spaces with more
/// than two points need `allow_large`, else PowerspaceTooLarge.
Verdict check_distributive_law(SpaceRef X, const Limits& limits = {}, bool allow_large = false);

}  // namespace powerspace
