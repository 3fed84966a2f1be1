#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "powerspace/finite_space.hpp"

namespace powerspace {

enum class Kind { Lower, Upper, Convex, OpenLattice };

std::string_view kind_letter(Kind k);

struct Lens {
  PtSet closed;     // A = Cl(A ∩ K)
  PtSet saturated;  // K = ↑(A ∩ K)
};

struct Limits {
  std::size_t max_points = std::size_t{1} << 20;
  bool parallel = false;
};

/// A powerspace over `base`. Point p of `space` stands for the subset
/// extents[p] of the base (for lenses, the intersection A ∩ K). When the base
/// is itself constructed, base_construction keeps its extents reachable.
class ConstructedSpace {
 public:
  Kind kind = Kind::Lower;
  SpaceRef space;
  SpaceRef base;
  std::shared_ptr<const ConstructedSpace> base_construction;
  std::vector<PtSet> extents;
  std::vector<Lens> lenses;  // Convex only

  std::size_t size() const noexcept { return extents.size(); }
  std::optional<std::size_t> find(const PtSet& extent) const;
  /// Like find, but a missing extent is a MapUndefined error.
  std::size_t at(const PtSet& extent) const;

  /// Rebuilds the extent index; builders call it once.
  void index();

 private:
  std::unordered_map<PtSet, std::size_t, PtSetHash> index_;
};

using ConstructedRef = std::shared_ptr<const ConstructedSpace>;

ConstructedRef lower_powerspace(SpaceRef X, const Limits& limits = {});
ConstructedRef upper_powerspace(SpaceRef X, const Limits& limits = {});
ConstructedRef convex_powerspace(SpaceRef X, const Limits& limits = {});
ConstructedRef open_lattice(SpaceRef X, const Limits& limits = {});

// Iterated forms: the result remembers `X` as its base construction.
ConstructedRef lower_powerspace(const ConstructedRef& X, const Limits& limits = {});
ConstructedRef upper_powerspace(const ConstructedRef& X, const Limits& limits = {});
ConstructedRef convex_powerspace(const ConstructedRef& X, const Limits& limits = {});
ConstructedRef open_lattice(const ConstructedRef& X, const Limits& limits = {});

ConstructedRef construct(Kind kind, SpaceRef X, const Limits& limits = {});
ConstructedRef construct(Kind kind, const ConstructedRef& X, const Limits& limits = {});

/// ◇U = {A : A ∩ U ≠ ∅} for lower and convex powerspaces.
PtSet diamond(const ConstructedSpace& C, const PtSet& U);
/// □U = {K : K ⊆ U} for upper and convex powerspaces.
PtSet box(const ConstructedSpace& C, const PtSet& U);

// Functorial action. The constructed spaces must sit over f's domain and
// codomain; O is contravariant, so open_map runs O(Y) -> O(X).
SpaceMap lower_map(const ConstructedSpace& AX, const ConstructedSpace& AY, const SpaceMap& f);
SpaceMap upper_map(const ConstructedSpace& KX, const ConstructedSpace& KY, const SpaceMap& f);
SpaceMap open_map(const ConstructedSpace& OY, const ConstructedSpace& OX, const SpaceMap& f);

/// Builds both sides and applies the functor. Throws NotContinuous.
SpaceMap functor_map(Kind kind, const SpaceMap& f, const Limits& limits = {});

// Monad structure. `TX` is T(X); `TTX` is T(T(X)) built over TX.
SpaceMap lower_unit(const ConstructedSpace& AX);
SpaceMap lower_mult(const ConstructedSpace& AAX);
SpaceMap upper_unit(const ConstructedSpace& KX);
SpaceMap upper_mult(const ConstructedSpace& KKX);

SpaceMap monad_unit(Kind kind, const ConstructedSpace& TX);
SpaceMap monad_mult(Kind kind, const ConstructedSpace& TTX);

/// Union A(O(X)) -> O(X) and intersection K(O(X)) -> O(X).
SpaceMap structure_union(const ConstructedSpace& AOX);
SpaceMap structure_intersection(const ConstructedSpace& KOX);

/// The constructed space's underlying base point set extents, as labels.
json constructed_to_json(const ConstructedSpace& C);

}  // namespace powerspace
