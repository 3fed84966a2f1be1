#pragma once

#include <cstdint>
#include <vector>

#include "powerspace/powerspaces.hpp"

namespace powerspace {

struct CheckOptions {
  /// Scott-open families of O(X) enumerated exhaustively up to this many;
  /// beyond it they are sampled.
  std::size_t family_cap = std::size_t{1} << 16;
  std::size_t samples = 256;
  std::uint64_t seed = 1;
  Limits limits;
};

/// The Scott-open families quantified over by the consonance checks: all
/// upper sets of O(X) when there are at most `family_cap`, else a seeded
/// sample (always containing the empty and the full family).
struct FamilySet {
  std::vector<PtSet> families;  // subsets of O(X)'s points
  bool sampled = false;
};
FamilySet scott_open_families(const ConstructedSpace& OX, const CheckOptions& options);

Verdict is_consonant(SpaceRef X, const CheckOptions& options = {});
Verdict is_co_consonant(SpaceRef X, const CheckOptions& options = {});

/// Throws NotSaturated unless K is an upper set.
Verdict is_strongly_compact(const FiniteSpace& X, const PtSet& K);
/// Every saturated subset; the conjunction of is_strongly_compact.
Verdict all_strongly_compact(const FiniteSpace& X);

Verdict is_wilker(const FiniteSpace& X);

/// Non-empty closed A with A ∈ ◇U ∩ ◇V ⟹ A ∈ ◇(U∩V) for all opens U, V.
std::vector<PtSet> irreducible_closed_sets(const FiniteSpace& X);
Verdict is_sober(const FiniteSpace& X);

/// Definitional consonance, bijectivity of σ and τ⁻¹(◇□U) = □◇U for every U
/// are computed independently; holds iff the three agree.
Verdict consonance_equivalence(SpaceRef X, const CheckOptions& options = {});

enum class Reference { Weak, Scott };

/// Rebuilds the reference topology from the order on extents (⊆ for A and O,
/// ⊇ for K, the product order for L) and compares it with the constructed one.
Verdict topology_coincidence(const ConstructedSpace& C, Reference against);

}  // namespace powerspace
