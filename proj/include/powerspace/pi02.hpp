#pragma once

#include <utility>
#include <vector>

#include "powerspace/powerspaces.hpp"

namespace powerspace {

/// {x : ∀i, x ∈ U_i ⟹ x ∈ V_i} presented by a finite list of open pairs.
struct Pi02Presentation {
  SpaceRef ambient;
  std::vector<std::pair<PtSet, PtSet>> pairs;
};

/// Throws PreconditionViolated if a listed set is not open.
PtSet pi02_eval(const Pi02Presentation& p);

/// Pairs (↑x, X∖↓x) for every x outside S; evaluates to exactly S.
Pi02Presentation canonical_presentation(SpaceRef Y, const PtSet& S);
/// Every open pair (U, V) that S satisfies.
Pi02Presentation saturated_presentation(SpaceRef Y, const PtSet& S);

/// Pairs as index pairs into the canonical opens list of the ambient space.
json presentation_to_json(const Pi02Presentation& p);

struct Subspace {
  SpaceRef space;
  SpaceMap inclusion;
};
/// S with the subspace topology, and its inclusion into Y.
Subspace subspace(SpaceRef Y, const PtSet& S);

/// Injective, continuous, and reflecting the specialization order (for
/// finite spaces this is being a homeomorphism onto the image).
Verdict validate_embedding(const SpaceMap& e);

/// A(e) is an embedding whose range is the set cut out by
/// A ∈ ◇(B∩U_i) ⟹ A ∈ ◇(B∩V_i) over all opens B. Throws NotEmbedding or PresentationMismatch.
Verdict lower_embedding_range(const SpaceMap& e, const Pi02Presentation& p, const Limits& limits = {});
/// Dual with K(e) and K ∈ □(B∪U_i) ⟹ K ∈ □(B∪V_i).
Verdict upper_embedding_range(const SpaceMap& e, const Pi02Presentation& p, const Limits& limits = {});

/// The pairs in A(X)×K(X) satisfying the two lens conditions are exactly the
/// lenses, and the product order on them is the order of L(X).
Verdict lens_pi02(SpaceRef X, const Limits& limits = {});

/// range(η^A) = irreducible closed sets = its Π⁰₂ condition set; range(η^K) =
/// the non-empty sets satisfying K ∈ □(U∪V) ⟹ K ∈ □U ∪ □V.
Verdict eta_image_characterizations(SpaceRef X, const Limits& limits = {});

}  // namespace powerspace
