#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "powerspace/finite_space.hpp"

namespace powerspace {

/// A relation ≺ on the opens of a space, as a matrix over the canonical opens list.
struct ApproxRelation {
  SpaceRef space;
  std::vector<PtSet> opens;
  std::vector<std::vector<bool>> rel;  // rel[u][v]: opens[u] ≺ opens[v]

  bool precedes(std::size_t u, std::size_t v) const { return rel[u][v]; }
  std::size_t open_index(const PtSet& U) const;  // throws PreconditionViolated
};

/// U ≺ V iff U = ↑x for some x and U ⊆ V. Throws EmptySpace.
ApproxRelation canonical_approx_relation(SpaceRef X);
ApproxRelation approx_relation_from_pairs(SpaceRef X, const std::vector<std::pair<PtSet, PtSet>>& pairs);

/// Axioms 1-3 directly; axiom 4 read on a finite family as: the members of
/// every elementary ≺-cycle form a neighbourhood basis of exactly one point.
Verdict validate_approx_relation(const ApproxRelation& r);

/// The unique x such that `family` is a neighbourhood basis at x, if any.
std::optional<std::size_t> basis_point(const FiniteSpace& X, const std::vector<PtSet>& family);

/// A finitely branching tree given as a finite automaton: node s carries an
/// open, and each labelled edge leads to a child. The tree is the unfolding
/// from `root`, so infinite trees with eventually periodic shape fit.
class ApproxScheme {
 public:
  struct State {
    std::size_t open;  // index into the relation's opens
    std::vector<std::pair<std::size_t, std::size_t>> children;  // (label, state)
  };

  /// Checks that every descendant carries an open ≺ its ancestor's. Throws
  /// PreconditionViolated otherwise.
  ApproxScheme(ApproxRelation relation, std::vector<State> states, std::size_t root);

  const ApproxRelation& relation() const noexcept { return relation_; }
  const std::vector<State>& states() const noexcept { return states_; }
  std::size_t root() const noexcept { return root_; }

  /// Nodes of the unfolded tree as label sequences, up to `depth`.
  std::vector<std::vector<std::size_t>> unfold(std::size_t depth) const;
  json to_json(std::size_t depth) const;

 private:
  ApproxRelation relation_;
  std::vector<State> states_;
  std::size_t root_;
};

/// An ultimately periodic infinite path stem·cycle·cycle·… given by labels.
struct PathDescriptor {
  std::vector<std::size_t> stem;
  std::vector<std::size_t> cycle;  // non-empty
};

/// The point with the path's opens as neighbourhood basis. Throws
/// PreconditionViolated if the path leaves the tree, NoUniquePoint if there
/// is no such point or more than one.
std::size_t scheme_limit(const ApproxScheme& s, const PathDescriptor& path);

struct WilkerLevel {
  std::vector<std::size_t> f_opens;  // opens assigned to the level's F nodes
  std::vector<std::size_t> g_opens;
  std::vector<std::size_t> cover;    // chosen subcover, ascending indices
};

struct WilkerResult {
  PtSet K1;
  PtSet K2;
  std::vector<WilkerLevel> levels;
  std::size_t period_start = 0;
  std::size_t period = 0;
  ApproxScheme f_scheme;
  ApproxScheme g_scheme;

  json trace() const;
};

/// Splits saturated K ⊆ U1 ∪ U2 into saturated K1 ⊆ U1 and K2 ⊆ U2 covering
/// K, by refining two approximation trees level by level until the level
/// contents repeat. Throws PreconditionViolated.
WilkerResult wilker_decompose(const ApproxRelation& r, const PtSet& K, const PtSet& U1, const PtSet& U2);

}  // namespace powerspace
