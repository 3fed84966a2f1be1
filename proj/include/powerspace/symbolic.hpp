#pragma once

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>

#include "powerspace/verdict.hpp"

namespace powerspace {

/// A subset of ω ∪ {∞} that is finite or cofinite on ω; membership of ∞ is
/// tracked separately.
class CofinSet {
 public:
  enum class Mode { Finite, Cofinite };

  static CofinSet finite(std::set<std::uint64_t> members, bool top = false);
  static CofinSet cofinite(std::set<std::uint64_t> missing, bool top = false);
  static CofinSet of(std::initializer_list<std::uint64_t> members) { return finite(members); }
  static CofinSet empty() { return finite({}); }
  static CofinSet everything() { return cofinite({}, true); }

  Mode mode() const noexcept { return mode_; }
  const std::set<std::uint64_t>& support() const noexcept { return support_; }
  bool includes_top() const noexcept { return top_; }

  bool contains(std::uint64_t n) const { return (support_.count(n) != 0) == (mode_ == Mode::Finite); }
  bool is_finite_on_omega() const noexcept { return mode_ == Mode::Finite; }
  bool is_empty() const noexcept { return mode_ == Mode::Finite && support_.empty() && !top_; }
  /// Size for finite sets (∞ counted); nullopt for infinite ones.
  std::optional<std::size_t> size() const;
  std::optional<std::uint64_t> max_support() const;

  CofinSet complement() const;
  CofinSet operator|(const CofinSet& o) const;
  CofinSet operator&(const CofinSet& o) const;
  CofinSet operator-(const CofinSet& o) const { return *this & o.complement(); }
  bool subset_of(const CofinSet& o) const { return (*this - o).is_empty(); }
  bool intersects(const CofinSet& o) const { return !(*this & o).is_empty(); }
  bool operator==(const CofinSet& o) const = default;

  std::string to_string() const;

 private:
  Mode mode_ = Mode::Finite;
  std::set<std::uint64_t> support_;
  bool top_ = false;
};

/// Truncation to {0..31} ∪ {∞}: bit i for i < 32, bit 32 for ∞. Used only as
/// an oracle for the set algebra.
using Truncated = std::bitset<33>;
Truncated truncate(const CofinSet& s);

/// The two infinite spaces of the counterexamples. OmegaTop is {∞} ∪ ω with
/// opens ∅ and the cofinite sets containing ∞. OmegaDiscrete is ω with every
/// CofinSet-definable subset open.
enum class SymbolicSpace { OmegaTop, OmegaDiscrete };

bool is_open(SymbolicSpace space, const CofinSet& s);
bool is_closed(SymbolicSpace space, const CofinSet& s);
/// Closure in OmegaTop: finite subsets of ω are closed, everything else closes to the whole space.
CofinSet omega_top_closure(const CofinSet& s);

/// A(OmegaTop)'s lower Vietoris topology is not its Scott topology.
Verdict verify_lower_not_scott(std::uint64_t seed = 1, std::size_t instances = 100);
/// K(OmegaDiscrete)'s upper Vietoris topology is not its weak topology.
Verdict verify_upper_not_weak(std::uint64_t seed = 1, std::size_t instances = 100);
/// A(OmegaTop) is not co-consonant: ◇X is not the saturation of a finite set.
Verdict verify_AX_not_coconsonant(std::uint64_t seed = 1, std::size_t instances = 100);

/// Union, intersection, difference, complement and inclusion against the
/// truncated oracle on random instances.
Verdict check_cofin_algebra(std::uint64_t seed = 1, std::size_t instances = 100);

}  // namespace powerspace
