#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powerspace/point_set.hpp"
#include "powerspace/verdict.hpp"

namespace powerspace {

/// A finite T0 space. Finite spaces are Alexandrov, so the topology is stored
/// as the minimal open neighbourhood up(x) of every point; the opens are
/// exactly the upper sets of the specialization order x <= y iff y in up(x).
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Closes the given family under finite unions and intersections (adding
  /// the empty set and the whole space). Throws NotT0 on indistinguishable points.
  static FiniteSpace from_opens(std::vector<std::string> names, const std::vector<PtSet>& opens);
  /// Same generated topology as from_opens; the family is read as a subbasis.
  static FiniteSpace from_subbasis(std::vector<std::string> names, const std::vector<PtSet>& subbasis,
                                   bool parallel = false);
  /// Upper-set topology of the order generated by the covering pairs (a, b) meaning a <= b.
  static FiniteSpace from_poset(std::vector<std::string> names,
                                const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  /// Takes minimal neighbourhoods directly; validates reflexivity, transitivity and T0.
  static FiniteSpace from_up_sets(std::vector<std::string> names, std::vector<PtSet> up);

  std::size_t size() const noexcept { return up_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t x) const { return names_.at(x); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const PtSet& up(std::size_t x) const { return up_[x]; }
  const PtSet& down(std::size_t x) const { return down_[x]; }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }

  PtSet empty_set() const { return PtSet(size()); }
  PtSet full() const { return PtSet::full(size()); }
  PtSet singleton(std::size_t x) const;

  PtSet closure(const PtSet& s) const;     // down-closure
  PtSet saturation(const PtSet& s) const;  // up-closure
  PtSet interior(const PtSet& s) const;
  bool is_open(const PtSet& s) const;
  bool is_closed(const PtSet& s) const;

  /// All opens in canonical order; throws PowerspaceTooLarge past `cap`.
  std::vector<PtSet> opens(std::size_t cap = std::size_t{1} << 20) const;
  std::vector<PtSet> closed_sets(std::size_t cap = std::size_t{1} << 20) const;

  /// Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;

  /// Structural hash of the order (names excluded).
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  json set_json(const PtSet& s) const;
  std::string set_label(const PtSet& s) const;

 private:
  void finish();

  std::vector<std::string> names_;
  std::vector<PtSet> up_;
  std::vector<PtSet> down_;
  std::uint64_t fingerprint_ = 0;
};

using SpaceRef = std::shared_ptr<const FiniteSpace>;

inline SpaceRef make_ref(FiniteSpace s) { return std::make_shared<const FiniteSpace>(std::move(s)); }

/// Point function between two finite spaces, stored as a table.
struct SpaceMap {
  SpaceRef domain;
  SpaceRef codomain;
  std::vector<std::size_t> table;

  std::size_t operator()(std::size_t x) const { return table[x]; }
  PtSet image(const PtSet& s) const;
  PtSet preimage(const PtSet& s) const;
  bool operator==(const SpaceMap& other) const;
};

SpaceMap make_map(SpaceRef domain, SpaceRef codomain, std::vector<std::size_t> table);
SpaceMap identity_map(SpaceRef space);
/// g after f.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

/// Continuity through the basis of minimal neighbourhoods; witness is the
/// failing basic open of the codomain.
Verdict check_continuous(const SpaceMap& f);
/// Literal definition: preimage of every open of the codomain. Exponential.
Verdict check_continuous_exhaustive(const SpaceMap& f);
bool is_monotone(const SpaceMap& f);

/// T0 spaces on at most n points, ordered by size then canonical code. With
/// up_to_iso, one representative per isomorphism class.
std::vector<FiniteSpace> enumerate_spaces(std::size_t n, bool up_to_iso = true, bool include_empty = false,
                                          std::size_t limit = 6);

/// Named fixtures used across tests and the CLI.
FiniteSpace sierpinski();
FiniteSpace discrete(std::size_t n);
FiniteSpace chain(std::size_t n);
FiniteSpace empty_space();

}  // namespace powerspace
