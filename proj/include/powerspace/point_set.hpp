#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace powerspace {

/// Fixed-width bit-vector set over the points {0, ..., universe-1} of some space.
///
/// Binary operations require both operands to share the same universe; this is
/// asserted in debug builds only, because every set in the hot loops is produced
/// by the same space.
class PtSet {
 public:
  PtSet() = default;
  explicit PtSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

  static PtSet full(std::size_t universe);
  static PtSet of(std::size_t universe, std::initializer_list<std::size_t> members);
  static PtSet from_indices(std::size_t universe, std::span<const std::size_t> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  PtSet& operator|=(const PtSet& other) noexcept;
  PtSet& operator&=(const PtSet& other) noexcept;
  PtSet& operator-=(const PtSet& other) noexcept;

  friend PtSet operator|(PtSet a, const PtSet& b) { return a |= b; }
  friend PtSet operator&(PtSet a, const PtSet& b) { return a &= b; }
  friend PtSet operator-(PtSet a, const PtSet& b) { return a -= b; }

  PtSet complement() const;
  bool subset_of(const PtSet& other) const noexcept;
  bool intersects(const PtSet& other) const noexcept;

  std::optional<std::size_t> first() const noexcept;
  std::vector<std::size_t> indices() const;

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  bool operator==(const PtSet& other) const noexcept = default;

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order used for every deterministic listing: by cardinality, then
/// lexicographically on the sorted member lists.
bool canonical_less(const PtSet& a, const PtSet& b) noexcept;

struct PtSetHash {
  std::size_t operator()(const PtSet& s) const noexcept { return s.hash(); }
};

}  // namespace powerspace
