#include "powerspace/finite_space.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <unordered_set>

#include "powerspace/errors.hpp"
#include "powerspace/kernels.hpp"

namespace powerspace {

namespace {

void check_names(const std::vector<std::string>& names) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidInput, "duplicate point name '" + n + "'");
}

void check_universe(const PtSet& s, std::size_t n) {
  if (s.universe() != n) throw Error(ErrorCode::InvalidInput, "set over a different universe");
}

}  // namespace

void FiniteSpace::finish() {
  const std::size_t n = up_.size();
  down_.assign(n, PtSet(n));
  for (std::size_t x = 0; x < n; ++x) up_[x].for_each([&](std::size_t y) { down_[y].set(x); });

  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(n);
  for (const auto& u : up_)
    for (auto w : u.words()) mix(w);
  fingerprint_ = h;
}

FiniteSpace FiniteSpace::from_up_sets(std::vector<std::string> names, std::vector<PtSet> up) {
  const std::size_t n = up.size();
  if (names.size() != n) throw Error(ErrorCode::InvalidInput, "name count does not match point count");
  check_names(names);
  for (std::size_t x = 0; x < n; ++x) {
    check_universe(up[x], n);
    if (!up[x].test(x)) throw Error(ErrorCode::InvalidInput, "neighbourhood of " + names[x] + " misses the point");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : up[x].indices()) {
      if (!up[y].subset_of(up[x])) throw Error(ErrorCode::InvalidInput, "neighbourhoods are not transitive");
      if (y != x && up[y].test(x)) {
        throw Error(ErrorCode::NotT0, "points " + names[x] + " and " + names[y] + " have the same neighbourhoods");
      }
    }
  }
  FiniteSpace s;
  s.names_ = std::move(names);
  s.up_ = std::move(up);
  s.finish();
  return s;
}

FiniteSpace FiniteSpace::from_subbasis(std::vector<std::string> names, const std::vector<PtSet>& subbasis,
                                       bool parallel) {
  const std::size_t n = names.size();
  for (const auto& s : subbasis) check_universe(s, n);
  auto up = parallel ? generated_up_sets_parallel(n, subbasis) : generated_up_sets_serial(n, subbasis);
  return from_up_sets(std::move(names), std::move(up));
}

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> names, const std::vector<PtSet>& opens) {
  // Minimal neighbourhoods of the generated topology only depend on which
  // given sets contain a point, so closing under unions/intersections first
  // would not change them.
  return from_subbasis(std::move(names), opens);
}

FiniteSpace FiniteSpace::from_poset(std::vector<std::string> names,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = names.size();
  std::vector<PtSet> up(n, PtSet(n));
  for (std::size_t x = 0; x < n; ++x) up[x].set(x);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw Error(ErrorCode::InvalidInput, "cover refers to an unknown point");
    up[a].set(b);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (up[x].test(y) && up[y].test(x))
        throw Error(ErrorCode::CycleDetected, "order has a cycle through " + names[x] + " and " + names[y]);
  return from_up_sets(std::move(names), std::move(up));
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

PtSet FiniteSpace::singleton(std::size_t x) const {
  PtSet s(size());
  s.set(x);
  return s;
}

PtSet FiniteSpace::closure(const PtSet& s) const {
  PtSet out(size());
  s.for_each([&](std::size_t x) { out |= down_[x]; });
  return out;
}

PtSet FiniteSpace::saturation(const PtSet& s) const {
  PtSet out(size());
  s.for_each([&](std::size_t x) { out |= up_[x]; });
  return out;
}

PtSet FiniteSpace::interior(const PtSet& s) const {
  PtSet out(size());
  s.for_each([&](std::size_t x) {
    if (up_[x].subset_of(s)) out.set(x);
  });
  return out;
}

bool FiniteSpace::is_open(const PtSet& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && up_[x].subset_of(s); });
  return ok;
}

bool FiniteSpace::is_closed(const PtSet& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && down_[x].subset_of(s); });
  return ok;
}

std::vector<PtSet> FiniteSpace::opens(std::size_t cap) const { return upper_sets_serial(*this, cap); }

std::vector<PtSet> FiniteSpace::closed_sets(std::size_t cap) const {
  auto sets = upper_sets_serial(*this, cap);
  for (auto& s : sets) s = s.complement();
  std::sort(sets.begin(), sets.end(), canonical_less);
  return sets;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteSpace::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : up_[a].indices()) {
      if (b == a) continue;
      bool covered = true;
      for (std::size_t c : up_[a].indices()) {
        if (c != a && c != b && up_[c].test(b)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string FiniteSpace::set_label(const PtSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t x) {
    if (!first) out += ",";
    out += names_[x];
    first = false;
  });
  return out + "}";
}

json FiniteSpace::set_json(const PtSet& s) const {
  json arr = json::array();
  s.for_each([&](std::size_t x) { arr.push_back(names_[x]); });
  return arr;
}

// ---------------------------------------------------------------------------
// Maps

PtSet SpaceMap::image(const PtSet& s) const {
  PtSet out(codomain->size());
  s.for_each([&](std::size_t x) { out.set(table[x]); });
  return out;
}

PtSet SpaceMap::preimage(const PtSet& s) const {
  PtSet out(domain->size());
  for (std::size_t x = 0; x < table.size(); ++x)
    if (s.test(table[x])) out.set(x);
  return out;
}

bool SpaceMap::operator==(const SpaceMap& other) const {
  return domain->fingerprint() == other.domain->fingerprint() &&
         codomain->fingerprint() == other.codomain->fingerprint() && table == other.table;
}

SpaceMap make_map(SpaceRef domain, SpaceRef codomain, std::vector<std::size_t> table) {
  if (!domain || !codomain) throw Error(ErrorCode::InvalidInput, "map without domain or codomain");
  if (table.size() != domain->size()) throw Error(ErrorCode::InvalidInput, "map table does not cover the domain");
  for (auto y : table)
    if (y >= codomain->size()) throw Error(ErrorCode::InvalidInput, "map value outside the codomain");
  return SpaceMap{std::move(domain), std::move(codomain), std::move(table)};
}

SpaceMap identity_map(SpaceRef space) {
  std::vector<std::size_t> t(space->size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return SpaceMap{space, space, std::move(t)};
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (f.codomain->size() != g.domain->size() || f.codomain->fingerprint() != g.domain->fingerprint())
    throw Error(ErrorCode::ShapeMismatch, "composition of maps that do not meet");
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g.table[f.table[x]];
  return SpaceMap{f.domain, g.codomain, std::move(t)};
}

Verdict check_continuous(const SpaceMap& f) {
  const auto& Y = *f.codomain;
  const auto& X = *f.domain;
  for (std::size_t y = 0; y < Y.size(); ++y) {
    const PtSet pre = f.preimage(Y.up(y));
    if (!X.is_open(pre)) {
      return Verdict::fail("continuity", json{{"open", Y.set_json(Y.up(y))}, {"preimage", X.set_json(pre)}}, y + 1);
    }
  }
  return Verdict::pass("continuity", Y.size());
}

Verdict check_continuous_exhaustive(const SpaceMap& f) {
  const auto& Y = *f.codomain;
  const auto& X = *f.domain;
  const auto opens = Y.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const PtSet pre = f.preimage(opens[i]);
    if (!X.is_open(pre))
      return Verdict::fail("continuity", json{{"open", Y.set_json(opens[i])}, {"preimage", X.set_json(pre)}}, i + 1);
  }
  return Verdict::pass("continuity", opens.size());
}

bool is_monotone(const SpaceMap& f) {
  for (std::size_t x = 0; x < f.domain->size(); ++x)
    for (std::size_t y : f.domain->up(x).indices())
      if (!f.codomain->leq(f.table[x], f.table[y])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr std::size_t kMaxEnum = 6;
using DownMasks = std::array<std::uint8_t, kMaxEnum>;  // down[i] includes i

void grow(std::size_t n, std::size_t k, DownMasks& down, std::vector<DownMasks>& out) {
  if (k == n) {
    out.push_back(down);
    return;
  }
  // New point k sits above a lower set D of {0..k-1}; each D gives a distinct
  // naturally labelled poset.
  for (unsigned d = 0; d < (1u << k); ++d) {
    bool lower = true;
    for (std::size_t i = 0; i < k && lower; ++i)
      if ((d >> i & 1u) && (down[i] & ~d)) lower = false;
    if (!lower) continue;
    down[k] = static_cast<std::uint8_t>(d | (1u << k));
    grow(n, k + 1, down, out);
  }
}

// Bits for ordered pairs (i, j), i != j, most significant first.
std::uint64_t relabel_code(std::size_t n, const DownMasks& down, const std::array<std::size_t, kMaxEnum>& perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // new i <= new j  iff  old perm[i] <= old perm[j]
      code = (code << 1) | ((down[perm[j]] >> perm[i]) & 1u);
    }
  return code;
}

FiniteSpace decode(std::size_t n, std::uint64_t code) {
  std::vector<PtSet> up(n, PtSet(n));
  std::size_t bit = n * (n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    up[i].set(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      --bit;
      if ((code >> bit) & 1u) up[i].set(j);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return FiniteSpace::from_up_sets(std::move(names), std::move(up));
}

}  // namespace

std::vector<FiniteSpace> enumerate_spaces(std::size_t n, bool up_to_iso, bool include_empty, std::size_t limit) {
  if (n > limit || n > kMaxEnum)
    throw Error(ErrorCode::LimitExceeded, "enumeration limited to " + std::to_string(std::min(limit, kMaxEnum)) +
                                              " points");
  std::vector<FiniteSpace> out;
  if (include_empty) out.push_back(empty_space());
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<DownMasks> natural;
    DownMasks down{};
    grow(size, 0, down, natural);

    std::set<std::uint64_t> codes;
    std::array<std::size_t, kMaxEnum> perm{};
    for (const auto& d : natural) {
      std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(size), std::size_t{0});
      std::uint64_t best = ~std::uint64_t{0};
      do {
        const auto c = relabel_code(size, d, perm);
        if (up_to_iso)
          best = std::min(best, c);
        else
          codes.insert(c);
      } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(size)));
      if (up_to_iso) codes.insert(best);
    }
    for (auto c : codes) out.push_back(decode(size, c));
  }
  return out;
}

FiniteSpace sierpinski() { return FiniteSpace::from_poset({"bot", "top"}, {{0, 1}}); }

FiniteSpace discrete(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  return FiniteSpace::from_poset(std::move(names), {});
}

FiniteSpace chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return FiniteSpace::from_poset(std::move(names), covers);
}

FiniteSpace empty_space() { return FiniteSpace::from_up_sets({}, {}); }

}  // namespace powerspace
