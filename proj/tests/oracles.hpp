#pragma once

// Brute-force reference computations on plain bitmasks. Nothing here calls
// the library except to read a space's order, so the tests compare two
// independent implementations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "powerspace/finite_space.hpp"

namespace oracle {

using Mask = std::uint64_t;

// Relation matrix le[i][j] meaning i <= j.
struct Order {
  int n = 0;
  std::vector<std::vector<bool>> le;
};

inline Order order_of(const powerspace::FiniteSpace& X) {
  Order o;
  o.n = static_cast<int>(X.size());
  o.le.assign(o.n, std::vector<bool>(o.n, false));
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j) o.le[i][j] = X.leq(i, j);
  return o;
}

inline bool is_upper(const Order& o, Mask m) {
  for (int i = 0; i < o.n; ++i)
    if ((m >> i) & 1)
      for (int j = 0; j < o.n; ++j)
        if (o.le[i][j] && !((m >> j) & 1)) return false;
  return true;
}

inline bool is_lower(const Order& o, Mask m) {
  for (int i = 0; i < o.n; ++i)
    if ((m >> i) & 1)
      for (int j = 0; j < o.n; ++j)
        if (o.le[j][i] && !((m >> j) & 1)) return false;
  return true;
}

// Every subset tested; fine up to about 22 elements.
inline std::vector<Mask> upper_sets(const Order& o) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << o.n); ++m)
    if (is_upper(o, m)) out.push_back(m);
  return out;
}

inline std::vector<Mask> lower_sets(const Order& o) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << o.n); ++m)
    if (is_lower(o, m)) out.push_back(m);
  return out;
}

// The poset (family, ⊆).
inline Order inclusion_order(const std::vector<Mask>& family) {
  Order o;
  o.n = static_cast<int>(family.size());
  o.le.assign(o.n, std::vector<bool>(o.n, false));
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.n; ++j) o.le[i][j] = (family[i] & ~family[j]) == 0;
  return o;
}

inline Order reversed(Order o) {
  for (int i = 0; i < o.n; ++i)
    for (int j = i + 1; j < o.n; ++j) {
      bool t = o.le[i][j];
      o.le[i][j] = o.le[j][i];
      o.le[j][i] = t;
    }
  return o;
}

// Sizes of the three doubly iterated powerspaces, straight from definitions:
// K(X) is the upper sets under reverse inclusion, A(·) takes lower sets of the
// specialization order, K(·) upper sets, O(·) upper sets.
inline std::size_t count_AK(const Order& x) { return lower_sets(reversed(inclusion_order(upper_sets(x)))).size(); }
inline std::size_t count_KA(const Order& x) { return upper_sets(inclusion_order(lower_sets(x))).size(); }
inline std::size_t count_OO(const Order& x) { return upper_sets(inclusion_order(upper_sets(x))).size(); }

// Lenses: closed A and upper K with Cl(A∩K) = A and ↑(A∩K) = K.
inline std::size_t count_lenses(const Order& o) {
  auto down = [&](Mask m) {
    Mask r = 0;
    for (int i = 0; i < o.n; ++i)
      for (int j = 0; j < o.n; ++j)
        if (((m >> j) & 1) && o.le[i][j]) r |= Mask{1} << i;
    return r;
  };
  auto up = [&](Mask m) {
    Mask r = 0;
    for (int i = 0; i < o.n; ++i)
      for (int j = 0; j < o.n; ++j)
        if (((m >> j) & 1) && o.le[j][i]) r |= Mask{1} << i;
    return r;
  };
  std::size_t c = 0;
  for (Mask A : lower_sets(o))
    for (Mask K : upper_sets(o))
      if (down(A & K) == A && up(A & K) == K) ++c;
  return c;
}

// Partial orders on n labelled points, as le-matrices, by testing every
// relation containing the diagonal.
inline std::vector<Order> labeled_posets(int n) {
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::vector<Order> out;
  for (Mask m = 0; m < (Mask{1} << off.size()); ++m) {
    Order o;
    o.n = n;
    o.le.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) o.le[i][i] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if ((m >> k) & 1) o.le[off[k].first][off[k].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && o.le[i][j] && o.le[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k)
          if (o.le[i][j] && o.le[j][k] && !o.le[i][k]) ok = false;
      }
    if (ok) out.push_back(std::move(o));
  }
  return out;
}

// Isomorphism-invariant code: the lexicographically least relation matrix
// over all relabelings.
inline std::vector<bool> canonical_code(const Order& o) {
  std::vector<int> p(o.n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int i = 0; i < o.n; ++i)
      for (int j = 0; j < o.n; ++j) code.push_back(o.le[p[i]][p[j]]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::size_t unlabeled_posets(int n) {
  std::set<std::vector<bool>> codes;
  for (const auto& o : labeled_posets(n)) codes.insert(canonical_code(o));
  return codes.size();
}

}  // namespace oracle
