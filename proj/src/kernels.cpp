#include "powerspace/kernels.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

#include "powerspace/errors.hpp"
#include "powerspace/finite_space.hpp"

namespace powerspace {

namespace {

// Partial decision: points forced in (an upper set so far) and forced out (a
// lower set so far). Including x forces up(x), excluding x forces down(x); the
// two can never collide, so every branch ends in a distinct upper set.
struct Frontier {
  PtSet in;
  PtSet out;
  std::size_t next = 0;
};

std::optional<std::size_t> first_undecided(const Frontier& f, std::size_t n) {
  for (std::size_t i = f.next; i < n; ++i)
    if (!f.in.test(i) && !f.out.test(i)) return i;
  return std::nullopt;
}

class Collector {
 public:
  Collector(std::size_t cap, std::atomic<std::size_t>& produced) : cap_(cap), produced_(produced) {}

  bool emit(std::vector<PtSet>& sink, const PtSet& s) {
    if (produced_.fetch_add(1, std::memory_order_relaxed) >= cap_) return false;
    sink.push_back(s);
    return true;
  }

 private:
  std::size_t cap_;
  std::atomic<std::size_t>& produced_;
};

bool descend(const FiniteSpace& space, Frontier f, Collector& out, std::vector<PtSet>& sink) {
  const auto pick = first_undecided(f, space.size());
  if (!pick) return out.emit(sink, f.in);
  const std::size_t x = *pick;
  f.next = x + 1;
  Frontier without = f;
  without.out |= space.down(x);
  if (!descend(space, std::move(without), out, sink)) return false;
  f.in |= space.up(x);
  return descend(space, std::move(f), out, sink);
}

void sort_canonical(std::vector<PtSet>& sets) { std::sort(sets.begin(), sets.end(), canonical_less); }

[[noreturn]] void too_large(std::size_t cap) {
  throw Error(ErrorCode::PowerspaceTooLarge, "more than " + std::to_string(cap) + " upper sets");
}

}  // namespace

std::vector<PtSet> upper_sets_serial(const FiniteSpace& space, std::size_t cap) {
  std::atomic<std::size_t> produced{0};
  Collector out(cap, produced);
  std::vector<PtSet> sets;
  Frontier root{space.empty_set(), space.empty_set(), 0};
  if (!descend(space, root, out, sets)) too_large(cap);
  sort_canonical(sets);
  return sets;
}

std::vector<PtSet> upper_sets_parallel(const FiniteSpace& space, std::size_t cap, int threads) {
  if (threads <= 0) threads = omp_get_max_threads();
  const std::size_t want = static_cast<std::size_t>(threads) * 16;

  // Breadth-first split until there are enough independent subtrees; a
  // frontier that is already complete stays as a leaf task.
  std::vector<Frontier> tasks{Frontier{space.empty_set(), space.empty_set(), 0}};
  for (std::size_t round = 0; round < 24 && tasks.size() < want; ++round) {
    std::vector<Frontier> next;
    bool split_any = false;
    for (auto& f : tasks) {
      const auto pick = first_undecided(f, space.size());
      if (!pick) {
        next.push_back(std::move(f));
        continue;
      }
      split_any = true;
      Frontier without = f;
      without.next = *pick + 1;
      without.out |= space.down(*pick);
      f.next = *pick + 1;
      f.in |= space.up(*pick);
      next.push_back(std::move(without));
      next.push_back(std::move(f));
    }
    tasks = std::move(next);
    if (!split_any) break;
  }

  std::atomic<std::size_t> produced{0};
  std::atomic<bool> overflow{false};
  std::vector<std::vector<PtSet>> parts(tasks.size());
  const auto count = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    if (overflow.load(std::memory_order_relaxed)) continue;
    Collector out(cap, produced);
    if (!descend(space, tasks[t], out, parts[t])) overflow.store(true);
  }
  if (overflow.load()) too_large(cap);

  std::vector<PtSet> sets;
  sets.reserve(produced.load());
  for (auto& p : parts)
    for (auto& s : p) sets.push_back(std::move(s));
  sort_canonical(sets);
  return sets;
}

std::vector<PtSet> generated_up_sets_serial(std::size_t n, const std::vector<PtSet>& subbasis) {
  std::vector<PtSet> up(n, PtSet::full(n));
  for (const auto& s : subbasis) s.for_each([&](std::size_t p) { up[p] &= s; });
  return up;
}

std::vector<PtSet> generated_up_sets_parallel(std::size_t n, const std::vector<PtSet>& subbasis, int threads) {
  if (threads <= 0) threads = omp_get_max_threads();
  std::vector<PtSet> up(n, PtSet::full(n));
  const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    for (const auto& s : subbasis)
      if (s.test(static_cast<std::size_t>(p))) up[p] &= s;
  }
  return up;
}

}  // namespace powerspace
