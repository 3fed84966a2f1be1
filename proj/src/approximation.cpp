#include "powerspace/approximation.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "powerspace/errors.hpp"

namespace powerspace {

std::size_t ApproxRelation::open_index(const PtSet& U) const {
  const auto it = std::find(opens.begin(), opens.end(), U);
  if (it == opens.end()) throw Error(ErrorCode::PreconditionViolated, space->set_label(U) + " is not open");
  return static_cast<std::size_t>(it - opens.begin());
}

ApproxRelation canonical_approx_relation(SpaceRef X) {
  if (X->size() == 0) throw Error(ErrorCode::EmptySpace, "approximation relation on the empty space");
  ApproxRelation r{X, X->opens(), {}};
  const std::size_t m = r.opens.size();
  r.rel.assign(m, std::vector<bool>(m, false));
  for (std::size_t u = 0; u < m; ++u) {
    bool principal = false;
    for (std::size_t x = 0; x < X->size() && !principal; ++x) principal = X->up(x) == r.opens[u];
    if (!principal) continue;
    for (std::size_t v = 0; v < m; ++v)
      if (r.opens[u].subset_of(r.opens[v])) r.rel[u][v] = true;
  }
  return r;
}

ApproxRelation approx_relation_from_pairs(SpaceRef X, const std::vector<std::pair<PtSet, PtSet>>& pairs) {
  ApproxRelation r{X, X->opens(), {}};
  r.rel.assign(r.opens.size(), std::vector<bool>(r.opens.size(), false));
  for (const auto& [U, V] : pairs) r.rel[r.open_index(U)][r.open_index(V)] = true;
  return r;
}

std::optional<std::size_t> basis_point(const FiniteSpace& X, const std::vector<PtSet>& family) {
  std::optional<std::size_t> found;
  for (std::size_t x = 0; x < X.size(); ++x) {
    bool in_all = true;
    bool has_minimal = false;
    for (const auto& O : family) {
      in_all = in_all && O.test(x);
      has_minimal = has_minimal || O == X.up(x);
    }
    if (in_all && has_minimal) {
      if (found) return std::nullopt;
      found = x;
    }
  }
  return found;
}

namespace {

// Elementary cycles of the descent graph u -> v (v ≺ u), each listed once
// from its smallest vertex.
template <class F>
void for_each_cycle(const ApproxRelation& r, F&& visit) {
  const std::size_t m = r.opens.size();
  std::vector<std::size_t> path;
  std::vector<bool> on_path(m, false);
  std::size_t found = 0;
  auto dfs = [&](auto&& self, std::size_t start, std::size_t u) -> bool {
    for (std::size_t v = start; v < m; ++v) {
      if (!r.rel[v][u]) continue;
      if (v == start) {
        if (++found > 1000000) throw Error(ErrorCode::LimitExceeded, "too many approximation cycles");
        if (!visit(path)) return false;
      } else if (!on_path[v]) {
        on_path[v] = true;
        path.push_back(v);
        if (!self(self, start, v)) return false;
        path.pop_back();
        on_path[v] = false;
      }
    }
    return true;
  };
  for (std::size_t s = 0; s < m; ++s) {
    path.assign(1, s);
    on_path.assign(m, false);
    on_path[s] = true;
    if (!dfs(dfs, s, s)) return;
  }
}

}  // namespace

Verdict validate_approx_relation(const ApproxRelation& r) {
  const FiniteSpace& X = *r.space;
  const auto& O = r.opens;
  const std::size_t m = O.size();
  auto label = [&](std::size_t u) { return X.set_json(O[u]); };
  std::size_t n = 0;

  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      ++n;
      if (r.rel[u][v] && !O[u].subset_of(O[v]))
        return Verdict::fail("approximation relation", json{{"axiom", 1}, {"U", label(u)}, {"V", label(v)}}, n);
    }

  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      if (!r.rel[u][v]) continue;
      for (std::size_t w = 0; w < m; ++w) {
        ++n;
        if (O[v].subset_of(O[w]) && !r.rel[u][w])
          return Verdict::fail("approximation relation",
                               json{{"axiom", 2}, {"U", label(u)}, {"V", label(v)}, {"W", label(w)}}, n);
      }
    }

  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t x : O[u].indices()) {
      ++n;
      bool ok = false;
      for (std::size_t o = 0; o < m && !ok; ++o) ok = r.rel[o][u] && O[o].test(x);
      if (!ok)
        return Verdict::fail("approximation relation", json{{"axiom", 3}, {"U", label(u)}, {"x", X.name(x)}}, n);
    }
  }

  std::optional<json> bad;
  for_each_cycle(r, [&](const std::vector<std::size_t>& cycle) {
    ++n;
    std::vector<PtSet> family;
    for (auto c : cycle) family.push_back(O[c]);
    if (basis_point(X, family)) return true;
    json members = json::array();
    for (auto c : cycle) members.push_back(label(c));
    bad = json{{"axiom", 4}, {"cycle", members}};
    return false;
  });
  if (bad) return Verdict::fail("approximation relation", *bad, n);
  return Verdict::pass("approximation relation", n);
}

// ---------------------------------------------------------------------------

ApproxScheme::ApproxScheme(ApproxRelation relation, std::vector<State> states, std::size_t root)
    : relation_(std::move(relation)), states_(std::move(states)), root_(root) {
  const std::size_t n = states_.size();
  if (root_ >= n) throw Error(ErrorCode::PreconditionViolated, "scheme root out of range");
  for (const auto& s : states_) {
    if (s.open >= relation_.opens.size()) throw Error(ErrorCode::PreconditionViolated, "scheme open out of range");
    std::vector<std::size_t> labels;
    for (auto [label, t] : s.children) {
      if (t >= n) throw Error(ErrorCode::PreconditionViolated, "scheme edge out of range");
      labels.push_back(label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw Error(ErrorCode::PreconditionViolated, "scheme node with repeated child label");
  }
  // Every proper descendant, not just children: s ⊏ t implies f(t) ≺ f(s).
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue;
    for (auto [label, t] : states_[s].children) queue.push_back(t);
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop_front();
      if (seen[t]) continue;
      seen[t] = true;
      if (!relation_.precedes(states_[t].open, states_[s].open))
        throw Error(ErrorCode::PreconditionViolated, "scheme descendant open is not below its ancestor");
      for (auto [label, c] : states_[t].children) queue.push_back(c);
    }
  }
}

std::vector<std::vector<std::size_t>> ApproxScheme::unfold(std::size_t depth) const {
  std::vector<std::vector<std::size_t>> nodes;
  std::deque<std::pair<std::vector<std::size_t>, std::size_t>> queue{{{}, root_}};
  while (!queue.empty()) {
    auto [seq, s] = std::move(queue.front());
    queue.pop_front();
    nodes.push_back(seq);
    if (seq.size() == depth) continue;
    for (auto [label, t] : states_[s].children) {
      auto next = seq;
      next.push_back(label);
      queue.emplace_back(std::move(next), t);
    }
  }
  return nodes;
}

json ApproxScheme::to_json(std::size_t depth) const {
  json nodes = json::array();
  for (const auto& seq : unfold(depth)) nodes.push_back(seq);
  json states = json::array();
  for (const auto& s : states_) {
    json kids = json::array();
    for (auto [label, t] : s.children) kids.push_back({label, t});
    states.push_back({{"open", relation_.space->set_json(relation_.opens[s.open])}, {"children", kids}});
  }
  return json{{"root", root_}, {"states", states}, {"tree", nodes}};
}

std::size_t scheme_limit(const ApproxScheme& s, const PathDescriptor& path) {
  if (path.cycle.empty()) throw Error(ErrorCode::PreconditionViolated, "path needs a non-empty cycle");
  const auto& states = s.states();
  auto step = [&](std::size_t from, std::size_t label) {
    for (auto [l, t] : states[from].children)
      if (l == label) return t;
    throw Error(ErrorCode::PreconditionViolated, "path leaves the tree at label " + std::to_string(label));
  };

  std::vector<PtSet> family;
  std::size_t cur = s.root();
  family.push_back(s.relation().opens[states[cur].open]);
  for (auto label : path.stem) {
    cur = step(cur, label);
    family.push_back(s.relation().opens[states[cur].open]);
  }
  // Walk the cycle until (state, position) repeats; from then on the path
  // only revisits opens already collected.
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (std::size_t pos = 0;; pos = (pos + 1) % path.cycle.size()) {
    if (seen[{cur, pos}]) break;
    seen[{cur, pos}] = true;
    cur = step(cur, path.cycle[pos]);
    family.push_back(s.relation().opens[states[cur].open]);
  }
  if (auto x = basis_point(*s.relation().space, family)) return *x;
  throw Error(ErrorCode::NoUniquePoint, "path opens are not a neighbourhood basis of a unique point");
}

// ---------------------------------------------------------------------------

namespace {

using Level = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

std::vector<std::size_t> lex_least_cover(const ApproxRelation& r, const std::vector<std::size_t>& candidates,
                                         const PtSet& K) {
  const std::size_t c = candidates.size();
  // suffix[i] = union of candidates[i..]
  std::vector<PtSet> suffix(c + 1, PtSet(K.universe()));
  for (std::size_t i = c; i-- > 0;) suffix[i] = suffix[i + 1] | r.opens[candidates[i]];
  if (!K.subset_of(suffix[0])) throw Error(ErrorCode::PreconditionViolated, "refinement does not cover K");
  std::vector<std::size_t> chosen;
  PtSet covered(K.universe());
  std::size_t pos = 0;
  while (!K.subset_of(covered)) {
    for (std::size_t i = pos; i < c; ++i) {
      const PtSet with = covered | r.opens[candidates[i]];
      if (K.subset_of(with | suffix[i + 1])) {
        chosen.push_back(candidates[i]);
        covered = with;
        pos = i + 1;
        break;
      }
    }
  }
  return chosen;
}

std::vector<std::size_t> refine(const ApproxRelation& r, const std::vector<std::size_t>& opens,
                                const std::vector<std::size_t>& pool) {
  std::vector<std::size_t> out;
  for (auto v : pool) {
    bool below = false;
    for (auto u : opens) below = below || r.precedes(v, u);
    if (below) out.push_back(v);
  }
  return out;
}

struct Automaton {
  std::vector<ApproxScheme::State> states;
  std::size_t root = 0;
};

Automaton side_automaton(const ApproxRelation& r, const std::vector<WilkerLevel>& levels, std::size_t period_start,
                         bool f_side) {
  const std::size_t L = levels.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  Automaton a;
  for (std::size_t k = 0; k < L; ++k) {
    for (auto u : f_side ? levels[k].f_opens : levels[k].g_opens) {
      id[{k, u}] = a.states.size();
      a.states.push_back({u, {}});
    }
  }
  for (std::size_t k = 0; k < L; ++k) {
    const std::size_t next = k + 1 < L ? k + 1 : period_start;
    for (auto u : f_side ? levels[k].f_opens : levels[k].g_opens) {
      auto& kids = a.states[id.at({k, u})].children;
      for (auto v : levels[k].cover)
        if (r.precedes(v, u)) kids.emplace_back(v, id.at({next, v}));
    }
  }
  return a;
}

// Limits of all infinite paths from the root: each ends in a cyclic strongly
// connected part whose states all carry one open O*, and the limit is the x
// with ↑x = O*.
PtSet path_limits(const ApproxRelation& r, const Automaton& a) {
  const std::size_t n = a.states.size();
  const FiniteSpace& X = *r.space;
  auto reach_from = [&](std::size_t s) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> q;
    for (auto [l, t] : a.states[s].children) q.push_back(t);
    while (!q.empty()) {
      auto t = q.front();
      q.pop_front();
      if (seen[t]) continue;
      seen[t] = true;
      for (auto [l, c] : a.states[t].children) q.push_back(c);
    }
    return seen;
  };
  PtSet points(X.size());
  if (n == 0) return points;
  auto reachable = reach_from(a.root);
  reachable[a.root] = true;
  for (std::size_t s = 0; s < n; ++s) {
    if (!reachable[s] || !reach_from(s)[s]) continue;
    const auto x = basis_point(X, {r.opens[a.states[s].open]});
    if (!x) throw Error(ErrorCode::NoUniquePoint, "cyclic tree node without a limit point");
    points.set(*x);
  }
  return X.saturation(points);
}

}  // namespace

WilkerResult wilker_decompose(const ApproxRelation& r, const PtSet& K, const PtSet& U1, const PtSet& U2) {
  const FiniteSpace& X = *r.space;
  if (K.universe() != X.size() || !X.is_open(K)) throw Error(ErrorCode::PreconditionViolated, "K must be saturated");
  const std::size_t u1 = r.open_index(U1);
  const std::size_t u2 = r.open_index(U2);
  if (!K.subset_of(U1 | U2)) throw Error(ErrorCode::PreconditionViolated, "K is not inside U1 ∪ U2");
  if (const auto v = validate_approx_relation(r); !v.holds)
    throw Error(ErrorCode::PreconditionViolated, "invalid approximation relation: " + v.witness->dump());

  std::vector<std::size_t> all(r.opens.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<WilkerLevel> levels;
  std::map<Level, std::size_t> seen;
  Level cur{{u1}, {u2}};
  std::size_t period_start = 0;
  for (;;) {
    if (auto it = seen.find(cur); it != seen.end()) {
      period_start = it->second;
      break;
    }
    seen.emplace(cur, levels.size());
    WilkerLevel lvl{cur.first, cur.second, {}};
    // Candidates ≺ some assigned open on either side, in opens-list order.
    std::vector<std::size_t> pool = refine(r, cur.first, all);
    for (auto v : refine(r, cur.second, all)) pool.push_back(v);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    lvl.cover = lex_least_cover(r, pool, K);
    cur = Level{refine(r, cur.first, lvl.cover), refine(r, cur.second, lvl.cover)};
    levels.push_back(std::move(lvl));
  }

  auto fa = side_automaton(r, levels, period_start, true);
  auto ga = side_automaton(r, levels, period_start, false);
  const PtSet K1 = path_limits(r, fa);
  const PtSet K2 = path_limits(r, ga);
  WilkerResult out{K1,
                   K2,
                   std::move(levels),
                   period_start,
                   0,
                   ApproxScheme(r, std::move(fa.states), fa.root),
                   ApproxScheme(r, std::move(ga.states), ga.root)};
  out.period = out.levels.size() - period_start;
  return out;
}

json WilkerResult::trace() const {
  const auto& r = f_scheme.relation();
  auto names = [&](const std::vector<std::size_t>& idx) {
    json a = json::array();
    for (auto i : idx) a.push_back(r.space->set_json(r.opens[i]));
    return a;
  };
  json lv = json::array();
  for (const auto& l : levels) lv.push_back({{"F", names(l.f_opens)}, {"G", names(l.g_opens)}, {"cover", names(l.cover)}});
  return json{{"levels", lv},
              {"period_start", period_start},
              {"period", period},
              {"K1", r.space->set_json(K1)},
              {"K2", r.space->set_json(K2)}};
}

}  // namespace powerspace
