#include "powerspace/symbolic.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace powerspace {

CofinSet CofinSet::finite(std::set<std::uint64_t> members, bool top) {
  CofinSet s;
  s.mode_ = Mode::Finite;
  s.support_ = std::move(members);
  s.top_ = top;
  return s;
}

CofinSet CofinSet::cofinite(std::set<std::uint64_t> missing, bool top) {
  CofinSet s;
  s.mode_ = Mode::Cofinite;
  s.support_ = std::move(missing);
  s.top_ = top;
  return s;
}

std::optional<std::size_t> CofinSet::size() const {
  if (mode_ == Mode::Cofinite) return std::nullopt;
  return support_.size() + (top_ ? 1 : 0);
}

std::optional<std::uint64_t> CofinSet::max_support() const {
  if (support_.empty()) return std::nullopt;
  return *support_.rbegin();
}

CofinSet CofinSet::complement() const {
  CofinSet s = *this;
  s.mode_ = mode_ == Mode::Finite ? Mode::Cofinite : Mode::Finite;
  s.top_ = !top_;
  return s;
}

namespace {

std::set<std::uint64_t> set_union(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::set<std::uint64_t> set_inter(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<std::uint64_t> set_minus(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

CofinSet CofinSet::operator|(const CofinSet& o) const {
  const bool top = top_ || o.top_;
  if (mode_ == Mode::Finite && o.mode_ == Mode::Finite) return finite(set_union(support_, o.support_), top);
  if (mode_ == Mode::Cofinite && o.mode_ == Mode::Cofinite) return cofinite(set_inter(support_, o.support_), top);
  const CofinSet& fin = mode_ == Mode::Finite ? *this : o;
  const CofinSet& cof = mode_ == Mode::Finite ? o : *this;
  return cofinite(set_minus(cof.support_, fin.support_), top);
}

CofinSet CofinSet::operator&(const CofinSet& o) const {
  const bool top = top_ && o.top_;
  if (mode_ == Mode::Finite && o.mode_ == Mode::Finite) return finite(set_inter(support_, o.support_), top);
  if (mode_ == Mode::Cofinite && o.mode_ == Mode::Cofinite) return cofinite(set_union(support_, o.support_), top);
  const CofinSet& fin = mode_ == Mode::Finite ? *this : o;
  const CofinSet& cof = mode_ == Mode::Finite ? o : *this;
  return finite(set_minus(fin.support_, cof.support_), top);
}

std::string CofinSet::to_string() const {
  std::string out = mode_ == Mode::Finite ? "{" : "ω∖{";
  bool first = true;
  for (auto n : support_) {
    if (!first) out += ",";
    out += std::to_string(n);
    first = false;
  }
  out += "}";
  if (top_) out += mode_ == Mode::Finite ? "+∞" : "∪{∞}";
  return out;
}

Truncated truncate(const CofinSet& s) {
  Truncated t;
  for (std::uint64_t i = 0; i < 32; ++i) t[i] = s.contains(i);
  t[32] = s.includes_top();
  return t;
}

bool is_open(SymbolicSpace space, const CofinSet& s) {
  if (space == SymbolicSpace::OmegaDiscrete) return !s.includes_top();
  return s.is_empty() || (!s.is_finite_on_omega() && s.includes_top());
}

bool is_closed(SymbolicSpace space, const CofinSet& s) {
  if (space == SymbolicSpace::OmegaDiscrete) return !s.includes_top();
  return s == CofinSet::everything() || (s.is_finite_on_omega() && !s.includes_top());
}

CofinSet omega_top_closure(const CofinSet& s) {
  if (s.is_finite_on_omega() && !s.includes_top()) return s;
  return CofinSet::everything();
}

namespace {

using Gen = std::mt19937_64;

// Random finite subset of {0..bound}.
CofinSet random_finite(Gen& g, std::uint64_t bound, std::size_t max_size, bool allow_empty) {
  std::uniform_int_distribution<std::size_t> size_d(allow_empty ? 0 : 1, max_size);
  std::uniform_int_distribution<std::uint64_t> el(0, bound);
  std::set<std::uint64_t> s;
  const std::size_t want = size_d(g);
  while (s.size() < want) s.insert(el(g));
  return CofinSet::finite(std::move(s));
}

CofinSet random_cofin(Gen& g) {
  CofinSet s = random_finite(g, 31, 8, true);
  std::bernoulli_distribution coin(0.5);
  const bool top = coin(g);
  return coin(g) ? CofinSet::finite(s.support(), top) : CofinSet::cofinite(s.support(), top);
}

// First natural avoiding the finite parts of every set.
std::uint64_t fresh(const std::vector<CofinSet>& sets) {
  std::uint64_t n = 0;
  for (const auto& s : sets)
    if (s.is_finite_on_omega())
      if (auto m = s.max_support()) n = std::max(n, *m + 1);
  return n;
}

class Log {
 public:
  explicit Log(std::string check) : v_(Verdict::pass(std::move(check))) {}

  void expect(bool ok, const char* what, json detail = json::object()) {
    ++v_.instances;
    if (!ok && v_.holds) {
      v_.holds = false;
      detail["step"] = what;
      v_.witness = std::move(detail);
    }
  }
  void note(std::string s) { v_.notes.push_back(std::move(s)); }
  Verdict done() { return std::move(v_); }

 private:
  Verdict v_;
};

// Membership in S₂ = {A closed : |A| ≥ 2 or A = X}, for closed A.
bool in_S2(const CofinSet& A) {
  if (A == CofinSet::everything()) return true;
  return A.size().value_or(0) >= 2;
}

}  // namespace

Verdict verify_lower_not_scott(std::uint64_t seed, std::size_t instances) {
  Log log("A(X) lower Vietoris topology is not Scott");
  Gen g(seed);
  const CofinSet X = CofinSet::everything();

  // (a) S₂ is an upper set of A(X): A ⊆ B closed and A ∈ S₂ give B ∈ S₂.
  // Closed sets are X or finite subsets of ω; X ⊆ B forces B = X, and for
  // finite B the size can only grow.
  for (std::size_t i = 0; i < instances; ++i) {
    CofinSet A = random_finite(g, 20, 5, true);
    std::bernoulli_distribution to_top(0.2);
    CofinSet B = to_top(g) ? X : (A | random_finite(g, 20, 3, true));
    log.expect(is_closed(SymbolicSpace::OmegaTop, A) && is_closed(SymbolicSpace::OmegaTop, B), "sample closed");
    log.expect(!A.subset_of(B) || !in_S2(A) || in_S2(B), "S2 upward closed",
               json{{"A", A.to_string()}, {"B", B.to_string()}});
  }
  log.expect(in_S2(X) && !X.subset_of(CofinSet::of({0, 1, 2})), "X only below X");

  // (a) Inaccessible by directed joins. Members outside S₂ are ∅ or
  // singletons. Two distinct singletons have only S₂ upper bounds, since any
  // closed superset of {m,n} has two points, so a directed family outside S₂
  // holds at most one singleton {n} and its join Cl(∪) ⊆ {n} stays outside S₂.
  for (std::size_t i = 0; i < instances; ++i) {
    std::uniform_int_distribution<std::uint64_t> el(0, 30);
    const std::uint64_t m = el(g);
    std::uint64_t n = el(g);
    if (n == m) n = m + 1;
    const CofinSet bound = omega_top_closure(CofinSet::of({m}) | CofinSet::of({n}));
    log.expect(in_S2(bound), "distinct singletons bounded only inside S2", json{{"m", m}, {"n", n}});

    std::vector<CofinSet> family;
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = len(g); k > 0; --k) family.push_back(coin(g) ? CofinSet::of({m}) : CofinSet::empty());
    CofinSet u = CofinSet::empty();
    for (const auto& f : family) u = u | f;
    const CofinSet join = omega_top_closure(u);
    log.expect(!in_S2(join) && join != X, "directed join outside S2", json{{"join", join.to_string()}});
  }
  log.note("directed families outside S2 contain at most one singleton; their join is that singleton or empty");

  // (b) Every basic open ◇(X∖F₁)∩…∩◇(X∖Fₙ) contains X ∈ S₂ and the fresh
  // singleton {max(∪Fᵢ)+1} ∉ S₂.
  auto check_instance = [&](const std::vector<CofinSet>& Fs) {
    const std::uint64_t n = fresh(Fs);
    const CofinSet w = CofinSet::of({n});
    bool in_basic = is_closed(SymbolicSpace::OmegaTop, w);
    bool x_in = true;
    Truncated tw = truncate(w);
    bool oracle = n < 32;
    for (const auto& F : Fs) {
      const CofinSet U = X - F;
      in_basic = in_basic && is_open(SymbolicSpace::OmegaTop, U) && w.intersects(U);
      x_in = x_in && X.intersects(U);
      oracle = oracle && (tw & truncate(U)).any();
    }
    json d{{"witness", w.to_string()}};
    log.expect(in_basic && x_in, "witness in basic open", d);
    log.expect(!in_S2(w), "witness outside S2", d);
    log.expect(oracle && tw.count() == 1, "truncated oracle agrees", d);
    return n;
  };
  log.expect(check_instance({CofinSet::of({0, 1})}) == 2, "F1={0,1} gives {2}");
  for (std::size_t i = 0; i < instances; ++i) {
    std::vector<CofinSet> Fs;
    std::uniform_int_distribution<std::size_t> count(1, 4);
    for (std::size_t k = count(g); k > 0; --k) Fs.push_back(random_finite(g, 25, 4, true));
    check_instance(Fs);
  }
  log.note("witness rule: n = max(F1 ∪ ... ∪ Fn) + 1 lies in every X∖Fi, so {n} is in the basic open but not in S2");
  return log.done();
}

Verdict verify_upper_not_weak(std::uint64_t seed, std::size_t instances) {
  Log log("K(omega) upper Vietoris topology is not weak");
  Gen g(seed);
  const CofinSet none = CofinSet::empty();

  // □∅ = {K compact : K ⊆ ∅} = {∅}, open because ∅ is open.
  log.expect(is_open(SymbolicSpace::OmegaDiscrete, none), "empty set open");
  for (std::size_t i = 0; i < instances; ++i) {
    const CofinSet K = random_finite(g, 30, 4, true);
    log.expect(K.subset_of(none) == K.is_empty(), "box of empty is {empty}", json{{"K", K.to_string()}});
    // ∅ ∈ 𝒰_K = {K' : K ⊄ K'} iff K ≠ ∅.
    log.expect(!K.subset_of(none) == !K.is_empty(), "empty in U_K iff K nonempty", json{{"K", K.to_string()}});
  }

  // Weak subbasics 𝒰_{K₁}∩…∩𝒰_{Kₙ} around ∅ need every Kᵢ ≠ ∅, and then also
  // contain {max(∪Kᵢ)+1} ≠ ∅.
  auto check_instance = [&](const std::vector<CofinSet>& Ks) {
    const std::uint64_t n = fresh(Ks);
    const CofinSet w = CofinSet::of({n});
    bool in = !w.is_empty();
    bool oracle = n < 32;
    for (const auto& K : Ks) {
      in = in && !K.is_empty() && !K.subset_of(w);
      oracle = oracle && (truncate(K) & ~truncate(w)).any();
    }
    json d{{"witness", w.to_string()}};
    log.expect(in, "witness in every U_K and not in box empty", d);
    log.expect(oracle, "truncated oracle agrees", d);
    return n;
  };
  log.expect(check_instance({CofinSet::of({3})}) == 4, "K1={3} gives {4}");
  for (std::size_t i = 0; i < instances; ++i) {
    std::vector<CofinSet> Ks;
    std::uniform_int_distribution<std::size_t> count(1, 4);
    for (std::size_t k = count(g); k > 0; --k) Ks.push_back(random_finite(g, 25, 4, false));
    check_instance(Ks);
  }
  log.note("witness rule: n = max(K1 ∪ ... ∪ Kn) + 1; no Ki is inside {n}");
  return log.done();
}

Verdict verify_AX_not_coconsonant(std::uint64_t seed, std::size_t instances) {
  Log log("A(X) is not co-consonant");
  Gen g(seed);
  const CofinSet X = CofinSet::everything();

  // 𝒦 = ◇X is the non-empty closed sets; it is open as a subbasic set.
  log.expect(is_open(SymbolicSpace::OmegaTop, X), "X open");
  for (std::size_t i = 0; i < instances; ++i) {
    const CofinSet A = random_finite(g, 30, 3, true);
    log.expect(A.intersects(X) == !A.is_empty(), "dia X is the nonempty closed sets", json{{"A", A.to_string()}});
  }
  log.note("compactness of dia X is taken from the image of the compact space X under the unit, not re-derived");

  // For finite F ⊆ 𝒦, {n} with n past every finite member is in 𝒦 ∖ ↑F.
  auto check_instance = [&](const std::vector<CofinSet>& F) {
    const std::uint64_t n = fresh(F);
    const CofinSet w = CofinSet::of({n});
    bool outside = !w.is_empty() && is_closed(SymbolicSpace::OmegaTop, w);
    bool oracle = n < 32;
    for (const auto& A : F) {
      outside = outside && !A.subset_of(w);
      oracle = oracle && (truncate(A) & ~truncate(w)).any();
    }
    json d{{"witness", w.to_string()}};
    log.expect(outside, "witness in dia X but not above F", d);
    log.expect(oracle, "truncated oracle agrees", d);
    return n;
  };
  log.expect(check_instance({CofinSet::of({0}), CofinSet::of({1, 2})}) == 3, "F={{0},{1,2}} gives {3}");
  for (std::uint64_t n = 0; n < 10; ++n) log.expect(!X.subset_of(CofinSet::of({n})), "F={X}: every singleton escapes");
  for (std::size_t i = 0; i < instances; ++i) {
    std::vector<CofinSet> F;
    std::uniform_int_distribution<std::size_t> count(1, 4);
    std::bernoulli_distribution whole(0.15);
    for (std::size_t k = count(g); k > 0; --k) F.push_back(whole(g) ? X : random_finite(g, 25, 4, false));
    check_instance(F);
  }
  log.note("witness rule: n = 1 + max of the finite members; no non-empty member fits inside {n}");
  return log.done();
}

Verdict check_cofin_algebra(std::uint64_t seed, std::size_t instances) {
  Log log("CofinSet algebra vs truncated oracle");
  Gen g(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const CofinSet a = random_cofin(g);
    const CofinSet b = random_cofin(g);
    const Truncated ta = truncate(a);
    const Truncated tb = truncate(b);
    json d{{"a", a.to_string()}, {"b", b.to_string()}};
    log.expect(truncate(a | b) == (ta | tb), "union", d);
    log.expect(truncate(a & b) == (ta & tb), "intersection", d);
    log.expect(truncate(a - b) == (ta & ~tb), "difference", d);
    log.expect(truncate(a.complement()) == ~ta, "complement", d);
    log.expect(a.complement().complement() == a, "complement involution", d);
    log.expect(a.subset_of(b) == ((ta & ~tb).none()), "inclusion", d);
    const bool fin_fin = a.is_finite_on_omega() && b.is_finite_on_omega();
    const bool cof_cof = !a.is_finite_on_omega() && !b.is_finite_on_omega();
    log.expect(!fin_fin || (a | b).is_finite_on_omega(), "finite union finite", d);
    log.expect(!cof_cof || !(a & b).is_finite_on_omega(), "cofinite intersection cofinite", d);
  }
  return log.done();
}

}  // namespace powerspace
