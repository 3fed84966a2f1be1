#include "powerspace/suites.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <sstream>

#include <omp.h>

#include "powerspace/approximation.hpp"
#include "powerspace/errors.hpp"
#include "powerspace/pi02.hpp"
#include "powerspace/symbolic.hpp"

namespace powerspace {

namespace {

constexpr std::pair<Suite, const char*> kSuiteNames[] = {
    {Suite::All, "all"},         {Suite::Homeo, "homeo"},   {Suite::Monad, "monad"},
    {Suite::Consonance, "consonance"}, {Suite::Pi02, "pi02"}, {Suite::Wilker, "wilker"},
    {Suite::Naturality, "naturality"}, {Suite::Counterexamples, "counterexamples"}};

CheckOptions check_options(const SuiteOptions& o) {
  CheckOptions c;
  c.family_cap = o.family_cap;
  c.samples = o.samples;
  c.seed = o.seed;
  c.limits = o.limits;
  return c;
}

// Runs one check, timing it. Resource caps become capped records; any other
// exception is a failed check, since every input here is well formed.
CheckRecord timed(const std::string& suite, const std::string& space, const std::string& check,
                  const std::function<Verdict()>& fn) {
  CheckRecord r;
  r.suite = suite;
  r.space = space;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.verdict = fn();
    r.verdict.check = check;
  } catch (const Error& e) {
    if (e.is_resource_limit()) {
      r.capped = true;
      r.verdict = Verdict::pass(check);
      r.verdict.notes.push_back(e.what());
    } else {
      r.verdict = Verdict::fail(check, json{{"error", error_code_name(e.code())}, {"message", e.what()}});
    }
  } catch (const std::exception& e) {
    r.verdict = Verdict::fail(check, json{{"error", "exception"}, {"message", e.what()}});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Verdict identity_law(const std::string& name, const SpaceMap& m) { return maps_agree(name, m, identity_map(m.domain)); }

SpaceMap tmap(Kind kind, const ConstructedSpace& TX, const ConstructedSpace& TY, const SpaceMap& f) {
  return kind == Kind::Lower ? lower_map(TX, TY, f) : upper_map(TX, TY, f);
}

PtSet modal(Kind kind, const ConstructedSpace& C, const PtSet& U) {
  return kind == Kind::Lower ? diamond(C, U) : box(C, U);
}

Verdict set_equal(const std::string& check, const PtSet& lhs, const PtSet& rhs, const FiniteSpace& space, json context) {
  if (lhs == rhs) return Verdict::pass(check, 1);
  context["lhs"] = space.set_json(lhs);
  context["rhs"] = space.set_json(rhs);
  return Verdict::fail(check, std::move(context), 1);
}

Verdict monad_laws(Kind kind, SpaceRef X, const Limits& limits) {
  std::string k(kind_letter(kind));
  auto TX = construct(kind, X, limits);
  auto TTX = construct(kind, TX, limits);
  auto TTTX = construct(kind, TTX, limits);
  SpaceMap eta = monad_unit(kind, *TX);
  SpaceMap eta_T = monad_unit(kind, *TTX);
  SpaceMap mu = monad_mult(kind, *TTX);
  SpaceMap mu_T = monad_mult(kind, *TTTX);

  Verdict v = Verdict::pass(k + " monad laws");
  v.absorb(identity_law(k + " mu . eta_T = id", compose(mu, eta_T)));
  v.absorb(identity_law(k + " mu . T(eta) = id", compose(mu, tmap(kind, *TX, *TTX, eta))));
  v.absorb(maps_agree(k + " mu . mu_T = mu . T(mu)", compose(mu, mu_T), compose(mu, tmap(kind, *TTTX, *TTX, mu))));
  for (const auto* m : {&eta, &eta_T, &mu, &mu_T}) v.absorb(check_continuous(*m));
  return v;
}

Verdict monad_preimages(Kind kind, SpaceRef X, const Limits& limits) {
  std::string k(kind_letter(kind));
  auto TX = construct(kind, X, limits);
  auto TTX = construct(kind, TX, limits);
  SpaceMap eta = monad_unit(kind, *TX);
  SpaceMap mu = monad_mult(kind, *TTX);
  const char* op = kind == Kind::Lower ? "diamond" : "box";

  Verdict v = Verdict::pass(k + " unit/mult preimages");
  for (const auto& U : X->opens()) {
    PtSet m = modal(kind, *TX, U);
    v.absorb(set_equal(k + " eta preimage", eta.preimage(m), U, *X, json{{"U", X->set_json(U)}, {"op", op}}));
    v.absorb(set_equal(k + " mu preimage", mu.preimage(m), modal(kind, *TTX, m), *TX->space,
                       json{{"U", X->set_json(U)}, {"op", op}}));
  }
  return v;
}

Verdict algebra_laws(Kind kind, SpaceRef X, const Limits& limits) {
  std::string name = kind == Kind::Lower ? "union on A(O(X))" : "intersection on K(O(X))";
  auto OX = open_lattice(X, limits);
  auto TOX = construct(kind, OX, limits);
  auto TTOX = construct(kind, TOX, limits);
  SpaceMap s = kind == Kind::Lower ? structure_union(*TOX) : structure_intersection(*TOX);
  Verdict v = Verdict::pass(name);
  v.absorb(check_continuous(s));
  v.absorb(identity_law(name + ": s . eta = id", compose(s, monad_unit(kind, *TOX))));
  v.absorb(maps_agree(name + ": s . mu = s . T(s)", compose(s, monad_mult(kind, *TTOX)),
                      compose(s, tmap(kind, *TTOX, *TOX, s))));
  return v;
}

// Post-conditions of one decomposition plus a brute-force search over pairs
// of saturated sets confirming that some decomposition exists.
Verdict wilker_triple(const ApproxRelation& r, const std::vector<PtSet>& saturated, const PtSet& K, const PtSet& U1,
                      const PtSet& U2) {
  const FiniteSpace& X = *r.space;
  json ctx{{"K", X.set_json(K)}, {"U1", X.set_json(U1)}, {"U2", X.set_json(U2)}};
  WilkerResult res = wilker_decompose(r, K, U1, U2);
  auto is_sat = [&](const PtSet& s) { return X.saturation(s) == s; };
  auto violated = [&](const char* what) {
    json w = ctx;
    w["violated"] = what;
    return Verdict::fail("wilker", std::move(w), 1);
  };
  if (!is_sat(res.K1) || !is_sat(res.K2)) return violated("saturated");
  if (!res.K1.subset_of(U1) || !res.K2.subset_of(U2))
    return violated("containment");
  if (!K.subset_of(res.K1 | res.K2)) return violated("cover");

  bool found = false;
  for (const auto& A : saturated) {
    if (!A.subset_of(U1)) continue;
    for (const auto& B : saturated)
      if (B.subset_of(U2) && K.subset_of(A | B)) {
        found = true;
        break;
      }
    if (found) break;
  }
  if (!found) return violated("brute force found no pair");
  return Verdict::pass("wilker", 1);
}

struct Task {
  std::function<std::vector<CheckRecord>()> run;
};

std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<CheckRecord>> out(tasks.size());
  const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs < 1 ? 1 : jobs)
  for (long i = 0; i < n; ++i) out[i] = tasks[i].run();
  std::vector<CheckRecord> merged;
  for (auto& v : out)
    for (auto& r : v) merged.push_back(std::move(r));
  return merged;
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  for (const auto& [s, n] : kSuiteNames)
    if (name == n) return s;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  for (const auto& [k, n] : kSuiteNames)
    if (k == s) return n;
  return "?";
}

std::string space_label(const FiniteSpace& X) {
  std::string out = std::to_string(X.size()) + ":";
  bool first = true;
  for (const auto& [a, b] : X.hasse()) {
    if (!first) out += ",";
    first = false;
    out += X.name(a) + "<" + X.name(b);
  }
  return out;
}

std::vector<CheckRecord> homeo_checks(const FiniteSpace& space, const SuiteOptions& options) {
  auto X = make_ref(space);
  std::string label = space_label(space);
  std::vector<CheckRecord> out;
  std::optional<Tower> tower;
  auto tower_ready = [&]() -> const Tower& {
    if (!tower) tower = build_tower(X, options.limits);
    return *tower;
  };
  using PairFn = CanonicalMapPair (*)(const Tower&);
  const std::pair<const char*, PairFn> pairs[] = {
      {"sigma/tau", sigma_tau}, {"phi/psi", phi_psi}, {"alpha/beta", alpha_beta}, {"gamma/delta", gamma_delta}};
  for (const auto& [name, fn] : pairs)
    out.push_back(timed("homeo", label, name, [&, fn = fn] { return check_pair(fn(tower_ready()), true); }));
  out.push_back(timed("homeo", label, "preimage identities", [&] { return check_preimage_identities(tower_ready()); }));
  out.push_back(timed("homeo", label, "tau inclusion", [&] { return check_tau_inclusion(tower_ready()); }));
  return out;
}

std::vector<CheckRecord> monad_checks(const FiniteSpace& space, const SuiteOptions& options) {
  auto X = make_ref(space);
  std::string label = space_label(space);
  const Limits& lim = options.limits;
  std::vector<CheckRecord> out;
  for (Kind k : {Kind::Lower, Kind::Upper}) {
    std::string l(kind_letter(k));
    out.push_back(timed("monad", label, l + " monad laws", [&] { return monad_laws(k, X, lim); }));
    out.push_back(timed("monad", label, l + " unit/mult preimages", [&] { return monad_preimages(k, X, lim); }));
  }
  out.push_back(timed("monad", label, "union algebra", [&] { return algebra_laws(Kind::Lower, X, lim); }));
  out.push_back(timed("monad", label, "intersection algebra", [&] { return algebra_laws(Kind::Upper, X, lim); }));
  return out;
}

std::vector<CheckRecord> consonance_checks(const FiniteSpace& space, const SuiteOptions& options) {
  auto X = make_ref(space);
  std::string label = space_label(space);
  CheckOptions co = check_options(options);
  const Limits& lim = options.limits;
  std::vector<CheckRecord> out;
  auto add = [&](const std::string& name, const std::function<Verdict()>& fn) {
    out.push_back(timed("consonance", label, name, fn));
  };
  add("consonance equivalence", [&] { return consonance_equivalence(X, co); });
  add("A lower = weak", [&] { return topology_coincidence(*lower_powerspace(X, lim), Reference::Weak); });
  add("K upper = Scott", [&] { return topology_coincidence(*upper_powerspace(X, lim), Reference::Scott); });
  add("K(A) upper = weak", [&] {
    return topology_coincidence(*upper_powerspace(lower_powerspace(X, lim), lim), Reference::Weak);
  });
  add("X sober", [&] { return is_sober(*X); });
  add("A sober", [&] { return is_sober(*lower_powerspace(X, lim)->space); });
  add("O sober", [&] { return is_sober(*open_lattice(X, lim)->space); });
  add("X wilker", [&] { return is_wilker(*X); });
  add("X strongly compact sets", [&] { return all_strongly_compact(*X); });
  add("X consonant", [&] { return is_consonant(X, co); });
  add("X co-consonant", [&] { return is_co_consonant(X, co); });
  add("O consonant", [&] { return is_consonant(open_lattice(X, lim)->space, co); });
  add("O co-consonant", [&] { return is_co_consonant(open_lattice(X, lim)->space, co); });
  add("K consonant", [&] { return is_consonant(upper_powerspace(X, lim)->space, co); });
  add("K co-consonant", [&] { return is_co_consonant(upper_powerspace(X, lim)->space, co); });
  if (space.size() <= 3) {
    add("K consonance equivalence", [&] { return consonance_equivalence(upper_powerspace(X, lim)->space, co); });
    add("K(A(K)) upper = weak", [&] {
      auto AK = lower_powerspace(upper_powerspace(X, lim), lim);
      return topology_coincidence(*upper_powerspace(AK, lim), Reference::Weak);
    });
  }
  return out;
}

std::vector<CheckRecord> pi02_checks(const FiniteSpace& space, const SuiteOptions& options) {
  auto Y = make_ref(space);
  std::string label = space_label(space);
  const Limits& lim = options.limits;
  std::vector<CheckRecord> out;
  out.push_back(timed("pi02", label, "lens pairs", [&] { return lens_pi02(Y, lim); }));
  out.push_back(timed("pi02", label, "eta images", [&] { return eta_image_characterizations(Y, lim); }));
  if (space.size() > 3) return out;

  auto ranges = [&](bool lower) {
    Verdict v = Verdict::pass(lower ? "lower ranges" : "upper ranges");
    for (std::size_t m = 0; m < (std::size_t{1} << space.size()); ++m) {
      PtSet S(space.size());
      for (std::size_t i = 0; i < space.size(); ++i)
        if ((m >> i) & 1) S.set(i);
      Subspace sub = subspace(Y, S);
      v.absorb(validate_embedding(sub.inclusion));
      for (const auto& p : {canonical_presentation(Y, S), saturated_presentation(Y, S)})
        v.absorb(lower ? lower_embedding_range(sub.inclusion, p, lim) : upper_embedding_range(sub.inclusion, p, lim));
    }
    return v;
  };
  out.push_back(timed("pi02", label, "lower embedding ranges", [&] { return ranges(true); }));
  out.push_back(timed("pi02", label, "upper embedding ranges", [&] { return ranges(false); }));
  return out;
}

std::vector<CheckRecord> wilker_checks(const FiniteSpace& space, const SuiteOptions&) {
  std::string label = space_label(space);
  std::vector<CheckRecord> out;
  if (space.size() == 0) return out;  // no approximation relation on the empty space
  auto X = make_ref(space);
  auto r = std::make_shared<ApproxRelation>(canonical_approx_relation(X));
  out.push_back(timed("wilker", label, "approximation axioms", [&] { return validate_approx_relation(*r); }));
  out.push_back(timed("wilker", label, "decomposition", [&] {
    const auto& opens = r->opens;  // upper sets: the saturated and the open sets coincide
    Verdict v = Verdict::pass("decomposition");
    for (const auto& U1 : opens)
      for (const auto& U2 : opens) {
        PtSet cover = U1 | U2;
        for (const auto& K : opens)
          if (K.subset_of(cover)) v.absorb(wilker_triple(*r, opens, K, U1, U2));
      }
    return v;
  }));
  return out;
}

std::vector<CheckRecord> naturality_checks(const Tower& tx, const Tower& ty) {
  std::string label = space_label(*tx.X) + " -> " + space_label(*ty.X);
  const std::size_t n = tx.X->size(), m = ty.X->size();
  std::vector<SpaceMap> maps;
  if (n == 0 || m > 0) {
    std::vector<std::size_t> table(n, 0);
    while (true) {
      SpaceMap f{tx.X, ty.X, table};
      if (check_continuous(f)) maps.push_back(f);
      std::size_t i = 0;
      while (i < n && ++table[i] == m) table[i++] = 0;
      if (i == n) break;
    }
  }
  std::vector<CheckRecord> out;
  for (MapName which : kAllMapNames) {
    std::string name = "naturality " + std::string(map_name(which));
    out.push_back(timed("naturality", label, name, [&] {
      Verdict v = Verdict::pass(name);
      for (const auto& f : maps) v.absorb(check_naturality(f, tx, ty, which));
      return v;
    }));
  }
  return out;
}

std::vector<CheckRecord> distributive_checks(const FiniteSpace& space, const SuiteOptions& options) {
  auto X = make_ref(space);
  return {timed("naturality", space_label(space), "distributive law", [&] {
    return check_distributive_law(X, options.limits, options.allow_large_distributive);
  })};
}

std::vector<CheckRecord> counterexample_checks(const SuiteOptions& options) {
  const std::uint64_t seed = options.seed;
  return {timed("counterexamples", "", "lower topology is not Scott",
                [&] { return verify_lower_not_scott(seed); }),
          timed("counterexamples", "", "upper topology is not weak", [&] { return verify_upper_not_weak(seed); }),
          timed("counterexamples", "", "A(X) is not co-consonant",
                [&] { return verify_AX_not_coconsonant(seed); })};
}

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += (!c.capped && c.verdict.holds);
  return n;
}

std::size_t SuiteReport::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += (!c.capped && !c.verdict.holds);
  return n;
}

int SuiteReport::exit_code() const {
  if (failed() > 0) return 1;
  if (capped) return 2;
  return 0;
}

json SuiteReport::to_json(bool timings) const {
  json results = json::array();
  std::size_t ncapped = 0;
  for (const auto& c : checks) {
    json r{{"suite", c.suite}, {"space", c.space}, {"check", c.verdict.check}, {"holds", c.verdict.holds},
           {"capped", c.capped}, {"instances", c.verdict.instances}, {"sampled", c.verdict.sampled}};
    if (c.verdict.witness) r["witness"] = *c.verdict.witness;
    if (!c.verdict.notes.empty()) r["notes"] = c.verdict.notes;
    results.push_back(std::move(r));
    ncapped += c.capped;
  }
  json j{{"suite", suite},       {"max_points", max_points}, {"spaces", spaces},   {"checks", checks.size()},
         {"passed", passed()},   {"failed", failed()},       {"capped", ncapped}, {"exit_code", exit_code()},
         {"results", results}};
  if (timings) {
    json t = json::array();
    double total = 0;
    for (const auto& c : checks) {
      t.push_back({{"suite", c.suite}, {"space", c.space}, {"check", c.verdict.check}, {"seconds", c.seconds}});
      total += c.seconds;
    }
    j["timings"] = {{"checks", t}, {"total_seconds", total}};
  }
  return j;
}

std::string SuiteReport::to_text(bool timings) const {
  std::ostringstream os;
  std::size_t ncapped = 0;
  for (const auto& c : checks) ncapped += c.capped;
  os << "suite " << suite << ": " << spaces << " spaces (max " << max_points << " points), " << checks.size()
     << " checks, " << passed() << " passed, " << failed() << " failed";
  if (ncapped) os << ", " << ncapped << " capped";
  os << "\n";
  for (const auto& c : checks) {
    if (c.capped) {
      os << "CAPPED " << c.suite << "." << c.verdict.check << " [" << c.space << "]";
      if (!c.verdict.notes.empty()) os << ": " << c.verdict.notes.front();
      os << "\n";
    } else if (!c.verdict.holds) {
      os << "FAIL " << c.suite << "." << c.verdict.check << " [" << c.space << "] "
         << c.verdict.witness.value_or(json::object()).dump() << "\n";
    }
  }
  if (timings) {
    os << "timings:\n";
    double total = 0;
    for (const auto& c : checks) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", c.seconds);
      os << "  " << buf << "s " << c.suite << "." << c.verdict.check << " [" << c.space << "]\n";
      total += c.seconds;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", total);
    os << "  total " << buf << "s\n";
  }
  return os.str();
}

SuiteReport run_suite(Suite suite, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = suite_name(suite);
  report.max_points = options.max_points;

  std::vector<FiniteSpace> spaces = enumerate_spaces(options.max_points, true, options.include_empty);
  report.spaces = spaces.size();
  const bool all = suite == Suite::All;

  std::vector<Task> tasks;
  auto per_space = [&](auto fn, std::size_t max_size) {
    for (const auto& s : spaces)
      if (s.size() <= max_size) tasks.push_back({[&s, &options, fn] { return fn(s, options); }});
  };
  const std::size_t any = options.max_points;
  if (all || suite == Suite::Homeo) per_space(homeo_checks, any);
  if (all || suite == Suite::Monad) per_space(monad_checks, any);
  if (all || suite == Suite::Consonance) per_space(consonance_checks, any);
  if (all || suite == Suite::Pi02) per_space(pi02_checks, any);
  if (all || suite == Suite::Wilker) per_space(wilker_checks, any);
  std::vector<CheckRecord> records = run_tasks(tasks, options.jobs);

  if (all || suite == Suite::Naturality) {
    // Towers are shared across every pair, so build them first.
    std::vector<const FiniteSpace*> small;
    for (const auto& s : spaces)
      if (s.size() <= 3) small.push_back(&s);
    std::vector<std::optional<Tower>> towers(small.size());
    std::vector<Task> build;
    for (std::size_t i = 0; i < small.size(); ++i)
      build.push_back({[&, i] {
        std::vector<CheckRecord> r;
        r.push_back(timed("naturality", space_label(*small[i]), "tower", [&] {
          towers[i] = build_tower(make_ref(*small[i]), options.limits);
          return Verdict::pass("tower");
        }));
        return r;
      }});
    std::vector<CheckRecord> built = run_tasks(build, options.jobs);
    for (auto& r : built)
      if (r.capped || !r.verdict.holds) records.push_back(std::move(r));

    std::vector<Task> nat;
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = 0; j < small.size(); ++j)
        if (towers[i] && towers[j]) nat.push_back({[&, i, j] { return naturality_checks(*towers[i], *towers[j]); }});
    for (const auto& s : spaces)
      if (s.size() <= 2 || options.allow_large_distributive)
        nat.push_back({[&s, &options] { return distributive_checks(s, options); }});
    for (auto& r : run_tasks(nat, options.jobs)) records.push_back(std::move(r));
  }
  if (all || suite == Suite::Counterexamples)
    for (auto& r : counterexample_checks(options)) records.push_back(std::move(r));

  for (const auto& r : records) report.capped = report.capped || r.capped;
  report.checks = std::move(records);
  return report;
}

}  // namespace powerspace
