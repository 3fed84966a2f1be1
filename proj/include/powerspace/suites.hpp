#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powerspace/canonical_maps.hpp"
#include "powerspace/property_checkers.hpp"

namespace powerspace {

enum class Suite { All, Homeo, Monad, Consonance, Pi02, Wilker, Naturality, Counterexamples };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct SuiteOptions {
  std::size_t max_points = 3;
  bool include_empty = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::size_t family_cap = std::size_t{1} << 16;
  std::size_t samples = 256;
  Limits limits;
  bool allow_large_distributive = false;
};

struct CheckRecord {
  std::string suite;
  std::string space;  // e.g. "3:x0<x1,x0<x2"; empty for space-free checks
  Verdict verdict;
  bool capped = false;  // a resource cap stopped the check; verdict is not meaningful
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::size_t max_points = 0;
  std::size_t spaces = 0;
  std::vector<CheckRecord> checks;
  bool capped = false;
  std::string cap_message;

  std::size_t passed() const;
  std::size_t failed() const;
  /// 0 pass, 1 some check failed, 2 a resource cap was hit.
  int exit_code() const;

  /// Deterministic body; the timings section is appended only when asked.
  json to_json(bool timings = false) const;
  std::string to_text(bool timings = false) const;
};

/// Compact label of a space: size, then its Hasse covers.
std::string space_label(const FiniteSpace& X);

/// Runs the suite over enumerate_spaces(max_points), sharding spaces across
/// `jobs` OpenMP threads and merging in enumeration order.
SuiteReport run_suite(Suite suite, const SuiteOptions& options);

// Per-space check bundles, exposed for the acceptance binary and tests.
std::vector<CheckRecord> homeo_checks(const FiniteSpace& X, const SuiteOptions& options);
std::vector<CheckRecord> monad_checks(const FiniteSpace& X, const SuiteOptions& options);
std::vector<CheckRecord> consonance_checks(const FiniteSpace& X, const SuiteOptions& options);
std::vector<CheckRecord> pi02_checks(const FiniteSpace& Y, const SuiteOptions& options);
std::vector<CheckRecord> wilker_checks(const FiniteSpace& X, const SuiteOptions& options);
/// Naturality for every continuous map tx.X -> ty.X, one record per square.
std::vector<CheckRecord> naturality_checks(const Tower& tx, const Tower& ty);
std::vector<CheckRecord> distributive_checks(const FiniteSpace& X, const SuiteOptions& options);
std::vector<CheckRecord> counterexample_checks(const SuiteOptions& options);

}  // namespace powerspace
