#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace powerspace {

using json = nlohmann::json;

/// Outcome of a decision procedure. A witness is attached exactly when the
/// property fails.
struct Verdict {
  std::string check;
  bool holds = true;
  std::optional<json> witness;
  std::size_t instances = 0;  // quantifier instantiations examined
  bool sampled = false;       // some quantifier was sampled rather than exhausted
  std::vector<std::string> notes;

  static Verdict pass(std::string check, std::size_t instances = 0) {
    Verdict v;
    v.check = std::move(check);
    v.instances = instances;
    return v;
  }

  static Verdict fail(std::string check, json witness, std::size_t instances = 0) {
    Verdict v;
    v.check = std::move(check);
    v.holds = false;
    v.witness = std::move(witness);
    v.instances = instances;
    return v;
  }

  explicit operator bool() const noexcept { return holds; }

  /// Folds another verdict in: instance counts add, the first failure wins.
  Verdict& absorb(const Verdict& other);

  json to_json() const;
};

}  // namespace powerspace
