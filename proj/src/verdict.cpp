#include "powerspace/verdict.hpp"

namespace powerspace {

Verdict& Verdict::absorb(const Verdict& other) {
  instances += other.instances;
  sampled = sampled || other.sampled;
  if (holds && !other.holds) {
    holds = false;
    json w = other.witness.value_or(json::object());
    if (other.check != check) w = json{{"check", other.check}, {"witness", w}};
    witness = std::move(w);
  }
  for (const auto& n : other.notes) notes.push_back(n);
  return *this;
}

json Verdict::to_json() const {
  json j{{"check", check}, {"holds", holds}, {"instances", instances}, {"sampled", sampled}};
  if (witness) j["witness"] = *witness;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

}  // namespace powerspace
