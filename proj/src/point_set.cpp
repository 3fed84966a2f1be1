#include "powerspace/point_set.hpp"

#include <cassert>

#include "powerspace/errors.hpp"

namespace powerspace {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::PowerspaceTooLarge: return "PowerspaceTooLarge";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotEmbedding: return "NotEmbedding";
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoUniquePoint: return "NoUniquePoint";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::MapUndefined: return "MapUndefined";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

PtSet PtSet::full(std::size_t universe) {
  PtSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe & 63; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

PtSet PtSet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  PtSet s(universe);
  for (auto m : members) {
    if (m >= universe) throw Error(ErrorCode::InvalidInput, "point index out of range");
    s.set(m);
  }
  return s;
}

PtSet PtSet::from_indices(std::size_t universe, std::span<const std::size_t> members) {
  PtSet s(universe);
  for (auto m : members) {
    if (m >= universe) throw Error(ErrorCode::InvalidInput, "point index out of range");
    s.set(m);
  }
  return s;
}

std::size_t PtSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PtSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

PtSet& PtSet::operator|=(const PtSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PtSet& PtSet::operator&=(const PtSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PtSet& PtSet::operator-=(const PtSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

PtSet PtSet::complement() const { return full(universe_) - *this; }

bool PtSet::subset_of(const PtSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool PtSet::intersects(const PtSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::optional<std::size_t> PtSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::vector<std::size_t> PtSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t PtSet::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(universe_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool canonical_less(const PtSet& a, const PtSet& b) noexcept {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size() && i < wb.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff != 0) {
      // The set owning the lowest differing member sorts first.
      const std::uint64_t low = diff & (~diff + 1);
      return (wa[i] & low) != 0;
    }
  }
  return wa.size() < wb.size();
}

}  // namespace powerspace
