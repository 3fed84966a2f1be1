#pragma once

#include <initializer_list>
#include <string>

#include "powerspace/finite_space.hpp"

namespace testing {

// Set of named points of X.
inline powerspace::PtSet pts(const powerspace::FiniteSpace& X, std::initializer_list<const char*> names) {
  powerspace::PtSet s(X.size());
  for (const char* n : names) s.set(*X.index_of(n));
  return s;
}

inline std::size_t at(const powerspace::FiniteSpace& X, const char* name) { return *X.index_of(name); }

}  // namespace testing
