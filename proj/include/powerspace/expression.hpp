#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "powerspace/powerspaces.hpp"

namespace powerspace {

/// expr := 'X' | ('A' | 'K' | 'L' | 'O') '(' expr ')', whitespace ignored.
struct Expression {
  std::optional<Kind> kind;  // empty for the base space X
  std::shared_ptr<const Expression> inner;

  std::string to_string() const;
};

/// Throws ParseError with the offending column.
Expression parse_expression(const std::string& text);

/// Either X itself or the outermost construction.
using Built = std::variant<SpaceRef, ConstructedRef>;

Built evaluate(const Expression& e, SpaceRef X, const Limits& limits = {});
const FiniteSpace& built_space(const Built& b);

}  // namespace powerspace
