#pragma once

#include <iosfwd>
#include <string>

#include "powerspace/finite_space.hpp"

namespace powerspace {

/// Accepts {"points": [...], "order": [[a, b], ...]} with covers named by
/// point, or {"points": [...], "opens": [[i, ...], ...]} with index lists.
/// Throws ParseError on malformed input.
FiniteSpace space_from_json(const json& j);
FiniteSpace load_space(const std::string& path);

/// Order form with Hasse covers.
json space_to_json(const FiniteSpace& space);

/// Hasse diagram, bottom to top.
void write_dot(std::ostream& os, const FiniteSpace& space, const std::string& graph_name = "space");

}  // namespace powerspace
