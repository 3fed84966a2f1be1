#include "powerspace/space_io.hpp"

#include <fstream>
#include <ostream>

#include "powerspace/errors.hpp"

namespace powerspace {

namespace {

std::size_t lookup(const std::vector<std::string>& names, const json& ref) {
  if (ref.is_number_unsigned()) {
    const auto i = ref.get<std::size_t>();
    if (i < names.size()) return i;
  } else if (ref.is_string()) {
    const auto s = ref.get<std::string>();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return i;
  }
  throw Error(ErrorCode::ParseError, "unknown point reference " + ref.dump());
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

FiniteSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw Error(ErrorCode::ParseError, "space needs a \"points\" array");
  std::vector<std::string> names;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw Error(ErrorCode::ParseError, "point names must be strings");
    names.push_back(p.get<std::string>());
  }
  const std::size_t n = names.size();

  if (j.contains("opens")) {
    if (!j["opens"].is_array()) throw Error(ErrorCode::ParseError, "\"opens\" must be an array");
    std::vector<PtSet> opens;
    for (const auto& o : j["opens"]) {
      if (!o.is_array()) throw Error(ErrorCode::ParseError, "each open is an array of point indices");
      PtSet s(n);
      for (const auto& ref : o) s.set(lookup(names, ref));
      opens.push_back(std::move(s));
    }
    return FiniteSpace::from_opens(std::move(names), opens);
  }

  std::vector<std::pair<std::size_t, std::size_t>> covers;
  if (j.contains("order")) {
    if (!j["order"].is_array()) throw Error(ErrorCode::ParseError, "\"order\" must be an array");
    for (const auto& pr : j["order"]) {
      if (!pr.is_array() || pr.size() != 2) throw Error(ErrorCode::ParseError, "order entries are [lower, upper]");
      covers.emplace_back(lookup(names, pr[0]), lookup(names, pr[1]));
    }
  }
  return FiniteSpace::from_poset(std::move(names), covers);
}

FiniteSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return space_from_json(j);
}

json space_to_json(const FiniteSpace& space) {
  json order = json::array();
  for (auto [a, b] : space.hasse()) order.push_back({space.name(a), space.name(b)});
  return json{{"points", space.names()}, {"order", order}};
}

void write_dot(std::ostream& os, const FiniteSpace& space, const std::string& graph_name) {
  os << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t x = 0; x < space.size(); ++x)
    os << "  n" << x << " [label=\"" << dot_escape(space.name(x)) << "\"];\n";
  for (auto [a, b] : space.hasse()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
}

}  // namespace powerspace
