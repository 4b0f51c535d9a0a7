#include "fg/io.hpp"

#include <sstream>

#include "json.hpp"

#include "fg/errors.hpp"

namespace fg {

std::string graph_to_json(const StallingsGraph& g) {
  nlohmann::json j;
  j["rank"] = g.rank();
  j["base"] = StallingsGraph::base();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.source, std::string(1, static_cast<char>('a' + e.gen)),
                     e.target});
  }
  j["edges"] = edges;
  return j.dump(2);
}

StallingsGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rank") || !j.contains("edges")) {
    throw ParseError("graph record needs \"rank\" and \"edges\"");
  }
  RawGraph raw;
  try {
    raw.rank = j["rank"].get<int>();
    raw.base = j.value("base", 0);
    for (const auto& item : j["edges"]) {
      if (!item.is_array() || item.size() != 3) {
        throw ParseError("each edge must be [source, letter, target]");
      }
      std::string letter = item[1].get<std::string>();
      if (letter.size() != 1 || letter[0] < 'a' ||
          letter[0] >= 'a' + raw.rank) {
        throw ParseError("edge letter out of range: \"" + letter + "\"");
      }
      Edge e{item[0].get<int>(), letter[0] - 'a', item[2].get<int>()};
      if (e.source < 0 || e.target < 0) {
        throw ParseError("negative vertex id");
      }
      raw.edges.push_back(e);
      raw.vertex_count = std::max({raw.vertex_count, e.source + 1,
                                   e.target + 1});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph record: ") + e.what());
  }
  if (raw.rank <= 0) throw ParseError("rank must be positive");
  if (raw.base >= std::max(raw.vertex_count, 1)) {
    throw ParseError("base vertex out of range");
  }
  raw.vertex_count = std::max(raw.vertex_count, raw.base + 1);
  return StallingsGraph::fold(raw);
}

std::string graph_to_dot(const StallingsGraph& g) {
  std::ostringstream out;
  out << "digraph stallings {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  0 [shape=doublecircle];\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.source << " -> " << e.target << " [label=\""
        << static_cast<char>('a' + e.gen) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fg
