#ifndef FG_IO_HPP_
#define FG_IO_HPP_

#include <string>

#include "fg/stallings.hpp"

namespace fg {

// Structured graph record:
//   {"rank": 2, "base": 0, "edges": [[0, "a", 1], ...]}
// Serialization then parsing yields an equal() graph.
std::string graph_to_json(const StallingsGraph& g);
StallingsGraph graph_from_json(const std::string& text);  // throws ParseError

// DOT digraph; one edge per generator transition, labeled with the
// letter; the base vertex is double-circled.
std::string graph_to_dot(const StallingsGraph& g);

}  // namespace fg

#endif  // FG_IO_HPP_
