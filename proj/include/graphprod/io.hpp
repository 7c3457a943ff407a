#ifndef GRAPHPROD_IO_HPP_
#define GRAPHPROD_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "graphprod/defining_graph.hpp"
#include "graphprod/explore.hpp"
#include "graphprod/wreath.hpp"

namespace graphprod {

// GroupSpec: {"type":"cyclic","n":2} or {"type":"table","table":[[...]]}.
GroupPtr parse_group_spec(const std::string& json_text);

// GraphDoc: {"vertices":[{"id":0,"group":{...}},...],"edges":[[0,1],...]}.
// Vertex ids must be the dense range 0..n-1.
DefiningGraph parse_graph_doc(const std::string& json_text);
DefiningGraph load_graph_file(const std::string& path);

// Action doc: {"perms":[{"name":"r","map":[1,2,3,4,0]},...]}.
GraphAction parse_action_doc(const std::string& json_text, const DefiningGraph& graph);
GraphAction load_action_file(const std::string& path, const DefiningGraph& graph);

// Word text: space-separated "v:idx" tokens; "e" is the empty word.
Word parse_word(const std::string& text);

// DOT rendering of an explored ball: stable vertex order (by index, i.e. by
// sphere then key), spheres as fill colors. `color_class` may remap vertices
// to named classes (extension balls color by base vertex); empty = by sphere.
std::string export_dot(const ExploredBall& ball, const std::string& graph_name,
                       const std::vector<std::string>& color_class = {});

// DOT rendering of the defining graph with leaf vertices styled.
std::string export_defining_graph_dot(const DefiningGraph& graph);

}  // namespace graphprod

#endif  // GRAPHPROD_IO_HPP_
