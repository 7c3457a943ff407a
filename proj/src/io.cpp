#include "graphprod/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "graphprod/error.hpp"

namespace graphprod {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error("MalformedTable", "invalid JSON document");
  return doc;
}

GroupPtr group_from_json(const json& spec) {
  if (!spec.is_object() || !spec.contains("type")) {
    throw Error("MalformedTable", "group spec needs a \"type\" field");
  }
  const std::string type = spec.at("type").get<std::string>();
  if (type == "cyclic") {
    return std::make_shared<const GroupTable>(GroupTable::cyclic(spec.at("n").get<int>()));
  }
  if (type == "table") {
    const auto table = spec.at("table").get<std::vector<std::vector<int>>>();
    return std::make_shared<const GroupTable>(
        GroupTable::from_table(table, spec.value("label", std::string())));
  }
  throw Error("MalformedTable", "unknown group spec type '" + type + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("MalformedTable", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

GroupPtr parse_group_spec(const std::string& json_text) {
  return group_from_json(parse_json(json_text));
}

DefiningGraph parse_graph_doc(const std::string& json_text) {
  const json doc = parse_json(json_text);
  if (!doc.contains("vertices")) throw Error("MalformedTable", "graph doc needs \"vertices\"");
  std::map<int, GroupPtr> by_id;
  for (const auto& v : doc.at("vertices")) {
    const int id = v.at("id").get<int>();
    if (by_id.count(id)) {
      throw Error("MalformedTable", "vertex id " + std::to_string(id) + " listed twice");
    }
    by_id[id] = group_from_json(v.at("group"));
  }
  std::vector<GroupPtr> groups;
  int expected = 0;
  for (const auto& [id, group] : by_id) {
    if (id != expected++) {
      throw Error("UnknownVertex",
                  "vertex ids must be dense 0..n-1, missing " + std::to_string(expected - 1));
    }
    groups.push_back(group);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (doc.contains("edges")) {
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error("MalformedTable", "edges must be pairs");
      }
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
  }
  return DefiningGraph(std::move(groups), edges);
}

DefiningGraph load_graph_file(const std::string& path) {
  return parse_graph_doc(read_file(path));
}

GraphAction parse_action_doc(const std::string& json_text, const DefiningGraph& graph) {
  const json doc = parse_json(json_text);
  if (!doc.contains("perms")) throw Error("ActionInvalid", "action doc needs \"perms\"");
  std::vector<GraphAction::Perm> perms;
  for (const auto& p : doc.at("perms")) {
    GraphAction::Perm perm;
    perm.name = p.at("name").get<std::string>();
    perm.map = p.at("map").get<std::vector<VertexId>>();
    perms.push_back(std::move(perm));
  }
  return GraphAction(std::move(perms), graph);
}

GraphAction load_action_file(const std::string& path, const DefiningGraph& graph) {
  return parse_action_doc(read_file(path), graph);
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw Error("VertexGroupMismatch", "bad word token '" + token + "', expected v:idx");
    }
    try {
      w.syllables.push_back(Syllable{std::stoi(token.substr(0, colon)),
                                     std::stoi(token.substr(colon + 1))});
    } catch (const std::exception&) {
      throw Error("VertexGroupMismatch", "bad word token '" + token + "'");
    }
  }
  return w;
}

std::string export_dot(const ExploredBall& ball, const std::string& graph_name,
                       const std::vector<std::string>& color_class) {
  static const char* kPalette[] = {"lightblue",  "lightyellow", "lightpink", "lightgreen",
                                   "lightsalmon", "lightcyan",   "plum",      "wheat"};
  std::ostringstream out;
  out << "graph \"" << graph_name << "\" {\n";
  out << "  node [style=filled];\n";
  std::map<std::string, std::size_t> class_color;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    std::string cls = color_class.empty() ? "sphere " + std::to_string(ball.dist[i])
                                          : color_class[i];
    const auto [it, inserted] = class_color.emplace(cls, class_color.size());
    out << "  \"" << ball.keys[i] << "\" [fillcolor=" << kPalette[it->second % 8]
        << ", label=\"" << ball.keys[i] << "\"];\n";
  }
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (int j : ball.adj[i]) {
      if (static_cast<std::size_t>(j) > i) {
        out << "  \"" << ball.keys[i] << "\" -- \"" << ball.keys[static_cast<std::size_t>(j)]
            << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_defining_graph_dot(const DefiningGraph& graph) {
  std::ostringstream out;
  out << "graph defining {\n";
  for (int v = 0; v < graph.num_vertices(); ++v) {
    out << "  " << v << " [label=\"" << v << " : " << graph.group(v)->label() << "\"";
    if (graph.is_leaf(v)) out << ", shape=doublecircle, style=dashed";
    out << "];\n";
  }
  for (auto [u, v] : graph.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace graphprod
