#include "symgraph/io.hpp"

#include <fstream>
#include <json.hpp>

#include "symgraph/errors.hpp"

namespace symgraph {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

json images_json(const Permutation& p) {
  json a = json::array();
  for (int v : p.images()) a.push_back(v);
  return a;
}

std::vector<Permutation> parse_generators(const json& list, int degree, const char* what) {
  if (!list.is_array()) throw InvalidInput(std::string(what) + ": generators must be a list");
  std::vector<Permutation> gens;
  for (const auto& item : list) {
    if (!item.is_array() || static_cast<int>(item.size()) != degree)
      throw InvalidInput(std::string(what) + ": generator image length does not match the degree");
    std::vector<int> img;
    img.reserve(degree);
    for (const auto& v : item) {
      if (!v.is_number_integer()) throw InvalidInput(std::string(what) + ": non-integer image");
      img.push_back(v.get<int>());
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return gens;
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  json a = json::array();
  for (auto [u, v] : pairs) a.push_back(json::array({u, v}));
  return a;
}

std::vector<std::pair<int, int>> parse_pairs(const json& list, const char* what) {
  if (!list.is_array()) throw InvalidInput(std::string(what) + ": expected a list of pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& item : list) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw InvalidInput(std::string(what) + ": each entry must be a pair of integers");
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

int parse_count(const json& j, const char* field, const char* what) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw InvalidInput(std::string(what) + ": missing integer field " + field);
  const int v = j[field].get<int>();
  if (v < 0) throw InvalidInput(std::string(what) + ": negative " + field);
  return v;
}

}  // namespace

std::string group_to_text(const PermGroup& g) {
  json j;
  j["degree"] = g.degree();
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(images_json(p));
  j["generators"] = gens;
  return j.dump() + "\n";
}

PermGroup group_from_text(const std::string& text) {
  const json j = parse(text, "group file");
  const int degree = parse_count(j, "degree", "group file");
  if (!j.contains("generators")) throw InvalidInput("group file: missing generators");
  auto gens = parse_generators(j["generators"], degree, "group file");
  if (gens.empty()) return PermGroup::trivial(degree);
  return PermGroup(degree, std::move(gens));
}

std::string graph_to_text(const Graph& g, const std::vector<Permutation>& action_generators) {
  json j;
  j["n"] = g.n;
  j["edges"] = pairs_json(g.edges);
  if (!action_generators.empty()) {
    json gens = json::array();
    for (const auto& p : action_generators) gens.push_back(images_json(p));
    j["action"] = json{{"generators", gens}};
  }
  return j.dump() + "\n";
}

ParsedGraph graph_from_text(const std::string& text) {
  const json j = parse(text, "graph file");
  const int n = parse_count(j, "n", "graph file");
  if (!j.contains("edges")) throw InvalidInput("graph file: missing edges");
  ParsedGraph out{Graph::from_edges(n, parse_pairs(j["edges"], "graph file")), {}};
  if (j.contains("action")) {
    if (!j["action"].is_object() || !j["action"].contains("generators"))
      throw InvalidInput("graph file: action block without generators");
    out.action_generators = parse_generators(j["action"]["generators"], n, "graph file");
  }
  return out;
}

std::string digraph_to_text(const Digraph& d) {
  json j;
  j["n"] = d.n;
  j["arcs"] = pairs_json(d.arcs);
  return j.dump() + "\n";
}

Digraph digraph_from_text(const std::string& text) {
  const json j = parse(text, "digraph file");
  const int n = parse_count(j, "n", "digraph file");
  if (!j.contains("arcs")) throw InvalidInput("digraph file: missing arcs");
  return Digraph::from_arcs(n, parse_pairs(j["arcs"], "digraph file"));
}

std::string geometry_to_text(const CosetGeometry& geo) {
  json j;
  j["coset_count"] = geo.coset_count();
  j["group_order"] = order_as_u64(geo.group.order());
  j["subgroup_order"] = order_as_u64(geo.subgroup.order());
  json reps = json::array();
  for (const auto& p : geo.reps) reps.push_back(images_json(p));
  j["transversal"] = reps;
  return j.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return content;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << content;
  if (!out) throw InvalidInput("write failed for " + path.string());
}

}  // namespace symgraph
