#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "symgraph/coset.hpp"
#include "symgraph/graph.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

// Interchange formats, all compact JSON with fixed key order and a trailing
// newline so equal data gives equal bytes.
//   group:   {"degree": d, "generators": [[images]...]}
//   graph:   {"n": n, "edges": [[u,v]...]} plus optional "action" generators
//   digraph: {"n": n, "arcs": [[u,v]...]}

std::string group_to_text(const PermGroup& g);
PermGroup group_from_text(const std::string& text);

struct ParsedGraph {
  Graph graph;
  std::vector<Permutation> action_generators;  // empty when absent
};

std::string graph_to_text(const Graph& g, const std::vector<Permutation>& action_generators = {});
ParsedGraph graph_from_text(const std::string& text);

std::string digraph_to_text(const Digraph& d);
Digraph digraph_from_text(const std::string& text);

std::string geometry_to_text(const CosetGeometry& geo);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace symgraph
