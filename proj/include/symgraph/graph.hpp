#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symgraph {

// finite simple undirected graph; edges stored as (u,v) with u < v, sorted
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  std::vector<std::vector<int>> adjacency() const;  // ascending neighbor lists
  int edge_index(int u, int v) const;               // -1 if absent
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  bool connected() const;
  // valency when regular
  std::optional<int> regular_valency() const;
};

// finite digraph without loops; arcs sorted lexicographically
struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  static Digraph from_arcs(int n, std::vector<std::pair<int, int>> arcs);

  std::vector<std::vector<int>> out_neighbors() const;
  std::vector<std::vector<int>> in_neighbors() const;
  bool weakly_connected() const;
  bool strongly_connected() const;
  bool reversal_closed() const;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Digraph graph_as_digraph(const Graph& g);
// requires every arc's reversal present
Graph digraph_as_graph(const Digraph& d);

struct ComponentShape {
  enum Kind { Cycle, Complete, Other } kind = Other;
  int param = 0;  // Cycle: length; Complete: vertex count
  bool operator==(const ComponentShape&) const = default;
  std::string to_string() const;
};

struct ComponentsResult {
  std::vector<std::vector<int>> components;  // sorted by least vertex
  std::vector<ComponentShape> shapes;        // aligned with components
  // true when every component has the given shape
  bool all_of(ComponentShape::Kind kind, int param) const;
};

ComponentsResult components_and_shapes(const Graph& g);

// keeps exactly the edges whose index is listed
Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_indices);

}  // namespace symgraph
