#include "symgraph/graph.hpp"

#include <algorithm>
#include <deque>

#include "symgraph/errors.hpp"

namespace symgraph {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidInput("duplicate edge");
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const std::pair<int, int> key{u, v};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return -1;
  return static_cast<int>(it - edges.begin());
}

bool Graph::connected() const {
  if (n <= 1) return true;
  const auto adj = adjacency();
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push_back(w);
      }
  }
  return cnt == n;
}

std::optional<int> Graph::regular_valency() const {
  if (n == 0) return std::nullopt;
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int i = 1; i < n; ++i)
    if (deg[i] != deg[0]) return std::nullopt;
  return deg[0];
}

Digraph Digraph::from_arcs(int n, std::vector<std::pair<int, int>> arcs) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidInput("arc endpoint out of range");
    if (u == v) throw InvalidInput("loops are not allowed");
  }
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw InvalidInput("duplicate arc");
  Digraph d;
  d.n = n;
  d.arcs = std::move(arcs);
  return d;
}

std::vector<std::vector<int>> Digraph::out_neighbors() const {
  std::vector<std::vector<int>> out(n);
  for (auto [u, v] : arcs) out[u].push_back(v);
  return out;
}

std::vector<std::vector<int>> Digraph::in_neighbors() const {
  std::vector<std::vector<int>> in(n);
  for (auto [u, v] : arcs) in[v].push_back(u);
  return in;
}

bool Digraph::weakly_connected() const {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : arcs) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push_back(w);
      }
  }
  return cnt == n;
}

bool Digraph::strongly_connected() const {
  if (n <= 1) return true;
  auto reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push_back(w);
        }
    }
    return cnt == n;
  };
  return reach(out_neighbors()) && reach(in_neighbors());
}

bool Digraph::reversal_closed() const {
  for (auto [u, v] : arcs) {
    const std::pair<int, int> rev{v, u};
    if (!std::binary_search(arcs.begin(), arcs.end(), rev)) return false;
  }
  return true;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, std::move(e));
}

Digraph graph_as_digraph(const Graph& g) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(2 * g.edges.size());
  for (auto [u, v] : g.edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph::from_arcs(g.n, std::move(arcs));
}

Graph digraph_as_graph(const Digraph& d) {
  if (!d.reversal_closed()) throw InvalidInput("digraph is not reversal-closed");
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : d.arcs)
    if (u < v) e.emplace_back(u, v);
  return Graph::from_edges(d.n, std::move(e));
}

std::string ComponentShape::to_string() const {
  switch (kind) {
    case Cycle:
      return "cycle(" + std::to_string(param) + ")";
    case Complete:
      return "complete(" + std::to_string(param) + ")";
    default:
      return "other";
  }
}

ComponentsResult components_and_shapes(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> comp(g.n, -1);
  ComponentsResult res;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(res.components.size());
    std::vector<int> members{s};
    comp[s] = id;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = id;
          members.push_back(w);
          q.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    res.components.push_back(std::move(members));
  }
  for (const auto& c : res.components) {
    const int m = static_cast<int>(c.size());
    long long ecount = 0;
    bool all2 = true, allfull = true;
    for (int u : c) {
      const int d = static_cast<int>(adj[u].size());
      ecount += d;
      if (d != 2) all2 = false;
      if (d != m - 1) allfull = false;
    }
    ecount /= 2;
    ComponentShape shape;
    if (m >= 3 && all2 && ecount == m) {
      shape.kind = ComponentShape::Cycle;
      shape.param = m;
    } else if (allfull && ecount == static_cast<long long>(m) * (m - 1) / 2) {
      shape.kind = ComponentShape::Complete;
      shape.param = m;
    }
    res.shapes.push_back(shape);
  }
  return res;
}

bool ComponentsResult::all_of(ComponentShape::Kind kind, int param) const {
  if (shapes.empty()) return false;
  for (const auto& s : shapes)
    if (s.kind != kind || s.param != param) return false;
  return true;
}

Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_indices) {
  std::vector<std::pair<int, int>> e;
  e.reserve(edge_indices.size());
  for (int idx : edge_indices) {
    if (idx < 0 || idx >= static_cast<int>(g.edges.size()))
      throw InvalidInput("edge index out of range");
    e.push_back(g.edges[idx]);
  }
  return Graph::from_edges(g.n, std::move(e));
}

}  // namespace symgraph
