#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "symgraph/action.hpp"
#include "symgraph/errors.hpp"

namespace symgraph {

namespace {

constexpr std::uint64_t kNodeBudget = 4'000'000;

int color_count(const std::vector<int>& color) {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

std::vector<int> histogram(const std::vector<int>& color) {
  std::vector<int> h(color_count(color), 0);
  for (int c : color) ++h[c];
  return h;
}

// iterated neighbor-multiset recoloring to a fixed point; colors come out as
// dense ranks of (old color, sorted neighbor colors), so equal partitions give
// equal colorings
void refine(const std::vector<std::vector<int>>& adj, std::vector<int>& color) {
  const int n = static_cast<int>(color.size());
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      for (int w : adj[v]) sig[v].push_back(color[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      auto it = std::lower_bound(distinct.begin(), distinct.end(), sig[v]);
      next[v] = static_cast<int>(it - distinct.begin());
    }
    if (next == color) return;
    color = std::move(next);
  }
}

bool is_discrete(const std::vector<int>& color) {
  return color_count(color) == static_cast<int>(color.size());
}

}  // namespace

PermGroup graph_automorphisms(const Graph& g, int vertex_cap) {
  const int n = g.n;
  if (n < 1) throw InvalidInput("automorphism search needs at least one vertex");
  if (n > vertex_cap)
    throw ResourceLimit("automorphism search capped at " + std::to_string(vertex_cap) +
                        " vertices (graph has " + std::to_string(n) + ")");
  const auto adj = g.adjacency();

  // left path: individualize the least vertex of the first largest cell, refine
  std::vector<std::vector<int>> path_color;
  std::vector<std::vector<int>> path_hist;
  std::vector<int> base;
  std::vector<int> target_color;
  {
    std::vector<int> color(n, 0);
    refine(adj, color);
    path_color.push_back(color);
    path_hist.push_back(histogram(color));
    while (!is_discrete(path_color.back())) {
      const auto& cur = path_color.back();
      const auto h = histogram(cur);
      int c = 0;
      for (int i = 1; i < static_cast<int>(h.size()); ++i)
        if (h[i] > h[c]) c = i;
      int b = -1;
      for (int v = 0; v < n && b < 0; ++v)
        if (cur[v] == c) b = v;
      base.push_back(b);
      target_color.push_back(c);
      std::vector<int> next = cur;
      next[b] = static_cast<int>(h.size());
      refine(adj, next);
      path_color.push_back(std::move(next));
      path_hist.push_back(histogram(path_color.back()));
    }
  }
  const int depth = static_cast<int>(base.size());
  if (depth == 0) return PermGroup::trivial(n);

  StabilizerChain chain = StabilizerChain::build(n, {Permutation(n)}, base);
  std::vector<Permutation> found;

  // vertex owning each color at the leftmost (identity) leaf
  std::vector<int> left_vertex(n);
  for (int v = 0; v < n; ++v) left_vertex[path_color[depth][v]] = v;

  std::uint64_t nodes = 0;

  auto leaf_candidate = [&](const std::vector<int>& color) -> bool {
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[left_vertex[color[v]]] = v;
    Permutation phi = Permutation::from_images(std::move(img));
    if (phi.is_identity()) return false;
    for (auto [u, v] : g.edges)
      if (!g.has_edge(phi(u), phi(v))) return false;
    if (chain.extend(phi)) found.push_back(std::move(phi));
    return true;
  };

  // on_path nodes scan their whole cell with orbit pruning; off-path subtrees
  // stop at the first verified automorphism
  std::function<bool(int, const std::vector<int>&, bool)> descend =
      [&](int level, const std::vector<int>& color, bool on_path) -> bool {
    if (++nodes > kNodeBudget)
      throw ResourceLimit("automorphism search exceeded its node budget");
    if (level == depth) return leaf_candidate(color);
    bool any = false;
    const int c = target_color[level];
    for (int w = 0; w < n; ++w) {
      if (color[w] != c) continue;
      if (on_path && w == base[level]) {
        any |= descend(level + 1, path_color[level + 1], true);
        continue;
      }
      if (on_path) {
        const auto& lv = chain.level(level);
        if (!lv.pos.empty() && lv.pos[w] >= 0) continue;  // image already realized
      }
      std::vector<int> child = color;
      child[w] = color_count(color);
      refine(adj, child);
      if (histogram(child) != path_hist[level + 1]) continue;
      const bool got = descend(level + 1, child, false);
      any |= got;
      if (!on_path && got) return true;
    }
    return any;
  };
  descend(0, path_color[0], true);

  if (found.empty()) return PermGroup::trivial(n);
  return PermGroup(n, std::move(found));
}

}  // namespace symgraph
