#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the plain data types.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "floodit/graph.hpp"

namespace oracle {

using floodit::Colour;
using floodit::Edge;
using floodit::Vertex;

using Adjacency = std::vector<std::vector<Vertex>>;

inline Adjacency adjacency(int n, const std::vector<Edge>& edges) {
  Adjacency adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline std::vector<Vertex> component(const Adjacency& adj, const std::vector<Colour>& col, Vertex v) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> out{v}, stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x])
      if (!seen[y] && col[y] == col[v]) {
        seen[y] = 1;
        out.push_back(y);
        stack.push_back(y);
      }
  }
  return out;
}

inline std::vector<Colour> flood(const Adjacency& adj, std::vector<Colour> col, Vertex v, Colour d) {
  for (Vertex x : component(adj, col, v)) col[x] = d;
  return col;
}

inline bool goal(const Adjacency& adj, const std::vector<Colour>& col, const std::vector<Vertex>& target,
                 std::optional<Colour> d) {
  auto comp = component(adj, col, target.front());
  std::set<Vertex> in(comp.begin(), comp.end());
  for (Vertex v : target)
    if (!in.count(v)) return false;
  return !d || col[target.front()] == *d;
}

// Plain breadth-first search over full colour vectors, every vertex, every colour.
inline int min_moves(const Adjacency& adj, const std::vector<Colour>& start, int c,
                     std::optional<std::vector<Vertex>> target = std::nullopt, std::optional<Colour> d = std::nullopt) {
  std::vector<Vertex> tgt;
  if (target) tgt = *target;
  else
    for (Vertex v = 0; v < static_cast<Vertex>(adj.size()); ++v) tgt.push_back(v);
  std::map<std::vector<Colour>, int> dist{{start, 0}};
  std::queue<std::vector<Colour>> q;
  q.push(start);
  while (!q.empty()) {
    auto col = q.front();
    q.pop();
    int g = dist[col];
    if (goal(adj, col, tgt, d)) return g;
    for (Vertex v = 0; v < static_cast<Vertex>(adj.size()); ++v)
      for (Colour x = 0; x < c; ++x) {
        if (x == col[v]) continue;
        auto next = flood(adj, col, v, x);
        if (dist.emplace(next, g + 1).second) q.push(next);
      }
  }
  return -1;
}

inline int min_moves(int n, const std::vector<Edge>& edges, const std::vector<Colour>& start, int c,
                     std::optional<Colour> d = std::nullopt) {
  return min_moves(adjacency(n, edges), start, c, std::nullopt, d);
}

inline bool connected(int n, const std::vector<Edge>& edges) {
  auto adj = adjacency(n, edges);
  std::vector<Colour> zero(n, 0);
  return static_cast<int>(component(adj, zero, 0).size()) == n;
}

// Every edge subset of the complete graph, filtered by brute-force canonical
// form over all vertex permutations.
inline std::set<std::vector<Edge>> connected_classes(int n) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::set<std::vector<Edge>> classes;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) es.push_back(all[i]);
    if (!connected(n, es)) continue;
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::optional<std::vector<Edge>> best;
    do {
      std::vector<Edge> img;
      for (auto [u, v] : es) img.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
      std::sort(img.begin(), img.end());
      if (!best || img < *best) best = img;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(*best);
  }
  return classes;
}

// All maps V -> {0..c-1}.
inline std::vector<std::vector<Colour>> all_colourings(int n, int c) {
  std::vector<std::vector<Colour>> out;
  std::vector<Colour> col(n, 0);
  while (true) {
    out.push_back(col);
    int i = 0;
    while (i < n && ++col[i] == c) col[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool surjective(const std::vector<Colour>& col, int c) {
  std::set<Colour> s(col.begin(), col.end());
  return static_cast<int>(s.size()) == c;
}

inline std::vector<Edge> random_connected(int n, std::mt19937& rng, double p = 0.4) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    if (connected(n, es)) return es;
  }
}

}  // namespace oracle
