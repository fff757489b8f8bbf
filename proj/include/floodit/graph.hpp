#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace floodit {

using Vertex = std::int32_t;
using Colour = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
  enum class Kind { DisconnectedGraph, DanglingVertexRef, NonDenseColours, SelfLoop, EmptyGraph };

  GraphError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Simple undirected graph stored in CSR form. Edges are normalised (u < v),
// sorted and deduplicated; connectivity is not required here.
class Graph {
public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw GraphError(GraphError::Kind::EmptyGraph, "graph needs at least one vertex");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError(GraphError::Kind::DanglingVertexRef,
                         "edge " + std::to_string(u) + "-" + std::to_string(v) + " references a missing vertex");
      if (u == v) throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (auto [u, v] : edges_) {
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    targets_.resize(edges_.size() * 2);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
      targets_[fill[u]++] = v;
      targets_[fill[v]++] = u;
    }
    for (int v = 0; v < n_; ++v) std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }

  int size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbours(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : neighbours(v))
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    return count == n_;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

// A connected graph with a vertex colouring over the colour-set {0, ..., c-1}.
// The shape is shared so that recolourings of one graph stay cheap.
class ColouredGraph {
public:
  ColouredGraph(std::shared_ptr<const Graph> shape, std::vector<Colour> colours, int c)
      : shape_(std::move(shape)), colours_(std::move(colours)), c_(c) {
    if (!shape_ || shape_->size() < 1) throw GraphError(GraphError::Kind::EmptyGraph, "graph needs at least one vertex");
    if (static_cast<int>(colours_.size()) != shape_->size())
      throw GraphError(GraphError::Kind::DanglingVertexRef, "colouring size does not match vertex count");
    if (c_ < 1) throw GraphError(GraphError::Kind::NonDenseColours, "colour-set must be nonempty");
    for (Colour d : colours_)
      if (d < 0 || d >= c_)
        throw GraphError(GraphError::Kind::NonDenseColours,
                         "colour " + std::to_string(d) + " outside colour-set of size " + std::to_string(c_));
    if (!shape_->connected()) throw GraphError(GraphError::Kind::DisconnectedGraph, "graph is not connected");
  }

  // When c is omitted the colour-set is {0, ..., max colour}.
  static ColouredGraph build(int n, std::vector<Edge> edges, std::vector<Colour> colours,
                             std::optional<int> c = std::nullopt) {
    int palette = c.value_or(colours.empty() ? 1 : *std::max_element(colours.begin(), colours.end()) + 1);
    return ColouredGraph(std::make_shared<const Graph>(n, std::move(edges)), std::move(colours), palette);
  }

  const Graph& shape() const { return *shape_; }
  const std::shared_ptr<const Graph>& shape_ptr() const { return shape_; }
  int size() const { return shape_->size(); }
  int num_colours() const { return c_; }
  Colour colour(Vertex v) const { return colours_[v]; }
  const std::vector<Colour>& colouring() const { return colours_; }

  bool surjective() const {
    std::vector<char> used(c_, 0);
    for (Colour d : colours_) used[d] = 1;
    return std::all_of(used.begin(), used.end(), [](char x) { return x != 0; });
  }

  ColouredGraph recoloured(std::vector<Colour> colours) const { return {shape_, std::move(colours), c_}; }
  ColouredGraph recoloured(std::vector<Colour> colours, int c) const { return {shape_, std::move(colours), c}; }

  friend bool operator==(const ColouredGraph& a, const ColouredGraph& b) {
    return a.c_ == b.c_ && a.colours_ == b.colours_ && a.shape() == b.shape();
  }

private:
  std::shared_ptr<const Graph> shape_;
  std::vector<Colour> colours_;
  int c_ = 1;
};

inline ColouredGraph build_coloured_graph(int n, std::vector<Edge> edges, std::vector<Colour> colours,
                                          std::optional<int> c = std::nullopt) {
  return ColouredGraph::build(n, std::move(edges), std::move(colours), c);
}

namespace detail {

struct DisjointSets {
  std::vector<Vertex> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Vertex find(Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // root stays the minimum id
    return true;
  }
};

}  // namespace detail

struct Contraction {
  ColouredGraph graph;
  std::vector<Vertex> image;           // original vertex -> contracted vertex
  std::vector<Vertex> representative;  // contracted vertex -> minimum original vertex
};

// Quotient by monochromatic components. Contracted vertices are numbered in
// order of their minimum original vertex, so the result is canonical.
inline Contraction contract(const ColouredGraph& g) {
  const Graph& s = g.shape();
  detail::DisjointSets ds(s.size());
  for (auto [u, v] : s.edges())
    if (g.colour(u) == g.colour(v)) ds.unite(u, v);

  std::vector<Vertex> image(s.size(), -1);
  std::vector<Vertex> rep;
  std::vector<Colour> colours;
  for (Vertex v = 0; v < s.size(); ++v) {
    Vertex r = ds.find(v);
    if (image[r] < 0) {
      image[r] = static_cast<Vertex>(rep.size());
      rep.push_back(v);
      colours.push_back(g.colour(v));
    }
    image[v] = image[r];
  }
  std::vector<Edge> edges;
  for (auto [u, v] : s.edges())
    if (image[u] != image[v]) edges.emplace_back(image[u], image[v]);
  ColouredGraph q(std::make_shared<const Graph>(static_cast<int>(rep.size()), std::move(edges)), std::move(colours),
                  g.num_colours());
  return {std::move(q), std::move(image), std::move(rep)};
}

inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.size(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex u : g.neighbours(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

inline int eccentricity(const Graph& g, Vertex v) {
  auto d = bfs_distances(g, v);
  return *std::max_element(d.begin(), d.end());
}

// Lowest-index vertex of minimum eccentricity.
inline Vertex centre(const Graph& g) {
  Vertex best = 0;
  int best_ecc = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.size(); ++v) {
    int e = eccentricity(g, v);
    if (e < best_ecc) {
      best_ecc = e;
      best = v;
    }
  }
  return best;
}

inline int radius(const Graph& g) { return eccentricity(g, centre(g)); }
inline int radius(const ColouredGraph& g) { return radius(g.shape()); }

// N_d: number of vertices with colour d.
inline int colour_count(const ColouredGraph& g, Colour d) {
  return static_cast<int>(std::count(g.colouring().begin(), g.colouring().end(), d));
}

inline int distinct_colours(std::span<const Colour> colours) {
  std::vector<Colour> v(colours.begin(), colours.end());
  std::sort(v.begin(), v.end());
  return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace floodit
