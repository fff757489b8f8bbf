#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace floodit {

struct Move {
  Vertex vertex = 0;
  Colour colour = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

// A replayable move sequence. The claimed target defaults to every vertex.
struct Certificate {
  std::vector<Move> moves;
  std::optional<Colour> final_colour;
  std::optional<std::vector<Vertex>> target;

  std::size_t size() const { return moves.size(); }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Live game position: a disjoint-set partition of the original vertices into
// monochromatic components. Adjacent components never share a colour.
//
// Each root keeps a list of neighbouring vertices that may be stale (pointing
// back into its own component or duplicated); a move rescans and compacts the
// list of the recoloured component, so moves cost roughly the size of the
// component boundary plus the entries inherited from merges.
class FloodState {
public:
  explicit FloodState(const ColouredGraph& g)
      : shape_(g.shape_ptr()),
        c_(g.num_colours()),
        parent_(g.size()),
        size_(g.size(), 1),
        colour_(g.colouring()),
        name_(g.size()),
        adj_(g.size()),
        components_(g.size()),
        mark_(g.size(), 0) {
    const Graph& s = *shape_;
    for (Vertex v = 0; v < s.size(); ++v) {
      parent_[v] = v;
      name_[v] = v;
      auto nb = s.neighbours(v);
      adj_[v].assign(nb.begin(), nb.end());
    }
    for (auto [u, v] : s.edges())
      if (colour_[u] == colour_[v] && find(u) != find(v)) unite(find(u), find(v));
  }

  const Graph& graph() const { return *shape_; }
  int size() const { return shape_->size(); }
  int num_colours() const { return c_; }
  int component_count() const { return components_; }
  bool flooded() const { return components_ == 1; }

  Vertex find(Vertex v) const {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  Colour colour_of(Vertex v) const { return colour_[find(v)]; }
  // Components are named by their minimum original vertex.
  Vertex component_name(Vertex v) const { return name_[find(v)]; }
  int component_size(Vertex v) const { return size_[find(v)]; }
  bool same_component(Vertex a, Vertex b) const { return find(a) == find(b); }

  bool linked(std::span<const Vertex> vertices) const {
    if (vertices.empty()) return true;
    Vertex r = find(vertices.front());
    for (Vertex v : vertices)
      if (find(v) != r) return false;
    return true;
  }

  // Recolour the component of m.vertex and absorb every neighbouring component
  // that now shares its colour. Recolouring to the current colour is a no-op.
  void apply(Move m) {
    if (m.vertex < 0 || m.vertex >= size()) throw CertificateError("move references missing vertex " + std::to_string(m.vertex));
    if (m.colour < 0 || m.colour >= c_) throw CertificateError("move uses colour outside the colour-set");
    Vertex r = find(m.vertex);
    if (colour_[r] == m.colour) return;
    colour_[r] = m.colour;

    ++stamp_;
    mark_[r] = stamp_;
    kept_.clear();
    merge_.clear();
    for (Vertex u : adj_[r]) {
      Vertex ru = find(u);
      if (mark_[ru] == stamp_) continue;
      mark_[ru] = stamp_;
      (colour_[ru] == m.colour ? merge_ : kept_).push_back(ru);
    }
    adj_[r].swap(kept_);
    for (Vertex other : merge_) r = unite(r, other);
  }

  std::vector<Colour> colouring() const {
    std::vector<Colour> out(size());
    for (Vertex v = 0; v < size(); ++v) out[v] = colour_of(v);
    return out;
  }

  // Distinct names of the components adjacent to v's component.
  std::vector<Vertex> component_neighbours(Vertex v) const {
    Vertex r = find(v);
    std::vector<Vertex> out;
    for (Vertex u : adj_[r]) {
      Vertex ru = find(u);
      if (ru != r) out.push_back(name_[ru]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // O(|E|) audit of the contraction invariant.
  bool fully_contracted() const {
    for (auto [u, v] : shape_->edges()) {
      bool same = find(u) == find(v);
      bool mono = colour_of(u) == colour_of(v);
      if (same != mono) return false;
    }
    return true;
  }

  // Canonical form: for each vertex, its component name and colour.
  std::string serialize() const {
    std::ostringstream out;
    for (Vertex v = 0; v < size(); ++v) out << (v ? " " : "") << component_name(v) << ':' << colour_of(v);
    return out.str();
  }

  friend bool operator==(const FloodState& a, const FloodState& b) {
    if (a.size() != b.size()) return false;
    for (Vertex v = 0; v < a.size(); ++v)
      if (a.component_name(v) != b.component_name(v) || a.colour_of(v) != b.colour_of(v)) return false;
    return true;
  }

private:
  Vertex unite(Vertex a, Vertex b) {
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    name_[a] = std::min(name_[a], name_[b]);
    if (adj_[a].size() < adj_[b].size()) adj_[a].swap(adj_[b]);
    adj_[a].insert(adj_[a].end(), adj_[b].begin(), adj_[b].end());
    std::vector<Vertex>().swap(adj_[b]);
    --components_;
    return a;
  }

  std::shared_ptr<const Graph> shape_;
  int c_;
  mutable std::vector<Vertex> parent_;
  std::vector<int> size_;
  std::vector<Colour> colour_;  // indexed by root
  std::vector<Vertex> name_;    // indexed by root
  std::vector<std::vector<Vertex>> adj_;
  int components_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> kept_, merge_;
};

inline FloodState apply_move(FloodState s, Move m) {
  s.apply(m);
  return s;
}

struct Outcome {
  bool flooded = false;
  bool target_met = false;
  std::optional<Colour> final_colour;
  std::size_t length = 0;
};

inline Outcome play_certificate(const ColouredGraph& g, const Certificate& cert) {
  FloodState s(g);
  for (Move m : cert.moves) s.apply(m);
  Outcome out;
  out.length = cert.moves.size();
  out.flooded = s.flooded();
  if (out.flooded) out.final_colour = s.colour_of(0);
  if (cert.target) {
    const auto& t = *cert.target;
    for (Vertex v : t)
      if (v < 0 || v >= g.size()) throw CertificateError("target references missing vertex " + std::to_string(v));
    out.target_met = s.linked(t) && (!cert.final_colour || t.empty() || s.colour_of(t.front()) == *cert.final_colour);
  } else {
    out.target_met = out.flooded && (!cert.final_colour || out.final_colour == cert.final_colour);
  }
  return out;
}

// Moves are recorded as played so certificates come out of live strategies.
// Recolouring a component to its own colour is dropped rather than recorded.
class Recorder {
public:
  explicit Recorder(FloodState& s) : state_(s) {}
  void play(Vertex v, Colour d) {
    if (state_.colour_of(v) == d) return;
    state_.apply({v, d});
    moves_.push_back({v, d});
  }
  FloodState& state() { return state_; }
  const FloodState& state() const { return state_; }
  std::size_t played() const { return moves_.size(); }
  const std::vector<Move>& moves() const { return moves_; }
  Certificate certificate() const { return {moves_, std::nullopt, std::nullopt}; }

private:
  FloodState& state_;
  std::vector<Move> moves_;
};

}  // namespace floodit
