#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "engine.hpp"
#include "graph.hpp"

namespace floodit {

class SolverError : public std::runtime_error {
public:
  enum class Kind { NotAPath, NotACycle, InvalidQuery };
  SolverError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// m_G(A, w, d): make the target set A (default: every vertex) one component,
// of colour d when d is given. Moves may be played anywhere in the graph.
struct SolveQuery {
  ColouredGraph graph;
  std::optional<std::vector<Vertex>> target;
  std::optional<Colour> colour;
};

struct SolveOptions {
  std::size_t budget = 10'000'000;  // stored states
};

struct SolveResult {
  int moves = 0;
  Certificate certificate;
  std::size_t explored_states = 0;
  bool exact = true;  // false: budget exceeded, moves is an upper bound
};

// Greedy: fix d (by default the most frequent colour, lowest id on
// ties) and keep recolouring a component adjacent to the largest d-component
// to d. Every move gains at least one d vertex, so length <= n - N_d.
inline Certificate greedy_upper_bound(const ColouredGraph& g, std::optional<Colour> target = std::nullopt) {
  Colour d = 0;
  if (target) {
    d = *target;
  } else {
    int best = -1;
    for (Colour x = 0; x < g.num_colours(); ++x)
      if (int cnt = colour_count(g, x); cnt > best) {
        best = cnt;
        d = x;
      }
  }
  FloodState s(g);
  Recorder rec(s);
  Vertex blob = -1;
  int blob_size = 0;
  for (Vertex v = 0; v < g.size(); ++v)
    if (s.colour_of(v) == d && s.component_size(v) > blob_size) {
      blob = v;
      blob_size = s.component_size(v);
    }
  if (blob < 0) {
    blob = 0;
    rec.play(0, d);
  }
  while (!s.flooded()) {
    auto nb = s.component_neighbours(blob);
    rec.play(nb.front(), d);
  }
  Certificate cert = rec.certificate();
  cert.final_colour = d;
  return cert;
}

namespace detail {

// Colour bitmask over the vertices of the target set.
inline std::uint32_t target_colour_mask(const std::vector<Colour>& colours, const std::vector<Vertex>& target) {
  std::uint32_t mask = 0;
  for (Vertex v : target) mask |= 1u << colours[v];
  return mask;
}

// Admissible and consistent: a move changes one component's colour, so the
// set of colours seen on the target loses at most one element per move.
inline int search_heuristic(std::uint32_t mask, std::optional<Colour> d) {
  if (d) return std::popcount(mask & ~(1u << *d));
  return std::popcount(mask) - 1;
}

struct PackedKey {
  int bits;
  std::uint64_t encode(const std::vector<Colour>& colours) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < colours.size(); ++i) key |= static_cast<std::uint64_t>(colours[i]) << (bits * i);
    return key;
  }
  void decode(std::uint64_t key, std::vector<Colour>& colours) const {
    std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
    for (std::size_t i = 0; i < colours.size(); ++i) colours[i] = static_cast<Colour>((key >> (bits * i)) & mask);
  }
};

struct StringKey {
  std::string encode(const std::vector<Colour>& colours) const {
    std::string key(colours.size(), '\0');
    for (std::size_t i = 0; i < colours.size(); ++i) key[i] = static_cast<char>(colours[i]);
    return key;
  }
  void decode(const std::string& key, std::vector<Colour>& colours) const {
    for (std::size_t i = 0; i < colours.size(); ++i) colours[i] = static_cast<unsigned char>(key[i]);
  }
};

struct SearchOutcome {
  bool found = false;
  std::vector<Move> moves;  // contracted vertex ids
  std::size_t explored = 0;
};

// A* over colourings of the contracted graph; a colouring determines the
// partition, so it is a complete and canonical state key.
template <class Codec>
SearchOutcome astar(const ColouredGraph& cg, const std::vector<Vertex>& target, std::optional<Colour> d,
                    std::size_t budget, Codec codec) {
  using Key = decltype(codec.encode(std::declval<const std::vector<Colour>&>()));
  struct Node {
    Key key;
    std::uint32_t parent;
    std::int16_t g;
    std::int16_t h;
    bool closed;
    Move move;
  };
  const int k = cg.size();
  const int c = cg.num_colours();
  const auto& edges = cg.shape().edges();

  std::vector<Node> nodes;
  std::unordered_map<Key, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> buckets;
  auto push = [&](std::uint32_t id) {
    std::size_t f = static_cast<std::size_t>(nodes[id].g + nodes[id].h);
    if (buckets.size() <= f) buckets.resize(f + 1);
    buckets[f].push_back(id);
  };

  std::vector<Colour> colours = cg.colouring();
  {
    Key key = codec.encode(colours);
    int h = search_heuristic(target_colour_mask(colours, target), d);
    nodes.push_back({key, UINT32_MAX, 0, static_cast<std::int16_t>(h), false, {}});
    index.emplace(key, 0);
    push(0);
  }

  SearchOutcome out;
  DisjointSets ds(k);
  std::vector<Colour> child(k);
  std::vector<Vertex> comp_root;
  for (std::size_t f = 0; f < buckets.size(); ++f) {
    while (!buckets[f].empty()) {
      std::uint32_t id = buckets[f].back();
      buckets[f].pop_back();
      if (nodes[id].closed || static_cast<std::size_t>(nodes[id].g + nodes[id].h) != f) continue;
      nodes[id].closed = true;
      ++out.explored;
      codec.decode(nodes[id].key, colours);

      std::iota(ds.parent.begin(), ds.parent.end(), 0);
      for (auto [u, v] : edges)
        if (colours[u] == colours[v]) ds.unite(u, v);

      Vertex troot = ds.find(target.front());
      bool goal = !d || colours[target.front()] == *d;
      for (Vertex v : target)
        if (ds.find(v) != troot) {
          goal = false;
          break;
        }
      if (goal) {
        out.found = true;
        for (std::uint32_t at = id; nodes[at].parent != UINT32_MAX; at = nodes[at].parent)
          out.moves.push_back(nodes[at].move);
        std::reverse(out.moves.begin(), out.moves.end());
        return out;
      }

      comp_root.clear();
      for (Vertex v = 0; v < k; ++v)
        if (ds.find(v) == v) comp_root.push_back(v);  // DisjointSets roots are minimum ids
      const std::int16_t g = nodes[id].g;
      for (Vertex root : comp_root) {
        for (Colour x = 0; x < c; ++x) {
          if (x == colours[root]) continue;
          for (Vertex v = 0; v < k; ++v) child[v] = ds.find(v) == root ? x : colours[v];
          Key key = codec.encode(child);
          auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(nodes.size()));
          if (inserted) {
            int h = search_heuristic(target_colour_mask(child, target), d);
            nodes.push_back({key, id, static_cast<std::int16_t>(g + 1), static_cast<std::int16_t>(h), false, {root, x}});
            push(it->second);
            if (nodes.size() > budget) {
              out.explored = nodes.size();
              return out;
            }
          } else {
            Node& n = nodes[it->second];
            if (!n.closed && n.g > g + 1) {
              n.g = static_cast<std::int16_t>(g + 1);
              n.parent = id;
              n.move = {root, x};
              push(it->second);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

inline SolveResult min_moves_exact(const SolveQuery& q, const SolveOptions& opts = {}) {
  const ColouredGraph& g = q.graph;
  if (q.colour && (*q.colour < 0 || *q.colour >= g.num_colours()))
    throw SolverError(SolverError::Kind::InvalidQuery, "target colour outside colour-set");
  if (g.num_colours() > 32) throw SolverError(SolverError::Kind::InvalidQuery, "exact search supports at most 32 colours");

  std::vector<Vertex> target;
  if (q.target) {
    if (q.target->empty()) throw SolverError(SolverError::Kind::InvalidQuery, "target set is empty");
    for (Vertex v : *q.target)
      if (v < 0 || v >= g.size()) throw SolverError(SolverError::Kind::InvalidQuery, "target vertex out of range");
    target = *q.target;
  } else {
    target.resize(g.size());
    std::iota(target.begin(), target.end(), 0);
  }

  Contraction con = contract(g);
  std::vector<Vertex> ctarget;
  for (Vertex v : target) ctarget.push_back(con.image[v]);
  std::sort(ctarget.begin(), ctarget.end());
  ctarget.erase(std::unique(ctarget.begin(), ctarget.end()), ctarget.end());

  const int k = con.graph.size();
  const int bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(g.num_colours() - 1))));
  detail::SearchOutcome found = k * bits <= 64
                                    ? detail::astar(con.graph, ctarget, q.colour, opts.budget, detail::PackedKey{bits})
                                    : detail::astar(con.graph, ctarget, q.colour, opts.budget, detail::StringKey{});

  SolveResult res;
  res.explored_states = found.explored;
  if (!found.found) {
    res.exact = false;
    res.certificate = greedy_upper_bound(g, q.colour);
    res.moves = static_cast<int>(res.certificate.size());
  } else {
    for (Move m : found.moves) res.certificate.moves.push_back({con.representative[m.vertex], m.colour});
    res.moves = static_cast<int>(found.moves.size());
  }
  if (q.colour) res.certificate.final_colour = q.colour;
  else if (!q.target) res.certificate.final_colour = play_certificate(g, res.certificate).final_colour;
  if (q.target) res.certificate.target = q.target;
  return res;
}

inline int min_moves(const ColouredGraph& g, std::optional<Colour> d = std::nullopt, const SolveOptions& opts = {}) {
  auto r = min_moves_exact({g, std::nullopt, d}, opts);
  if (!r.exact) throw SolverError(SolverError::Kind::InvalidQuery, "state budget exceeded");
  return r.moves;
}

// ---------------------------------------------------------------------------
// Paths

// Interval table over a colour sequence (consecutive duplicates are merged
// first): f(i,j,d) = min moves to make runs i..j monochromatic in d, with
//   f(i,i,d) = [colour(i) != d]
//   f(i,j,d) = min( min_{d' != d} f(i,j,d') + 1, min_{i<=k<j} f(i,k,d) + f(k+1,j,d) ).
class PathTable {
public:
  PathTable(std::span<const Colour> sequence, int c) : c_(c) {
    for (Colour x : sequence)
      if (runs_.empty() || runs_.back() != x) runs_.push_back(x);
    k_ = static_cast<int>(runs_.size());
    f_.assign(static_cast<std::size_t>(k_) * k_ * c_, 0);
    std::vector<int> split(c_);
    for (int i = 0; i < k_; ++i)
      for (Colour d = 0; d < c_; ++d) at(i, i, d) = runs_[i] != d;
    for (int len = 2; len <= k_; ++len) {
      for (int i = 0; i + len <= k_; ++i) {
        int j = i + len - 1;
        std::fill(split.begin(), split.end(), std::numeric_limits<int>::max());
        for (int m = i; m < j; ++m) {
          const int* left = &f_[index(i, m, 0)];
          const int* right = &f_[index(m + 1, j, 0)];
          for (Colour d = 0; d < c_; ++d) split[d] = std::min(split[d], left[d] + right[d]);
        }
        int best = *std::min_element(split.begin(), split.end());
        for (Colour d = 0; d < c_; ++d) at(i, j, d) = std::min(split[d], best + 1);
      }
    }
  }

  int runs() const { return k_; }
  Colour run_colour(int i) const { return runs_[i]; }
  int operator()(int i, int j, Colour d) const { return f_[index(i, j, d)]; }
  int to_colour(Colour d) const { return (*this)(0, k_ - 1, d); }
  int free_minimum() const {
    int best = std::numeric_limits<int>::max();
    for (Colour d = 0; d < c_; ++d) best = std::min(best, to_colour(d));
    return best;
  }

private:
  std::size_t index(int i, int j, Colour d) const { return (static_cast<std::size_t>(i) * k_ + j) * c_ + d; }
  int& at(int i, int j, Colour d) { return f_[index(i, j, d)]; }

  int c_;
  int k_ = 0;
  std::vector<Colour> runs_;
  std::vector<int> f_;
};

inline int path_min_moves(std::span<const Colour> sequence, int c, std::optional<Colour> d = std::nullopt) {
  PathTable t(sequence, c);
  return d ? t.to_colour(*d) : t.free_minimum();
}

// Vertex order of g's contraction when it is a path (lowest-id endpoint first).
inline std::optional<std::vector<Vertex>> path_order(const Graph& g) {
  const int k = g.size();
  if (static_cast<int>(g.edge_count()) != k - 1) return std::nullopt;
  Vertex start = -1;
  for (Vertex v = 0; v < k; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) <= 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  std::vector<Vertex> order{start};
  Vertex prev = -1;
  while (static_cast<int>(order.size()) < k) {
    Vertex cur = order.back();
    Vertex next = -1;
    for (Vertex u : g.neighbours(cur))
      if (u != prev) next = u;
    if (next < 0) return std::nullopt;
    prev = cur;
    order.push_back(next);
  }
  return order;
}

inline std::optional<std::vector<Vertex>> cycle_order(const Graph& g) {
  const int k = g.size();
  if (k < 3 || static_cast<int>(g.edge_count()) != k) return std::nullopt;
  for (Vertex v = 0; v < k; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  std::vector<Vertex> order{0};
  Vertex prev = -1;
  while (static_cast<int>(order.size()) < k) {
    Vertex cur = order.back();
    auto nb = g.neighbours(cur);
    Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == 0) return std::nullopt;
    prev = cur;
    order.push_back(next);
  }
  if (!g.has_edge(order.back(), 0)) return std::nullopt;
  return order;
}

inline std::vector<Colour> path_colour_sequence(const ColouredGraph& p) {
  Contraction con = contract(p);
  auto order = path_order(con.graph.shape());
  if (!order) throw SolverError(SolverError::Kind::NotAPath, "graph is not a path after contraction");
  std::vector<Colour> seq;
  for (Vertex v : *order) seq.push_back(con.graph.colour(v));
  return seq;
}

inline int path_min_moves(const ColouredGraph& p, std::optional<Colour> d = std::nullopt) {
  return path_min_moves(path_colour_sequence(p), p.num_colours(), d);
}

namespace detail {

// Drives the interval table on the live colours of positions[lo..hi]. On a
// path, moves played inside a segment leave the segment's own colours exactly
// as they would evolve in isolation; neighbours dragged along only ever end in
// the target colour, which never raises the table value of a later segment.
inline void run_path_plan(Recorder& rec, const std::vector<Vertex>& positions, int lo, int hi, Colour d) {
  FloodState& s = rec.state();
  std::vector<Colour> seq;
  std::vector<int> run_start;
  for (int p = lo; p <= hi; ++p) {
    Colour x = s.colour_of(positions[p]);
    if (seq.empty() || seq.back() != x) {
      seq.push_back(x);
      run_start.push_back(p);
    }
  }
  const int r = static_cast<int>(seq.size());
  run_start.push_back(hi + 1);
  PathTable t(seq, s.num_colours());
  const int value = t.to_colour(d);
  if (value == 0) return;
  if (r == 1) {
    rec.play(positions[lo], d);
    return;
  }
  for (int m = 0; m + 1 < r; ++m)
    if (t(0, m, d) + t(m + 1, r - 1, d) == value) {
      run_path_plan(rec, positions, lo, run_start[m + 1] - 1, d);
      run_path_plan(rec, positions, run_start[m + 1], hi, d);
      return;
    }
  for (Colour x = 0; x < s.num_colours(); ++x)
    if (x != d && t.to_colour(x) + 1 == value) {
      run_path_plan(rec, positions, lo, hi, x);
      rec.play(positions[lo], d);
      return;
    }
  throw std::logic_error("path table has no witness decision");
}

}  // namespace detail

// Optimal certificate for a graph whose contraction is a path.
inline Certificate path_certificate(const ColouredGraph& p, std::optional<Colour> d = std::nullopt) {
  Contraction con = contract(p);
  auto order = path_order(con.graph.shape());
  if (!order) throw SolverError(SolverError::Kind::NotAPath, "graph is not a path after contraction");
  std::vector<Colour> seq;
  std::vector<Vertex> positions;
  for (Vertex v : *order) {
    seq.push_back(con.graph.colour(v));
    positions.push_back(con.representative[v]);
  }
  Colour target = 0;
  if (d) {
    target = *d;
  } else {
    PathTable t(seq, p.num_colours());
    int best = std::numeric_limits<int>::max();
    for (Colour x = 0; x < p.num_colours(); ++x)
      if (t.to_colour(x) < best) {
        best = t.to_colour(x);
        target = x;
      }
  }
  FloodState s(p);
  Recorder rec(s);
  detail::run_path_plan(rec, positions, 0, static_cast<int>(positions.size()) - 1, target);
  Certificate cert = rec.certificate();
  cert.final_colour = target;
  return cert;
}

// Minimum over the spanning paths of the cycle (every spanning tree of a cycle
// is a path); contracted graphs that are paths are delegated.
inline int cycle_min_moves(const ColouredGraph& cyc, std::optional<Colour> d = std::nullopt) {
  Contraction con = contract(cyc);
  if (auto po = path_order(con.graph.shape())) {
    std::vector<Colour> seq;
    for (Vertex v : *po) seq.push_back(con.graph.colour(v));
    return path_min_moves(seq, cyc.num_colours(), d);
  }
  auto order = cycle_order(con.graph.shape());
  if (!order) throw SolverError(SolverError::Kind::NotACycle, "graph is not a cycle after contraction");
  const int k = static_cast<int>(order->size());
  int best = std::numeric_limits<int>::max();
  std::vector<Colour> seq(k);
  for (int cut = 0; cut < k; ++cut) {
    for (int i = 0; i < k; ++i) seq[i] = con.graph.colour((*order)[(cut + 1 + i) % k]);
    best = std::min(best, path_min_moves(seq, cyc.num_colours(), d));
  }
  return best;
}

}  // namespace floodit
