#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"

namespace floodit {

class GeneratorError : public std::runtime_error {
public:
  enum class Kind { InvalidParams, IncompatibleSpec };
  GeneratorError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

enum class BaseShape { Path, Cycle };

// Ordered vertex classes V_1..V_t of a blow-up; stored 0-based.
struct BlowupStructure {
  BaseShape base = BaseShape::Path;
  std::vector<std::vector<Vertex>> classes;

  int t() const { return static_cast<int>(classes.size()); }
  int vertex_count() const {
    int n = 0;
    for (const auto& cl : classes) n += static_cast<int>(cl.size());
    return n;
  }
  std::vector<int> class_of() const {
    std::vector<int> out(vertex_count(), -1);
    for (int i = 0; i < t(); ++i)
      for (Vertex v : classes[i]) out[v] = i;
    return out;
  }
  BlowupStructure reversed() const {
    BlowupStructure r = *this;
    std::reverse(r.classes.begin(), r.classes.end());
    return r;
  }
};

enum class FamilyKind { Path, Cycle, Star, BlowupPath, BlowupCycle, TreeTcr, Grid, RandomConnected };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int n = 0;               // path, cycle, random_connected; leaves for star; columns for grid
  int k = 0;               // grid rows
  int c = 0;               // tree_Tcr
  int r = 0;               // tree_Tcr
  std::vector<int> sizes;  // blow-up class sizes
  std::uint64_t seed = 0;
  double edge_probability = 0.5;
};

struct Family {
  FamilySpec spec;
  std::shared_ptr<const Graph> graph;
  std::optional<BlowupStructure> blowup;
};

namespace detail {

[[noreturn]] inline void invalid(const std::string& what) { throw GeneratorError(GeneratorError::Kind::InvalidParams, what); }
[[noreturn]] inline void incompatible(const std::string& what) {
  throw GeneratorError(GeneratorError::Kind::IncompatibleSpec, what);
}

inline std::vector<Edge> path_edges(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return es;
}

inline Family blowup(FamilySpec spec, BaseShape base) {
  const auto& sizes = spec.sizes;
  const int t = static_cast<int>(sizes.size());
  if (t < 1) invalid("blow-up needs at least one class");
  if (base == BaseShape::Cycle && t < 3) invalid("cycle blow-up needs at least three classes");
  BlowupStructure b{base, {}};
  Vertex next = 0;
  for (int s : sizes) {
    if (s < 1) invalid("class sizes must be positive");
    std::vector<Vertex> cl(s);
    std::iota(cl.begin(), cl.end(), next);
    next += s;
    b.classes.push_back(std::move(cl));
  }
  std::vector<Edge> es;
  auto join = [&](int i, int j) {
    for (Vertex u : b.classes[i])
      for (Vertex v : b.classes[j]) es.emplace_back(u, v);
  };
  for (int i = 0; i + 1 < t; ++i) join(i, i + 1);
  if (base == BaseShape::Cycle) join(t - 1, 0);
  auto g = std::make_shared<const Graph>(next, std::move(es));
  return {std::move(spec), std::move(g), std::move(b)};
}

}  // namespace detail

inline std::shared_ptr<const Graph> path_graph(int n) {
  if (n < 1) detail::invalid("path needs n >= 1");
  return std::make_shared<const Graph>(n, detail::path_edges(n));
}

inline std::shared_ptr<const Graph> cycle_graph(int n) {
  if (n < 3) detail::invalid("cycle needs n >= 3");
  auto es = detail::path_edges(n);
  es.emplace_back(n - 1, 0);
  return std::make_shared<const Graph>(n, std::move(es));
}

// K_{1,m}: centre 0, leaves 1..m.
inline std::shared_ptr<const Graph> star_graph(int m) {
  if (m < 0) detail::invalid("star needs m >= 0");
  std::vector<Edge> es;
  for (int i = 1; i <= m; ++i) es.emplace_back(0, i);
  return std::make_shared<const Graph>(m + 1, std::move(es));
}

inline int tree_leg_count(int c, int r) {
  long legs = r;
  for (int i = 0; i <= r; ++i) legs *= c - 1;
  if (legs > 1'000'000) detail::invalid("T_{c,r} too large");
  return static_cast<int>(legs);
}

// T_{c,r}: centre 0 and r(c-1)^{r+1} legs of r vertices each; leg L holds
// vertices 1 + L*r .. (L+1)*r, listed outward from the centre.
inline std::shared_ptr<const Graph> tree_Tcr(int c, int r) {
  if (c < 2 || r < 1) detail::invalid("T_{c,r} needs c >= 2 and r >= 1");
  const int legs = tree_leg_count(c, r);
  std::vector<Edge> es;
  for (int leg = 0; leg < legs; ++leg) {
    Vertex first = 1 + leg * r;
    es.emplace_back(0, first);
    for (int j = 1; j < r; ++j) es.emplace_back(first + j - 1, first + j);
  }
  return std::make_shared<const Graph>(1 + legs * r, std::move(es));
}

// k x n grid, vertex (i, j) = i*n + j.
inline std::shared_ptr<const Graph> grid_graph(int k, int n) {
  if (k < 1 || n < 1) detail::invalid("grid needs k, n >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) es.emplace_back(i * n + j, i * n + j + 1);
      if (i + 1 < k) es.emplace_back(i * n + j, (i + 1) * n + j);
    }
  return std::make_shared<const Graph>(k * n, std::move(es));
}

// Rejection sampling from G(n, p), so p = 1/2 is uniform over labelled
// connected graphs. Sparse requests fall back to a random tree plus G(n, p).
inline std::shared_ptr<const Graph> random_connected_graph(int n, std::uint64_t seed, double p = 0.5) {
  if (n < 1) detail::invalid("random graph needs n >= 1");
  if (p < 0 || p > 1) detail::invalid("edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    auto g = std::make_shared<const Graph>(n, std::move(es));
    if (g->connected()) return g;
  }
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return std::make_shared<const Graph>(n, std::move(es));
}

inline Family blowup_path(std::vector<int> sizes) {
  FamilySpec spec{FamilyKind::BlowupPath};
  spec.sizes = std::move(sizes);
  return detail::blowup(std::move(spec), BaseShape::Path);
}

inline Family blowup_cycle(std::vector<int> sizes) {
  FamilySpec spec{FamilyKind::BlowupCycle};
  spec.sizes = std::move(sizes);
  return detail::blowup(std::move(spec), BaseShape::Cycle);
}

inline Family gen_graph(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Path: return {spec, path_graph(spec.n), std::nullopt};
    case FamilyKind::Cycle: return {spec, cycle_graph(spec.n), std::nullopt};
    case FamilyKind::Star: return {spec, star_graph(spec.n), std::nullopt};
    case FamilyKind::BlowupPath: return detail::blowup(spec, BaseShape::Path);
    case FamilyKind::BlowupCycle: return detail::blowup(spec, BaseShape::Cycle);
    case FamilyKind::TreeTcr: return {spec, tree_Tcr(spec.c, spec.r), std::nullopt};
    case FamilyKind::Grid: return {spec, grid_graph(spec.k, spec.n), std::nullopt};
    case FamilyKind::RandomConnected: return {spec, random_connected_graph(spec.n, spec.seed, spec.edge_probability), std::nullopt};
  }
  detail::invalid("unknown family");
}

// ---------------------------------------------------------------------------
// Colourings

// r-shifted rainbow sequence: position k (0-based) gets (k - r) mod c.
inline std::vector<Colour> rainbow_sequence(int n, int c, int shift = 0) {
  if (c < 1 || n < 0) detail::invalid("rainbow needs c >= 1");
  std::vector<Colour> out(n);
  for (int k = 0; k < n; ++k) out[k] = static_cast<Colour>((((k - shift) % c) + c) % c);
  return out;
}

// Independent check of the rainbow definition: some bijection pi with
// colour(k) = pi((k - shift) mod c) for every position k, for some shift.
inline bool is_rainbow_sequence(std::span<const Colour> seq, int c) {
  const int n = static_cast<int>(seq.size());
  for (int shift = 0; shift < c; ++shift) {
    std::vector<Colour> pi(c, -1);
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      int slot = (((k - shift) % c) + c) % c;
      if (pi[slot] < 0) pi[slot] = seq[k];
      else ok = pi[slot] == seq[k];
    }
    std::vector<Colour> used;
    for (Colour x : pi)
      if (x >= 0) used.push_back(x);
    std::sort(used.begin(), used.end());
    if (ok && std::adjacent_find(used.begin(), used.end()) == used.end()) return true;
  }
  return false;
}

// Rainbow around a cycle: a proper colouring that is rainbow along the path
// left after deleting the wrap edge. None exists when n = 1 (mod c).
inline std::vector<Colour> cycle_rainbow_sequence(int n, int c, int shift = 0) {
  if (n < 3) detail::invalid("cycle needs n >= 3");
  if (c < 2 || n % c == 1)
    throw GeneratorError(GeneratorError::Kind::IncompatibleSpec,
                         "no proper rainbow colouring of a cycle with n = 1 (mod c)");
  return rainbow_sequence(n, c, shift);
}

inline std::vector<Colour> class_colouring(const BlowupStructure& b, std::span<const Colour> class_colours) {
  if (static_cast<int>(class_colours.size()) != b.t())
    throw GeneratorError(GeneratorError::Kind::IncompatibleSpec, "one colour per class required");
  std::vector<Colour> out(b.vertex_count());
  for (int i = 0; i < b.t(); ++i)
    for (Vertex v : b.classes[i]) out[v] = class_colours[i];
  return out;
}

// S_{c,r}: length-r sequences with first entry != 0 (the centre colour) and no
// two consecutive entries equal, in lexicographic order.
inline std::vector<std::vector<Colour>> scr_sequences(int c, int r) {
  std::vector<std::vector<Colour>> out;
  std::vector<Colour> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    Colour prev = cur.empty() ? 0 : cur.back();
    for (Colour x = 0; x < c; ++x) {
      if (x == prev) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Centre gets 0; the legs are dealt out (c-1)r per sequence of S_{c,r}.
inline std::vector<Colour> scr_tree_colouring(int c, int r) {
  const int legs = tree_leg_count(c, r);
  auto seqs = scr_sequences(c, r);
  std::vector<Colour> out(1 + legs * r, 0);
  const int copies = (c - 1) * r;
  for (int leg = 0; leg < legs; ++leg) {
    const auto& sigma = seqs[leg / copies];
    for (int j = 0; j < r; ++j) out[1 + leg * r + j] = sigma[j];
  }
  return out;
}

// t classes of two vertices; class i (1-based) gets (2i-1) mod c and 2i mod c.
inline std::pair<Family, std::vector<Colour>> remark_bichromatic(int t, int c) {
  if (t < 1 || c < 2) detail::invalid("bichromatic colouring needs t >= 1, c >= 2");
  Family f = blowup_path(std::vector<int>(t, 2));
  std::vector<Colour> col;
  for (int i = 1; i <= t; ++i) {
    col.push_back((2 * i - 1) % c);
    col.push_back((2 * i) % c);
  }
  return {std::move(f), std::move(col)};
}

inline std::vector<Colour> random_surjective_colouring(int n, int c, std::uint64_t seed) {
  if (c < 1 || c > n) throw GeneratorError(GeneratorError::Kind::IncompatibleSpec, "surjective colouring needs 1 <= c <= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Colour> pick(0, c - 1);
  std::vector<Colour> col(n);
  while (true) {
    for (auto& x : col) x = pick(rng);
    if (distinct_colours(col) == c) return col;
  }
}

// Uniform proper colour sequence (no two consecutive entries equal).
inline std::vector<Colour> random_proper_sequence(int t, int c, std::uint64_t seed) {
  if (c < 2 && t > 1) detail::invalid("proper sequence needs c >= 2");
  std::mt19937_64 rng(seed);
  std::vector<Colour> out;
  for (int i = 0; i < t; ++i) {
    if (out.empty()) {
      out.push_back(std::uniform_int_distribution<Colour>(0, c - 1)(rng));
    } else {
      Colour x = std::uniform_int_distribution<Colour>(0, c - 2)(rng);
      out.push_back(x >= out.back() ? x + 1 : x);
    }
  }
  return out;
}

// A proper class colouring in which exactly theta classes (chosen among those
// with at least two vertices) are made non-constant by recolouring their last vertex.
inline std::vector<Colour> random_blowup_colouring(const BlowupStructure& b, int c, int theta, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto seq = random_proper_sequence(b.t(), c, rng());
  auto col = class_colouring(b, seq);
  std::vector<int> splittable;
  for (int i = 0; i < b.t(); ++i)
    if (b.classes[i].size() >= 2) splittable.push_back(i);
  if (theta < 0 || theta > static_cast<int>(splittable.size()))
    throw GeneratorError(GeneratorError::Kind::IncompatibleSpec, "not enough classes of size >= 2 for theta");
  std::shuffle(splittable.begin(), splittable.end(), rng);
  for (int j = 0; j < theta; ++j) {
    const auto& cl = b.classes[splittable[j]];
    Colour x = std::uniform_int_distribution<Colour>(0, c - 2)(rng);
    col[cl.back()] = x >= seq[splittable[j]] ? x + 1 : x;
  }
  return col;
}

enum class ColouringKind { Rainbow, ShiftedRainbow, CycleRainbow, PathColouring, ScrTree, RemarkBichromatic, RandomSurjective };

struct ColouringSpec {
  ColouringKind kind = ColouringKind::Rainbow;
  int c = 2;
  int shift = 0;
  std::vector<Colour> class_colours;  // path colouring f
  std::uint64_t seed = 0;
};

// Rainbow-type colourings follow the vertex order of paths and cycles and the
// class order of blow-ups.
inline std::vector<Colour> gen_colouring(const Family& f, const ColouringSpec& spec) {
  using detail::incompatible;
  const int n = f.graph->size();
  const bool linear = f.spec.kind == FamilyKind::Path || f.spec.kind == FamilyKind::Cycle;
  switch (spec.kind) {
    case ColouringKind::Rainbow:
    case ColouringKind::ShiftedRainbow: {
      int shift = spec.kind == ColouringKind::Rainbow ? 0 : spec.shift;
      if (f.blowup) return class_colouring(*f.blowup, rainbow_sequence(f.blowup->t(), spec.c, shift));
      if (!linear) incompatible("rainbow colouring needs a path, cycle or blow-up");
      if (f.spec.kind == FamilyKind::Cycle) return cycle_rainbow_sequence(n, spec.c, shift);
      return rainbow_sequence(n, spec.c, shift);
    }
    case ColouringKind::CycleRainbow:
      if (f.spec.kind == FamilyKind::Cycle) return cycle_rainbow_sequence(n, spec.c, spec.shift);
      if (f.blowup && f.blowup->base == BaseShape::Cycle)
        return class_colouring(*f.blowup, cycle_rainbow_sequence(f.blowup->t(), spec.c, spec.shift));
      incompatible("cycle rainbow colouring needs a cycle or cycle blow-up");
    case ColouringKind::PathColouring:
      if (f.blowup) return class_colouring(*f.blowup, spec.class_colours);
      if (static_cast<int>(spec.class_colours.size()) != n) incompatible("one colour per vertex required");
      return spec.class_colours;
    case ColouringKind::ScrTree:
      if (f.spec.kind != FamilyKind::TreeTcr) incompatible("S_{c,r} colouring needs T_{c,r}");
      if (spec.c != f.spec.c) incompatible("S_{c,r} colouring must use the tree's c");
      return scr_tree_colouring(f.spec.c, f.spec.r);
    case ColouringKind::RemarkBichromatic: {
      if (!f.blowup || f.blowup->base != BaseShape::Path) incompatible("bichromatic colouring needs a path blow-up");
      for (const auto& cl : f.blowup->classes)
        if (cl.size() != 2) incompatible("bichromatic colouring needs classes of size 2");
      return remark_bichromatic(f.blowup->t(), spec.c).second;
    }
    case ColouringKind::RandomSurjective: return random_surjective_colouring(n, spec.c, spec.seed);
  }
  incompatible("unknown colouring kind");
}

// ---------------------------------------------------------------------------
// Small graphs up to isomorphism

namespace detail {

// Canonical code: the lexicographically smallest upper-triangle adjacency bit
// string over relabellings that respect a vertex-invariant ordering.
inline std::uint32_t canonical_code(int n, const std::vector<std::uint32_t>& adj) {
  std::vector<std::pair<std::vector<int>, Vertex>> inv(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);
  for (int v = 0; v < n; ++v) {
    std::vector<int> key{deg[v]};
    std::vector<int> nd;
    for (int u = 0; u < n; ++u)
      if (adj[v] >> u & 1) nd.push_back(deg[u]);
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    inv[v] = {std::move(key), v};
  }
  std::sort(inv.begin(), inv.end());
  std::vector<int> cell_start;
  for (int i = 0; i < n; ++i)
    if (i == 0 || inv[i].first != inv[i - 1].first) cell_start.push_back(i);
  cell_start.push_back(n);

  std::vector<Vertex> order(n);  // order[newlabel] = old vertex
  for (int i = 0; i < n; ++i) order[i] = inv[i].second;
  std::uint32_t best = UINT32_MAX;
  auto encode = [&] {
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (adj[order[i]] >> order[j] & 1) code |= 1u << bit;
    return code;
  };
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell + 1 == cell_start.size()) {
      best = std::min(best, encode());
      return;
    }
    auto first = order.begin() + cell_start[cell];
    auto last = order.begin() + cell_start[cell + 1];
    std::sort(first, last);
    do self(self, cell + 1);
    while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

inline Graph graph_from_code(int n, std::uint32_t code) {
  std::vector<Edge> es;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (code >> bit & 1) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

}  // namespace detail

// One connected graph per isomorphism class on 1..n_max vertices, ordered by
// vertex count then canonical code. Every connected graph on n vertices has a
// vertex whose removal leaves it connected, so extending the classes on n-1
// vertices by one vertex with every nonempty neighbourhood reaches all of them.
inline std::vector<Graph> enumerate_small_graphs(int n_max) {
  if (n_max < 1 || n_max > 7) detail::invalid("enumerate_small_graphs supports 1 <= n_max <= 7");
  std::vector<Graph> out{Graph(1, {})};
  std::vector<std::uint32_t> level{0};
  for (int n = 2; n <= n_max; ++n) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : level) {
      Graph g = detail::graph_from_code(n - 1, code);
      std::vector<std::uint32_t> adj(n, 0);
      for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
      }
      for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
        auto ext = adj;
        ext[n - 1] = nb;
        for (int u = 0; u < n - 1; ++u)
          if (nb >> u & 1) ext[u] |= 1u << (n - 1);
        next.insert(detail::canonical_code(n, ext));
      }
    }
    level.assign(next.begin(), next.end());
    for (std::uint32_t code : level) out.push_back(detail::graph_from_code(n, code));
  }
  return out;
}

}  // namespace floodit
