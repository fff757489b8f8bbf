#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <deque>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "engine.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "solvers.hpp"

namespace floodit {

class StrategyError : public std::runtime_error {
public:
  enum class Kind { PreconditionViolated, NotAPathColouring, NotATransversal };
  StrategyError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

namespace detail {

[[noreturn]] inline void precondition(const std::string& what) {
  throw StrategyError(StrategyError::Kind::PreconditionViolated, what);
}

inline long ipow(long base, int e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Checks that g is exactly the blow-up described by b.
inline void validate_blowup(const Graph& g, const BlowupStructure& b) {
  const int t = b.t();
  if (t < 1) precondition("blow-up needs at least one class");
  if (b.base == BaseShape::Cycle && t < 3) precondition("cycle blow-up needs at least three classes");
  if (b.vertex_count() != g.size()) precondition("classes do not cover the graph");
  std::vector<int> cls(g.size(), -1);
  for (int i = 0; i < t; ++i) {
    if (b.classes[i].empty()) precondition("empty vertex class");
    for (Vertex v : b.classes[i]) {
      if (v < 0 || v >= g.size() || cls[v] >= 0) precondition("classes do not partition the vertices");
      cls[v] = i;
    }
  }
  auto adjacent = [&](int i, int j) {
    int gap = std::abs(i - j);
    return gap == 1 || (b.base == BaseShape::Cycle && gap == t - 1);
  };
  std::size_t expected = 0;
  for (int i = 0; i + 1 < t; ++i) expected += b.classes[i].size() * b.classes[i + 1].size();
  if (b.base == BaseShape::Cycle) expected += b.classes[0].size() * b.classes[t - 1].size();
  for (auto [u, v] : g.edges())
    if (!adjacent(cls[u], cls[v])) precondition("edge between non-consecutive classes");
  if (g.edge_count() != expected) precondition("consecutive classes are not fully joined");
}

// The classes of a blow-up as a left-to-right row of positions, read against a
// live game. Consecutive constant positions of one colour are merged; a merged
// position is a single component ("unit"). Strategies play at the first vertex
// of a position.
struct Lane {
  struct Position {
    std::vector<Vertex> vs;
    bool unit = false;
  };

  Recorder* rec = nullptr;
  std::deque<Position> pos;

  Lane(Recorder& r, const std::vector<std::vector<Vertex>>& classes) : rec(&r) {
    for (const auto& cl : classes) pos.push_back({cl, cl.size() == 1});
  }
  Lane(Recorder& r, std::deque<Position> p) : rec(&r), pos(std::move(p)) {}

  const FloodState& state() const { return rec->state(); }
  int size() const { return static_cast<int>(pos.size()); }
  Vertex front(int p) const { return pos[p].vs.front(); }
  Colour colour(int p) const { return state().colour_of(front(p)); }
  bool constant(int p) const {
    if (pos[p].unit) return true;
    Colour x = colour(p);
    for (Vertex v : pos[p].vs)
      if (state().colour_of(v) != x) return false;
    return true;
  }
  std::vector<Colour> colours() const {
    std::vector<Colour> out(size());
    for (int p = 0; p < size(); ++p) out[p] = colour(p);
    return out;
  }
  std::vector<Vertex> fronts() const {
    std::vector<Vertex> out(size());
    for (int p = 0; p < size(); ++p) out[p] = front(p);
    return out;
  }
  int theta() const {
    int k = 0;
    for (int p = 0; p < size(); ++p) k += !constant(p);
    return k;
  }

  void play(int p, Colour d) { rec->play(front(p), d); }
  void sweep(int p, const std::vector<Colour>& colours) {
    Vertex v = front(p);
    for (Colour d : colours) rec->play(v, d);
  }

  // Merge equal neighbours among positions lo..hi (clamped).
  void rebuild(int lo = 0, int hi = INT_MAX) {
    int p = std::max(lo, 1);
    while (p < size() && p <= hi) {
      if (constant(p - 1) && constant(p) && colour(p - 1) == colour(p)) {
        auto& into = pos[p - 1].vs;
        into.insert(into.end(), pos[p].vs.begin(), pos[p].vs.end());
        pos[p - 1].unit = true;
        pos.erase(pos.begin() + p);
        if (hi != INT_MAX) --hi;
      } else {
        ++p;
      }
    }
  }

  int locate(Vertex v) const {
    for (int p = 0; p < size(); ++p)
      if (std::find(pos[p].vs.begin(), pos[p].vs.end(), v) != pos[p].vs.end()) return p;
    return -1;
  }

  bool flooded() const {
    Vertex anchor = front(0);
    for (const auto& ps : pos)
      for (Vertex v : ps.vs)
        if (!state().same_component(v, anchor)) return false;
    return true;
  }
};

inline std::vector<Colour> colours_at(const std::vector<Colour>& f, int from, int to) {
  std::vector<Colour> out;
  if (from <= to)
    for (int j = from; j <= to; ++j) out.push_back(f[j]);
  else
    for (int j = from; j >= to; --j) out.push_back(f[j]);
  return out;
}

// Recolour every run of q that does not have the most common run colour.
// Runs never split, so this costs at most (#runs - #runs of that colour).
inline void run_greedy(Recorder& rec, const std::vector<Vertex>& q) {
  const FloodState& s = rec.state();
  std::vector<int> count(s.num_colours(), 0);
  std::vector<Vertex> starts;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (i == 0 || s.colour_of(q[i]) != s.colour_of(q[i - 1])) {
      starts.push_back(q[i]);
      ++count[s.colour_of(q[i])];
    }
  Colour d = static_cast<Colour>(std::max_element(count.begin(), count.end()) - count.begin());
  for (Vertex v : starts)
    if (s.colour_of(v) != d) rec.play(v, d);
}

inline int run_count(const FloodState& s, const std::vector<Vertex>& q) {
  int r = 0;
  for (std::size_t i = 0; i < q.size(); ++i) r += i == 0 || s.colour_of(q[i]) != s.colour_of(q[i - 1]);
  return r;
}

// Link every vertex of the transversal q: the cheaper of the path-table plan
// (played live) and run_greedy. Long transversals use run_greedy alone.
inline void link_transversal(Recorder& rec, const std::vector<Vertex>& q) {
  constexpr int kTableLimit = 60;
  if (run_count(rec.state(), q) > kTableLimit) {
    run_greedy(rec, q);
    return;
  }
  auto simulate = [&](auto&& plan) {
    FloodState copy = rec.state();
    Recorder r(copy);
    plan(r);
    return r.moves();
  };
  auto greedy = simulate([&](Recorder& r) { run_greedy(r, q); });
  auto table = simulate([&](Recorder& r) {
    const FloodState& s = r.state();
    std::vector<Colour> seq;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (i == 0 || s.colour_of(q[i]) != seq.back()) seq.push_back(s.colour_of(q[i]));
    PathTable t(seq, s.num_colours());
    Colour best = 0;
    for (Colour x = 1; x < s.num_colours(); ++x)
      if (t.to_colour(x) < t.to_colour(best)) best = x;
    run_path_plan(r, q, 0, static_cast<int>(q.size()) - 1, best);
  });
  FloodState probe = rec.state();
  for (const auto& m : table) probe.apply(m);
  const auto& chosen = probe.linked(q) && table.size() < greedy.size() ? table : greedy;
  for (const auto& m : chosen) rec.play(m.vertex, m.colour);
}

// Once the component A of anchor meets every position of the lane, each other
// lane vertex is adjacent to A; giving A each remaining colour floods the lane
// with at most c - 1 moves.
inline void absorb_remaining(Lane& lane, Vertex anchor) {
  const FloodState& s = lane.state();
  while (true) {
    Colour next = s.num_colours();
    for (const auto& ps : lane.pos)
      for (Vertex v : ps.vs)
        if (!s.same_component(v, anchor)) next = std::min(next, s.colour_of(v));
    if (next == s.num_colours()) return;
    lane.rec->play(anchor, next);
  }
}

inline void finish_dominating(Lane& lane, const std::vector<Vertex>& q) {
  link_transversal(*lane.rec, q);
  absorb_remaining(lane, q.front());
}

inline void finish_dominating(Lane& lane) { finish_dominating(lane, lane.fronts()); }

// Rainbow lane: the induction peels 2c classes with 2c-2 moves, then one of
// three base cases finishes. g(j) is the colour of the j-th position (1-based).
inline void rainbow_lane(Lane& lane, int c) {
  while (lane.size() > 1) {
    const int t = lane.size();
    if (t < c + 2) {
      finish_dominating(lane);
      return;
    }
    std::vector<Colour> f = lane.colours();
    auto g = [&](int from, int to) { return colours_at(f, from - 1, to - 1); };
    auto cat = [](std::vector<Colour> a, const std::vector<Colour>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    if (t >= 3 * c + 2) {
      lane.sweep(c, cat(c + 2 <= 2 * c ? g(c + 2, 2 * c) : std::vector<Colour>{}, g(c - 1, 1)));
      lane.rebuild(0, 2 * c + 2);
      continue;
    }
    if (t <= 2 * c) {
      lane.sweep(1, g(3, t));
    } else if (t <= 3 * c) {
      auto seq = c + 2 <= 2 * c ? g(c + 2, 2 * c) : std::vector<Colour>{};
      if (c >= 3) seq = cat(seq, g(c - 1, 2));
      seq = cat(seq, g(1, 1));
      if (2 * c + 2 <= t) seq = cat(seq, g(2 * c + 2, t));
      lane.sweep(c, seq);
    } else {
      auto seq = cat(g(c + 3, 2 * c + 1), g(c, c));
      if (c >= 3) seq = cat(seq, g(c - 1, 2));
      seq = cat(seq, g(2 * c + 3, 3 * c + 1));
      lane.sweep(c + 1, seq);
    }
    lane.rebuild();
    break;
  }
  if (!lane.flooded()) finish_dominating(lane);
}

}  // namespace detail

inline Certificate finished(const Recorder& rec) {
  Certificate cert = rec.certificate();
  if (rec.state().flooded()) cert.final_colour = rec.state().colour_of(0);
  return cert;
}

// Number of classes on which the colouring is not constant.
inline int theta(const ColouredGraph& g, const BlowupStructure& b) {
  int k = 0;
  for (const auto& cl : b.classes)
    k += std::any_of(cl.begin(), cl.end(), [&](Vertex v) { return g.colour(v) != g.colour(cl.front()); });
  return k;
}

// Play at a centre, absorbing one BFS layer at a time.
inline Certificate radius_strategy(const ColouredGraph& g) {
  const Graph& shape = g.shape();
  const int n = g.size();
  Vertex centre = 0;
  int best = INT_MAX;
  std::vector<std::vector<Vertex>> best_layers;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> dist(n, -1);
    std::vector<std::vector<Vertex>> layers{{v}};
    dist[v] = 0;
    std::queue<Vertex> bfs;
    bfs.push(v);
    while (!bfs.empty()) {
      Vertex u = bfs.front();
      bfs.pop();
      for (Vertex w : shape.neighbours(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          if (static_cast<int>(layers.size()) <= dist[w]) layers.emplace_back();
          layers[dist[w]].push_back(w);
          bfs.push(w);
        }
    }
    int ecc = static_cast<int>(layers.size()) - 1;
    if (ecc < best) {
      best = ecc;
      centre = v;
      best_layers = std::move(layers);
    }
  }
  FloodState s(g);
  Recorder rec(s);
  for (std::size_t i = 1; i < best_layers.size(); ++i) {
    while (true) {
      Colour next = g.num_colours();
      for (Vertex u : best_layers[i])
        if (!s.same_component(u, centre)) next = std::min(next, s.colour_of(u));
      if (next == g.num_colours()) break;
      rec.play(centre, next);
    }
  }
  return finished(rec);
}

// Requires a blow-up of a path coloured by a rainbow class sequence.
inline Certificate rainbow_blowup_strategy(const ColouredGraph& g, const BlowupStructure& b) {
  detail::validate_blowup(g.shape(), b);
  const int c = g.num_colours();
  if (b.base != BaseShape::Path) detail::precondition("rainbow strategy needs a path blow-up");
  if (b.t() < c + 2) detail::precondition("rainbow strategy needs t >= c + 2");
  if (theta(g, b) != 0) detail::precondition("colouring is not constant on classes");
  std::vector<Colour> f;
  for (const auto& cl : b.classes) f.push_back(g.colour(cl.front()));
  if (!is_rainbow_sequence(f, c)) detail::precondition("class colours are not rainbow");
  FloodState s(g);
  Recorder rec(s);
  detail::Lane lane(rec, b.classes);
  detail::rainbow_lane(lane, c);
  return finished(rec);
}

// ---------------------------------------------------------------------------
// Greedy rainbow decomposition

struct GrdSegment {
  int start = 0;  // 0-based first class
  int length = 0;
  friend bool operator==(const GrdSegment&, const GrdSegment&) = default;
};

struct GrdDecomposition {
  std::vector<GrdSegment> segments;
  std::vector<int> witnesses;  // x_i for each non-final segment
};

// Maximal rainbow segments, left to right: a segment grows while the next
// colour is absent from its last c-1 classes.
inline GrdDecomposition grd_decompose(std::span<const Colour> f, int c) {
  const int t = static_cast<int>(f.size());
  for (int i = 0; i + 1 < t; ++i)
    if (f[i] == f[i + 1]) throw StrategyError(StrategyError::Kind::NotAPathColouring, "consecutive classes share a colour");
  GrdDecomposition out;
  int s = 0;
  while (s < t) {
    int j = s;
    auto fresh = [&](int next) {
      for (int k = std::max(s, next - c + 1); k < next; ++k)
        if (f[k] == f[next]) return false;
      return true;
    };
    while (j + 1 < t && fresh(j + 1)) ++j;
    out.segments.push_back({s, j - s + 1});
    if (j + 1 < t) {
      int x = std::max(s, j + 2 - c);
      while (f[x] != f[j + 1]) ++x;
      out.witnesses.push_back(x);
    }
    s = j + 1;
  }
  return out;
}

inline GrdDecomposition grd_decompose(const ColouredGraph& g, const BlowupStructure& b) {
  if (theta(g, b) != 0) throw StrategyError(StrategyError::Kind::NotAPathColouring, "colouring is not constant on classes");
  std::vector<Colour> f;
  for (const auto& cl : b.classes) f.push_back(g.colour(cl.front()));
  return grd_decompose(f, g.num_colours());
}


namespace detail {

// Many segments: flood the short subpath from each even witness x_i to the
// start of the next segment (both ends share a colour), then link the
// transversal and absorb the rest.
inline void many_segment_lane(Lane& lane, const GrdDecomposition& grd) {
  auto q = lane.fronts();
  for (std::size_t i = 0; i < grd.witnesses.size(); i += 2) {
    const int x = grd.witnesses[i];
    const int end = grd.segments[i + 1].start;
    const Colour d = lane.state().colour_of(q[x]);
    for (int z = x + 1; z < end; ++z) lane.rec->play(q[z], d);
  }
  finish_dominating(lane, q);
}

// Closest repeat p < x < q with q - p < c and equal colours inside [lo, hi].
inline std::optional<std::pair<int, int>> crossing_repeat(const std::vector<Colour>& f, int lo, int hi, int x, int c) {
  for (int gap = 2; gap < c; ++gap)
    for (int p = std::max(lo, x - gap + 1); p < x; ++p) {
      int q = p + gap;
      if (q > hi) break;
      if (q > x && f[p] == f[q]) return std::pair{p, q};
    }
  return std::nullopt;
}

enum class Round { Continue, Done };

// Few segments: merge segments i and i+1 at their boundary. The first step
// floods everything from x_i - c to the start of segment i+1 from a vertex at
// x_i; later steps remove the closest colour repeat across the merged junction.
inline Round few_segment_round(Lane& lane, const GrdDecomposition& grd, int c, bool may_reverse) {
  const long need = static_cast<long>(c) * (c - 1) * (c - 1);
  const int segs = static_cast<int>(grd.segments.size());
  int pick = -1;
  for (int i = 0; i + 1 < segs && pick < 0; ++i)
    if (grd.segments[i].length >= need && grd.segments[i].length > 2 * c) pick = i;
  if (pick < 0) {
    if (may_reverse && grd.segments.back().length >= need && grd.segments.back().length > 2 * c) {
      std::reverse(lane.pos.begin(), lane.pos.end());
      return Round::Continue;
    }
    finish_dominating(lane);
    return Round::Done;
  }
  const int lo = grd.segments[pick].start;
  int hi = grd.segments[pick + 1].start + grd.segments[pick + 1].length - 1;
  const int y = grd.witnesses[pick];
  const int next = grd.segments[pick + 1].start;

  std::vector<Colour> f = lane.colours();
  auto first = colours_at(f, y - 1, y - c + 1);
  auto second = colours_at(f, y + 2, next);
  first.insert(first.end(), second.begin(), second.end());
  int before = lane.size();
  lane.sweep(y, first);
  lane.rebuild(y - c - 1, next + 1);
  hi -= before - lane.size();
  int x = y - c;
  int steps = 1;

  while (true) {
    f = lane.colours();
    auto rep = crossing_repeat(f, lo, hi, x, c);
    if (!rep) break;
    auto [p, q] = *rep;
    auto seq = colours_at(f, x - 1, p + 1);
    auto right = colours_at(f, x + 1, q);
    if (x - 1 < p + 1) seq.clear();
    seq.insert(seq.end(), right.begin(), right.end());
    before = lane.size();
    lane.sweep(x, seq);
    lane.rebuild(p - 1, q + 1);
    hi -= before - lane.size();
    x = p;
    ++steps;
  }
  if (steps >= c * (c - 1)) {
    lane.rebuild();
    finish_dominating(lane);
    return Round::Done;
  }
  return Round::Continue;
}

// Floods a lane whose positions are constant. Long rainbow stretches are
// merged pairwise until the colouring is rainbow or has many segments.
inline void path_colouring_lane(Lane& lane, int c) {
  int reversed_at = -1;
  while (true) {
    lane.rebuild();
    if (lane.size() == 1 || lane.flooded()) break;
    auto f = lane.colours();
    auto grd = grd_decompose(f, c);
    if (grd.segments.size() == 1) {
      rainbow_lane(lane, c);
      break;
    }
    if (static_cast<long>(grd.segments.size()) > 2L * c * (c - 1)) {
      many_segment_lane(lane, grd);
      break;
    }
    const int before = lane.size();
    if (few_segment_round(lane, grd, c, reversed_at != before) == Round::Done) break;
    if (lane.size() == before) reversed_at = before;
  }
  if (!lane.flooded()) finish_dominating(lane);
}

}  // namespace detail

// Links the transversal q (one vertex per class, in class order), then gives
// its component each colour still present elsewhere.
inline Certificate dominating_path_strategy(const ColouredGraph& g, const BlowupStructure& b, const std::vector<Vertex>& q) {
  detail::validate_blowup(g.shape(), b);
  auto cls = b.class_of();
  if (static_cast<int>(q.size()) != b.t())
    throw StrategyError(StrategyError::Kind::NotATransversal, "transversal needs one vertex per class");
  for (int i = 0; i < b.t(); ++i)
    if (q[i] < 0 || q[i] >= g.size() || cls[q[i]] != i)
      throw StrategyError(StrategyError::Kind::NotATransversal, "transversal vertex outside its class");
  FloodState s(g);
  Recorder rec(s);
  detail::Lane lane(rec, b.classes);
  detail::finish_dominating(lane, q);
  return finished(rec);
}

inline long path_colouring_threshold(int c) { return 2L * c * c * detail::ipow(c - 1, 3); }

// Requires c >= 3, t >= 2c^2(c-1)^3 and a colouring constant on classes.
inline Certificate path_colouring_strategy(const ColouredGraph& g, const BlowupStructure& b) {
  detail::validate_blowup(g.shape(), b);
  const int c = g.num_colours();
  if (b.base != BaseShape::Path) detail::precondition("path colouring strategy needs a path blow-up");
  if (c < 3) detail::precondition("path colouring strategy needs c >= 3");
  if (b.t() < path_colouring_threshold(c)) detail::precondition("too few classes for the path colouring strategy");
  if (theta(g, b) != 0) throw StrategyError(StrategyError::Kind::NotAPathColouring, "colouring is not constant on classes");
  FloodState s(g);
  Recorder rec(s);
  detail::Lane lane(rec, b.classes);
  detail::path_colouring_lane(lane, c);
  return finished(rec);
}

namespace detail {

// Most classes meet colour j; pick a transversal through colour j wherever
// possible, so at most t - n_j runs need recolouring.
inline void colour_rich_finish(Lane& lane) {
  const FloodState& s = lane.state();
  std::vector<int> meets(s.num_colours(), 0);
  std::vector<char> seen(s.num_colours());
  for (const auto& ps : lane.pos) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Vertex v : ps.vs) seen[s.colour_of(v)] = 1;
    for (int j = 0; j < s.num_colours(); ++j) meets[j] += seen[j];
  }
  Colour j = static_cast<Colour>(std::max_element(meets.begin(), meets.end()) - meets.begin());
  std::vector<Vertex> q;
  for (const auto& ps : lane.pos) {
    Vertex pick = ps.vs.front();
    for (Vertex v : ps.vs)
      if (s.colour_of(v) == j) {
        pick = v;
        break;
      }
    q.push_back(pick);
  }
  finish_dominating(lane, q);
}

struct ArbitraryParams {
  long clear_run;  // constant classes needed beside the chosen non-constant class
  int block_length;
  int block_count;
};

inline ArbitraryParams arbitrary_params(int c) {
  return {2 * ipow(c, 8), static_cast<int>(2 * ipow(c, 5) + 1), static_cast<int>(c * c * (c - 1) + 1)};
}

// Index of a non-constant position followed by a long run of constant ones,
// reversing the lane when only a leftward run is long enough; -1 if none.
inline int clear_position(Lane& lane, long run) {
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<int> bad;
    for (int p = 0; p < lane.size(); ++p)
      if (!lane.constant(p)) bad.push_back(p);
    for (std::size_t k = 0; k < bad.size(); ++k) {
      int next = k + 1 < bad.size() ? bad[k + 1] : lane.size();
      if (next - bad[k] - 1 >= run) return bad[k];
    }
    std::reverse(lane.pos.begin(), lane.pos.end());
  }
  return -1;
}

// Returns false when the structure it needs is missing and a fallback was used.
inline bool arbitrary_lane(Lane& lane, int c) {
  const auto prm = arbitrary_params(c);
  while (true) {
    lane.rebuild();
    if (lane.size() == 1 || lane.flooded()) return true;
    const int th = lane.theta();
    if (th == 0) {
      path_colouring_lane(lane, c);
      return true;
    }
    if (th >= c * (c - 1)) {
      colour_rich_finish(lane);
      return true;
    }
    int i = c >= 3 ? clear_position(lane, prm.clear_run) : -1;
    if (i < 0) {
      finish_dominating(lane);
      return false;
    }

    // Blocks to the right of V_i are path coloured; flood each one.
    const Vertex marker = lane.front(i);
    const int span = prm.block_length * prm.block_count;
    std::vector<std::deque<Lane::Position>> blocks;
    for (int k = 0; k < prm.block_count; ++k) {
      auto from = lane.pos.begin() + i + 1 + k * prm.block_length;
      blocks.emplace_back(from, from + prm.block_length);
    }
    for (auto& block : blocks) {
      Lane sub(*lane.rec, std::move(block));
      path_colouring_lane(sub, c);
    }
    lane.rebuild(i, i + span + 1);

    // Absorb V_i with c-1 moves once the next c positions carry all its
    // colours; until then, each window of c positions repeats a colour and
    // floods in at most c-2 moves. Earlier moves may already have absorbed it.
    bool absorbed = false, stuck = false;
    for (int a = 0; a <= c * (c - 1) && !stuck; ++a) {
      i = lane.locate(marker);
      if (lane.constant(i)) {
        absorbed = true;
        break;
      }
      if (a == c * (c - 1)) break;
      stuck = i + c >= lane.size();
      for (int p = i + 1; p <= i + c && !stuck; ++p) stuck = !lane.pos[p].unit;
      if (stuck) break;
      std::vector<char> right(c, 0);
      for (int p = i + 1; p <= i + c; ++p) right[lane.colour(p)] = 1;
      bool covered = true;
      for (Vertex v : lane.pos[i].vs) covered = covered && right[lane.state().colour_of(v)];
      if (covered) {
        std::vector<Colour> seq;
        for (int p = i + 2; p <= i + c; ++p) seq.push_back(lane.colour(p));
        lane.sweep(i + 1, seq);
      } else {
        std::vector<Vertex> window;
        for (int p = i + 1; p <= i + c; ++p) window.push_back(lane.front(p));
        run_greedy(*lane.rec, window);
      }
      lane.rebuild(i, i + c + 1);
    }
    if (!absorbed) {
      lane.rebuild();
      finish_dominating(lane);
      return !stuck;
    }
  }
}

}  // namespace detail

struct BlowupCertificate {
  Certificate certificate;
  bool guaranteed = false;  // t >= 2c^10 and every step found the structure it needs
};

inline long arbitrary_threshold(int c) { return 2 * detail::ipow(c, 10); }

// Any colouring of a path or cycle blow-up; a cycle is played as the path
// V_1..V_t, its wrap edges only helping.
inline BlowupCertificate arbitrary_blowup_strategy(const ColouredGraph& g, const BlowupStructure& b) {
  detail::validate_blowup(g.shape(), b);
  const int c = g.num_colours();
  FloodState s(g);
  Recorder rec(s);
  detail::Lane lane(rec, b.classes);
  bool structured = c >= 2 ? detail::arbitrary_lane(lane, c) : (detail::finish_dominating(lane), true);
  if (!s.flooded()) detail::finish_dominating(lane);
  return {finished(rec), structured && c >= 3 && b.t() >= arbitrary_threshold(c)};
}

}  // namespace floodit
