#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "engine.hpp"
#include "extremal.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "solvers.hpp"
#include "strategies.hpp"

namespace floodit {

class VerifyError : public std::runtime_error {
public:
  enum class Kind { UnknownClaim };
  VerifyError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

inline constexpr const char* kCampaignVersion = "floodit-campaigns v1";
inline constexpr const char* kReportSchema = "floodit-report v1";

// Parameter grid of a campaign. Each claim reads the fields it needs.
struct CampaignConfig {
  int n_min = 1;
  int n_max = 6;
  std::vector<int> colours{2, 3};
  int samples = 1000;
  std::uint64_t seed = 1;
  int t_max = 7;
  int max_class_size = 2;
  std::vector<std::pair<int, int>> tree_params{{2, 1}, {2, 2}, {3, 1}};
  int workers = 1;
};

inline const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names{
      "path-result", "cycle-result",  "colour-bound", "radius-bound",       "tree-tight",       "blowup-lb",
      "rainbow-target", "path-lb",    "cycle-lb",     "c-col",              "colour-dif",       "spanning-trees",
      "subgraph",    "basic-monotonicity", "change-colouring", "dominating-path", "path-section", "not-rainbow-col"};
  return names;
}

inline CampaignConfig default_campaign(const std::string& claim) {
  CampaignConfig cfg;
  if (claim == "path-result") cfg.n_min = 2, cfg.n_max = 8;
  else if (claim == "cycle-result") cfg.n_min = 3, cfg.n_max = 8;
  else if (claim == "rainbow-target" || claim == "path-lb" || claim == "colour-dif")
    cfg.n_max = 200, cfg.colours = {2, 3, 4, 5, 6};
  else if (claim == "cycle-lb") cfg.n_min = 3, cfg.n_max = 30, cfg.colours = {2, 3, 4};
  else if (claim == "c-col" || claim == "subgraph" || claim == "change-colouring") cfg.n_max = 7, cfg.colours = {2, 3, 4};
  else if (claim == "spanning-trees") cfg.n_max = 6, cfg.colours = {2, 3};
  else if (claim == "basic-monotonicity") cfg.n_max = 14, cfg.colours = {2, 3, 4};
  else if (claim == "path-section") cfg.n_max = 40, cfg.colours = {2, 3, 4};
  else if (claim == "dominating-path") cfg.samples = 300, cfg.t_max = 6;
  else if (claim == "not-rainbow-col") cfg.n_max = 7, cfg.colours = {2, 3, 4};
  return cfg;
}

struct Report {
  std::string claim;
  CampaignConfig config;
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // the first few witnesses
  bool passed = true;

  nlohmann::json to_json() const {
    nlohmann::json grid{{"n_min", config.n_min},   {"n_max", config.n_max},
                        {"colours", config.colours}, {"samples", config.samples},
                        {"seed", config.seed},     {"t_max", config.t_max},
                        {"max_class_size", config.max_class_size}};
    nlohmann::json trees = nlohmann::json::array();
    for (auto [c, r] : config.tree_params) trees.push_back({c, r});
    grid["tree_params"] = trees;
    return {{"schema", kReportSchema}, {"campaigns", kCampaignVersion}, {"claim", claim},
            {"grid", grid},            {"instances", instances},         {"failure_count", failure_count},
            {"failures", failures},    {"passed", passed}};
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "claim: " << claim << "\n";
    out << "grid: n=" << config.n_min << ".." << config.n_max << " colours=";
    for (std::size_t i = 0; i < config.colours.size(); ++i) out << (i ? "," : "") << config.colours[i];
    out << " samples=" << config.samples << " seed=" << config.seed << " t_max=" << config.t_max << "\n";
    out << "instances: " << instances << "\n";
    out << "failures: " << failure_count << "\n";
    for (const auto& f : failures) out << "  " << f << "\n";
    out << "passed: " << (passed ? "yes" : "no") << "\n";
    return out.str();
  }
};

namespace detail {

inline std::string seq_text(std::span<const Colour> seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
  return s;
}

inline std::string graph_text(const Graph& g) {
  std::string s = "n=" + std::to_string(g.size()) + " edges=";
  for (auto [u, v] : g.edges()) s += std::to_string(u) + "-" + std::to_string(v) + " ";
  return s;
}

class Campaign {
public:
  Campaign(std::string claim, CampaignConfig cfg) : rng(cfg.seed) {
    rep_.claim = std::move(claim);
    rep_.config = std::move(cfg);
  }

  void check(bool ok, const std::function<std::string()>& witness) {
    constexpr std::size_t kRecorded = 20;
    ++rep_.instances;
    if (ok) return;
    ++rep_.failure_count;
    if (rep_.failures.size() < kRecorded) rep_.failures.push_back(witness());
  }

  const CampaignConfig& cfg() const { return rep_.config; }
  Report finish() {
    rep_.passed = rep_.failure_count == 0;
    return rep_;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  int pick_colours() { return cfg().colours[uniform(0, static_cast<int>(cfg().colours.size()) - 1)]; }
  std::vector<Colour> colouring(int n, int c) {
    std::vector<Colour> col(n);
    for (auto& x : col) x = static_cast<Colour>(uniform(0, c - 1));
    return col;
  }
  std::shared_ptr<const Graph> graph(int n) { return random_connected_graph(n, rng(), 0.2 + 0.6 * uniform(0, 100) / 100.0); }

  std::mt19937_64 rng;

private:
  Report rep_;
};

inline int exact(const ColouredGraph& g, std::optional<Colour> d = std::nullopt,
                 std::optional<std::vector<Vertex>> target = std::nullopt) {
  auto r = min_moves_exact({g, std::move(target), d});
  if (!r.exact) throw ExtremalError(ExtremalError::Kind::BudgetExceeded, "state budget exceeded");
  return r.moves;
}

// Induced subgraph on vs, relabelled 0..|vs|-1 in the given order.
inline ColouredGraph induced(const ColouredGraph& g, const std::vector<Vertex>& vs) {
  std::vector<int> index(g.size(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (auto [u, v] : g.shape().edges())
    if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
  std::vector<Colour> col;
  for (Vertex v : vs) col.push_back(g.colour(v));
  return ColouredGraph(std::make_shared<const Graph>(static_cast<int>(vs.size()), std::move(es)), std::move(col),
                       g.num_colours());
}

inline void extremal_family(Campaign& cp, bool cycle) {
  for (int n = std::max(cp.cfg().n_min, cycle ? 3 : 1); n <= cp.cfg().n_max; ++n)
    for (int c : cp.cfg().colours) {
      if (c > n) continue;
      auto shape = cycle ? cycle_graph(n) : path_graph(n);
      auto res = max_moves(shape, c, cp.cfg().workers);
      int expected = n - ceil_div(n, c);
      int replay = exact(ColouredGraph(shape, res.witness, c));
      cp.check(res.value == expected && replay == res.value, [&] {
        return "n=" + std::to_string(n) + " c=" + std::to_string(c) + " M=" + std::to_string(res.value) +
               " expected=" + std::to_string(expected) + " witness=" + seq_text(res.witness);
      });
    }
}

inline void small_graph_bounds(Campaign& cp, bool radius_claim) {
  for (const auto& g : enumerate_small_graphs(std::min(cp.cfg().n_max, 7))) {
    const int n = g.size();
    if (n < cp.cfg().n_min) continue;
    auto shape = std::make_shared<const Graph>(g);
    for (int c : cp.cfg().colours) {
      if (c > n) continue;
      for_each_surjective_colouring(n, c, [&](const std::vector<Colour>& col) {
        ColouredGraph cg(shape, col, c);
        int m = exact(cg);
        if (!radius_claim) {
          cp.check(m <= n - ceil_div(n, c), [&] { return graph_text(g) + "colouring=" + seq_text(col); });
          return;
        }
        int bound = (c - 1) * radius(cg);
        auto cert = radius_strategy(cg);
        bool ok = m <= bound && static_cast<int>(cert.size()) <= bound && play_certificate(cg, cert).flooded;
        cp.check(ok, [&] { return graph_text(g) + "colouring=" + seq_text(col); });
      });
    }
  }
}

inline void tree_tight(Campaign& cp) {
  for (auto [c, r] : cp.cfg().tree_params) {
    FamilySpec spec{FamilyKind::TreeTcr};
    spec.c = c;
    spec.r = r;
    auto fam = gen_graph(spec);
    ColouredGraph g(fam.graph, scr_tree_colouring(c, r), c);
    int m = exact(g);
    auto cert = radius_strategy(g);
    bool ok = m == (c - 1) * r && static_cast<int>(cert.size()) == (c - 1) * r && play_certificate(g, cert).flooded;
    if (ok && g.size() <= 8) ok = max_moves(fam.graph, c, cp.cfg().workers).value == (c - 1) * r;
    cp.check(ok, [&] {
      return "c=" + std::to_string(c) + " r=" + std::to_string(r) + " m=" + std::to_string(m) +
             " strategy=" + std::to_string(cert.size());
    });
  }
}

inline void blowup_lb(Campaign& cp) {
  const int s_max = cp.cfg().max_class_size;
  for (int t = 1; t <= cp.cfg().t_max; ++t)
    for (int c : cp.cfg().colours) {
      std::vector<int> sizes(t, 1);
      while (true) {
        for (bool cycle : {false, true}) {
          if (cycle && (t < 3 || t % c == 1)) continue;
          auto fam = cycle ? blowup_cycle(sizes) : blowup_path(sizes);
          if (fam.graph->size() < c || !fam.graph->connected()) continue;
          auto seq = cycle ? cycle_rainbow_sequence(t, c) : rainbow_sequence(t, c);
          ColouredGraph g(fam.graph, class_colouring(*fam.blowup, seq), c);
          int m = exact(g);
          cp.check(m >= t - ceil_div(t, c), [&] {
            std::string s = std::string(cycle ? "cycle" : "path") + " c=" + std::to_string(c) + " sizes=";
            for (int x : sizes) s += std::to_string(x);
            return s + " m=" + std::to_string(m);
          });
        }
        int i = 0;
        while (i < t && sizes[i] == s_max) sizes[i++] = 1;
        if (i == t) break;
        ++sizes[i];
      }
    }
}

inline std::vector<int> colour_counts(std::span<const Colour> seq, int c) {
  std::vector<int> n(c, 0);
  for (Colour x : seq) ++n[x];
  return n;
}

// Shifted rainbow paths: per-colour lower bound, overall value, class sizes.
inline void rainbow_paths(Campaign& cp, const std::string& which) {
  for (int c : cp.cfg().colours)
    for (int n = std::max(1, cp.cfg().n_min); n <= cp.cfg().n_max; ++n)
      for (int r = 0; r < std::min(c, n); ++r) {
        auto seq = rainbow_sequence(n, c, r);
        auto count = colour_counts(seq, c);
        auto where = [&] { return "n=" + std::to_string(n) + " c=" + std::to_string(c) + " r=" + std::to_string(r); };
        if (which == "colour-dif") {
          auto [lo, hi] = std::minmax_element(count.begin(), count.end());
          cp.check(*hi - *lo <= 1 && *hi == ceil_div(n, c), where);
          continue;
        }
        PathTable table(seq, c);
        if (which == "rainbow-target") {
          bool ok = true;
          for (Colour d = 0; d < c; ++d) ok = ok && table.to_colour(d) >= n - count[d];
          cp.check(ok, where);
        } else {
          cp.check(table.free_minimum() == n - ceil_div(n, c), where);
        }
      }
}

inline void cycle_lb(Campaign& cp) {
  for (int c : cp.cfg().colours)
    for (int n = std::max(3, cp.cfg().n_min); n <= cp.cfg().n_max; ++n) {
      if (n % c == 1 || c > n) continue;
      ColouredGraph g(cycle_graph(n), cycle_rainbow_sequence(n, c), c);
      int m = cycle_min_moves(g);
      bool ok = m >= n - ceil_div(n, c);
      if (n <= 10) ok = ok && exact(g) == m;
      cp.check(ok, [&] { return "n=" + std::to_string(n) + " c=" + std::to_string(c) + " m=" + std::to_string(m); });
    }
}

inline void c_col(Campaign& cp) {
  for (int s = 0; s < cp.cfg().samples; ++s) {
    int n = cp.uniform(std::max(1, cp.cfg().n_min), cp.cfg().n_max);
    int c = cp.pick_colours();
    auto shape = cp.graph(n);
    ColouredGraph g(shape, cp.colouring(n, c), c);
    const int used = distinct_colours(g.colouring());
    auto con = contract(g);
    std::vector<int> comps(c, 0);
    for (Vertex v = 0; v < con.graph.size(); ++v) ++comps[con.graph.colour(v)];
    bool spread = true;
    for (int d = 0; d < c; ++d) spread = spread && (comps[d] == 0 || comps[d] >= 2);
    int m = exact(g);
    bool ok = m >= used - 1 && (!spread || m >= used);
    cp.check(ok, [&] { return graph_text(*shape) + "colouring=" + seq_text(g.colouring()); });
  }
}

// Every spanning tree of g, by testing each (n-1)-edge subset for connectivity.
inline std::vector<std::shared_ptr<const Graph>> spanning_trees(const Graph& g) {
  std::vector<std::shared_ptr<const Graph>> out;
  auto es = g.edges();
  const int n = g.size(), m = static_cast<int>(es.size());
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == n - 1) {
      std::vector<Edge> sub;
      for (int i : pick) sub.push_back(es[i]);
      auto t = std::make_shared<const Graph>(n, std::move(sub));
      if (t->connected()) out.push_back(t);
      return;
    }
    for (int i = from; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline void spanning_tree_law(Campaign& cp) {
  for (int s = 0; s < cp.cfg().samples; ++s) {
    int n = cp.uniform(std::max(1, cp.cfg().n_min), cp.cfg().n_max);
    int c = cp.pick_colours();
    auto shape = cp.graph(n);
    auto col = cp.colouring(n, c);
    ColouredGraph g(shape, col, c);
    auto trees = spanning_trees(*shape);
    bool ok = true;
    for (Colour d = 0; d < c && ok; ++d) {
      int best = INT_MAX;
      for (const auto& t : trees) best = std::min(best, exact(ColouredGraph(t, col, c), d));
      ok = exact(g, d) == best;
    }
    cp.check(ok, [&] { return graph_text(*shape) + "colouring=" + seq_text(col); });
  }
}

inline void subgraph_law(Campaign& cp) {
  for (int s = 0; s < cp.cfg().samples; ++s) {
    int n = cp.uniform(std::max(2, cp.cfg().n_min), cp.cfg().n_max);
    int c = cp.pick_colours();
    auto shape = cp.graph(n);
    auto col = cp.colouring(n, c);
    ColouredGraph g(shape, col, c);
    // Grow a connected vertex set, then keep a random connected edge subset.
    std::vector<Vertex> vs{static_cast<Vertex>(cp.uniform(0, n - 1))};
    int want = cp.uniform(1, n);
    while (static_cast<int>(vs.size()) < want) {
      std::vector<Vertex> frontier;
      for (Vertex v : vs)
        for (Vertex u : shape->neighbours(v))
          if (std::find(vs.begin(), vs.end(), u) == vs.end()) frontier.push_back(u);
      vs.push_back(frontier[cp.uniform(0, static_cast<int>(frontier.size()) - 1)]);
    }
    auto h = induced(g, vs);
    std::vector<Edge> kept;
    for (auto e : h.shape().edges())
      if (cp.uniform(0, 2) > 0) kept.push_back(e);
    auto hs = std::make_shared<const Graph>(h.size(), kept);
    if (!hs->connected()) hs = spanning_trees(h.shape()).front();
    ColouredGraph hc(hs, h.colouring(), c);
    bool ok = true;
    for (Colour d = 0; d < c && ok; ++d) ok = exact(g, d, vs) <= exact(hc, d);
    cp.check(ok, [&] { return graph_text(*shape) + "colouring=" + seq_text(col) + " H=" + graph_text(*hs); });
  }
}

inline void monotonicity_law(Campaign& cp) {
  for (int s = 0; s < cp.cfg().samples; ++s) {
    int n = cp.uniform(std::max(2, cp.cfg().n_min), cp.cfg().n_max);
    int c = cp.pick_colours();
    auto seq = cp.colouring(n, c);
    auto shorter = seq;
    shorter.erase(shorter.begin() + cp.uniform(0, n - 1));
    PathTable a(seq, c), b(shorter, c);
    bool ok = b.free_minimum() <= a.free_minimum();
    for (Colour d = 0; d < c; ++d) ok = ok && b.to_colour(d) <= a.to_colour(d);
    cp.check(ok, [&] { return "sequence=" + seq_text(seq) + " after=" + seq_text(shorter); });
  }
}

inline void change_colouring_law(Campaign& cp) {
  for (int s = 0; s < cp.cfg().samples; ++s) {
    int n = cp.uniform(std::max(1, cp.cfg().n_min), cp.cfg().n_max);
    int c = cp.pick_colours();
    auto shape = cp.graph(n);
    auto col = cp.colouring(n, c), alt = cp.colouring(n, c);
    ColouredGraph g(shape, col, c), g2(shape, alt, c);
    auto con = contract(g2);
    int cost = 0;
    for (Vertex a = 0; a < con.graph.size(); ++a) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v)
        if (con.image[v] == a) members.push_back(v);
      cost += exact(induced(g, members), con.graph.colour(a));
    }
    bool ok = true;
    for (Colour d = 0; d < c && ok; ++d) ok = exact(g, d) <= exact(g2, d) + cost;
    cp.check(ok, [&] { return graph_text(*shape) + "colouring=" + seq_text(col) + " other=" + seq_text(alt); });
  }
}

inline void dominating_path_law(Campaign& cp) {
  for (int s = 0; s < cp.cfg().samples; ++s) {
    int t = cp.uniform(std::max(2, cp.cfg().n_min), cp.cfg().t_max);
    int c = cp.pick_colours();
    std::vector<int> sizes(t);
    for (auto& x : sizes) x = cp.uniform(1, cp.cfg().max_class_size);
    auto fam = blowup_path(sizes);
    const int n = fam.graph->size();
    auto col = cp.colouring(n, c);
    ColouredGraph g(fam.graph, col, c);
    std::vector<Vertex> q;
    std::vector<Colour> qcol;
    for (const auto& cl : fam.blowup->classes) {
      q.push_back(cl[cp.uniform(0, static_cast<int>(cl.size()) - 1)]);
      qcol.push_back(col[q.back()]);
    }
    int m = exact(g);
    int mq = path_min_moves(qcol, c);
    auto cert = dominating_path_strategy(g, *fam.blowup, q);
    bool ok = m <= mq + c - 1 && m <= t - ceil_div(t, c) + c - 1 && play_certificate(g, cert).flooded;
    cp.check(ok, [&] {
      std::string sz;
      for (int x : sizes) sz += std::to_string(x);
      return "sizes=" + sz + " colouring=" + seq_text(col) + " m=" + std::to_string(m) + " mQ=" + std::to_string(mq);
    });
  }
}

inline void path_section_law(Campaign& cp) {
  for (int s = 0; s < cp.cfg().samples; ++s) {
    int t = cp.uniform(std::max(1, cp.cfg().n_min), cp.cfg().n_max);
    int c = cp.pick_colours();
    auto seq = cp.colouring(t, c);
    int pos = 0, removed = 0, inner = 0;
    std::string parts;
    while (pos < t) {
      int gap = cp.uniform(0, 3);
      int len = cp.uniform(1, std::max(1, t / 3));
      int from = pos + gap;
      if (from + len > t) break;
      std::span<const Colour> sub(seq.data() + from, len);
      removed += len - 1;
      inner += path_min_moves(sub, c);
      parts += std::to_string(from) + "+" + std::to_string(len) + " ";
      pos = from + len;
    }
    int rest = t - removed;
    bool ok = path_min_moves(seq, c) <= rest - ceil_div(rest, c) + inner;
    cp.check(ok, [&] { return "sequence=" + seq_text(seq) + " subpaths=" + parts; });
  }
}

inline void not_rainbow_law(Campaign& cp) {
  for (int c : cp.cfg().colours)
    for (int t = std::max(1, cp.cfg().n_min); t <= cp.cfg().n_max; ++t) {
      std::vector<Colour> f(t, 0);
      while (true) {
        if (!is_rainbow_sequence(f, c)) {
          bool found = false;
          for (int i = 0; i < t && !found; ++i)
            for (int j = i + 1; j < t && j - i < c && !found; ++j) found = f[i] == f[j];
          cp.check(found, [&] { return "c=" + std::to_string(c) + " f=" + seq_text(f); });
        }
        int i = 0;
        while (i < t && f[i] == c - 1) f[i++] = 0;
        if (i == t) break;
        ++f[i];
      }
    }
}

}  // namespace detail

inline Report verify_theorem(const std::string& claim, const CampaignConfig& cfg) {
  const auto& names = claim_names();
  if (std::find(names.begin(), names.end(), claim) == names.end())
    throw VerifyError(VerifyError::Kind::UnknownClaim, "unknown claim: " + claim);
  detail::Campaign cp(claim, cfg);
  if (claim == "path-result") detail::extremal_family(cp, false);
  else if (claim == "cycle-result") detail::extremal_family(cp, true);
  else if (claim == "colour-bound") detail::small_graph_bounds(cp, false);
  else if (claim == "radius-bound") detail::small_graph_bounds(cp, true);
  else if (claim == "tree-tight") detail::tree_tight(cp);
  else if (claim == "blowup-lb") detail::blowup_lb(cp);
  else if (claim == "rainbow-target" || claim == "path-lb" || claim == "colour-dif") detail::rainbow_paths(cp, claim);
  else if (claim == "cycle-lb") detail::cycle_lb(cp);
  else if (claim == "c-col") detail::c_col(cp);
  else if (claim == "spanning-trees") detail::spanning_tree_law(cp);
  else if (claim == "subgraph") detail::subgraph_law(cp);
  else if (claim == "basic-monotonicity") detail::monotonicity_law(cp);
  else if (claim == "change-colouring") detail::change_colouring_law(cp);
  else if (claim == "dominating-path") detail::dominating_path_law(cp);
  else if (claim == "path-section") detail::path_section_law(cp);
  else if (claim == "not-rainbow-col") detail::not_rainbow_law(cp);
  return cp.finish();
}

inline Report verify_theorem(const std::string& claim) { return verify_theorem(claim, default_campaign(claim)); }

}  // namespace floodit
