#pragma once

#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "solvers.hpp"

namespace floodit {

class ExtremalError : public std::runtime_error {
public:
  enum class Kind { TooManyColours, BudgetExceeded, InvalidParams };
  ExtremalError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Surjective colourings of n vertices with c colours, one per orbit under
// colour permutations: the restricted growth strings whose colours first
// appear in the order 0, 1, 2, ... . Visited in lexicographic order.
inline void for_each_surjective_colouring(int n, int c, const std::function<void(const std::vector<Colour>&)>& visit) {
  if (c > n) throw ExtremalError(ExtremalError::Kind::TooManyColours, "more colours than vertices");
  if (c < 1) throw ExtremalError(ExtremalError::Kind::InvalidParams, "need at least one colour");
  std::vector<Colour> col(n, 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (used + (n - pos) < c) return;
    if (pos == n) {
      visit(col);
      return;
    }
    for (Colour x = 0; x <= std::min(used, c - 1); ++x) {
      col[pos] = x;
      self(self, pos + 1, std::max(used, x + 1));
    }
  };
  rec(rec, 0, 0);
}

inline std::vector<std::vector<Colour>> enumerate_surjective_colourings(int n, int c) {
  std::vector<std::vector<Colour>> out;
  for_each_surjective_colouring(n, c, [&](const std::vector<Colour>& col) { out.push_back(col); });
  return out;
}

inline std::vector<std::vector<Colour>> enumerate_surjective_colourings(const Graph& g, int c) {
  return enumerate_surjective_colourings(g.size(), c);
}

struct ExtremalResult {
  int value = 0;
  std::vector<Colour> witness;  // lexicographically smallest maximiser
  std::size_t colourings_evaluated = 0;
};

// M_c(G): colourings are handed to a pool of workers through a shared index;
// the reduction keeps the first maximiser in enumeration order, so the result
// does not depend on scheduling.
inline ExtremalResult max_moves(const std::shared_ptr<const Graph>& shape, int c, int workers = 1,
                                const SolveOptions& opts = {}) {
  auto colourings = enumerate_surjective_colourings(shape->size(), c);
  std::vector<int> values(colourings.size(), -1);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> over_budget{false};
  auto work = [&] {
    for (std::size_t i = next++; i < colourings.size() && !over_budget; i = next++) {
      auto r = min_moves_exact({ColouredGraph(shape, colourings[i], c), std::nullopt, std::nullopt}, opts);
      if (!r.exact) over_budget = true;
      values[i] = r.moves;
    }
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (over_budget) throw ExtremalError(ExtremalError::Kind::BudgetExceeded, "state budget exceeded");

  ExtremalResult res;
  res.colourings_evaluated = colourings.size();
  res.value = -1;
  for (std::size_t i = 0; i < colourings.size(); ++i)
    if (values[i] > res.value) {
      res.value = values[i];
      res.witness = colourings[i];
    }
  return res;
}

inline ExtremalResult max_moves(const Graph& shape, int c, int workers = 1, const SolveOptions& opts = {}) {
  return max_moves(std::make_shared<const Graph>(shape), c, workers, opts);
}

// ---------------------------------------------------------------------------
// Closed forms

enum class PredictedFamily { Path, Cycle, BlowupPath, BlowupCycle, TreeTcr, ColourBound, RadiusBound, GridBounds };

struct PredictParams {
  int n = 0;  // vertices (grid: columns)
  int c = 0;
  int t = 0;  // blow-up classes
  int r = 0;  // radius / tree depth
  int k = 0;  // grid rows
};

struct Prediction {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::string note;
};

// 2c^10 without overflow.
inline bool blowup_threshold_met(int t, int c) {
  long double threshold = 2.0L * std::pow(static_cast<long double>(c), 10);
  return static_cast<long double>(t) >= threshold;
}

inline Prediction predicted_value(PredictedFamily family, const PredictParams& p) {
  auto invalid = [](const std::string& what) { return ExtremalError(ExtremalError::Kind::InvalidParams, what); };
  auto exact = [](int v) { return Prediction{v, v, true, ""}; };
  if (p.c < 1) throw invalid("c must be positive");
  const int c = p.c;
  switch (family) {
    case PredictedFamily::Path:
      if (p.n < 1 || c > p.n) throw invalid("path needs 1 <= c <= n");
      return exact(p.n - ceil_div(p.n, c));
    case PredictedFamily::Cycle:
      if (p.n < 3 || c > p.n) throw invalid("cycle needs n >= 3 and c <= n");
      return exact(p.n - ceil_div(p.n, c));
    case PredictedFamily::BlowupPath:
    case PredictedFamily::BlowupCycle: {
      const bool cycle = family == PredictedFamily::BlowupCycle;
      if (p.t < (cycle ? 3 : 1)) throw invalid("too few classes");
      if (p.n && p.n < p.t) throw invalid("fewer vertices than classes");
      if (p.n && c > p.n) throw invalid("more colours than vertices");
      int lower = p.t - ceil_div(p.t, c);
      if (blowup_threshold_met(p.t, c)) return exact(lower);
      // Transversal path plus c-1 colour cycles; radius bound; colour bound.
      int upper = std::min(lower + c - 1, (c - 1) * (p.t / 2));
      if (p.n) upper = std::min(upper, p.n - ceil_div(p.n, c));
      return {lower, upper, false, "conjectured exact: t - ceil(t/c)"};
    }
    case PredictedFamily::TreeTcr:
      if (c < 2 || p.r < 1) throw invalid("T_{c,r} needs c >= 2, r >= 1");
      return exact((c - 1) * p.r);
    case PredictedFamily::ColourBound:
      if (p.n < 1 || c > p.n) throw invalid("colour bound needs 1 <= c <= n");
      return {c - 1, p.n - ceil_div(p.n, c), false, ""};
    case PredictedFamily::RadiusBound:
      if (p.r < 0) throw invalid("radius must be non-negative");
      return {c - 1, (c - 1) * p.r, false, ""};
    case PredictedFamily::GridBounds: {
      if (p.k < 1 || p.n < 1) throw invalid("grid needs k, n >= 1");
      int lower = p.n - ceil_div(p.n, c);
      return {lower, lower + (c - 1) * ceil_div(p.k - 1, 2), false, ""};
    }
  }
  throw invalid("unknown family");
}

}  // namespace floodit
