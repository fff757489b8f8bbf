// Acceptance gate: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "floodit/floodit.hpp"

using namespace floodit;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict from_reports(std::initializer_list<Report> reps) {
  Verdict v;
  std::ostringstream d;
  for (const auto& r : reps) {
    v.pass = v.pass && r.passed;
    d << r.claim << " " << r.instances - r.failure_count << "/" << r.instances << "; ";
    if (!r.failures.empty()) d << "first failure: " << r.failures.front() << "; ";
  }
  v.detail = d.str();
  return v;
}

std::vector<int> random_sizes(std::mt19937_64& rng, int t, int max_size) {
  std::vector<int> s(t);
  for (auto& x : s) x = 1 + static_cast<int>(rng() % max_size);
  return s;
}

Verdict bichromatic_instance() {
  auto [fam, col] = remark_bichromatic(3, 3);
  auto r = min_moves_exact({ColouredGraph(fam.graph, col, 3), std::nullopt, std::nullopt});
  return {r.exact && r.moves == 4, "exact minimum " + std::to_string(r.moves) + ", expected 4"};
}

Verdict rainbow_certificates() {
  std::mt19937_64 rng(2024);
  int runs = 0, worst_slack = INT_MAX;
  for (int c = 2; c <= 4; ++c)
    for (int t = c + 2; t <= 60; ++t)
      for (int k = 0; k < 20; ++k) {
        auto fam = blowup_path(random_sizes(rng, t, 3));
        ColouredGraph g(fam.graph, class_colouring(*fam.blowup, rainbow_sequence(t, c)), c);
        auto cert = rainbow_blowup_strategy(g, *fam.blowup);
        int bound = t - ceil_div(t, c);
        ++runs;
        if (!play_certificate(g, cert).flooded || static_cast<int>(cert.size()) > bound)
          return {false, "c=" + std::to_string(c) + " t=" + std::to_string(t) + " length " +
                             std::to_string(cert.size()) + " > " + std::to_string(bound)};
        worst_slack = std::min(worst_slack, bound - static_cast<int>(cert.size()));
      }
  return {true, std::to_string(runs) + " certificates, smallest slack " + std::to_string(worst_slack)};
}

Verdict path_colouring_certificates() {
  const int c = 3, t = 150, bound = t - ceil_div(t, c);
  std::mt19937_64 rng(150);
  int longest = 0;
  for (int k = 0; k < 50; ++k) {
    auto fam = blowup_path(random_sizes(rng, t, 2));
    auto seq = random_proper_sequence(t, c, 1000 + k);
    ColouredGraph g(fam.graph, class_colouring(*fam.blowup, seq), c);
    auto cert = path_colouring_strategy(g, *fam.blowup);
    if (!play_certificate(g, cert).flooded || static_cast<int>(cert.size()) > bound)
      return {false, "instance " + std::to_string(k) + " length " + std::to_string(cert.size())};
    longest = std::max(longest, static_cast<int>(cert.size()));
  }
  return {true, "50 certificates, longest " + std::to_string(longest) + " <= " + std::to_string(bound)};
}

Verdict arbitrary_certificates() {
  const int c = 3, t = 2 * 59049, bound = t - ceil_div(t, c);
  std::ostringstream d;
  bool pass = true;
  for (int k = 0; k < 3; ++k) {
    std::mt19937_64 rng(90 + k);
    auto fam = blowup_path(random_sizes(rng, t, 2));
    const int theta = 1 + 2 * k;  // 1, 3, 5
    ColouredGraph g(fam.graph, random_blowup_colouring(*fam.blowup, c, theta, 90 + k), c);
    auto t0 = std::chrono::steady_clock::now();
    auto res = arbitrary_blowup_strategy(g, *fam.blowup);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = play_certificate(g, res.certificate).flooded && static_cast<int>(res.certificate.size()) <= bound;
    pass = pass && ok;
    char buf[160];
    std::snprintf(buf, sizeof buf, "theta=%d length %zu%s (guaranteed=%d, %.1fs); ", theta, res.certificate.size(),
                  ok ? "" : " FAILED", res.guaranteed ? 1 : 0, secs);
    d << buf;
  }
  d << "bound " << bound;
  return {pass, d.str()};
}

// Path DP against the exact solver on every proper sequence of length <= 9.
Verdict path_dp_gate() {
  int checked = 0;
  for (int c = 1; c <= 3; ++c)
    for (int n = 1; n <= 9; ++n) {
      std::vector<Colour> seq(n, 0);
      auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == n) {
          ColouredGraph g(path_graph(n), seq, c);
          for (int d = -1; d < c; ++d) {
            std::optional<Colour> goal;
            if (d >= 0) goal = static_cast<Colour>(d);
            ++checked;
            if (path_min_moves(seq, c, goal) != min_moves_exact({g, std::nullopt, goal}).moves) return false;
          }
          return true;
        }
        for (Colour x = 0; x < c; ++x) {
          if (pos > 0 && seq[pos - 1] == x) continue;
          seq[pos] = x;
          if (!self(self, pos + 1)) return false;
        }
        return true;
      };
      if (!rec(rec, 0)) return {false, "mismatch on " + detail::seq_text(seq)};
    }
  return {true, std::to_string(checked) + " sequence/colour pairs agree"};
}

Verdict oracle_gates() {
  auto dp = path_dp_gate();
  auto laws = from_reports({verify_theorem("spanning-trees"), verify_theorem("subgraph"),
                            verify_theorem("change-colouring"), verify_theorem("basic-monotonicity"),
                            verify_theorem("c-col")});
  return {dp.pass && laws.pass, dp.detail + "; " + laws.detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria{
      {1, "path extremal values", [] { return from_reports({verify_theorem("path-result")}); }},
      {2, "cycle extremal values", [] { return from_reports({verify_theorem("cycle-result")}); }},
      {3, "colour and radius upper bounds",
       [] { return from_reports({verify_theorem("colour-bound"), verify_theorem("radius-bound")}); }},
      {4, "tree tightness", [] { return from_reports({verify_theorem("tree-tight")}); }},
      {5, "rainbow path lower bound",
       [] { return from_reports({verify_theorem("rainbow-target"), verify_theorem("path-lb")}); }},
      {6, "bichromatic blow-up needs c+1 moves", bichromatic_instance},
      {7, "rainbow blow-up certificates", rainbow_certificates},
      {8, "path-colouring certificates", path_colouring_certificates},
      {9, "arbitrary colouring certificates at t = 2c^10", arbitrary_certificates},
      {10, "oracle gates", oracle_gates},
      {11, "blow-up lower bound", [] { return from_reports({verify_theorem("blowup-lb")}); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !v.pass;
    std::printf("criterion %2d: %s  %s [%.1fs] %s\n", c.id, v.pass ? "PASS" : "FAIL", c.name.c_str(), secs,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
