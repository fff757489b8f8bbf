// floodit: command-line front end.
//
// Exit status: 0 success, 1 failed verification or unmet certificate claim,
// 2 usage or parse error, 3 solver budget exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "floodit/floodit.hpp"

using namespace floodit;
using nlohmann::json;

namespace {

constexpr const char* kOutputSchema = "floodit-cli v1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// Prints either "key: value" lines or one JSON object.
class Document {
public:
  Document(std::string kind, bool as_json) : as_json_(as_json) { j_ = {{"schema", kOutputSchema}, {"kind", kind}}; }

  template <class T>
  void set(const std::string& key, const T& value) {
    j_[key] = value;
    keys_.push_back(key);
  }

  void print(std::ostream& out) const {
    if (as_json_) {
      out << j_.dump(2) << '\n';
      return;
    }
    for (const auto& k : keys_) {
      const auto& v = j_.at(k);
      out << k << ": ";
      if (v.is_boolean()) out << (v.get<bool>() ? "yes" : "no");
      else if (v.is_string()) out << v.get<std::string>();
      else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].dump();
      } else out << v.dump();
      out << '\n';
    }
  }

private:
  bool as_json_;
  json j_;
  std::vector<std::string> keys_;
};

struct ShapeFlags {
  std::string family;
  int n = 0, rows = 0, r = 0, c = 0;
  std::vector<int> sizes;
  std::uint64_t seed = 0;
  double edge_p = 0.5;

  void add(CLI::App* app, bool required) {
    static const std::vector<std::string> families{"path",        "cycle",        "star", "grid",
                                                   "tree",        "blowup-path",  "blowup-cycle", "random"};
    auto* opt = app->add_option("--family", family, "graph family")->check(CLI::IsMember(families));
    if (required) opt->required();
    app->add_option("--n", n, "vertices (path, cycle, random); leaves (star); columns (grid)");
    app->add_option("--rows", rows, "grid rows");
    app->add_option("--r", r, "tree depth");
    app->add_option("--tree-c", c, "tree colour parameter");
    app->add_option("--sizes", sizes, "blow-up class sizes")->delimiter(',');
    app->add_option("--seed", seed, "random seed");
    app->add_option("--edge-p", edge_p, "edge probability for random graphs");
  }

  Family build() const {
    static const std::map<std::string, FamilyKind> kinds{
        {"path", FamilyKind::Path},          {"cycle", FamilyKind::Cycle},
        {"star", FamilyKind::Star},          {"grid", FamilyKind::Grid},
        {"tree", FamilyKind::TreeTcr},       {"blowup-path", FamilyKind::BlowupPath},
        {"blowup-cycle", FamilyKind::BlowupCycle}, {"random", FamilyKind::RandomConnected}};
    FamilySpec spec;
    spec.kind = kinds.at(family);
    spec.n = n;
    spec.k = rows;
    spec.c = c;
    spec.r = r;
    spec.sizes = sizes;
    spec.seed = seed;
    spec.edge_probability = edge_p;
    return gen_graph(spec);
  }
};

std::vector<Colour> to_colours(const std::vector<int>& xs) { return {xs.begin(), xs.end()}; }

// ---------------------------------------------------------------------------

struct GenCmd {
  ShapeFlags shape;
  std::string colouring = "rainbow";
  int colours = 2, shift = 0, theta = 0;
  std::vector<int> sequence;
  std::string out;

  int run() const {
    static const std::map<std::string, ColouringKind> kinds{{"rainbow", ColouringKind::Rainbow},
                                                            {"shifted", ColouringKind::ShiftedRainbow},
                                                            {"cycle-rainbow", ColouringKind::CycleRainbow},
                                                            {"path", ColouringKind::PathColouring},
                                                            {"scr-tree", ColouringKind::ScrTree},
                                                            {"bichromatic", ColouringKind::RemarkBichromatic},
                                                            {"random", ColouringKind::RandomSurjective}};
    ShapeFlags sf = shape;
    if (sf.family == "tree" && sf.c == 0) sf.c = colours;
    auto fam = sf.build();
    std::vector<Colour> col;
    if (colouring == "blowup-random") {
      if (!fam.blowup) throw UsageError("blowup-random needs a blow-up family");
      col = random_blowup_colouring(*fam.blowup, colours, theta, shape.seed);
    } else {
      ColouringSpec spec;
      spec.kind = kinds.at(colouring);
      spec.c = colours;
      spec.shift = shift;
      spec.class_colours = to_colours(sequence);
      spec.seed = shape.seed;
      col = gen_colouring(fam, spec);
    }
    int palette = colours;
    if (!col.empty()) palette = std::max(palette, static_cast<int>(*std::max_element(col.begin(), col.end())) + 1);
    auto text = to_floodgraph(ColouredGraph(fam.graph, col, palette));
    if (out.empty()) std::cout << text;
    else write_file(out, text);
    return 0;
  }
};

struct SolveCmd {
  std::string graph, cert;
  std::optional<int> colour;
  std::vector<int> target;
  std::size_t budget = SolveOptions{}.budget;
  bool as_json = false;

  int run() const {
    auto g = parse_floodgraph(read_file(graph));
    SolveQuery q{g, std::nullopt, std::nullopt};
    if (colour) q.colour = static_cast<Colour>(*colour);
    if (!target.empty()) q.target = std::vector<Vertex>(target.begin(), target.end());
    auto res = min_moves_exact(q, SolveOptions{budget});
    Document doc("solve", as_json);
    doc.set(res.exact ? "min_moves" : "min_moves_upper_bound", res.moves);
    doc.set("explored_states", res.explored_states);
    if (!cert.empty()) {
      write_file(cert, to_floodcert(res.certificate));
      doc.set("certificate", cert);
    }
    doc.print(std::cout);
    if (!res.exact) throw BudgetError("state budget of " + std::to_string(budget) + " exceeded");
    return 0;
  }
};

struct ExtremalCmd {
  ShapeFlags shape;
  std::string graph;
  int colours = 2, workers = 1;
  std::size_t budget = SolveOptions{}.budget;
  bool as_json = false;

  int run() const {
    std::shared_ptr<const Graph> g;
    if (!graph.empty()) g = parse_floodgraph(read_file(graph)).shape_ptr();
    else if (!shape.family.empty()) g = shape.build().graph;
    else throw UsageError("extremal needs --graph or --family");
    auto res = max_moves(g, colours, workers, SolveOptions{budget});
    Document doc("extremal", as_json);
    doc.set("c", colours);
    doc.set("M_c", res.value);
    doc.set("witness", res.witness);
    doc.set("colourings", res.colourings_evaluated);
    doc.print(std::cout);
    return 0;
  }
};

struct StrategyCmd {
  std::string name, graph, out, base = "path";
  std::vector<int> sizes, transversal;
  bool as_json = false;

  BlowupStructure structure(const ColouredGraph& g) const {
    if (sizes.empty()) throw UsageError("strategy " + name + " needs --sizes");
    BlowupStructure b{base == "cycle" ? BaseShape::Cycle : BaseShape::Path, {}};
    Vertex next = 0;
    for (int s : sizes) {
      if (s < 1) throw UsageError("class sizes must be positive");
      std::vector<Vertex> cl(s);
      std::iota(cl.begin(), cl.end(), next);
      next += s;
      b.classes.push_back(std::move(cl));
    }
    if (next != g.size()) throw UsageError("class sizes do not add up to the vertex count");
    return b;
  }

  int run() const {
    auto g = parse_floodgraph(read_file(graph));
    Certificate cert;
    std::optional<bool> guaranteed;
    if (name == "radius") cert = radius_strategy(g);
    else if (name == "rainbow-blowup") cert = rainbow_blowup_strategy(g, structure(g));
    else if (name == "path-colouring") cert = path_colouring_strategy(g, structure(g));
    else if (name == "dominating-path") {
      if (transversal.empty()) throw UsageError("dominating-path needs --transversal");
      cert = dominating_path_strategy(g, structure(g), std::vector<Vertex>(transversal.begin(), transversal.end()));
    } else {
      auto res = arbitrary_blowup_strategy(g, structure(g));
      cert = res.certificate;
      guaranteed = res.guaranteed;
    }
    auto outcome = play_certificate(g, cert);
    Document doc("strategy", as_json);
    doc.set("strategy", name);
    doc.set("moves", cert.size());
    doc.set("flooded", outcome.flooded);
    if (guaranteed) doc.set("guaranteed", *guaranteed);
    if (!out.empty()) {
      write_file(out, to_floodcert(cert));
      doc.set("certificate", out);
    }
    doc.print(std::cout);
    return outcome.flooded ? 0 : 1;
  }
};

struct VerifyCmd {
  std::string claim, out;
  std::optional<int> n_min, n_max, samples, t_max, max_class_size;
  std::optional<std::uint64_t> seed;
  std::vector<int> colours;
  int workers = 1;
  bool as_json = false;

  int run() const {
    const auto& names = claim_names();
    if (std::find(names.begin(), names.end(), claim) == names.end()) throw UsageError("unknown claim: " + claim);
    auto cfg = default_campaign(claim);
    if (n_min) cfg.n_min = *n_min;
    if (n_max) cfg.n_max = *n_max;
    if (samples) cfg.samples = *samples;
    if (t_max) cfg.t_max = *t_max;
    if (max_class_size) cfg.max_class_size = *max_class_size;
    if (seed) cfg.seed = *seed;
    if (!colours.empty()) cfg.colours = colours;
    cfg.workers = workers;
    auto rep = verify_theorem(claim, cfg);
    std::string text = as_json ? rep.to_json().dump(2) + "\n" : rep.to_text();
    std::cout << text;
    if (!out.empty()) write_file(out, rep.to_json().dump(2) + "\n");
    return rep.passed ? 0 : 1;
  }
};

struct CheckCertCmd {
  std::string graph, cert;
  bool as_json = false;

  int run() const {
    auto g = parse_floodgraph(read_file(graph));
    auto c = parse_floodcert(read_file(cert));
    auto outcome = play_certificate(g, c);
    Document doc("check-cert", as_json);
    doc.set("length", outcome.length);
    doc.set("flooded", outcome.flooded);
    doc.set("target_met", outcome.target_met);
    if (outcome.final_colour) doc.set("final_colour", *outcome.final_colour);
    doc.print(std::cout);
    return outcome.target_met ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flood-It on coloured graphs"};
  app.require_subcommand(1);

  GenCmd gen;
  auto* g = app.add_subcommand("gen", "write a floodgraph file for a graph family and colouring");
  gen.shape.add(g, true);
  g->add_option("--colouring", gen.colouring, "colouring family")
      ->check(CLI::IsMember({"rainbow", "shifted", "cycle-rainbow", "path", "scr-tree", "bichromatic", "random",
                             "blowup-random"}));
  g->add_option("--colours", gen.colours, "number of colours");
  g->add_option("--shift", gen.shift, "rainbow phase shift");
  g->add_option("--theta", gen.theta, "non-constant classes (blowup-random)");
  g->add_option("--sequence", gen.sequence, "class colours for a path colouring")->delimiter(',');
  g->add_option("--out", gen.out, "output file (default stdout)");

  SolveCmd solve;
  auto* s = app.add_subcommand("solve", "exact minimum number of moves");
  s->add_option("--graph", solve.graph, "floodgraph file")->required();
  s->add_option("--colour", solve.colour, "final colour");
  s->add_option("--target", solve.target, "vertices to link instead of the whole graph")->delimiter(',');
  s->add_option("--budget", solve.budget, "stored state limit");
  s->add_option("--cert", solve.cert, "write an optimal certificate here");
  s->add_flag("--json", solve.as_json);

  ExtremalCmd ext;
  auto* e = app.add_subcommand("extremal", "maximum over surjective colourings of the minimum");
  ext.shape.add(e, false);
  e->add_option("--graph", ext.graph, "use the shape of this floodgraph file");
  e->add_option("--colours", ext.colours, "number of colours")->required();
  e->add_option("--workers", ext.workers, "worker threads");
  e->add_option("--budget", ext.budget, "stored state limit per colouring");
  e->add_flag("--json", ext.as_json);

  StrategyCmd strat;
  auto* st = app.add_subcommand("strategy", "run a constructive strategy and emit its certificate");
  st->add_option("--name", strat.name, "strategy")
      ->required()
      ->check(CLI::IsMember({"radius", "rainbow-blowup", "dominating-path", "path-colouring", "arbitrary"}));
  st->add_option("--graph", strat.graph, "floodgraph file")->required();
  st->add_option("--sizes", strat.sizes, "blow-up class sizes; vertices are numbered class by class")
      ->delimiter(',');
  st->add_option("--base", strat.base, "blow-up base")->check(CLI::IsMember({"path", "cycle"}));
  st->add_option("--transversal", strat.transversal, "one vertex per class")->delimiter(',');
  st->add_option("--out", strat.out, "certificate file");
  st->add_flag("--json", strat.as_json);

  VerifyCmd ver;
  auto* v = app.add_subcommand("verify", "run a claim campaign and report");
  v->add_option("--claim", ver.claim, "claim name")->required();
  v->add_option("--n-min", ver.n_min);
  v->add_option("--n-max", ver.n_max);
  v->add_option("--colours", ver.colours, "colour counts")->delimiter(',');
  v->add_option("--samples", ver.samples);
  v->add_option("--seed", ver.seed);
  v->add_option("--t-max", ver.t_max);
  v->add_option("--max-class-size", ver.max_class_size);
  v->add_option("--workers", ver.workers);
  v->add_option("--out", ver.out, "write the JSON report here");
  v->add_flag("--json", ver.as_json);

  CheckCertCmd chk;
  auto* c = app.add_subcommand("check-cert", "replay a certificate");
  c->add_option("--graph", chk.graph, "floodgraph file")->required();
  c->add_option("--cert", chk.cert, "floodcert file")->required();
  c->add_flag("--json", chk.as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 2;
  }

  try {
    if (g->parsed()) return gen.run();
    if (s->parsed()) return solve.run();
    if (e->parsed()) return ext.run();
    if (st->parsed()) return strat.run();
    if (v->parsed()) return ver.run();
    return chk.run();
  } catch (const BudgetError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 3;
  } catch (const ExtremalError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return ex.kind() == ExtremalError::Kind::BudgetExceeded ? 3 : 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
}
