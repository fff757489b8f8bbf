#pragma once

// floodgraph v1 / floodcert v1 text formats.
//
//   floodgraph v1 n=<n> c=<c>
//   colours: <c0> <c1> ... <c_{n-1}>
//   edge: <u> <v>            (one line per edge)
//
//   floodcert v1
//   move: <vertex> <colour>  (one line per move)
//   final: <colour>          (optional)

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "engine.hpp"
#include "graph.hpp"

namespace floodit {

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void write_graph(std::ostream& out, const ColouredGraph& g) {
  out << "floodgraph v1 n=" << g.size() << " c=" << g.num_colours() << '\n';
  out << "colours:";
  for (Colour d : g.colouring()) out << ' ' << d;
  out << '\n';
  for (auto [u, v] : g.shape().edges()) out << "edge: " << u << ' ' << v << '\n';
}

inline std::string to_floodgraph(const ColouredGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

inline long parse_int(const std::string& token, int lineno) {
  try {
    std::size_t used = 0;
    long v = std::stol(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw FormatError("line " + std::to_string(lineno) + ": expected integer, got '" + token + "'");
  }
}

inline long parse_field(const std::string& token, const std::string& key, int lineno) {
  if (token.rfind(key + "=", 0) != 0) throw FormatError("line " + std::to_string(lineno) + ": expected " + key + "=<int>");
  return parse_int(token.substr(key.size() + 1), lineno);
}

}  // namespace detail

inline ColouredGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw FormatError("empty graph file");
  std::istringstream header(line);
  std::string magic, version, n_tok, c_tok;
  header >> magic >> version >> n_tok >> c_tok;
  if (magic != "floodgraph" || version != "v1") throw FormatError("line 1: expected 'floodgraph v1' header");
  long n = detail::parse_field(n_tok, "n", lineno);
  long c = detail::parse_field(c_tok, "c", lineno);
  if (n < 1 || c < 1) throw FormatError("line 1: n and c must be positive");

  std::vector<Colour> colours;
  std::vector<Edge> edges;
  bool have_colours = false;
  while (detail::next_content_line(in, line, lineno)) {
    std::istringstream row(line);
    std::string key;
    row >> key;
    std::string tok;
    if (key == "colours:") {
      if (have_colours) throw FormatError("line " + std::to_string(lineno) + ": duplicate colours line");
      while (row >> tok) colours.push_back(static_cast<Colour>(detail::parse_int(tok, lineno)));
      have_colours = true;
    } else if (key == "edge:") {
      std::vector<long> ends;
      while (row >> tok) ends.push_back(detail::parse_int(tok, lineno));
      if (ends.size() != 2) throw FormatError("line " + std::to_string(lineno) + ": edge needs two endpoints");
      edges.emplace_back(static_cast<Vertex>(ends[0]), static_cast<Vertex>(ends[1]));
    } else {
      throw FormatError("line " + std::to_string(lineno) + ": unknown record '" + key + "'");
    }
  }
  if (!have_colours) throw FormatError("missing colours line");
  if (static_cast<long>(colours.size()) != n) throw FormatError("colours line has wrong length");
  return ColouredGraph::build(static_cast<int>(n), std::move(edges), std::move(colours), static_cast<int>(c));
}

inline ColouredGraph parse_floodgraph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_certificate(std::ostream& out, const Certificate& cert) {
  out << "floodcert v1\n";
  for (Move m : cert.moves) out << "move: " << m.vertex << ' ' << m.colour << '\n';
  if (cert.final_colour) out << "final: " << *cert.final_colour << '\n';
}

inline std::string to_floodcert(const Certificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

inline Certificate read_certificate(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!detail::next_content_line(in, line, lineno)) throw FormatError("empty certificate file");
  {
    std::istringstream header(line);
    std::string magic, version, extra;
    header >> magic >> version;
    if (magic != "floodcert" || version != "v1" || (header >> extra))
      throw FormatError("line 1: expected 'floodcert v1' header");
  }
  Certificate cert;
  while (detail::next_content_line(in, line, lineno)) {
    std::istringstream row(line);
    std::string key, tok;
    row >> key;
    std::vector<long> vals;
    while (row >> tok) vals.push_back(detail::parse_int(tok, lineno));
    if (key == "move:") {
      if (vals.size() != 2) throw FormatError("line " + std::to_string(lineno) + ": move needs vertex and colour");
      if (cert.final_colour) throw FormatError("line " + std::to_string(lineno) + ": move after final");
      cert.moves.push_back({static_cast<Vertex>(vals[0]), static_cast<Colour>(vals[1])});
    } else if (key == "final:") {
      if (vals.size() != 1 || cert.final_colour) throw FormatError("line " + std::to_string(lineno) + ": bad final line");
      cert.final_colour = static_cast<Colour>(vals[0]);
    } else {
      throw FormatError("line " + std::to_string(lineno) + ": unknown record '" + key + "'");
    }
  }
  return cert;
}

inline Certificate parse_floodcert(const std::string& text) {
  std::istringstream in(text);
  return read_certificate(in);
}

template <class T, class Reader>
T load_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return reader(in);
}

}  // namespace floodit
