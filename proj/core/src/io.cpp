#include "hyperchrom/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hyperchrom::io {

namespace {

std::runtime_error parse_error(const std::string& what) {
  return std::runtime_error("parse error: " + what);
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  long long r = 0, n = 0, m = 0;
  if (!(in >> r >> n >> m)) throw parse_error("expected header `r n m`");
  if (r < 2 || n < 1 || m < 0) throw parse_error("header values out of range");
  std::vector<Vertex> slots;
  slots.reserve(static_cast<std::size_t>(r * m));
  for (long long i = 0; i < r * m; ++i) {
    long long v = 0;
    if (!(in >> v)) throw parse_error("edge list ends early at slot " + std::to_string(i));
    if (v < 0 || v >= n) throw parse_error("vertex id " + std::to_string(v) + " out of range");
    slots.push_back(static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw parse_error("trailing content after " + std::to_string(m) + " edges");
  return Hypergraph(static_cast<int>(r), static_cast<std::size_t>(n), std::move(slots));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.r() << ' ' << h.n() << ' ' << h.num_edges() << '\n';
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(e);
    for (std::size_t k = 0; k < edge.size(); ++k) out << (k ? " " : "") << edge[k];
    out << '\n';
  }
}

Coloring read_coloring(std::istream& in, std::size_t n) {
  std::vector<Color> assignment(n, kUncolored);
  std::vector<bool> seen(n, false);
  for (std::size_t line = 0; line < n; ++line) {
    long long v = 0;
    std::string color;
    if (!(in >> v >> color)) throw parse_error("expected " + std::to_string(n) + " coloring lines");
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw parse_error("vertex id out of range");
    if (seen[v]) throw parse_error("vertex " + std::to_string(v) + " listed twice");
    seen[v] = true;
    if (color == "-") continue;
    try {
      std::size_t used = 0;
      const long long c = std::stoll(color, &used);
      if (used != color.size() || c < 0) throw std::invalid_argument(color);
      assignment[v] = static_cast<Color>(c);
    } catch (const std::logic_error&) {
      throw parse_error("bad color `" + color + "`");
    }
  }
  return Coloring(std::move(assignment));
}

void write_coloring(std::ostream& out, const Coloring& col) {
  for (std::size_t v = 0; v < col.size(); ++v) {
    out << v << ' ';
    if (col[static_cast<Vertex>(v)] == kUncolored) {
      out << '-';
    } else {
      out << col[static_cast<Vertex>(v)];
    }
    out << '\n';
  }
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in);
}

void save_hypergraph(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_hypergraph(out, h);
}

Coloring load_coloring(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_coloring(in, n);
}

void save_coloring(const std::string& path, const Coloring& col) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_coloring(out, col);
}

}  // namespace hyperchrom::io
