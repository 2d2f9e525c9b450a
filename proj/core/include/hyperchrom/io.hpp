#pragma once

#include <iosfwd>
#include <string>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom::io {

// Hypergraph text format: a header line `r n m`, then m lines of r
// space-separated 0-based vertex ids. Repeated ids within a line are loops and
// repeated lines are multi-edges.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// Coloring text format: n lines `vertex color`, with `-` for uncolored.
// Vertices may appear in any order but each exactly once.
Coloring read_coloring(std::istream& in, std::size_t n);
void write_coloring(std::ostream& out, const Coloring& col);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& h);
Coloring load_coloring(const std::string& path, std::size_t n);
void save_coloring(const std::string& path, const Coloring& col);

}  // namespace hyperchrom::io
