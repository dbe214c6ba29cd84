#pragma once

#include <hedet/graph.hpp>

#include <filesystem>
#include <iosfwd>

namespace hedet {

/// DIMACS .col reader. Indices are 1-based on disk. Loops (`e u u`) are
/// accepted only if a `c allow_loops` comment precedes the `p` line.
/// Duplicate edges are merged.
Graph read_dimacs(std::istream & in);
Graph read_dimacs(const std::filesystem::path & path);

/// Writes edges in lexicographic order. Graphs with loops get the
/// `c allow_loops` marker.
void write_dimacs(std::ostream & out, const Graph & g);
void write_dimacs(const std::filesystem::path & path, const Graph & g);

} // namespace hedet
