#pragma once

#include <hedet/graph.hpp>

#include <string>

namespace hedet {

/// Seed graph from a name: c5, c7, petersen, groetzsch, c<n> (cycle),
/// k<n> (complete), e<n> (edgeless) or file:<path> (DIMACS).
Graph load_seed(const std::string & spec);

} // namespace hedet
