#pragma once

#include <hedet/graph.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hedet {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

/// A colouring with colours 1..num_colours, indexed by vertex.
struct Coloring {
    std::vector<int> colours;
    int num_colours = 0;
};

struct ProperCheck {
    bool proper = true;
    std::optional<Edge> witness; ///< first monochromatic edge (lexicographic)
};

/// Checks that no edge, loops included, is monochromatic. Throws if the
/// colouring does not cover the graph or uses a colour outside 1..c.
ProperCheck is_proper(const Graph & g, const Coloring & col);

enum class Feasibility { feasible, infeasible, unknown };

const char * to_string(Feasibility f) noexcept;

/// Partial colouring: colour 1..c per vertex, 0 for uncoloured.
using PartialColoring = std::vector<int>;

struct ExtensionResult {
    Feasibility status = Feasibility::unknown;
    std::optional<Coloring> coloring; ///< present iff feasible
    std::uint64_t nodes = 0;
};

/// Does `partial` extend to a proper c-colouring of g? Exhaustive
/// backtracking with forward checking on colour domains. Search nodes
/// beyond `budget` yield `unknown`.
ExtensionResult extendable(const Graph & g, const PartialColoring & partial, int c,
    std::uint64_t budget = default_node_budget);

struct ChromaticResult {
    std::optional<int> value; ///< exact chi, if the search finished
    int lower = 0;
    int upper = 0;
    Coloring best; ///< a proper colouring with `upper` colours
    std::uint64_t nodes = 0;
};

ChromaticResult chromatic_number(const Graph & g, std::uint64_t budget = default_node_budget);

/// Greedy DSATUR colouring, deterministic (ties by degree, then index).
Coloring dsatur_coloring(const Graph & g);

struct CliqueResult {
    std::vector<Vertex> clique; ///< largest clique found, sorted
    bool exact = false;         ///< search proved no larger clique exists
    std::uint64_t nodes = 0;
};

/// Branch and bound with greedy-colouring bounds. With `at_least` = k the
/// search only looks for cliques of size > k; if none exists the result is
/// exact and may be smaller than k.
CliqueResult max_clique(const Graph & g, std::uint64_t budget = default_node_budget, std::size_t at_least = 0);

struct IndependenceResult {
    std::optional<std::size_t> value;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<Vertex> witness;
    std::uint64_t nodes = 0;
};

IndependenceResult independence_number(const Graph & g, std::uint64_t budget = default_node_budget);

/// Is there an independent set of size `size`? nullopt if the budget ran out.
std::optional<bool> has_independent_set(const Graph & g, std::size_t size, std::uint64_t budget = default_node_budget);

/// DIMACS CNF for "g has a proper c-colouring extending `pin`". Variable
/// (v, k) is numbered v * c + k for colour k in 1..c.
void write_coloring_cnf(std::ostream & out, const Graph & g, int c, const PartialColoring & pin);

} // namespace hedet
