#pragma once

#include <hedet/bitset.hpp>
#include <hedet/graph.hpp>
#include <hedet/solvers.hpp>

#include <iosfwd>
#include <optional>
#include <vector>

namespace hedet {

/// A map V(G) -> [c], i.e. one vertex of the exponential graph K_c^G.
class ColorFunction {
public:
    ColorFunction() = default;

    /// Throws unless every value lies in 1..c.
    ColorFunction(std::vector<int> values, int num_colours);

    std::size_t domain_size() const noexcept { return values_.size(); }
    int num_colours() const noexcept { return num_colours_; }
    int operator()(Vertex x) const noexcept { return values_[x]; }
    const std::vector<int> & values() const noexcept { return values_; }

    /// Colours used, bit k set for colour k (bit 0 unused).
    const Bitset & image() const noexcept { return image_; }

    bool operator==(const ColorFunction & other) const
    {
        return num_colours_ == other.num_colours_ && values_ == other.values_;
    }

private:
    std::vector<int> values_;
    int num_colours_ = 0;
    Bitset image_;
};

/// f(x) == g(y) == colour across the G-edge xy.
struct ExpWitness {
    Vertex x = 0;
    Vertex y = 0;
    int colour = 0;
};

struct ExpAdjacency {
    bool adjacent = true;
    std::optional<ExpWitness> witness;
};

/// f ~ g in K_c^G iff f(x) != g(y) for every edge xy of G, in both
/// orientations. Throws on mismatched domains or colour counts.
ExpAdjacency exp_adjacent(const ColorFunction & f, const ColorFunction & g, const Graph & base);

/// f ~ f, which holds exactly when f is a proper colouring of G.
bool has_loop(const ColorFunction & f, const Graph & base);

/// K_c^G materialized. Function f has index sum_v (f(v) - 1) c^(n-1-v).
struct ExplicitExponential {
    Graph graph;
    std::size_t base_order = 0;
    int num_colours = 0;

    ColorFunction function(Vertex index) const;
    Vertex index(const ColorFunction & f) const;
};

/// Throws if c^|V(G)| exceeds `guard`.
ExplicitExponential exp_explicit(const Graph & base, int c, std::size_t guard = 4096);

/// Psi on G x H read as the map u -> (v -> Psi(v, u)). No checks.
std::vector<ColorFunction> transpose_coloring(const ProductGraph & product, const Coloring & psi);

/// Inverse of transpose_coloring. No checks.
Coloring transpose_map(const ProductGraph & product, const std::vector<ColorFunction> & map);

struct HomFromColoring {
    std::vector<ColorFunction> map; ///< empty when rejected
    std::optional<Edge> violation;  ///< monochromatic product edge
};

/// A proper colouring of G x H is a homomorphism H -> K_c^G.
/// `product` must be tensor_product(G, H).
HomFromColoring coloring_to_hom(const ProductGraph & product, const Coloring & psi);

struct HomViolation {
    Edge h_edge;
    ExpWitness witness;
};

struct ColoringFromHom {
    Coloring coloring; ///< empty when rejected
    std::optional<HomViolation> violation;
};

/// Converse direction; rejects maps that send an H-edge to a non-edge.
ColoringFromHom hom_to_coloring(
    const ProductGraph & product, const Graph & base, const Graph & target, const std::vector<ColorFunction> & map);

/// One function per line, whitespace-separated 1-based colours in vertex
/// order. Lines starting with '#' are headers.
void write_color_function(std::ostream & out, const ColorFunction & f);
std::vector<ColorFunction> read_color_functions(std::istream & in, int num_colours);

} // namespace hedet
