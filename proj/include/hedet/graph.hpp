#pragma once

#include <hedet/bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hedet {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite undirected graph on vertices 0..n-1 with packed adjacency rows.
/// Immutable once built; use GraphBuilder to construct.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t loop_count() const noexcept { return loops_; }
    bool allows_loops() const noexcept { return allow_loops_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
    const Bitset & neighbours(Vertex u) const noexcept { return rows_[u]; }

    /// Number of neighbours; a loop counts once.
    std::size_t degree(Vertex u) const noexcept { return rows_[u].count(); }

    /// All edges as (u, v) with u <= v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Loop-free complement.
    Graph complement() const;

    /// Subgraph induced by `keep`, relabelled in the given order.
    Graph induced(const std::vector<Vertex> & keep) const;

    bool operator==(const Graph & other) const
    {
        return allow_loops_ == other.allow_loops_ && rows_ == other.rows_;
    }

private:
    friend class GraphBuilder;

    std::vector<Bitset> rows_;
    std::size_t edges_ = 0;
    std::size_t loops_ = 0;
    bool allow_loops_ = false;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n, bool allow_loops = false);

    std::size_t order() const noexcept { return g_.rows_.size(); }

    /// Adds the undirected edge uv; duplicates are ignored. Throws on an
    /// out-of-range endpoint, or on a loop when loops are not allowed.
    void add_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const noexcept { return g_.rows_[u].test(v); }

    Graph build() &&;

private:
    Graph g_;
};

enum class GraphKind { cycle, complete, path_with_loop, petersen, edgeless };

/// Named generators. path_with_loop(r) is P_r: the path v_0..v_r with a loop
/// at v_0, so it has r + 1 vertices. petersen requires size 10.
Graph generate(GraphKind kind, std::size_t size);

GraphKind parse_graph_kind(const std::string & name);

/// Tensor (categorical) product. Vertex (x, y) has index x * |V(H)| + y.
struct ProductGraph {
    Graph graph;
    std::size_t left_order = 0;
    std::size_t right_order = 0;

    Vertex index(Vertex x, Vertex y) const noexcept { return x * right_order + y; }
    std::pair<Vertex, Vertex> label(Vertex v) const noexcept { return {v / right_order, v % right_order}; }
};

ProductGraph tensor_product(const Graph & left, const Graph & right);

/// F[K_q]. Vertex (s, j), s in V(F) and j in 0..q-1, has index s * q + j.
struct LexGraph {
    Graph graph;
    std::size_t base_order = 0;
    std::size_t copies = 0;

    Vertex index(Vertex s, std::size_t j) const noexcept { return s * copies + j; }
    std::pair<Vertex, std::size_t> label(Vertex v) const noexcept { return {v / copies, v % copies}; }
};

LexGraph lex_complete(const Graph & base, std::size_t q);

/// Generalized Mycielski graph M_r(G): G x P_r with the layer-r vertices
/// identified into one apex. Vertex (v, layer), layer in 0..r-1, has index
/// layer * |V(G)| + v; the apex is r * |V(G)|.
struct MycielskiGraph {
    Graph graph;
    std::size_t base_order = 0;
    std::size_t layers = 0;

    Vertex index(Vertex v, std::size_t layer) const noexcept { return layer * base_order + v; }
    Vertex apex() const noexcept { return layers * base_order; }
    /// (vertex, layer) or nullopt for the apex.
    std::optional<std::pair<Vertex, std::size_t>> label(Vertex v) const noexcept
    {
        if (v == apex())
            return std::nullopt;
        return std::pair{v % base_order, v / base_order};
    }
};

MycielskiGraph mycielski(const Graph & g, std::size_t r);

/// M_{r_1}(M_{r_2}(...M_{r_d}(G))): the last entry is applied first.
Graph mycielski_chain(const Graph & g, const std::vector<std::size_t> & rvec);

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// Hop distances from `source`; `unreachable` for other components.
std::vector<std::size_t> bfs_distances(const Graph & g, Vertex source);

/// All-pairs hop distances, row-major n x n.
std::vector<std::vector<std::size_t>> all_distances(const Graph & g);

/// Length of a shortest odd cycle, or nullopt when g is bipartite.
std::optional<std::size_t> odd_girth(const Graph & g);

bool is_connected(const Graph & g);

} // namespace hedet
