#include <hedet/error.hpp>
#include <hedet/graph.hpp>

#include <deque>
#include <string>

namespace hedet {

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < order(); ++u)
        for (auto v = rows_[u].next_from(u); v != Bitset::npos; v = rows_[u].next_from(v + 1))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const
{
    GraphBuilder b(order());
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = u + 1; v < order(); ++v)
            if (! adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::induced(const std::vector<Vertex> & keep) const
{
    GraphBuilder b(keep.size(), allow_loops_);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t c = a; c < keep.size(); ++c)
            if (adjacent(keep[a], keep[c]))
                b.add_edge(a, c);
    return std::move(b).build();
}

GraphBuilder::GraphBuilder(std::size_t n, bool allow_loops)
{
    g_.rows_.assign(n, Bitset(n));
    g_.allow_loops_ = allow_loops;
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    if (u >= order() || v >= order())
        throw Error("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v && ! g_.allow_loops_)
        throw Error("loop at vertex " + std::to_string(u) + " in a graph without loops");
    if (g_.rows_[u].test(v))
        return;
    g_.rows_[u].set(v);
    g_.rows_[v].set(u);
    ++g_.edges_;
    if (u == v)
        ++g_.loops_;
}

Graph GraphBuilder::build() &&
{
    return std::move(g_);
}

Graph generate(GraphKind kind, std::size_t size)
{
    if (size < 1)
        throw Error("graph size must be at least 1");

    switch (kind) {
    case GraphKind::cycle: {
        if (size < 3)
            throw Error("a cycle needs at least 3 vertices");
        GraphBuilder b(size);
        for (Vertex v = 0; v < size; ++v)
            b.add_edge(v, (v + 1) % size);
        return std::move(b).build();
    }
    case GraphKind::complete: {
        GraphBuilder b(size);
        for (Vertex u = 0; u < size; ++u)
            for (Vertex v = u + 1; v < size; ++v)
                b.add_edge(u, v);
        return std::move(b).build();
    }
    case GraphKind::path_with_loop: {
        GraphBuilder b(size + 1, true);
        b.add_edge(0, 0);
        for (Vertex v = 0; v < size; ++v)
            b.add_edge(v, v + 1);
        return std::move(b).build();
    }
    case GraphKind::petersen: {
        if (size != 10)
            throw Error("the Petersen graph has exactly 10 vertices");
        GraphBuilder b(10);
        for (Vertex v = 0; v < 5; ++v) {
            b.add_edge(v, (v + 1) % 5);
            b.add_edge(v, v + 5);
            b.add_edge(5 + v, 5 + (v + 2) % 5);
        }
        return std::move(b).build();
    }
    case GraphKind::edgeless:
        return std::move(GraphBuilder(size)).build();
    }
    throw Error("unknown graph kind");
}

GraphKind parse_graph_kind(const std::string & name)
{
    if (name == "cycle")
        return GraphKind::cycle;
    if (name == "complete")
        return GraphKind::complete;
    if (name == "path-with-loop")
        return GraphKind::path_with_loop;
    if (name == "petersen")
        return GraphKind::petersen;
    if (name == "edgeless")
        return GraphKind::edgeless;
    throw Error("unknown graph kind '" + name + "'");
}

ProductGraph tensor_product(const Graph & left, const Graph & right)
{
    ProductGraph p;
    p.left_order = left.order();
    p.right_order = right.order();
    GraphBuilder b(left.order() * right.order(), left.allows_loops() || right.allows_loops());
    auto le = left.edges();
    auto re = right.edges();
    for (auto [x, xx] : le)
        for (auto [y, yy] : re) {
            b.add_edge(p.index(x, y), p.index(xx, yy));
            b.add_edge(p.index(x, yy), p.index(xx, y));
        }
    p.graph = std::move(b).build();
    return p;
}

LexGraph lex_complete(const Graph & base, std::size_t q)
{
    if (q < 1)
        throw Error("lex_complete needs q >= 1");
    if (base.loop_count() > 0)
        throw Error("lex_complete needs a loop-free base graph");

    LexGraph l;
    l.base_order = base.order();
    l.copies = q;
    GraphBuilder b(base.order() * q);
    for (Vertex s = 0; s < base.order(); ++s)
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t jj = j + 1; jj < q; ++jj)
                b.add_edge(l.index(s, j), l.index(s, jj));
    for (auto [s, ss] : base.edges())
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t jj = 0; jj < q; ++jj)
                b.add_edge(l.index(s, j), l.index(ss, jj));
    l.graph = std::move(b).build();
    return l;
}

MycielskiGraph mycielski(const Graph & g, std::size_t r)
{
    if (r < 1)
        throw Error("mycielski needs r >= 1");
    if (g.loop_count() > 0)
        throw Error("mycielski needs a loop-free graph");

    const auto n = g.order();
    MycielskiGraph m;
    m.base_order = n;
    m.layers = r;
    GraphBuilder b(r * n + 1);
    for (auto [x, y] : g.edges()) {
        // loop at v_0 of P_r keeps a copy of G in layer 0
        b.add_edge(m.index(x, 0), m.index(y, 0));
        for (std::size_t k = 0; k + 1 < r; ++k) {
            b.add_edge(m.index(x, k), m.index(y, k + 1));
            b.add_edge(m.index(y, k), m.index(x, k + 1));
        }
        b.add_edge(m.index(x, r - 1), m.apex());
        b.add_edge(m.index(y, r - 1), m.apex());
    }
    m.graph = std::move(b).build();
    return m;
}

Graph mycielski_chain(const Graph & g, const std::vector<std::size_t> & rvec)
{
    Graph current = g;
    for (auto it = rvec.rbegin(); it != rvec.rend(); ++it)
        current = mycielski(current, *it).graph;
    return current;
}

std::vector<std::size_t> bfs_distances(const Graph & g, Vertex source)
{
    if (source >= g.order())
        throw Error("bfs source out of range: " + std::to_string(source));

    std::vector<std::size_t> dist(g.order(), unreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        g.neighbours(u).for_each([&](Vertex v) {
            if (dist[v] == unreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

std::vector<std::vector<std::size_t>> all_distances(const Graph & g)
{
    std::vector<std::vector<std::size_t>> out;
    out.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(bfs_distances(g, v));
    return out;
}

std::optional<std::size_t> odd_girth(const Graph & g)
{
    if (g.loop_count() > 0)
        throw Error("odd_girth is undefined for graphs with loops");

    // An edge joining two vertices at equal BFS depth d closes an odd walk of
    // length 2d + 1; rooted on a shortest odd cycle this is exact.
    std::optional<std::size_t> best;
    auto edges = g.edges();
    for (Vertex root = 0; root < g.order(); ++root) {
        auto dist = bfs_distances(g, root);
        for (auto [u, v] : edges)
            if (dist[u] != unreachable && dist[u] == dist[v]) {
                auto len = 2 * dist[u] + 1;
                if (! best || len < *best)
                    best = len;
            }
    }
    return best;
}

bool is_connected(const Graph & g)
{
    if (g.order() == 0)
        return true;
    for (auto d : bfs_distances(g, 0))
        if (d == unreachable)
            return false;
    return true;
}

} // namespace hedet
