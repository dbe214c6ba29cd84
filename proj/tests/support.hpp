#pragma once

#include "oracles.hpp"

#include <hedet/graph.hpp>

namespace support {

inline oracle::Matrix to_matrix(const hedet::Graph & g)
{
    auto m = oracle::empty(g.order());
    for (auto [u, v] : g.edges())
        m[u][v] = m[v][u] = true;
    return m;
}

inline hedet::Graph from_matrix(const oracle::Matrix & m, bool allow_loops = false)
{
    hedet::GraphBuilder b(m.size(), allow_loops);
    for (std::size_t u = 0; u < m.size(); ++u)
        for (std::size_t v = u; v < m.size(); ++v)
            if (m[u][v])
                b.add_edge(u, v);
    return std::move(b).build();
}

inline hedet::Graph cycle(std::size_t n) { return hedet::generate(hedet::GraphKind::cycle, n); }
inline hedet::Graph complete(std::size_t n) { return hedet::generate(hedet::GraphKind::complete, n); }
inline hedet::Graph petersen() { return hedet::generate(hedet::GraphKind::petersen, 10); }
inline hedet::Graph groetzsch() { return hedet::mycielski(cycle(5), 2).graph; }

inline hedet::Graph two_triangles()
{
    hedet::GraphBuilder b(6);
    for (hedet::Vertex base : {0, 3}) {
        b.add_edge(base, base + 1);
        b.add_edge(base + 1, base + 2);
        b.add_edge(base, base + 2);
    }
    return std::move(b).build();
}

} // namespace support
