#include <hedet/error.hpp>
#include <hedet/solvers.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

namespace hedet {

namespace {
    struct BudgetExhausted {
    };

    void require_loop_free(const Graph & g, const char * what)
    {
        if (g.loop_count() > 0)
            throw Error(std::string(what) + " is undefined for graphs with loops");
    }

    /// Vertices sorted by degree descending, ties by index.
    std::vector<Vertex> degree_order(const Graph & g)
    {
        std::vector<Vertex> order(g.order());
        std::iota(order.begin(), order.end(), Vertex{0});
        std::stable_sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    class ExtensionSearch {
    public:
        ExtensionSearch(const Graph & g, int c, std::uint64_t budget) :
            g_(g), c_(c), budget_(budget), colour_(g.order(), -1), domain_(g.order(), Bitset(static_cast<std::size_t>(c)))
        {
        }

        std::uint64_t nodes() const noexcept { return nodes_; }

        /// Returns true if a full colouring was found; throws BudgetExhausted.
        bool run(const PartialColoring & partial)
        {
            Bitset open(g_.order());
            for (Vertex v = 0; v < g_.order(); ++v) {
                if (partial[v] > 0)
                    colour_[v] = partial[v] - 1;
                else {
                    open.set(v);
                    domain_[v].set_all();
                }
            }
            for (Vertex v = 0; v < g_.order(); ++v)
                if (colour_[v] >= 0)
                    g_.neighbours(v).for_each([&](Vertex w) {
                        if (colour_[w] < 0)
                            domain_[w].reset(static_cast<std::size_t>(colour_[v]));
                    });
            build_clique_cover(open);
            return solve(std::move(open));
        }

        Coloring coloring() const
        {
            Coloring col;
            col.num_colours = c_;
            col.colours.reserve(colour_.size());
            for (auto k : colour_)
                col.colours.push_back(k + 1);
            return col;
        }

    private:
        struct Mark {
            std::size_t trail;
            std::size_t assigned;
        };

        Mark mark() const noexcept { return {trail_.size(), assigned_.size()}; }

        void undo(Mark m)
        {
            while (trail_.size() > m.trail) {
                auto [w, k] = trail_.back();
                trail_.pop_back();
                domain_[w].set(k);
            }
            while (assigned_.size() > m.assigned) {
                colour_[assigned_.back()] = -1;
                assigned_.pop_back();
            }
        }

        /// Colours v with k and prunes k from uncoloured neighbours; false on a wipeout.
        bool assign(Vertex v, std::size_t k)
        {
            colour_[v] = static_cast<int>(k);
            assigned_.push_back(v);
            bool ok = true;
            g_.neighbours(v).for_each([&](Vertex w) {
                if (colour_[w] < 0 && domain_[w].test(k)) {
                    domain_[w].reset(k);
                    trail_.emplace_back(w, k);
                    if (domain_[w].none())
                        ok = false;
                }
            });
            return ok;
        }

        /// Greedy partition of the open vertices into cliques, used for
        /// pigeonhole pruning. Degrees are taken inside the open subgraph.
        void build_clique_cover(const Bitset & open)
        {
            std::vector<std::size_t> degree(g_.order(), 0);
            std::vector<Vertex> order;
            open.for_each([&](Vertex v) {
                degree[v] = g_.neighbours(v).intersection_count(open);
                order.push_back(v);
            });
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });

            Bitset free = open;
            for (auto v : order) {
                if (! free.test(v))
                    continue;
                std::vector<Vertex> clique{v};
                free.reset(v);
                Bitset cand = g_.neighbours(v) & free;
                while (cand.any()) {
                    Vertex pick = cand.first();
                    cand.for_each([&](Vertex w) {
                        if (degree[w] > degree[pick])
                            pick = w;
                    });
                    clique.push_back(pick);
                    free.reset(pick);
                    cand &= g_.neighbours(pick);
                    cand.reset(pick);
                }
                if (clique.size() >= 3)
                    cliques_.push_back(std::move(clique));
            }
        }

        bool cliques_ok(const Bitset & scope) const
        {
            Bitset seen(static_cast<std::size_t>(c_));
            for (const auto & clique : cliques_) {
                std::size_t open = 0;
                seen.clear();
                for (auto v : clique)
                    if (scope.test(v)) {
                        ++open;
                        seen |= domain_[v];
                    }
                if (open > 1 && seen.count() < open)
                    return false;
            }
            return true;
        }

        std::vector<Bitset> components(const Bitset & scope) const
        {
            std::vector<Bitset> out;
            Bitset left = scope;
            while (left.any()) {
                Bitset comp(g_.order()), frontier(g_.order());
                frontier.set(left.first());
                while (frontier.any()) {
                    auto v = frontier.first();
                    frontier.reset(v);
                    comp.set(v);
                    left.reset(v);
                    Bitset next = g_.neighbours(v) & left;
                    next -= comp;
                    frontier |= next;
                }
                out.push_back(std::move(comp));
            }
            return out;
        }

        bool solve(Bitset scope)
        {
            if (++nodes_ > budget_)
                throw BudgetExhausted{};
            const auto start = mark();

            // singleton domains are forced
            for (bool changed = true; changed;) {
                changed = false;
                for (auto v = scope.first(); v != Bitset::npos; v = scope.next_from(v + 1)) {
                    auto size = domain_[v].count();
                    if (size == 0) {
                        undo(start);
                        return false;
                    }
                    if (size == 1) {
                        scope.reset(v);
                        changed = true;
                        if (! assign(v, domain_[v].first())) {
                            undo(start);
                            return false;
                        }
                    }
                }
            }

            if (scope.none())
                return true;
            if (! cliques_ok(scope)) {
                undo(start);
                return false;
            }

            auto comps = components(scope);
            if (comps.size() > 1) {
                for (auto & comp : comps)
                    if (! solve(std::move(comp))) {
                        undo(start);
                        return false;
                    }
                return true;
            }

            // smallest domain / open-degree ratio, then higher degree, then lower index
            Vertex best = Bitset::npos;
            std::size_t best_dom = 0, best_deg = 0;
            for (auto v = scope.first(); v != Bitset::npos; v = scope.next_from(v + 1)) {
                const auto dom = domain_[v].count();
                const auto deg = std::max<std::size_t>(g_.neighbours(v).intersection_count(scope), 1);
                bool better = best == Bitset::npos;
                if (! better) {
                    const auto lhs = dom * best_deg, rhs = best_dom * deg;
                    better = lhs < rhs || (lhs == rhs && g_.degree(v) > g_.degree(best));
                }
                if (better) {
                    best = v;
                    best_dom = dom;
                    best_deg = deg;
                }
            }

            scope.reset(best);
            const Bitset choices = domain_[best];
            for (auto k = choices.first(); k != Bitset::npos; k = choices.next_from(k + 1)) {
                const auto before = mark();
                if (assign(best, k) && solve(scope))
                    return true;
                undo(before);
            }
            undo(start);
            return false;
        }

        const Graph & g_;
        int c_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::vector<int> colour_;
        std::vector<Bitset> domain_;
        std::vector<std::pair<Vertex, std::size_t>> trail_;
        std::vector<Vertex> assigned_;
        std::vector<std::vector<Vertex>> cliques_;
    };

    class CliqueSearch {
    public:
        CliqueSearch(const Graph & g, std::uint64_t budget, std::size_t at_least) :
            budget_(budget), best_size_(at_least), order_(degree_order(g))
        {
            const auto n = g.order();
            std::vector<Vertex> position(n);
            for (Vertex k = 0; k < n; ++k)
                position[order_[k]] = k;
            rows_.assign(n, Bitset(n));
            for (Vertex k = 0; k < n; ++k)
                g.neighbours(order_[k]).for_each([&](Vertex w) {
                    if (w != order_[k])
                        rows_[k].set(position[w]);
                });
        }

        CliqueResult run()
        {
            CliqueResult result;
            Bitset all(rows_.size());
            all.set_all();
            std::vector<Vertex> current;
            try {
                if (! rows_.empty())
                    expand(current, all);
                result.exact = true;
            }
            catch (const BudgetExhausted &) {
                result.exact = false;
            }
            for (auto k : best_)
                result.clique.push_back(order_[k]);
            std::sort(result.clique.begin(), result.clique.end());
            result.nodes = nodes_;
            return result;
        }

    private:
        void expand(std::vector<Vertex> & current, Bitset candidates)
        {
            if (++nodes_ > budget_)
                throw BudgetExhausted{};

            std::vector<Vertex> order;
            std::vector<std::size_t> bound;
            Bitset uncoloured = candidates;
            for (std::size_t colour = 1; uncoloured.any(); ++colour) {
                Bitset cls = uncoloured;
                while (cls.any()) {
                    auto v = cls.first();
                    cls.reset(v);
                    cls -= rows_[v];
                    uncoloured.reset(v);
                    order.push_back(v);
                    bound.push_back(colour);
                }
            }

            for (auto idx = order.size(); idx-- > 0;) {
                if (current.size() + bound[idx] <= best_size_)
                    return;
                auto v = order[idx];
                current.push_back(v);
                Bitset next = candidates & rows_[v];
                if (next.none()) {
                    if (current.size() > best_size_) {
                        best_size_ = current.size();
                        best_ = current;
                    }
                }
                else
                    expand(current, std::move(next));
                current.pop_back();
                candidates.reset(v);
            }
        }

        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::size_t best_size_;
        std::vector<Vertex> best_;
        std::vector<Vertex> order_;
        std::vector<Bitset> rows_;
    };
}

const char * to_string(Feasibility f) noexcept
{
    switch (f) {
    case Feasibility::feasible: return "feasible";
    case Feasibility::infeasible: return "infeasible";
    case Feasibility::unknown: return "unknown";
    }
    return "?";
}

ProperCheck is_proper(const Graph & g, const Coloring & col)
{
    if (col.colours.size() != g.order())
        throw Error("colouring covers " + std::to_string(col.colours.size()) + " vertices, graph has "
            + std::to_string(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        if (col.colours[v] < 1 || col.colours[v] > col.num_colours)
            throw Error("colour " + std::to_string(col.colours[v]) + " of vertex " + std::to_string(v)
                + " outside [1, " + std::to_string(col.num_colours) + "]");

    for (Vertex u = 0; u < g.order(); ++u)
        for (auto v = g.neighbours(u).next_from(u); v != Bitset::npos; v = g.neighbours(u).next_from(v + 1))
            if (col.colours[u] == col.colours[v])
                return {false, Edge{u, v}};
    return {};
}

ExtensionResult extendable(const Graph & g, const PartialColoring & partial, int c, std::uint64_t budget)
{
    require_loop_free(g, "colouring");
    if (c < 1)
        throw Error("colour count must be positive");
    if (partial.size() != g.order())
        throw Error("partial colouring has the wrong length");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (partial[v] < 0 || partial[v] > c)
            throw Error("partial colour of vertex " + std::to_string(v) + " outside [0, " + std::to_string(c) + "]");
        if (partial[v] > 0)
            g.neighbours(v).for_each([&](Vertex w) {
                if (partial[w] == partial[v])
                    throw Error("partial colouring is not proper at edge " + std::to_string(v) + "-" + std::to_string(w));
            });
    }

    ExtensionSearch search(g, c, budget);
    ExtensionResult result;
    try {
        if (search.run(partial)) {
            result.status = Feasibility::feasible;
            result.coloring = search.coloring();
        }
        else
            result.status = Feasibility::infeasible;
    }
    catch (const BudgetExhausted &) {
        result.status = Feasibility::unknown;
    }
    result.nodes = search.nodes();
    return result;
}

Coloring dsatur_coloring(const Graph & g)
{
    require_loop_free(g, "colouring");
    const auto n = g.order();
    Coloring col;
    col.colours.assign(n, 0);
    std::vector<Bitset> seen(n, Bitset(n + 2));
    std::vector<std::size_t> saturation(n, 0);

    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v) {
            if (col.colours[v] != 0)
                continue;
            if (pick == n || saturation[v] > saturation[pick]
                || (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        std::size_t k = 1;
        while (seen[pick].test(k))
            ++k;
        col.colours[pick] = static_cast<int>(k);
        col.num_colours = std::max(col.num_colours, static_cast<int>(k));
        g.neighbours(pick).for_each([&](Vertex w) {
            if (! seen[w].test(k)) {
                seen[w].set(k);
                ++saturation[w];
            }
        });
    }
    return col;
}

ChromaticResult chromatic_number(const Graph & g, std::uint64_t budget)
{
    require_loop_free(g, "chromatic number");
    ChromaticResult result;
    if (g.order() == 0) {
        result.value = 0;
        return result;
    }

    auto clique = max_clique(g, budget);
    result.nodes = clique.nodes;
    result.best = dsatur_coloring(g);
    result.upper = result.best.num_colours;
    result.lower = static_cast<int>(clique.clique.size());

    PartialColoring pin(g.order(), 0);
    for (std::size_t k = 0; k < clique.clique.size(); ++k)
        pin[clique.clique[k]] = static_cast<int>(k) + 1;

    while (result.lower < result.upper) {
        auto remaining = budget > result.nodes ? budget - result.nodes : 0;
        auto ext = extendable(g, pin, result.lower, remaining);
        result.nodes += ext.nodes;
        if (ext.status == Feasibility::unknown)
            return result;
        if (ext.status == Feasibility::feasible) {
            result.best = *ext.coloring;
            result.upper = result.lower;
        }
        else
            ++result.lower;
    }
    result.value = result.upper;
    return result;
}

CliqueResult max_clique(const Graph & g, std::uint64_t budget, std::size_t at_least)
{
    return CliqueSearch(g, budget, at_least).run();
}

IndependenceResult independence_number(const Graph & g, std::uint64_t budget)
{
    require_loop_free(g, "independence number");
    auto clique = max_clique(g.complement(), budget);
    IndependenceResult result;
    result.witness = clique.clique;
    result.lower = clique.clique.size();
    result.upper = clique.exact ? result.lower : g.order();
    if (clique.exact)
        result.value = result.lower;
    result.nodes = clique.nodes;
    return result;
}

std::optional<bool> has_independent_set(const Graph & g, std::size_t size, std::uint64_t budget)
{
    require_loop_free(g, "independent set search");
    if (size == 0)
        return true;
    auto clique = max_clique(g.complement(), budget, size - 1);
    if (clique.clique.size() >= size)
        return true;
    if (clique.exact)
        return false;
    return std::nullopt;
}

void write_coloring_cnf(std::ostream & out, const Graph & g, int c, const PartialColoring & pin)
{
    require_loop_free(g, "colouring");
    if (pin.size() != g.order())
        throw Error("pin has the wrong length");
    const auto cc = static_cast<std::size_t>(c);
    auto var = [&](Vertex v, std::size_t k) { return v * cc + k; };

    std::size_t units = 0;
    for (auto k : pin)
        if (k > 0)
            ++units;
    out << "c proper " << c << "-colouring of a " << g.order() << "-vertex graph\n";
    out << "c variable v*" << c << "+k means vertex v (0-based) takes colour k (1-based)\n";
    out << "p cnf " << g.order() * cc << ' ' << g.order() + g.edge_count() * cc + units << '\n';
    for (Vertex v = 0; v < g.order(); ++v) {
        for (std::size_t k = 1; k <= cc; ++k)
            out << var(v, k) << ' ';
        out << "0\n";
    }
    for (auto [u, v] : g.edges())
        for (std::size_t k = 1; k <= cc; ++k)
            out << '-' << var(u, k) << " -" << var(v, k) << " 0\n";
    for (Vertex v = 0; v < g.order(); ++v)
        if (pin[v] > 0)
            out << var(v, static_cast<std::size_t>(pin[v])) << " 0\n";
}

} // namespace hedet
