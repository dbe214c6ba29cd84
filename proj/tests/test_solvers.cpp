#include "support.hpp"

#include <hedet/error.hpp>
#include <hedet/solvers.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace hedet;
using support::to_matrix;

namespace {
    Coloring colouring(std::vector<int> colours, int c) { return {std::move(colours), c}; }

    std::vector<Graph> corpus()
    {
        return {support::cycle(5), support::cycle(7), support::complete(5), support::petersen(), support::groetzsch(),
            support::two_triangles(), mycielski(support::cycle(7), 3).graph, lex_complete(support::cycle(5), 2).graph,
            generate(GraphKind::edgeless, 3), mycielski(support::groetzsch(), 2).graph};
    }
}

TEST_SUITE("solvers")
{
    TEST_CASE("is_proper")
    {
        auto c7 = support::cycle(7);
        CHECK(is_proper(c7, colouring({1, 2, 1, 2, 1, 2, 3}, 3)).proper);

        auto bad = is_proper(support::complete(3), colouring({1, 1, 1}, 1));
        CHECK_FALSE(bad.proper);
        REQUIRE(bad.witness.has_value());
        CHECK(bad.witness->first != bad.witness->second);

        auto looped = generate(GraphKind::path_with_loop, 2);
        for (int a = 1; a <= 3; ++a) {
            auto r = is_proper(looped, colouring({a, a % 3 + 1, a}, 3));
            CHECK_FALSE(r.proper);
            CHECK(r.witness == std::optional<Edge>(Edge{0, 0}));
        }

        CHECK_THROWS_AS(is_proper(c7, colouring({1, 2, 3}, 3)), Error);
        CHECK_THROWS_AS(is_proper(c7, colouring({1, 2, 1, 2, 1, 2, 4}, 3)), Error);
        CHECK_THROWS_AS(is_proper(c7, colouring({1, 2, 1, 2, 1, 2, 0}, 3)), Error);
    }

    TEST_CASE("chromatic number")
    {
        CHECK(chromatic_number(support::cycle(7)).value == std::optional<int>(3));
        CHECK(chromatic_number(support::groetzsch()).value == std::optional<int>(4));
        CHECK(chromatic_number(support::petersen()).value == std::optional<int>(3));
        CHECK(chromatic_number(generate(GraphKind::edgeless, 4)).value == std::optional<int>(1));
        CHECK(chromatic_number(support::complete(6)).value == std::optional<int>(6));
        CHECK_THROWS_AS(chromatic_number(generate(GraphKind::path_with_loop, 2)), Error);
    }

    TEST_CASE("chromatic number agrees with naive search")
    {
        for (const auto & g : corpus()) {
            if (g.order() > 25)
                continue;
            auto r = chromatic_number(g);
            REQUIRE(r.value.has_value());
            CHECK(*r.value == oracle::chromatic(to_matrix(g)));
            CHECK(is_proper(g, r.best).proper);
            CHECK(r.best.num_colours == *r.value);
        }
    }

    TEST_CASE("chromatic number invariants")
    {
        for (const auto & g : corpus()) {
            auto r = chromatic_number(g);
            REQUIRE(r.value.has_value());
            const int chi = *r.value;
            const PartialColoring none(g.order(), 0);
            if (chi > 1)
                CHECK(extendable(g, none, chi - 1).status == Feasibility::infeasible);
            CHECK(extendable(g, none, chi).status == Feasibility::feasible);
            auto alpha = independence_number(g);
            REQUIRE(alpha.value.has_value());
            CHECK(static_cast<std::size_t>(chi) * *alpha.value >= g.order());
            CHECK(static_cast<std::size_t>(chi) >= max_clique(g).clique.size());
            CHECK(is_proper(g, dsatur_coloring(g)).proper);
        }
    }

    TEST_CASE("budget exhaustion is reported, not guessed")
    {
        auto r = chromatic_number(mycielski(support::groetzsch(), 2).graph, 3);
        CHECK_FALSE(r.value.has_value());
        CHECK(r.lower <= r.upper);
        CHECK(is_proper(mycielski(support::groetzsch(), 2).graph, r.best).proper);

        auto e = extendable(support::groetzsch(), PartialColoring(11, 0), 3, 1);
        CHECK(e.status == Feasibility::unknown);
        CHECK_FALSE(e.coloring.has_value());
    }

    TEST_CASE("extendable")
    {
        auto k3 = support::complete(3);
        auto yes = extendable(k3, {1, 2, 0}, 3);
        CHECK(yes.status == Feasibility::feasible);
        REQUIRE(yes.coloring.has_value());
        CHECK(yes.coloring->colours == std::vector<int>{1, 2, 3});
        CHECK(extendable(k3, {1, 2, 0}, 2).status == Feasibility::infeasible);

        CHECK_THROWS_AS(extendable(k3, {1, 1, 0}, 3), Error);
        CHECK_THROWS_AS(extendable(k3, {1, 4, 0}, 3), Error);
        CHECK_THROWS_AS(extendable(k3, {1, 0}, 3), Error);
        CHECK_THROWS_AS(extendable(k3, {0, 0, 0}, 0), Error);
    }

    TEST_CASE("extendable is monotone in c")
    {
        for (const auto & g : corpus()) {
            PartialColoring pin(g.order(), 0);
            pin[0] = 1;
            bool seen = false;
            for (int c = 1; c <= 6; ++c) {
                auto r = extendable(g, pin, c);
                REQUIRE(r.status != Feasibility::unknown);
                const bool ok = r.status == Feasibility::feasible;
                CHECK((ok || ! seen));
                seen = seen || ok;
                if (ok) {
                    CHECK(is_proper(g, *r.coloring).proper);
                    CHECK(r.coloring->colours[0] == 1);
                }
            }
        }
    }

    TEST_CASE("pinned colours are respected")
    {
        // C_6 with opposite vertices forced equal still 2-colours; adjacent ones cannot share
        auto c6 = support::cycle(6);
        CHECK(extendable(c6, {1, 0, 0, 2, 0, 0}, 2).status == Feasibility::feasible);
        CHECK(extendable(c6, {1, 0, 1, 0, 0, 0}, 2).status == Feasibility::feasible);
        CHECK(extendable(c6, {1, 0, 0, 1, 0, 0}, 2).status == Feasibility::infeasible);
        CHECK(extendable(support::two_triangles(), {1, 2, 0, 3, 0, 0}, 3).status == Feasibility::feasible);
    }

    TEST_CASE("independence number")
    {
        CHECK(independence_number(support::cycle(7)).value == std::optional<std::size_t>(3));
        CHECK(independence_number(support::petersen()).value == std::optional<std::size_t>(4));
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(independence_number(support::complete(n)).value == std::optional<std::size_t>(1));
        for (const auto & g : corpus()) {
            if (g.order() > 25)
                continue;
            auto r = independence_number(g);
            REQUIRE(r.value.has_value());
            CHECK(*r.value == oracle::alpha(to_matrix(g)));
            CHECK(r.witness.size() == *r.value);
            for (auto u : r.witness)
                for (auto v : r.witness)
                    CHECK_FALSE(g.adjacent(u, v));
        }
    }

    TEST_CASE("has_independent_set")
    {
        auto pet = support::petersen();
        CHECK(has_independent_set(pet, 4) == std::optional<bool>(true));
        CHECK(has_independent_set(pet, 5) == std::optional<bool>(false));
        CHECK(has_independent_set(support::cycle(83), 41) == std::optional<bool>(true));
        CHECK(has_independent_set(support::cycle(83), 42) == std::optional<bool>(false));
    }

    TEST_CASE("max clique")
    {
        CHECK(max_clique(support::complete(5)).clique.size() == 5);
        CHECK(max_clique(support::petersen()).clique.size() == 2);
        auto r = max_clique(support::two_triangles());
        CHECK(r.exact);
        REQUIRE(r.clique.size() == 3);
        for (auto u : r.clique)
            for (auto v : r.clique)
                CHECK((u == v || support::two_triangles().adjacent(u, v)));
        auto bounded = max_clique(support::two_triangles(), default_node_budget, 3);
        CHECK(bounded.exact);
        CHECK(bounded.clique.size() < 4);
    }

    TEST_CASE("coloring cnf")
    {
        std::ostringstream out;
        write_coloring_cnf(out, support::complete(2), 2, {1, 0});
        const std::string text = out.str();
        CHECK(text.find("p cnf 4 5\n") != std::string::npos);
        CHECK(text.find("\n1 2 0\n") != std::string::npos);
        CHECK(text.find("\n-1 -3 0\n") != std::string::npos);
        CHECK(text.find("\n1 0\n") != std::string::npos);
    }

    TEST_CASE("coloring cnf is satisfiable exactly when the extension exists")
    {
        // brute-force every assignment of the exported formula
        auto satisfiable = [](const std::string & text) {
            std::istringstream in(text);
            std::string line;
            std::size_t vars = 0;
            std::vector<std::vector<long>> clauses;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == 'c')
                    continue;
                std::istringstream ls(line);
                if (line[0] == 'p') {
                    std::string p, cnf;
                    ls >> p >> cnf >> vars;
                    continue;
                }
                std::vector<long> clause;
                for (long lit; ls >> lit && lit != 0;)
                    clause.push_back(lit);
                clauses.push_back(clause);
            }
            for (std::uint32_t bits = 0; bits < (1U << vars); ++bits) {
                bool all = true;
                for (const auto & clause : clauses) {
                    bool any = false;
                    for (auto lit : clause) {
                        const bool value = (bits >> (std::abs(lit) - 1)) & 1U;
                        any = any || (lit > 0 ? value : ! value);
                    }
                    all = all && any;
                }
                if (all)
                    return true;
            }
            return false;
        };

        struct Case {
            Graph g;
            int c;
            PartialColoring pin;
        };
        const std::vector<Case> cases{{support::complete(3), 2, {0, 0, 0}}, {support::complete(3), 3, {1, 2, 0}},
            {support::cycle(5), 2, {0, 0, 0, 0, 0}}, {support::cycle(5), 3, {1, 0, 1, 0, 0}},
            {support::cycle(6), 2, {1, 0, 0, 1, 0, 0}}, {support::cycle(6), 2, {1, 0, 0, 2, 0, 0}}};
        for (const auto & k : cases) {
            std::ostringstream out;
            write_coloring_cnf(out, k.g, k.c, k.pin);
            CHECK(satisfiable(out.str()) == (extendable(k.g, k.pin, k.c).status == Feasibility::feasible));
        }
    }
}
