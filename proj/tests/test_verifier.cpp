#include "support.hpp"

#include <hedet/error.hpp>
#include <hedet/verifier.hpp>

#include <doctest.h>

using namespace hedet;

namespace {
    Params params(Graph f, int q, int c = 0, bool experimental = false)
    {
        return Params{std::move(f), q, c ? c : 3 * q + 2, experimental, "test"};
    }

    struct Built {
        Instance inst;
        LexGraph g;
        Graph h;

        explicit Built(Params p) : inst(std::move(p)), g(build_G(inst)), h(build_H(inst)) {}
    };

    /// Embedding check straight from the definitions: reference clause
    /// predicate for H, reference lexicographic product for G, case
    /// formulas for the maps.
    bool reference_embeds(const Graph & f, int q, int c)
    {
        const int p = static_cast<int>(f.order());
        const auto fm = support::to_matrix(f);
        const auto gm = oracle::lex(fm, static_cast<std::size_t>(q));
        const auto d = oracle::distances(fm);
        auto value = [&](const oracle::Tag & y, std::size_t x) {
            const int s = static_cast<int>(x) / q + 1, j = static_cast<int>(x) % q + 1;
            const int i = std::get<1>(y);
            const auto dist = i >= 1 && i <= p ? d[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i - 1)] : 0;
            return oracle::vertex_map(y, s, j, q, dist);
        };
        const auto vs = oracle::gadget_vertices(p, q, c);
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                if (! oracle::gadget_adjacent(vs[a], vs[b], p, q))
                    continue;
                for (std::size_t x = 0; x < gm.size(); ++x)
                    for (std::size_t y = 0; y < gm.size(); ++y)
                        if (gm[x][y] && value(vs[a], x) == value(vs[b], y))
                            return false;
            }
        return true;
    }

    std::vector<Params> corpus()
    {
        GraphBuilder k2(2);
        k2.add_edge(0, 1);
        return {params(support::cycle(7), 3), params(support::cycle(5), 2), params(support::cycle(5), 3), params(support::cycle(7), 4),
            params(support::cycle(3), 1), params(support::complete(1), 1), params(std::move(k2).build(), 1),
            params(generate(GraphKind::edgeless, 3), 1), params(support::two_triangles(), 3), params(support::petersen(), 5),
            params(support::groetzsch(), 5), params(support::cycle(9), 4), params(support::cycle(7), 3, 12, true),
            params(support::cycle(7), 3, 13, true), params(support::cycle(5), 2, 10, true)};
    }
}

TEST_SUITE("verifier")
{
    TEST_CASE("mode names")
    {
        CHECK(parse_embedding_mode("structured") == EmbeddingMode::structured);
        CHECK(parse_embedding_mode("bruteforce") == EmbeddingMode::bruteforce);
        CHECK_THROWS_AS(parse_embedding_mode("fast"), Error);
        CHECK(std::string(to_string(Status::unknown)) == "unknown");
    }

    TEST_CASE("C7 embeds in both modes")
    {
        Built b(params(support::cycle(7), 3));
        CHECK(reference_embeds(support::cycle(7), 3, 11));
        for (auto mode : {EmbeddingMode::bruteforce, EmbeddingMode::structured})
            for (unsigned workers : {1U, 4U}) {
                auto r = check_embedding(b.inst, b.g, b.h, mode, workers);
                CHECK(r.pass);
                CHECK(r.h_edges == 731);
                CHECK_FALSE(r.violation.has_value());
            }
        CHECK(check_embedding(b.inst, b.g, b.h, EmbeddingMode::structured).disjoint_images > 0);
    }

    TEST_CASE("C5 negative control")
    {
        Built b(params(support::cycle(5), 2));
        CHECK_FALSE(reference_embeds(support::cycle(5), 2, 8));
        const EmbeddingViolation expected{HVertex::mu(1, 4), HVertex::mu(1, 5), 3, 1, 4, 1, 2};
        for (auto mode : {EmbeddingMode::bruteforce, EmbeddingMode::structured})
            for (unsigned workers : {1U, 3U}) {
                auto r = check_embedding(b.inst, b.g, b.h, mode, workers);
                CHECK_FALSE(r.pass);
                REQUIRE(r.violation.has_value());
                CHECK(*r.violation == expected);
                CHECK(replay(b.inst, b.g, b.h, *r.violation));
            }
        CHECK(b.inst.distance(3, 1) == 2);
        CHECK(b.inst.distance(4, 1) == 2);

        auto pc = check_product_coloring(b.inst, b.g, b.h);
        CHECK(pc.status == Status::fail);
        REQUIRE(pc.witness.has_value());
        CHECK(replay(b.inst, b.g, b.h, *pc.witness));

        auto json = to_json(expected);
        CHECK(json.dump() == R"({"h_edge":["mu:1:4","mu:1:5"],"g_edge":["3:1","4:1"],"colour":2})");
    }

    TEST_CASE("replay rejects tampered witnesses")
    {
        Built b(params(support::cycle(5), 2));
        EmbeddingViolation v{HVertex::mu(1, 4), HVertex::mu(1, 5), 3, 1, 4, 1, 2};
        REQUIRE(replay(b.inst, b.g, b.h, v));
        auto wrong_colour = v;
        wrong_colour.colour = 3;
        CHECK_FALSE(replay(b.inst, b.g, b.h, wrong_colour));
        auto not_g_edge = v;
        not_g_edge.s2 = 5;
        not_g_edge.j2 = 2;
        CHECK_FALSE(replay(b.inst, b.g, b.h, not_g_edge));
        auto not_h_edge = v;
        not_h_edge.second = HVertex::mu(2, 5);
        CHECK_FALSE(replay(b.inst, b.g, b.h, not_h_edge));
        auto out_of_range = v;
        out_of_range.j1 = 7;
        CHECK_FALSE(replay(b.inst, b.g, b.h, out_of_range));
    }

    TEST_CASE("modes, product and reference agree on the corpus")
    {
        for (const auto & p : corpus()) {
            Built b(p);
            auto brute = check_embedding(b.inst, b.g, b.h, EmbeddingMode::bruteforce);
            auto fast = check_embedding(b.inst, b.g, b.h, EmbeddingMode::structured);
            auto parallel = check_embedding(b.inst, b.g, b.h, EmbeddingMode::structured, 4);
            CHECK(brute.pass == fast.pass);
            CHECK(brute.violation == fast.violation);
            CHECK(fast.violation == parallel.violation);
            if (! p.experimental)
                CHECK(brute.pass == reference_embeds(p.seed, p.q, p.c));
            if (brute.violation)
                CHECK(replay(b.inst, b.g, b.h, *brute.violation));

            auto pc = check_product_coloring(b.inst, b.g, b.h, 1'000'000);
            CHECK_FALSE(pc.skipped);
            CHECK((pc.status == Status::pass) == brute.pass);
            if (pc.witness)
                CHECK(replay(b.inst, b.g, b.h, *pc.witness));
        }
    }

    TEST_CASE("odd girth 7 seeds embed, shorter odd cycles do not")
    {
        for (std::size_t n : {7, 9, 11})
            for (int q = static_cast<int>(n / 2); q <= static_cast<int>(n / 2) + 1; ++q) {
                Built b(params(support::cycle(n), q));
                CHECK(check_embedding(b.inst, b.g, b.h, EmbeddingMode::structured).pass);
            }
        for (const auto & f : {support::cycle(3), support::cycle(5), support::petersen(), support::groetzsch()}) {
            Built b(params(f, static_cast<int>(f.order() / 2)));
            CHECK_FALSE(check_embedding(b.inst, b.g, b.h, EmbeddingMode::structured).pass);
        }
    }

    TEST_CASE("edgeless seeds embed")
    {
        for (int p = 1; p <= 5; ++p) {
            Built b(params(generate(GraphKind::edgeless, static_cast<std::size_t>(p)), (p + 1) / 2));
            CHECK(check_embedding(b.inst, b.g, b.h, EmbeddingMode::bruteforce).pass);
            CHECK(check_embedding(b.inst, b.g, b.h, EmbeddingMode::structured).pass);
        }
    }

    TEST_CASE("product guard")
    {
        Built b(params(support::cycle(7), 3));
        auto pc = check_product_coloring(b.inst, b.g, b.h);
        CHECK(pc.status == Status::pass);
        CHECK(pc.order == 1869);
        auto skipped = check_product_coloring(b.inst, b.g, b.h, 1000);
        CHECK(skipped.skipped);
        CHECK(skipped.status == Status::unknown);
    }

    TEST_CASE("chi(H) > c")
    {
        for (auto [n, q] : {std::pair{7, 3}, std::pair{5, 2}, std::pair{9, 4}, std::pair{3, 1}}) {
            Built b(params(support::cycle(static_cast<std::size_t>(n)), q));
            auto r = check_h_lower(b.inst, b.h, b.inst.c());
            CHECK(r.status == Status::pass);
            CHECK_FALSE(r.coloring.has_value());

            auto more = check_h_lower(b.inst, b.h, b.inst.c() + 1);
            CHECK(more.status == Status::fail);
            REQUIRE(more.coloring.has_value());
            CHECK(is_proper(b.h, *more.coloring).proper);
        }
        Built c5(params(support::cycle(5), 2));
        CHECK(chromatic_number(c5.h).value == std::optional<int>(9));
        Built c3(params(support::cycle(3), 1));
        CHECK(oracle::chromatic(support::to_matrix(c3.h)) == 6);
    }

    TEST_CASE("chi(H) > c fails without the theta layer")
    {
        Built b(params(support::cycle(7), 3));
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < b.h.order(); ++v)
            if (b.inst.h_vertex(v).kind != HVertex::Kind::theta)
                keep.push_back(v);
        auto reduced = b.h.induced(keep);
        auto r = check_h_lower(b.inst, reduced, 11);
        CHECK(r.status == Status::fail);
        REQUIRE(r.coloring.has_value());
        CHECK(is_proper(reduced, *r.coloring).proper);

        // the explicit colouring g_i -> i, phi -> 1, mu_{i,t} -> t clashes
        // with g_i when i == t; sending mu_{i,i} to 1 repairs it
        auto explicit_colouring = [&](bool repaired) {
            Coloring col{std::vector<int>(keep.size()), 11};
            for (std::size_t k = 0; k < keep.size(); ++k) {
                auto y = b.inst.h_vertex(keep[k]);
                switch (y.kind) {
                case HVertex::Kind::g: col.colours[k] = y.i; break;
                case HVertex::Kind::phi: col.colours[k] = 1; break;
                default: col.colours[k] = repaired && y.i == y.t ? 1 : y.t; break;
                }
            }
            return col;
        };
        auto literal = is_proper(reduced, explicit_colouring(false));
        CHECK_FALSE(literal.proper);
        REQUIRE(literal.witness.has_value());
        CHECK(b.inst.h_vertex(keep[literal.witness->first]) == HVertex::g(5));
        CHECK(b.inst.h_vertex(keep[literal.witness->second]) == HVertex::mu(5, 5));
        CHECK(is_proper(reduced, explicit_colouring(true)).proper);
    }

    TEST_CASE("chi(H) > c under a tiny budget is unknown")
    {
        Built b(params(support::cycle(7), 3));
        auto r = check_h_lower(b.inst, b.h, 11, 1);
        CHECK(r.status == Status::unknown);
    }

    TEST_CASE("chi(G) > c")
    {
        Instance c7(params(support::cycle(7), 3));
        auto r = check_g_lower(c7);
        CHECK(r.status == Status::fail);
        CHECK(r.route == "lp");
        CHECK(to_string(r.chi_f_lower) == "7/3");
        CHECK(to_string(r.product) == "7/1");

        GLowerOptions n_alpha;
        n_alpha.lp_vertex_limit = 0;
        auto ra = check_g_lower(c7, n_alpha);
        CHECK(ra.route == "n/alpha");
        CHECK(ra.alpha == std::optional<std::size_t>(3));
        CHECK(ra.chi_f_lower == r.chi_f_lower);

        // boundary: 2 * 4 = 8 is not > 8
        Instance k4(params(support::complete(4), 2));
        auto rk = check_g_lower(k4);
        CHECK(rk.status == Status::fail);
        CHECK(rk.product == Rational(8));

        Instance k7(params(support::complete(7), 3));
        CHECK(check_g_lower(k7).status == Status::pass);

        // the full-scale inequality 41 * 83 / 27 > 125
        Rational bound(83, 27);
        CHECK(bound * 41 > Rational(125));
        CHECK(to_string(Rational(41) * bound) == "3403/27");
    }

    TEST_CASE("alpha bound is verified before use")
    {
        Instance c83(params(support::cycle(83), 41));
        GLowerOptions right;
        right.alpha_bound = 41;
        auto r = check_g_lower(c83, right);
        CHECK(r.route == "n/alpha");
        CHECK(r.alpha == std::optional<std::size_t>(41));
        CHECK(to_string(r.chi_f_lower) == "83/41");
        CHECK(r.status == Status::fail);

        GLowerOptions wrong;
        wrong.alpha_bound = 27;
        auto w = check_g_lower(c83, wrong);
        CHECK(w.alpha == std::optional<std::size_t>(41));
        CHECK(w.chi_f_lower == r.chi_f_lower);

        GLowerOptions starved;
        starved.alpha_bound = 27;
        starved.budget = 1;
        CHECK(check_g_lower(c83, starved).status == Status::unknown);
    }

    TEST_CASE("full verification of C7")
    {
        VerifyOptions options;
        options.timings = false;
        auto report = full_verify(params(support::cycle(7), 3), options);
        CHECK_FALSE(report.verified);
        CHECK(report.failed);
        CHECK(report.verdict.rfind("not a counterexample", 0) == 0);
        CHECK(report.verdict.find("chi(G) bound fails") != std::string::npos);
        CHECK(report.verdict.find("7/1 <= c = 11") != std::string::npos);
        CHECK(report.find("g_lower")->status == Status::fail);
        CHECK(report.find("h_lower")->status == Status::pass);
        CHECK(report.find("embedding")->status == Status::pass);
        CHECK(report.find("product_coloring")->status == Status::pass);
        CHECK(report.find("odd_girth_audit")->status == Status::pass);
        CHECK(report.find("nothing") == nullptr);

        auto json = report.to_json();
        CHECK(json["params"]["p"] == 7);
        CHECK(json["checks"].size() == 6);
        CHECK(json["checks"][2]["witness"]["q_times_bound"] == "7/1");
        // every failing check carries a witness
        for (const auto & c : json["checks"])
            if (c["status"] == "fail")
                CHECK_FALSE(c["witness"].is_null());
    }

    TEST_CASE("full verification of C5")
    {
        auto report = full_verify(params(support::cycle(5), 2));
        auto embedding = report.find("embedding");
        REQUIRE(embedding != nullptr);
        CHECK(embedding->status == Status::fail);
        CHECK(embedding->witness["h_edge"][0] == "mu:1:4");
        CHECK(embedding->witness["colour"] == 2);
        CHECK(report.find("odd_girth_audit")->status == Status::fail);
        CHECK(report.find("product_coloring")->status == Status::fail);
        CHECK(report.verdict.find("H does not embed") != std::string::npos);
    }

    TEST_CASE("invalid parameters produce a report")
    {
        auto report = full_verify(params(support::cycle(7), 2));
        CHECK(report.failed);
        CHECK(report.checks.size() == 1);
        CHECK(report.verdict.rfind("invalid parameters", 0) == 0);
    }

    TEST_CASE("unknown never upgrades to verified")
    {
        VerifyOptions options;
        options.budget = 1;
        auto report = full_verify(params(support::cycle(7), 3), options);
        CHECK(report.find("h_lower")->status == Status::unknown);
        CHECK_FALSE(report.verified);
    }

    TEST_CASE("reports are deterministic")
    {
        VerifyOptions options;
        options.timings = false;
        options.workers = 4;
        for (const auto & p : {params(support::cycle(7), 3), params(support::cycle(5), 2)}) {
            auto a = full_verify(p, options).to_json().dump(2);
            auto b = full_verify(p, options).to_json().dump(2);
            CHECK(a == b);
        }
    }

    TEST_CASE("experimental runs are labelled")
    {
        VerifyOptions options;
        options.timings = false;
        auto report = full_verify(params(support::cycle(7), 3, 13, true), options);
        CHECK(report.to_json()["params"]["c_mode"].get<std::string>().rfind("experimental", 0) == 0);
        CHECK(report.find("embedding")->status == Status::pass);
    }
}
