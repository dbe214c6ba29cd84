#include <hedet/error.hpp>
#include <hedet/verifier.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>

namespace hedet {

const char * to_string(Status s) noexcept
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unknown: return "unknown";
    }
    return "?";
}

EmbeddingMode parse_embedding_mode(const std::string & name)
{
    if (name == "bruteforce")
        return EmbeddingMode::bruteforce;
    if (name == "structured")
        return EmbeddingMode::structured;
    throw Error("unknown embedding mode '" + name + "'");
}

const char * to_string(EmbeddingMode m) noexcept
{
    return m == EmbeddingMode::bruteforce ? "bruteforce" : "structured";
}

namespace {
    using ColourRow = std::vector<std::uint16_t>;

    /// All H-vertex maps as flat colour rows in G order.
    std::vector<ColourRow> all_maps(const Instance & inst)
    {
        std::vector<ColourRow> maps(inst.h_order());
        for (Vertex y = 0; y < inst.h_order(); ++y) {
            auto label = inst.h_vertex(y);
            auto & row = maps[y];
            row.resize(static_cast<std::size_t>(inst.p() * inst.q()));
            for (int s = 1; s <= inst.p(); ++s)
                for (int j = 1; j <= inst.q(); ++j)
                    row[inst.g_index(s, j)] = static_cast<std::uint16_t>(inst.vertex_map(label, s, j));
        }
        return maps;
    }

    /// Smallest ordered G-edge (x, x') with a(x) == b(x').
    template <typename MapA, typename MapB>
    std::optional<std::pair<Edge, int>> first_conflict(const Graph & g, MapA && a, MapB && b)
    {
        for (Vertex x = 0; x < g.order(); ++x) {
            const int colour = a(x);
            for (auto xx = g.neighbours(x).first(); xx != Bitset::npos; xx = g.neighbours(x).next_from(xx + 1))
                if (b(xx) == colour)
                    return std::pair{Edge{x, xx}, colour};
        }
        return std::nullopt;
    }

    EmbeddingViolation make_violation(const Instance & inst, const LexGraph & g, Vertex hy, Vertex hyy, Edge ge, int colour)
    {
        auto [s1, j1] = g.label(ge.first);
        auto [s2, j2] = g.label(ge.second);
        return {inst.h_vertex(hy), inst.h_vertex(hyy), static_cast<int>(s1 + 1), static_cast<int>(j1 + 1),
            static_cast<int>(s2 + 1), static_cast<int>(j2 + 1), colour};
    }

    /// Scans edges[begin, end) with `fails` across `workers` threads and
    /// returns the smallest failing index, or edges.size().
    std::size_t first_failure(std::size_t count, unsigned workers, const std::function<bool(std::size_t, void *)> & fails,
        const std::function<std::shared_ptr<void>()> & make_scratch)
    {
        workers = std::max(1U, workers);
        std::atomic<std::size_t> best{count};
        auto run = [&](std::size_t begin, std::size_t end) {
            auto scratch = make_scratch();
            for (std::size_t k = begin; k < end && k < best.load(std::memory_order_relaxed); ++k)
                if (fails(k, scratch.get())) {
                    auto current = best.load();
                    while (k < current && ! best.compare_exchange_weak(current, k))
                        ;
                    return;
                }
        };
        if (workers == 1 || count < 1024)
            run(0, count);
        else {
            std::vector<std::thread> threads;
            const std::size_t chunk = (count + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w)
                threads.emplace_back(run, std::min(count, w * chunk), std::min(count, (w + 1) * chunk));
            for (auto & t : threads)
                t.join();
        }
        return best.load();
    }

    /// Colour table of an H-vertex over one distance class of the seed.
    struct ClassRow {
        Bitset mask;
        std::vector<std::uint16_t> count;    ///< per colour: number of copies j
        std::vector<std::uint16_t> first_j;  ///< per colour: smallest such j
    };

    struct Profile {
        int classifier = 0;
        Bitset image;
        std::vector<ClassRow> rows;
    };

    struct ClassPairs {
        std::vector<std::pair<int, int>> cross; ///< over ordered F-edges
        std::vector<std::pair<int, int>> diag;  ///< over single F-vertices
    };

    /// Classifiers: 0 = constant, 1 = identity on s, 2 + 2(i-1) = mu distance
    /// classes around v_i, 3 + 2(i-1) = theta distance classes around v_i.
    class StructuredModel {
    public:
        explicit StructuredModel(const Instance & inst) : inst_(inst)
        {
            const int p = inst.p();
            const auto classifiers = static_cast<std::size_t>(2 + 2 * p);
            class_of_.assign(classifiers, std::vector<int>(static_cast<std::size_t>(p), 0));
            class_count_.assign(classifiers, 1);
            class_count_[1] = p;
            for (int s = 1; s <= p; ++s)
                class_of_[1][static_cast<std::size_t>(s - 1)] = s - 1;
            for (int i = 1; i <= p; ++i) {
                auto & mu = class_of_[static_cast<std::size_t>(2 + 2 * (i - 1))];
                auto & theta = class_of_[static_cast<std::size_t>(3 + 2 * (i - 1))];
                class_count_[static_cast<std::size_t>(2 + 2 * (i - 1))] = 3;
                class_count_[static_cast<std::size_t>(3 + 2 * (i - 1))] = 2;
                for (int s = 1; s <= p; ++s) {
                    auto d = inst.distance(s, i);
                    mu[static_cast<std::size_t>(s - 1)] = (d == 0 || d == 2) ? 0 : d == 1 ? 1 : 2;
                    theta[static_cast<std::size_t>(s - 1)] = d <= 1 ? 0 : 1;
                }
            }

            for (auto [s, ss] : inst.seed().edges()) {
                seed_arcs_.emplace_back(s, ss);
                seed_arcs_.emplace_back(ss, s);
            }

            profiles_.reserve(inst.h_order());
            for (Vertex y = 0; y < inst.h_order(); ++y)
                profiles_.push_back(make_profile(inst.h_vertex(y)));
        }

        const Profile & profile(Vertex y) const { return profiles_[y]; }

        ClassPairs pairs(int a, int b) const
        {
            const auto & ca = class_of_[static_cast<std::size_t>(a)];
            const auto & cb = class_of_[static_cast<std::size_t>(b)];
            const auto na = class_count_[static_cast<std::size_t>(a)];
            const auto nb = class_count_[static_cast<std::size_t>(b)];
            std::vector<char> cross(static_cast<std::size_t>(na * nb), 0), diag(cross.size(), 0);
            for (auto [s, ss] : seed_arcs_)
                cross[static_cast<std::size_t>(ca[s] * nb + cb[ss])] = 1;
            for (std::size_t s = 0; s < ca.size(); ++s)
                diag[static_cast<std::size_t>(ca[s] * nb + cb[s])] = 1;
            ClassPairs out;
            for (int x = 0; x < na; ++x)
                for (int z = 0; z < nb; ++z) {
                    if (cross[static_cast<std::size_t>(x * nb + z)])
                        out.cross.emplace_back(x, z);
                    if (diag[static_cast<std::size_t>(x * nb + z)])
                        out.diag.emplace_back(x, z);
                }
            return out;
        }

    private:
        Profile make_profile(const HVertex & y) const
        {
            Profile prof;
            switch (y.kind) {
            case HVertex::Kind::g: prof.classifier = 0; break;
            case HVertex::Kind::phi: prof.classifier = 1; break;
            case HVertex::Kind::mu: prof.classifier = 2 + 2 * (y.i - 1); break;
            case HVertex::Kind::theta: prof.classifier = 3 + 2 * (y.i - 1); break;
            }
            const auto & classes = class_of_[static_cast<std::size_t>(prof.classifier)];
            const auto n = class_count_[static_cast<std::size_t>(prof.classifier)];
            const auto width = static_cast<std::size_t>(inst_.c()) + 1;
            prof.image = Bitset(width);
            prof.rows.resize(static_cast<std::size_t>(n));
            std::vector<char> done(static_cast<std::size_t>(n), 0);
            for (std::size_t s = 0; s < classes.size(); ++s) {
                auto k = static_cast<std::size_t>(classes[s]);
                if (done[k])
                    continue;
                done[k] = 1;
                auto & row = prof.rows[k];
                row.mask = Bitset(width);
                row.count.assign(width, 0);
                row.first_j.assign(width, 0);
                for (int j = inst_.q(); j >= 1; --j) {
                    auto colour = static_cast<std::size_t>(inst_.vertex_map(y, static_cast<int>(s) + 1, j));
                    row.mask.set(colour);
                    ++row.count[colour];
                    row.first_j[colour] = static_cast<std::uint16_t>(j);
                }
                prof.image |= row.mask;
            }
            return prof;
        }

        const Instance & inst_;
        std::vector<std::vector<int>> class_of_;
        std::vector<int> class_count_;
        std::vector<Edge> seed_arcs_;
        std::vector<Profile> profiles_;
    };

    bool structured_fails(const StructuredModel & model, std::map<std::pair<int, int>, ClassPairs> & cache, int q,
        Vertex a, Vertex b, std::atomic<std::size_t> & disjoint)
    {
        const auto & pa = model.profile(a);
        const auto & pb = model.profile(b);
        if (! pa.image.intersects(pb.image)) {
            disjoint.fetch_add(1, std::memory_order_relaxed);
            return false;
        }

        auto key = std::pair{pa.classifier, pb.classifier};
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, model.pairs(pa.classifier, pb.classifier)).first;
        const auto & pairs = it->second;

        // copies of an F-edge: every (j, j') pair is a G-edge
        for (auto [x, z] : pairs.cross)
            if (pa.rows[static_cast<std::size_t>(x)].mask.intersects(pb.rows[static_cast<std::size_t>(z)].mask))
                return true;

        // inside one blob: (v_s, j)(v_s, j') for j != j'
        if (q > 1)
            for (auto [x, z] : pairs.diag) {
                const auto & ra = pa.rows[static_cast<std::size_t>(x)];
                const auto & rb = pb.rows[static_cast<std::size_t>(z)];
                const Bitset shared = ra.mask & rb.mask;
                for (auto colour = shared.first(); colour != Bitset::npos; colour = shared.next_from(colour + 1))
                    if (ra.count[colour] * rb.count[colour] > 1 || ra.first_j[colour] != rb.first_j[colour])
                        return true;
            }
        return false;
    }
}

EmbeddingResult check_embedding(const Instance & inst, const LexGraph & g, const Graph & h, EmbeddingMode mode, unsigned workers)
{
    if (h.order() != inst.h_order() || g.graph.order() != static_cast<std::size_t>(inst.p() * inst.q()))
        throw Error("graphs do not match the instance");

    EmbeddingResult result;
    const auto h_edges = h.edges();
    result.h_edges = h_edges.size();
    std::size_t failing = h_edges.size();

    if (mode == EmbeddingMode::bruteforce) {
        const auto maps = all_maps(inst);
        failing = first_failure(
            h_edges.size(), workers,
            [&](std::size_t k, void *) {
                const auto & a = maps[h_edges[k].first];
                const auto & b = maps[h_edges[k].second];
                return first_conflict(g.graph, [&](Vertex x) { return int{a[x]}; }, [&](Vertex x) { return int{b[x]}; })
                    .has_value();
            },
            [] { return std::shared_ptr<void>(); });
    }
    else {
        const StructuredModel model(inst);
        std::atomic<std::size_t> disjoint{0};
        failing = first_failure(
            h_edges.size(), workers,
            [&](std::size_t k, void * scratch) {
                auto & cache = *static_cast<std::map<std::pair<int, int>, ClassPairs> *>(scratch);
                return structured_fails(model, cache, inst.q(), h_edges[k].first, h_edges[k].second, disjoint);
            },
            [] { return std::static_pointer_cast<void>(std::make_shared<std::map<std::pair<int, int>, ClassPairs>>()); });
        result.disjoint_images = disjoint.load();
    }

    if (failing < h_edges.size()) {
        auto [hy, hyy] = h_edges[failing];
        auto a = inst.color_function(inst.h_vertex(hy));
        auto b = inst.color_function(inst.h_vertex(hyy));
        auto conflict = first_conflict(g.graph, a, b);
        if (! conflict)
            throw Error("embedding check flagged " + inst.h_vertex(hy).tag() + " ~ " + inst.h_vertex(hyy).tag()
                + " but no conflicting G-edge exists");
        result.pass = false;
        result.violation = make_violation(inst, g, hy, hyy, conflict->first, conflict->second);
    }
    return result;
}

bool replay(const Instance & inst, const LexGraph & g, const Graph & h, const EmbeddingViolation & v)
{
    try {
        const auto x = g.index(static_cast<Vertex>(v.s1 - 1), static_cast<std::size_t>(v.j1 - 1));
        const auto xx = g.index(static_cast<Vertex>(v.s2 - 1), static_cast<std::size_t>(v.j2 - 1));
        if (v.j1 < 1 || v.j2 < 1 || v.j1 > inst.q() || v.j2 > inst.q() || x >= g.graph.order() || xx >= g.graph.order())
            return false;
        return g.graph.adjacent(x, xx) && h.adjacent(inst.h_index(v.first), inst.h_index(v.second))
            && inst.vertex_map(v.first, v.s1, v.j1) == v.colour && inst.vertex_map(v.second, v.s2, v.j2) == v.colour;
    }
    catch (const Error &) {
        return false;
    }
}

ProductCheck check_product_coloring(const Instance & inst, const LexGraph & g, const Graph & h, std::size_t guard)
{
    ProductCheck out;
    out.order = g.graph.order() * h.order();
    if (out.order > guard) {
        out.skipped = true;
        return out;
    }
    auto product = tensor_product(g.graph, h);
    auto colouring = product_coloring(inst, product);
    auto check = is_proper(product.graph, colouring);
    if (check.proper) {
        out.status = Status::pass;
        return out;
    }
    out.status = Status::fail;
    auto [u, v] = *check.witness;
    auto [x, y] = product.label(u);
    auto [xx, yy] = product.label(v);
    out.witness = make_violation(inst, g, y, yy, Edge{x, xx}, colouring.colours[u]);
    return out;
}

HLowerResult check_h_lower(const Instance & inst, const Graph & h, int colours, std::uint64_t budget)
{
    if (h.order() < static_cast<std::size_t>(inst.c()))
        throw Error("graph is too small to hold the g-clique");
    PartialColoring pin(h.order(), 0);
    for (int i = 1; i <= inst.c(); ++i)
        pin[inst.h_index(HVertex::g(i))] = i;

    auto ext = extendable(h, pin, colours, budget);
    HLowerResult out;
    out.nodes = ext.nodes;
    switch (ext.status) {
    case Feasibility::infeasible: out.status = Status::pass; break;
    case Feasibility::feasible:
        out.status = Status::fail;
        out.coloring = std::move(ext.coloring);
        break;
    case Feasibility::unknown: out.status = Status::unknown; break;
    }
    return out;
}

GLowerResult check_g_lower(const Instance & inst, const GLowerOptions & options)
{
    GLowerResult out;
    const auto & seed = inst.seed();
    const Rational q(inst.q());

    if (seed.order() <= options.lp_vertex_limit) {
        FractionalOptions fo;
        fo.enumeration_vertex_limit = options.lp_vertex_limit;
        auto chi_f = chi_f_exact(seed, fo);
        if (chi_f.exact) {
            out.route = "lp";
            out.chi_f_lower = chi_f.value;
        }
    }

    if (out.route.empty()) {
        out.route = "n/alpha";
        if (options.alpha_bound) {
            auto k = *options.alpha_bound;
            auto larger = has_independent_set(seed, k + 1, options.budget);
            if (! larger.has_value())
                return out;
            if (*larger) {
                // the claimed bound is wrong; fall back to the exact value
                auto alpha = independence_number(seed, options.budget);
                if (! alpha.value)
                    return out;
                k = *alpha.value;
            }
            out.alpha = k;
        }
        else {
            auto alpha = independence_number(seed, options.budget);
            if (! alpha.value)
                return out;
            out.alpha = *alpha.value;
        }
        out.chi_f_lower = Rational(static_cast<unsigned long>(seed.order()), static_cast<unsigned long>(*out.alpha));
        out.chi_f_lower.canonicalize();
    }

    out.product = q * out.chi_f_lower;
    out.status = out.product > Rational(inst.c()) ? Status::pass : Status::fail;
    return out;
}

Json to_json(const EmbeddingViolation & v)
{
    return Json{
        {"h_edge", {v.first.tag(), v.second.tag()}},
        {"g_edge", {std::to_string(v.s1) + ":" + std::to_string(v.j1), std::to_string(v.s2) + ":" + std::to_string(v.j2)}},
        {"colour", v.colour},
    };
}

const CheckRecord * VerificationReport::find(const std::string & name) const
{
    for (const auto & c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

Json VerificationReport::to_json() const
{
    Json checks_json = Json::array();
    for (const auto & c : checks)
        checks_json.push_back(Json{
            {"name", c.name},
            {"status", to_string(c.status)},
            {"witness", c.witness},
            {"millis", c.millis},
            {"detail", c.detail},
        });
    return Json{{"params", params}, {"checks", checks_json}, {"verdict", verdict}};
}

VerificationReport full_verify(const Params & params, const VerifyOptions & options)
{
    VerificationReport report;
    const auto p = params.seed.order();
    report.params = Json{
        {"seed", params.seed_name},
        {"p", p},
        {"q", params.q},
        {"c", params.c},
        {"c_mode", params.experimental ? "experimental (c in {3q+3, 3q+4})" : "default (c = 3q+2)"},
        {"embedding_mode", to_string(options.mode)},
        {"workers", options.workers},
        {"budget", options.budget},
    };

    auto timed = [&](const std::string & name, auto && body) -> CheckRecord & {
        auto start = std::chrono::steady_clock::now();
        CheckRecord record;
        record.name = name;
        body(record);
        if (options.timings)
            record.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(record));
        return report.checks.back();
    };

    auto validation = validate(params);
    timed("validate", [&](CheckRecord & r) {
        r.status = validation.ok() ? Status::pass : Status::fail;
        if (! validation.ok())
            r.witness = Json{{"errors", validation.errors}};
        r.detail = Json{{"warnings", validation.warnings}};
    });
    if (! validation.ok()) {
        report.failed = true;
        report.verdict = "invalid parameters: " + validation.errors.front();
        return report;
    }

    const Instance inst(params);

    timed("odd_girth_audit", [&](CheckRecord & r) {
        auto og = odd_girth(inst.seed());
        r.status = (! og || *og >= 7) ? Status::pass : Status::fail;
        r.detail = Json{{"odd_girth", og ? Json(*og) : Json(nullptr)}, {"connected", is_connected(inst.seed())}};
        if (r.status == Status::fail)
            r.witness = Json{{"odd_girth", *og}};
    });

    std::vector<std::string> failures, unknowns;

    timed("g_lower", [&](CheckRecord & r) {
        auto res = check_g_lower(inst, options.g_lower);
        r.status = res.status;
        r.detail = Json{{"route", res.route}};
        if (res.status == Status::unknown) {
            unknowns.push_back("chi(G) bound: budget exhausted");
            return;
        }
        if (res.alpha)
            r.detail["alpha"] = *res.alpha;
        r.detail["chi_f_lower"] = to_string(res.chi_f_lower);
        r.detail["q_times_bound"] = to_string(res.product);
        r.detail["inequality"] = to_string(res.product) + (res.status == Status::pass ? " > " : " <= ") + std::to_string(inst.c());
        if (res.status == Status::fail) {
            r.witness = Json{{"chi_f_lower", to_string(res.chi_f_lower)}, {"q_times_bound", to_string(res.product)},
                {"c", inst.c()}};
            failures.push_back("chi(G) bound fails: q * chi_f(F) = " + std::to_string(inst.q()) + " * "
                + to_string(res.chi_f_lower) + " = " + to_string(res.product) + " <= c = " + std::to_string(inst.c()));
        }
    });

    const auto g = build_G(inst);
    const auto h = build_H(inst);

    timed("h_lower", [&](CheckRecord & r) {
        auto res = check_h_lower(inst, h, inst.c(), options.budget);
        r.status = res.status;
        r.detail = Json{{"h_vertices", h.order()}, {"h_edges", h.edge_count()}, {"search_nodes", res.nodes}};
        if (res.status == Status::fail) {
            Json colouring = Json::object();
            for (Vertex y = 0; y < h.order(); ++y)
                colouring[inst.h_vertex(y).tag()] = res.coloring->colours[y];
            r.witness = Json{{"colouring", colouring}};
            failures.push_back("H has a proper c-colouring");
        }
        else if (res.status == Status::unknown)
            unknowns.push_back("chi(H) > c: budget exhausted");
    });

    EmbeddingResult embedding;
    timed("embedding", [&](CheckRecord & r) {
        embedding = check_embedding(inst, g, h, options.mode, options.workers);
        r.status = embedding.pass ? Status::pass : Status::fail;
        r.detail = Json{{"mode", to_string(options.mode)}, {"g_vertices", g.graph.order()}, {"g_edges", g.graph.edge_count()},
            {"h_edges", embedding.h_edges}};
        if (options.mode == EmbeddingMode::structured)
            r.detail["disjoint_images"] = embedding.disjoint_images;
        if (embedding.violation) {
            r.witness = to_json(*embedding.violation);
            failures.push_back("H does not embed in K_c^G");
        }
    });

    if (g.graph.order() * h.order() <= options.product_guard)
        timed("product_coloring", [&](CheckRecord & r) {
            auto res = check_product_coloring(inst, g, h, options.product_guard);
            r.status = res.status;
            r.detail = Json{{"product_vertices", res.order}};
            if (res.witness) {
                r.witness = to_json(*res.witness);
                failures.push_back("product colouring is improper");
            }
        });

    if (! failures.empty()) {
        report.failed = true;
        report.verdict = "not a counterexample: ";
        for (std::size_t k = 0; k < failures.size(); ++k)
            report.verdict += (k ? "; " : "") + failures[k];
    }
    else if (! unknowns.empty()) {
        report.unknown = true;
        report.verdict = "incomplete: ";
        for (std::size_t k = 0; k < unknowns.size(); ++k)
            report.verdict += (k ? "; " : "") + unknowns[k];
    }
    else {
        report.verified = true;
        report.verdict = params.experimental ? "counterexample verified (experimental c)" : "counterexample verified";
    }
    return report;
}

} // namespace hedet
