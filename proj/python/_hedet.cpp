#include <hedet/counterexample.hpp>
#include <hedet/dimacs.hpp>
#include <hedet/error.hpp>
#include <hedet/exponential.hpp>
#include <hedet/fractional.hpp>
#include <hedet/seeds.hpp>
#include <hedet/solvers.hpp>
#include <hedet/verifier.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hedet;

namespace {

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges, bool allow_loops)
{
    GraphBuilder b(n, allow_loops);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

std::string dimacs_string(const Graph & g)
{
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

Graph graph_from_dimacs(const std::string & text)
{
    std::istringstream in(text);
    return read_dimacs(in);
}

// Rationals cross the boundary as "num/den"; the Python layer turns them
// into fractions.Fraction.
py::dict fractional(const Graph & g, std::size_t enumeration_limit)
{
    FractionalOptions options;
    options.enumeration_vertex_limit = enumeration_limit;
    auto r = chi_f_exact(g, options);
    py::dict out;
    out["exact"] = r.exact;
    out["value"] = to_string(r.value);
    out["lower"] = to_string(r.lower);
    out["upper"] = to_string(r.upper);
    out["method"] = r.method;
    std::vector<std::string> dual;
    for (const auto & y : r.certificate.vertex_weights)
        dual.push_back(to_string(y));
    out["fractional_clique"] = dual;
    return out;
}

Params make_params(const Graph & seed, int q, int c, bool experimental, const std::string & name)
{
    const int p = static_cast<int>(seed.order());
    q = q > 0 ? q : p / 2;
    return Params{seed, q, c > 0 ? c : 3 * q + 2, experimental, name};
}

py::object verify(const Graph & seed, int q, int c, bool experimental, const std::string & mode, unsigned workers,
    std::uint64_t budget, bool timings, std::optional<std::size_t> alpha, const std::string & name)
{
    VerifyOptions options;
    options.mode = parse_embedding_mode(mode);
    options.workers = workers;
    options.budget = budget;
    options.timings = timings;
    options.g_lower.alpha_bound = alpha;
    options.g_lower.budget = budget;
    VerificationReport report;
    {
        py::gil_scoped_release release;
        report = full_verify(make_params(seed, q, c, experimental, name), options);
    }
    return py::module_::import("json").attr("loads")(report.to_json().dump());
}

} // namespace

PYBIND11_MODULE(_hedet, m)
{
    m.doc() = "Counterexamples to Hedetniemi's conjecture: construction and verification";

    py::register_exception<Error>(m, "HedetError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{},
            py::arg("allow_loops") = false)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("loop_count", &Graph::loop_count)
        .def("edges", &Graph::edges)
        .def("adjacent", [](const Graph & g, Vertex u, Vertex v) {
            if (u >= g.order() || v >= g.order())
                throw py::index_error("vertex out of range");
            return g.adjacent(u, v);
        })
        .def("degree", [](const Graph & g, Vertex u) {
            if (u >= g.order())
                throw py::index_error("vertex out of range");
            return g.degree(u);
        })
        .def("to_dimacs", &dimacs_string)
        .def_static("from_dimacs", &graph_from_dimacs)
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__len__", &Graph::order)
        .def("__repr__", [](const Graph & g) {
            return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("generate", [](const std::string & kind, std::size_t size) { return generate(parse_graph_kind(kind), size); },
        py::arg("kind"), py::arg("size"));
    m.def("load_seed", &load_seed, py::arg("spec"));
    m.def("tensor_product", [](const Graph & a, const Graph & b) { return tensor_product(a, b).graph; });
    m.def("lex_complete", [](const Graph & f, std::size_t q) { return lex_complete(f, q).graph; });
    m.def("mycielski", [](const Graph & g, std::size_t r) { return mycielski(g, r).graph; });
    m.def("mycielski_chain", &mycielski_chain, py::arg("g"), py::arg("chain"));
    m.def("bfs_distances", [](const Graph & g, Vertex source) {
        std::vector<std::optional<std::size_t>> out;
        for (auto d : bfs_distances(g, source))
            out.push_back(d == unreachable ? std::nullopt : std::optional<std::size_t>(d));
        return out;
    });
    m.def("odd_girth", &odd_girth);

    m.def("is_proper", [](const Graph & g, std::vector<int> colours, int c) { return is_proper(g, Coloring{std::move(colours), c}).proper; },
        py::arg("g"), py::arg("colours"), py::arg("c"));
    m.def("chromatic_number", [](const Graph & g, std::uint64_t budget) { return chromatic_number(g, budget).value; },
        py::arg("g"), py::arg("budget") = default_node_budget);
    m.def("independence_number", [](const Graph & g, std::uint64_t budget) { return independence_number(g, budget).value; },
        py::arg("g"), py::arg("budget") = default_node_budget);
    m.def("extendable",
        [](const Graph & g, const PartialColoring & partial, int c, std::uint64_t budget) {
            return std::string(to_string(extendable(g, partial, c, budget).status));
        },
        py::arg("g"), py::arg("partial"), py::arg("c"), py::arg("budget") = default_node_budget);

    m.def("_chi_f", &fractional, py::arg("g"), py::arg("enumeration_limit") = 40);
    m.def("_tardif_value", [](const std::string & base, std::size_t r) { return to_string(tardif_value(parse_rational(base), r)); });
    m.def("_tardif_chain_value", [](const std::string & base, const std::vector<std::size_t> & chain) {
        return to_string(tardif_chain_value(parse_rational(base), chain));
    });

    m.def("exp_adjacent",
        [](const std::vector<int> & f, const std::vector<int> & g, const Graph & base, int c) {
            return exp_adjacent(ColorFunction(f, c), ColorFunction(g, c), base).adjacent;
        },
        py::arg("f"), py::arg("g"), py::arg("base"), py::arg("c"));
    m.def("has_loop", [](const std::vector<int> & f, const Graph & base, int c) { return has_loop(ColorFunction(f, c), base); },
        py::arg("f"), py::arg("base"), py::arg("c"));

    m.def("h_vertex_count", &h_vertex_count, py::arg("p"), py::arg("q"), py::arg("c"));
    m.def("h_vertex_count_closed_form", &h_vertex_count_closed_form, py::arg("p"));
    m.def("build_G", [](const Graph & seed, int q) { return build_G(Instance(make_params(seed, q, 0, false, "custom"))).graph; },
        py::arg("seed"), py::arg("q") = 0);
    m.def("build_H",
        [](const Graph & seed, int q, int c, bool experimental) {
            Instance inst(make_params(seed, q, c, experimental, "custom"));
            std::vector<std::string> tags;
            for (Vertex v = 0; v < inst.h_order(); ++v)
                tags.push_back(inst.h_vertex(v).tag());
            return py::make_tuple(build_H(inst), tags);
        },
        py::arg("seed"), py::arg("q") = 0, py::arg("c") = 0, py::arg("experimental") = false);
    m.def("vertex_map",
        [](const Graph & seed, int q, const std::string & tag, int s, int j) {
            return Instance(make_params(seed, q, 0, false, "custom")).vertex_map(HVertex::parse(tag), s, j);
        },
        py::arg("seed"), py::arg("q"), py::arg("tag"), py::arg("s"), py::arg("j"));
    m.def("image",
        [](const Graph & seed, int q, const std::string & tag) {
            Instance inst(make_params(seed, q, 0, false, "custom"));
            auto y = HVertex::parse(tag);
            auto closed = inst.image(y);
            return py::make_tuple(closed.colours.to_vector(), closed.precondition, inst.image_bruteforce(y).to_vector());
        },
        py::arg("seed"), py::arg("q"), py::arg("tag"));

    m.def("verify", &verify, py::arg("seed"), py::arg("q") = 0, py::arg("c") = 0, py::arg("experimental") = false,
        py::arg("mode") = "structured", py::arg("workers") = 1, py::arg("budget") = default_node_budget,
        py::arg("timings") = true, py::arg("alpha") = py::none(), py::arg("name") = "custom");
}
