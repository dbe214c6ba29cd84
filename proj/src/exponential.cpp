#include <hedet/error.hpp>
#include <hedet/exponential.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace hedet {

ColorFunction::ColorFunction(std::vector<int> values, int num_colours) :
    values_(std::move(values)), num_colours_(num_colours), image_(static_cast<std::size_t>(num_colours) + 1)
{
    if (num_colours < 1)
        throw Error("colour function needs at least one colour");
    for (auto v : values_) {
        if (v < 1 || v > num_colours)
            throw Error("colour " + std::to_string(v) + " outside [1, " + std::to_string(num_colours) + "]");
        image_.set(static_cast<std::size_t>(v));
    }
}

ExpAdjacency exp_adjacent(const ColorFunction & f, const ColorFunction & g, const Graph & base)
{
    if (f.domain_size() != base.order() || g.domain_size() != base.order())
        throw Error("colour function domain does not match the graph");
    if (f.num_colours() != g.num_colours())
        throw Error("colour functions use different colour counts");

    if (! f.image().intersects(g.image()))
        return {};
    for (auto [x, y] : base.edges()) {
        if (f(x) == g(y))
            return {false, ExpWitness{x, y, f(x)}};
        if (f(y) == g(x))
            return {false, ExpWitness{y, x, f(y)}};
    }
    return {};
}

bool has_loop(const ColorFunction & f, const Graph & base)
{
    return exp_adjacent(f, f, base).adjacent;
}

ColorFunction ExplicitExponential::function(Vertex index) const
{
    std::vector<int> values(base_order);
    const auto c = static_cast<std::size_t>(num_colours);
    for (std::size_t v = base_order; v-- > 0;) {
        values[v] = static_cast<int>(index % c) + 1;
        index /= c;
    }
    return ColorFunction(std::move(values), num_colours);
}

Vertex ExplicitExponential::index(const ColorFunction & f) const
{
    Vertex idx = 0;
    for (auto v : f.values())
        idx = idx * static_cast<std::size_t>(num_colours) + static_cast<std::size_t>(v - 1);
    return idx;
}

ExplicitExponential exp_explicit(const Graph & base, int c, std::size_t guard)
{
    if (c < 1)
        throw Error("exponential graph needs c >= 1");
    std::size_t total = 1;
    for (std::size_t v = 0; v < base.order(); ++v) {
        total *= static_cast<std::size_t>(c);
        if (total > guard)
            throw Error("K_c^G has more than " + std::to_string(guard) + " vertices");
    }

    ExplicitExponential e;
    e.base_order = base.order();
    e.num_colours = c;
    std::vector<ColorFunction> all;
    all.reserve(total);
    for (Vertex k = 0; k < total; ++k)
        all.push_back(e.function(k));

    GraphBuilder b(total, true);
    for (Vertex a = 0; a < total; ++a)
        for (Vertex d = a; d < total; ++d)
            if (exp_adjacent(all[a], all[d], base).adjacent)
                b.add_edge(a, d);
    e.graph = std::move(b).build();
    return e;
}

std::vector<ColorFunction> transpose_coloring(const ProductGraph & product, const Coloring & psi)
{
    if (psi.colours.size() != product.graph.order())
        throw Error("colouring does not cover the product");
    std::vector<ColorFunction> map;
    map.reserve(product.right_order);
    for (Vertex u = 0; u < product.right_order; ++u) {
        std::vector<int> values(product.left_order);
        for (Vertex v = 0; v < product.left_order; ++v)
            values[v] = psi.colours[product.index(v, u)];
        map.emplace_back(std::move(values), psi.num_colours);
    }
    return map;
}

Coloring transpose_map(const ProductGraph & product, const std::vector<ColorFunction> & map)
{
    if (map.size() != product.right_order)
        throw Error("map does not cover the target graph");
    Coloring psi;
    psi.num_colours = map.empty() ? 0 : map.front().num_colours();
    psi.colours.assign(product.graph.order(), 0);
    for (Vertex u = 0; u < product.right_order; ++u) {
        if (map[u].domain_size() != product.left_order || map[u].num_colours() != psi.num_colours)
            throw Error("map entries disagree on domain or colour count");
        for (Vertex v = 0; v < product.left_order; ++v)
            psi.colours[product.index(v, u)] = map[u](v);
    }
    return psi;
}

HomFromColoring coloring_to_hom(const ProductGraph & product, const Coloring & psi)
{
    HomFromColoring out;
    auto check = is_proper(product.graph, psi);
    if (! check.proper) {
        out.violation = check.witness;
        return out;
    }
    out.map = transpose_coloring(product, psi);
    return out;
}

ColoringFromHom hom_to_coloring(
    const ProductGraph & product, const Graph & base, const Graph & target, const std::vector<ColorFunction> & map)
{
    if (base.order() != product.left_order || target.order() != product.right_order)
        throw Error("graphs do not match the product");
    ColoringFromHom out;
    for (auto [u, w] : target.edges()) {
        auto adj = exp_adjacent(map[u], map[w], base);
        if (! adj.adjacent) {
            out.violation = HomViolation{Edge{u, w}, *adj.witness};
            return out;
        }
    }
    out.coloring = transpose_map(product, map);
    return out;
}

void write_color_function(std::ostream & out, const ColorFunction & f)
{
    for (std::size_t v = 0; v < f.domain_size(); ++v)
        out << (v ? " " : "") << f(v);
    out << '\n';
}

std::vector<ColorFunction> read_color_functions(std::istream & in, int num_colours)
{
    std::vector<ColorFunction> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        std::vector<int> values;
        int value = 0;
        while (fields >> value)
            values.push_back(value);
        if (! fields.eof())
            throw ParseError("malformed colour function line '" + line + "'");
        if (! out.empty() && values.size() != out.front().domain_size())
            throw ParseError("colour functions of different lengths");
        out.emplace_back(std::move(values), num_colours);
    }
    return out;
}

} // namespace hedet
