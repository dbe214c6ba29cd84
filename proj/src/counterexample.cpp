#include <hedet/counterexample.hpp>
#include <hedet/error.hpp>

#include <cctype>
#include <sstream>
#include <string>

namespace hedet {

namespace {
    int delta(bool holds) { return holds ? 1 : 0; }

    template <typename F>
    void for_each_h_edge(const Instance & inst, F && emit)
    {
        const int p = inst.p(), q = inst.q(), c = inst.c();

        for (int i = 1; i <= c; ++i)
            for (int j = i + 1; j <= c; ++j)
                emit(0, HVertex::g(i), HVertex::g(j));

        for (int i = p + 1; i <= c; ++i)
            emit(1, HVertex::phi(), HVertex::g(i));

        for (int i = 1; i <= p; ++i)
            for (int t = q + 2; t <= 3 * q + 2; ++t) {
                emit(2, HVertex::g(i), HVertex::mu(i, t));
                for (int tt = t + 1; tt <= 3 * q + 2; ++tt)
                    emit(2, HVertex::mu(i, t), HVertex::mu(i, tt));
            }

        for (int i = 1; i <= p; ++i)
            for (int t = q + 2; t <= 3 * q + 2; ++t)
                for (int j = 2 * q + 2; j <= c; ++j)
                    if (j != t)
                        emit(3, HVertex::mu(i, t), HVertex::g(j));

        for (int i = 1; i <= p; ++i)
            for (int t = 2 * q + 2; t <= 3 * q + 2; ++t) {
                emit(4, HVertex::theta(i, t), HVertex::phi());
                emit(4, HVertex::theta(i, t), HVertex::mu(i, t));
                for (int j = 1; j <= c; ++j)
                    if (j != i && j != t)
                        emit(4, HVertex::theta(i, t), HVertex::g(j));
            }
    }

    const char * const clause_names[] = {
        "(1) g_i, i in [c], form a clique",
        "(2) phi ~ g_i for i > p",
        "(3a) {mu_i,t : t in [q+2,3q+2]} + g_i is a clique",
        "(3b) mu_i,t ~ g_j for j > 2q+1, j != t",
        "(4) theta_i,t ~ phi, mu_i,t and g_j for j not in {i,t}",
    };

    int parse_int(const std::string & text, const std::string & tag)
    {
        try {
            std::size_t used = 0;
            int value = std::stoi(text, &used);
            if (used == text.size() && value >= 1 && std::isdigit(static_cast<unsigned char>(text[0])))
                return value;
        }
        catch (const std::exception &) {
        }
        throw Error("malformed H-vertex tag '" + tag + "'");
    }
}

std::string HVertex::tag() const
{
    switch (kind) {
    case Kind::g: return "g:" + std::to_string(i);
    case Kind::phi: return "phi";
    case Kind::mu: return "mu:" + std::to_string(i) + ":" + std::to_string(t);
    case Kind::theta: return "theta:" + std::to_string(i) + ":" + std::to_string(t);
    }
    return "?";
}

HVertex HVertex::parse(const std::string & tag)
{
    std::vector<std::string> parts;
    std::stringstream ss(tag);
    for (std::string part; std::getline(ss, part, ':');)
        parts.push_back(part);
    if (parts.size() == 1 && parts[0] == "phi")
        return phi();
    if (parts.size() == 2 && parts[0] == "g")
        return g(parse_int(parts[1], tag));
    if (parts.size() == 3 && parts[0] == "mu")
        return mu(parse_int(parts[1], tag), parse_int(parts[2], tag));
    if (parts.size() == 3 && parts[0] == "theta")
        return theta(parse_int(parts[1], tag), parse_int(parts[2], tag));
    throw Error("malformed H-vertex tag '" + tag + "'");
}

Validation validate(const Params & params)
{
    Validation v;
    const auto p = static_cast<long long>(params.seed.order());
    const long long q = params.q, c = params.c;

    if (p < 1)
        v.errors.push_back("seed graph F is empty");
    if (params.seed.loop_count() > 0)
        v.errors.push_back("seed graph F has loops");
    if (q < 1)
        v.errors.push_back("q must be at least 1");
    else if (p > 2 * q + 1)
        v.errors.push_back("p=" + std::to_string(p) + " > 2q+1=" + std::to_string(2 * q + 1));

    if (q >= 1) {
        if (params.experimental) {
            if (c < 3 * q + 2 || c > 3 * q + 4)
                v.errors.push_back("c=" + std::to_string(c) + " not in {3q+2, 3q+3, 3q+4}");
        }
        else if (c != 3 * q + 2)
            v.errors.push_back("c=" + std::to_string(c) + " != 3q+2=" + std::to_string(3 * q + 2)
                + " (3q+3 and 3q+4 need experimental mode)");
    }

    if (v.errors.empty()) {
        if (auto og = odd_girth(params.seed); og && *og < 7)
            v.warnings.push_back("odd girth " + std::to_string(*og) + " < 7");
        if (! is_connected(params.seed))
            v.warnings.push_back("F is disconnected; unreachable distances count as >= 3");
    }
    return v;
}

std::size_t h_vertex_count(std::size_t p, std::size_t q, std::size_t c)
{
    return c + 1 + p * (2 * q + 1) + p * (q + 1);
}

std::size_t h_vertex_count_closed_form(std::size_t p)
{
    return 3 * ((p + 2) / 2) * (p + 1) - p;
}

Instance::Instance(Params params) : params_(std::move(params))
{
    auto v = validate(params_);
    if (! v.ok()) {
        std::string msg = "invalid parameters:";
        for (const auto & e : v.errors)
            msg += " " + e + ";";
        throw Error(msg);
    }
    warnings_ = std::move(v.warnings);
    p_ = static_cast<int>(params_.seed.order());
    h_order_ = h_vertex_count(static_cast<std::size_t>(p_), static_cast<std::size_t>(params_.q),
        static_cast<std::size_t>(params_.c));
    dist_ = all_distances(params_.seed);
}

Vertex Instance::h_index(const HVertex & y) const
{
    const int p = p_, q = params_.q, c = params_.c;
    const auto mu_base = static_cast<Vertex>(c + 1);
    const auto theta_base = mu_base + static_cast<Vertex>(p * (2 * q + 1));
    switch (y.kind) {
    case HVertex::Kind::g:
        if (y.i >= 1 && y.i <= c)
            return static_cast<Vertex>(y.i - 1);
        break;
    case HVertex::Kind::phi:
        return static_cast<Vertex>(c);
    case HVertex::Kind::mu:
        if (y.i >= 1 && y.i <= p && y.t >= q + 2 && y.t <= 3 * q + 2)
            return mu_base + static_cast<Vertex>((y.i - 1) * (2 * q + 1) + (y.t - q - 2));
        break;
    case HVertex::Kind::theta:
        if (y.i >= 1 && y.i <= p && y.t >= 2 * q + 2 && y.t <= 3 * q + 2)
            return theta_base + static_cast<Vertex>((y.i - 1) * (q + 1) + (y.t - 2 * q - 2));
        break;
    }
    throw Error("H-vertex " + y.tag() + " out of range");
}

HVertex Instance::h_vertex(Vertex index) const
{
    const auto p = static_cast<Vertex>(p_), q = static_cast<Vertex>(params_.q), c = static_cast<Vertex>(params_.c);
    if (index < c)
        return HVertex::g(static_cast<int>(index + 1));
    if (index == c)
        return HVertex::phi();
    index -= c + 1;
    if (index < p * (2 * q + 1))
        return HVertex::mu(static_cast<int>(index / (2 * q + 1) + 1), static_cast<int>(index % (2 * q + 1) + q + 2));
    index -= p * (2 * q + 1);
    if (index < p * (q + 1))
        return HVertex::theta(static_cast<int>(index / (q + 1) + 1), static_cast<int>(index % (q + 1) + 2 * q + 2));
    throw Error("H index out of range");
}

int Instance::vertex_map(const HVertex & y, int s, int j) const
{
    const int q = params_.q;
    if (s < 1 || s > p_ || j < 1 || j > q)
        throw Error("G-vertex (" + std::to_string(s) + "," + std::to_string(j) + ") out of range");
    (void)h_index(y);

    switch (y.kind) {
    case HVertex::Kind::g:
        return y.i;
    case HVertex::Kind::phi:
        return s;
    case HVertex::Kind::mu: {
        const auto d = distance(s, y.i);
        if (d == 0 || d == 2)
            return j + delta(j >= y.i);
        if (d == 1)
            return q + j + delta(q + j >= y.i);
        return y.t - delta(y.i >= y.t);
    }
    case HVertex::Kind::theta:
        return distance(s, y.i) >= 2 ? y.i : y.t;
    }
    throw Error("unreachable H-vertex kind");
}

ColorFunction Instance::color_function(const HVertex & y) const
{
    std::vector<int> values(static_cast<std::size_t>(p_ * params_.q));
    for (int s = 1; s <= p_; ++s)
        for (int j = 1; j <= params_.q; ++j)
            values[g_index(s, j)] = vertex_map(y, s, j);
    return ColorFunction(std::move(values), params_.c);
}

ClosedFormImage Instance::image(const HVertex & y) const
{
    (void)h_index(y);
    const auto width = static_cast<std::size_t>(params_.c) + 1;
    ClosedFormImage out{Bitset(width), true};
    const int q = params_.q;

    switch (y.kind) {
    case HVertex::Kind::g:
        out.colours.set(static_cast<std::size_t>(y.i));
        break;
    case HVertex::Kind::phi:
        for (int s = 1; s <= p_; ++s)
            out.colours.set(static_cast<std::size_t>(s));
        break;
    case HVertex::Kind::mu:
    case HVertex::Kind::theta: {
        bool has_one = false, has_two = false, has_far = false;
        for (int s = 1; s <= p_; ++s) {
            auto d = distance(s, y.i);
            has_one = has_one || d == 1;
            has_two = has_two || d >= 2;
            has_far = has_far || d >= 3;
        }
        // mu needs the classes {0,2}, 1 and >= 3; theta needs <= 1 and >= 2
        out.precondition = y.kind == HVertex::Kind::mu ? has_one && has_far : has_two;
        if (y.kind == HVertex::Kind::mu)
            for (int k = 1; k <= 2 * q + 1; ++k)
                out.colours.set(static_cast<std::size_t>(k));
        out.colours.set(static_cast<std::size_t>(y.t));
        if (y.kind == HVertex::Kind::mu)
            out.colours.reset(static_cast<std::size_t>(y.i));
        else
            out.colours.set(static_cast<std::size_t>(y.i));
        break;
    }
    }
    return out;
}

Bitset Instance::image_bruteforce(const HVertex & y) const
{
    Bitset out(static_cast<std::size_t>(params_.c) + 1);
    for (int s = 1; s <= p_; ++s)
        for (int j = 1; j <= params_.q; ++j)
            out.set(static_cast<std::size_t>(vertex_map(y, s, j)));
    return out;
}

LexGraph build_G(const Instance & inst)
{
    return lex_complete(inst.seed(), static_cast<std::size_t>(inst.q()));
}

std::vector<HRule> h_rules(const Instance & inst)
{
    std::vector<HRule> rules;
    for (const auto * name : clause_names)
        rules.push_back({name, {}});
    for_each_h_edge(inst, [&](int clause, const HVertex & a, const HVertex & b) {
        rules[static_cast<std::size_t>(clause)].edges.emplace_back(a, b);
    });
    return rules;
}

Graph build_H(const Instance & inst)
{
    GraphBuilder b(inst.h_order());
    for_each_h_edge(inst, [&](int, const HVertex & a, const HVertex & c) { b.add_edge(inst.h_index(a), inst.h_index(c)); });
    return std::move(b).build();
}

Coloring product_coloring(const Instance & inst, const ProductGraph & product)
{
    const auto q = static_cast<std::size_t>(inst.q());
    if (product.left_order != static_cast<std::size_t>(inst.p()) * q || product.right_order != inst.h_order())
        throw Error("product does not match the instance");
    std::vector<HVertex> labels;
    labels.reserve(inst.h_order());
    for (Vertex y = 0; y < inst.h_order(); ++y)
        labels.push_back(inst.h_vertex(y));

    Coloring col;
    col.num_colours = inst.c();
    col.colours.resize(product.graph.order());
    for (Vertex v = 0; v < product.graph.order(); ++v) {
        auto [x, y] = product.label(v);
        col.colours[v] = inst.vertex_map(labels[y], static_cast<int>(x / q) + 1, static_cast<int>(x % q) + 1);
    }
    return col;
}

} // namespace hedet
