// hedet: build and verify counterexamples to Hedetniemi's conjecture.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or I/O error,
// 3 undecided within the budget.

#include <hedet/counterexample.hpp>
#include <hedet/dimacs.hpp>
#include <hedet/error.hpp>
#include <hedet/exponential.hpp>
#include <hedet/fractional.hpp>
#include <hedet/seeds.hpp>
#include <hedet/solvers.hpp>
#include <hedet/verifier.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hedet;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_unknown = 3;

struct Options {
    std::string seed = "c7";
    int q = 0;
    int c = 0;
    bool experimental = false;
    std::string mode = "structured";
    unsigned workers = 1;
    std::uint64_t budget = default_node_budget;
    std::size_t product_guard = 10'000;
    std::size_t alpha = 0;
    bool no_timings = false;
    std::string report;
    std::string out;
    std::string graph = "H";
    std::string chain;
    std::size_t p = 0;
    bool certificate = false;
};

/// Writes to `path`, or stdout when it is empty or "-".
template <typename Body>
void with_output(const std::string & path, Body && body)
{
    if (path.empty() || path == "-") {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write " + path);
    body(out);
    if (! out)
        throw Error("error while writing " + path);
}

Params make_params(const Options & o)
{
    Params p;
    p.seed = load_seed(o.seed);
    p.seed_name = o.seed;
    const int order = static_cast<int>(p.seed.order());
    p.q = o.q > 0 ? o.q : order / 2;
    p.c = o.c > 0 ? o.c : 3 * p.q + 2;
    p.experimental = o.experimental;
    return p;
}

/// Instance or a usage error listing the validation errors.
Instance make_instance(const Options & o)
{
    auto params = make_params(o);
    auto v = validate(params);
    if (! v.ok()) {
        std::string msg = "invalid parameters:";
        for (const auto & e : v.errors)
            msg += " " + e + ";";
        throw Error(msg);
    }
    for (const auto & w : v.warnings)
        std::cerr << "warning: " << w << '\n';
    return Instance(std::move(params));
}

int run_verify(const Options & o)
{
    VerifyOptions vo;
    vo.mode = parse_embedding_mode(o.mode);
    vo.workers = o.workers;
    vo.budget = o.budget;
    vo.product_guard = o.product_guard;
    vo.timings = ! o.no_timings;
    vo.g_lower.budget = o.budget;
    if (o.alpha > 0)
        vo.g_lower.alpha_bound = o.alpha;

    auto params = make_params(o);
    auto report = full_verify(params, vo);

    for (const auto & check : report.checks) {
        std::cout << check.name << ": " << to_string(check.status);
        if (! check.witness.is_null())
            std::cout << "  witness " << check.witness.dump();
        std::cout << '\n';
    }
    std::cout << "verdict: " << report.verdict << '\n';

    if (! o.report.empty())
        with_output(o.report, [&](std::ostream & out) { out << report.to_json().dump(2) << '\n'; });

    if (! validate(params).ok())
        return exit_usage;
    if (report.verified)
        return exit_ok;
    return report.failed ? exit_failed : exit_unknown;
}

int run_chif(const Options & o)
{
    auto g = load_seed(o.seed);
    FractionalOptions fo;
    fo.pricing_budget = o.budget;
    auto r = chi_f_exact(g, fo);
    if (! r.exact) {
        std::cout << "bounds: [" << to_string(r.lower) << ", " << to_string(r.upper) << "]\n";
        return exit_unknown;
    }
    std::cout << to_string(r.value) << '\n';
    if (o.certificate) {
        std::cout << "method: " << r.method << '\n';
        std::cout << "fractional clique:";
        for (const auto & y : r.certificate.vertex_weights)
            std::cout << ' ' << to_string(y);
        std::cout << '\n';
        for (std::size_t k = 0; k < r.certificate.sets.size(); ++k) {
            if (r.certificate.set_weights[k] == 0)
                continue;
            std::cout << to_string(r.certificate.set_weights[k]) << " x {";
            for (std::size_t m = 0; m < r.certificate.sets[k].size(); ++m)
                std::cout << (m ? " " : "") << r.certificate.sets[k][m] + 1;
            std::cout << "}\n";
        }
    }
    return exit_ok;
}

int run_chi(const Options & o)
{
    auto r = chromatic_number(load_seed(o.seed), o.budget);
    if (! r.value) {
        std::cout << "unknown, bounds [" << r.lower << ", " << r.upper << "]\n";
        return exit_unknown;
    }
    std::cout << *r.value << '\n';
    return exit_ok;
}

int run_alpha(const Options & o)
{
    auto r = independence_number(load_seed(o.seed), o.budget);
    if (! r.value) {
        std::cout << "unknown, bounds [" << r.lower << ", " << r.upper << "]\n";
        return exit_unknown;
    }
    std::cout << *r.value << '\n';
    return exit_ok;
}

int run_oddgirth(const Options & o)
{
    auto og = odd_girth(load_seed(o.seed));
    if (og)
        std::cout << *og << '\n';
    else
        std::cout << "none\n";
    return exit_ok;
}

std::vector<std::size_t> parse_chain(const std::string & text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(part, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != part.size() || part.empty() || value == 0)
            throw Error("malformed chain entry '" + part + "'");
        out.push_back(value);
    }
    return out;
}

int run_mycielski(const Options & o)
{
    auto base = load_seed(o.seed);
    auto chain = parse_chain(o.chain);
    auto g = mycielski_chain(base, chain);
    auto og = odd_girth(g);
    std::cout << "vertices: " << g.order() << '\n';
    std::cout << "edges: " << g.edge_count() << '\n';
    std::cout << "odd girth: " << (og ? std::to_string(*og) : "none") << '\n';

    auto chi_f = chi_f_exact(base);
    if (chi_f.exact && chi_f.value > 1) {
        auto value = tardif_chain_value(chi_f.value, chain);
        std::cout << "chi_f (formula): " << to_string(value) << '\n';
        std::cout << "chi_f (decimal): " << value.get_d() << '\n';
    }
    if (! o.out.empty())
        write_dimacs(std::filesystem::path(o.out), g);
    return exit_ok;
}

int run_build(const Options & o)
{
    auto inst = make_instance(o);
    auto g = build_G(inst);
    if (o.graph == "G")
        with_output(o.out, [&](std::ostream & out) { write_dimacs(out, g.graph); });
    else if (o.graph == "H")
        with_output(o.out, [&](std::ostream & out) { write_dimacs(out, build_H(inst)); });
    else if (o.graph == "product") {
        auto h = build_H(inst);
        if (g.graph.order() * h.order() > o.product_guard)
            throw Error("product has " + std::to_string(g.graph.order() * h.order()) + " vertices, above --product-guard");
        with_output(o.out, [&](std::ostream & out) { write_dimacs(out, tensor_product(g.graph, h).graph); });
    }
    else
        throw Error("--graph must be G, H or product");
    return exit_ok;
}

int run_maps(const Options & o)
{
    auto inst = make_instance(o);
    with_output(o.out, [&](std::ostream & out) {
        for (Vertex y = 0; y < inst.h_order(); ++y) {
            auto label = inst.h_vertex(y);
            out << "# " << label.tag() << '\n';
            write_color_function(out, inst.color_function(label));
        }
    });
    return exit_ok;
}

int run_cnf(const Options & o)
{
    auto inst = make_instance(o);
    auto h = build_H(inst);
    PartialColoring pin(h.order(), 0);
    for (int i = 1; i <= inst.c(); ++i)
        pin[inst.h_index(HVertex::g(i))] = i;
    with_output(o.out, [&](std::ostream & out) { write_coloring_cnf(out, h, inst.c(), pin); });
    return exit_ok;
}

int run_sizes(const Options & o)
{
    if (o.p < 1)
        throw Error("--p must be positive");
    const auto p = o.p;
    const auto q = o.q > 0 ? static_cast<std::size_t>(o.q) : p / 2;
    const auto c = o.c > 0 ? static_cast<std::size_t>(o.c) : 3 * q + 2;
    std::cout << "G vertices: " << p * q << '\n';
    std::cout << "H vertices: " << h_vertex_count(p, q, c) << '\n';
    if (c == 3 * q + 2 && q == p / 2)
        std::cout << "closed form: " << h_vertex_count_closed_form(p) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Construct and verify counterexamples to Hedetniemi's conjecture"};
    app.require_subcommand(1);
    Options o;

    auto seed_option = [&](CLI::App * sub) {
        sub->add_option("--seed", o.seed, "c5, c7, petersen, groetzsch, c<n>, k<n>, e<n> or file:<path>")->capture_default_str();
    };
    auto instance_options = [&](CLI::App * sub) {
        seed_option(sub);
        sub->add_option("--q", o.q, "blow-up factor (default ceil((p-1)/2))")->check(CLI::PositiveNumber);
        sub->add_option("--c", o.c, "colour count (default 3q+2)")->check(CLI::PositiveNumber);
        sub->add_flag("--experimental", o.experimental, "allow c = 3q+3 or 3q+4");
    };
    auto budget_option = [&](CLI::App * sub) {
        sub->add_option("--budget", o.budget, "search node budget")->check(CLI::PositiveNumber)->capture_default_str();
    };

    std::vector<std::pair<CLI::App *, std::function<int(const Options &)>>> commands;

    auto verify = app.add_subcommand("verify", "run every check and report a verdict");
    instance_options(verify);
    budget_option(verify);
    verify->add_option("--mode", o.mode, "embedding check mode")->check(CLI::IsMember({"bruteforce", "structured"}))->capture_default_str();
    verify->add_option("--workers", o.workers, "parallel workers for the embedding check")->check(CLI::PositiveNumber);
    verify->add_option("--alpha", o.alpha, "claimed bound alpha(F) <= k, verified by search")->check(CLI::PositiveNumber);
    verify->add_option("--product-guard", o.product_guard, "largest product to materialize")->capture_default_str();
    verify->add_option("--report", o.report, "JSON report path ('-' for stdout)");
    verify->add_flag("--no-timings", o.no_timings, "write 0 for every timing");
    commands.emplace_back(verify, run_verify);

    auto chif = app.add_subcommand("chif", "exact fractional chromatic number of the seed");
    seed_option(chif);
    budget_option(chif);
    chif->add_flag("--certificate", o.certificate, "print the primal and dual solutions");
    commands.emplace_back(chif, run_chif);

    auto chi = app.add_subcommand("chi", "chromatic number of the seed");
    seed_option(chi);
    budget_option(chi);
    commands.emplace_back(chi, run_chi);

    auto alpha = app.add_subcommand("alpha", "independence number of the seed");
    seed_option(alpha);
    budget_option(alpha);
    commands.emplace_back(alpha, run_alpha);

    auto oddgirth = app.add_subcommand("oddgirth", "odd girth of the seed");
    seed_option(oddgirth);
    commands.emplace_back(oddgirth, run_oddgirth);

    auto myc = app.add_subcommand("mycielski", "generalized Mycielski chain of the seed");
    seed_option(myc);
    myc->add_option("--chain", o.chain, "comma-separated r values, applied last first")->required();
    myc->add_option("--out", o.out, "DIMACS output path");
    commands.emplace_back(myc, run_mycielski);

    auto build = app.add_subcommand("build", "emit G, H or G x H in DIMACS");
    instance_options(build);
    build->add_option("--graph", o.graph, "G, H or product")->check(CLI::IsMember({"G", "H", "product"}))->capture_default_str();
    build->add_option("--product-guard", o.product_guard, "largest product to materialize")->capture_default_str();
    build->add_option("--out", o.out, "output path (default stdout)");
    commands.emplace_back(build, run_build);

    auto maps = app.add_subcommand("maps", "emit every H-vertex as a colour function on G");
    instance_options(maps);
    maps->add_option("--out", o.out, "output path (default stdout)");
    commands.emplace_back(maps, run_maps);

    auto cnf = app.add_subcommand("cnf", "emit the chi(H) <= c question as DIMACS CNF");
    instance_options(cnf);
    cnf->add_option("--out", o.out, "output path (default stdout)");
    commands.emplace_back(cnf, run_cnf);

    auto sizes = app.add_subcommand("sizes", "vertex counts of G and H");
    sizes->add_option("--p", o.p, "seed order")->required()->check(CLI::PositiveNumber);
    sizes->add_option("--q", o.q, "blow-up factor (default ceil((p-1)/2))")->check(CLI::PositiveNumber);
    sizes->add_option("--c", o.c, "colour count (default 3q+2)")->check(CLI::PositiveNumber);
    commands.emplace_back(sizes, run_sizes);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        for (auto & [sub, run] : commands)
            if (sub->parsed())
                return run(o);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
