#include <hedet/dimacs.hpp>
#include <hedet/error.hpp>

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace hedet {

namespace {
    std::string where(std::size_t line_no)
    {
        return "dimacs line " + std::to_string(line_no) + ": ";
    }
}

Graph read_dimacs(std::istream & in)
{
    std::optional<GraphBuilder> builder;
    bool allow_loops = false;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (! (fields >> tag))
            continue;

        if (tag == "c") {
            std::string word;
            if (fields >> word && word == "allow_loops") {
                if (builder)
                    throw ParseError(where(line_no) + "allow_loops must precede the header");
                allow_loops = true;
            }
        }
        else if (tag == "p") {
            if (builder)
                throw ParseError(where(line_no) + "duplicate header");
            std::string format;
            long long n = -1, m = -1;
            if (! (fields >> format >> n >> m) || (format != "edge" && format != "col") || n < 0 || m < 0)
                throw ParseError(where(line_no) + "malformed header '" + line + "'");
            builder.emplace(static_cast<std::size_t>(n), allow_loops);
        }
        else if (tag == "e") {
            if (! builder)
                throw ParseError(where(line_no) + "edge before header");
            long long u = 0, v = 0;
            if (! (fields >> u >> v))
                throw ParseError(where(line_no) + "malformed edge '" + line + "'");
            auto n = static_cast<long long>(builder->order());
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(where(line_no) + "vertex index out of range in '" + line + "'");
            if (u == v && ! allow_loops)
                throw ParseError(where(line_no) + "loop without allow_loops marker");
            builder->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        }
        else
            throw ParseError(where(line_no) + "unknown line type '" + tag + "'");
    }

    if (! builder)
        throw ParseError("dimacs: missing 'p edge' header");
    return std::move(*builder).build();
}

Graph read_dimacs(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot open " + path.string());
    return read_dimacs(in);
}

void write_dimacs(std::ostream & out, const Graph & g)
{
    if (g.loop_count() > 0)
        out << "c allow_loops\n";
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_dimacs(const std::filesystem::path & path, const Graph & g)
{
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write " + path.string());
    write_dimacs(out, g);
}

} // namespace hedet
