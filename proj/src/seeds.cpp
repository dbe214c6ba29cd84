#include <hedet/dimacs.hpp>
#include <hedet/error.hpp>
#include <hedet/seeds.hpp>

#include <cctype>

namespace hedet {

namespace {
    std::optional<std::size_t> suffix_number(const std::string & spec, char prefix)
    {
        if (spec.size() < 2 || spec[0] != prefix)
            return std::nullopt;
        for (std::size_t k = 1; k < spec.size(); ++k)
            if (! std::isdigit(static_cast<unsigned char>(spec[k])))
                return std::nullopt;
        if (spec.size() > 8)
            throw Error("seed size in '" + spec + "' is too large");
        return static_cast<std::size_t>(std::stoul(spec.substr(1)));
    }
}

Graph load_seed(const std::string & spec)
{
    if (spec.rfind("file:", 0) == 0)
        return read_dimacs(std::filesystem::path(spec.substr(5)));
    if (spec == "petersen")
        return generate(GraphKind::petersen, 10);
    if (spec == "groetzsch" || spec == "grotzsch")
        return mycielski(generate(GraphKind::cycle, 5), 2).graph;
    if (auto n = suffix_number(spec, 'c'))
        return generate(GraphKind::cycle, *n);
    if (auto n = suffix_number(spec, 'k'))
        return generate(GraphKind::complete, *n);
    if (auto n = suffix_number(spec, 'e'))
        return generate(GraphKind::edgeless, *n);
    throw Error("unknown seed '" + spec + "' (expected c5, c7, petersen, groetzsch, c<n>, k<n>, e<n> or file:<path>)");
}

} // namespace hedet
