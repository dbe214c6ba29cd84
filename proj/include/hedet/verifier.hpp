#pragma once

#include <hedet/counterexample.hpp>
#include <hedet/fractional.hpp>
#include <hedet/solvers.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hedet {

enum class Status { pass, fail, unknown };

const char * to_string(Status s) noexcept;

enum class EmbeddingMode { bruteforce, structured };

EmbeddingMode parse_embedding_mode(const std::string & name);
const char * to_string(EmbeddingMode m) noexcept;

/// H-edge (first, second) and G-edge (v_s1, j1)(v_s2, j2) with
/// first(v_s1, j1) == second(v_s2, j2) == colour. Indices 1-based.
struct EmbeddingViolation {
    HVertex first;
    HVertex second;
    int s1 = 0, j1 = 0, s2 = 0, j2 = 0;
    int colour = 0;

    bool operator==(const EmbeddingViolation &) const = default;
};

struct EmbeddingResult {
    bool pass = true;
    std::optional<EmbeddingViolation> violation; ///< for the first failing H-edge
    std::size_t h_edges = 0;
    std::size_t disjoint_images = 0; ///< H-edges settled by disjoint images (structured mode)
};

/// Is every edge of H an edge of K_c^G under the vertex maps? Bruteforce
/// compares every H-edge against every ordered G-edge. Structured mode skips
/// pairs with disjoint images and otherwise works on distance-class colour
/// tables. Both report the same first failing H-edge and witness.
EmbeddingResult check_embedding(const Instance & inst, const LexGraph & g, const Graph & h, EmbeddingMode mode,
    unsigned workers = 1);

/// Re-derives the witness from the vertex maps and the two graphs.
bool replay(const Instance & inst, const LexGraph & g, const Graph & h, const EmbeddingViolation & v);

struct ProductCheck {
    Status status = Status::unknown;
    bool skipped = false; ///< product larger than the guard
    std::size_t order = 0;
    std::optional<EmbeddingViolation> witness; ///< monochromatic product edge, same shape
};

ProductCheck check_product_coloring(
    const Instance & inst, const LexGraph & g, const Graph & h, std::size_t guard = 10'000);

struct HLowerResult {
    Status status = Status::unknown;
    std::optional<Coloring> coloring; ///< the extension, when one exists
    std::uint64_t nodes = 0;
};

/// Pins g_i to colour i and asks for a proper `colours`-colouring of `h`;
/// pass means none exists. `h` must index g_1..g_c as 0..c-1 (build_H or an
/// induced subgraph keeping that prefix).
HLowerResult check_h_lower(const Instance & inst, const Graph & h, int colours,
    std::uint64_t budget = default_node_budget);

struct GLowerOptions {
    std::optional<std::size_t> alpha_bound; ///< claimed alpha(F) <= k, verified by search
    std::size_t lp_vertex_limit = 40;
    std::uint64_t budget = default_node_budget;
};

struct GLowerResult {
    Status status = Status::unknown;
    std::string route;    ///< "lp" or "n/alpha"
    Rational chi_f_lower; ///< certified lower bound on chi_f(F)
    Rational product;     ///< q * chi_f_lower
    std::optional<std::size_t> alpha;
};

/// chi(G) >= q chi_f(F) > c, certified by the exact LP or by |V(F)|/alpha(F).
GLowerResult check_g_lower(const Instance & inst, const GLowerOptions & options = {});

struct VerifyOptions {
    EmbeddingMode mode = EmbeddingMode::structured;
    unsigned workers = 1;
    std::uint64_t budget = default_node_budget;
    std::size_t product_guard = 10'000;
    GLowerOptions g_lower;
    bool timings = true; ///< false writes 0 for every "millis"
};

using Json = nlohmann::ordered_json;

struct CheckRecord {
    std::string name;
    Status status = Status::unknown;
    Json witness;
    Json detail;
    long long millis = 0;
};

struct VerificationReport {
    Json params;
    std::vector<CheckRecord> checks;
    std::string verdict;
    bool verified = false;
    bool failed = false; ///< some core claim is refuted
    bool unknown = false;

    const CheckRecord * find(const std::string & name) const;
    Json to_json() const;
};

/// Runs every check and never throws for check failures.
VerificationReport full_verify(const Params & params, const VerifyOptions & options = {});

Json to_json(const EmbeddingViolation & v);

} // namespace hedet
