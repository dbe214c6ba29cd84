#pragma once

#include <hedet/graph.hpp>
#include <hedet/rational.hpp>
#include <hedet/solvers.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hedet {

/// Optimal solution pair of the independent-set covering LP
///   min sum x_I  s.t.  sum_{I ∋ v} x_I >= 1,  x >= 0
/// and its dual (a fractional clique).
struct CoveringSolution {
    std::vector<std::vector<Vertex>> sets; ///< LP columns
    std::vector<Rational> set_weights;     ///< primal x, one per column
    std::vector<Rational> vertex_weights;  ///< dual y, one per vertex
    Rational primal_value;
    Rational dual_value;
    std::size_t pivots = 0;
};

/// Exact dual simplex with Bland's rule. Every vertex must lie in some
/// column. Throws if the returned pair fails its own feasibility or
/// optimality check.
CoveringSolution solve_covering_lp(std::size_t vertices, std::vector<std::vector<Vertex>> sets);

/// All maximal independent sets, or nullopt if there are more than `guard`.
std::optional<std::vector<std::vector<Vertex>>> maximal_independent_sets(const Graph & g, std::size_t guard);

struct FractionalOptions {
    std::size_t enumeration_vertex_limit = 40;
    std::size_t enumeration_set_limit = 50'000;
    std::uint64_t pricing_budget = 10'000'000;
    std::size_t max_rounds = 10'000;
};

struct FractionalResult {
    bool exact = false;
    Rational value; ///< chi_f when exact
    Rational lower; ///< certified bounds, equal to value when exact
    Rational upper;
    std::string method; ///< "enumeration" or "column-generation"
    CoveringSolution certificate;
};

/// chi_f(G) in exact arithmetic. Small graphs enumerate all maximal
/// independent sets; larger ones use column generation priced by an exact
/// maximum-weight independent set search.
FractionalResult chi_f_exact(const Graph & g, const FractionalOptions & options = {});

struct WeightedSetResult {
    std::vector<Vertex> set;
    Rational weight;
    Rational upper; ///< bound on the optimum (equals weight when exact)
    bool exact = false;
};

WeightedSetResult max_weight_independent_set(const Graph & g, const std::vector<Rational> & weights,
    std::uint64_t budget = default_node_budget);

struct NOverAlpha {
    Rational bound;          ///< |V| / alpha_upper, a lower bound on chi_f
    std::size_t alpha_upper = 0;
    bool alpha_exact = false;
};

NOverAlpha chi_f_lower_n_over_alpha(const Graph & g, std::uint64_t budget = default_node_budget);

/// chi_f(M_r(G)) from chi_f(G): base + 1 / sum_{i<r} (base - 1)^i. Needs base > 1.
Rational tardif_value(const Rational & base, std::size_t r);

/// Folds tardif_value over rvec, last entry first (matching mycielski_chain).
Rational tardif_chain_value(const Rational & base, const std::vector<std::size_t> & rvec);

} // namespace hedet
