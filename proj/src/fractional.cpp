#include <hedet/error.hpp>
#include <hedet/fractional.hpp>

#include <algorithm>
#include <string>

namespace hedet {

std::string to_string(const Rational & r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string & text)
{
    try {
        Rational r(text, 10);
        if (r.get_den() == 0)
            throw Error("zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    }
    catch (const std::invalid_argument &) {
        throw Error("not a rational: '" + text + "'");
    }
}

namespace {
    struct BudgetExhausted {
    };

    /// Tableau for min 1'x, Ax - s = 1 with rows negated so that the surplus
    /// basis is dual feasible.
    class DualSimplex {
    public:
        DualSimplex(std::size_t rows, const std::vector<std::vector<Vertex>> & sets) :
            rows_(rows), sets_(sets.size()), cols_(sets.size() + rows), tab_(rows, std::vector<Rational>(cols_)),
            rhs_(rows, Rational(-1)), cost_(cols_), basis_(rows)
        {
            for (std::size_t j = 0; j < sets_; ++j) {
                cost_[j] = 1;
                for (auto v : sets[j])
                    tab_[v][j] = -1;
            }
            for (std::size_t r = 0; r < rows_; ++r) {
                tab_[r][sets_ + r] = 1;
                basis_[r] = sets_ + r;
            }
        }

        std::size_t run()
        {
            std::size_t pivots = 0;
            while (true) {
                std::size_t leave = rows_;
                for (std::size_t r = 0; r < rows_; ++r)
                    if (sgn(rhs_[r]) < 0 && (leave == rows_ || basis_[r] < basis_[leave]))
                        leave = r;
                if (leave == rows_)
                    return pivots;

                std::size_t enter = cols_;
                Rational best_ratio;
                for (std::size_t j = 0; j < cols_; ++j) {
                    if (sgn(tab_[leave][j]) >= 0)
                        continue;
                    Rational ratio = cost_[j] / -tab_[leave][j];
                    if (enter == cols_ || ratio < best_ratio) {
                        enter = j;
                        best_ratio = ratio;
                    }
                }
                if (enter == cols_)
                    throw Error("covering LP is infeasible: some vertex is in no column");
                pivot(leave, enter);
                ++pivots;
            }
        }

        std::vector<Rational> primal() const
        {
            std::vector<Rational> x(sets_);
            for (std::size_t r = 0; r < rows_; ++r)
                if (basis_[r] < sets_)
                    x[basis_[r]] = rhs_[r];
            return x;
        }

        /// Reduced cost of each surplus column.
        std::vector<Rational> dual() const
        {
            std::vector<Rational> y(rows_);
            for (std::size_t r = 0; r < rows_; ++r)
                y[r] = cost_[sets_ + r];
            return y;
        }

    private:
        void pivot(std::size_t row, std::size_t col)
        {
            const Rational p = tab_[row][col];
            auto & pr = tab_[row];
            for (auto & a : pr)
                if (sgn(a) != 0)
                    a /= p;
            rhs_[row] /= p;

            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || sgn(tab_[r][col]) == 0)
                    continue;
                const Rational f = tab_[r][col];
                for (std::size_t j = 0; j < cols_; ++j)
                    if (sgn(pr[j]) != 0)
                        tab_[r][j] -= f * pr[j];
                rhs_[r] -= f * rhs_[row];
            }
            if (sgn(cost_[col]) != 0) {
                const Rational f = cost_[col];
                for (std::size_t j = 0; j < cols_; ++j)
                    if (sgn(pr[j]) != 0)
                        cost_[j] -= f * pr[j];
            }
            basis_[row] = col;
        }

        std::size_t rows_, sets_, cols_;
        std::vector<std::vector<Rational>> tab_;
        std::vector<Rational> rhs_;
        std::vector<Rational> cost_;
        std::vector<std::size_t> basis_;
    };

    void certify(const CoveringSolution & s, std::size_t vertices)
    {
        std::vector<Rational> cover(vertices);
        for (std::size_t j = 0; j < s.sets.size(); ++j) {
            if (sgn(s.set_weights[j]) < 0)
                throw Error("covering LP: negative primal weight");
            for (auto v : s.sets[j])
                cover[v] += s.set_weights[j];
        }
        for (const auto & c : cover)
            if (c < 1)
                throw Error("covering LP: primal solution leaves a vertex uncovered");
        for (const auto & y : s.vertex_weights)
            if (sgn(y) < 0)
                throw Error("covering LP: negative dual weight");
        for (const auto & set : s.sets) {
            Rational load;
            for (auto v : set)
                load += s.vertex_weights[v];
            if (load > 1)
                throw Error("covering LP: dual solution overloads a column");
        }
        if (s.primal_value != s.dual_value)
            throw Error("covering LP: primal " + to_string(s.primal_value) + " != dual " + to_string(s.dual_value));
    }

    /// Greedy maximal extension in index order.
    std::vector<Vertex> make_maximal(const Graph & g, std::vector<Vertex> set)
    {
        Bitset blocked(g.order());
        for (auto v : set) {
            blocked.set(v);
            blocked |= g.neighbours(v);
        }
        for (Vertex v = 0; v < g.order(); ++v)
            if (! blocked.test(v)) {
                set.push_back(v);
                blocked.set(v);
                blocked |= g.neighbours(v);
            }
        std::sort(set.begin(), set.end());
        return set;
    }

    class WeightedSearch {
    public:
        WeightedSearch(const Graph & g, const std::vector<Rational> & w, std::uint64_t budget) :
            g_(g), w_(w), budget_(budget)
        {
        }

        WeightedSetResult run()
        {
            WeightedSetResult result;
            Bitset all(g_.order());
            for (Vertex v = 0; v < g_.order(); ++v)
                if (sgn(w_[v]) > 0)
                    all.set(v);
            result.upper = bound(all);
            std::vector<Vertex> current;
            try {
                expand(current, Rational(0), all);
                result.exact = true;
            }
            catch (const BudgetExhausted &) {
            }
            result.set = best_;
            std::sort(result.set.begin(), result.set.end());
            result.weight = best_weight_;
            if (result.exact)
                result.upper = best_weight_;
            return result;
        }

    private:
        /// Sum over a greedy clique partition of the heaviest member.
        Rational bound(Bitset left) const
        {
            Rational total;
            while (left.any()) {
                auto v = left.first();
                left.reset(v);
                Rational heaviest = w_[v];
                Bitset cand = g_.neighbours(v) & left;
                while (cand.any()) {
                    auto u = cand.first();
                    left.reset(u);
                    if (w_[u] > heaviest)
                        heaviest = w_[u];
                    cand &= g_.neighbours(u);
                    cand.reset(u);
                }
                total += heaviest;
            }
            return total;
        }

        void expand(std::vector<Vertex> & current, const Rational & weight, Bitset cand)
        {
            if (++nodes_ > budget_)
                throw BudgetExhausted{};
            if (cand.none()) {
                if (weight > best_weight_) {
                    best_weight_ = weight;
                    best_ = current;
                }
                return;
            }
            if (weight + bound(cand) <= best_weight_)
                return;

            Vertex pick = cand.first();
            cand.for_each([&](Vertex v) {
                if (w_[v] > w_[pick])
                    pick = v;
            });

            Bitset with = cand;
            with.reset(pick);
            with -= g_.neighbours(pick);
            current.push_back(pick);
            expand(current, weight + w_[pick], std::move(with));
            current.pop_back();

            cand.reset(pick);
            expand(current, weight, std::move(cand));
        }

        const Graph & g_;
        const std::vector<Rational> & w_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::vector<Vertex> best_;
        Rational best_weight_;
    };
}

CoveringSolution solve_covering_lp(std::size_t vertices, std::vector<std::vector<Vertex>> sets)
{
    for (const auto & set : sets)
        for (auto v : set)
            if (v >= vertices)
                throw Error("covering LP: column mentions vertex " + std::to_string(v));

    DualSimplex lp(vertices, sets);
    CoveringSolution s;
    s.pivots = lp.run();
    s.sets = std::move(sets);
    s.set_weights = lp.primal();
    s.vertex_weights = lp.dual();
    for (const auto & x : s.set_weights)
        s.primal_value += x;
    for (const auto & y : s.vertex_weights)
        s.dual_value += y;
    certify(s, vertices);
    return s;
}

std::optional<std::vector<std::vector<Vertex>>> maximal_independent_sets(const Graph & g, std::size_t guard)
{
    // Bron-Kerbosch with pivoting on the complement.
    const auto n = g.order();
    std::vector<Bitset> non_adj(n, Bitset(n));
    for (Vertex v = 0; v < n; ++v) {
        non_adj[v].set_all();
        non_adj[v] -= g.neighbours(v);
        non_adj[v].reset(v);
    }

    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> current;
    bool overflow = false;

    auto recurse = [&](auto && self, Bitset p, Bitset x) -> void {
        if (overflow)
            return;
        if (p.none() && x.none()) {
            if (out.size() == guard) {
                overflow = true;
                return;
            }
            auto set = current;
            std::sort(set.begin(), set.end());
            out.push_back(std::move(set));
            return;
        }
        Bitset px = p | x;
        Vertex pivot = px.first();
        std::size_t best = 0;
        px.for_each([&](Vertex u) {
            auto k = p.intersection_count(non_adj[u]);
            if (k > best) {
                best = k;
                pivot = u;
            }
        });
        Bitset branch = p - non_adj[pivot];
        for (auto v = branch.first(); v != Bitset::npos; v = branch.next_from(v + 1)) {
            current.push_back(v);
            self(self, p & non_adj[v], x & non_adj[v]);
            current.pop_back();
            p.reset(v);
            x.set(v);
        }
    };

    Bitset all(n);
    all.set_all();
    if (n > 0)
        recurse(recurse, all, Bitset(n));
    if (overflow)
        return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

WeightedSetResult max_weight_independent_set(const Graph & g, const std::vector<Rational> & weights, std::uint64_t budget)
{
    if (weights.size() != g.order())
        throw Error("weight vector has the wrong length");
    if (g.loop_count() > 0)
        throw Error("independent sets are undefined for graphs with loops");
    return WeightedSearch(g, weights, budget).run();
}

FractionalResult chi_f_exact(const Graph & g, const FractionalOptions & options)
{
    if (g.loop_count() > 0)
        throw Error("chi_f is undefined for graphs with loops");

    FractionalResult result;
    if (g.order() == 0) {
        result.exact = true;
        result.method = "enumeration";
        return result;
    }

    if (g.order() <= options.enumeration_vertex_limit) {
        if (auto sets = maximal_independent_sets(g, options.enumeration_set_limit)) {
            result.certificate = solve_covering_lp(g.order(), std::move(*sets));
            result.exact = true;
            result.method = "enumeration";
            result.value = result.lower = result.upper = result.certificate.primal_value;
            return result;
        }
    }

    result.method = "column-generation";
    std::vector<std::vector<Vertex>> columns;
    {
        Bitset covered(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            if (! covered.test(v)) {
                auto set = make_maximal(g, {v});
                for (auto u : set)
                    covered.set(u);
                columns.push_back(std::move(set));
            }
    }

    for (std::size_t round = 0; round < options.max_rounds; ++round) {
        auto lp = solve_covering_lp(g.order(), columns);
        auto price = max_weight_independent_set(g, lp.vertex_weights, options.pricing_budget);
        result.upper = lp.primal_value;
        // Any dual y with max-weight independent set W gives chi_f >= sum(y) / W.
        if (sgn(price.upper) > 0) {
            Rational lower = lp.dual_value / std::max(price.upper, Rational(1));
            if (lower > result.lower)
                result.lower = lower;
        }
        if (price.exact && price.weight <= 1) {
            result.exact = true;
            result.value = result.lower = result.upper = lp.primal_value;
            result.certificate = std::move(lp);
            return result;
        }
        if (price.weight <= 1) {
            result.certificate = std::move(lp);
            return result;
        }
        columns.push_back(make_maximal(g, price.set));
        result.certificate = std::move(lp);
    }
    return result;
}

NOverAlpha chi_f_lower_n_over_alpha(const Graph & g, std::uint64_t budget)
{
    auto alpha = independence_number(g, budget);
    NOverAlpha out;
    out.alpha_exact = alpha.value.has_value();
    out.alpha_upper = alpha.upper;
    if (out.alpha_upper == 0) {
        out.bound = 0;
        return out;
    }
    out.bound = Rational(static_cast<unsigned long>(g.order()), static_cast<unsigned long>(out.alpha_upper));
    out.bound.canonicalize();
    return out;
}

Rational tardif_value(const Rational & base, std::size_t r)
{
    if (base <= 1)
        throw Error("Mycielski fractional formula needs chi_f > 1, got " + to_string(base));
    if (r < 1)
        throw Error("Mycielski fractional formula needs r >= 1");
    Rational sum, power(1);
    const Rational ratio = base - 1;
    for (std::size_t i = 0; i < r; ++i) {
        sum += power;
        power *= ratio;
    }
    return base + 1 / sum;
}

Rational tardif_chain_value(const Rational & base, const std::vector<std::size_t> & rvec)
{
    Rational value = base;
    for (auto it = rvec.rbegin(); it != rvec.rend(); ++it)
        value = tardif_value(value, *it);
    return value;
}

} // namespace hedet
