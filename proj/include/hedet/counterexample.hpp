#pragma once

#include <hedet/bitset.hpp>
#include <hedet/exponential.hpp>
#include <hedet/graph.hpp>
#include <hedet/solvers.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hedet {

/// Vertex of the gadget graph H. All indices are 1-based, as are colours.
struct HVertex {
    enum class Kind { g, phi, mu, theta };

    Kind kind = Kind::g;
    int i = 0; ///< g: colour index; mu/theta: seed vertex index
    int t = 0; ///< mu/theta only

    static HVertex g(int i) { return {Kind::g, i, 0}; }
    static HVertex phi() { return {Kind::phi, 0, 0}; }
    static HVertex mu(int i, int t) { return {Kind::mu, i, t}; }
    static HVertex theta(int i, int t) { return {Kind::theta, i, t}; }

    /// "g:i", "phi", "mu:i:t", "theta:i:t".
    std::string tag() const;
    static HVertex parse(const std::string & tag);

    auto operator<=>(const HVertex &) const = default;
};

struct Params {
    Graph seed; ///< F, on vertices v_1..v_p (stored 0-based)
    int q = 0;
    int c = 0; ///< 3q + 2, or 3q + 3 / 3q + 4 in experimental mode
    bool experimental = false;
    std::string seed_name = "custom";
};

struct Validation {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const noexcept { return errors.empty(); }
};

/// Errors: p > 2q + 1, c outside the allowed set, F with loops, q < 1.
/// Warnings: odd girth below 7, disconnected F.
Validation validate(const Params & params);

/// |V(H)| = c + 1 + p(2q + 1) + p(q + 1).
std::size_t h_vertex_count(std::size_t p, std::size_t q, std::size_t c);

/// 3 ceil((p+1)/2) (p+1) - p, the count for q = ceil((p-1)/2), c = 3q + 2.
std::size_t h_vertex_count_closed_form(std::size_t p);

struct ClosedFormImage {
    Bitset colours;         ///< bit k for colour k
    bool precondition = true; ///< the distance classes the formula reads are all nonempty
};

/// A validated counterexample instance: seed, distances, and the layout of H.
class Instance {
public:
    /// Throws Error listing every validation error.
    explicit Instance(Params params);

    const Params & params() const noexcept { return params_; }
    const Graph & seed() const noexcept { return params_.seed; }
    int p() const noexcept { return p_; }
    int q() const noexcept { return params_.q; }
    int c() const noexcept { return params_.c; }
    const std::vector<std::string> & warnings() const noexcept { return warnings_; }

    /// d_F(v_s, v_i) with 1-based indices; `unreachable` across components.
    std::size_t distance(int s, int i) const noexcept
    {
        return dist_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i - 1)];
    }

    std::size_t h_order() const noexcept { return h_order_; }
    Vertex h_index(const HVertex & y) const;
    HVertex h_vertex(Vertex index) const;

    /// Index of G-vertex (v_s, j) in build_G, 1-based s and j.
    Vertex g_index(int s, int j) const noexcept
    {
        return static_cast<Vertex>((s - 1) * params_.q + (j - 1));
    }

    /// y(v_s, j), the colour H-vertex y assigns to G-vertex (v_s, j).
    int vertex_map(const HVertex & y, int s, int j) const;

    /// y as a vertex of K_c^G, in build_G's vertex order.
    ColorFunction color_function(const HVertex & y) const;

    ClosedFormImage image(const HVertex & y) const;
    Bitset image_bruteforce(const HVertex & y) const;

private:
    Params params_;
    int p_ = 0;
    std::size_t h_order_ = 0;
    std::vector<std::vector<std::size_t>> dist_;
    std::vector<std::string> warnings_;
};

/// G = F[K_q].
LexGraph build_G(const Instance & inst);

/// One clause of the construction of H and the edges it contributes.
struct HRule {
    std::string clause;
    std::vector<std::pair<HVertex, HVertex>> edges;
};

/// The construction clause by clause, edges as tagged pairs.
std::vector<HRule> h_rules(const Instance & inst);

/// H, built from h_rules, vertices in Instance::h_index order.
Graph build_H(const Instance & inst);

/// Phi(x, y) = y(x) on G x H; `product` must be tensor_product(G, H).
Coloring product_coloring(const Instance & inst, const ProductGraph & product);

} // namespace hedet
