#pragma once

#include "quiveralg/incidence.hpp"

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace quiveralg {

/// Γ × Γ' with vertex (a, b) at index a * |Γ'_0| + b. Arrow labels are
/// "(x;b)" for horizontal arrows and "(a;y)" for vertical ones.
struct ProductQuiver {
    Quiver left;
    Quiver right;
    Quiver quiver;
    std::vector<std::vector<int>> horizontal;  // [x][b]
    std::vector<std::vector<int>> vertical;    // [a][y]

    struct Origin {
        bool horizontal = true;
        int arrow = 0;   // arrow of the factor that moves
        int vertex = 0;  // vertex of the factor that stays
    };
    std::vector<Origin> origin;  // per product arrow

    int vertex(int a, int b) const { return a * right.vertex_count() + b; }
};
ProductQuiver product_quiver(const Quiver& left, const Quiver& right);

/// Lattice points from (0,0) to (n,k), one step right or up at a time.
struct LatticeWalk {
    std::vector<std::pair<int, int>> points;
    int n() const { return points.back().first; }
    int k() const { return points.back().second; }
    bool step_right(std::size_t r) const { return points[r + 1].first > points[r].first; }
    friend bool operator==(const LatticeWalk&, const LatticeWalk&) = default;
};
/// All walks; right steps are tried before up steps.
std::vector<LatticeWalk> lattice_walks(int n, int k);

/// The path of Γ × Γ' attached to (p, q, w).
Path walk_path(const ProductQuiver& pq, const Path& p, const Path& q, const LatticeWalk& w);
std::tuple<Path, Path, LatticeWalk> decompose_product_path(const ProductQuiver& pq, const Path& g);

/// α(p ⊗ q) = Σ_{w ∈ W(p,q)} w.
Element<Rational> alpha_embed(const ProductQuiver& pq, const Tensor<Rational>& t);
/// Δ∘α = (α⊗α)∘δ and ε∘α = ε⊗ε on t.
bool alpha_morphism_on(const ProductQuiver& pq, const Tensor<Rational>& t);
/// Reads back p ⊗ q through the functionals (p*, q*) that are 1 on the walk
/// going all the way right first; left inverse of α.
Tensor<Rational> alpha_left_inverse(const ProductQuiver& pq, const Element<Rational>& e);

struct SaturationResult {
    std::set<int> s0;         // vertices on support paths of V
    std::vector<Path> p;      // paths with both endpoints in S0
    std::set<int> s;          // vertices on the paths of P
    std::vector<Path> w;      // basis of W: paths with both endpoints in S
    bool contains(const Path& path) const;
};
/// Throws InputError when some vertex between S0-vertices lies on a cycle
/// (infinitely many paths between two vertices).
SaturationResult saturate_subcoalgebra(const Quiver& q, const std::vector<Element<Rational>>& v);

struct FactorizationWitness {
    Functional eta;
    Element<Rational> f1, g1, f2, g2;  // value tables up to the truncation
    std::size_t truncation = 0;
    std::size_t paths_checked = 0;
    bool vanish_on_w = false;
    bool identity_holds = false;
    bool verified() const { return vanish_on_w && identity_holds; }
};

/// η = f1 g1 + f2 g2 with all four in W^⊥, built by induction on path length
/// with f1(p) = g2(p) = 0 at every step. Throws InputError if η ∉ W^⊥.
FactorizationWitness factor_perp_element(const Quiver& q, const Functional& eta,
                                         const SaturationResult& w, std::size_t max_len);

/// Basis of W_n inside the star quiver truncated at N: a, c, b_k, x_k, y_k,
/// x_k y_k for k <= n.
std::vector<Path> star_subcoalgebra_basis(const Quiver& star, int n);
/// Per k > n, splits [[η(b_k), η(y_k)], [η(x_k), η(x_k y_k)]] into two rank-one
/// matrices; f_i, g_i of the witness play the roles of g_i, h_i.
FactorizationWitness example56_factorization(int n, int truncation, const Functional& eta);

/// K(a - c) is a coideal of the star coalgebra with multiple arrows,
/// checked on its truncation.
bool verify_skew_primitive_coideal(int truncation);

enum class Coreflexivity { Coreflexive, NotCoreflexive, Unknown };
std::string to_string(Coreflexivity c);

struct CoalgebraDescription {
    enum class Kind { Quiver, Family, Poset, PosetFamily, Tensor };
    Kind kind = Kind::Quiver;
    std::optional<Quiver> quiver;
    std::optional<QuiverFamily> family;
    std::optional<Poset> poset;
    std::optional<PosetFamily> poset_family;
    std::vector<CoalgebraDescription> factors;

    static CoalgebraDescription of(const Quiver& q);
    static CoalgebraDescription of(const QuiverFamily& f);
    static CoalgebraDescription of(const Poset& p);
    static CoalgebraDescription of(PosetFamily f);
    static CoalgebraDescription tensor(CoalgebraDescription a, CoalgebraDescription b);
    std::string name() const;
};

struct CoreflexivityVerdict {
    Coreflexivity value = Coreflexivity::Unknown;
    std::vector<std::string> chain;  // rules applied, in order
};
CoreflexivityVerdict coreflexivity_verdict(const CoalgebraDescription& c);

}  // namespace quiveralg
