#pragma once

#include "quiveralg/dual_algebra.hpp"

#include <string>
#include <vector>

namespace quiveralg {

/// A finite-dimensional algebra given by structure constants on a labelled
/// basis, with a complete system of orthogonal idempotents.
class StructuredAlgebra {
public:
    /// table[i][j] = coordinates of b_i b_j. Validates associativity on basis
    /// triples, orthogonality of the idempotents and that their sum is a
    /// two-sided identity; throws InputError otherwise.
    StructuredAlgebra(std::vector<std::string> labels, std::vector<std::vector<VectorQ>> table,
                      std::vector<VectorQ> idempotents);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<VectorQ>& idempotents() const { return idempotents_; }
    const VectorQ& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    VectorQ multiply(const VectorQ& a, const VectorQ& b) const;
    VectorQ basis(std::size_t i) const;
    /// Matrix of x ↦ x b_i (acting on coordinate columns).
    MatrixQ right_multiplication(const VectorQ& a) const;
    /// Matrix of x ↦ b_i x.
    MatrixQ left_multiplication(const VectorQ& a) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    StructuredAlgebra opposite() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<VectorQ>> table_;
    std::vector<VectorQ> idempotents_;
};

/// K[Γ] of a finite acyclic quiver on its path basis (sorted path order), with
/// the vertices as idempotents.
StructuredAlgebra path_algebra(const Quiver& q);

/// Text format: `algebra`, `basis <l1> <l2> ...`, `idempotents <l> ...`,
/// `mul <a> <b> = <combination>` (e.g. `3*[c] - 1/2*[d]`); absent products are 0.
StructuredAlgebra parse_algebra_text(const std::string& text);

/// The dual coalgebra A⁰ = A* on the dual basis b_i*.
struct DualCoalgebra {
    std::vector<SparseVector<std::pair<int, int>, Rational>> delta;
    std::vector<Rational> counit;
    std::size_t dim() const { return counit.size(); }

    SparseVector<std::pair<int, int>, Rational> comultiply(int i) const { return delta[i]; }
    bool coassociative() const;
    bool counital() const;
};
DualCoalgebra dual_coalgebra(const StructuredAlgebra& a);

/// θ(c) = Σ c_p p*, with the monomial ideal spanned by the paths that are not
/// subpaths of support paths as kernel witness.
struct ThetaImage {
    Functional functional;
    std::set<Path> complement;  // S(support): finite, subpath-closed
};
ThetaImage theta_embed(const Quiver& q, const Element<Rational>& c);

struct FiniteDualWitness {
    bool member = false;
    std::vector<VectorQ> ideal;  // basis of an ideal inside Ker f
    std::size_t codimension = 0;
    std::size_t idempotents_outside = 0;  // |{α : e_α ∉ I}|
    std::string explanation;
};

/// f given by its values on the basis. Witness: the largest two-sided ideal
/// inside Ker f, {a : f(x a y) = 0 for all basis x, y}.
FiniteDualWitness is_in_finite_dual(const StructuredAlgebra& a, const VectorQ& f);

/// eval(λ) on the one-loop quiver: witness ideal generated by x - λv,
/// checked on the truncation up to `truncation`.
struct LoopEvalWitness {
    bool member = false;
    std::vector<Element<Rational>> generators;
    std::size_t checked = 0;
    std::size_t codimension = 0;
    std::string explanation;
};
LoopEvalWitness loop_eval_in_finite_dual(const Rational& lambda, std::size_t truncation);

/// Three of the equivalent characterisations of A⁰, evaluated independently.
struct DualCharacterisations {
    bool kernel_contains_cofinite_ideal = false;
    bool left_hit_orbit_finite = false;
    bool kernel_contains_cofinite_left_ideal = false;
    std::size_t orbit_dimension = 0;
    bool agree() const {
        return kernel_contains_cofinite_ideal == left_hit_orbit_finite &&
               left_hit_orbit_finite == kernel_contains_cofinite_left_ideal;
    }
};
DualCharacterisations finite_dual_characterisations(const StructuredAlgebra& a, const VectorQ& f);

/// Does Ker f contain a cofinite monomial ideal?
MonomialSearch is_in_theta_image(const Quiver& q, const Functional& f, std::size_t max_len,
                                 std::size_t codim_bound);

struct ThetaIsoReport {
    bool isomorphism = false;
    std::size_t coalgebra_dim = 0;     // dim KΓ
    std::size_t dual_dim = 0;          // dim K[Γ]⁰ = dim K[Γ]*
    std::size_t theta_rank = 0;
    bool coalgebra_morphism = false;
    std::optional<Functional> witness;  // in K[Γ]⁰ but outside θ(KΓ)
    std::optional<MonomialSearch> witness_search;
    bool witness_in_finite_dual = false;
    std::string explanation;
};
/// Finite quivers. On cyclic ones the witness is eval(1) on a simple cycle;
/// its kernel contains the cycle counterexample ideal (truncation max_len).
ThetaIsoReport theta_iso_check(const Quiver& q, std::size_t max_len, std::size_t codim_bound);

}  // namespace quiveralg
