#pragma once

#include "quiveralg/finite_dual.hpp"

#include <random>
#include <string>
#include <vector>

namespace quiveralg {

/// ((V_u), (f_a)): f_a is a dim(V_t) x dim(V_s) matrix acting on columns.
struct Representation {
    Quiver quiver;
    std::vector<int> dims;
    std::vector<MatrixQ> maps;

    /// Throws InputError on shape mismatches.
    void validate() const;
    int total_dim() const;
    /// f_p = f_{a_n} ... f_{a_1}; identity for a vertex.
    MatrixQ path_map(const Path& p) const;
};

/// Unital right K[Γ]-module. Elements are row vectors; x·g = x * action.
/// A path acts by the product of its arrow matrices, left to right.
struct ModuleData {
    Quiver quiver;
    int dim = 0;
    std::vector<MatrixQ> vertex_action;
    std::vector<MatrixQ> arrow_action;

    /// Checks the defining relations of K[Γ] (orthogonal vertex idempotents,
    /// s(a) a t(a) = a, non-composable products zero) and unitality.
    /// Throws InputError naming the first failure.
    void validate() const;
    MatrixQ action(const Path& p) const;
};

Representation rep_from_module(const ModuleData& m);
ModuleData module_from_rep(const Representation& r);

/// Module → representation → module; true iff the result is isomorphic to
/// the input through the basis given by the per-vertex images.
bool module_round_trip(const ModuleData& m);

struct NilpotenceWitness {
    bool nilpotent = false;
    /// Nilpotent: first L with U_L = 0. Otherwise: first L whose state had
    /// already occurred, and the period of the repetition.
    std::size_t length = 0;
    std::size_t period = 0;
    std::optional<Path> nonvanishing_path;  // f_p != 0 with len(p) = length
    std::string explanation;
};
NilpotenceWitness is_locally_nilpotent(const Representation& r);

/// Searches for a cofinite monomial ideal annihilating x (x given per vertex,
/// concatenated in vertex order).
MonomialSearch annihilator_monomial_check(const Representation& r, const VectorQ& x,
                                          std::size_t max_len, std::size_t codim_bound);

/// The quotient of K[C_n] by p - s(p) for the length-n paths p, on the basis
/// of paths of length < n. Confluence of the reduction is verified on all
/// basis products; throws std::logic_error if it fails.
ModuleData cycle_quotient_module(int n);
/// Single paths lying in the ideal of the cycle quotient: searches for a
/// cofinite monomial ideal inside it.
MonomialSearch cycle_quotient_monomial_check(int n, std::size_t max_len, std::size_t codim_bound);

/// Left module over a StructuredAlgebra: action[i] = L_{b_i} on columns.
struct AlgebraModule {
    std::size_t dim = 0;
    std::vector<MatrixQ> action;
};
/// Throws InputError when the action is not unital or not multiplicative.
void validate_module(const StructuredAlgebra& a, const AlgebraModule& m);

/// Right comodule over A⁰ = A*: ρ(m_j) = Σ_i m_i ⊗ coeff[i][j], each
/// coefficient given in the dual basis.
struct Comodule {
    std::size_t dim = 0;
    std::vector<std::vector<VectorQ>> coeff;
};
Comodule comodule_from_module(const StructuredAlgebra& a, const AlgebraModule& m);
/// a·m = Σ m_1(a) m_0.
AlgebraModule module_from_comodule(const StructuredAlgebra& a, const Comodule& c);

struct ComoduleCheck {
    bool coassociative = false;
    bool counital = false;
};
ComoduleCheck check_comodule(const DualCoalgebra& d, const Comodule& c);

/// A right K[Γ]-module seen as a left module over the opposite of
/// path_algebra(q): L_p = R_p^T.
AlgebraModule left_module_over_opposite(const ModuleData& m, const StructuredAlgebra& path_alg);

/// A K-linear map T (column convention) between left modules is a morphism
/// iff T L_b = L'_b T for every basis element; for comodules iff
/// (T ⊗ id)ρ = ρ' T. Returns both verdicts.
std::pair<bool, bool> morphism_naturality(const StructuredAlgebra& a, const AlgebraModule& m,
                                          const AlgebraModule& n, const MatrixQ& t);

Representation random_representation(std::mt19937_64& rng, const Quiver& q, int max_dim);

/// Text format: `rep`, `dim <vertex> <n>`, `map <arrow> <row> ; <row> ...`.
Representation parse_rep_text(const Quiver& q, const std::string& text);
std::string format_rep_text(const Representation& r);

}  // namespace quiveralg
