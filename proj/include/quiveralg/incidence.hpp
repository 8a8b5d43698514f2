#pragma once

#include "quiveralg/finite_dual.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace quiveralg {

/// Finite partially ordered set; elements addressed by index.
class Poset {
public:
    /// Builds the order generated by `covers` (pairs a < b); throws InputError
    /// when the generated relation is not antisymmetric.
    Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& covers);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int x) const { return labels_.at(x); }
    bool leq(int x, int y) const { return leq_[x][y]; }
    bool less(int x, int y) const { return x != y && leq_[x][y]; }
    bool covers(int x, int y) const;  // x ⋖ y
    std::optional<int> find(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

using Interval = std::pair<int, int>;
template <class Scalar = Rational>
using IncidenceElement = SparseVector<Interval, Scalar>;
using IntervalPair = std::pair<Interval, Interval>;

/// All intervals [x, y], x <= y, in (x, y) order.
std::vector<Interval> intervals(const Poset& p);

SparseVector<IntervalPair, Rational> incidence_comultiply(const Poset& p,
                                                          const IncidenceElement<>& c);
Rational incidence_counit(const IncidenceElement<>& c);
/// Δ on a single basis interval.
SparseVector<IntervalPair, Rational> incidence_delta(const Poset& p, const Interval& i);

/// One vertex per element, one arrow per cover relation.
Quiver hasse_quiver(const Poset& p);

/// φ(e_{x,y}) = sum of the paths from x to y in the Hasse quiver.
Element<Rational> phi_embed(const Poset& p, const Quiver& hasse, const IncidenceElement<>& c);

/// Convolution of finitely supported interval functions (elements of FIA(X)).
IncidenceElement<> incidence_convolve(const Poset& p, const IncidenceElement<>& f,
                                      const IncidenceElement<>& g);
/// δ, the identity of IA(X) for finite X.
IncidenceElement<> incidence_identity(const Poset& p);

/// FIA(X) on the basis E_{x,y} (intervals order), idempotents E_{x,x}.
StructuredAlgebra fia_algebra(const Poset& p);

struct PhiEmbeddingReport {
    bool phi_injective = false;
    bool phi_coalgebra_morphism = false;
    bool phi_surjective = false;
    bool unique_paths = false;
    bool agree() const { return phi_surjective == unique_paths; }
};
PhiEmbeddingReport phi_embedding_check(const Poset& p);

struct ThetaIncidenceReport {
    bool isomorphism = false;
    bool coalgebra_morphism = false;
    std::size_t dim = 0;       // number of intervals
    std::size_t dual_dim = 0;  // dim FIA(X)⁰
    std::size_t rank = 0;
};
ThetaIncidenceReport theta_incidence_iso_check(const Poset& p);

enum class PosetFamily { NaturalChain, NaturalAntichain };
PosetFamily parse_poset_family(const std::string& name);

struct SemiperfectReport {
    bool semiperfect = false;
    std::size_t certificates = 0;
    std::size_t certificates_verified = 0;
    std::string explanation;
};
/// Finite X: checks c*E_{x,y} = Σ_j c*(e_{u_j,x}) E_{u_j,y} (u_j <= x) for
/// every E_{x,y} against every dual basis element c* = E_{p,q}.
SemiperfectReport incidence_semiperfect_check(const Poset& p);
SemiperfectReport incidence_semiperfect_check(PosetFamily family);

/// Text format: `poset`, `element <label>`, `cover <a> <b>`.
Poset parse_poset_text(const std::string& text);
std::string format_poset_text(const Poset& p);

Poset chain_poset(int n);
Poset antichain_poset(int n);
Poset diamond_poset();
Poset boolean_lattice(int k);
/// Every poset on n elements, one per isomorphism class.
std::vector<Poset> posets_up_to_iso(int n);
Poset random_poset(std::mt19937_64& rng, int n, double density);

}  // namespace quiveralg
