#pragma once

#include "quiveralg/path_coalgebra.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace quiveralg {

/// Path product in K[Γ]: concatenation when composable, 0 otherwise.
template <class Scalar>
Element<Scalar> multiply(const Quiver& q, const Element<Scalar>& a, const Element<Scalar>& b) {
    (void)q;
    Element<Scalar> out;
    for (const auto& [p, cp] : a) {
        for (const auto& [r, cr] : b) {
            if (p.target == r.source) out.add(concat(p, r), cp * cr);
        }
    }
    return out;
}

/// Product in K[Γ]⊗K[Γ], factorwise.
template <class Scalar>
Tensor<Scalar> multiply(const Quiver& q, const Tensor<Scalar>& a, const Tensor<Scalar>& b) {
    (void)q;
    Tensor<Scalar> out;
    for (const auto& [p, cp] : a) {
        for (const auto& [r, cr] : b) {
            if (p.first.target == r.first.source && p.second.target == r.second.source) {
                out.add({concat(p.first, r.first), concat(p.second, r.second)}, cp * cr);
            }
        }
    }
    return out;
}

/// Sum of the vertices touched by the supports; a two-sided unit for them.
template <class Scalar>
Element<Scalar> local_unit(const std::vector<Element<Scalar>>& elements) {
    std::set<int> vertices;
    for (const auto& e : elements) {
        for (const auto& [p, c] : e) {
            vertices.insert(p.source);
            vertices.insert(p.target);
        }
    }
    Element<Scalar> out;
    for (int v : vertices) out.add(Path::vertex(v), Scalar(1));
    return out;
}

/// Ideal spanned by all paths containing some generator as a subpath.
struct MonomialIdeal {
    std::vector<Path> generators;
    std::set<Path> paths;  // members of length <= truncation
    std::size_t truncation = 0;
    bool exhaustive = false;

    /// Exact membership test, valid at any length.
    bool contains(const Quiver& q, const Path& p) const;
};

MonomialIdeal monomial_closure(const Quiver& q, const std::vector<Path>& generators,
                               std::size_t max_len);

enum class SearchVerdict { Yes, YesExhaustive, NoUpToBound, NoExhaustive };
std::string to_string(SearchVerdict v);

struct MonomialSearch {
    SearchVerdict verdict = SearchVerdict::NoUpToBound;
    /// Smallest subpath-closed complement compatible with the ideal.
    std::set<Path> complement;
    std::size_t horizon = 0;  // path length up to which membership was examined
    std::string explanation;

    bool found() const {
        return verdict == SearchVerdict::Yes || verdict == SearchVerdict::YesExhaustive;
    }
};

/// Looks for a monomial ideal J of codimension <= codim_bound inside the ideal
/// given by `in_ideal` (a membership test on paths). J ⊆ I forces every path
/// outside I into the complement of J, and complements are subpath-closed, so
/// the subpath closure of the paths outside I is the least possible complement.
/// Paths are examined up to max(max_len, codim_bound): a complement with at
/// most B paths cannot hold a path of length >= B.
MonomialSearch contains_cofinite_monomial_ideal(const Quiver& q,
                                                const std::function<bool(const Path&)>& in_ideal,
                                                std::size_t max_len, std::size_t codim_bound);
/// Same, for a subspace of K[Γ] given by a basis (membership of single paths).
MonomialSearch contains_cofinite_monomial_ideal(const Quiver& q,
                                                const Subspace<Path, Rational>& ideal,
                                                std::size_t max_len, std::size_t codim_bound);

/// Outcome of verifying one family of product identities.
struct IdentityCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
};

/// The cofinite ideal I = span(S) + span(P \ X) built on a simple cycle
/// (kind "cycle") or on a pair of vertices joined by many arrows ("multiarrow").
struct CounterexampleIdeal {
    std::string kind;
    Quiver quiver;
    std::vector<int> cycle;  // arrow indices of the cycle, in order
    std::size_t truncation = 0;
    std::vector<Element<Rational>> differences;  // the set S, within truncation
    std::vector<Path> x_paths;                   // X within truncation
    std::vector<Path> other_paths;               // P \ X within truncation
    std::size_t codimension = 0;                 // rank computation at truncation
    std::vector<IdentityCheck> identities;
    bool ideal_property = false;  // products of spanning elements by paths stay in I

    bool contains(const Element<Rational>& e) const;
    bool contains_path(const Path& p) const;
    bool identities_hold() const;
};

/// Requires a cycle; uses the first simple cycle found.
CounterexampleIdeal build_cycle_counterexample(const Quiver& q, std::size_t max_len);
/// MultiArrowPair truncated to arrows x_0..x_N.
CounterexampleIdeal build_multiarrow_counterexample(const QuiverFamily& family, int n);

struct BialgebraReport {
    bool criterion = false;  // no paths of length >= 2 and no multiple edges
    bool multiplicative = false;
    std::size_t pairs_checked = 0;
    std::optional<PathPair> witness;  // first pair with Δ(pq) != Δ(p)Δ(q)
    std::optional<PathPair> criterion_witness;  // a length-2 path or a parallel pair
    bool agree() const { return criterion == multiplicative; }
};

bool bialgebra_criterion(const Quiver& q, std::optional<PathPair>* witness = nullptr);
/// Checks Δ(pq) = Δ(p)Δ(q) over all pairs of paths of length <= max_len.
BialgebraReport bialgebra_check(const Quiver& q, std::size_t max_len);

}  // namespace quiveralg
