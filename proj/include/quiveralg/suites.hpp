#pragma once

#include "quiveralg/product_coreflexive.hpp"
#include "quiveralg/representations.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace quiveralg {

struct CheckItem {
    std::string name;
    int criterion = 0;  // acceptance criterion the item belongs to
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckItem> items;
    bool passed() const;
};

const std::vector<std::string>& suite_names();
/// Deterministic given (name, seed). Throws InputError for unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

struct NamedQuiver {
    std::string name;
    Quiver quiver;
};
struct NamedPoset {
    std::string name;
    Poset poset;
};
/// Small finite quivers used throughout the checks (acyclic and cyclic).
std::vector<NamedQuiver> corpus_quivers();
/// Finite posets with at most 8 elements.
std::vector<NamedPoset> corpus_posets();

/// The algebra on the basis b'_i = Σ_k P(k, i) b_k. P must be invertible.
StructuredAlgebra change_basis(const StructuredAlgebra& a, const MatrixQ& p);
/// The same module written against the new basis: L'_i = Σ_k P(k, i) L_k.
AlgebraModule change_basis(const AlgebraModule& m, const MatrixQ& p);

}  // namespace quiveralg
