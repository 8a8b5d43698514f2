#pragma once

#include "quiveralg/linalg.hpp"
#include "quiveralg/quiver.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace quiveralg {

using PathPair = std::pair<Path, Path>;

/// Elements of KΓ (and of K[Γ]: same carrier, different operations).
template <class Scalar = Rational>
using Element = SparseVector<Path, Scalar>;
template <class Scalar = Rational>
using Tensor = SparseVector<PathPair, Scalar>;

/// All splittings p = q r, from (s(p), p) to (p, t(p)).
std::vector<PathPair> deconcatenations(const Quiver& q, const Path& p);

template <class Scalar>
Tensor<Scalar> comultiply(const Quiver& q, const Element<Scalar>& c) {
    Tensor<Scalar> out;
    for (const auto& [p, coeff] : c) {
        for (auto& split : deconcatenations(q, p)) out.add(split, coeff);
    }
    return out;
}

template <class Scalar>
Scalar counit(const Element<Scalar>& c) {
    Scalar s(0);
    for (const auto& [p, coeff] : c) {
        if (p.is_vertex()) s += coeff;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Generic coalgebra-axiom checks. `delta` maps a basis label to a
// SparseVector over label pairs, `eps` maps a label to a scalar.

template <class Label, class Scalar, class Delta>
SparseVector<std::pair<Label, Label>, Scalar> apply_delta(const SparseVector<Label, Scalar>& c,
                                                          Delta delta) {
    SparseVector<std::pair<Label, Label>, Scalar> out;
    for (const auto& [l, coeff] : c) out.add_scaled(delta(l), coeff);
    return out;
}

template <class Label, class Scalar, class Delta>
bool is_coassociative_on(const SparseVector<Label, Scalar>& c, Delta delta) {
    using Triple = std::tuple<Label, Label, Label>;
    SparseVector<Triple, Scalar> left, right;
    for (const auto& [pair, coeff] : apply_delta(c, delta)) {
        for (const auto& [inner, k] : delta(pair.first)) {
            left.add(Triple{inner.first, inner.second, pair.second}, coeff * k);
        }
        for (const auto& [inner, k] : delta(pair.second)) {
            right.add(Triple{pair.first, inner.first, inner.second}, coeff * k);
        }
    }
    return left == right;
}

template <class Label, class Scalar, class Delta, class Eps>
bool is_counital_on(const SparseVector<Label, Scalar>& c, Delta delta, Eps eps) {
    SparseVector<Label, Scalar> left, right;
    for (const auto& [pair, coeff] : apply_delta(c, delta)) {
        left.add(pair.second, coeff * eps(pair.first));
        right.add(pair.first, coeff * eps(pair.second));
    }
    return left == c && right == c;
}

/// Smallest subcoalgebra containing `elements`: repeatedly adds the left and
/// right tensor components of Δ, read off against the path basis.
template <class Scalar>
Subspace<Path, Scalar> subcoalgebra_closure(const Quiver& q,
                                            const std::vector<Element<Scalar>>& elements) {
    EchelonBasis<Path, Scalar> basis;
    std::vector<Element<Scalar>> work = elements;
    while (!work.empty()) {
        Element<Scalar> c = std::move(work.back());
        work.pop_back();
        if (basis.contains(c)) continue;
        basis.insert(c);
        std::map<Path, Element<Scalar>> left, right;
        for (const auto& [pair, coeff] : comultiply(q, c)) {
            left[pair.second].add(pair.first, coeff);
            right[pair.first].add(pair.second, coeff);
        }
        for (auto& kv : left) work.push_back(std::move(kv.second));
        for (auto& kv : right) work.push_back(std::move(kv.second));
    }
    return Subspace<Path, Scalar>(basis.basis());
}

template <class Scalar>
bool is_subcoalgebra(const Quiver& q, const Subspace<Path, Scalar>& d) {
    for (const auto& b : d.basis()) {
        std::map<Path, Element<Scalar>> left, right;
        for (const auto& [pair, coeff] : comultiply(q, b)) {
            left[pair.second].add(pair.first, coeff);
            right[pair.first].add(pair.second, coeff);
        }
        for (const auto& kv : left) {
            if (!d.contains(kv.second)) return false;
        }
        for (const auto& kv : right) {
            if (!d.contains(kv.second)) return false;
        }
    }
    return true;
}

template <class Scalar>
struct WedgeResult {
    Subspace<Path, Scalar> space;
    bool exact = false;  // false: computed inside a truncation of a cyclic quiver
    std::size_t truncation = 0;
};

/// X ∧ Y = Δ⁻¹(X⊗C + C⊗Y) inside the span of paths of length <= max_len.
/// Reduction modulo an echelon basis is a linear projection with kernel X, so
/// c lies in the wedge iff (π_X ⊗ π_Y)Δ(c) = 0.
template <class Scalar>
WedgeResult<Scalar> wedge(const Quiver& q, const Subspace<Path, Scalar>& x,
                          const Subspace<Path, Scalar>& y, std::size_t max_len) {
    auto paths = enumerate_paths(q, max_len);
    std::vector<Tensor<Scalar>> images;
    for (const auto& p : paths.paths) {
        Tensor<Scalar> img;
        for (const auto& [a, b] : deconcatenations(q, p)) {
            auto ra = x.reduce(Element<Scalar>(a));
            auto rb = y.reduce(Element<Scalar>(b));
            for (const auto& [la, ca] : ra) {
                for (const auto& [lb, cb] : rb) img.add({la, lb}, ca * cb);
            }
        }
        images.push_back(std::move(img));
    }
    return {kernel_of_map(paths.paths, images), paths.exhaustive, max_len};
}

enum class Side { Left, Right };

/// Right: paths starting at v. Left: paths ending at v.
std::vector<Path> hull_span(const Quiver& q, int v, Side side, std::size_t max_len);

/// The vertices, as length-0 paths.
std::vector<Path> grouplike_coradical(const Quiver& q);

/// Parses `3*[x.y] - 1/2*[a]`; `[a]` is a vertex, `[x.y]` a path of arrows.
Element<Rational> parse_element(const Quiver& q, const std::string& text);

template <class Scalar>
std::string scalar_string(const Scalar& s) {
    return to_string(s);
}

/// Inverse of parse_element; "0" for the zero element.
template <class Scalar>
std::string format_combination(const SparseVector<Path, Scalar>& e, const Quiver& q) {
    if (e.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, coeff] : e) {
        std::string c = scalar_string(coeff);
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (c != "1") out += c + "*";
        out += path_to_string(q, p);
    }
    return out;
}

template <class Scalar>
std::string format_tensor(const Tensor<Scalar>& t, const Quiver& left, const Quiver& right) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [pair, coeff] : t) {
        std::string c = scalar_string(coeff);
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (c != "1") out += c + "*";
        out += path_to_string(left, pair.first) + "⊗" + path_to_string(right, pair.second);
    }
    return out;
}

}  // namespace quiveralg
