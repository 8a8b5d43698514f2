#pragma once

// Exact linear algebra over Rational or Zp.
//
// Two representations live here:
//  * SparseVector<Label, Scalar>: finitely supported combinations over an
//    ordered label set (paths, intervals, path pairs). Subspaces spanned by
//    them are kept in reduced row-echelon form, pivoting on the smallest label.
//  * Matrix<Scalar>: dense Eigen matrices for representation maps, action
//    matrices and structure constants.

#include "quiveralg/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace quiveralg {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

template <class Label, class Scalar = Rational>
class SparseVector {
public:
    using label_type = Label;
    using scalar_type = Scalar;
    using Map = std::map<Label, Scalar>;

    SparseVector() = default;
    SparseVector(const Label& label, const Scalar& coeff = Scalar(1)) { add(label, coeff); }

    static SparseVector basis(const Label& label) { return SparseVector(label); }

    void add(const Label& label, const Scalar& coeff) {
        if (is_zero(coeff)) return;
        auto [it, inserted] = entries_.try_emplace(label, coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero(it->second)) entries_.erase(it);
        }
    }

    void add_scaled(const SparseVector& other, const Scalar& factor) {
        if (is_zero(factor)) return;
        for (const auto& [label, coeff] : other.entries_) add(label, coeff * factor);
    }

    Scalar coefficient(const Label& label) const {
        auto it = entries_.find(label);
        return it == entries_.end() ? Scalar(0) : it->second;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const Map& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    const Label& leading_label() const { return entries_.begin()->first; }

    std::vector<Label> support() const {
        std::vector<Label> out;
        out.reserve(entries_.size());
        for (const auto& kv : entries_) out.push_back(kv.first);
        return out;
    }

    SparseVector& operator+=(const SparseVector& o) {
        add_scaled(o, Scalar(1));
        return *this;
    }
    SparseVector& operator-=(const SparseVector& o) {
        add_scaled(o, Scalar(-1));
        return *this;
    }
    SparseVector& operator*=(const Scalar& s) {
        if (is_zero(s)) {
            entries_.clear();
        } else {
            for (auto& kv : entries_) kv.second *= s;
        }
        return *this;
    }

    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator-(SparseVector a) { return a *= Scalar(-1); }
    friend SparseVector operator*(const Scalar& s, SparseVector a) { return a *= s; }
    friend SparseVector operator*(SparseVector a, const Scalar& s) { return a *= s; }
    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }
    friend bool operator<(const SparseVector& a, const SparseVector& b) {
        return a.entries_ < b.entries_;
    }

    /// Relabels every entry through `f`, summing collisions.
    template <class F>
    auto map_labels(F f) const {
        using Out = std::decay_t<decltype(f(std::declval<const Label&>()))>;
        SparseVector<Out, Scalar> out;
        for (const auto& [label, coeff] : entries_) out.add(f(label), coeff);
        return out;
    }

private:
    Map entries_;
};

/// Incremental reduced row-echelon basis. Each basis vector remembers the
/// combination of inserted vectors that produced it, so the same structure
/// answers rank, span membership with coefficients, and kernel questions.
template <class Label, class Scalar = Rational>
class EchelonBasis {
public:
    using Vec = SparseVector<Label, Scalar>;
    using Combo = std::vector<Scalar>;

    /// Inserts `v` as input number `inserted()`. Returns the kernel relation
    /// among inputs when `v` is dependent on the previous inputs.
    std::optional<Combo> insert(const Vec& v) {
        const std::size_t id = count_++;
        for (auto& row : rows_) row.combo.resize(count_, Scalar(0));
        Combo combo(count_, Scalar(0));
        combo[id] = Scalar(1);
        Vec r = v;
        reduce(r, combo);
        if (r.empty()) return combo;
        Label pivot = r.leading_label();
        Scalar inv = Scalar(1) / r.coefficient(pivot);
        r *= inv;
        for (auto& c : combo) c *= inv;
        for (auto& row : rows_) {
            Scalar f = row.vec.coefficient(pivot);
            if (is_zero(f)) continue;
            row.vec.add_scaled(r, -f);
            for (std::size_t i = 0; i < count_; ++i) row.combo[i] -= f * combo[i];
        }
        auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const Row& row, const Label& l) { return row.pivot < l; });
        rows_.insert(pos, Row{pivot, std::move(r), std::move(combo)});
        return std::nullopt;
    }

    /// Reduces `v` modulo the span; zero result means membership.
    Vec remainder(Vec v) const {
        reduce_untracked(v);
        return v;
    }

    /// Coefficients over the inserted vectors expressing `v`, if it lies in
    /// the span. Free directions are set to zero.
    std::optional<Combo> express(const Vec& v) const {
        Combo combo(count_, Scalar(0));
        Vec r = v;
        for (const auto& row : rows_) {
            Scalar f = r.coefficient(row.pivot);
            if (is_zero(f)) continue;
            r.add_scaled(row.vec, -f);
            for (std::size_t i = 0; i < count_; ++i) combo[i] += f * row.combo[i];
        }
        if (!r.empty()) return std::nullopt;
        return combo;
    }

    bool contains(const Vec& v) const { return remainder(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return count_; }

    std::vector<Vec> basis() const {
        std::vector<Vec> out;
        out.reserve(rows_.size());
        for (const auto& row : rows_) out.push_back(row.vec);
        return out;
    }
    std::vector<Label> pivots() const {
        std::vector<Label> out;
        for (const auto& row : rows_) out.push_back(row.pivot);
        return out;
    }

private:
    struct Row {
        Label pivot;
        Vec vec;
        Combo combo;
    };

    void reduce(Vec& r, Combo& combo) const {
        for (const auto& row : rows_) {
            Scalar f = r.coefficient(row.pivot);
            if (is_zero(f)) continue;
            r.add_scaled(row.vec, -f);
            for (std::size_t i = 0; i < count_; ++i) combo[i] -= f * row.combo[i];
        }
    }
    void reduce_untracked(Vec& r) const {
        for (const auto& row : rows_) {
            Scalar f = r.coefficient(row.pivot);
            if (!is_zero(f)) r.add_scaled(row.vec, -f);
        }
    }

    std::vector<Row> rows_;
    std::size_t count_ = 0;
};

/// A finite-dimensional subspace in canonical reduced row-echelon form.
/// Two subspaces are equal iff their bases are equal.
template <class Label, class Scalar = Rational>
class Subspace {
public:
    using Vec = SparseVector<Label, Scalar>;

    Subspace() = default;
    explicit Subspace(const std::vector<Vec>& generators) {
        for (const auto& g : generators) echelon_.insert(g);
        basis_ = echelon_.basis();
    }

    static Subspace from_labels(const std::vector<Label>& labels) {
        std::vector<Vec> gens;
        for (const auto& l : labels) gens.emplace_back(l);
        return Subspace(gens);
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    bool contains(const Vec& v) const { return echelon_.contains(v); }
    Vec reduce(const Vec& v) const { return echelon_.remainder(v); }
    std::vector<Label> pivots() const { return echelon_.pivots(); }

    bool contains(const Subspace& other) const {
        return std::all_of(other.basis_.begin(), other.basis_.end(),
                           [&](const Vec& v) { return contains(v); });
    }

    Subspace operator+(const Subspace& other) const {
        std::vector<Vec> gens = basis_;
        gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
        return Subspace(gens);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    EchelonBasis<Label, Scalar> echelon_;
    std::vector<Vec> basis_;
};

/// Intersection via the kernel of [A | -B].
template <class Label, class Scalar>
Subspace<Label, Scalar> intersect(const Subspace<Label, Scalar>& a,
                                  const Subspace<Label, Scalar>& b) {
    EchelonBasis<Label, Scalar> e;
    const auto& ab = a.basis();
    const auto& bb = b.basis();
    std::vector<SparseVector<Label, Scalar>> common;
    for (const auto& v : ab) e.insert(v);
    for (const auto& v : bb) {
        if (auto rel = e.insert(v)) {
            SparseVector<Label, Scalar> w;
            for (std::size_t i = 0; i < ab.size(); ++i) w.add_scaled(ab[i], (*rel)[i]);
            common.push_back(w);
        }
    }
    return Subspace<Label, Scalar>(common);
}

/// Kernel of the linear map sending basis element `domain[i]` to `images[i]`,
/// returned in canonical form over the domain labels.
template <class Label, class Image, class Scalar>
Subspace<Label, Scalar> kernel_of_map(const std::vector<Label>& domain,
                                      const std::vector<SparseVector<Image, Scalar>>& images) {
    EchelonBasis<Image, Scalar> e;
    std::vector<SparseVector<Label, Scalar>> kernel;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (auto rel = e.insert(images[i])) {
            SparseVector<Label, Scalar> k;
            for (std::size_t j = 0; j < rel->size(); ++j) k.add(domain[j], (*rel)[j]);
            kernel.push_back(k);
        }
    }
    return Subspace<Label, Scalar>(kernel);
}

/// Coefficients c with v = sum c_i g_i, or nullopt when v is outside the span.
template <class Label, class Scalar>
std::optional<std::vector<Scalar>> solve_membership(
    const SparseVector<Label, Scalar>& v, const std::vector<SparseVector<Label, Scalar>>& generators) {
    EchelonBasis<Label, Scalar> e;
    for (const auto& g : generators) e.insert(g);
    return e.express(v);
}

template <class Label, class Scalar>
std::size_t rank_of(const std::vector<SparseVector<Label, Scalar>>& generators) {
    EchelonBasis<Label, Scalar> e;
    for (const auto& g : generators) e.insert(g);
    return e.rank();
}

/// |ambient| - rank(generators). Every generator label must be in `ambient`.
template <class Label, class Scalar>
std::size_t codimension_of_span(const std::vector<SparseVector<Label, Scalar>>& generators,
                                const std::set<Label>& ambient) {
    for (const auto& g : generators) {
        for (const auto& [label, coeff] : g) {
            if (!ambient.count(label)) throw InputError("generator label outside the ambient basis");
        }
    }
    return ambient.size() - rank_of(generators);
}

// ---------------------------------------------------------------------------
// Dense matrices

template <class Scalar>
struct EchelonForm {
    Matrix<Scalar> reduced;
    std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form with leftmost-column pivoting.
template <class Scalar>
EchelonForm<Scalar> rref(Matrix<Scalar> m) {
    EchelonForm<Scalar> out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        m.row(p).swap(m.row(row));
        Scalar inv = Scalar(1) / m(row, col);
        m.row(row) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            Scalar f = m(r, col);
            m.row(r) -= f * m.row(row);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class Scalar>
std::size_t rank(const Matrix<Scalar>& m) {
    return rref(m).pivots.size();
}

/// Basis of {x : m x = 0} as columns.
template <class Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) free.push_back(c);
    }
    Matrix<Scalar> out = Matrix<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        out(free[k], k) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            out(e.pivots[r], k) = -e.reduced(r, free[k]);
        }
    }
    return out;
}

/// Canonical basis (rows) of the row space.
template <class Scalar>
Matrix<Scalar> row_space(const Matrix<Scalar>& m) {
    auto e = rref(m);
    return e.reduced.topRows(static_cast<Eigen::Index>(e.pivots.size()));
}

/// Some x with a x = b, if one exists (free variables set to zero).
template <class Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
    Matrix<Scalar> aug(a.rows(), a.cols() + 1);
    aug << a, b;
    auto e = rref(aug);
    Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x(e.pivots[r]) = e.reduced(r, a.cols());
    }
    return x;
}

template <class Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!is_zero(m(i, j))) return false;
        }
    }
    return true;
}

/// Result of splitting a 2x2 matrix into two outer products:
/// M = columns.col(0) * rows.row(0) + columns.col(1) * rows.row(1).
template <class Scalar>
struct Rank1Split {
    Matrix<Scalar> first;
    Matrix<Scalar> second;
    Matrix<Scalar> columns;  // 2x2, column i is the left factor of summand i
    Matrix<Scalar> rows;     // 2x2, row i is the right factor of summand i
};

/// Fixed rule: rank(M) <= 1 gives (M, 0) with M = u v^T, u the first nonzero
/// column; otherwise M is split by columns, M = M e1 e1^T + M e2 e2^T.
template <class Scalar>
Rank1Split<Scalar> rank1_decompose_2x2(const Matrix<Scalar>& m) {
    if (m.rows() != 2 || m.cols() != 2) throw InputError("rank1_decompose_2x2 needs a 2x2 matrix");
    Rank1Split<Scalar> out;
    out.columns = Matrix<Scalar>::Zero(2, 2);
    out.rows = Matrix<Scalar>::Zero(2, 2);
    const Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (is_zero(det)) {
        Eigen::Index col = is_zero(m(0, 0)) && is_zero(m(1, 0)) ? 1 : 0;
        Eigen::Index lead = is_zero(m(0, col)) ? 1 : 0;
        out.columns.col(0) = m.col(col);
        if (!is_zero(m(lead, col))) {
            out.rows.row(0) = m.row(lead) / m(lead, col);
        }
    } else {
        out.columns = m;
        out.rows = Matrix<Scalar>::Identity(2, 2);
    }
    out.first = out.columns.col(0) * out.rows.row(0);
    out.second = out.columns.col(1) * out.rows.row(1);
    return out;
}

}  // namespace quiveralg
