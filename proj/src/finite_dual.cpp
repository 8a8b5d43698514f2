#include "quiveralg/finite_dual.hpp"

#include <map>
#include <sstream>

namespace quiveralg {

namespace {

VectorQ unit_vector(std::size_t n, std::size_t i) {
    VectorQ v = VectorQ::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(i)) = 1;
    return v;
}

SparseVector<int, Rational> to_sparse(const VectorQ& v) {
    SparseVector<int, Rational> s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s.add(static_cast<int>(i), v(i));
    return s;
}

VectorQ to_dense(const SparseVector<int, Rational>& s, std::size_t n) {
    VectorQ v = VectorQ::Zero(static_cast<Eigen::Index>(n));
    for (const auto& [i, c] : s) v(i) = c;
    return v;
}

}  // namespace

StructuredAlgebra::StructuredAlgebra(std::vector<std::string> labels,
                                     std::vector<std::vector<VectorQ>> table,
                                     std::vector<VectorQ> idempotents)
    : labels_(std::move(labels)), table_(std::move(table)), idempotents_(std::move(idempotents)) {
    const std::size_t n = labels_.size();
    const auto ni = static_cast<Eigen::Index>(n);
    if (table_.size() != n) throw InputError("structure table has the wrong number of rows");
    for (const auto& row : table_) {
        if (row.size() != n) throw InputError("structure table has the wrong number of columns");
        for (const auto& v : row) {
            if (v.size() != ni) throw InputError("structure constant of the wrong length");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (multiply(table_[i][j], basis(k)) != multiply(basis(i), table_[j][k])) {
                    throw InputError("multiplication is not associative on (" + labels_[i] + ", " +
                                     labels_[j] + ", " + labels_[k] + ")");
                }
            }
        }
    }
    VectorQ one = VectorQ::Zero(ni);
    for (std::size_t a = 0; a < idempotents_.size(); ++a) {
        if (idempotents_[a].size() != ni) throw InputError("idempotent of the wrong length");
        if (is_zero_matrix<Rational>(idempotents_[a])) throw InputError("zero idempotent");
        for (std::size_t b = 0; b < idempotents_.size(); ++b) {
            VectorQ expect = a == b ? idempotents_[a] : VectorQ::Zero(ni);
            if (multiply(idempotents_[a], idempotents_[b]) != expect) {
                throw InputError("idempotents are not pairwise orthogonal idempotents");
            }
        }
        one += idempotents_[a];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (multiply(one, basis(i)) != basis(i) || multiply(basis(i), one) != basis(i)) {
            throw InputError("idempotents do not decompose the algebra (" + labels_[i] + ")");
        }
    }
}

VectorQ StructuredAlgebra::basis(std::size_t i) const { return unit_vector(dim(), i); }

VectorQ StructuredAlgebra::multiply(const VectorQ& a, const VectorQ& b) const {
    VectorQ out = VectorQ::Zero(static_cast<Eigen::Index>(dim()));
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) == 0) continue;
        for (Eigen::Index j = 0; j < b.size(); ++j) {
            if (b(j) == 0) continue;
            out += (a(i) * b(j)) * table_[i][j];
        }
    }
    return out;
}

MatrixQ StructuredAlgebra::right_multiplication(const VectorQ& a) const {
    const auto n = static_cast<Eigen::Index>(dim());
    MatrixQ m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m.col(i) = multiply(basis(i), a);
    return m;
}

MatrixQ StructuredAlgebra::left_multiplication(const VectorQ& a) const {
    const auto n = static_cast<Eigen::Index>(dim());
    MatrixQ m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m.col(i) = multiply(a, basis(i));
    return m;
}

std::optional<std::size_t> StructuredAlgebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

StructuredAlgebra StructuredAlgebra::opposite() const {
    std::vector<std::vector<VectorQ>> t(dim(), std::vector<VectorQ>(dim()));
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) t[i][j] = table_[j][i];
    }
    return StructuredAlgebra(labels_, t, idempotents_);
}

StructuredAlgebra path_algebra(const Quiver& q) {
    const auto paths = all_paths(q);
    const std::size_t n = paths.size();
    std::map<Path, std::size_t> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        index[paths[i]] = i;
        labels.push_back(path_to_string(q, paths[i]));
    }
    std::vector<std::vector<VectorQ>> table(n, std::vector<VectorQ>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            table[i][j] = VectorQ::Zero(static_cast<Eigen::Index>(n));
            if (paths[i].target == paths[j].source) {
                table[i][j](static_cast<Eigen::Index>(index.at(concat(paths[i], paths[j])))) = 1;
            }
        }
    }
    std::vector<VectorQ> idempotents;
    for (int v = 0; v < q.vertex_count(); ++v) {
        idempotents.push_back(unit_vector(n, index.at(Path::vertex(v))));
    }
    return StructuredAlgebra(labels, table, idempotents);
}

StructuredAlgebra parse_algebra_text(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> index;
    std::vector<std::string> idempotent_labels;
    std::vector<std::tuple<std::size_t, std::size_t, std::string, int>> products;
    auto fail = [&](const std::string& msg) {
        throw InputError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::vector<std::string> w;
        for (std::string s; words >> s;) w.push_back(s);
        if (w.empty()) continue;
        if (!header) {
            if (w.size() != 1 || w[0] != "algebra") fail("expected 'algebra' header");
            header = true;
        } else if (w[0] == "basis") {
            for (std::size_t i = 1; i < w.size(); ++i) {
                if (index.count(w[i])) fail("duplicate basis label '" + w[i] + "'");
                index[w[i]] = labels.size();
                labels.push_back(w[i]);
            }
        } else if (w[0] == "idempotents") {
            idempotent_labels.assign(w.begin() + 1, w.end());
        } else if (w[0] == "mul" && w.size() >= 5 && w[3] == "=") {
            if (!index.count(w[1]) || !index.count(w[2])) fail("unknown basis label in product");
            auto eq = line.find('=');
            products.emplace_back(index[w[1]], index[w[2]], line.substr(eq + 1), lineno);
        } else {
            fail("unrecognised declaration '" + w[0] + "'");
        }
    }
    if (!header) throw InputError("line 1: missing 'algebra' header");
    if (labels.empty()) throw InputError("algebra has an empty basis");
    const std::size_t n = labels.size();
    const auto zero = VectorQ::Zero(static_cast<Eigen::Index>(n));
    std::vector<std::vector<VectorQ>> table(n, std::vector<VectorQ>(n, zero));
    // Products are written as combinations of basis labels in brackets; a
    // one-vertex quiver with a loop per label gives a parser for them.
    Quiver names;
    names.add_vertex("__algebra");
    for (const auto& l : labels) names.add_arrow(l, 0, 0);
    for (const auto& [i, j, rhs, at] : products) {
        lineno = at;
        Element<Rational> e;
        try {
            e = parse_element(names, rhs);
        } catch (const InputError& err) {
            fail(err.what());
        }
        VectorQ v = zero;
        for (const auto& [p, c] : e) {
            if (p.length() != 1) fail("product must be a combination of basis labels");
            v(p.arrows[0]) += c;
        }
        table[i][j] = v;
    }
    std::vector<VectorQ> idempotents;
    for (const auto& l : idempotent_labels) {
        if (!index.count(l)) throw InputError("unknown idempotent '" + l + "'");
        idempotents.push_back(unit_vector(n, index[l]));
    }
    return StructuredAlgebra(labels, table, idempotents);
}

// ---------------------------------------------------------------------------

bool DualCoalgebra::coassociative() const {
    auto d = [this](int i) { return delta[i]; };
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!is_coassociative_on(SparseVector<int, Rational>(static_cast<int>(i)), d)) return false;
    }
    return true;
}

bool DualCoalgebra::counital() const {
    auto d = [this](int i) { return delta[i]; };
    auto e = [this](int i) { return counit[i]; };
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!is_counital_on(SparseVector<int, Rational>(static_cast<int>(i)), d, e)) return false;
    }
    return true;
}

DualCoalgebra dual_coalgebra(const StructuredAlgebra& a) {
    // f(xy) = Σ u(x)v(y): Δ(b_k*) = Σ_{i,j} c_{ij}^k b_i* ⊗ b_j*.
    DualCoalgebra d;
    const std::size_t n = a.dim();
    d.delta.resize(n);
    d.counit.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& c = a.product(i, j);
            for (Eigen::Index k = 0; k < c.size(); ++k) {
                d.delta[k].add({static_cast<int>(i), static_cast<int>(j)}, c(k));
            }
        }
    }
    for (const auto& e : a.idempotents()) {
        for (std::size_t k = 0; k < n; ++k) d.counit[k] += e(static_cast<Eigen::Index>(k));
    }
    return d;
}

ThetaImage theta_embed(const Quiver& q, const Element<Rational>& c) {
    ThetaImage t;
    t.functional = Functional::finite(c);
    for (const auto& [p, coeff] : c) {
        for (const auto& s : subpaths(q, p)) t.complement.insert(s);
    }
    return t;
}

FiniteDualWitness is_in_finite_dual(const StructuredAlgebra& a, const VectorQ& f) {
    const std::size_t n = a.dim();
    if (static_cast<std::size_t>(f.size()) != n) throw InputError("functional of the wrong length");
    std::vector<int> domain;
    std::vector<SparseVector<std::pair<int, int>, Rational>> images;
    for (std::size_t k = 0; k < n; ++k) {
        domain.push_back(static_cast<int>(k));
        SparseVector<std::pair<int, int>, Rational> img;
        for (std::size_t i = 0; i < n; ++i) {
            VectorQ left = a.product(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                img.add({static_cast<int>(i), static_cast<int>(j)},
                        f.dot(a.multiply(left, a.basis(j))));
            }
        }
        images.push_back(std::move(img));
    }
    auto ideal = kernel_of_map(domain, images);
    FiniteDualWitness w;
    w.member = true;
    for (const auto& v : ideal.basis()) w.ideal.push_back(to_dense(v, n));
    w.codimension = n - ideal.dim();
    for (const auto& e : a.idempotents()) {
        if (!ideal.contains(to_sparse(e))) ++w.idempotents_outside;
    }
    w.explanation = "largest ideal in Ker f has codimension " + std::to_string(w.codimension);
    return w;
}

LoopEvalWitness loop_eval_in_finite_dual(const Rational& lambda, std::size_t truncation) {
    LoopEvalWitness w;
    const Quiver q = QuiverFamily(FamilyKind::Loop).truncate(0);
    const Functional f = Functional::eval(q, lambda);
    auto power = [&](std::size_t k) {
        Path p = Path::vertex(0);
        p.arrows.assign(k, 0);
        return p;
    };
    std::set<Path> ambient;
    for (std::size_t k = 0; k <= truncation; ++k) ambient.insert(power(k));
    w.member = true;
    // x^a (x - λv) x^b = x^{a+b+1} - λ x^{a+b}
    for (std::size_t k = 0; k + 1 <= truncation; ++k) {
        Element<Rational> g(power(k + 1));
        g.add(power(k), -lambda);
        ++w.checked;
        if (f(q, g) != 0) w.member = false;
        w.generators.push_back(std::move(g));
    }
    w.codimension = codimension_of_span(w.generators, ambient);
    w.explanation = w.member ? "Ker eval(" + to_string(lambda) + ") contains (x - " +
                                   to_string(lambda) + "v), codimension " +
                                   std::to_string(w.codimension)
                             : "eval does not vanish on the ideal (x - λv)";
    return w;
}

DualCharacterisations finite_dual_characterisations(const StructuredAlgebra& a, const VectorQ& f) {
    DualCharacterisations c;
    const std::size_t n = a.dim();
    auto two_sided = is_in_finite_dual(a, f);
    c.kernel_contains_cofinite_ideal = two_sided.member && two_sided.codimension <= n;

    // (b ⇀ f)(x) = f(x b); the orbit is spanned by b_i ⇀ f.
    MatrixQ orbit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < n; ++x) {
            orbit(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(x)) = f.dot(a.product(x, i));
        }
    }
    c.orbit_dimension = rank(orbit);
    c.left_hit_orbit_finite = c.orbit_dimension <= n;

    // Largest left ideal inside Ker f: {a : f(x a) = 0 for all x}, i.e. the
    // kernel of the transpose of the orbit matrix.
    MatrixQ left = orbit.transpose();
    auto kernel = nullspace(left);
    c.kernel_contains_cofinite_left_ideal = n - static_cast<std::size_t>(kernel.cols()) <= n;
    for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
        VectorQ v = kernel.col(k);
        if (f.dot(v) != 0) c.kernel_contains_cofinite_left_ideal = false;
    }
    return c;
}

MonomialSearch is_in_theta_image(const Quiver& q, const Functional& f, std::size_t max_len,
                                 std::size_t codim_bound) {
    return contains_cofinite_monomial_ideal(
        q, [&](const Path& p) { return f(q, p) == 0; }, max_len, codim_bound);
}

ThetaIsoReport theta_iso_check(const Quiver& q, std::size_t max_len, std::size_t codim_bound) {
    ThetaIsoReport r;
    if (is_acyclic(q)) {
        const auto paths = all_paths(q);
        const auto algebra = path_algebra(q);
        const auto dual = dual_coalgebra(algebra);
        std::map<Path, int> index;
        for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = static_cast<int>(i);
        r.coalgebra_dim = paths.size();
        r.dual_dim = dual.dim();
        EchelonBasis<int, Rational> image;
        r.coalgebra_morphism = true;
        for (const auto& p : paths) {
            auto theta = theta_embed(q, Element<Rational>(p));
            SparseVector<int, Rational> coords;
            for (const auto& [path, c] : theta.functional.values()) coords.add(index.at(path), c);
            image.insert(coords);
            SparseVector<std::pair<int, int>, Rational> lhs, rhs;
            for (const auto& [i, c] : coords) lhs.add_scaled(dual.delta[i], c);
            for (const auto& [pair, c] : comultiply(q, Element<Rational>(p))) {
                rhs.add({index.at(pair.first), index.at(pair.second)}, c);
            }
            Rational eps(0);
            for (const auto& [i, c] : coords) eps += c * dual.counit[i];
            if (lhs != rhs || eps != counit(Element<Rational>(p))) r.coalgebra_morphism = false;
        }
        r.theta_rank = image.rank();
        r.isomorphism = r.coalgebra_morphism && r.theta_rank == r.coalgebra_dim &&
                        r.dual_dim == r.coalgebra_dim;
        r.explanation = "theta bijective, dim " + std::to_string(r.coalgebra_dim);
        return r;
    }
    r.witness = Functional::eval(q, Rational(1));
    r.witness_search = is_in_theta_image(q, *r.witness, max_len, codim_bound);
    auto ideal = build_cycle_counterexample(q, max_len);
    r.witness_in_finite_dual = true;
    for (const auto& d : ideal.differences) {
        if ((*r.witness)(q, d) != 0) r.witness_in_finite_dual = false;
    }
    for (const auto& p : ideal.other_paths) {
        if ((*r.witness)(q, p) != 0) r.witness_in_finite_dual = false;
    }
    r.explanation = "theta not surjective; witness eval(1) vanishes on a cofinite ideal of "
                    "codimension " + std::to_string(ideal.codimension) +
                    "; cofinite monomial ideal in its kernel: " +
                    to_string(r.witness_search->verdict);
    return r;
}

}  // namespace quiveralg
