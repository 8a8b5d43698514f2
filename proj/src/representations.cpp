#include "quiveralg/representations.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace quiveralg {

namespace {

bool same_matrix(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) != b(i, j)) return false;
        }
    }
    return true;
}

MatrixQ identity(int n) { return MatrixQ::Identity(n, n); }
MatrixQ zeros(Eigen::Index r, Eigen::Index c) { return MatrixQ::Zero(r, c); }

std::vector<int> offsets(const std::vector<int>& dims) {
    std::vector<int> out(dims.size() + 1, 0);
    for (std::size_t v = 0; v < dims.size(); ++v) out[v + 1] = out[v] + dims[v];
    return out;
}

MatrixQ stack_rows(const std::vector<MatrixQ>& blocks, Eigen::Index cols) {
    Eigen::Index rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    MatrixQ out(rows, cols);
    Eigen::Index r = 0;
    for (const auto& b : blocks) {
        if (b.rows() == 0) continue;
        out.middleRows(r, b.rows()) = b;
        r += b.rows();
    }
    return out;
}

}  // namespace

void Representation::validate() const {
    if (dims.size() != static_cast<std::size_t>(quiver.vertex_count())) throw InputError("one dimension per vertex expected");
    if (maps.size() != static_cast<std::size_t>(quiver.arrow_count())) throw InputError("one matrix per arrow expected");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const auto& arrow = quiver.arrow(static_cast<int>(a));
        if (maps[a].rows() != dims[arrow.target] || maps[a].cols() != dims[arrow.source]) {
            throw InputError("matrix of arrow '" + arrow.label + "' must be " +
                             std::to_string(dims[arrow.target]) + "x" +
                             std::to_string(dims[arrow.source]));
        }
    }
    for (int d : dims) {
        if (d < 0) throw InputError("negative dimension");
    }
}

int Representation::total_dim() const {
    int n = 0;
    for (int d : dims) n += d;
    return n;
}

MatrixQ Representation::path_map(const Path& p) const {
    MatrixQ m = identity(dims[p.source]);
    for (int a : p.arrows) m = (maps[a] * m).eval();
    return m;
}

void ModuleData::validate() const {
    if (vertex_action.size() != static_cast<std::size_t>(quiver.vertex_count()) ||
        arrow_action.size() != static_cast<std::size_t>(quiver.arrow_count())) {
        throw InputError("one action matrix per vertex and arrow expected");
    }
    auto square = [&](const MatrixQ& m) { return m.rows() == dim && m.cols() == dim; };
    MatrixQ sum = zeros(dim, dim);
    for (std::size_t u = 0; u < vertex_action.size(); ++u) {
        if (!square(vertex_action[u])) throw InputError("action matrices must be square of size dim");
        sum += vertex_action[u];
        for (std::size_t v = 0; v < vertex_action.size(); ++v) {
            MatrixQ expected = u == v ? vertex_action[u] : zeros(dim, dim);
            if (!same_matrix(vertex_action[u] * vertex_action[v], expected)) {
                throw InputError("vertex actions are not orthogonal idempotents");
            }
        }
    }
    if (!same_matrix(sum, identity(dim))) throw InputError("module is not unital");
    for (std::size_t a = 0; a < arrow_action.size(); ++a) {
        const auto& arrow = quiver.arrow(static_cast<int>(a));
        const MatrixQ& r = arrow_action[a];
        if (!square(r)) throw InputError("action matrices must be square of size dim");
        if (!same_matrix(vertex_action[arrow.source] * r, r) ||
            !same_matrix(r * vertex_action[arrow.target], r)) {
            throw InputError("arrow '" + arrow.label + "' does not respect its endpoints");
        }
    }
    // With the endpoint relations in place, a·b = a e_{t(a)} e_{s(b)} b already
    // vanishes when t(a) != s(b).
}

MatrixQ ModuleData::action(const Path& p) const {
    MatrixQ m = vertex_action[p.source];
    for (int a : p.arrows) m = (m * arrow_action[a]).eval();
    return m;
}

Representation rep_from_module(const ModuleData& m) {
    m.validate();
    Representation r;
    r.quiver = m.quiver;
    std::vector<MatrixQ> bases;  // rows: basis of V_u = M·u
    for (const auto& e : m.vertex_action) {
        bases.push_back(row_space(e));
        r.dims.push_back(static_cast<int>(bases.back().rows()));
    }
    for (std::size_t a = 0; a < m.arrow_action.size(); ++a) {
        const auto& arrow = m.quiver.arrow(static_cast<int>(a));
        const MatrixQ& src = bases[arrow.source];
        const MatrixQ& tgt = bases[arrow.target];
        MatrixQ f(tgt.rows(), src.rows());
        for (Eigen::Index j = 0; j < src.rows(); ++j) {
            VectorQ image = (src.row(j) * m.arrow_action[a]).transpose();
            auto coords = solve<Rational>(tgt.transpose(), image);
            if (!coords) throw std::logic_error("arrow image outside target space");
            f.col(j) = *coords;
        }
        r.maps.push_back(f);
    }
    return r;
}

ModuleData module_from_rep(const Representation& r) {
    r.validate();
    ModuleData m;
    m.quiver = r.quiver;
    m.dim = r.total_dim();
    const auto off = offsets(r.dims);
    for (std::size_t u = 0; u < r.dims.size(); ++u) {
        MatrixQ e = zeros(m.dim, m.dim);
        for (int i = off[u]; i < off[u + 1]; ++i) e(i, i) = 1;
        m.vertex_action.push_back(e);
    }
    for (std::size_t a = 0; a < r.maps.size(); ++a) {
        const auto& arrow = r.quiver.arrow(static_cast<int>(a));
        MatrixQ act = zeros(m.dim, m.dim);
        if (r.maps[a].size() > 0) {
            act.block(off[arrow.source], off[arrow.target], r.dims[arrow.source],
                      r.dims[arrow.target]) = r.maps[a].transpose();
        }
        m.arrow_action.push_back(act);
    }
    return m;
}

bool module_round_trip(const ModuleData& m) {
    const ModuleData back = module_from_rep(rep_from_module(m));
    if (back.dim != m.dim) return false;
    std::vector<MatrixQ> bases;
    for (const auto& e : m.vertex_action) bases.push_back(row_space(e));
    const MatrixQ p = stack_rows(bases, m.dim);  // row k: image of basis vector k
    if (rank(p) != static_cast<std::size_t>(m.dim)) return false;
    for (std::size_t u = 0; u < m.vertex_action.size(); ++u) {
        if (!same_matrix(back.vertex_action[u] * p, p * m.vertex_action[u])) return false;
    }
    for (std::size_t a = 0; a < m.arrow_action.size(); ++a) {
        if (!same_matrix(back.arrow_action[a] * p, p * m.arrow_action[a])) return false;
    }
    return true;
}

NilpotenceWitness is_locally_nilpotent(const Representation& r) {
    r.validate();
    const Quiver& q = r.quiver;
    const std::size_t nv = q.vertex_count();
    using State = std::vector<MatrixQ>;  // canonical row bases of U_L[v]
    State state;
    for (std::size_t v = 0; v < nv; ++v) state.push_back(identity(r.dims[v]));
    std::vector<State> history;
    auto same_state = [](const State& a, const State& b) {
        for (std::size_t v = 0; v < a.size(); ++v) {
            if (!same_matrix(a[v], b[v])) return false;
        }
        return true;
    };
    NilpotenceWitness w;
    for (std::size_t level = 0;; ++level) {
        bool zero = true;
        for (const auto& u : state) zero = zero && u.rows() == 0;
        if (zero) {
            w.nilpotent = true;
            w.length = level;
            w.explanation = "every path of length " + std::to_string(level) + " acts as zero";
            return w;
        }
        for (std::size_t j = 0; j < history.size(); ++j) {
            if (same_state(history[j], state)) {
                w.length = level;
                w.period = level - j;
                break;
            }
        }
        if (w.period > 0) break;
        history.push_back(state);
        State next;
        for (std::size_t t = 0; t < nv; ++t) {
            std::vector<MatrixQ> images;
            for (int a : q.in_arrows(static_cast<int>(t))) {
                images.push_back(state[q.arrow(a).source] * r.maps[a].transpose());
            }
            next.push_back(row_space(stack_rows(images, r.dims[t])));
        }
        state = std::move(next);
    }
    // Depth-first search through paths whose map is nonzero; prefixes of a
    // nonvanishing path are nonvanishing, so the pruning loses nothing.
    std::size_t budget = 200000;
    std::function<bool(const Path&, const MatrixQ&)> dfs = [&](const Path& p, const MatrixQ& f) {
        if (budget-- == 0) return false;
        if (p.arrows.size() == w.length) {
            w.nonvanishing_path = p;
            return true;
        }
        for (int a : q.out_arrows(p.target)) {
            MatrixQ g = r.maps[a] * f;
            if (is_zero_matrix(g)) continue;
            Path next = p;
            next.arrows.push_back(a);
            next.target = q.arrow(a).target;
            if (dfs(next, g)) return true;
        }
        return false;
    };
    for (std::size_t v = 0; v < nv && !w.nonvanishing_path; ++v) {
        if (r.dims[v] > 0) dfs(Path::vertex(static_cast<int>(v)), identity(r.dims[v]));
    }
    w.explanation = "the subspace chain stabilises at a nonzero state at length " +
                    std::to_string(w.length);
    if (w.nonvanishing_path) {
        w.explanation += "; " + path_to_string(q, *w.nonvanishing_path) + " acts nontrivially";
    }
    return w;
}

MonomialSearch annihilator_monomial_check(const Representation& r, const VectorQ& x,
                                          std::size_t max_len, std::size_t codim_bound) {
    r.validate();
    if (x.size() != r.total_dim()) throw InputError("element has the wrong dimension");
    const auto off = offsets(r.dims);
    auto kills = [&](const Path& p) {
        const VectorQ xs = x.segment(off[p.source], r.dims[p.source]);
        return is_zero_matrix<Rational>(r.path_map(p) * xs);
    };
    return contains_cofinite_monomial_ideal(r.quiver, kills, max_len, codim_bound);
}

namespace {

// Strips length-n prefixes: the length-n cycle path at u equals u modulo the ideal.
Path reduce_cycle_path(const Quiver& q, Path p, std::size_t n) {
    while (p.arrows.size() >= n) p = subpath(q, p, n, p.arrows.size());
    return p;
}

}  // namespace

ModuleData cycle_quotient_module(int n) {
    if (n < 1) throw InputError("cycle length must be positive");
    const Quiver q = QuiverFamily(FamilyKind::Cycle, n).truncate(0);
    const std::size_t len = static_cast<std::size_t>(n);
    std::vector<Path> basis;
    for (const auto& p : enumerate_paths(q, len - 1).paths) basis.push_back(p);
    std::map<Path, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    const int dim = static_cast<int>(basis.size());

    auto right_action = [&](const Path& g) {
        MatrixQ m = zeros(dim, dim);
        for (int i = 0; i < dim; ++i) {
            auto prod = compose_paths(q, basis[i], g);
            if (prod) m(i, index.at(reduce_cycle_path(q, *prod, len))) = 1;
        }
        return m;
    };
    ModuleData m;
    m.quiver = q;
    m.dim = dim;
    for (std::size_t v = 0; v < static_cast<std::size_t>(q.vertex_count()); ++v) {
        m.vertex_action.push_back(right_action(Path::vertex(static_cast<int>(v))));
    }
    for (std::size_t a = 0; a < static_cast<std::size_t>(q.arrow_count()); ++a) {
        m.arrow_action.push_back(right_action(Path::arrow(q, static_cast<int>(a))));
    }
    m.validate();
    // Direct reduction of p·g must agree with acting arrow by arrow.
    for (const auto& g : enumerate_paths(q, 2 * len).paths) {
        if (!same_matrix(right_action(g), m.action(g))) {
            throw std::logic_error("cycle quotient reduction is not confluent");
        }
    }
    return m;
}

MonomialSearch cycle_quotient_monomial_check(int n, std::size_t max_len, std::size_t codim_bound) {
    const Quiver q = QuiverFamily(FamilyKind::Cycle, n).truncate(0);
    // Every path reduces to a nonzero basis path, so no path lies in the ideal.
    auto in_ideal = [&](const Path& p) {
        Path r = reduce_cycle_path(q, p, static_cast<std::size_t>(n));
        return r.arrows.size() >= static_cast<std::size_t>(n);
    };
    return contains_cofinite_monomial_ideal(q, in_ideal, max_len, codim_bound);
}

void validate_module(const StructuredAlgebra& a, const AlgebraModule& m) {
    const Eigen::Index d = static_cast<Eigen::Index>(m.dim);
    if (m.action.size() != a.dim()) throw InputError("one action matrix per basis element expected");
    for (const auto& l : m.action) {
        if (l.rows() != d || l.cols() != d) throw InputError("action matrices must be dim x dim");
    }
    auto act = [&](const VectorQ& x) {
        MatrixQ out = zeros(d, d);
        for (std::size_t k = 0; k < a.dim(); ++k) out += x(static_cast<Eigen::Index>(k)) * m.action[k];
        return out;
    };
    MatrixQ unit = zeros(d, d);
    for (const auto& e : a.idempotents()) unit += act(e);
    if (!same_matrix(unit, identity(static_cast<int>(d)))) throw InputError("module is not unital");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!same_matrix(m.action[i] * m.action[j], act(a.product(i, j)))) {
                throw InputError("action is not multiplicative on " + a.labels()[i] + " " +
                                 a.labels()[j]);
            }
        }
    }
}

Comodule comodule_from_module(const StructuredAlgebra& a, const AlgebraModule& m) {
    validate_module(a, m);
    Comodule c;
    c.dim = m.dim;
    const Eigen::Index n = static_cast<Eigen::Index>(a.dim());
    c.coeff.assign(m.dim, std::vector<VectorQ>(m.dim, VectorQ::Zero(n)));
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            for (Eigen::Index k = 0; k < n; ++k) {
                c.coeff[i][j](k) = m.action[k](static_cast<Eigen::Index>(i),
                                               static_cast<Eigen::Index>(j));
            }
        }
    }
    return c;
}

AlgebraModule module_from_comodule(const StructuredAlgebra& a, const Comodule& c) {
    AlgebraModule m;
    m.dim = c.dim;
    const Eigen::Index d = static_cast<Eigen::Index>(c.dim);
    for (std::size_t k = 0; k < a.dim(); ++k) {
        // b_k · m_j = Σ_i coeff[i][j](b_k) m_i
        MatrixQ l = zeros(d, d);
        for (std::size_t i = 0; i < c.dim; ++i) {
            for (std::size_t j = 0; j < c.dim; ++j) {
                l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    c.coeff[i][j](static_cast<Eigen::Index>(k));
            }
        }
        m.action.push_back(l);
    }
    validate_module(a, m);
    return m;
}

ComoduleCheck check_comodule(const DualCoalgebra& d, const Comodule& c) {
    using TensorD = SparseVector<std::pair<int, int>, Rational>;
    auto delta_of = [&](const VectorQ& f) {
        TensorD out;
        for (Eigen::Index l = 0; l < f.size(); ++l) out.add_scaled(d.delta[l], f(l));
        return out;
    };
    auto tensor = [](const VectorQ& f, const VectorQ& g) {
        TensorD out;
        for (Eigen::Index i = 0; i < f.size(); ++i) {
            if (is_zero(f(i))) continue;
            for (Eigen::Index j = 0; j < g.size(); ++j) {
                out.add({static_cast<int>(i), static_cast<int>(j)}, f(i) * g(j));
            }
        }
        return out;
    };
    ComoduleCheck r{true, true};
    for (std::size_t k = 0; k < c.dim; ++k) {
        for (std::size_t j = 0; j < c.dim; ++j) {
            TensorD rhs;
            for (std::size_t i = 0; i < c.dim; ++i) rhs += tensor(c.coeff[k][i], c.coeff[i][j]);
            if (delta_of(c.coeff[k][j]) != rhs) r.coassociative = false;
            Rational eps(0);
            for (Eigen::Index l = 0; l < c.coeff[k][j].size(); ++l) eps += c.coeff[k][j](l) * d.counit[l];
            if (eps != Rational(k == j ? 1 : 0)) r.counital = false;
        }
    }
    return r;
}

AlgebraModule left_module_over_opposite(const ModuleData& m, const StructuredAlgebra& path_alg) {
    AlgebraModule out;
    out.dim = static_cast<std::size_t>(m.dim);
    const auto paths = all_paths(m.quiver);
    if (paths.size() != path_alg.dim()) throw InputError("algebra does not match the quiver");
    for (const auto& p : paths) out.action.push_back(m.action(p).transpose());
    return out;
}

std::pair<bool, bool> morphism_naturality(const StructuredAlgebra& a, const AlgebraModule& m,
                                          const AlgebraModule& n, const MatrixQ& t) {
    bool module_map = true;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        if (!same_matrix(t * m.action[k], n.action[k] * t)) module_map = false;
    }
    const Comodule cm = comodule_from_module(a, m);
    const Comodule cn = comodule_from_module(a, n);
    bool comodule_map = true;
    const Eigen::Index dim = static_cast<Eigen::Index>(a.dim());
    for (std::size_t k = 0; k < n.dim; ++k) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            VectorQ lhs = VectorQ::Zero(dim), rhs = VectorQ::Zero(dim);
            for (std::size_t i = 0; i < m.dim; ++i) {
                lhs += t(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) * cm.coeff[i][j];
            }
            for (std::size_t l = 0; l < n.dim; ++l) {
                rhs += cn.coeff[k][l] * t(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j));
            }
            if (lhs != rhs) comodule_map = false;
        }
    }
    return {module_map, comodule_map};
}

Representation random_representation(std::mt19937_64& rng, const Quiver& q, int max_dim) {
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::uniform_int_distribution<int> entry(-2, 2);
    Representation r;
    r.quiver = q;
    for (std::size_t v = 0; v < static_cast<std::size_t>(q.vertex_count()); ++v) r.dims.push_back(dim(rng));
    for (std::size_t a = 0; a < static_cast<std::size_t>(q.arrow_count()); ++a) {
        const auto& arrow = q.arrow(static_cast<int>(a));
        MatrixQ f(r.dims[arrow.target], r.dims[arrow.source]);
        for (Eigen::Index i = 0; i < f.rows(); ++i) {
            for (Eigen::Index j = 0; j < f.cols(); ++j) f(i, j) = entry(rng);
        }
        r.maps.push_back(f);
    }
    return r;
}

Representation parse_rep_text(const Quiver& q, const std::string& text) {
    Representation r;
    r.quiver = q;
    r.dims.assign(q.vertex_count(), 0);
    std::vector<std::optional<std::pair<int, std::vector<std::vector<Rational>>>>> raw(
        q.arrow_count());
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    auto fail = [&](int ln, const std::string& msg) {
        throw InputError("line " + std::to_string(ln) + ": " + msg);
    };
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::string kw;
        if (!(words >> kw)) continue;
        if (!header) {
            if (kw != "rep") fail(lineno, "expected 'rep' header");
            header = true;
        } else if (kw == "dim") {
            std::string v;
            int n = -1;
            if (!(words >> v >> n) || n < 0) fail(lineno, "expected 'dim <vertex> <n>'");
            auto idx = q.find_vertex(v);
            if (!idx) fail(lineno, "unknown vertex '" + v + "'");
            r.dims[*idx] = n;
        } else if (kw == "map") {
            std::string label;
            if (!(words >> label)) fail(lineno, "expected an arrow label");
            auto idx = q.find_arrow(label);
            if (!idx) fail(lineno, "unknown arrow '" + label + "'");
            std::vector<std::vector<Rational>> rows(1);
            for (std::string tok; words >> tok;) {
                if (tok == ";") {
                    rows.emplace_back();
                    continue;
                }
                try {
                    rows.back().push_back(parse_rational(tok));
                } catch (const InputError& e) {
                    fail(lineno, e.what());
                }
            }
            if (rows.size() == 1 && rows[0].empty()) rows.clear();
            raw[*idx] = std::make_pair(lineno, rows);
        } else {
            fail(lineno, "unrecognised declaration '" + kw + "'");
        }
    }
    if (!header) fail(1, "missing 'rep' header");
    for (std::size_t a = 0; a < static_cast<std::size_t>(q.arrow_count()); ++a) {
        const auto& arrow = q.arrow(static_cast<int>(a));
        MatrixQ f = zeros(r.dims[arrow.target], r.dims[arrow.source]);
        if (raw[a]) {
            const auto& [ln, rows] = *raw[a];
            if (static_cast<Eigen::Index>(rows.size()) != f.rows()) {
                fail(ln, "matrix of '" + arrow.label + "' needs " + std::to_string(f.rows()) + " rows");
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<Eigen::Index>(rows[i].size()) != f.cols()) {
                    fail(ln, "matrix of '" + arrow.label + "' needs " + std::to_string(f.cols()) +
                                 " columns");
                }
                for (std::size_t j = 0; j < rows[i].size(); ++j) f(i, j) = rows[i][j];
            }
        }
        r.maps.push_back(f);
    }
    return r;
}

std::string format_rep_text(const Representation& r) {
    std::ostringstream os;
    os << "rep\n";
    for (std::size_t v = 0; v < r.dims.size(); ++v) {
        os << "dim " << r.quiver.vertex_label(static_cast<int>(v)) << " " << r.dims[v] << "\n";
    }
    for (std::size_t a = 0; a < r.maps.size(); ++a) {
        const MatrixQ& f = r.maps[a];
        if (f.size() == 0) continue;
        os << "map " << r.quiver.arrow(static_cast<int>(a)).label;
        for (Eigen::Index i = 0; i < f.rows(); ++i) {
            if (i > 0) os << " ;";
            for (Eigen::Index j = 0; j < f.cols(); ++j) os << " " << to_string(f(i, j));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace quiveralg
