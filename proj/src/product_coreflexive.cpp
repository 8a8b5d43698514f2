#include "quiveralg/product_coreflexive.hpp"

#include <algorithm>
#include <functional>

namespace quiveralg {

ProductQuiver product_quiver(const Quiver& left, const Quiver& right) {
    ProductQuiver pq;
    pq.left = left;
    pq.right = right;
    for (int a = 0; a < left.vertex_count(); ++a) {
        for (int b = 0; b < right.vertex_count(); ++b) {
            pq.quiver.add_vertex("(" + left.vertex_label(a) + ";" + right.vertex_label(b) + ")");
        }
    }
    pq.horizontal.assign(left.arrow_count(), std::vector<int>(right.vertex_count(), -1));
    pq.vertical.assign(left.vertex_count(), std::vector<int>(right.arrow_count(), -1));
    for (int x = 0; x < left.arrow_count(); ++x) {
        const Arrow& ax = left.arrow(x);
        for (int b = 0; b < right.vertex_count(); ++b) {
            pq.horizontal[x][b] = pq.quiver.add_arrow(
                "(" + ax.label + ";" + right.vertex_label(b) + ")", pq.vertex(ax.source, b),
                pq.vertex(ax.target, b));
            pq.origin.push_back({true, x, b});
        }
    }
    for (int a = 0; a < left.vertex_count(); ++a) {
        for (int y = 0; y < right.arrow_count(); ++y) {
            const Arrow& ay = right.arrow(y);
            pq.vertical[a][y] = pq.quiver.add_arrow(
                "(" + left.vertex_label(a) + ";" + ay.label + ")", pq.vertex(a, ay.source),
                pq.vertex(a, ay.target));
            pq.origin.push_back({false, y, a});
        }
    }
    return pq;
}

std::vector<LatticeWalk> lattice_walks(int n, int k) {
    if (n < 0 || k < 0) throw InputError("lattice dimensions must be nonnegative");
    std::vector<LatticeWalk> out;
    LatticeWalk cur;
    cur.points.emplace_back(0, 0);
    std::function<void()> extend = [&]() {
        auto [i, j] = cur.points.back();
        if (i == n && j == k) {
            out.push_back(cur);
            return;
        }
        if (i < n) {
            cur.points.emplace_back(i + 1, j);
            extend();
            cur.points.pop_back();
        }
        if (j < k) {
            cur.points.emplace_back(i, j + 1);
            extend();
            cur.points.pop_back();
        }
    };
    extend();
    return out;
}

Path walk_path(const ProductQuiver& pq, const Path& p, const Path& q, const LatticeWalk& w) {
    if (w.n() != static_cast<int>(p.arrows.size()) || w.k() != static_cast<int>(q.arrows.size())) {
        throw InputError("lattice walk does not match the path lengths");
    }
    const auto av = path_vertices(pq.left, p);
    const auto bv = path_vertices(pq.right, q);
    Path g = Path::vertex(pq.vertex(p.source, q.source));
    for (std::size_t r = 0; r + 1 < w.points.size(); ++r) {
        auto [i, j] = w.points[r];
        int arrow = w.step_right(r) ? pq.horizontal[p.arrows[i]][bv[j]]
                                    : pq.vertical[av[i]][q.arrows[j]];
        g.arrows.push_back(arrow);
    }
    g.target = pq.vertex(p.target, q.target);
    return g;
}

std::tuple<Path, Path, LatticeWalk> decompose_product_path(const ProductQuiver& pq, const Path& g) {
    const int nb = pq.right.vertex_count();
    Path p = Path::vertex(g.source / nb);
    Path q = Path::vertex(g.source % nb);
    LatticeWalk w;
    w.points.emplace_back(0, 0);
    for (int a : g.arrows) {
        const auto& o = pq.origin[a];
        auto [i, j] = w.points.back();
        if (o.horizontal) {
            p.arrows.push_back(o.arrow);
            p.target = pq.left.arrow(o.arrow).target;
            w.points.emplace_back(i + 1, j);
        } else {
            q.arrows.push_back(o.arrow);
            q.target = pq.right.arrow(o.arrow).target;
            w.points.emplace_back(i, j + 1);
        }
    }
    return {p, q, w};
}

Element<Rational> alpha_embed(const ProductQuiver& pq, const Tensor<Rational>& t) {
    Element<Rational> out;
    for (const auto& [pair, c] : t) {
        const auto& [p, q] = pair;
        for (const auto& w : lattice_walks(static_cast<int>(p.arrows.size()),
                                           static_cast<int>(q.arrows.size()))) {
            out.add(walk_path(pq, p, q, w), c);
        }
    }
    return out;
}

bool alpha_morphism_on(const ProductQuiver& pq, const Tensor<Rational>& t) {
    const auto lhs = comultiply(pq.quiver, alpha_embed(pq, t));
    Tensor<Rational> rhs;
    Rational eps(0);
    for (const auto& [pair, c] : t) {
        const auto& [p, q] = pair;
        eps += c * counit(Element<Rational>(p)) * counit(Element<Rational>(q));
        for (const auto& [p1, p2] : deconcatenations(pq.left, p)) {
            for (const auto& [q1, q2] : deconcatenations(pq.right, q)) {
                const auto u = alpha_embed(pq, Tensor<Rational>({p1, q1}));
                const auto v = alpha_embed(pq, Tensor<Rational>({p2, q2}));
                for (const auto& [gu, cu] : u) {
                    for (const auto& [gv, cv] : v) rhs.add({gu, gv}, c * cu * cv);
                }
            }
        }
    }
    return lhs == rhs && counit(alpha_embed(pq, t)) == eps;
}

Tensor<Rational> alpha_left_inverse(const ProductQuiver& pq, const Element<Rational>& e) {
    Tensor<Rational> out;
    for (const auto& [g, c] : e) {
        auto [p, q, w] = decompose_product_path(pq, g);
        bool right_first = true;
        for (std::size_t r = 0; r + 1 < w.points.size(); ++r) {
            if (!w.step_right(r) && w.points[r].first < w.n()) right_first = false;
        }
        if (right_first) out.add({p, q}, c);
    }
    return out;
}

bool SaturationResult::contains(const Path& path) const {
    return std::binary_search(w.begin(), w.end(), path);
}

SaturationResult saturate_subcoalgebra(const Quiver& q, const std::vector<Element<Rational>>& v) {
    SaturationResult r;
    for (const auto& e : v) {
        for (const auto& [p, c] : e) {
            for (int x : path_vertices(q, p)) r.s0.insert(x);
        }
    }
    const int n = q.vertex_count();
    auto reach = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::vector<int> stack(r.s0.begin(), r.s0.end());
        for (int x : stack) seen[x] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int a : forward ? q.out_arrows(x) : q.in_arrows(x)) {
                int y = forward ? q.arrow(a).target : q.arrow(a).source;
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        return seen;
    };
    const auto fwd = reach(true), bwd = reach(false);
    for (int x = 0; x < n; ++x) {
        if (fwd[x] && bwd[x]) r.s.insert(x);
    }
    // Kahn's algorithm on the arrows inside S.
    std::vector<int> indeg(n, 0);
    for (const auto& a : q.arrows()) {
        if (r.s.count(a.source) && r.s.count(a.target)) ++indeg[a.target];
    }
    std::vector<int> ready;
    for (int x : r.s) {
        if (indeg[x] == 0) ready.push_back(x);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        int x = ready.back();
        ready.pop_back();
        ++removed;
        for (int a : q.out_arrows(x)) {
            int y = q.arrow(a).target;
            if (r.s.count(y) && --indeg[y] == 0) ready.push_back(y);
        }
    }
    if (removed != r.s.size()) {
        throw InputError("a cycle passes between vertices of the subcoalgebra: infinitely many paths");
    }
    std::function<void(const Path&)> grow = [&](const Path& p) {
        r.w.push_back(p);
        for (int a : q.out_arrows(p.target)) {
            if (!r.s.count(q.arrow(a).target)) continue;
            Path next = p;
            next.arrows.push_back(a);
            next.target = q.arrow(a).target;
            grow(next);
        }
    };
    for (int x : r.s) grow(Path::vertex(x));
    std::sort(r.w.begin(), r.w.end());
    for (const auto& p : r.w) {
        if (r.s0.count(p.source) && r.s0.count(p.target)) r.p.push_back(p);
    }
    return r;
}

namespace {

Rational product_at(const Quiver& q, const Path& p, const Element<Rational>& f1,
                    const Element<Rational>& g1, const Element<Rational>& f2,
                    const Element<Rational>& g2, bool proper_only) {
    Rational s(0);
    for (const auto& [a, b] : deconcatenations(q, p)) {
        if (proper_only && (a == p || b == p)) continue;
        s += f1.coefficient(a) * g1.coefficient(b) + f2.coefficient(a) * g2.coefficient(b);
    }
    return s;
}

void verify_witness(const Quiver& q, const std::vector<Path>& paths,
                    const std::vector<Path>& w_basis, FactorizationWitness& out) {
    out.identity_holds = true;
    out.paths_checked = paths.size();
    for (const auto& p : paths) {
        if (out.eta(q, p) != product_at(q, p, out.f1, out.g1, out.f2, out.g2, false)) {
            out.identity_holds = false;
        }
    }
    out.vanish_on_w = true;
    for (const auto& p : w_basis) {
        for (const auto* f : {&out.f1, &out.g1, &out.f2, &out.g2}) {
            if (!is_zero(f->coefficient(p))) out.vanish_on_w = false;
        }
    }
}

}  // namespace

FactorizationWitness factor_perp_element(const Quiver& q, const Functional& eta,
                                         const SaturationResult& w, std::size_t max_len) {
    for (const auto& p : w.w) {
        if (!is_zero(eta(q, p))) {
            throw InputError("functional does not vanish on " + path_to_string(q, p));
        }
    }
    FactorizationWitness out;
    out.eta = eta;
    out.truncation = max_len;
    const auto paths = enumerate_paths(q, max_len).paths;  // sorted by length
    auto in_s = [&](int v) { return w.s.count(v) > 0; };
    for (const auto& p : paths) {
        if (in_s(p.source) && in_s(p.target)) continue;
        if (p.arrows.empty()) {
            out.f1.add(p, Rational(1));
            out.g2.add(p, Rational(1));
            out.g1.add(p, eta(q, p));
            continue;
        }
        const Rational rhs = eta(q, p) - product_at(q, p, out.f1, out.g1, out.f2, out.g2, true);
        if (!in_s(p.source)) {
            out.g1.add(p, rhs);  // f1(u) = 1
        } else {
            out.f2.add(p, rhs);  // g2(v) = 1
        }
    }
    std::vector<Path> w_checked;
    for (const auto& p : w.w) {
        if (p.arrows.size() <= max_len) w_checked.push_back(p);
    }
    verify_witness(q, paths, w_checked, out);
    return out;
}

std::vector<Path> star_subcoalgebra_basis(const Quiver& star, int n) {
    std::vector<Path> out = {Path::vertex(star.vertex("a")), Path::vertex(star.vertex("c"))};
    for (int k = 1; k <= n; ++k) {
        const std::string s = std::to_string(k);
        const Path x = Path::arrow(star, star.arrow_index("x" + s));
        const Path y = Path::arrow(star, star.arrow_index("y" + s));
        out.push_back(Path::vertex(star.vertex("b" + s)));
        out.push_back(x);
        out.push_back(y);
        out.push_back(concat(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

FactorizationWitness example56_factorization(int n, int truncation, const Functional& eta) {
    if (n < 0 || truncation < n) throw InputError("need 0 <= n <= truncation");
    const Quiver star = QuiverFamily(FamilyKind::StarExample56).truncate(truncation);
    const auto basis = star_subcoalgebra_basis(star, n);
    for (const auto& p : basis) {
        if (!is_zero(eta(star, p))) {
            throw InputError("functional does not vanish on " + path_to_string(star, p));
        }
    }
    FactorizationWitness out;
    out.eta = eta;
    out.truncation = static_cast<std::size_t>(truncation);
    for (int k = n + 1; k <= truncation; ++k) {
        const std::string s = std::to_string(k);
        const Path b = Path::vertex(star.vertex("b" + s));
        const Path x = Path::arrow(star, star.arrow_index("x" + s));
        const Path y = Path::arrow(star, star.arrow_index("y" + s));
        MatrixQ m(2, 2);
        m << eta(star, b), eta(star, y), eta(star, x), eta(star, concat(x, y));
        const auto split = rank1_decompose_2x2(m);
        // g_i(b_k), g_i(x_k) from column i; h_i(b_k), h_i(y_k) from row i.
        out.f1.add(b, split.columns(0, 0));
        out.f1.add(x, split.columns(1, 0));
        out.f2.add(b, split.columns(0, 1));
        out.f2.add(x, split.columns(1, 1));
        out.g1.add(b, split.rows(0, 0));
        out.g1.add(y, split.rows(0, 1));
        out.g2.add(b, split.rows(1, 0));
        out.g2.add(y, split.rows(1, 1));
    }
    verify_witness(star, all_paths(star), basis, out);
    return out;
}

bool verify_skew_primitive_coideal(int truncation) {
    const Quiver q = QuiverFamily(FamilyKind::StarExample51).truncate(truncation);
    const Path a = Path::vertex(q.vertex("a"));
    const Path c = Path::vertex(q.vertex("c"));
    Element<Rational> e(a);
    e.add(c, Rational(-1));
    // Modulo K(a - c), c is identified with a.
    auto project = [&](const Path& p) { return p == c ? a : p; };
    const auto image = comultiply(q, e).map_labels([&](const PathPair& pp) {
        return PathPair{project(pp.first), project(pp.second)};
    });
    return image.empty() && is_zero(counit(e));
}

std::string to_string(Coreflexivity c) {
    switch (c) {
        case Coreflexivity::Coreflexive: return "coreflexive";
        case Coreflexivity::NotCoreflexive: return "not_coreflexive";
        case Coreflexivity::Unknown: return "unknown";
    }
    return {};
}

CoalgebraDescription CoalgebraDescription::of(const Quiver& q) {
    CoalgebraDescription d;
    d.kind = Kind::Quiver;
    d.quiver = q;
    return d;
}

CoalgebraDescription CoalgebraDescription::of(const QuiverFamily& f) {
    CoalgebraDescription d;
    d.kind = Kind::Family;
    d.family = f;
    return d;
}

CoalgebraDescription CoalgebraDescription::of(const Poset& p) {
    CoalgebraDescription d;
    d.kind = Kind::Poset;
    d.poset = p;
    return d;
}

CoalgebraDescription CoalgebraDescription::of(PosetFamily f) {
    CoalgebraDescription d;
    d.kind = Kind::PosetFamily;
    d.poset_family = f;
    return d;
}

CoalgebraDescription CoalgebraDescription::tensor(CoalgebraDescription a, CoalgebraDescription b) {
    CoalgebraDescription d;
    d.kind = Kind::Tensor;
    d.factors = {std::move(a), std::move(b)};
    return d;
}

std::string CoalgebraDescription::name() const {
    switch (kind) {
        case Kind::Quiver:
            return "path coalgebra of a finite quiver (" + std::to_string(quiver->vertex_count()) +
                   " vertices, " + std::to_string(quiver->arrow_count()) + " arrows)";
        case Kind::Family: return "path coalgebra of family " + family->name();
        case Kind::Poset:
            return "incidence coalgebra of a poset with " + std::to_string(poset->size()) +
                   " elements";
        case Kind::PosetFamily:
            return std::string("incidence coalgebra of N ") +
                   (*poset_family == PosetFamily::NaturalChain ? "(chain)" : "(antichain)");
        case Kind::Tensor: return factors[0].name() + " ⊗ " + factors[1].name();
    }
    return {};
}

namespace {

bool is_single_loop(const Quiver& q) {
    return q.vertex_count() == 1 && q.arrow_count() == 1;
}

// Coreflexive and embedded in a path coalgebra with finitely many paths
// between any two vertices.
bool tensor_eligible(const CoalgebraDescription& d) {
    using K = CoalgebraDescription::Kind;
    switch (d.kind) {
        case K::Quiver: return is_acyclic(*d.quiver);
        case K::Poset:
        case K::PosetFamily: return true;
        case K::Family: {
            const auto facts = d.family->facts();
            return facts.finitely_many_paths_between &&
                   coreflexivity_verdict(d).value == Coreflexivity::Coreflexive;
        }
        case K::Tensor: return false;
    }
    return false;
}

const char* kRuleCoradical =
    "finitely many paths between any two vertices: coreflexive iff the coradical is";
const char* kRuleGrouplike =
    "coradical is the grouplike coalgebra on a countable (nonmeasurable) set: coreflexive";

}  // namespace

CoreflexivityVerdict coreflexivity_verdict(const CoalgebraDescription& c) {
    using K = CoalgebraDescription::Kind;
    CoreflexivityVerdict v;
    auto yes = [&](std::initializer_list<const char*> rules) {
        v.value = Coreflexivity::Coreflexive;
        for (const char* r : rules) v.chain.emplace_back(r);
        return v;
    };
    auto no = [&](std::initializer_list<const char*> rules) {
        v.value = Coreflexivity::NotCoreflexive;
        for (const char* r : rules) v.chain.emplace_back(r);
        return v;
    };
    switch (c.kind) {
        case K::Quiver:
            if (is_acyclic(*c.quiver)) {
                return yes({"finite quiver without oriented cycles: finitely many paths",
                            "finite-dimensional coalgebra: coreflexive"});
            }
            if (is_single_loop(*c.quiver)) {
                return yes({"one loop: the dual algebra is K[[X]], whose ideals (X^n) are closed",
                            "every finite-dimensional dual module is rational: coreflexive"});
            }
            v.chain.emplace_back(
                "oriented cycle on more than one arrow: infinitely many paths between two vertices");
            v.chain.emplace_back("no rule applies");
            return v;
        case K::Poset:
            return yes({"finite poset: finitely many intervals",
                        "finite-dimensional coalgebra: coreflexive"});
        case K::PosetFamily:
            return yes({"incidence coalgebra embeds in a path coalgebra with finitely many paths "
                        "between any two vertices",
                        kRuleCoradical, kRuleGrouplike});
        case K::Family: {
            const auto& f = *c.family;
            switch (f.kind()) {
                case FamilyKind::Loop:
                    return yes({"one loop: the dual algebra is K[[X]], whose ideals (X^n) are closed",
                                "every finite-dimensional dual module is rational: coreflexive"});
                case FamilyKind::Cycle:
                    if (f.parameter() == 1) {
                        return yes(
                            {"one loop: the dual algebra is K[[X]], whose ideals (X^n) are closed",
                             "every finite-dimensional dual module is rational: coreflexive"});
                    }
                    v.chain.emplace_back("oriented cycle: infinitely many paths between two vertices");
                    v.chain.emplace_back("no rule applies");
                    return v;
                case FamilyKind::StarExample51:
                    return no({"K(a - c) is a one-dimensional coideal (a, c-skew-primitive)",
                               "the quotient is a known non-coreflexive coalgebra",
                               "finite-dimensional coideal quotients preserve coreflexivity: not "
                               "coreflexive"});
                case FamilyKind::StarExample56:
                    return yes({"every finite-dimensional subcoalgebra lies in some W_n with "
                                "W_n^⊥ W_n^⊥ = W_n^⊥ (2x2 rank-one splitting)",
                                "coreflexive iff the coradical is", kRuleGrouplike});
                case FamilyKind::MultiArrowPair:
                    return no({"infinitely many arrows between two vertices: not locally finite",
                               "coreflexive coalgebras are locally finite: not coreflexive"});
                default:
                    break;
            }
            if (f.facts().finitely_many_paths_between) {
                return yes({kRuleCoradical, kRuleGrouplike});
            }
            v.chain.emplace_back("no rule applies");
            return v;
        }
        case K::Tensor:
            if (tensor_eligible(c.factors[0]) && tensor_eligible(c.factors[1])) {
                return yes({"both factors are coreflexive subcoalgebras of path coalgebras with "
                            "finitely many paths between any two vertices",
                            "tensor product embeds in the path coalgebra of the product quiver",
                            "product quiver keeps finitely many paths between vertices; its "
                            "coradical is grouplike on a nonmeasurable set: coreflexive"});
            }
            v.chain.emplace_back("tensor rule needs both factors coreflexive with finitely many "
                                 "paths between vertices");
            v.chain.emplace_back("no rule applies");
            return v;
    }
    return v;
}

}  // namespace quiveralg
