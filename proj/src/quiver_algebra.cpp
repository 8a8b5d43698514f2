#include "quiveralg/quiver_algebra.hpp"

#include <algorithm>

namespace quiveralg {

bool MonomialIdeal::contains(const Quiver& q, const Path& p) const {
    for (const auto& g : generators) {
        if (g.is_vertex()) {
            auto vs = path_vertices(q, p);
            if (std::find(vs.begin(), vs.end(), g.source) != vs.end()) return true;
        } else if (std::search(p.arrows.begin(), p.arrows.end(), g.arrows.begin(),
                               g.arrows.end()) != p.arrows.end()) {
            return true;
        }
    }
    return false;
}

MonomialIdeal monomial_closure(const Quiver& q, const std::vector<Path>& generators,
                               std::size_t max_len) {
    MonomialIdeal ideal;
    for (const auto& g : generators) validate_path(q, g);
    ideal.generators = generators;
    ideal.truncation = max_len;
    auto paths = enumerate_paths(q, max_len);
    ideal.exhaustive = paths.exhaustive;
    for (const auto& p : paths.paths) {
        if (ideal.contains(q, p)) ideal.paths.insert(p);
    }
    return ideal;
}

std::string to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::Yes: return "yes";
        case SearchVerdict::YesExhaustive: return "yes_exhaustive";
        case SearchVerdict::NoUpToBound: return "no_up_to_bound";
        case SearchVerdict::NoExhaustive: return "no_exhaustive";
    }
    return {};
}

MonomialSearch contains_cofinite_monomial_ideal(const Quiver& q,
                                                const std::function<bool(const Path&)>& in_ideal,
                                                std::size_t max_len, std::size_t codim_bound) {
    MonomialSearch out;
    const bool acyclic = is_acyclic(q);
    out.horizon = acyclic ? longest_path_length(q) : std::max(max_len, codim_bound);
    bool exceeded = false;
    for (const auto& p : enumerate_paths(q, out.horizon).paths) {
        if (in_ideal(p)) continue;
        for (const auto& s : subpaths(q, p)) out.complement.insert(s);
        if (!acyclic && out.complement.size() > codim_bound) {
            exceeded = true;
            break;
        }
    }
    exceeded = exceeded || out.complement.size() > codim_bound;
    const std::string size = std::to_string(out.complement.size());
    if (acyclic) {
        out.verdict = exceeded ? SearchVerdict::NoExhaustive : SearchVerdict::YesExhaustive;
        out.explanation = exceeded ? "every monomial ideal inside has codimension >= " + size
                                   : "monomial ideal with complement of size " + size;
    } else {
        out.verdict = exceeded ? SearchVerdict::NoUpToBound : SearchVerdict::Yes;
        out.explanation =
            exceeded ? "no monomial ideal of codimension <= " + std::to_string(codim_bound) +
                           " (paths up to length " + std::to_string(out.horizon) + ")"
                     : "complement of size " + size + " (membership checked up to length " +
                           std::to_string(out.horizon) + ")";
    }
    return out;
}

MonomialSearch contains_cofinite_monomial_ideal(const Quiver& q,
                                                const Subspace<Path, Rational>& ideal,
                                                std::size_t max_len, std::size_t codim_bound) {
    return contains_cofinite_monomial_ideal(
        q, [&](const Path& p) { return ideal.contains(Element<Rational>(p)); }, max_len,
        codim_bound);
}

// ---------------------------------------------------------------------------
// Counterexample ideals

namespace {

struct CycleCoords {
    const Quiver* quiver;
    std::vector<int> arrows;       // cycle arrows x_0..x_{s-1}
    std::map<int, int> vertex_at;  // vertex -> n
    std::set<int> arrow_set;

    int s() const { return static_cast<int>(arrows.size()); }

    Path q(int n, int length) const {
        n = ((n % s()) + s()) % s();
        Path p = Path::vertex(quiver->arrow(arrows[n]).source);
        for (int k = 0; k < length; ++k) {
            int a = arrows[(n + k) % s()];
            p.arrows.push_back(a);
            p.target = quiver->arrow(a).target;
        }
        return p;
    }

    /// (n, length) when p winds around the cycle.
    std::optional<std::pair<int, int>> coords(const Path& p) const {
        auto it = vertex_at.find(p.source);
        if (it == vertex_at.end()) return std::nullopt;
        for (int a : p.arrows) {
            if (!arrow_set.count(a)) return std::nullopt;
        }
        return std::make_pair(it->second, static_cast<int>(p.length()));
    }
};

CycleCoords make_coords(const Quiver& q, const std::vector<int>& cycle) {
    CycleCoords c{&q, cycle, {}, {}};
    for (int n = 0; n < c.s(); ++n) {
        c.vertex_at[q.arrow(cycle[n]).source] = n;
        c.arrow_set.insert(cycle[n]);
    }
    return c;
}

Element<Rational> difference(const Path& a, const Path& b) {
    Element<Rational> e(a);
    e.add(b, Rational(-1));
    return e;
}

void check_ideal_property(CounterexampleIdeal& ideal) {
    const auto& q = ideal.quiver;
    auto paths = enumerate_paths(q, ideal.truncation).paths;
    std::vector<Element<Rational>> spanning = ideal.differences;
    for (const auto& p : ideal.other_paths) spanning.emplace_back(p);
    ideal.ideal_property = true;
    for (const auto& g : spanning) {
        std::size_t len = 0;
        for (const auto& [p, c] : g) len = std::max(len, p.length());
        for (const auto& r : paths) {
            if (len + r.length() > ideal.truncation) continue;
            Element<Rational> re(r);
            if (!ideal.contains(multiply(q, g, re)) || !ideal.contains(multiply(q, re, g))) {
                ideal.ideal_property = false;
                return;
            }
        }
    }
}

void finish_codimension(CounterexampleIdeal& ideal) {
    auto all = enumerate_paths(ideal.quiver, ideal.truncation).paths;
    std::set<Path> ambient(all.begin(), all.end());
    std::vector<Element<Rational>> gens = ideal.differences;
    for (const auto& p : ideal.other_paths) gens.emplace_back(p);
    ideal.codimension = codimension_of_span(gens, ambient);
}

}  // namespace

bool CounterexampleIdeal::contains_path(const Path& p) const {
    return contains(Element<Rational>(p));
}

bool CounterexampleIdeal::identities_hold() const {
    // A family can be vacuous (on a loop every index pair composes), but
    // something must have been checked.
    std::size_t checked = 0;
    for (const auto& c : identities) {
        if (c.failed > 0) return false;
        checked += c.checked;
    }
    return checked > 0;
}

bool CounterexampleIdeal::contains(const Element<Rational>& e) const {
    // Components outside X lie in H. Inside X, the classes modulo span(S) are
    // indexed by (start, length mod s) for the cycle, and by the total
    // coefficient of the arrows x_n for the multi-arrow pair.
    std::map<std::pair<int, int>, Rational> residue;
    if (kind == "cycle") {
        auto coords = make_coords(quiver, cycle);
        for (const auto& [p, c] : e) {
            if (auto nm = coords.coords(p)) residue[{nm->first, nm->second % coords.s()}] += c;
        }
    } else {
        for (const auto& [p, c] : e) {
            if (p.length() == 1) {
                residue[{0, 0}] += c;
            } else if (p.is_vertex()) {
                residue[{1, p.source}] += c;
            }
        }
    }
    return std::all_of(residue.begin(), residue.end(),
                       [](const auto& kv) { return kv.second == 0; });
}

CounterexampleIdeal build_cycle_counterexample(const Quiver& q, std::size_t max_len) {
    auto cycle = find_simple_cycle(q);
    if (!cycle) throw InputError("the quiver has no oriented cycle");
    CounterexampleIdeal ideal;
    ideal.kind = "cycle";
    ideal.quiver = q;
    ideal.cycle = *cycle;
    ideal.truncation = max_len;
    auto co = make_coords(ideal.quiver, ideal.cycle);
    const int s = co.s();
    const int len = static_cast<int>(max_len);

    for (const auto& p : enumerate_paths(q, max_len).paths) {
        (co.coords(p) ? ideal.x_paths : ideal.other_paths).push_back(p);
    }
    for (int n = 0; n < s; ++n) {
        for (int k = 1; k * s <= len; ++k) {
            for (int i = 0; k * s + i <= len; ++i) {
                ideal.differences.push_back(difference(co.q(n, k * s + i), co.q(n, i)));
            }
        }
    }

    IdentityCheck right_hit{"(q[n,ks+i]-q[n,i])q[n+i,j] = q[n,ks+i+j]-q[n,i+j]"};
    IdentityCheck right_zero{"(q[n,ks+i]-q[n,i])q[m,j] = 0 for m != n+i"};
    IdentityCheck left_hit{"q[m,j](q[n,ks+i]-q[n,i]) = q[m,ks+i+j]-q[m,i+j] for m+j = n"};
    IdentityCheck left_zero{"q[m,j](q[n,ks+i]-q[n,i]) = 0 for m+j != n"};
    auto mod = [s](int a) { return ((a % s) + s) % s; };
    for (int n = 0; n < s; ++n) {
        for (int k = 1; k * s <= len; ++k) {
            for (int i = 0; k * s + i <= len; ++i) {
                const auto d = difference(co.q(n, k * s + i), co.q(n, i));
                for (int j = 0; k * s + i + j <= len; ++j) {
                    for (int m = 0; m < s; ++m) {
                        const Element<Rational> qm(co.q(m, j));
                        auto right = multiply(q, d, qm);
                        if (m == mod(n + i)) {
                            auto expect = difference(co.q(n, k * s + i + j), co.q(n, i + j));
                            ++right_hit.checked;
                            if (right != expect || !ideal.contains(right)) ++right_hit.failed;
                        } else {
                            ++right_zero.checked;
                            if (!right.empty()) ++right_zero.failed;
                        }
                        auto left = multiply(q, qm, d);
                        if (mod(m + j) == n) {
                            auto expect = difference(co.q(m, k * s + i + j), co.q(m, i + j));
                            ++left_hit.checked;
                            if (left != expect || !ideal.contains(left)) ++left_hit.failed;
                        } else {
                            ++left_zero.checked;
                            if (!left.empty()) ++left_zero.failed;
                        }
                    }
                }
            }
        }
    }
    ideal.identities = {right_hit, right_zero, left_hit, left_zero};
    check_ideal_property(ideal);
    finish_codimension(ideal);
    return ideal;
}

CounterexampleIdeal build_multiarrow_counterexample(const QuiverFamily& family, int n) {
    if (family.kind() != FamilyKind::MultiArrowPair) {
        throw InputError("the multi-arrow counterexample needs the multiarrow family");
    }
    if (n < 1) throw InputError("the multi-arrow counterexample needs at least two arrows");
    CounterexampleIdeal ideal;
    ideal.kind = "multiarrow";
    ideal.quiver = family.truncate(n);
    ideal.truncation = 1;
    const auto& q = ideal.quiver;
    ideal.x_paths = all_paths(q);
    const Path x0 = Path::arrow(q, 0);
    for (int k = 1; k <= n; ++k) ideal.differences.push_back(difference(Path::arrow(q, k), x0));

    IdentityCheck unit_left{"a(x_n-x_0) = x_n-x_0"};
    IdentityCheck unit_right{"(x_n-x_0)b = x_n-x_0"};
    IdentityCheck zero{"other products with paths vanish"};
    const Element<Rational> a(Path::vertex(0)), b(Path::vertex(1));
    for (const auto& d : ideal.differences) {
        ++unit_left.checked;
        if (multiply(q, a, d) != d) ++unit_left.failed;
        ++unit_right.checked;
        if (multiply(q, d, b) != d) ++unit_right.failed;
        for (const auto& p : ideal.x_paths) {
            const Element<Rational> pe(p);
            if (p != a.leading_label()) {
                ++zero.checked;
                if (!multiply(q, pe, d).empty()) ++zero.failed;
            }
            if (p != b.leading_label()) {
                ++zero.checked;
                if (!multiply(q, d, pe).empty()) ++zero.failed;
            }
        }
    }
    ideal.identities = {unit_left, unit_right, zero};
    check_ideal_property(ideal);
    finish_codimension(ideal);
    return ideal;
}

// ---------------------------------------------------------------------------
// Bialgebra compatibility

bool bialgebra_criterion(const Quiver& q, std::optional<PathPair>* witness) {
    for (int a = 0; a < q.arrow_count(); ++a) {
        const auto& x = q.arrow(a);
        if (!q.out_arrows(x.target).empty()) {
            if (witness) *witness = PathPair{Path::arrow(q, a), Path::arrow(q, q.out_arrows(x.target)[0])};
            return false;
        }
        for (int b = a + 1; b < q.arrow_count(); ++b) {
            if (q.arrow(b).source == x.source && q.arrow(b).target == x.target) {
                if (witness) *witness = PathPair{Path::arrow(q, a), Path::arrow(q, b)};
                return false;
            }
        }
    }
    return true;
}

BialgebraReport bialgebra_check(const Quiver& q, std::size_t max_len) {
    BialgebraReport r;
    r.criterion = bialgebra_criterion(q, &r.criterion_witness);
    auto paths = enumerate_paths(q, max_len).paths;
    std::vector<Tensor<Rational>> deltas;
    for (const auto& p : paths) deltas.push_back(comultiply(q, Element<Rational>(p)));
    r.multiplicative = true;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = 0; j < paths.size(); ++j) {
            ++r.pairs_checked;
            auto lhs = comultiply(q, multiply(q, Element<Rational>(paths[i]),
                                              Element<Rational>(paths[j])));
            if (lhs != multiply(q, deltas[i], deltas[j])) {
                if (r.multiplicative) r.witness = PathPair{paths[i], paths[j]};
                r.multiplicative = false;
            }
        }
    }
    return r;
}

}  // namespace quiveralg
