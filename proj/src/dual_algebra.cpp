#include "quiveralg/dual_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace quiveralg {

Functional Functional::finite(Element<Rational> values) {
    Functional f;
    f.kind_ = Kind::Finite;
    f.values_ = std::move(values);
    return f;
}

Functional Functional::gamma() {
    Functional f;
    f.kind_ = Kind::Gamma;
    return f;
}

Functional Functional::eval(const Quiver& q, const Rational& lambda) {
    auto cycle = find_simple_cycle(q);
    if (!cycle) throw InputError("rule:eval needs a quiver with an oriented cycle");
    Functional f;
    f.kind_ = Kind::Eval;
    f.lambda_ = lambda;
    f.cycle_ = *cycle;
    return f;
}

Functional Functional::starts_at(int vertex) {
    Functional f;
    f.kind_ = Kind::StartsAt;
    f.vertex_ = vertex;
    return f;
}

Functional Functional::prefixed_by(Path prefix) {
    Functional f;
    f.kind_ = Kind::PrefixedBy;
    f.prefix_ = std::move(prefix);
    return f;
}

Rational Functional::operator()(const Quiver& q, const Path& p) const {
    switch (kind_) {
        case Kind::Finite: return values_.coefficient(p);
        case Kind::Gamma: return Rational(1);
        case Kind::Eval: {
            auto on_cycle = [&](int a) {
                return std::find(cycle_.begin(), cycle_.end(), a) != cycle_.end();
            };
            if (p.is_vertex()) {
                bool hit = std::any_of(cycle_.begin(), cycle_.end(),
                                       [&](int a) { return q.arrow(a).source == p.source; });
                return hit ? Rational(1) : Rational(0);
            }
            if (!std::all_of(p.arrows.begin(), p.arrows.end(), on_cycle)) return Rational(0);
            Rational r(1);
            for (std::size_t i = 0; i < p.length(); ++i) r *= lambda_;
            return r;
        }
        case Kind::StartsAt: return p.source == vertex_ ? Rational(1) : Rational(0);
        case Kind::PrefixedBy: {
            if (p.source != prefix_.source || p.length() < prefix_.length()) return Rational(0);
            bool match = std::equal(prefix_.arrows.begin(), prefix_.arrows.end(), p.arrows.begin());
            return match ? Rational(1) : Rational(0);
        }
    }
    return Rational(0);
}

Rational Functional::operator()(const Quiver& q, const Element<Rational>& c) const {
    Rational s(0);
    for (const auto& [p, coeff] : c) s += coeff * (*this)(q, p);
    return s;
}

Functional Functional::restrict_to(const Quiver& q, const std::vector<Path>& paths) const {
    Element<Rational> values;
    for (const auto& p : paths) values.add(p, (*this)(q, p));
    return finite(std::move(values));
}

std::string Functional::describe(const Quiver& q) const {
    switch (kind_) {
        case Kind::Finite: {
            std::string s = "dual{";
            bool first = true;
            for (const auto& [p, c] : values_) {
                if (!first) s += ", ";
                first = false;
                s += path_to_string(q, p) + ":" + to_string(c);
            }
            return s + "}";
        }
        case Kind::Gamma: return "rule:gamma";
        case Kind::Eval: return "rule:eval(" + to_string(lambda_) + ")";
        case Kind::StartsAt: return "rule:starts-at(" + q.vertex_label(vertex_) + ")";
        case Kind::PrefixedBy: return "rule:prefixed-by(" + path_to_string(q, prefix_) + ")";
    }
    return {};
}

Functional parse_functional(const Quiver& q, const std::string& raw) {
    std::string text = raw;
    text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
    if (text == "rule:gamma") return Functional::gamma();
    auto inner = [&](const std::string& head) -> std::optional<std::string> {
        if (text.rfind(head, 0) == 0 && text.back() == ')') {
            return text.substr(head.size(), text.size() - head.size() - 1);
        }
        return std::nullopt;
    };
    if (auto arg = inner("rule:eval(")) return Functional::eval(q, parse_rational(*arg));
    if (auto arg = inner("rule:starts-at(")) return Functional::starts_at(q.vertex(*arg));
    if (auto arg = inner("rule:prefixed-by(")) {
        std::string body = *arg;
        if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
            body = body.substr(1, body.size() - 2);
        }
        return Functional::prefixed_by(parse_path(q, body));
    }
    if (text.rfind("dual{", 0) == 0 && text.back() == '}') {
        Element<Rational> values;
        std::string body = text.substr(5, text.size() - 6);
        std::stringstream ss(body);
        std::string entry;
        while (std::getline(ss, entry, ',')) {
            if (entry.empty()) continue;
            auto colon = entry.rfind(':');
            if (colon == std::string::npos || entry.front() != '[' || entry[colon - 1] != ']') {
                throw InputError("bad functional entry '" + entry + "' (expected [path]:value)");
            }
            values.add(parse_path(q, entry.substr(1, colon - 2)),
                       parse_rational(entry.substr(colon + 1)));
        }
        return Functional::finite(std::move(values));
    }
    throw InputError("unrecognised functional '" + raw + "'");
}

Rational convolve_at(const Quiver& q, const Functional& f, const Functional& g, const Path& p) {
    Rational s(0);
    for (const auto& [a, b] : deconcatenations(q, p)) {
        Rational fa = f(q, a);
        if (fa != 0) s += fa * g(q, b);
    }
    return s;
}

Functional convolve(const Quiver& q, const Functional& f, const Functional& g, std::size_t max_len) {
    Element<Rational> values;
    for (const auto& p : enumerate_paths(q, max_len).paths) values.add(p, convolve_at(q, f, g, p));
    return Functional::finite(std::move(values));
}

Functional psi_embed(const Element<Rational>& a) { return Functional::finite(a); }

Functional hit_action(const Quiver& q, const Functional& c, const Functional& f, Side side,
                      std::size_t max_len) {
    return side == Side::Left ? convolve(q, f, c, max_len) : convolve(q, c, f, max_len);
}

std::string to_string(RationalKind k) {
    switch (k) {
        case RationalKind::Rational: return "rational";
        case RationalKind::RationalInfiniteSupport: return "rational_with_infinite_support";
        case RationalKind::Unknown: return "unknown";
    }
    return {};
}

bool verify_certificate(const Quiver& q, const Functional& f, const RationalCertificate& cert,
                        const std::vector<Path>& duals, const std::vector<Path>& evaluation_paths) {
    for (const auto& d : duals) {
        const Functional dstar = Functional::finite(Element<Rational>(d));
        std::vector<Rational> weights;
        for (const auto& c : cert.elements) weights.push_back(c.coefficient(d));
        for (const auto& p : evaluation_paths) {
            Rational lhs = convolve_at(q, dstar, f, p);
            Rational rhs(0);
            for (std::size_t i = 0; i < weights.size(); ++i) {
                if (weights[i] != 0) rhs += weights[i] * cert.functionals[i](q, p);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

RationalCertificate psi_certificate(const Quiver& q, const Path& p, std::size_t max_len) {
    RationalCertificate cert;
    for (const auto& r : paths_ending_at(q, p.source, max_len)) {
        cert.elements.emplace_back(r);
        cert.functionals.push_back(Functional::finite(Element<Rational>(concat(r, p))));
    }
    return cert;
}

RationalVerdict is_rational_left(const Quiver& q, const Functional& f, std::size_t max_len) {
    RationalVerdict v;
    v.exact = is_acyclic(q);
    const std::size_t horizon = v.exact ? longest_path_length(q) : max_len;
    const auto paths = enumerate_paths(q, horizon).paths;

    // Column t is t*·f: (t*·f)(tb) = f(b).
    std::vector<Element<Rational>> columns;
    for (const auto& t : paths) {
        Element<Rational> col;
        for (const auto& p : paths) {
            if (p.source != t.source || p.length() < t.length()) continue;
            if (!std::equal(t.arrows.begin(), t.arrows.end(), p.arrows.begin())) continue;
            col.add(p, f(q, subpath(q, p, t.length(), p.length())));
        }
        columns.push_back(std::move(col));
    }
    EchelonBasis<Path, Rational> echelon;
    std::vector<std::size_t> pivots;
    std::vector<std::optional<std::vector<Rational>>> relations;
    for (const auto& col : columns) {
        auto rel = echelon.insert(col);
        if (!rel) pivots.push_back(relations.size());
        relations.push_back(std::move(rel));
    }
    RationalCertificate cert;
    for (std::size_t j : pivots) {
        Element<Rational> c(paths[j]);
        for (std::size_t t = 0; t < paths.size(); ++t) {
            if (relations[t] && j < relations[t]->size()) c.add(paths[t], -(*relations[t])[j]);
        }
        cert.elements.push_back(std::move(c));
        cert.functionals.push_back(Functional::finite(columns[j]));
    }
    v.verified = verify_certificate(q, f, cert, paths, paths);
    v.dual_basis_checked = paths.size();
    v.kind = RationalKind::Rational;
    v.certificate = std::move(cert);
    v.explanation = v.exact ? "finite-dimensional coalgebra; certificate of size " +
                                  std::to_string(pivots.size())
                            : "certificate within paths of length <= " + std::to_string(horizon);
    return v;
}

RationalVerdict is_rational_left(const QuiverFamily& family, const Functional& f, int level) {
    RationalVerdict v;
    const Quiver q = family.truncate(level);
    const auto facts = family.facts();
    const auto paths = enumerate_paths(q, static_cast<std::size_t>(level)).paths;
    RationalCertificate cert;
    if (f.kind() == Functional::Kind::StartsAt && facts.finitely_many_paths_end) {
        for (const auto& r : paths_ending_at(q, f.vertex(), static_cast<std::size_t>(level))) {
            cert.elements.emplace_back(r);
            cert.functionals.push_back(Functional::prefixed_by(r));
        }
        v.kind = RationalKind::RationalInfiniteSupport;
        v.explanation = "d*c* = Σ_j d*(r_j) c*_j over the " + std::to_string(cert.elements.size()) +
                        " paths r_j ending at " + q.vertex_label(f.vertex());
    } else if (f.has_finite_support() && facts.finitely_many_paths_end) {
        for (const auto& [p, a] : f.values()) {
            auto part = psi_certificate(q, p, static_cast<std::size_t>(level));
            for (std::size_t i = 0; i < part.elements.size(); ++i) {
                cert.elements.push_back(part.elements[i]);
                Element<Rational> scaled = part.functionals[i].values();
                scaled *= a;
                cert.functionals.push_back(Functional::finite(std::move(scaled)));
            }
        }
        v.kind = RationalKind::Rational;
        v.explanation = "finite support; c*p* = Σ c*(r_i)(r_i p)*";
    } else {
        v.kind = RationalKind::Unknown;
        v.explanation = "no certificate construction for " + f.describe(q) + " on " + family.name();
        return v;
    }
    v.verified = verify_certificate(q, f, cert, paths, paths);
    v.dual_basis_checked = paths.size();
    v.certificate = std::move(cert);
    return v;
}

GammaMembership gamma_membership(const Quiver& q) {
    GammaMembership m;
    if (!is_acyclic(q)) {
        m.explanation = "an oriented cycle gives infinitely many paths; γ has infinite support";
        return m;
    }
    Element<Rational> all;
    for (const auto& p : all_paths(q)) all.add(p, Rational(1));
    m.member = true;
    m.explanation = "γ = ψ(sum of all " + std::to_string(all.size()) + " paths)";
    m.preimage = std::move(all);
    return m;
}

GammaMembership gamma_membership(const QuiverFamily& family) {
    GammaMembership m;
    m.member = family.facts().finitely_many_paths;
    m.explanation = m.member ? family.name() + " has finitely many paths"
                             : family.name() + " has infinitely many paths; γ has infinite support";
    return m;
}

ReflexivityVerdict reflexivity_verdict(const Quiver& q) {
    ReflexivityVerdict r;
    r.reflexive = is_acyclic(q);
    r.explanation = r.reflexive ? "finite quiver without oriented cycles: K[Γ] finite-dimensional"
                                : "oriented cycle: K[Γ] infinite-dimensional, proper only";
    return r;
}

ReflexivityVerdict reflexivity_verdict(const QuiverFamily& family) {
    ReflexivityVerdict r;
    auto facts = family.facts();
    r.reflexive = facts.finite && facts.acyclic;
    if (r.reflexive) {
        r.explanation = family.name() + " is finite and acyclic";
    } else if (!facts.finite) {
        r.explanation = family.name() + " has infinitely many vertices or arrows: proper only";
    } else {
        r.explanation = family.name() + " has an oriented cycle: proper only";
    }
    return r;
}

}  // namespace quiveralg
