#pragma once

#include "quiveralg/quiver_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quiveralg {

/// An element of (KΓ)*: either finitely supported or one of a few closed-form
/// rules that make sense on every path of a quiver (or of any truncation of a
/// family). Vertex and arrow references are indices into the quiver the
/// functional was built for.
class Functional {
public:
    enum class Kind {
        Finite,     // values stored explicitly; zero elsewhere
        Gamma,      // 1 on every path
        Eval,       // λ^len on paths winding around a fixed cycle, 0 elsewhere
        StartsAt,   // 1 on every path starting at a vertex
        PrefixedBy  // 1 on every path beginning with a fixed path
    };

    Functional() = default;
    static Functional finite(Element<Rational> values);
    static Functional gamma();
    /// Uses the first simple cycle of `q` (the loop itself on the one-loop quiver).
    static Functional eval(const Quiver& q, const Rational& lambda);
    static Functional starts_at(int vertex);
    static Functional prefixed_by(Path prefix);

    Kind kind() const { return kind_; }
    bool has_finite_support() const { return kind_ == Kind::Finite; }
    const Element<Rational>& values() const { return values_; }
    const Rational& lambda() const { return lambda_; }
    int vertex() const { return vertex_; }
    const Path& prefix() const { return prefix_; }
    const std::vector<int>& cycle() const { return cycle_; }

    Rational operator()(const Quiver& q, const Path& p) const;
    /// Linear extension to elements of KΓ.
    Rational operator()(const Quiver& q, const Element<Rational>& c) const;

    /// The values on the given paths, as a finite functional.
    Functional restrict_to(const Quiver& q, const std::vector<Path>& paths) const;

    std::string describe(const Quiver& q) const;

private:
    Kind kind_ = Kind::Finite;
    Element<Rational> values_;
    Rational lambda_{0};
    int vertex_ = 0;
    Path prefix_;
    std::vector<int> cycle_;
};

/// `dual{[p]:3, [q]:-1}`, `rule:gamma`, `rule:eval(2)`, `rule:starts-at(v)`.
Functional parse_functional(const Quiver& q, const std::string& text);

/// (f·g)(p) = Σ_{qr=p} f(q) g(r).
Rational convolve_at(const Quiver& q, const Functional& f, const Functional& g, const Path& p);
/// f·g tabulated on every path of length <= max_len.
Functional convolve(const Quiver& q, const Functional& f, const Functional& g, std::size_t max_len);

/// ψ(a)(q) = coefficient of q in a.
Functional psi_embed(const Element<Rational>& a);

/// Left hit c* ⇀ f = f·c*; right hit f ↼ c* = c*·f.
Functional hit_action(const Quiver& q, const Functional& c, const Functional& f, Side side,
                      std::size_t max_len);

/// Finite families with d*·f = Σ d*(c_i) f_i for every d*.
struct RationalCertificate {
    std::vector<Element<Rational>> elements;
    std::vector<Functional> functionals;
};

enum class RationalKind { Rational, RationalInfiniteSupport, Unknown };
std::string to_string(RationalKind k);

struct RationalVerdict {
    RationalKind kind = RationalKind::Unknown;
    std::optional<RationalCertificate> certificate;
    bool verified = false;
    bool exact = false;  // false when checked only inside a truncation
    std::size_t dual_basis_checked = 0;
    std::string explanation;
};

/// Checks d*·f = Σ d*(c_i) f_i for d* = q* over `duals`, evaluating both sides
/// on every path in `evaluation_paths`.
bool verify_certificate(const Quiver& q, const Functional& f, const RationalCertificate& cert,
                        const std::vector<Path>& duals, const std::vector<Path>& evaluation_paths);

/// The certificate c*·p* = Σ c*(r_i) (r_i p)* over the paths r_i ending at s(p).
RationalCertificate psi_certificate(const Quiver& q, const Path& p, std::size_t max_len);

/// Finite quivers: certificate from a rank factorisation of q* ↦ q*·f
/// (pivot columns in path order). Exact for acyclic quivers; computed in
/// the truncation max_len otherwise.
RationalVerdict is_rational_left(const Quiver& q, const Functional& f, std::size_t max_len);
/// Families: starts-at(v) on a family with finitely many paths ending at v
/// gets the certificate c*_j = indicator of the paths r_j p_i; finite-support
/// functionals get psi certificates. Checked on the truncation `level`.
RationalVerdict is_rational_left(const QuiverFamily& family, const Functional& f, int level);

struct GammaMembership {
    bool member = false;
    std::optional<Element<Rational>> preimage;  // all paths, when finitely many
    std::string explanation;
};
GammaMembership gamma_membership(const Quiver& q);
GammaMembership gamma_membership(const QuiverFamily& family);

struct ReflexivityVerdict {
    bool proper = true;
    bool reflexive = false;
    std::string explanation;
};
ReflexivityVerdict reflexivity_verdict(const Quiver& q);
ReflexivityVerdict reflexivity_verdict(const QuiverFamily& family);

}  // namespace quiveralg
