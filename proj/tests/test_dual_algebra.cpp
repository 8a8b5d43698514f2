#include "oracle.hpp"

#include "quiveralg/dual_algebra.hpp"

#include <doctest.h>

using namespace quiveralg;

namespace {

Quiver quiver_of(const std::string& text) { return parse_quiver_text(text).quiver; }

Functional random_functional(std::mt19937_64& rng, const Quiver& q, std::size_t len) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    Element<Rational> v;
    for (const auto& p : enumerate_paths(q, len).paths) v.add(p, Rational(coeff(rng)));
    return Functional::finite(v);
}

// Splits p at every position by hand.
Rational oracle_convolve(const Quiver& q, const Functional& f, const Functional& g, const Path& p) {
    Rational sum = 0;
    for (std::size_t k = 0; k <= p.length(); ++k) {
        Path front{p.source, k == 0 ? p.source : q.arrow(p.arrows[k - 1]).target,
                   {p.arrows.begin(), p.arrows.begin() + static_cast<long>(k)}};
        Path back{front.target, p.target, {p.arrows.begin() + static_cast<long>(k), p.arrows.end()}};
        sum += f(q, front) * g(q, back);
    }
    return sum;
}

const char* kLine = "quiver\nvertex u\nvertex v\nvertex w\narrow x u v\narrow y v w\n";
const char* kLoop = "quiver\nvertex v\narrow x v v\n";

}  // namespace

TEST_SUITE("dual_algebra") {

TEST_CASE("convolution agrees with the splitting oracle") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        Quiver q = random_quiver(rng, 1 + trial % 3, trial % 4);
        auto f = random_functional(rng, q, 2), g = random_functional(rng, q, 3);
        auto fg = convolve(q, f, g, 3);
        for (const auto& p : enumerate_paths(q, 3).paths) {
            CHECK(fg(q, p) == oracle_convolve(q, f, g, p));
            CHECK(convolve_at(q, f, g, p) == oracle_convolve(q, f, g, p));
        }
    }
}

TEST_CASE("convolution is associative with the counit as identity") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 15; ++trial) {
        Quiver q = random_quiver(rng, 2, 3);
        auto f = random_functional(rng, q, 2), g = random_functional(rng, q, 2), h = random_functional(rng, q, 2);
        Element<Rational> eps;
        for (int v = 0; v < q.vertex_count(); ++v) eps.add(Path::vertex(v), Rational(1));
        auto unit = Functional::finite(eps);
        for (const auto& p : enumerate_paths(q, 3).paths) {
            CHECK(convolve(q, convolve(q, f, g, 3), h, 3)(q, p) == convolve(q, f, convolve(q, g, h, 3), 3)(q, p));
            CHECK(convolve(q, unit, f, 3)(q, p) == f(q, p));
            CHECK(convolve(q, f, unit, 3)(q, p) == f(q, p));
        }
    }
}

TEST_CASE("closed-form functionals") {
    Quiver loop = quiver_of(kLoop);
    auto e2 = Functional::eval(loop, 2);
    CHECK(e2(loop, parse_path(loop, "x.x.x")) == 8);
    CHECK(e2(loop, parse_path(loop, "v")) == 1);
    // (eval(λ)·eval(μ))(x^n) = Σ_k λ^k μ^(n-k).
    auto e3 = Functional::eval(loop, 3);
    auto prod = convolve(loop, e2, e3, 5);
    for (const auto& p : enumerate_paths(loop, 5).paths) {
        long long expected = 0;
        for (std::size_t k = 0; k <= p.length(); ++k) {
            long long term = 1;
            for (std::size_t i = 0; i < k; ++i) term *= 2;
            for (std::size_t i = k; i < p.length(); ++i) term *= 3;
            expected += term;
        }
        CHECK(prod(loop, p) == expected);
    }

    Quiver line = quiver_of(kLine);
    CHECK(Functional::gamma()(line, parse_path(line, "x.y")) == 1);
    CHECK(Functional::starts_at(1)(line, parse_path(line, "y")) == 1);
    CHECK(Functional::starts_at(1)(line, parse_path(line, "x")) == 0);
    CHECK(parse_functional(line, "rule:gamma").kind() == Functional::Kind::Gamma);
    CHECK(parse_functional(line, "dual{[x]:3, [u]:-1}")(line, parse_path(line, "x")) == 3);
    CHECK(parse_functional(line, "rule:starts-at(v)").vertex() == 1);
    CHECK_THROWS_AS(parse_functional(line, "rule:nope"), InputError);
    CHECK_THROWS_AS(parse_functional(line, "dual{[z]:1}"), InputError);
}

TEST_CASE("psi embeds K[Γ] as finitely supported functionals") {
    Quiver line = quiver_of(kLine);
    auto a = parse_element(line, "2*[x] - [u]");
    auto f = psi_embed(a);
    CHECK(f.has_finite_support());
    CHECK(f(line, parse_path(line, "x")) == 2);
    CHECK(f(line, parse_path(line, "u")) == -1);
    CHECK(f(line, parse_path(line, "y")) == 0);
}

TEST_CASE("hit actions") {
    Quiver line = quiver_of(kLine);
    auto g = Functional::gamma();
    auto ustar = psi_embed(parse_element(line, "[u]"));
    // Left hit u* ⇀ γ = γ·u* keeps paths ending at u; right hit keeps those starting at u.
    auto left = hit_action(line, ustar, g, Side::Left, 3);
    auto right = hit_action(line, ustar, g, Side::Right, 3);
    CHECK(left(line, parse_path(line, "u")) == 1);
    CHECK(left(line, parse_path(line, "x")) == 0);
    CHECK(right(line, parse_path(line, "x.y")) == 1);
    CHECK(right(line, parse_path(line, "y")) == 0);
}

TEST_CASE("dual basis functionals are rational with verified certificates") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Quiver q = random_acyclic_quiver(rng, 4, 5);
        const auto paths = all_paths(q);
        const std::size_t len = longest_path_length(q);
        for (const auto& p : paths) {
            auto f = psi_embed(Element<Rational>(p));
            auto v = is_rational_left(q, f, len);
            CHECK(v.kind == RationalKind::Rational);
            CHECK(v.verified);
            CHECK(verify_certificate(q, f, psi_certificate(q, p, len), paths, paths));
        }
    }
}

TEST_CASE("a wrong certificate is rejected") {
    Quiver line = quiver_of(kLine);
    const auto paths = all_paths(line);
    auto f = psi_embed(parse_element(line, "[x.y]"));
    auto cert = psi_certificate(line, parse_path(line, "x.y"), 2);
    REQUIRE_FALSE(cert.functionals.empty());
    cert.functionals[0] = psi_embed(parse_element(line, "[w]"));
    CHECK_FALSE(verify_certificate(line, f, cert, paths, paths));
}

TEST_CASE("infinite-support rational functional on the half-line") {
    auto family = QuiverFamily::parse("line1");
    auto v = is_rational_left(family, Functional::starts_at(2), 10);
    CHECK(v.kind == RationalKind::RationalInfiniteSupport);
    CHECK(v.verified);
    CHECK(v.dual_basis_checked > 0);
}

TEST_CASE("gamma and reflexivity") {
    Quiver line = quiver_of(kLine);
    auto m = gamma_membership(line);
    CHECK(m.member);
    REQUIRE(m.preimage);
    CHECK(m.preimage->size() == 6);
    CHECK(reflexivity_verdict(line).reflexive);
    Quiver loop = quiver_of(kLoop);
    CHECK_FALSE(gamma_membership(loop).member);
    CHECK_FALSE(reflexivity_verdict(loop).reflexive);
    CHECK_FALSE(reflexivity_verdict(QuiverFamily::parse("line1")).reflexive);
    CHECK_FALSE(gamma_membership(QuiverFamily::parse("line2")).member);
}

}
