#include "oracle.hpp"

#include "quiveralg/quiver_algebra.hpp"

#include <doctest.h>

using namespace quiveralg;

namespace {

Quiver quiver_of(const std::string& text) { return parse_quiver_text(text).quiver; }

Element<Rational> random_element(std::mt19937_64& rng, const Quiver& q, std::size_t len) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    Element<Rational> e;
    for (const auto& p : enumerate_paths(q, len).paths) e.add(p, Rational(coeff(rng)));
    return e;
}

// Product straight from the definition, on raw arrow words.
Element<Rational> oracle_multiply(const Quiver& q, const Element<Rational>& a, const Element<Rational>& b) {
    Element<Rational> out;
    for (const auto& [p, c] : a) {
        for (const auto& [r, d] : b) {
            if (p.target != r.source) continue;
            Path joined{p.source, r.target, p.arrows};
            joined.arrows.insert(joined.arrows.end(), r.arrows.begin(), r.arrows.end());
            out.add(joined, c * d);
        }
    }
    (void)q;
    return out;
}

}  // namespace

TEST_SUITE("quiver_algebra") {

TEST_CASE("multiplication matches concatenation oracle and is associative") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        Quiver q = random_quiver(rng, 1 + trial % 4, trial % 5);
        auto a = random_element(rng, q, 2), b = random_element(rng, q, 2), c = random_element(rng, q, 1);
        CHECK(multiply(q, a, b) == oracle_multiply(q, a, b));
        CHECK(multiply(q, multiply(q, a, b), c) == multiply(q, a, multiply(q, b, c)));
        auto e = local_unit(std::vector<Element<Rational>>{a, b});
        CHECK(multiply(q, e, a) == a);
        CHECK(multiply(q, a, e) == a);
    }
}

TEST_CASE("vertices are orthogonal idempotents") {
    Quiver q = quiver_of("quiver\nvertex u\nvertex v\narrow x u v\n");
    auto u = Element<Rational>(Path::vertex(0)), v = Element<Rational>(Path::vertex(1));
    CHECK(multiply(q, u, u) == u);
    CHECK(multiply(q, u, v).empty());
    auto x = Element<Rational>(Path::arrow(q, 0));
    CHECK(multiply(q, u, x) == x);
    CHECK(multiply(q, x, v) == x);
    CHECK(multiply(q, x, u).empty());
}

TEST_CASE("monomial closure contains every r.g.s") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 15; ++trial) {
        Quiver q = random_quiver(rng, 3, 4);
        if (q.arrow_count() == 0) continue;
        std::vector<Path> gens{Path::arrow(q, 0)};
        auto ideal = monomial_closure(q, gens, 4);
        for (const auto& p : enumerate_paths(q, 4).paths) {
            bool has = std::find(p.arrows.begin(), p.arrows.end(), 0) != p.arrows.end();
            CHECK(ideal.contains(q, p) == has);
            CHECK(ideal.paths.count(p) == static_cast<std::size_t>(has));
        }
    }
}

TEST_CASE("cofinite monomial ideal inside the augmentation ideal") {
    Quiver q = quiver_of("quiver\nvertex a\nvertex b\nvertex c\narrow x a b\narrow y b c\n");
    auto s = contains_cofinite_monomial_ideal(q, [](const Path& p) { return !p.is_vertex(); }, 4, 10);
    CHECK(s.verdict == SearchVerdict::YesExhaustive);
    CHECK(s.complement == std::set<Path>{Path::vertex(0), Path::vertex(1), Path::vertex(2)});

    auto none = contains_cofinite_monomial_ideal(q, [](const Path&) { return false; }, 4, 2);
    CHECK_FALSE(none.found());
}

TEST_CASE("on the loop no cofinite monomial ideal avoids every power") {
    Quiver loop = quiver_of("quiver\nvertex v\narrow x v v\n");
    auto s = contains_cofinite_monomial_ideal(loop, [](const Path&) { return false; }, 6, 10);
    CHECK(s.verdict == SearchVerdict::NoUpToBound);
    auto t = contains_cofinite_monomial_ideal(loop, [](const Path& p) { return p.length() >= 3; }, 6, 10);
    CHECK(t.found());
    CHECK(t.complement.size() == 3);
}

TEST_CASE("cycle counterexample ideals") {
    for (int n = 1; n <= 3; ++n) {
        Quiver c = QuiverFamily::parse("cycle:" + std::to_string(n)).truncate(0);
        auto ce = build_cycle_counterexample(c, 3 * n + 2);
        CHECK(ce.identities_hold());
        CHECK(ce.ideal_property);
        CHECK(ce.codimension == static_cast<std::size_t>(n * n));
        for (int a = 0; a < c.arrow_count(); ++a) CHECK_FALSE(ce.contains_path(Path::arrow(c, a)));
        auto search = contains_cofinite_monomial_ideal(
            c, [&](const Path& p) { return ce.contains_path(p); }, 3 * n + 2, 10);
        CHECK_FALSE(search.found());
    }
    Quiver line = quiver_of("quiver\nvertex a\nvertex b\narrow x a b\n");
    CHECK_THROWS(build_cycle_counterexample(line, 4));
}

TEST_CASE("multiple-arrow counterexample ideal") {
    auto ce = build_multiarrow_counterexample(QuiverFamily::parse("multiarrow"), 5);
    CHECK(ce.identities_hold());
    CHECK(ce.ideal_property);
    for (int a = 0; a < ce.quiver.arrow_count(); ++a) CHECK_FALSE(ce.contains_path(Path::arrow(ce.quiver, a)));
}

TEST_CASE("bialgebra criterion against exhaustive multiplicativity") {
    Quiver point = quiver_of("quiver\nvertex a\nvertex b\n");
    auto r0 = bialgebra_check(point, 3);
    CHECK(r0.criterion);
    CHECK(r0.multiplicative);

    // One arrow: the criterion holds, yet Δ(a·x) = Δ(x) = a⊗x + x⊗b while
    // Δ(a)Δ(x) = a⊗x. The stated equivalence fails here.
    Quiver arrow = quiver_of("quiver\nvertex a\nvertex b\narrow x a b\n");
    auto r1 = bialgebra_check(arrow, 3);
    CHECK(r1.criterion);
    CHECK_FALSE(r1.multiplicative);
    REQUIRE(r1.witness);
    CHECK(r1.witness->first == Path::vertex(0));
    CHECK(r1.witness->second == Path::arrow(arrow, 0));

    Quiver line = quiver_of("quiver\nvertex a\nvertex b\nvertex c\narrow x a b\narrow y b c\n");
    auto r2 = bialgebra_check(line, 3);
    CHECK_FALSE(r2.criterion);
    CHECK(r2.criterion_witness);
    CHECK_FALSE(r2.multiplicative);
}

}
