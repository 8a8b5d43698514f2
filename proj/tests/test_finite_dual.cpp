#include "oracle.hpp"

#include "quiveralg/finite_dual.hpp"

#include <doctest.h>

using namespace quiveralg;

namespace {

Quiver quiver_of(const std::string& text) { return parse_quiver_text(text).quiver; }

VectorQ random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    VectorQ v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(i)) = coeff(rng);
    return v;
}

}  // namespace

TEST_SUITE("finite_dual") {

TEST_CASE("path algebra of a finite acyclic quiver") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 15; ++trial) {
        Quiver q = random_acyclic_quiver(rng, 1 + trial % 4, trial % 5);
        auto a = path_algebra(q);
        CHECK(a.dim() == all_paths(q).size());
        CHECK(a.idempotents().size() == static_cast<std::size_t>(q.vertex_count()));
        auto x = random_vector(rng, a.dim()), y = random_vector(rng, a.dim()), z = random_vector(rng, a.dim());
        CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
        auto d = dual_coalgebra(a);
        CHECK(d.coassociative());
        CHECK(d.counital());
    }
}

TEST_CASE("algebra text format") {
    auto a = parse_algebra_text(
        "algebra\nbasis e f n\nidempotents e f\nmul e e = [e]\nmul f f = [f]\nmul e n = [n]\nmul n f = [n]\n");
    CHECK(a.dim() == 3);
    CHECK(dual_coalgebra(a).coassociative());
    // e, f not summing to a unit.
    CHECK_THROWS_AS(parse_algebra_text("algebra\nbasis e n\nidempotents e\nmul e e = [e]\n"), InputError);
    // (a a) a = b a = a but a (a a) = a b = 0.
    CHECK_THROWS_AS(parse_algebra_text("algebra\nbasis e a b\nidempotents e\nmul e e = [e]\n"
                                       "mul e a = [a]\nmul a e = [a]\nmul e b = [b]\nmul b e = [b]\n"
                                       "mul a a = [b]\nmul b a = [a]\n"),
                    InputError);
    try {
        parse_algebra_text("algebra\nbasis e\nidempotents e\nmul e q = [e]\n");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("every functional on a finite-dimensional algebra lies in the finite dual") {
    std::mt19937_64 rng(2);
    Quiver q = quiver_of("quiver\nvertex a\nvertex b\nvertex c\narrow x a b\narrow y b c\narrow z a c\n");
    auto a = path_algebra(q);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_vector(rng, a.dim());
        auto w = is_in_finite_dual(a, f);
        CHECK(w.member);
        auto c = finite_dual_characterisations(a, f);
        CHECK(c.agree());
        CHECK(c.kernel_contains_cofinite_ideal);
    }
}

TEST_CASE("theta is an isomorphism exactly on finite acyclic quivers") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 15; ++trial) {
        Quiver q = random_acyclic_quiver(rng, 1 + trial % 4, trial % 5);
        auto r = theta_iso_check(q, 6, 10);
        CHECK(r.isomorphism);
        CHECK(r.coalgebra_morphism);
        CHECK(r.theta_rank == all_paths(q).size());
        CHECK(r.dual_dim == r.coalgebra_dim);
    }
    for (const char* spec : {"loop", "cycle:2", "cycle:3"}) {
        Quiver q = QuiverFamily::parse(spec).truncate(6);
        auto r = theta_iso_check(q, 6, 10);
        CHECK_FALSE(r.isomorphism);
        REQUIRE(r.witness);
        CHECK(r.witness->kind() == Functional::Kind::Eval);
        CHECK(r.witness->lambda() == 1);
        CHECK(r.witness_in_finite_dual);
        REQUIRE(r.witness_search);
        CHECK(r.witness_search->verdict == SearchVerdict::NoUpToBound);
    }
}

TEST_CASE("theta images carry a subpath-closed complement") {
    Quiver q = quiver_of("quiver\nvertex u\nvertex v\nvertex w\narrow x u v\narrow y v w\n");
    auto img = theta_embed(q, parse_element(q, "[x.y] - 2*[v]"));
    CHECK(img.functional(q, parse_path(q, "x.y")) == 1);
    CHECK(img.functional(q, parse_path(q, "v")) == -2);
    for (const auto& p : img.complement) {
        for (const auto& s : subpaths(q, p)) CHECK(img.complement.count(s));
    }
    auto search = is_in_theta_image(q, img.functional, 3, 10);
    CHECK(search.found());
}

TEST_CASE("eval on the loop lies in the finite dual") {
    for (int lambda : {0, 1, 2, -3}) {
        auto w = loop_eval_in_finite_dual(Rational(lambda), 8);
        CHECK(w.member);
        CHECK(w.codimension == 1);
        CHECK(w.checked > 0);
    }
}

}
