#include "oracle.hpp"

#include "quiveralg/representations.hpp"

#include <doctest.h>

using namespace quiveralg;

namespace {

Quiver quiver_of(const std::string& text) { return parse_quiver_text(text).quiver; }

// Nilpotence straight from the definition: every path of some length acts as
// zero. Only decidable this way when the answer is "yes" within `bound`.
bool oracle_nilpotent_within(const Representation& r, std::size_t bound) {
    for (std::size_t len = 0; len <= bound; ++len) {
        bool all_zero = true;
        for (const auto& p : enumerate_paths(r.quiver, len).paths) {
            if (p.length() == len && !is_zero_matrix<Rational>(r.path_map(p))) all_zero = false;
        }
        if (all_zero) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("representations") {

TEST_CASE("representations and modules round trip") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        Quiver q = random_quiver(rng, 1 + trial % 3, trial % 4);
        auto r = random_representation(rng, q, 3);
        auto m = module_from_rep(r);
        CHECK_NOTHROW(m.validate());
        CHECK(m.dim == r.total_dim());
        CHECK(module_round_trip(m));
        auto back = rep_from_module(m);
        CHECK(back.dims == r.dims);
    }
}

TEST_CASE("path action of the module matches the representation") {
    std::mt19937_64 rng(2);
    Quiver q = quiver_of("quiver\nvertex a\nvertex b\nvertex c\narrow x a b\narrow y b c\n");
    auto r = random_representation(rng, q, 2);
    auto m = module_from_rep(r);
    auto p = parse_path(q, "x.y");
    // Row-vector action: x·(x.y) on the a-block lands in the c-block as f_y f_x.
    CHECK(m.action(p).block(0, r.dims[0] + r.dims[1], r.dims[0], r.dims[2]) == r.path_map(p).transpose());
}

TEST_CASE("invalid modules are rejected") {
    Quiver q = quiver_of("quiver\nvertex a\nvertex b\narrow x a b\n");
    ModuleData m;
    m.quiver = q;
    m.dim = 1;
    m.vertex_action = {MatrixQ::Identity(1, 1), MatrixQ::Identity(1, 1)};
    m.arrow_action = {MatrixQ::Zero(1, 1)};
    CHECK_THROWS_AS(m.validate(), InputError);
}

TEST_CASE("nilpotence on acyclic quivers and the loop") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        Quiver q = random_acyclic_quiver(rng, 1 + trial % 4, trial % 5);
        auto r = random_representation(rng, q, 3);
        auto w = is_locally_nilpotent(r);
        CHECK(w.nilpotent);
        CHECK(oracle_nilpotent_within(r, 5));
    }
    Quiver loop = quiver_of("quiver\nvertex v\narrow x v v\n");
    auto one = parse_rep_text(loop, "rep\ndim v 1\nmap x 1\n");
    auto w = is_locally_nilpotent(one);
    CHECK_FALSE(w.nilpotent);
    REQUIRE(w.nonvanishing_path);
    auto jordan = parse_rep_text(loop, "rep\ndim v 2\nmap x 0 1 ; 0 0\n");
    auto wj = is_locally_nilpotent(jordan);
    CHECK(wj.nilpotent);
    CHECK(wj.length == 2);
}

TEST_CASE("nilpotence witness agrees with the oracle on random cyclic representations") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        Quiver q = random_quiver(rng, 1 + trial % 3, 1 + trial % 4);
        auto r = random_representation(rng, q, 2);
        auto w = is_locally_nilpotent(r);
        // The chain of images shrinks or repeats within total_dim + 1 steps.
        CHECK(w.nilpotent == oracle_nilpotent_within(r, static_cast<std::size_t>(r.total_dim()) + 1));
        if (!w.nilpotent) {
            REQUIRE(w.nonvanishing_path);
            CHECK_FALSE(is_zero_matrix<Rational>(r.path_map(*w.nonvanishing_path)));
        }
    }
}

TEST_CASE("cycle quotient modules are not locally nilpotent") {
    for (int n = 1; n <= 3; ++n) {
        auto m = cycle_quotient_module(n);
        CHECK(m.dim == n * n);
        CHECK_NOTHROW(m.validate());
        CHECK_FALSE(is_locally_nilpotent(rep_from_module(m)).nilpotent);
        CHECK_FALSE(cycle_quotient_monomial_check(n, 3 * n, 10).found());
    }
}

TEST_CASE("annihilators on acyclic quivers") {
    std::mt19937_64 rng(5);
    Quiver q = quiver_of("quiver\nvertex a\nvertex b\nvertex c\narrow x a b\narrow y b c\n");
    auto r = random_representation(rng, q, 2);
    VectorQ x = VectorQ::Zero(r.total_dim());
    if (r.total_dim() > 0) x(0) = 1;
    CHECK(annihilator_monomial_check(r, x, 4, 10).verdict == SearchVerdict::YesExhaustive);
}

TEST_CASE("modules and comodules over a finite-dimensional algebra") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        Quiver q = random_acyclic_quiver(rng, 3, 3);
        auto alg = path_algebra(q);
        auto rmod = module_from_rep(random_representation(rng, q, 2));
        auto left = left_module_over_opposite(rmod, alg);
        auto op = alg.opposite();
        CHECK_NOTHROW(validate_module(op, left));
        auto comod = comodule_from_module(op, left);
        auto checks = check_comodule(dual_coalgebra(op), comod);
        CHECK(checks.coassociative);
        CHECK(checks.counital);
        auto back = module_from_comodule(op, comod);
        CHECK(back.action == left.action);

        // Identity and zero maps are morphisms in both senses.
        const auto n = static_cast<Eigen::Index>(left.dim);
        auto [mod_id, comod_id] = morphism_naturality(op, left, left, MatrixQ::Identity(n, n));
        CHECK(mod_id);
        CHECK(comod_id);
        auto [mod_zero, comod_zero] = morphism_naturality(op, left, left, MatrixQ::Zero(n, n));
        CHECK(mod_zero);
        CHECK(comod_zero);
    }
}

TEST_CASE("random maps are morphisms for modules iff for comodules") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int trial = 0; trial < 20; ++trial) {
        Quiver q = random_acyclic_quiver(rng, 2, 2);
        auto alg = path_algebra(q).opposite();
        auto m = left_module_over_opposite(module_from_rep(random_representation(rng, q, 2)), path_algebra(q));
        auto n = left_module_over_opposite(module_from_rep(random_representation(rng, q, 2)), path_algebra(q));
        MatrixQ t(static_cast<Eigen::Index>(n.dim), static_cast<Eigen::Index>(m.dim));
        for (Eigen::Index i = 0; i < t.rows(); ++i) {
            for (Eigen::Index j = 0; j < t.cols(); ++j) t(i, j) = entry(rng);
        }
        auto [as_module, as_comodule] = morphism_naturality(alg, m, n, t);
        CHECK(as_module == as_comodule);
    }
}

TEST_CASE("representation text format") {
    Quiver q = quiver_of("quiver\nvertex a\nvertex b\narrow x a b\n");
    auto r = parse_rep_text(q, "rep\ndim a 2\ndim b 1\nmap x 1 -1\n");
    CHECK(r.total_dim() == 3);
    CHECK(parse_rep_text(q, format_rep_text(r)).maps == r.maps);
    auto message = [&](const std::string& t) {
        try {
            parse_rep_text(q, t);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("rep\ndim a 2\ndim b 1\nmap x 1\n").find("line 4") != std::string::npos);
    CHECK(message("rep\ndim z 1\n").find("line 2") != std::string::npos);
    CHECK(message("rep\ndim a -1\n") != "");
}

}
