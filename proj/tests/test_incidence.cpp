#include "oracle.hpp"

#include "quiveralg/incidence.hpp"

#include <doctest.h>

using namespace quiveralg;

namespace {

std::size_t oracle_interval_count(const Poset& p) {
    std::size_t n = 0;
    for (int x = 0; x < p.size(); ++x) {
        for (int y = 0; y < p.size(); ++y) n += p.leq(x, y);
    }
    return n;
}

// Möbius function by its defining recursion.
Rational mobius(const Poset& p, int x, int y) {
    if (x == y) return 1;
    if (!p.leq(x, y)) return 0;
    Rational s = 0;
    for (int z = 0; z < p.size(); ++z) {
        if (p.leq(x, z) && p.less(z, y)) s -= mobius(p, x, z);
    }
    return s;
}

}  // namespace

TEST_SUITE("incidence") {

TEST_CASE("order closure and interval counts") {
    auto d = diamond_poset();
    CHECK(d.size() == 4);
    CHECK(intervals(d).size() == 9);
    CHECK(intervals(chain_poset(5)).size() == 15);
    CHECK(intervals(antichain_poset(4)).size() == 4);
    CHECK(intervals(boolean_lattice(3)).size() == 27);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_poset(rng, 1 + trial % 6, 0.4);
        CHECK(intervals(p).size() == oracle_interval_count(p));
    }
}

TEST_CASE("posets up to isomorphism") {
    const std::vector<std::size_t> expected = {1, 2, 5, 16, 63};
    for (int n = 1; n <= 5; ++n) CHECK(posets_up_to_iso(n).size() == expected[n - 1]);
}

TEST_CASE("incidence comultiplication is coassociative and counital") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_poset(rng, 5, 0.5);
        auto delta = [&](const Interval& i) { return incidence_delta(p, i); };
        auto eps = [](const Interval& i) { return Rational(i.first == i.second ? 1 : 0); };
        IncidenceElement<> c;
        for (const auto& i : intervals(p)) c.add(i, Rational(static_cast<int>(rng() % 5) - 2));
        CHECK(is_coassociative_on(c, delta));
        CHECK(is_counital_on(c, delta, eps));
        CHECK(incidence_counit(c) == [&] {
            Rational s = 0;
            for (const auto& [i, k] : c) s += eps(i) * k;
            return s;
        }());
    }
}

TEST_CASE("zeta and Möbius are mutually inverse") {
    for (const auto& p : {diamond_poset(), chain_poset(4), boolean_lattice(3)}) {
        IncidenceElement<> zeta, mu;
        for (const auto& i : intervals(p)) {
            zeta.add(i, Rational(1));
            mu.add(i, mobius(p, i.first, i.second));
        }
        CHECK(incidence_convolve(p, zeta, mu) == incidence_identity(p));
        CHECK(incidence_convolve(p, mu, zeta) == incidence_identity(p));
    }
}

TEST_CASE("phi sends intervals to sums of Hasse paths") {
    auto d = diamond_poset();
    auto h = hasse_quiver(d);
    CHECK(h.arrow_count() == 4);
    const int bottom = *d.find("0"), top = *d.find("1");
    auto img = phi_embed(d, h, IncidenceElement<>(Interval{bottom, top}));
    CHECK(img.size() == 2);
    auto r = phi_embedding_check(d);
    CHECK(r.phi_injective);
    CHECK(r.phi_coalgebra_morphism);
    CHECK_FALSE(r.phi_surjective);
    CHECK_FALSE(r.unique_paths);
    auto c = phi_embedding_check(chain_poset(4));
    CHECK(c.phi_surjective);
    CHECK(c.unique_paths);
}

TEST_CASE("phi is an injective coalgebra map on every poset up to five elements") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : posets_up_to_iso(n)) {
            auto r = phi_embedding_check(p);
            CHECK(r.phi_injective);
            CHECK(r.phi_coalgebra_morphism);
            CHECK(r.agree());
        }
    }
}

TEST_CASE("finite dual of FIA recovers the incidence coalgebra") {
    for (const auto& p : {diamond_poset(), chain_poset(3), antichain_poset(3), boolean_lattice(2)}) {
        auto r = theta_incidence_iso_check(p);
        CHECK(r.isomorphism);
        CHECK(r.coalgebra_morphism);
        CHECK(r.dim == intervals(p).size());
        CHECK(fia_algebra(p).dim() == r.dim);
    }
}

TEST_CASE("semiperfect certificates") {
    auto r = incidence_semiperfect_check(boolean_lattice(3));
    CHECK(r.semiperfect);
    CHECK(r.certificates == r.certificates_verified);
    CHECK(r.certificates > 0);
    CHECK_FALSE(incidence_semiperfect_check(PosetFamily::NaturalChain).semiperfect);
    auto a = incidence_semiperfect_check(PosetFamily::NaturalAntichain);
    CHECK(a.semiperfect);
    CHECK(a.certificates == a.certificates_verified);
    CHECK(parse_poset_family("chain") == PosetFamily::NaturalChain);
    CHECK_THROWS_AS(parse_poset_family("tree"), InputError);
}

TEST_CASE("poset text format") {
    auto p = parse_poset_text("poset\nelement a\nelement b\nelement c\ncover a b\ncover b c\n");
    CHECK(p.leq(0, 2));
    CHECK(intervals(parse_poset_text(format_poset_text(p))).size() == 6);
    auto message = [](const std::string& t) {
        try {
            parse_poset_text(t);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("poset\nelement a\nelement b\ncover a b\ncover b a\n") != "");
    CHECK(message("poset\nelement a\ncover a z\n").find("line 3") != std::string::npos);
    CHECK(message("poset\nelement a\nelement a\n").find("line 3") != std::string::npos);
    CHECK(message("poset\nelement a\ncover a a\n") != "");
}

}
