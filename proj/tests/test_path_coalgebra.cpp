#include "oracle.hpp"

#include "quiveralg/path_coalgebra.hpp"

#include <doctest.h>

using namespace quiveralg;

namespace {

Quiver line3() {
    Quiver q;
    for (auto v : {"u", "v", "w"}) q.add_vertex(v);
    q.add_arrow("x", "u", "v");
    q.add_arrow("y", "v", "w");
    return q;
}

template <class Scalar>
Element<Scalar> random_element(std::mt19937_64& rng, const Quiver& q, std::size_t len,
                               std::uint64_t p = 0) {
    auto paths = enumerate_paths(q, len).paths;
    std::uniform_int_distribution<int> coeff(-3, 3);
    Element<Scalar> e;
    for (const auto& path : paths) e.add(path, from_rational<Scalar>(Rational(coeff(rng)), p));
    return e;
}

}  // namespace

TEST_SUITE("path_coalgebra") {

TEST_CASE("deconcatenation of x.y") {
    Quiver q = line3();
    auto d = comultiply(q, parse_element(q, "[x.y]"));
    CHECK(format_tensor(d, q, q) == "[u]⊗[x.y] + [x]⊗[y] + [x.y]⊗[w]");
    CHECK(counit(parse_element(q, "2*[u] - [v] + 5*[x]")) == 1);
}

TEST_CASE("deconcatenations count and reassemble") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        Quiver q = random_quiver(rng, 3, 4);
        for (const auto& p : enumerate_paths(q, 4).paths) {
            auto splits = deconcatenations(q, p);
            CHECK(splits.size() == p.length() + 1);
            for (const auto& [a, b] : splits) CHECK(*compose_paths(q, a, b) == p);
        }
    }
}

TEST_CASE("coassociativity and counit on random elements over Q and Fp") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        Quiver q = random_quiver(rng, 1 + trial % 4, trial % 5);
        auto delta_q = [&](const Path& p) { return comultiply(q, Element<Rational>(p)); };
        auto eps_q = [](const Path& p) { return Rational(p.is_vertex() ? 1 : 0); };
        auto e = random_element<Rational>(rng, q, 3);
        CHECK(is_coassociative_on(e, delta_q));
        CHECK(is_counital_on(e, delta_q, eps_q));

        auto delta_p = [&](const Path& p) { return comultiply(q, Element<Zp>(p, Zp(1, 5))); };
        auto eps_p = [](const Path& p) { return Zp(p.is_vertex() ? 1 : 0, 5); };
        auto f = random_element<Zp>(rng, q, 3, 5);
        CHECK(is_coassociative_on(f, delta_p));
        CHECK(is_counital_on(f, delta_p, eps_p));
    }
}

TEST_CASE("element syntax round trips") {
    Quiver q = line3();
    for (const char* text : {"[u]", "-[x.y]", "3*[x] - 1/2*[u]", "[u] + [v] + [w]"}) {
        auto e = parse_element(q, text);
        CHECK(parse_element(q, format_combination(e, q)) == e);
    }
    CHECK(format_combination(parse_element(q, "[x] - [x]"), q) == "0");
    CHECK_THROWS_AS(parse_element(q, "[y.x]"), InputError);
    CHECK_THROWS_AS(parse_element(q, "3*"), InputError);
    CHECK_THROWS_AS(parse_element(q, "[q]"), InputError);
    CHECK_THROWS_AS(parse_element(q, "2 [x]"), InputError);
}

TEST_CASE("subcoalgebra generated by a path is the span of its subpaths") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Quiver q = random_acyclic_quiver(rng, 4, 5);
        for (const auto& p : all_paths(q)) {
            auto closure = subcoalgebra_closure(q, std::vector<Element<Rational>>{Element<Rational>(p)});
            auto sub = subpaths(q, p);
            CHECK(closure.dim() == sub.size());
            for (const auto& s : sub) CHECK(closure.contains(Element<Rational>(s)));
            CHECK(is_subcoalgebra(q, closure));
        }
    }
}

TEST_CASE("sums of paths are not subcoalgebras unless closed") {
    Quiver q = line3();
    Subspace<Path, Rational> s(std::vector<Element<Rational>>{parse_element(q, "[x]")});
    CHECK_FALSE(is_subcoalgebra(q, s));
    Subspace<Path, Rational> t(std::vector<Element<Rational>>{parse_element(q, "[u]"), parse_element(q, "[v]"),
                                                               parse_element(q, "[x]")});
    CHECK(is_subcoalgebra(q, t));
}

TEST_CASE("wedge of grouplikes") {
    Quiver q = line3();
    auto ku = Subspace<Path, Rational>(std::vector<Element<Rational>>{parse_element(q, "[u]")});
    auto kv = Subspace<Path, Rational>(std::vector<Element<Rational>>{parse_element(q, "[v]")});
    auto uu = wedge(q, ku, ku, 2);
    CHECK(uu.exact);
    CHECK(uu.space.dim() == 1);
    auto uv = wedge(q, ku, kv, 2);
    CHECK(uv.space.dim() == 3);  // u, v, x
    CHECK(uv.space.contains(parse_element(q, "[x]")));

    Quiver loop;
    loop.add_vertex("v");
    loop.add_arrow("x", "v", "v");
    auto kl = Subspace<Path, Rational>(std::vector<Element<Rational>>{parse_element(loop, "[v]")});
    auto w = wedge(loop, kl, kl, 4);
    CHECK_FALSE(w.exact);
    CHECK(w.space.dim() == 2);  // v and the loop itself
}

TEST_CASE("hull spans and the interval identity") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 15; ++trial) {
        Quiver q = random_acyclic_quiver(rng, 4, 5);
        const std::size_t len = longest_path_length(q);
        for (int u = 0; u < q.vertex_count(); ++u) {
            for (int v = 0; v < q.vertex_count(); ++v) {
                auto right = hull_span(q, u, Side::Right, len);
                auto left = hull_span(q, v, Side::Left, len);
                std::set<Path> both;
                std::set<Path> r(right.begin(), right.end());
                for (const auto& p : left) {
                    if (r.count(p)) both.insert(p);
                }
                auto between = paths_between(q, u, v, len);
                CHECK(both == std::set<Path>(between.begin(), between.end()));
            }
        }
    }
    CHECK(grouplike_coradical(line3()).size() == 3);
}

}
