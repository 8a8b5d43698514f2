#include "oracle.hpp"

#include "quiveralg/quiver.hpp"

#include <doctest.h>

using namespace quiveralg;

namespace {

Quiver make(const std::vector<std::string>& vertices,
            const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
    Quiver q;
    for (const auto& v : vertices) q.add_vertex(v);
    for (const auto& [a, s, t] : arrows) q.add_arrow(a, s, t);
    return q;
}

std::set<oracle::RawPath> as_raw(const std::vector<Path>& paths) {
    std::set<oracle::RawPath> out;
    for (const auto& p : paths) out.insert({p.source, p.target, p.arrows});
    return out;
}

}  // namespace

TEST_SUITE("quiver_core") {

TEST_CASE("path enumeration matches brute-force words") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 4;
        Quiver q = trial % 2 ? random_quiver(rng, n, trial % 5) : random_acyclic_quiver(rng, n, trial % 5);
        for (std::size_t len : {0u, 1u, 3u}) {
            auto list = enumerate_paths(q, len);
            CHECK(as_raw(list.paths) == oracle::all_words(q, len));
            CHECK(std::is_sorted(list.paths.begin(), list.paths.end()));
        }
    }
}

TEST_CASE("enumerated paths are subpath closed") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        Quiver q = random_quiver(rng, 3, 4);
        auto list = enumerate_paths(q, 4);
        std::set<Path> all(list.paths.begin(), list.paths.end());
        for (const auto& p : list.paths) {
            for (const auto& s : subpaths(q, p)) CHECK(all.count(s));
        }
    }
}

TEST_CASE("exhaustive flag only when acyclicity guarantees it") {
    Quiver line = make({"u", "v", "w"}, {{"x", "u", "v"}, {"y", "v", "w"}});
    CHECK(enumerate_paths(line, 2).exhaustive);
    CHECK_FALSE(enumerate_paths(line, 1).exhaustive);
    Quiver loop = make({"v"}, {{"x", "v", "v"}});
    CHECK_FALSE(enumerate_paths(loop, 20).exhaustive);
    CHECK(all_paths(line).size() == 6);
    CHECK_THROWS_AS(all_paths(loop), InputError);
}

TEST_CASE("acyclicity agrees with source-removal oracle") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Quiver q = random_quiver(rng, 1 + trial % 5, trial % 6);
        CHECK(is_acyclic(q) == oracle::acyclic(q));
        CHECK(check_recovery_condition(q).value == oracle::acyclic(q));
        CHECK(check_semiperfect_condition(q).value == oracle::acyclic(q));
        if (!is_acyclic(q)) {
            auto cycle = find_simple_cycle(q);
            REQUIRE(cycle);
            const auto& c = *cycle;
            for (std::size_t i = 0; i < c.size(); ++i) {
                CHECK(q.arrow(c[i]).target == q.arrow(c[(i + 1) % c.size()]).source);
            }
        }
    }
}

TEST_CASE("composition is associative where defined") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        Quiver q = random_quiver(rng, 3, 4);
        auto paths = enumerate_paths(q, 2).paths;
        for (const auto& a : paths) {
            for (const auto& b : paths) {
                auto ab = compose_paths(q, a, b);
                if (!ab) continue;
                for (const auto& c : paths) {
                    auto bc = compose_paths(q, b, c);
                    auto left = compose_paths(q, *ab, c);
                    CHECK(left.has_value() == bc.has_value());
                    if (left && bc) CHECK(*left == *compose_paths(q, a, *bc));
                }
            }
        }
    }
}

TEST_CASE("unique path condition") {
    CHECK(check_unique_path_condition(make({"u", "v", "w"}, {{"x", "u", "v"}, {"y", "v", "w"}})));
    CHECK_FALSE(check_unique_path_condition(
        make({"s", "a", "b", "t"}, {{"p", "s", "a"}, {"q", "s", "b"}, {"r", "a", "t"}, {"z", "b", "t"}})));
    CHECK_FALSE(check_unique_path_condition(make({"u", "v"}, {{"x", "u", "v"}, {"y", "u", "v"}})));
    CHECK_THROWS_AS(check_unique_path_condition(make({"v"}, {{"x", "v", "v"}})), InputError);
}

TEST_CASE("both finiteness clauses agree on every small quiver") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Quiver q = random_quiver(rng, 1 + trial % 4, trial % 6);
        auto r = check_prop32_equivalence(q);
        CHECK(r.agree);
        CHECK(r.clause_acyclic_finite_arrows == oracle::acyclic(q));
    }
    auto loop = check_prop32_equivalence(make({"v"}, {{"x", "v", "v"}}));
    CHECK_FALSE(loop.clause_acyclic_finite_arrows);
    CHECK_FALSE(loop.clause_finite_paths_on_finite_sets);
}

TEST_CASE("family verdicts") {
    CHECK_FALSE(check_recovery_condition(QuiverFamily::parse("loop")).value);
    CHECK_FALSE(check_recovery_condition(QuiverFamily::parse("cycle:3")).value);
    CHECK(check_recovery_condition(QuiverFamily::parse("star51")).value);
    CHECK(check_recovery_condition(QuiverFamily::parse("line1")).value);
    CHECK(check_recovery_condition(QuiverFamily::parse("line2")).value);
    CHECK_FALSE(check_recovery_condition(QuiverFamily::parse("multiarrow")).value);
    CHECK_FALSE(check_semiperfect_condition(QuiverFamily::parse("line1")).value);
    CHECK_FALSE(check_semiperfect_condition(QuiverFamily::parse("loop")).value);
    CHECK_THROWS_AS(QuiverFamily::parse("cycle:0"), InputError);
    CHECK_THROWS_AS(QuiverFamily::parse("torus"), InputError);
}

TEST_CASE("truncations exhibit the violating feature") {
    auto multi = QuiverFamily::parse("multiarrow");
    CHECK(multi.truncate(8).arrow_count() > multi.truncate(3).arrow_count());
    CHECK_FALSE(is_acyclic(QuiverFamily::parse("cycle:4").truncate(5)));
    CHECK(is_acyclic(QuiverFamily::parse("line2").truncate(5)));
}

TEST_CASE("quiver text format round trips and reports positions") {
    const std::string text = "quiver\n# comment\nvertex a\nvertex b\narrow x a b\narrow y b a\n";
    auto in = parse_quiver_text(text);
    CHECK(in.quiver.vertex_count() == 2);
    CHECK(in.quiver.arrow_count() == 2);
    CHECK(parse_quiver_text(format_quiver_text(in.quiver)).quiver == in.quiver);

    auto message = [](const std::string& t) {
        try {
            parse_quiver_text(t);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("quiver\nvertex a\narrow x a b\n").find("line 3") != std::string::npos);
    CHECK(message("quiver\nvertex a\nvertex a\n").find("line 3") != std::string::npos);
    CHECK(message("quiver\nvertex a.b\n").find("line 2") != std::string::npos);
    CHECK(message("quiver\nbogus\n").find("line 2, column 1") != std::string::npos);

    auto fam = parse_quiver_text("quiver\nfamily loop\ntruncate 4\n");
    REQUIRE(fam.family);
    CHECK(fam.truncation == 4);
}

TEST_CASE("path parsing") {
    Quiver q = make({"u", "v", "w"}, {{"x", "u", "v"}, {"y", "v", "w"}});
    CHECK(path_to_string(q, parse_path(q, "x.y")) == "[x.y]");
    CHECK(parse_path(q, "v").is_vertex());
    CHECK_THROWS_AS(parse_path(q, "y.x"), InputError);
    CHECK_THROWS_AS(parse_path(q, "z"), InputError);
}

}
