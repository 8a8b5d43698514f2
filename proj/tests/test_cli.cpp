#include "cli.hpp"

#include "quiveralg/report_json.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace quiveralg;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    for (auto& a : args) {
        if (a.rfind("@", 0) == 0) a = std::string(QUIVERALG_CORPUS_DIR) + "/" + a.substr(1);
    }
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("paths lists the enumeration") {
    auto r = run({"paths", "@line3.txt", "--max-len", "3", "--json"});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 6);
    CHECK(j["exhaustive"] == true);
    CHECK(j["paths"].back() == "[x.y]");
}

TEST_CASE("theta check on the loop family") {
    auto r = run({"check", "thm33", "family:loop", "--codim-bound", "10"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "theta not surjective; witness eval(1)"));
    CHECK(contains(r.out, "no_up_to_bound"));
}

TEST_CASE("bialgebra check reports the witness pair") {
    auto line = run({"check", "bialgebra", "@line3.txt"});
    CHECK(line.status == 0);
    CHECK(contains(line.out, "criterion: false"));
    auto arrow = run({"check", "bialgebra", "@arrow.txt"});
    CHECK(arrow.status == 1);
    CHECK(contains(arrow.out, "witness: [a], [x]"));
}

TEST_CASE("arithmetic verbs") {
    auto d = run({"delta", "@line3.txt", "[x.y]"});
    CHECK(d.status == 0);
    CHECK(contains(d.out, "[u]⊗[x.y] + [x]⊗[y] + [x.y]⊗[w]"));
    auto m = run({"mul", "@line3.txt", "2*[x]", "[y]", "--field", "fp:3"});
    CHECK(m.status == 0);
    CHECK(contains(m.out, "product: 2*[x.y]"));
    auto m5 = run({"mul", "@line3.txt", "2*[x]", "3*[y]", "--field", "fp:5"});
    CHECK(contains(m5.out, "product: [x.y]"));
    auto c = run({"conv", "@line3.txt", "dual{[x]:1}", "rule:gamma"});
    CHECK(contains(c.out, "dual{[x]:1, [x.y]:1}"));
    auto a = run({"alpha", "@arrow.txt", "@arrow.txt", "[x]", "[x]"});
    CHECK(a.status == 0);
    CHECK(contains(a.out, "terms: 2"));
    auto p = run({"product", "@arrow.txt", "@arrow.txt", "--json"});
    auto pj = nlohmann::json::parse(p.out);
    CHECK(pj["vertices"] == 4);
    CHECK(pj["arrows"] == 4);
}

TEST_CASE("remaining verbs succeed on the corpus") {
    CHECK(run({"phi", "@diamond_poset.txt"}).status == 0);
    CHECK(run({"phi", "poset:diamond", "0", "1"}).status == 0);
    CHECK(run({"factor-perp", "@line3.txt", "[u]", "dual{[x]:2, [x.y]:3}"}).status == 0);
    CHECK(run({"rep-locnilp", "@loop.txt", "@loop_rep.txt"}).status == 0);
    CHECK(run({"rep-locnilp", "@line3.txt", "@line3_rep.txt"}).status == 0);
    CHECK(run({"counterexample", "cycle", "@cycle3.txt", "--max-len", "5"}).status == 0);
    CHECK(run({"counterexample", "multiarrow", "--max-len", "4"}).status == 0);
    for (const char* c : {"prop41", "thm42", "thm43"}) CHECK(run({"check", c, "poset:diamond"}).status == 0);
    CHECK(run({"check", "thm43", "posetfamily:antichain"}).status == 0);
    CHECK(run({"check", "semiperfect", "family:line1"}).status == 0);
    CHECK(run({"check", "prop32", "@kronecker.txt"}).status == 0);
    CHECK(run({"check", "thm57", "@line3.txt"}).status == 0);
    auto core = run({"check", "coreflexive", "family:star51"});
    CHECK(core.status == 0);
    CHECK(contains(core.out, "verdict: not_coreflexive"));
}

TEST_CASE("input errors exit 2 with positions") {
    auto bad = run({"paths", "@bad_quiver.txt"});
    CHECK(bad.status == 2);
    CHECK(contains(bad.err, "line 3, column"));
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"paths", "@line3.txt", "--field", "fp:8"}).status == 2);
    CHECK(run({"paths", "@line3.txt", "--field", "fp:7"}).status == 2);
    CHECK(run({"delta", "@line3.txt", "1/7*[x]", "--field", "fp:7"}).status == 2);
    CHECK(run({"paths", "@line3.txt", "--max-len", "abc"}).status == 2);
    CHECK(run({"paths", "@missing.txt"}).status == 2);
    CHECK(run({"check", "thm99", "@line3.txt"}).status == 2);
    CHECK(run({"suite", "nope"}).status == 2);
    CHECK(run({"delta", "@line3.txt", "[y.x]"}).status == 2);
    CHECK(run({"paths", "family:torus"}).status == 2);
}

TEST_CASE("suite reports are deterministic and round trip through JSON") {
    auto a = run({"suite", "ex35", "--seed", "7", "--json"});
    auto b = run({"suite", "ex35", "--seed", "7", "--json"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    j.erase("status");
    auto report = j.get<SuiteReport>();
    CHECK(report.suite == "ex35");
    CHECK(report.seed == 7);
    CHECK(report.passed());
    CHECK(nlohmann::json(report) == nlohmann::json(j));
    CHECK(std::is_sorted(report.items.begin(), report.items.end(),
                         [](const CheckItem& x, const CheckItem& y) { return x.name < y.name; }));

    auto tampered = j;
    tampered["passed"] = false;
    CHECK_THROWS(tampered.get<SuiteReport>());
}

TEST_CASE("same seed gives identical reports for randomized suites") {
    for (const char* name : {"prop53", "thm33"}) {
        auto a = run_suite(name, 3), b = run_suite(name, 3);
        CHECK(nlohmann::json(a) == nlohmann::json(b));
    }
}

}
