#include <set>

#include "doctest.h"
#include "psilab/corpus.hpp"
#include "psilab/verify.hpp"

using namespace psilab;

namespace {

VerifyOptions single_thread() {
    VerifyOptions o;
    o.threads = 1;
    return o;
}

}  // namespace

TEST_CASE("catalog ids are unique and all runnable") {
    std::set<std::string> ids;
    for (const auto& c : check_catalog()) ids.insert(c.id);
    CHECK(ids.size() == 22);
    CHECK_THROWS_AS(run_check("no-such-check", {}), std::invalid_argument);
}

TEST_CASE("P3 and C8 reproduce the corrected remark") {
    const CheckResult r = run_check("remark-p3-c8", {path_graph(3), cycle_graph(8)}, single_thread());
    CHECK(r.passed());
    CHECK(r.details["psi_p3"] == 2);
    CHECK(r.details["psi_c8"] == 4);
    CHECK(r.details["psi_join"] == 6);
    CHECK(r.details["p3_critical"] == false);
    CHECK(r.details["c8_critical"] == false);
}

TEST_CASE("G v G has omega + n colors for every G on at most 5 vertices") {
    const CheckResult r = run_check("eqn-psi-gjoing-omega-plus-n", graphs_up_to(5), single_thread());
    CHECK(r.passed());
    CHECK(r.evaluated == 52);
}

TEST_CASE("a bound raised by one is caught with a concrete graph") {
    VerifyOptions o = single_thread();
    o.upper_bound = [](const Graph& g) { return psi_upper_bound(g) + 1; };
    const CheckResult bad = run_check("lemma-2-upper-bound", graphs_up_to(4), o);
    CHECK(bad.status == CheckStatus::failed);
    REQUIRE_FALSE(bad.failures.empty());
    const CheckFailure& f = bad.failures.front();
    REQUIRE(f.graphs.size() == 1);
    const Graph g = parse_graph6(f.graphs.front());
    CHECK(f.observed["psi"] == psi_value(g));
    CHECK(f.observed["bound"] == psi_upper_bound(g) + 1);

    const CheckResult good = run_check("lemma-2-upper-bound", graphs_up_to(4), single_thread());
    CHECK(good.passed());
}

TEST_CASE("every check passes on the embedded corpus") {
    Verifier v(single_thread());
    const auto results = v.run_checks({}, embedded_corpus());
    REQUIRE(results.size() == 22);
    for (const auto& r : results) {
        INFO(r.check_id);
        CHECK(r.passed());
        CHECK(r.failures.empty());
        CHECK(r.evaluated > 0);
    }
    CHECK(std::is_sorted(results.begin(), results.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; }));
}

TEST_CASE("reports do not depend on the thread count") {
    const auto corpus = graphs_up_to(5);
    VerifyOptions many;
    many.threads = 4;
    Verifier a(single_thread());
    Verifier b(many);
    auto ja = to_json(a.run_checks({}, corpus));
    auto jb = to_json(b.run_checks({}, corpus));
    for (auto* j : {&ja, &jb})
        for (auto& c : (*j)["checks"]) c.erase("runtime_ms");
    CHECK(ja == jb);
}

TEST_CASE("additive pair scan") {
    Verifier v(single_thread());
    const auto named = v.scan_additive_pairs({path_graph(3), cycle_graph(8), complete_graph(3)});
    CHECK(named.violations.empty());
    bool saw = false;
    for (const auto& p : named.pairs)
        if ((p.g == "Bg" && p.h == emit_graph6(cycle_graph(8))) || (p.h == "Bg" && p.g == emit_graph6(cycle_graph(8)))) {
            saw = true;
            CHECK(p.additive);
            CHECK(((p.class_g == CriticalityClass::not_weakly_critical) != (p.class_h == CriticalityClass::not_weakly_critical)));
        }
    CHECK(saw);

    const auto c8 = v.scan_additive_pairs({cycle_graph(8)});
    REQUIRE(c8.pairs.size() == 1);
    CHECK_FALSE(c8.pairs.front().additive);

    const auto small = v.scan_additive_pairs(graphs_up_to(4));
    CHECK(small.violations.empty());
    CHECK(small.inconclusive == 0);
    CHECK(small.pairs.size() == 18 * 19 / 2);
    CHECK(to_json(small)["schema"] == "psi-lab/scan/1");
}

TEST_CASE("budget exhaustion is reported as inconclusive, not as failure") {
    VerifyOptions o = single_thread();
    o.limits.max_nodes = 1;
    o.pair_max_order = 20;
    const CheckResult r = run_check("corollary-4-join-superadditivity", {cycle_graph(8), cycle_graph(6)}, o);
    CHECK(r.failure_count == 0);
    CHECK(r.status == CheckStatus::inconclusive);
    CHECK(r.inconclusive > 0);
}
