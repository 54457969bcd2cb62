#include "doctest.h"
#include "oracles.hpp"
#include "psilab/corpus.hpp"
#include "psilab/errors.hpp"
#include "psilab/mpd.hpp"

using namespace psilab;

namespace {

std::vector<int> values(const MpdProfile& p) {
    std::vector<int> out;
    for (int k = 0; k <= p.max_k(); ++k) out.push_back(p[k]);
    return out;
}

}  // namespace

TEST_CASE("k_subsets in lexicographic order") {
    const auto s = k_subsets(VertexSet::all(4), 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front().to_vector() == std::vector<int>{0, 1});
    CHECK(s[1].to_vector() == std::vector<int>{0, 2});
    CHECK(s.back().to_vector() == std::vector<int>{2, 3});
    CHECK(k_subsets(VertexSet::all(3), 0).size() == 1);
}

TEST_CASE("single values") {
    const Graph p3 = path_graph(3);
    CHECK(mpd(p3, 0).value == 0);
    CHECK(mpd(p3, 1).value == 0);
    CHECK(mpd(p3, 1).realizer.to_vector() == std::vector<int>{0});
    CHECK(mpd(p3, 2).value == 1);
    CHECK(mpd(cycle_graph(8), 1).value == 1);
    CHECK_THROWS_AS(mpd(p3, 4), DomainError);
    CHECK_THROWS_AS(mpd(p3, -1), DomainError);
}

TEST_CASE("profiles") {
    CHECK(values(mpd_profile(path_graph(3))) == std::vector<int>{0, 0, 1, 2});
    CHECK(values(mpd_profile(complete_graph(3))) == std::vector<int>{0, 1, 2, 3});
    CHECK(values(mpd_profile(edgeless_graph(3))) == std::vector<int>{0, 0, 0, 1});
    CHECK(values(mpd_profile(cycle_graph(8), 2)).size() == 3);
}

TEST_CASE("profiles match the definition on every graph with at most 5 vertices") {
    for (const Graph& g : graphs_up_to(5)) CHECK(values(mpd_profile(g)) == oracle::mpd(g));
}

TEST_CASE("profile invariants") {
    for (const Graph& g : graphs_up_to(6)) {
        const MpdProfile p = mpd_profile(g);
        CHECK(p[0] == 0);
        CHECK(p[g.order()] == p.psi);
        for (int k = 0; k <= g.order(); ++k) {
            CHECK(p[k] >= 0);
            CHECK(p[k] <= k);
            if (k > 0) {
                CHECK(p[k] >= p[k - 1]);
                CHECK(p[k] <= p[k - 1] + 1);
            }
            const VertexSet x = p.entries[static_cast<std::size_t>(k)].realizer;
            CHECK(x.size() == k);
            CHECK(p.psi - psi_value(delete_vertices(g, x).graph) == p[k]);
        }
    }
}

TEST_CASE("criticality reports") {
    const auto p3 = analyze_criticality(path_graph(3));
    CHECK_FALSE(p3.critical());
    CHECK(p3.weakly_critical());
    CHECK(p3.critical_failing_k == 1);
    CHECK(*p3.critical_by_mpd == false);

    const auto c8 = analyze_criticality(cycle_graph(8));
    CHECK_FALSE(c8.critical());
    CHECK_FALSE(c8.weakly_critical());

    CHECK(is_critical(join(path_graph(3), path_graph(3))).critical());
    for (int n = 1; n <= 6; ++n) CHECK(is_critical(complete_graph(n)).critical());

    CriticalityOptions skip;
    skip.mpd_max_order = 4;
    const auto big = analyze_criticality(cycle_graph(8), skip);
    CHECK_FALSE(big.critical_by_mpd.has_value());
}

TEST_CASE("both routes agree on every graph with at most 6 vertices") {
    for (const Graph& g : graphs_up_to(6)) {
        const auto r = analyze_criticality(g);
        REQUIRE(r.critical_by_mpd.has_value());
        CHECK(*r.critical_by_mpd == r.critical_by_formula);
        CHECK(*r.weakly_critical_by_mpd == r.weakly_critical_by_formula);
        if (r.critical()) CHECK(r.weakly_critical());
    }
}

TEST_CASE("additivity criterion on named pairs") {
    const auto pc = additivity_criterion(path_graph(3), cycle_graph(8));
    CHECK(pc.holds);
    CHECK(pc.equality_k == 1);
    CHECK(pc.psi_join == 6);
    CHECK(pc.additive_direct() == true);

    const auto kk = additivity_criterion(complete_graph(2), complete_graph(2));
    CHECK(kk.holds);

    const auto cc = additivity_criterion(cycle_graph(8), cycle_graph(8));
    CHECK_FALSE(cc.holds);
    CHECK(cc.violating_k.has_value());
    CHECK(cc.psi_join == 10);
}

TEST_CASE("witness search") {
    CHECK(find_witness_not_weakly_critical(cycle_graph(8)).has_value());
    CHECK_FALSE(find_witness_not_weakly_critical(path_graph(3)).has_value());
    for (int n = 1; n <= 5; ++n) CHECK_FALSE(find_witness_not_weakly_critical(complete_graph(n)).has_value());
    CHECK(find_witness_not_critical(path_graph(3)).has_value());
    CHECK(find_witness_not_critical(cycle_graph(8)).has_value());
    CHECK_FALSE(find_witness_not_critical(join(path_graph(3), path_graph(3))).has_value());
    CHECK_FALSE(find_witness_not_critical(path_graph(4)).has_value());
    CHECK_THROWS_AS(find_witness_not_critical(cycle_graph(13)), UnsupportedSize);
}

TEST_CASE("witnesses validate and their removable sets keep every color") {
    const auto w = find_witness_not_weakly_critical(cycle_graph(8));
    REQUIRE(w);
    CHECK((w->m2 - w->m1).size() == 2);
    CHECK(w->psi_m1 == w->psi_m2);
    CHECK_FALSE(validate_witness(cycle_graph(8), *w).has_value());

    WitnessPair broken = *w;
    broken.psi_g += 1;
    CHECK(validate_witness(cycle_graph(8), broken).has_value());
    broken = *w;
    broken.m1 = broken.m2;
    CHECK(validate_witness(cycle_graph(8), broken).has_value());
}

TEST_CASE("a single added vertex with an odd remainder is not a witness") {
    // P4 is critical, yet M1 = {0,1}, M2 = {0,1,2} meets the three numeric conditions.
    const Graph p4 = path_graph(4);
    WitnessPair w;
    w.kind = WitnessKind::not_critical;
    w.m1 = VertexSet({0, 1});
    w.m2 = VertexSet({0, 1, 2});
    w.psi_m1 = 2;
    w.psi_m2 = 2;
    w.psi_g = 3;
    w.xi = 1;
    w.coloring = psi(p4).witness;
    CHECK(validate_witness(p4, w).has_value());
}
