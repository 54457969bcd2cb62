#include "doctest.h"
#include "psilab/constructions.hpp"
#include "psilab/corpus.hpp"
#include "psilab/errors.hpp"

using namespace psilab;

TEST_CASE("lower join coloring") {
    const Coloring kk = join_coloring_lower(complete_graph(1), complete_graph(1));
    CHECK(kk.num_colors() == 2);
    const Graph p3 = path_graph(3);
    const Graph c8 = cycle_graph(8);
    CHECK(join_lower_bound(p3, c8) == 5);
    const Coloring pc = join_coloring_lower(p3, c8);
    CHECK(pc.num_colors() == 5);
    CHECK(is_pseudocomplete(join(p3, c8), pc).ok);
    CHECK_THROWS_AS(join_coloring_lower(Graph(0), p3), DomainError);
}

TEST_CASE("G v G gets omega + n colors") {
    for (const Graph& g : graphs_up_to(6)) {
        const Coloring c = join_coloring_lower(g, g);
        CHECK(c.num_colors() == clique_number(g).size + g.order());
        CHECK(is_pseudocomplete(join(g, g), c).ok);
    }
}

TEST_CASE("lower join coloring over pairs") {
    const auto small = graphs_up_to(4);
    for (const Graph& g : small)
        for (const Graph& h : small) {
            const Coloring c = join_coloring_lower(g, h);
            CHECK(c.num_colors() == join_lower_bound(g, h));
            CHECK(is_pseudocomplete(join(g, h), c).ok);
        }
}

TEST_CASE("nabla_k colorings on named graphs") {
    const Graph p3 = path_graph(3);
    CHECK(nabla_k_coloring(p3, 2).num_colors() == 5);
    CHECK(nabla_k_coloring(p3, 3).num_colors() == 7);
    CHECK(nabla_k_coloring(p3, 5).num_colors() == 12);
    CHECK(nabla_k_coloring(complete_graph(2), 3).num_colors() == 6);
    CHECK_THROWS_AS(nabla_k_coloring(p3, 1), DomainError);
}

TEST_CASE("nabla_k colorings reach the clique-order bound") {
    for (const Graph& g : graphs_up_to(5))
        for (int k = 2; k <= 5; ++k) {
            const Coloring c = nabla_k_coloring(g, k);
            const Graph big = nabla_k(g, k);
            CHECK(c.num_colors() == k * (clique_number(g).size + g.order()) / 2);
            CHECK(c.num_colors() == clique_order_bound(big));
            CHECK(is_pseudocomplete(big, c).ok);
        }
}

TEST_CASE("structure of named graphs") {
    const auto k4 = structure_coloring(complete_graph(4));
    CHECK(k4.kind == StructureKind::critical);
    REQUIRE(k4.profile);
    CHECK(k4.profile->count(1) == 4);
    CHECK(k4.profile->count(2) == 0);
    CHECK(k4.edge_bound.num * 1 == 6 * k4.edge_bound.den);
    CHECK(k4.edge_bound_satisfied);

    const auto p3 = structure_coloring(path_graph(3));
    CHECK((p3.kind == StructureKind::weakly_type_1 || p3.kind == StructureKind::weakly_type_2));
    CHECK(p3.found);
    CHECK(p3.edge_bound_satisfied);

    const auto pp = structure_coloring(join(path_graph(3), path_graph(3)));
    CHECK(pp.kind == StructureKind::critical);
    REQUIRE(pp.profile);
    CHECK(pp.profile->count(1) == 4);
    CHECK(pp.profile->count(2) == 1);

    const auto c8 = structure_coloring(cycle_graph(8));
    CHECK(c8.kind == StructureKind::none);
}

TEST_CASE("contraction check") {
    CHECK(contraction_complete_check(complete_graph(4), Coloring({1, 2, 3, 4})));
    const Graph pp = join(path_graph(3), path_graph(3));
    CHECK(contraction_complete_check(pp, Coloring({1, 2, 3, 1, 4, 5})));
    CHECK_THROWS_AS(contraction_complete_check(path_graph(3), Coloring({1, 1, 1})), ContractViolation);
}

TEST_CASE("critical graphs have the forced shape") {
    for (const Graph& g : graphs_up_to(6)) {
        const auto s = structure_coloring(g);
        if (s.kind != StructureKind::critical) continue;
        REQUIRE(s.found);
        CHECK(s.profile->count(1) == s.omega);
        CHECK(s.profile->count(2) * 2 == g.order() - s.omega);
        CHECK(contraction_complete_check(g, *s.coloring));
    }
}

TEST_CASE("boost coloring") {
    const Graph c8 = cycle_graph(8);
    const auto w = find_witness_not_weakly_critical(c8);
    REQUIRE(w);
    const Coloring b = boost_coloring(c8, c8, *w, *w);
    CHECK(b.num_colors() == 9);
    CHECK(is_pseudocomplete(join(c8, c8), b).ok);
    // P3 has no witness; handing it someone else's is a contract violation.
    CHECK_THROWS_AS(boost_coloring(path_graph(3), c8, *w, *w), ContractViolation);
}

TEST_CASE("boost coloring on every non-weakly-critical pair up to 6 vertices") {
    std::vector<std::pair<Graph, WitnessPair>> items;
    for (const Graph& g : graphs_up_to(6))
        if (auto w = find_witness_not_weakly_critical(g)) items.emplace_back(g, *w);
    REQUIRE(items.size() > 10);
    for (std::size_t i = 0; i < items.size(); i += 3)
        for (std::size_t j = i; j < items.size(); j += 5) {
            const auto& [g, wg] = items[i];
            const auto& [h, wh] = items[j];
            const Coloring b = boost_coloring(g, h, wg, wh);
            CHECK(b.num_colors() == wg.psi_g + wh.psi_g + 1);
        }
}
