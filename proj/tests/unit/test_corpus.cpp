#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "psilab/corpus.hpp"

using namespace psilab;

TEST_CASE("graph counts up to isomorphism") {
    const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) CHECK(graphs_of_order(n).size() == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("canonical form ignores vertex labels") {
    std::mt19937 rng(12345);
    for (const Graph& g : graphs_of_order(6)) {
        std::vector<int> perm(6);
        for (int i = 0; i < 6; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        GraphBuilder b(6);
        for (auto [u, v] : g.edges()) b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        CHECK(canonical_graph6(std::move(b).build()) == canonical_graph6(g));
    }
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
    std::set<std::string> seen;
    for (const Graph& g : graphs_of_order(6)) seen.insert(canonical_graph6(g));
    CHECK(seen.size() == 156);
}

TEST_CASE("embedded corpus carries the named instances") {
    const auto corpus = embedded_corpus();
    CHECK(corpus.size() == 208 + 1);
    std::set<std::string> labels;
    for (const Graph& g : corpus)
        if (!g.label().empty()) labels.insert(g.label());
    for (const char* name : {"P3", "C5", "C8", "K1", "K3", "K6", "K1+K1"}) CHECK(labels.count(name) == 1);
}
