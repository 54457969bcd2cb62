#pragma once

#include <string>
#include <vector>

#include "psilab/graph.hpp"

namespace psilab {

/// graph6 of a canonical relabelling: isomorphic graphs, and only those, share it.
/// Exponential in the worst case; meant for corpus generation at small order.
std::string canonical_graph6(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n vertices,
/// in canonical-string order. n <= 9.
std::vector<Graph> graphs_of_order(int n);

/// All graphs on 1..max_order vertices, up to isomorphism, by increasing order.
std::vector<Graph> graphs_up_to(int max_order);

/// P3, C5, C8, K1..K6 and the edgeless pair, with labels.
std::vector<Graph> named_instances();

/// graphs_up_to(6) followed by the named instances not already isomorphic to one of them.
std::vector<Graph> embedded_corpus();

}  // namespace psilab
