#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "psilab/coloring.hpp"
#include "psilab/graph.hpp"

namespace psilab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchLimits {
    /// Branch nodes a single search may visit before giving up.
    std::uint64_t max_nodes = kDefaultNodeBudget;
    /// Nonzero seeds shuffle ties in the branching order. Values never change,
    /// witnesses may.
    std::uint64_t seed = 0;
};

enum class SearchStatus { found, infeasible, inconclusive };
const char* to_string(SearchStatus s);

struct FeasibilityResult {
    SearchStatus status = SearchStatus::inconclusive;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

/// Decides whether g has a pseudocomplete coloring with exactly t colors.
FeasibilityResult feasible_coloring(const Graph& g, int t, const SearchLimits& limits = {});

/// Visits every pseudocomplete coloring with exactly t colors, once per partition
/// of the vertex set (colors numbered by first appearance). The visitor returns
/// false to stop early. Returns infeasible when none exist, found otherwise.
SearchStatus for_each_pseudocomplete_coloring(const Graph& g, int t, const std::function<bool(const Coloring&)>& visit,
                                              const SearchLimits& limits = {});

/// floor((omega + n) / 2) for n >= 1; 0 for the empty graph.
int clique_order_bound(const Graph& g);
/// Largest t with t(t-1)/2 <= |E|, i.e. floor((1 + sqrt(1 + 8|E|)) / 2); 0 for n = 0.
int edge_count_bound(const Graph& g);
/// min of the two bounds above.
int psi_upper_bound(const Graph& g);

using UpperBoundFn = std::function<int(const Graph&)>;

struct PsiOptions {
    SearchLimits limits;
    /// A known pseudocomplete coloring; seeds the lower bound.
    std::optional<Coloring> hint;
    /// Replaces psi_upper_bound as the starting point of the downward search.
    UpperBoundFn upper_bound;
};

struct BoundEntry {
    std::string name;
    int value = 0;
};

struct PsiResult {
    /// False when the budget ran out; `value` is then only a lower bound.
    bool exact = false;
    int value = 0;
    /// Equal to value when exact.
    int upper = 0;
    Coloring witness;
    std::vector<BoundEntry> bound_trace;
    std::uint64_t nodes = 0;
};

/// Pseudoachromatic number by downward search from the upper bound.
PsiResult psi(const Graph& g, const PsiOptions& options = {});

/// psi(g).value, throwing Inconclusive when the budget runs out.
int psi_value(const Graph& g, const SearchLimits& limits = {});

}  // namespace psilab
