#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "psilab/coloring.hpp"
#include "psilab/graph.hpp"
#include "psilab/psi.hpp"

namespace psilab {

/// Exhaustive subset enumeration (mpd route, witness search) is refused above this order.
inline constexpr int kDefaultSubsetSearchMaxOrder = 12;

/// All `k`-element subsets of `universe`, in lexicographic order of their sorted
/// member lists.
std::vector<VertexSet> k_subsets(VertexSet universe, int k);

/// Memoised Psi of induced subgraphs of one graph, keyed by vertex set.
///
/// Removing a vertex lowers Psi by at most one, so once a neighbouring set
/// (one vertex more or less) is known the value is pinned to two candidates and
/// at most one feasibility search is needed.
class SubsetPsiTable {
public:
    explicit SubsetPsiTable(Graph g, SearchLimits limits = {});

    const Graph& graph() const { return g_; }
    /// Throws Inconclusive when a search exhausts the budget.
    int psi(VertexSet s);
    /// Computes every set missing at most `max_removed` vertices, largest sets first.
    void fill_top_down(int max_removed);

    std::size_t size() const { return memo_.size(); }

private:
    Graph g_;
    SearchLimits limits_;
    std::unordered_map<std::uint64_t, int> memo_;
};

struct MpdEntry {
    int value = 0;
    /// Lexicographically least k-set attaining the minimum.
    VertexSet realizer;
};

struct MpdProfile {
    int order = 0;
    int psi = 0;
    /// entries[k] for k = 0..max_k.
    std::vector<MpdEntry> entries;

    int max_k() const { return static_cast<int>(entries.size()) - 1; }
    int operator[](int k) const { return entries[static_cast<std::size_t>(k)].value; }
};

/// min over k-sets X of Psi(G) - Psi(G \ X). Throws DomainError unless 0 <= k <= n.
MpdEntry mpd(const Graph& g, int k, const SearchLimits& limits = {});
MpdEntry mpd(SubsetPsiTable& table, int k);

/// mpd for k = 0..max_k (max_k < 0 means n).
MpdProfile mpd_profile(const Graph& g, int max_k = -1, const SearchLimits& limits = {});
MpdProfile mpd_profile(SubsetPsiTable& table, int max_k = -1);

struct CriticalityOptions {
    SearchLimits limits;
    /// The mpd route enumerates all 2^n vertex subsets; above this order it is skipped.
    int mpd_max_order = kDefaultSubsetSearchMaxOrder;
};

struct CriticalityReport {
    int omega = 0;
    int psi = 0;
    int n = 0;
    bool critical_by_formula = false;
    bool weakly_critical_by_formula = false;
    /// Empty when the mpd route was skipped (n above mpd_max_order).
    std::optional<bool> critical_by_mpd;
    std::optional<bool> weakly_critical_by_mpd;
    /// Smallest k with mpd(k) < ceil(k/2), resp. floor(k/2).
    std::optional<int> critical_failing_k;
    std::optional<int> weak_failing_k;
    std::optional<MpdProfile> profile;

    bool critical() const { return critical_by_formula; }
    bool weakly_critical() const { return weakly_critical_by_formula; }
};

/// Both criticality notions by the closed forms (2 Psi = omega + n, Psi = floor((omega+n)/2))
/// and by the mpd definitions. Throws InternalInconsistency if the routes disagree.
CriticalityReport analyze_criticality(const Graph& g, const CriticalityOptions& options = {});
CriticalityReport is_critical(const Graph& g, const CriticalityOptions& options = {});
CriticalityReport is_weakly_critical(const Graph& g, const CriticalityOptions& options = {});

struct AdditivityReport {
    /// mpd_G(k) + mpd_H(k) >= k for all 0 <= k <= min(n_G, n_H).
    bool holds = false;
    std::vector<int> mpd_g;
    std::vector<int> mpd_h;
    std::vector<int> sums;
    /// Some k >= 1 with mpd_G(k) + mpd_H(k) = k, when holds.
    std::optional<int> equality_k;
    /// Smallest k with mpd_G(k) + mpd_H(k) < k, when !holds.
    std::optional<int> violating_k;
    int psi_g = 0;
    int psi_h = 0;
    /// Direct evaluation of Psi(G v H), when requested.
    std::optional<int> psi_join;

    std::optional<bool> additive_direct() const {
        if (!psi_join) return std::nullopt;
        return *psi_join == psi_g + psi_h;
    }
};

struct AdditivityOptions {
    SearchLimits limits;
    bool direct_check = true;
};

AdditivityReport additivity_criterion(const Graph& g, const Graph& h, const AdditivityOptions& options = {});

enum class WitnessKind { not_weakly_critical, not_critical };

/// Nested induced subgraphs M1 within M2 certifying that G is not (weakly) critical,
/// plus a maximum coloring that keeps all its colors off `removable_set`.
struct WitnessPair {
    WitnessKind kind = WitnessKind::not_weakly_critical;
    VertexSet m1;
    VertexSet m2;
    int psi_m1 = 0;
    int psi_m2 = 0;
    int psi_g = 0;
    /// floor(|V \ M1| / 2) for the weak variant, ceil(|V \ M2| / 2) for the other.
    int xi = 0;
    VertexSet removable_set;
    Coloring coloring;
};

struct WitnessOptions {
    SearchLimits limits;
    int max_order = kDefaultSubsetSearchMaxOrder;
};

std::optional<WitnessPair> find_witness_not_weakly_critical(const Graph& g, const WitnessOptions& options = {});
/// |M2 \ M1| = 1 is only accepted with |V \ M2| even; otherwise the three conditions
/// also hold on critical graphs (P4 with M1 an edge, M2 = M1 plus one vertex).
std::optional<WitnessPair> find_witness_not_critical(const Graph& g, const WitnessOptions& options = {});

/// Re-derives every witness condition with fresh Psi computations. Empty on success,
/// otherwise a description of the first broken condition.
std::optional<std::string> validate_witness(const Graph& g, const WitnessPair& w, const SearchLimits& limits = {});

}  // namespace psilab
