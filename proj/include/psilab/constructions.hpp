#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psilab/coloring.hpp"
#include "psilab/graph.hpp"
#include "psilab/mpd.hpp"
#include "psilab/psi.hpp"

namespace psilab {

// Every coloring returned from this header has been checked with
// is_pseudocomplete; a failed check throws InternalInconsistency.

/// Coloring of join(g, h) with min(omega(g) + n_h, omega(h) + n_g) colors:
/// distinct colors on a maximum clique of each side, then the smaller clique
/// complement paired color-for-color with the larger one.
Coloring join_coloring_lower(const Graph& g, const Graph& h);

/// min(omega(g) + n_h, omega(h) + n_g).
int join_lower_bound(const Graph& g, const Graph& h);

/// Coloring of nabla_k(g, k) with floor(k (omega + n) / 2) colors.
///
/// With omega + n even, copy i of the clique complement's first half X1 gets q
/// fresh colors, reused on the second half X2 of copy i+1 (mod k). With omega + n
/// odd and k odd, the leftover vertex v0 of each copy takes one of (k-1)/2 extra
/// colors, two copies per color, the last copy reusing extra color 0. With
/// omega + n odd and k even, the graph is built as nabla_{k/2}(g v g).
Coloring nabla_k_coloring(const Graph& g, int k);

enum class StructureKind { critical, weakly_type_1, weakly_type_2, none };

const char* to_string(StructureKind kind);

/// Rational number num/den, den > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

struct StructureReport {
    StructureKind kind = StructureKind::none;
    /// False when g is (weakly) critical but no coloring of the expected shape was found.
    bool found = false;
    std::optional<Coloring> coloring;
    std::optional<MultiplicityProfile> profile;
    /// Every shape realised by some maximum coloring, within the search budget.
    std::vector<StructureKind> kinds_found;
    Rational edge_bound;
    bool edge_bound_satisfied = false;
    int omega = 0;
    int psi = 0;
    bool critical = false;
    bool weakly_critical = false;
};

struct StructureOptions {
    SearchLimits limits;
    /// Candidate partitions the shaped search may test before giving up.
    std::uint64_t max_candidates = 10'000'000;
    /// Enumerate all maximum colorings when the shaped search finds nothing.
    int full_enumeration_max_order = 8;
};

/// Looks for a maximum pseudocomplete coloring with the multiplicity shape forced
/// on critical graphs (omega singletons on a maximum clique, the rest doubled) or
/// on weakly-critical graphs (type 1: one tripled color; type 2: omega-1
/// singletons, the rest doubled). kind is none when g is not weakly critical.
StructureReport structure_coloring(const Graph& g, const StructureOptions& options = {});

/// Identifies the two vertices of each doubled color. True iff the result is the
/// complete graph on omega + (n - omega) / 2 vertices. Throws ContractViolation
/// unless c has the critical shape (omega singletons, every other color doubled).
bool contraction_complete_check(const Graph& g, const Coloring& c);

/// Coloring of join(g, h) with Psi(g) + Psi(h) + 1 colors, assembled from two
/// not-weakly-critical witnesses. Throws ContractViolation on invalid witnesses.
Coloring boost_coloring(const Graph& g, const Graph& h, const WitnessPair& wg, const WitnessPair& wh,
                        const SearchLimits& limits = {});

}  // namespace psilab
