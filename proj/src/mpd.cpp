#include "psilab/mpd.hpp"

#include <algorithm>

#include "psilab/errors.hpp"

namespace psilab {

std::vector<VertexSet> k_subsets(VertexSet universe, int k) {
    std::vector<VertexSet> out;
    const std::vector<int> members = universe.to_vector();
    const int m = static_cast<int>(members.size());
    if (k < 0 || k > m) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s.insert(members[static_cast<std::size_t>(i)]);
        out.push_back(s);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
    }
    return out;
}

SubsetPsiTable::SubsetPsiTable(Graph g, SearchLimits limits) : g_(std::move(g)), limits_(limits) {}

int SubsetPsiTable::psi(VertexSet s) {
    if (auto it = memo_.find(s.mask()); it != memo_.end()) return it->second;
    if (!s.subset_of(g_.vertices())) throw DomainError("vertex set exceeds graph order");
    if (s.empty()) return memo_[0] = 0;

    const Graph sub = induced_subgraph(g_, s).graph;
    int lo = clique_number(sub).size;
    int hi = psi_upper_bound(sub);
    for (int v = 0; v < g_.order(); ++v) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if (s.contains(v)) {
            if (auto it = memo_.find(s.mask() & ~bit); it != memo_.end()) {
                lo = std::max(lo, it->second);
                hi = std::min(hi, it->second + 1);
            }
        } else if (auto it = memo_.find(s.mask() | bit); it != memo_.end()) {
            lo = std::max(lo, it->second - 1);
            hi = std::min(hi, it->second);
        }
    }
    int value = lo;
    for (int t = hi; t > lo; --t) {
        FeasibilityResult f = feasible_coloring(sub, t, limits_);
        if (f.status == SearchStatus::inconclusive)
            throw Inconclusive("node budget exhausted on an induced subgraph of order " + std::to_string(sub.order()));
        if (f.status == SearchStatus::found) {
            value = t;
            break;
        }
    }
    return memo_[s.mask()] = value;
}

void SubsetPsiTable::fill_top_down(int max_removed) {
    const VertexSet all = g_.vertices();
    for (int j = 0; j <= std::min(max_removed, g_.order()); ++j)
        for (VertexSet x : k_subsets(all, j)) psi(all - x);
}

MpdEntry mpd(SubsetPsiTable& table, int k) {
    const int n = table.graph().order();
    if (k < 0 || k > n) throw DomainError("mpd needs 0 <= k <= " + std::to_string(n) + ", got " + std::to_string(k));
    table.fill_top_down(k);
    const VertexSet all = table.graph().vertices();
    const int whole = table.psi(all);
    MpdEntry best{k + 1, {}};
    for (VertexSet x : k_subsets(all, k)) {
        int drop = whole - table.psi(all - x);
        if (drop < best.value) best = {drop, x};
    }
    return best;
}

MpdEntry mpd(const Graph& g, int k, const SearchLimits& limits) {
    SubsetPsiTable table(g, limits);
    return mpd(table, k);
}

MpdProfile mpd_profile(SubsetPsiTable& table, int max_k) {
    const int n = table.graph().order();
    if (max_k < 0 || max_k > n) max_k = n;
    table.fill_top_down(max_k);
    MpdProfile p;
    p.order = n;
    p.psi = table.psi(table.graph().vertices());
    for (int k = 0; k <= max_k; ++k) p.entries.push_back(mpd(table, k));
    return p;
}

MpdProfile mpd_profile(const Graph& g, int max_k, const SearchLimits& limits) {
    SubsetPsiTable table(g, limits);
    return mpd_profile(table, max_k);
}

CriticalityReport analyze_criticality(const Graph& g, const CriticalityOptions& options) {
    CriticalityReport r;
    r.n = g.order();
    r.omega = clique_number(g).size;
    r.psi = psi_value(g, options.limits);
    r.critical_by_formula = 2 * r.psi == r.omega + r.n;
    r.weakly_critical_by_formula = r.psi == (r.omega + r.n) / 2;

    if (r.n > options.mpd_max_order) return r;

    MpdProfile p = mpd_profile(g, -1, options.limits);
    if (p.psi != r.psi) throw InternalInconsistency("subset table and direct search disagree on psi");
    for (int k = 0; k <= r.n; ++k) {
        if (!r.critical_failing_k && p[k] < (k + 1) / 2) r.critical_failing_k = k;
        if (!r.weak_failing_k && p[k] < k / 2) r.weak_failing_k = k;
    }
    r.critical_by_mpd = !r.critical_failing_k.has_value();
    r.weakly_critical_by_mpd = !r.weak_failing_k.has_value();
    r.profile = std::move(p);

    if (*r.critical_by_mpd != r.critical_by_formula)
        throw InternalInconsistency("criticality of " + emit_graph6(g) + ": mpd definition says " +
                                    (*r.critical_by_mpd ? "critical" : "not critical") + ", 2*psi = omega + n says " +
                                    (r.critical_by_formula ? "critical" : "not critical"));
    if (*r.weakly_critical_by_mpd != r.weakly_critical_by_formula)
        throw InternalInconsistency("weak criticality of " + emit_graph6(g) + ": mpd definition says " +
                                    (*r.weakly_critical_by_mpd ? "weakly critical" : "not weakly critical") +
                                    ", psi = floor((omega + n)/2) says " +
                                    (r.weakly_critical_by_formula ? "weakly critical" : "not weakly critical"));
    return r;
}

CriticalityReport is_critical(const Graph& g, const CriticalityOptions& options) {
    return analyze_criticality(g, options);
}

CriticalityReport is_weakly_critical(const Graph& g, const CriticalityOptions& options) {
    return analyze_criticality(g, options);
}

AdditivityReport additivity_criterion(const Graph& g, const Graph& h, const AdditivityOptions& options) {
    const int m = std::min(g.order(), h.order());
    MpdProfile pg = mpd_profile(g, m, options.limits);
    MpdProfile ph = mpd_profile(h, m, options.limits);
    AdditivityReport r;
    r.psi_g = pg.psi;
    r.psi_h = ph.psi;
    r.holds = true;
    for (int k = 0; k <= m; ++k) {
        r.mpd_g.push_back(pg[k]);
        r.mpd_h.push_back(ph[k]);
        r.sums.push_back(pg[k] + ph[k]);
        if (r.sums.back() < k && !r.violating_k) {
            r.holds = false;
            r.violating_k = k;
        }
    }
    if (r.holds) {
        for (int k = 1; k <= m; ++k) {
            if (r.sums[static_cast<std::size_t>(k)] == k) {
                r.equality_k = k;
                break;
            }
        }
    }
    if (options.direct_check) r.psi_join = psi_value(join(g, h), options.limits);
    return r;
}

namespace {

// Keeps the lowest-index vertex of every color; returns the first `count` of the
// remaining vertices.
VertexSet removable_vertices(const Coloring& c, int count) {
    std::vector<bool> seen(static_cast<std::size_t>(c.num_colors()) + 1, false);
    VertexSet out;
    for (int v = 0; v < c.order() && out.size() < count; ++v) {
        auto s = seen[static_cast<std::size_t>(c[v])];
        if (s) out.insert(v);
        s = true;
    }
    if (out.size() < count) throw InternalInconsistency("not enough repeated-color vertices for the removable set");
    return out;
}

void check_witness_size(const Graph& g, const WitnessOptions& options) {
    if (g.order() > options.max_order)
        throw UnsupportedSize("witness search enumerates all vertex subsets; order " + std::to_string(g.order()) +
                              " exceeds the limit " + std::to_string(options.max_order));
}

}  // namespace

std::optional<WitnessPair> find_witness_not_weakly_critical(const Graph& g, const WitnessOptions& options) {
    check_witness_size(g, options);
    const int n = g.order();
    SubsetPsiTable table(g, options.limits);
    table.fill_top_down(n);
    const VertexSet all = g.vertices();
    const int whole = table.psi(all);

    for (int size = n - 2; size >= 0; --size) {
        const int xi_m2 = (n - size - 2) / 2;
        for (VertexSet m1 : k_subsets(all, size)) {
            const int p1 = table.psi(m1);
            if (whole != p1 + xi_m2) continue;
            for (VertexSet added : k_subsets(all - m1, 2)) {
                const VertexSet m2 = m1 | added;
                if (table.psi(m2) != p1) continue;
                WitnessPair w;
                w.kind = WitnessKind::not_weakly_critical;
                w.m1 = m1;
                w.m2 = m2;
                w.psi_m1 = p1;
                w.psi_m2 = p1;
                w.psi_g = whole;
                w.xi = (n - size) / 2;
                PsiOptions popts;
                popts.limits = options.limits;
                w.coloring = psi(g, popts).witness;
                w.removable_set = removable_vertices(w.coloring, w.xi + 1);
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<WitnessPair> find_witness_not_critical(const Graph& g, const WitnessOptions& options) {
    check_witness_size(g, options);
    const int n = g.order();
    SubsetPsiTable table(g, options.limits);
    table.fill_top_down(n);
    const VertexSet all = g.vertices();
    const int whole = table.psi(all);

    for (int size = n - 1; size >= 0; --size) {
        for (VertexSet m1 : k_subsets(all, size)) {
            const int p1 = table.psi(m1);
            for (int d = 1; d <= 2; ++d) {
                const int rest = n - size - d;
                // One added vertex only lowers the rounded-up half when |V \ M2| is even.
                if (rest < 0 || (d == 1 && rest % 2 == 1) || whole != p1 + (rest + 1) / 2) continue;
                for (VertexSet added : k_subsets(all - m1, d)) {
                    const VertexSet m2 = m1 | added;
                    if (table.psi(m2) != p1) continue;
                    WitnessPair w;
                    w.kind = WitnessKind::not_critical;
                    w.m1 = m1;
                    w.m2 = m2;
                    w.psi_m1 = p1;
                    w.psi_m2 = p1;
                    w.psi_g = whole;
                    w.xi = (rest + 1) / 2;
                    PsiOptions popts;
                    popts.limits = options.limits;
                    w.coloring = psi(g, popts).witness;
                    w.removable_set = removable_vertices(w.coloring, w.xi + d - 1);
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate_witness(const Graph& g, const WitnessPair& w, const SearchLimits& limits) {
    const int n = g.order();
    if (!w.m1.subset_of(w.m2)) return "M1 is not contained in M2";
    if (!w.m2.subset_of(g.vertices())) return "M2 exceeds the vertex set";
    const int d = (w.m2 - w.m1).size();
    const bool weak = w.kind == WitnessKind::not_weakly_critical;
    if (weak && d != 2) return "|M2 \\ M1| = " + std::to_string(d) + ", expected 2";
    if (!weak && (d < 1 || d > 2)) return "|M2 \\ M1| = " + std::to_string(d) + ", expected 1 or 2";

    const int p1 = psi_value(induced_subgraph(g, w.m1).graph, limits);
    const int p2 = psi_value(induced_subgraph(g, w.m2).graph, limits);
    const int pg = psi_value(g, limits);
    if (p1 != w.psi_m1 || p2 != w.psi_m2 || pg != w.psi_g) return "recorded psi values do not match recomputation";
    if (p1 != p2) return "Psi(M1) != Psi(M2)";
    const int outside_m2 = n - w.m2.size();
    if (!weak && d == 1 && outside_m2 % 2 == 1) return "|M2 \\ M1| = 1 with |V \\ M2| odd";
    const int tail = weak ? outside_m2 / 2 : (outside_m2 + 1) / 2;
    if (pg != p2 + tail) return "Psi(G) != Psi(M2) + rounded half of |V \\ M2|";

    const int xi = weak ? (n - w.m1.size()) / 2 : tail;
    if (w.xi != xi) return "xi does not match its defining formula";
    const int expected_removable = weak ? xi + 1 : xi + d - 1;
    if (w.removable_set.size() != expected_removable) return "removable set has the wrong size";
    if (weak && w.removable_set.size() < 2) return "removable set smaller than 2";

    if (w.coloring.order() != n) return "coloring has the wrong number of vertices";
    if (w.coloring.num_colors() != pg) return "coloring is not maximum";
    if (!is_pseudocomplete(g, w.coloring)) return "coloring is not pseudocomplete";
    std::vector<bool> kept(static_cast<std::size_t>(pg) + 1, false);
    for (int v : (g.vertices() - w.removable_set).to_vector()) kept[static_cast<std::size_t>(w.coloring[v])] = true;
    for (int c = 1; c <= pg; ++c)
        if (!kept[static_cast<std::size_t>(c)]) return "color " + std::to_string(c) + " only appears on the removable set";
    return std::nullopt;
}

}  // namespace psilab
