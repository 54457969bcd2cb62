#include "psilab/psi.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "psilab/errors.hpp"

namespace psilab {

int clique_order_bound(const Graph& g) {
    if (g.order() == 0) return 0;
    return (clique_number(g).size + g.order()) / 2;
}

int edge_count_bound(const Graph& g) {
    if (g.order() == 0) return 0;
    long long m = g.edge_count();
    int t = 1;
    while (static_cast<long long>(t + 1) * t / 2 <= m) ++t;
    return t;
}

int psi_upper_bound(const Graph& g) { return std::min(clique_order_bound(g), edge_count_bound(g)); }

namespace {

// Vertices are assigned in a fixed order; each takes an already-open color or the
// lowest unopened one, so every partition is visited exactly once.
class FeasibilitySearch {
public:
    FeasibilitySearch(const Graph& g, int t, const SearchLimits& limits)
        : g_(g), n_(g.order()), t_(t), limits_(limits) {
        build_order();
        color_.assign(static_cast<std::size_t>(n_), -1);
        covered_.fill(0);
        uncovered_ = t_ * (t_ - 1) / 2;
    }

    SearchStatus run(const std::function<bool(const Coloring&)>& visit) {
        visit_ = &visit;
        dfs(0, 0);
        if (aborted_) return SearchStatus::inconclusive;
        return found_any_ ? SearchStatus::found : SearchStatus::infeasible;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void build_order() {
        // Greedy: repeatedly take the vertex with most neighbours already placed,
        // so edges close early and the edge-supply bound bites sooner.
        std::vector<int> tiebreak(static_cast<std::size_t>(n_));
        std::iota(tiebreak.begin(), tiebreak.end(), 0);
        if (limits_.seed != 0) {
            std::mt19937_64 rng(limits_.seed);
            std::shuffle(tiebreak.begin(), tiebreak.end(), rng);
        }
        std::uint64_t placed = 0;
        while (static_cast<int>(order_.size()) < n_) {
            int best = -1;
            std::array<int, 3> best_key{};
            for (int v = 0; v < n_; ++v) {
                if ((placed >> v) & 1U) continue;
                std::array<int, 3> key{std::popcount(g_.neighbors(v).mask() & placed), g_.degree(v),
                                       -tiebreak[static_cast<std::size_t>(v)]};
                if (best < 0 || key > best_key) {
                    best = v;
                    best_key = key;
                }
            }
            order_.push_back(best);
            placed |= std::uint64_t{1} << best;
        }

        earlier_neighbors_.resize(static_cast<std::size_t>(n_));
        edges_within_.assign(static_cast<std::size_t>(n_) + 1, 0);
        degree_suffix_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int i = 0; i < n_; ++i) {
            int v = order_[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j)
                if (g_.adjacent(v, order_[static_cast<std::size_t>(j)]))
                    earlier_neighbors_[static_cast<std::size_t>(i)].push_back(order_[static_cast<std::size_t>(j)]);
            edges_within_[static_cast<std::size_t>(i) + 1] =
                edges_within_[static_cast<std::size_t>(i)] +
                static_cast<int>(earlier_neighbors_[static_cast<std::size_t>(i)].size());
        }
        for (int i = n_ - 1; i >= 0; --i)
            degree_suffix_[static_cast<std::size_t>(i)] =
                degree_suffix_[static_cast<std::size_t>(i) + 1] + g_.degree(order_[static_cast<std::size_t>(i)]);
    }

    bool feasible_after(int next, int opened) const {
        const int remaining = n_ - next;
        if (opened + remaining < t_) return false;
        // Each uncovered pair needs its own edge touching an unplaced vertex.
        if (uncovered_ > g_.edge_count() - edges_within_[static_cast<std::size_t>(next)]) return false;
        // A color not yet opened lives only on unplaced vertices and must meet t-1 others.
        if ((t_ - opened) * (t_ - 1) > degree_suffix_[static_cast<std::size_t>(next)]) return false;
        return true;
    }

    void emit() {
        std::vector<int> out(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = color_[static_cast<std::size_t>(v)] + 1;
        found_any_ = true;
        if (!(*visit_)(Coloring(std::move(out)).normalized())) stop_ = true;
    }

    void dfs(int i, int opened) {
        if (i == n_) {
            if (uncovered_ == 0 && opened == t_) emit();
            return;
        }
        const int v = order_[static_cast<std::size_t>(i)];
        const auto& back = earlier_neighbors_[static_cast<std::size_t>(i)];
        const int choices = std::min(opened + 1, t_);
        std::array<int, kMaxVertices> undo{};
        // New color first: surjectivity forces every color open sooner or later.
        for (int step = 0; step < choices && !stop_ && !aborted_; ++step) {
            const int a = (opened < t_) ? (step == 0 ? opened : step - 1) : step;
            if (++nodes_ > limits_.max_nodes) {
                aborted_ = true;
                return;
            }
            int undone = 0;
            for (int u : back) {
                int b = color_[static_cast<std::size_t>(u)];
                if (b == a) continue;
                std::uint64_t bit = std::uint64_t{1} << b;
                if (covered_[static_cast<std::size_t>(a)] & bit) continue;
                covered_[static_cast<std::size_t>(a)] |= bit;
                covered_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
                undo[static_cast<std::size_t>(undone++)] = b;
                --uncovered_;
            }
            color_[static_cast<std::size_t>(v)] = a;
            const int next_opened = opened + (a == opened ? 1 : 0);
            if (feasible_after(i + 1, next_opened)) dfs(i + 1, next_opened);
            color_[static_cast<std::size_t>(v)] = -1;
            for (int k = 0; k < undone; ++k) {
                int b = undo[static_cast<std::size_t>(k)];
                covered_[static_cast<std::size_t>(a)] &= ~(std::uint64_t{1} << b);
                covered_[static_cast<std::size_t>(b)] &= ~(std::uint64_t{1} << a);
                ++uncovered_;
            }
        }
    }

    const Graph& g_;
    const int n_;
    const int t_;
    const SearchLimits limits_;
    std::vector<int> order_;
    std::vector<std::vector<int>> earlier_neighbors_;
    std::vector<int> edges_within_;
    std::vector<int> degree_suffix_;
    std::vector<int> color_;
    std::array<std::uint64_t, kMaxVertices> covered_{};
    int uncovered_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool stop_ = false;
    bool found_any_ = false;
    const std::function<bool(const Coloring&)>* visit_ = nullptr;
};

// Cheap exits that need no search. Empty optional means "search".
std::optional<SearchStatus> trivial_status(const Graph& g, int t) {
    const int n = g.order();
    if (t < 0) throw DomainError("color count must be nonnegative");
    if (t == 0) return n == 0 ? SearchStatus::found : SearchStatus::infeasible;
    if (t > n) return SearchStatus::infeasible;
    if (static_cast<long long>(t) * (t - 1) / 2 > g.edge_count()) return SearchStatus::infeasible;
    if (t > kMaxVertices) throw UnsupportedSize("more than 64 colors");
    return std::nullopt;
}

}  // namespace

SearchStatus for_each_pseudocomplete_coloring(const Graph& g, int t, const std::function<bool(const Coloring&)>& visit,
                                              const SearchLimits& limits) {
    if (auto s = trivial_status(g, t)) {
        if (*s == SearchStatus::found) visit(Coloring{});
        return *s;
    }
    FeasibilitySearch search(g, t, limits);
    return search.run(visit);
}

FeasibilityResult feasible_coloring(const Graph& g, int t, const SearchLimits& limits) {
    FeasibilityResult result;
    if (auto s = trivial_status(g, t)) {
        result.status = *s;
        if (*s == SearchStatus::found) result.coloring = Coloring{};
        return result;
    }
    FeasibilitySearch search(g, t, limits);
    result.status = search.run([&](const Coloring& c) {
        result.coloring = c;
        return false;
    });
    result.nodes = search.nodes();
    return result;
}

namespace {

Coloring clique_coloring(const Graph& g, VertexSet clique) {
    // Distinct colors on the clique, everything else joins the first clique color.
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
    int next = 0;
    for (int v : clique.to_vector()) colors[static_cast<std::size_t>(v)] = ++next;
    return Coloring(std::move(colors)).normalized();
}

}  // namespace

PsiResult psi(const Graph& g, const PsiOptions& options) {
    PsiResult result;
    if (g.order() == 0) {
        result.exact = true;
        result.bound_trace = {{"empty-graph", 0}};
        return result;
    }

    const CliqueResult omega = clique_number(g);
    result.witness = clique_coloring(g, omega.witness);
    result.value = omega.size;
    result.bound_trace.push_back({"clique-number", omega.size});

    if (options.hint) {
        const Coloring& hint = *options.hint;
        if (hint.order() != g.order()) throw ContractViolation("hint coloring has the wrong number of vertices");
        if (!is_pseudocomplete(g, hint)) throw ContractViolation("hint coloring is not pseudocomplete");
        result.bound_trace.push_back({"hint", hint.num_colors()});
        if (hint.num_colors() > result.value) {
            result.value = hint.num_colors();
            result.witness = hint;
        }
    }

    int upper = 0;
    if (options.upper_bound) {
        upper = options.upper_bound(g);
        result.bound_trace.push_back({"upper-bound", upper});
    } else {
        const int by_clique = (omega.size + g.order()) / 2;
        const int by_edges = edge_count_bound(g);
        result.bound_trace.push_back({"clique-order-bound", by_clique});
        result.bound_trace.push_back({"edge-count-bound", by_edges});
        upper = std::min(by_clique, by_edges);
    }

    for (int t = upper; t > result.value; --t) {
        FeasibilityResult f = feasible_coloring(g, t, options.limits);
        result.nodes += f.nodes;
        if (f.status == SearchStatus::found) {
            result.value = t;
            result.witness = *f.coloring;
            break;
        }
        if (f.status == SearchStatus::inconclusive) {
            result.exact = false;
            result.upper = t;
            return result;
        }
    }
    result.exact = true;
    result.upper = result.value;
    return result;
}

int psi_value(const Graph& g, const SearchLimits& limits) {
    PsiOptions opts;
    opts.limits = limits;
    PsiResult r = psi(g, opts);
    if (!r.exact)
        throw Inconclusive("node budget exhausted computing psi of " +
                           (g.order() <= kMaxGraph6Vertices ? emit_graph6(g) : g.label()) + ": value in [" +
                           std::to_string(r.value) + ", " + std::to_string(r.upper) + "]");
    return r.value;
}

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::infeasible: return "infeasible";
        case SearchStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace psilab
