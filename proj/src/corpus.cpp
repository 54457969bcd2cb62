#include "psilab/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "psilab/errors.hpp"

namespace psilab {

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits cells by the number of neighbours each vertex has in every cell, until
// stable. Sub-cells are ordered by that count vector, so the result depends only
// on the isomorphism type of (graph, ordered partition).
Cells refine(const Graph& g, Cells cells) {
    const int n = g.order();
    std::vector<int> cell_of(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        Cells next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                for (int u : g.neighbors(v).to_vector()) ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
                split[sig].push_back(v);
            }
            for (auto& [sig, part] : split) next.push_back(std::move(part));
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

std::string relabelled_code(const Graph& g, const Cells& cells) {
    std::vector<int> position(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < cells.size(); ++i) position[static_cast<std::size_t>(cells[i].front())] = static_cast<int>(i);
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
    return emit_graph6(std::move(b).build());
}

bool twins(const Graph& g, int v, int w) {
    VertexSet nv = g.neighbors(v) - VertexSet({w});
    VertexSet nw = g.neighbors(w) - VertexSet({v});
    return nv == nw;
}

void search(const Graph& g, Cells cells, std::string& best) {
    cells = refine(g, std::move(cells));
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        std::string code = relabelled_code(g, cells);
        if (best.empty() || code < best) best = std::move(code);
        return;
    }
    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : cells[ti]) {
        // Swapping twins is an automorphism fixing the partition: same subtree.
        if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(g, v, w); })) continue;
        tried.push_back(v);
        Cells child;
        child.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != ti) {
                child.push_back(cells[i]);
                continue;
            }
            child.push_back({v});
            std::vector<int> rest;
            for (int u : cells[i])
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
        }
        search(g, std::move(child), best);
    }
}

}  // namespace

std::string canonical_graph6(const Graph& g) {
    if (g.order() == 0) return emit_graph6(g);
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    std::string best;
    search(g, Cells{all}, best);
    return best;
}

std::vector<Graph> graphs_of_order(int n) {
    if (n < 0 || n > 9) throw UnsupportedSize("graphs_of_order supports 0..9 vertices");
    static std::mutex mutex;
    static std::map<int, std::vector<std::string>> cache;
    std::vector<std::string> codes;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) codes = it->second;
    }
    if (codes.empty()) {
        if (n == 0) {
            codes = {emit_graph6(Graph(0))};
        } else {
            std::set<std::string> seen;
            for (const Graph& smaller : graphs_of_order(n - 1)) {
                const auto edges = smaller.edges();
                for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
                    GraphBuilder b(n);
                    for (auto [u, v] : edges) b.add_edge(u, v);
                    for (int u : VertexSet(nbrs).to_vector()) b.add_edge(u, n - 1);
                    seen.insert(canonical_graph6(std::move(b).build()));
                }
            }
            codes.assign(seen.begin(), seen.end());
        }
        std::lock_guard lock(mutex);
        cache[n] = codes;
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (const auto& code : codes) out.push_back(parse_graph6(code));
    return out;
}

std::vector<Graph> graphs_up_to(int max_order) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_order; ++n) {
        auto layer = graphs_of_order(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Graph> named_instances() {
    std::vector<Graph> out{path_graph(3), cycle_graph(5), cycle_graph(8)};
    for (int n = 1; n <= 6; ++n) out.push_back(complete_graph(n));
    out.push_back(edgeless_graph(2).with_label("K1+K1"));
    return out;
}

std::vector<Graph> embedded_corpus() {
    std::vector<Graph> out = graphs_up_to(6);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < out.size(); ++i) index[emit_graph6(out[i])] = i;
    for (const Graph& named : named_instances()) {
        const std::string code = canonical_graph6(named);
        if (auto it = index.find(code); it != index.end()) {
            out[it->second] = out[it->second].with_label(named.label());
        } else {
            index[code] = out.size();
            out.push_back(named);
        }
    }
    return out;
}

}  // namespace psilab
