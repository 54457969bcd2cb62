#pragma once

// Slow, obviously-correct reference implementations. They share nothing with the
// library beyond the Graph container and its adjacency query.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "psilab/graph.hpp"

namespace oracle {

using psilab::Graph;

// Every pair of distinct colors meets on an edge.
inline bool pseudocomplete(const Graph& g, const std::vector<int>& color, int t) {
    std::set<std::pair<int, int>> seen;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && color[u] != color[v])
                seen.insert({std::min(color[u], color[v]), std::max(color[u], color[v])});
    return static_cast<int>(seen.size()) == t * (t - 1) / 2;
}

// Walks all set partitions as restricted growth strings.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            visit(a, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            a[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

inline int psi(const Graph& g) {
    int best = 0;
    for_each_partition(g.order(), [&](const std::vector<int>& a, int blocks) {
        if (blocks > best && pseudocomplete(g, a, blocks)) best = blocks;
    });
    return best;
}

inline int omega(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U) s.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i)
            for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = g.adjacent(s[i], s[j]);
        if (clique) best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

inline Graph induced(const Graph& g, const std::vector<int>& kept) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (g.adjacent(kept[i], kept[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(kept.size()), edges);
}

// mpd(k) for k = 0..n straight from the definition.
inline std::vector<int> mpd(const Graph& g) {
    const int n = g.order();
    const int whole = psi(g);
    std::vector<int> out(static_cast<std::size_t>(n) + 1, n + 1);
    for (std::uint64_t removed = 0; removed < (std::uint64_t{1} << n); ++removed) {
        std::vector<int> kept;
        for (int v = 0; v < n; ++v)
            if (!((removed >> v) & 1U)) kept.push_back(v);
        const int k = n - static_cast<int>(kept.size());
        out[static_cast<std::size_t>(k)] = std::min(out[static_cast<std::size_t>(k)], whole - psi(induced(g, kept)));
    }
    return out;
}

inline Graph join(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, g.order() + v);
    return Graph(g.order() + h.order(), edges);
}

}  // namespace oracle
