#include "psilab/coloring.hpp"

#include <algorithm>
#include <string>

#include "psilab/errors.hpp"

namespace psilab {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    if (colors_.empty()) return;
    int t = 0;
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] < 1)
            throw ContractViolation("vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v]) +
                                    "; colors start at 1");
        t = std::max(t, colors_[v]);
    }
    std::vector<bool> used(static_cast<std::size_t>(t) + 1, false);
    for (int c : colors_) used[static_cast<std::size_t>(c)] = true;
    for (int c = 1; c <= t; ++c)
        if (!used[static_cast<std::size_t>(c)])
            throw ContractViolation("coloring is not surjective: color " + std::to_string(c) + " unused");
    num_colors_ = t;
}

VertexSet Coloring::color_class(int color) const {
    VertexSet s;
    for (int v = 0; v < order(); ++v)
        if (colors_[static_cast<std::size_t>(v)] == color) s.insert(v);
    return s;
}

Coloring Coloring::normalized() const {
    std::vector<int> rename(static_cast<std::size_t>(num_colors_) + 1, 0);
    int next = 0;
    std::vector<int> out(colors_.size());
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        int& r = rename[static_cast<std::size_t>(colors_[v])];
        if (r == 0) r = ++next;
        out[v] = r;
    }
    return Coloring(std::move(out));
}

namespace {

void require_matches(const Graph& g, const Coloring& c) {
    if (c.order() != g.order())
        throw ContractViolation("coloring covers " + std::to_string(c.order()) + " vertices, graph has " +
                                std::to_string(g.order()));
    if (c.num_colors() > kMaxVertices) throw UnsupportedSize("more than 64 colors");
}

}  // namespace

std::vector<std::uint64_t> color_adjacency(const Graph& g, const Coloring& c) {
    require_matches(g, c);
    std::vector<std::uint64_t> meets(static_cast<std::size_t>(c.num_colors()), 0);
    for (auto [u, v] : g.edges()) {
        int a = c[u] - 1;
        int b = c[v] - 1;
        if (a == b) continue;
        meets[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        meets[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
    return meets;
}

PseudocompleteCheck is_pseudocomplete(const Graph& g, const Coloring& c) {
    auto meets = color_adjacency(g, c);
    const int t = c.num_colors();
    for (int a = 0; a < t; ++a) {
        std::uint64_t others = VertexSet::all(t).mask() & ~(std::uint64_t{1} << a);
        std::uint64_t missing = others & ~meets[static_cast<std::size_t>(a)];
        if (missing != 0) return {false, std::make_pair(a + 1, std::countr_zero(missing) + 1)};
    }
    return {true, std::nullopt};
}

MultiplicityProfile multiplicity_profile(const Graph& g, const Coloring& c) {
    require_matches(g, c);
    std::vector<int> uses(static_cast<std::size_t>(c.num_colors()) + 1, 0);
    for (int v = 0; v < c.order(); ++v) ++uses[static_cast<std::size_t>(c[v])];
    MultiplicityProfile p;
    for (int color = 1; color <= c.num_colors(); ++color) {
        int k = uses[static_cast<std::size_t>(color)];
        ++p.counts[k];
        if (k == 1) {
            p.singleton_colors.push_back(color);
            p.singleton_vertices = p.singleton_vertices | c.color_class(color);
        }
    }
    int total = 0;
    int colors = 0;
    for (auto [k, nk] : p.counts) {
        total += k * nk;
        colors += nk;
    }
    if (total != g.order() || colors != c.num_colors())
        throw InternalInconsistency("multiplicity profile does not sum to the vertex count");
    return p;
}

}  // namespace psilab
