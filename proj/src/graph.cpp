#include "psilab/graph.hpp"

#include <algorithm>

#include "psilab/errors.hpp"

namespace psilab {

namespace {

void check_order(int n) {
    if (n < 0) throw DomainError("negative vertex count");
    if (n > kMaxVertices)
        throw UnsupportedSize("graphs are limited to " + std::to_string(kMaxVertices) + " vertices, got " +
                              std::to_string(n));
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) throw DomainError("vertex " + std::to_string(v) + " out of range");
        insert(v);
    }
}

VertexSet VertexSet::from_vector(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) throw DomainError("vertex " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

bool lex_less(VertexSet a, VertexSet b) {
    // The first differing vertex decides, unless one list is a prefix of the other.
    std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return false;
    int first = std::countr_zero(diff);
    std::uint64_t below = (std::uint64_t{1} << first) - 1;
    bool a_has = a.contains(first);
    // a has `first`, b does not: b continues with something larger, or ends.
    if (a_has) return (b.mask_ & ~below) != 0;
    return (a.mask_ & ~below) == 0;
}

Graph::Graph(int n, std::string label) : n_(n), rows_(static_cast<std::size_t>(n), 0), label_(std::move(label)) {
    check_order(n);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string label) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    *this = std::move(b).build(std::move(label));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(rows_[u] & ~((std::uint64_t{2} << u) - 1)).to_vector()) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
    return *this;
}

Graph GraphBuilder::build(std::string label) && {
    Graph g;
    g.n_ = n_;
    g.rows_ = std::move(rows_);
    g.label_ = std::move(label);
    int twice = 0;
    for (auto r : g.rows_) twice += std::popcount(r);
    g.edge_count_ = twice / 2;
    return g;
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build("K" + std::to_string(n));
}

Graph edgeless_graph(int n) { return GraphBuilder(n).build("E" + std::to_string(n)); }

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build("P" + std::to_string(n));
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build("C" + std::to_string(n));
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order();
    const int nh = h.order();
    GraphBuilder b(ng + nh);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) b.add_edge(u, ng + v);
    std::string label;
    if (!g.label().empty() && !h.label().empty()) label = "(" + g.label() + ")v(" + h.label() + ")";
    return std::move(b).build(std::move(label));
}

Graph nabla_k(const Graph& g, int k) {
    if (k < 1) throw DomainError("nabla_k needs k >= 1, got " + std::to_string(k));
    if (k == 1) return g;
    check_order(g.order() * k);
    Graph out = g;
    for (int i = 1; i < k; ++i) out = join(out, g);
    return out.with_label(g.label().empty() ? std::string{} : "nabla^" + std::to_string(k) + "(" + g.label() + ")");
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    GraphBuilder b(g.order() + h.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(g.order() + u, g.order() + v);
    return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet kept) {
    if (!kept.subset_of(g.vertices())) throw DomainError("vertex set exceeds graph order");
    InducedSubgraph out;
    out.original_vertex = kept.to_vector();
    const int m = static_cast<int>(out.original_vertex.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(out.original_vertex[i], out.original_vertex[j])) b.add_edge(i, j);
    out.graph = std::move(b).build();
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet removed) {
    if (!removed.subset_of(g.vertices()))
        throw DomainError("deleted vertex " + std::to_string(removed.bound() - 1) + " out of range for order " +
                          std::to_string(g.order()));
    return induced_subgraph(g, g.vertices() - removed);
}

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s.to_vector())
        if (!(s - VertexSet({v})).subset_of(g.neighbors(v))) return false;
    return true;
}

namespace {

// Branch and bound over candidate bitsets, bounded by a greedy colouring of the
// candidates (each colour class is an independent set, so contributes at most one).
class MaxClique {
public:
    explicit MaxClique(const Graph& g) : g_(g) {}

    CliqueResult run() {
        expand(0, g_.vertices().mask(), 0);
        return {best_size_, VertexSet(best_)};
    }

private:
    int colour_bound(std::uint64_t cand) const {
        int colours = 0;
        while (cand != 0) {
            ++colours;
            std::uint64_t avail = cand;
            while (avail != 0) {
                int v = std::countr_zero(avail);
                cand &= ~(std::uint64_t{1} << v);
                avail &= ~(std::uint64_t{1} << v);
                avail &= ~g_.neighbors(v).mask();
            }
        }
        return colours;
    }

    void expand(std::uint64_t current, std::uint64_t cand, int size) {
        if (cand == 0) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = current;
            }
            return;
        }
        if (size + colour_bound(cand) <= best_size_) return;
        while (cand != 0) {
            if (size + std::popcount(cand) <= best_size_) return;
            int v = std::countr_zero(cand);
            std::uint64_t bit = std::uint64_t{1} << v;
            expand(current | bit, cand & g_.neighbors(v).mask(), size + 1);
            cand &= ~bit;
        }
    }

    const Graph& g_;
    int best_size_ = 0;
    std::uint64_t best_ = 0;
};

void collect_cliques(const Graph& g, std::uint64_t current, std::uint64_t cand, int remaining,
                     std::vector<VertexSet>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    while (std::popcount(cand) >= remaining) {
        int v = std::countr_zero(cand);
        std::uint64_t bit = std::uint64_t{1} << v;
        cand &= ~bit;
        collect_cliques(g, current | bit, cand & g.neighbors(v).mask(), remaining - 1, out);
    }
}

}  // namespace

CliqueResult clique_number(const Graph& g) {
    if (g.order() == 0) return {};
    return MaxClique(g).run();
}

std::vector<VertexSet> cliques_of_size(const Graph& g, int size) {
    std::vector<VertexSet> out;
    if (size < 0) return out;
    collect_cliques(g, 0, g.vertices().mask(), size, out);
    return out;
}

}  // namespace psilab
