#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psilab {

/// Vertices are stored as bits of a 64-bit word, so every graph here has at most
/// this many vertices.
inline constexpr int kMaxVertices = 64;

/// Largest order the short graph6 form can encode.
inline constexpr int kMaxGraph6Vertices = 62;

/// A subset of the vertices 0..63 of some graph.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
    VertexSet(std::initializer_list<int> vertices);

    static VertexSet from_vector(const std::vector<int>& vertices);
    static constexpr VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
    /// Largest member plus one; 0 for the empty set.
    constexpr int bound() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

    void insert(int v) { mask_ |= std::uint64_t{1} << v; }
    void erase(int v) { mask_ &= ~(std::uint64_t{1} << v); }

    std::vector<int> to_vector() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    /// Lexicographic comparison of the sorted member lists.
    friend bool lex_less(VertexSet a, VertexSet b);

private:
    std::uint64_t mask_ = 0;
};

/// Simple finite undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::string label = {});
    Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string label = {});

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }
    const std::string& label() const { return label_; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
    int degree(int v) const { return std::popcount(rows_[v]); }
    VertexSet vertices() const { return VertexSet::all(n_); }

    std::vector<std::pair<int, int>> edges() const;

    Graph with_label(std::string label) const;

    /// Same vertex count and adjacency; labels are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> rows_;
    std::string label_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(int u, int v);
    int order() const { return n_; }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    Graph build(std::string label = {}) &&;

private:
    int n_;
    std::vector<std::uint64_t> rows_;
};

// Named families.
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// graph6 (short form).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);
/// Reads one graph per line; blank lines and lines starting with ">>" are skipped,
/// except that a leading ">>graph6<<" header is stripped from the line it prefixes.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Constructions.
Graph join(const Graph& g, const Graph& h);
Graph nabla_k(const Graph& g, int k);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

struct InducedSubgraph {
    Graph graph;
    /// original_vertex[i] is the vertex of the parent graph that became vertex i.
    std::vector<int> original_vertex;
};

/// Induced subgraph on the complement of `removed`, order-preserving relabel.
InducedSubgraph delete_vertices(const Graph& g, VertexSet removed);
/// Induced subgraph on `kept`, order-preserving relabel.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet kept);

struct CliqueResult {
    int size = 0;
    VertexSet witness;
};

/// Exact clique number with a maximum clique. n = 0 gives size 0 and an empty witness.
CliqueResult clique_number(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);
/// Every clique of exactly `size` vertices, in lexicographic order.
std::vector<VertexSet> cliques_of_size(const Graph& g, int size);

}  // namespace psilab
