#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "psilab/graph.hpp"

namespace psilab {

/// Surjective assignment of the vertices 0..n-1 to the colors 1..t.
class Coloring {
public:
    Coloring() = default;
    /// Throws ContractViolation unless every entry is >= 1 and every color
    /// 1..max is used.
    explicit Coloring(std::vector<int> colors);

    int num_colors() const { return num_colors_; }
    int order() const { return static_cast<int>(colors_.size()); }
    int operator[](int v) const { return colors_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& colors() const { return colors_; }

    /// Vertices carrying `color`.
    VertexSet color_class(int color) const;
    /// Colors renumbered in order of first appearance along the vertex order.
    Coloring normalized() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> colors_;
    int num_colors_ = 0;
};

struct PseudocompleteCheck {
    bool ok = false;
    /// One uncovered color pair {i, j}, i < j, when !ok.
    std::optional<std::pair<int, int>> missing;

    explicit operator bool() const { return ok; }
};

/// Every unordered pair of distinct colors meets along some edge.
/// Throws ContractViolation if the coloring does not cover exactly g's vertices.
PseudocompleteCheck is_pseudocomplete(const Graph& g, const Coloring& c);

/// Colors that meet along some edge, as a symmetric bit matrix over 0-based colors.
std::vector<std::uint64_t> color_adjacency(const Graph& g, const Coloring& c);

/// n_k = number of colors used exactly k times, plus the colors used once.
struct MultiplicityProfile {
    std::map<int, int> counts;
    std::vector<int> singleton_colors;
    /// Vertices carrying a singleton color.
    VertexSet singleton_vertices;

    int count(int k) const {
        auto it = counts.find(k);
        return it == counts.end() ? 0 : it->second;
    }
};

MultiplicityProfile multiplicity_profile(const Graph& g, const Coloring& c);

}  // namespace psilab
