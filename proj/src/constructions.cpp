#include "psilab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "psilab/errors.hpp"

namespace psilab {

namespace {

Coloring checked(const Graph& g, std::vector<int> colors, int expected, const char* what) {
    Coloring c = Coloring(std::move(colors)).normalized();
    if (c.num_colors() != expected)
        throw InternalInconsistency(std::string(what) + " produced " + std::to_string(c.num_colors()) +
                                    " colors, expected " + std::to_string(expected));
    if (auto check = is_pseudocomplete(g, c); !check) {
        throw InternalInconsistency(std::string(what) + " is not pseudocomplete: colors " +
                                    std::to_string(check.missing->first) + " and " +
                                    std::to_string(check.missing->second) + " never meet");
    }
    return c;
}

std::size_t at(int v) { return static_cast<std::size_t>(v); }

}  // namespace

int join_lower_bound(const Graph& g, const Graph& h) {
    return std::min(clique_number(g).size + h.order(), clique_number(h).size + g.order());
}

Coloring join_coloring_lower(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1) throw DomainError("join_coloring_lower needs two nonempty graphs");
    const int ng = g.order();
    const CliqueResult kg = clique_number(g);
    const CliqueResult kh = clique_number(h);
    std::vector<int> colors(at(ng + h.order()), 0);
    int next = 0;
    for (int v : kg.witness.to_vector()) colors[at(v)] = ++next;
    const int first_h_clique_color = next + 1;
    for (int v : kh.witness.to_vector()) colors[at(ng + v)] = ++next;

    std::vector<int> xg = (g.vertices() - kg.witness).to_vector();
    std::vector<int> xh = (h.vertices() - kh.witness).to_vector();
    for (int& v : xh) v += ng;
    const bool g_smaller = xg.size() <= xh.size();
    const std::vector<int>& small = g_smaller ? xg : xh;
    const std::vector<int>& large = g_smaller ? xh : xg;
    for (std::size_t i = 0; i < small.size(); ++i) {
        ++next;
        colors[at(small[i])] = next;
        colors[at(large[i])] = next;
    }
    // Surplus vertices on the larger side add nothing; park them in a clique color of their own side.
    const int park = g_smaller ? first_h_clique_color : 1;
    for (std::size_t i = small.size(); i < large.size(); ++i) colors[at(large[i])] = park;

    return checked(join(g, h), std::move(colors), join_lower_bound(g, h), "join_coloring_lower");
}

Coloring nabla_k_coloring(const Graph& g, int k) {
    if (k < 2) throw DomainError("nabla_k_coloring needs k >= 2, got " + std::to_string(k));
    if (g.order() < 1) throw DomainError("nabla_k_coloring needs a nonempty graph");
    const int n = g.order();
    const CliqueResult clique = clique_number(g);
    const int omega = clique.size;
    const bool odd_parity = (omega + n) % 2 == 1;

    if (odd_parity && k % 2 == 0) {
        if (k == 2) return join_coloring_lower(g, g);
        return nabla_k_coloring(join(g, g), k / 2);
    }

    const std::vector<int> clique_vertices = clique.witness.to_vector();
    const std::vector<int> rest = (g.vertices() - clique.witness).to_vector();
    const int q = static_cast<int>(rest.size()) / 2;
    std::vector<int> colors(at(k * n), 0);
    int next = 0;
    for (int copy = 0; copy < k; ++copy)
        for (int v : clique_vertices) colors[at(copy * n + v)] = ++next;
    for (int copy = 0; copy < k; ++copy) {
        const int partner = (copy + 1) % k;
        for (int j = 0; j < q; ++j) {
            ++next;
            colors[at(copy * n + rest[at(j)])] = next;
            colors[at(partner * n + rest[at(q + j)])] = next;
        }
    }
    if (odd_parity) {
        const int v0 = rest.back();
        const int first_extra = next + 1;
        for (int copy = 0; copy + 1 < k; ++copy) colors[at(copy * n + v0)] = first_extra + copy / 2;
        colors[at((k - 1) * n + v0)] = first_extra;
    }
    return checked(nabla_k(g, k), std::move(colors), k * (omega + n) / 2, "nabla_k_coloring");
}

const char* to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::critical: return "critical";
        case StructureKind::weakly_type_1: return "weakly-type-1";
        case StructureKind::weakly_type_2: return "weakly-type-2";
        case StructureKind::none: return "none";
    }
    return "none";
}

namespace {

// Visits every partition of `vertices` into unordered pairs.
// The visitor returns true to stop.
bool for_each_pairing(std::vector<int>& vertices, std::vector<std::pair<int, int>>& pairs,
                      const std::function<bool(const std::vector<std::pair<int, int>>&)>& visit) {
    if (vertices.empty()) return visit(pairs);
    const int first = vertices.front();
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const int mate = vertices[i];
        std::vector<int> rest;
        rest.reserve(vertices.size() - 2);
        for (std::size_t j = 1; j < vertices.size(); ++j)
            if (j != i) rest.push_back(vertices[j]);
        pairs.emplace_back(first, mate);
        bool stop = for_each_pairing(rest, pairs, visit);
        pairs.pop_back();
        if (stop) return true;
    }
    return false;
}

class ShapedSearch {
public:
    ShapedSearch(const Graph& g, std::uint64_t max_candidates) : g_(g), max_candidates_(max_candidates) {}

    // Singletons on `singles`, an optional triple, pairs over the remaining vertices.
    std::optional<Coloring> try_shape(VertexSet singles, std::optional<VertexSet> triple) {
        VertexSet rest = g_.vertices() - singles;
        if (triple) rest = rest - *triple;
        if (rest.size() % 2 != 0) return std::nullopt;
        std::vector<int> base(at(g_.order()), 0);
        int next = 0;
        for (int v : singles.to_vector()) base[at(v)] = ++next;
        if (triple) {
            ++next;
            for (int v : triple->to_vector()) base[at(v)] = next;
        }
        std::vector<int> verts = rest.to_vector();
        std::vector<std::pair<int, int>> pairs;
        std::optional<Coloring> hit;
        for_each_pairing(verts, pairs, [&](const std::vector<std::pair<int, int>>& ps) {
            if (++candidates_ > max_candidates_)
                throw Inconclusive("structure search exceeded " + std::to_string(max_candidates_) + " candidates");
            std::vector<int> colors = base;
            int c = next;
            for (auto [a, b] : ps) {
                ++c;
                colors[at(a)] = c;
                colors[at(b)] = c;
            }
            Coloring candidate(std::move(colors));
            if (is_pseudocomplete(g_, candidate)) {
                hit = candidate.normalized();
                return true;
            }
            return false;
        });
        return hit;
    }

private:
    const Graph& g_;
    std::uint64_t max_candidates_;
    std::uint64_t candidates_ = 0;
};

StructureKind classify(const MultiplicityProfile& p, int omega, int n, bool critical) {
    for (auto [k, nk] : p.counts)
        if (nk > 0 && (k < 1 || k > 3)) return StructureKind::none;
    const int n1 = p.count(1);
    const int n2 = p.count(2);
    const int n3 = p.count(3);
    if (critical) {
        if (n1 == omega && n3 == 0 && 2 * n2 == n - omega) return StructureKind::critical;
        return StructureKind::none;
    }
    if (n1 == omega && n3 == 1 && 2 * n2 == n - omega - 3) return StructureKind::weakly_type_1;
    if (n1 == omega - 1 && n3 == 0 && 2 * n2 == n - omega + 1) return StructureKind::weakly_type_2;
    return StructureKind::none;
}

}  // namespace

StructureReport structure_coloring(const Graph& g, const StructureOptions& options) {
    StructureReport r;
    const int n = g.order();
    r.omega = clique_number(g).size;
    r.psi = psi_value(g, options.limits);
    r.critical = 2 * r.psi == r.omega + n;
    r.weakly_critical = r.psi == (r.omega + n) / 2;
    const std::int64_t e8 = 8 * static_cast<std::int64_t>(g.edge_count());
    if (!r.weakly_critical) {
        r.kind = StructureKind::none;
        r.edge_bound = {0, 1};
        r.edge_bound_satisfied = true;
        return r;
    }
    const std::int64_t s = n + r.omega;
    r.edge_bound = r.critical ? Rational{s * (s - 2), 8} : Rational{(s - 1) * (s - 3), 8};
    r.edge_bound_satisfied = e8 >= r.edge_bound.num;
    r.kind = r.critical ? StructureKind::critical : StructureKind::weakly_type_1;

    ShapedSearch search(g, options.max_candidates);
    auto record = [&](StructureKind kind, const Coloring& c) {
        if (std::find(r.kinds_found.begin(), r.kinds_found.end(), kind) == r.kinds_found.end())
            r.kinds_found.push_back(kind);
        if (!r.found) {
            r.found = true;
            r.kind = kind;
            r.coloring = c;
            r.profile = multiplicity_profile(g, c);
        }
    };

    if (r.critical) {
        for (VertexSet k : cliques_of_size(g, r.omega)) {
            if (auto c = search.try_shape(k, std::nullopt)) {
                record(StructureKind::critical, *c);
                break;
            }
        }
    } else {
        bool type1 = false;
        for (VertexSet k : cliques_of_size(g, r.omega)) {
            for (VertexSet triple : k_subsets(g.vertices() - k, 3)) {
                if (auto c = search.try_shape(k, triple)) {
                    record(StructureKind::weakly_type_1, *c);
                    type1 = true;
                    break;
                }
            }
            if (type1) break;
        }
        for (VertexSet q : cliques_of_size(g, r.omega - 1)) {
            if (auto c = search.try_shape(q, std::nullopt)) {
                record(StructureKind::weakly_type_2, *c);
                break;
            }
        }
    }

    if (!r.found && n <= options.full_enumeration_max_order) {
        for_each_pseudocomplete_coloring(
            g, r.psi,
            [&](const Coloring& c) {
                StructureKind kind = classify(multiplicity_profile(g, c), r.omega, n, r.critical);
                if (kind != StructureKind::none) record(kind, c);
                return true;
            },
            options.limits);
    }
    if (!r.found) r.kind = r.critical ? StructureKind::critical : StructureKind::weakly_type_1;
    return r;
}

bool contraction_complete_check(const Graph& g, const Coloring& c) {
    const int n = g.order();
    const int omega = clique_number(g).size;
    MultiplicityProfile p = multiplicity_profile(g, c);
    const int n1 = p.count(1);
    const int n2 = p.count(2);
    if (n1 != omega || n1 + 2 * n2 != n)
        throw ContractViolation("contraction check needs omega singleton colors and every other color doubled");

    // Vertices of one color collapse to one node.
    const int t = c.num_colors();
    GraphBuilder contracted(t);
    for (auto [u, v] : g.edges()) {
        const int a = c[u] - 1;
        const int b = c[v] - 1;
        if (a != b && !contracted.adjacent(a, b)) contracted.add_edge(a, b);
    }
    const Graph x = std::move(contracted).build();
    return t == omega + (n - omega) / 2 && x.edge_count() == t * (t - 1) / 2;
}

Coloring boost_coloring(const Graph& g, const Graph& h, const WitnessPair& wg, const WitnessPair& wh,
                        const SearchLimits& limits) {
    if (wg.kind != WitnessKind::not_weakly_critical || wh.kind != WitnessKind::not_weakly_critical)
        throw ContractViolation("boost_coloring needs not-weakly-critical witnesses for both graphs");
    if (auto err = validate_witness(g, wg, limits)) throw ContractViolation("invalid witness for the first graph: " + *err);
    if (auto err = validate_witness(h, wh, limits)) throw ContractViolation("invalid witness for the second graph: " + *err);

    // The side with the smaller xi donates V \ M1; the other side gives up xi removable vertices.
    const bool g_donates = wg.xi <= wh.xi;
    const Graph& donor = g_donates ? g : h;
    const WitnessPair& wd = g_donates ? wg : wh;
    const Graph& other = g_donates ? h : g;
    const WitnessPair& wo = g_donates ? wh : wg;
    const int donor_offset = g_donates ? 0 : g.order();
    const int other_offset = g_donates ? g.order() : 0;
    const int xi = wd.xi;

    std::vector<int> colors(at(g.order() + h.order()), 0);
    const Coloring& base = wo.coloring;
    for (int v = 0; v < other.order(); ++v) colors[at(other_offset + v)] = base[v];
    int next = base.num_colors();

    const std::vector<int> removable = wo.removable_set.to_vector();
    const std::vector<int> outside = (donor.vertices() - wd.m1).to_vector();
    if (static_cast<int>(removable.size()) < xi || static_cast<int>(outside.size()) < 2 * xi)
        throw ContractViolation("witness sizes do not support the construction");

    // P0 = first xi vertices of V \ M1, P1 = the rest; fresh color j sits on P0[j] and
    // on P1 cyclically. P0 then trades its colors with the first xi removable vertices.
    const int fresh = next;
    for (int j = 0; j < xi; ++j) {
        const int p0 = outside[at(j)];
        const int c_vertex = removable[at(j)];
        colors[at(donor_offset + p0)] = base[c_vertex];
        colors[at(other_offset + c_vertex)] = fresh + 1 + j;
    }
    for (std::size_t i = static_cast<std::size_t>(xi); i < outside.size(); ++i)
        colors[at(donor_offset + outside[i])] = fresh + 1 + static_cast<int>(i - static_cast<std::size_t>(xi)) % xi;
    next = fresh + xi;

    const InducedSubgraph m1 = induced_subgraph(donor, wd.m1);
    if (m1.graph.order() > 0) {
        PsiOptions popts;
        popts.limits = limits;
        const PsiResult inner = psi(m1.graph, popts);
        if (!inner.exact) throw Inconclusive("node budget exhausted coloring M1");
        for (int i = 0; i < m1.graph.order(); ++i)
            colors[at(donor_offset + m1.original_vertex[at(i)])] = next + inner.witness[i];
    }

    return checked(join(g, h), std::move(colors), wg.psi_g + wh.psi_g + 1, "boost_coloring");
}

}  // namespace psilab
