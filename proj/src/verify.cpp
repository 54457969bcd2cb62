#include "psilab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "psilab/constructions.hpp"
#include "psilab/errors.hpp"
#include "psilab/mpd.hpp"

namespace psilab {

namespace {

using nlohmann::json;

std::string key_of(const Graph& g) {
    if (g.order() > kMaxGraph6Vertices) throw UnsupportedSize("verifier keys graphs by graph6; order too large");
    return emit_graph6(g);
}

struct Facts {
    std::string g6;
    int n = 0;
    int m = 0;
    int omega = 0;
    int psi = 0;
    Coloring witness;
    bool critical = false;
    bool weakly = false;
};

CriticalityClass class_of(const Facts& f) {
    if (f.critical) return CriticalityClass::critical;
    if (f.weakly) return CriticalityClass::weakly_critical;
    return CriticalityClass::not_weakly_critical;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
}

// Outcome of one item: nullopt when the predicate held.
using Outcome = std::optional<CheckFailure>;

CheckFailure failure(std::vector<std::string> graphs, json observed, std::string expected) {
    return CheckFailure{std::move(graphs), std::move(observed), std::move(expected)};
}

}  // namespace

const char* to_string(CriticalityClass c) {
    switch (c) {
        case CriticalityClass::critical: return "critical";
        case CriticalityClass::weakly_critical: return "weakly-critical";
        case CriticalityClass::not_weakly_critical: return "not-weakly-critical";
    }
    return "critical";
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed: return "passed";
        case CheckStatus::failed: return "failed";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "failed";
}

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> catalog = {
        {"lemma-2-upper-bound", "omega <= Psi <= min(floor((omega+n)/2), edge bound), attained by complete graphs"},
        {"corollary-4-join-superadditivity", "Psi(G) + Psi(H) <= Psi(G v H)"},
        {"lemma-10-criticality-formula", "critical by mpd iff 2 Psi = omega + n"},
        {"thm-join-bracket", "min(omega_G + n_H, omega_H + n_G) <= Psi(G v H) <= floor((omega_G+omega_H+n_G+n_H)/2)"},
        {"thm-mpd-additivity-criterion",
         "Psi additive iff mpd_G(k) + mpd_H(k) >= k for all k; pairs whose only equality is at k = 0 are counted"},
        {"thm-additive-when-critical", "G, H critical implies Psi(G v H) = Psi(G) + Psi(H)"},
        {"remark-p3-c8", "Psi(P3) = 2, Psi(C8) = 4, neither critical, Psi(P3 v C8) = 6"},
        {"thm-crit-join-crit", "G, H critical implies G v H critical"},
        {"remark-p3-p3", "P3 not critical, Psi(P3 v P3) = 5 and P3 v P3 critical"},
        {"thm-critical-structure+edge-bound",
         "critical G has a maximum coloring with omega singletons and doubled colors; contraction is complete; "
         "|E| >= (n+omega)(n+omega-2)/8"},
        {"def-weak-crit-equivalence",
         "weakly critical by mpd iff Psi = floor((omega+n)/2); critical implies weakly critical; equal when omega+n even"},
        {"cor-wc-plus-c", "G critical and H weakly critical implies Psi additive"},
        {"thm-weakly-critical-structure+edge-bound",
         "weakly critical, not critical G has a type (1) or (2) maximum coloring; |E| >= (n+omega-1)(n+omega-3)/8"},
        {"thm-witness-iff-not-weakly-critical", "a nested witness pair with |M2 \\ M1| = 2 exists iff G is not weakly critical"},
        {"thm-witness-iff-not-critical",
         "a nested witness pair with |M2 \\ M1| = 2, or 1 with |V \\ M2| even, exists iff G is not critical"},
        {"thm-additive-implies-one-weakly-critical",
         "Psi additive implies G or H weakly critical; two non-weakly-critical graphs admit Psi(G)+Psi(H)+1 colors"},
        {"thm-gjoing-2psi-iff-critical", "G critical iff Psi(G v G) = 2 Psi(G)"},
        {"eqn-psi-gjoing-omega-plus-n", "Psi(G v G) = omega + n and G v G is critical"},
        {"thm-nablak-critical-parity", "nabla^k G critical iff k (omega + n) even"},
        {"thm-nablak-always-weakly-critical", "nabla^k G weakly critical, realised by floor(k(omega+n)/2) colors"},
        {"thm-nablak-kpsi-even", "k (omega + n) even: G critical iff k Psi(G) = Psi(nabla^k G)"},
        {"thm-nablak-kpsi-odd", "k >= 3, k (omega + n) odd: G not critical; weakly critical iff k Psi + floor(k/2) = Psi(nabla^k G)"},
    };
    return catalog;
}

struct Verifier::Impl {
    explicit Impl(const VerifyOptions& o) : opts(o) {
        threads = o.threads > 0 ? o.threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    }

    const VerifyOptions& opts;
    int threads = 1;
    std::mutex mu;
    std::unordered_map<std::string, std::shared_ptr<const Facts>> facts;
    std::unordered_map<std::string, int> join_psi;
    std::unordered_map<std::string, std::shared_ptr<const MpdProfile>> profiles;
    std::unordered_map<std::string, std::shared_ptr<const StructureReport>> structures;
    std::unordered_map<std::string, std::shared_ptr<const std::optional<WitnessPair>>> witnesses;

    int bound_of(const Graph& g) const { return opts.upper_bound ? opts.upper_bound(g) : psi_upper_bound(g); }

    PsiResult solve(const Graph& g, std::optional<Coloring> hint = std::nullopt) const {
        PsiOptions po;
        po.limits = opts.limits;
        po.upper_bound = opts.upper_bound;
        po.hint = std::move(hint);
        PsiResult r = psi(g, po);
        if (!r.exact) throw Inconclusive("budget exhausted");
        return r;
    }

    std::shared_ptr<const Facts> facts_of(const Graph& g, std::optional<Coloring> hint = std::nullopt) {
        const std::string k = key_of(g);
        {
            std::lock_guard lock(mu);
            if (auto it = facts.find(k); it != facts.end()) return it->second;
        }
        auto f = std::make_shared<Facts>();
        f->g6 = k;
        f->n = g.order();
        f->m = g.edge_count();
        f->omega = clique_number(g).size;
        PsiResult r = solve(g, std::move(hint));
        f->psi = r.value;
        f->witness = r.witness;
        f->critical = 2 * f->psi == f->omega + f->n;
        f->weakly = f->psi == (f->omega + f->n) / 2;
        std::lock_guard lock(mu);
        return facts.emplace(k, std::move(f)).first->second;
    }

    int psi_of_join(const Graph& g, const Graph& h) {
        const std::string k = key_of(g) + "|" + key_of(h);
        {
            std::lock_guard lock(mu);
            if (auto it = join_psi.find(k); it != join_psi.end()) return it->second;
        }
        const int value = solve(join(g, h)).value;
        std::lock_guard lock(mu);
        join_psi[k] = value;
        return value;
    }

    std::shared_ptr<const MpdProfile> profile_of(const Graph& g, int max_k) {
        const std::string k = key_of(g);
        max_k = std::min(max_k, g.order());
        {
            std::lock_guard lock(mu);
            if (auto it = profiles.find(k); it != profiles.end() && it->second->max_k() >= max_k) return it->second;
        }
        auto p = std::make_shared<const MpdProfile>(mpd_profile(g, max_k, opts.limits));
        std::lock_guard lock(mu);
        auto& slot = profiles[k];
        if (!slot || slot->max_k() < p->max_k()) slot = p;
        return slot;
    }

    std::shared_ptr<const StructureReport> structure_of(const Graph& g) {
        const std::string k = key_of(g);
        {
            std::lock_guard lock(mu);
            if (auto it = structures.find(k); it != structures.end()) return it->second;
        }
        StructureOptions so;
        so.limits = opts.limits;
        so.full_enumeration_max_order = opts.structure_max_order;
        auto s = std::make_shared<const StructureReport>(structure_coloring(g, so));
        std::lock_guard lock(mu);
        return structures.emplace(k, std::move(s)).first->second;
    }

    std::shared_ptr<const std::optional<WitnessPair>> witness_of(const Graph& g, WitnessKind kind) {
        const std::string k = key_of(g) + (kind == WitnessKind::not_critical ? "#c" : "#w");
        {
            std::lock_guard lock(mu);
            if (auto it = witnesses.find(k); it != witnesses.end()) return it->second;
        }
        WitnessOptions wo;
        wo.limits = opts.limits;
        wo.max_order = opts.subset_max_order;
        auto w = std::make_shared<const std::optional<WitnessPair>>(
            kind == WitnessKind::not_critical ? find_witness_not_critical(g, wo) : find_witness_not_weakly_critical(g, wo));
        std::lock_guard lock(mu);
        return witnesses.emplace(k, std::move(w)).first->second;
    }

    // Runs `body` on every item, folding outcomes into `r`. Exceptions other than
    // Inconclusive count as failures of that item.
    void run_items(CheckResult& r, std::size_t count, const std::function<std::vector<std::string>(std::size_t)>& graphs,
                   const std::function<Outcome(std::size_t)>& body, int workers) {
        std::mutex result_mu;
        parallel_for(count, workers, [&](std::size_t i) {
            Outcome out;
            bool gave_up = false;
            try {
                out = body(i);
            } catch (const Inconclusive&) {
                gave_up = true;
            } catch (const std::exception& e) {
                out = failure(graphs(i), json{{"error", e.what()}}, "no exception");
            }
            std::lock_guard lock(result_mu);
            ++r.evaluated;
            if (gave_up) {
                ++r.inconclusive;
            } else if (out) {
                ++r.failure_count;
                if (r.failures.size() < opts.max_failures_kept) r.failures.push_back(std::move(*out));
            }
        });
    }
};

Verifier::Verifier(VerifyOptions options) : options_(std::move(options)), impl_(std::make_unique<Impl>(options_)) {}

Verifier::~Verifier() = default;

namespace {

struct PairList {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

PairList pairs_within(const std::vector<Graph>& corpus, int max_order) {
    PairList out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (corpus[i].order() < 1) continue;
        for (std::size_t j = i; j < corpus.size(); ++j)
            if (corpus[j].order() >= 1 && corpus[i].order() + corpus[j].order() <= max_order) out.pairs.emplace_back(i, j);
    }
    return out;
}

std::string order_range(const std::vector<Graph>& corpus) {
    if (corpus.empty()) return "empty corpus";
    auto [lo, hi] = std::minmax_element(corpus.begin(), corpus.end(),
                                        [](const Graph& a, const Graph& b) { return a.order() < b.order(); });
    return std::to_string(corpus.size()) + " graphs on " + std::to_string(lo->order()) + ".." +
           std::to_string(hi->order()) + " vertices";
}

json coloring_json(const Coloring& c) { return c.colors(); }

}  // namespace

namespace {

using Impl = Verifier::Impl;

struct Ctx {
    Impl& im;
    const std::vector<Graph>& corpus;
    CheckResult& r;
    int workers;

    std::vector<std::string> codes(std::initializer_list<const Graph*> gs) const {
        std::vector<std::string> out;
        for (const Graph* g : gs) out.push_back(key_of(*g));
        return out;
    }

    // Facts for every corpus graph; items that run out of budget are dropped
    // from later filtering and counted once here.
    std::vector<std::shared_ptr<const Facts>> warm() {
        std::vector<std::shared_ptr<const Facts>> out(corpus.size());
        std::atomic<std::size_t> gave_up{0};
        parallel_for(corpus.size(), workers, [&](std::size_t i) {
            try {
                out[i] = im.facts_of(corpus[i]);
            } catch (const Inconclusive&) {
                ++gave_up;
            }
        });
        r.inconclusive += gave_up;
        return out;
    }

    void each_graph(const std::function<bool(std::size_t)>& applies, const std::function<Outcome(const Graph&)>& body) {
        std::vector<std::size_t> items;
        for (std::size_t i = 0; i < corpus.size(); ++i)
            if (applies(i)) items.push_back(i);
        im.run_items(
            r, items.size(), [&](std::size_t i) { return codes({&corpus[items[i]]}); },
            [&](std::size_t i) { return body(corpus[items[i]]); }, workers);
    }

    void each_pair(int max_order, const std::function<bool(std::size_t, std::size_t)>& applies,
                   const std::function<Outcome(const Graph&, const Graph&)>& body) {
        std::vector<std::pair<std::size_t, std::size_t>> items;
        for (auto [i, j] : pairs_within(corpus, max_order).pairs)
            if (applies(i, j)) items.emplace_back(i, j);
        im.run_items(
            r, items.size(), [&](std::size_t k) { return codes({&corpus[items[k].first], &corpus[items[k].second]}); },
            [&](std::size_t k) { return body(corpus[items[k].first], corpus[items[k].second]); }, workers);
    }
};

int ceil_half(int k) { return (k + 1) / 2; }

bool complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

bool critical_by_profile(const MpdProfile& p) {
    for (int k = 0; k <= p.max_k(); ++k)
        if (p[k] < ceil_half(k)) return false;
    return true;
}

bool weakly_by_profile(const MpdProfile& p) {
    for (int k = 0; k <= p.max_k(); ++k)
        if (p[k] < k / 2) return false;
    return true;
}

json profile_json(const MpdProfile& p) {
    json out = json::array();
    for (int k = 0; k <= p.max_k(); ++k) out.push_back(p[k]);
    return out;
}

json facts_json(const Facts& f) {
    return {{"n", f.n}, {"m", f.m}, {"omega", f.omega}, {"psi", f.psi}, {"coloring", coloring_json(f.witness)}};
}

void check_upper_bound(Ctx& c) {
    c.r.scope = order_range(c.corpus);
    std::atomic<std::size_t> tight{0};
    c.each_graph([](std::size_t) { return true; }, [&](const Graph& g) -> Outcome {
        auto f = c.im.facts_of(g);
        const int bound = c.im.bound_of(g);
        json obs = facts_json(*f);
        obs["bound"] = bound;
        if (!(f->omega <= f->psi && f->psi <= bound))
            return failure({f->g6}, obs, "omega <= Psi <= bound");
        if (complete(g) && f->psi != bound)
            return failure({f->g6}, obs, "Psi(K_n) = bound = n");
        if (f->witness.num_colors() != f->psi || !is_pseudocomplete(g, f->witness).ok)
            return failure({f->g6}, obs, "witness coloring is pseudocomplete with Psi colors");
        // Maximality does not lean on the bound: one more color must be infeasible.
        FeasibilityResult up = feasible_coloring(g, f->psi + 1, c.im.opts.limits);
        if (up.status == SearchStatus::inconclusive) throw Inconclusive("budget exhausted");
        if (up.status == SearchStatus::found) {
            obs["larger"] = coloring_json(*up.coloring);
            return failure({f->g6}, obs, "no pseudocomplete coloring with Psi + 1 colors");
        }
        if (f->psi == bound) ++tight;
        return std::nullopt;
    });
    c.r.details["tight"] = tight.load();
}

void check_superadditive(Ctx& c) {
    const int cap = c.im.opts.pair_max_order;
    c.r.scope = "pairs with n_G + n_H <= " + std::to_string(cap) + " from " + order_range(c.corpus);
    std::atomic<std::size_t> strict{0};
    c.each_pair(cap, [](auto, auto) { return true; }, [&](const Graph& g, const Graph& h) -> Outcome {
        auto fg = c.im.facts_of(g);
        auto fh = c.im.facts_of(h);
        const int pj = c.im.psi_of_join(g, h);
        if (fg->psi + fh->psi > pj)
            return failure({fg->g6, fh->g6}, {{"psi_g", fg->psi}, {"psi_h", fh->psi}, {"psi_join", pj}},
                           "psi_g + psi_h <= psi_join");
        if (fg->psi + fh->psi < pj) ++strict;
        return std::nullopt;
    });
    c.r.details["strict"] = strict.load();
}

void check_criticality_formula(Ctx& c) {
    const int cap = c.im.opts.subset_max_order;
    c.r.scope = order_range(c.corpus) + ", mpd route up to n = " + std::to_string(cap);
    std::atomic<std::size_t> critical{0};
    c.each_graph([&](std::size_t i) { return c.corpus[i].order() <= cap; }, [&](const Graph& g) -> Outcome {
        auto f = c.im.facts_of(g);
        auto p = c.im.profile_of(g, g.order());
        const bool by_mpd = critical_by_profile(*p);
        if (by_mpd != f->critical) {
            json obs = facts_json(*f);
            obs["mpd"] = profile_json(*p);
            obs["critical_by_mpd"] = by_mpd;
            return failure({f->g6}, obs, "critical by mpd iff 2 Psi = omega + n");
        }
        if (by_mpd) ++critical;
        return std::nullopt;
    });
    c.r.details["critical"] = critical.load();
}

void check_join_bracket(Ctx& c) {
    const int cap = c.im.opts.pair_max_order;
    c.r.scope = "pairs with n_G + n_H <= " + std::to_string(cap) + " from " + order_range(c.corpus);
    c.each_pair(cap, [](auto, auto) { return true; }, [&](const Graph& g, const Graph& h) -> Outcome {
        auto fg = c.im.facts_of(g);
        auto fh = c.im.facts_of(h);
        const int pj = c.im.psi_of_join(g, h);
        const int lo = std::min(fg->omega + fh->n, fh->omega + fg->n);
        const int hi = (fg->omega + fh->omega + fg->n + fh->n) / 2;
        const Coloring low = join_coloring_lower(g, h);
        if (lo <= pj && pj <= hi && low.num_colors() == lo) return std::nullopt;
        return failure({fg->g6, fh->g6}, {{"lower", lo}, {"upper", hi}, {"psi_join", pj}, {"lower_coloring", coloring_json(low)}},
                       "lower <= psi_join <= upper");
    });
}

void check_additivity_criterion(Ctx& c) {
    const int cap = c.im.opts.pair_max_order;
    c.r.scope = "pairs with n_G + n_H <= " + std::to_string(cap) + " from " + order_range(c.corpus);
    std::atomic<std::size_t> additive{0};
    std::mutex examples_mu;
    std::size_t only_zero = 0;
    json examples = json::array();
    c.each_pair(cap, [](auto, auto) { return true; }, [&](const Graph& g, const Graph& h) -> Outcome {
        auto fg = c.im.facts_of(g);
        auto fh = c.im.facts_of(h);
        const int kmax = std::min(g.order(), h.order());
        auto pg = c.im.profile_of(g, kmax);
        auto ph = c.im.profile_of(h, kmax);
        bool holds = true;
        bool equality = false;
        json sums = json::array();
        for (int k = 0; k <= kmax; ++k) {
            const int s = (*pg)[k] + (*ph)[k];
            sums.push_back(s);
            holds = holds && s >= k;
            equality = equality || (k >= 1 && s == k);
        }
        const int pj = c.im.psi_of_join(g, h);
        const bool is_additive = pj == fg->psi + fh->psi;
        json obs{{"psi_g", fg->psi}, {"psi_h", fh->psi}, {"psi_join", pj}, {"sums", sums}};
        if (holds != is_additive) return failure({fg->g6, fh->g6}, obs, "mpd criterion holds iff additive");
        if (is_additive) ++additive;
        // The proof only yields equality at k = number of shared colors, which may be 0.
        if (holds && !equality) {
            std::lock_guard lock(examples_mu);
            ++only_zero;
            if (examples.size() < 5) examples.push_back({fg->g6, fh->g6});
        }
        return std::nullopt;
    });
    c.r.details["additive"] = additive.load();
    c.r.details["equality_only_at_k0"] = only_zero;
    c.r.details["equality_only_at_k0_examples"] = examples;
}

template <typename Pred>
void check_additive_for(Ctx& c, Pred&& classes_apply, const char* expected) {
    const int cap = c.im.opts.pair_max_order;
    c.r.scope = "pairs with n_G + n_H <= " + std::to_string(cap) + " from " + order_range(c.corpus);
    auto facts = c.warm();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < c.corpus.size(); ++i) index[key_of(c.corpus[i])] = i;
    c.each_pair(
        cap,
        [&](std::size_t i, std::size_t j) { return facts[i] && facts[j] && classes_apply(*facts[i], *facts[j]); },
        [&](const Graph& g, const Graph& h) -> Outcome {
            auto fg = c.im.facts_of(g);
            auto fh = c.im.facts_of(h);
            const int pj = c.im.psi_of_join(g, h);
            if (pj == fg->psi + fh->psi) return std::nullopt;
            return failure({fg->g6, fh->g6}, {{"psi_g", fg->psi}, {"psi_h", fh->psi}, {"psi_join", pj}}, expected);
        });
}

void check_named_p3_c8(Ctx& c) {
    c.r.scope = "P3, C8";
    const Graph p3 = path_graph(3);
    const Graph c8 = cycle_graph(8);
    c.im.run_items(
        c.r, 1, [&](std::size_t) { return c.codes({&p3, &c8}); },
        [&](std::size_t) -> Outcome {
            auto fp = c.im.facts_of(p3);
            auto fc = c.im.facts_of(c8);
            const Graph j = join(p3, c8);
            const int pj = c.im.psi_of_join(p3, c8);
            const FeasibilityResult seven = feasible_coloring(j, 7, c.im.opts.limits);
            if (seven.status == SearchStatus::inconclusive) throw Inconclusive("budget exhausted");
            const Coloring labelled({1, 2, 3, 1, 4, 5, 6, 4, 4, 4, 4});
            const bool labelled_ok = is_pseudocomplete(j, labelled).ok;
            json obs{{"psi_p3", fp->psi},           {"psi_c8", fc->psi},
                     {"p3_critical", fp->critical}, {"c8_critical", fc->critical},
                     {"psi_join", pj},              {"seven_colors", to_string(seven.status)},
                     {"six_color_labelling", labelled_ok}};
            c.r.details = obs;
            if (fp->psi == 2 && fc->psi == 4 && !fp->critical && !fc->critical && pj == 6 &&
                seven.status == SearchStatus::infeasible && labelled_ok)
                return std::nullopt;
            return failure(c.codes({&p3, &c8}), obs,
                           "Psi(P3) = 2, Psi(C8) = 4, neither critical, Psi(P3 v C8) = 6 with 7 infeasible");
        },
        1);
}

void check_crit_join_crit(Ctx& c) {
    const int cap = c.im.opts.pair_max_order;
    c.r.scope = "critical pairs with n_G + n_H <= " + std::to_string(cap) + " from " + order_range(c.corpus) +
                ", mpd route up to combined order " + std::to_string(c.im.opts.join_mpd_max_order);
    auto facts = c.warm();
    c.each_pair(
        cap, [&](std::size_t i, std::size_t j) { return facts[i] && facts[j] && facts[i]->critical && facts[j]->critical; },
        [&](const Graph& g, const Graph& h) -> Outcome {
            auto fg = c.im.facts_of(g);
            auto fh = c.im.facts_of(h);
            const int pj = c.im.psi_of_join(g, h);
            const int n = fg->n + fh->n;
            const int omega = fg->omega + fh->omega;
            json obs{{"psi_join", pj}, {"omega_join", omega}, {"n_join", n}};
            if (2 * pj != omega + n) return failure({fg->g6, fh->g6}, obs, "2 Psi(G v H) = omega + n");
            if (n <= c.im.opts.join_mpd_max_order) {
                auto p = c.im.profile_of(join(g, h), n);
                if (!critical_by_profile(*p)) {
                    obs["mpd"] = profile_json(*p);
                    return failure({fg->g6, fh->g6}, obs, "G v H critical by mpd");
                }
            }
            return std::nullopt;
        });
}

void check_named_p3_p3(Ctx& c) {
    c.r.scope = "P3";
    const Graph p3 = path_graph(3);
    c.im.run_items(
        c.r, 1, [&](std::size_t) { return c.codes({&p3, &p3}); },
        [&](std::size_t) -> Outcome {
            auto fp = c.im.facts_of(p3);
            const Graph j = join(p3, p3);
            auto fj = c.im.facts_of(j);
            auto p = c.im.profile_of(j, j.order());
            const bool labelled_ok = is_pseudocomplete(j, Coloring({1, 2, 3, 1, 4, 5})).ok;
            json obs{{"psi_p3", fp->psi}, {"p3_critical", fp->critical}, {"psi_join", fj->psi},
                     {"join_critical", fj->critical}, {"join_mpd", profile_json(*p)}, {"five_color_labelling", labelled_ok}};
            c.r.details = obs;
            if (!fp->critical && fj->psi == 5 && fj->critical && critical_by_profile(*p) && labelled_ok) return std::nullopt;
            return failure(c.codes({&p3, &p3}), obs, "P3 not critical, Psi(P3 v P3) = 5, P3 v P3 critical");
        },
        1);
}

bool doubled_rest(const MultiplicityProfile& prof, int singles, int triples) {
    for (auto [k, count] : prof.counts) {
        if (count == 0) continue;
        if (k == 1 && count != singles) return false;
        if (k == 3 && count != triples) return false;
        if (k != 1 && k != 2 && k != 3) return false;
    }
    return prof.count(1) == singles && prof.count(3) == triples;
}

void check_critical_structure(Ctx& c) {
    const int cap = c.im.opts.structure_max_order;
    c.r.scope = "critical graphs with n <= " + std::to_string(cap) + " from " + order_range(c.corpus);
    auto facts = c.warm();
    c.each_graph([&](std::size_t i) { return facts[i] && facts[i]->critical && c.corpus[i].order() <= cap; },
                 [&](const Graph& g) -> Outcome {
                     auto f = c.im.facts_of(g);
                     auto s = c.im.structure_of(g);
                     json obs = facts_json(*f);
                     const std::int64_t t = f->n + f->omega;
                     const bool edges_ok = 8 * static_cast<std::int64_t>(f->m) >= t * (t - 2);
                     obs["edge_bound_ok"] = edges_ok;
                     if (!s->found || !s->coloring) return failure({f->g6}, obs, "maximum coloring with critical shape");
                     obs["shaped"] = coloring_json(*s->coloring);
                     const auto prof = multiplicity_profile(g, *s->coloring);
                     if (s->kind != StructureKind::critical || s->coloring->num_colors() != f->psi ||
                         !is_pseudocomplete(g, *s->coloring).ok || !doubled_rest(prof, f->omega, 0))
                         return failure({f->g6}, obs, "omega singletons, every other color doubled");
                     if (!contraction_complete_check(g, *s->coloring))
                         return failure({f->g6}, obs, "contraction is complete");
                     if (!edges_ok || !s->edge_bound_satisfied)
                         return failure({f->g6}, obs, "|E| >= (n+omega)(n+omega-2)/8");
                     return std::nullopt;
                 });
}

void check_weak_equivalence(Ctx& c) {
    const int cap = c.im.opts.subset_max_order;
    c.r.scope = order_range(c.corpus) + ", mpd route up to n = " + std::to_string(cap);
    std::atomic<std::size_t> weak{0};
    c.each_graph([&](std::size_t i) { return c.corpus[i].order() <= cap; }, [&](const Graph& g) -> Outcome {
        auto f = c.im.facts_of(g);
        auto p = c.im.profile_of(g, g.order());
        const bool by_mpd = weakly_by_profile(*p);
        const bool crit_mpd = critical_by_profile(*p);
        json obs = facts_json(*f);
        obs["mpd"] = profile_json(*p);
        if (by_mpd != f->weakly) return failure({f->g6}, obs, "weakly critical by mpd iff Psi = floor((omega+n)/2)");
        if (crit_mpd && !by_mpd) return failure({f->g6}, obs, "critical implies weakly critical");
        if ((f->omega + f->n) % 2 == 0 && crit_mpd != by_mpd)
            return failure({f->g6}, obs, "omega + n even: critical iff weakly critical");
        if (by_mpd) ++weak;
        return std::nullopt;
    });
    c.r.details["weakly_critical"] = weak.load();
}

void check_weak_structure(Ctx& c) {
    const int cap = c.im.opts.structure_max_order;
    c.r.scope = "weakly critical, not critical graphs with n <= " + std::to_string(cap) + " from " + order_range(c.corpus);
    auto facts = c.warm();
    std::atomic<std::size_t> type1{0}, type2{0};
    c.each_graph(
        [&](std::size_t i) { return facts[i] && facts[i]->weakly && !facts[i]->critical && c.corpus[i].order() <= cap; },
        [&](const Graph& g) -> Outcome {
            auto f = c.im.facts_of(g);
            auto s = c.im.structure_of(g);
            json obs = facts_json(*f);
            const std::int64_t t = f->n + f->omega;
            const bool edges_ok = 8 * static_cast<std::int64_t>(f->m) >= (t - 1) * (t - 3);
            obs["edge_bound_ok"] = edges_ok;
            if (!s->found || !s->coloring) return failure({f->g6}, obs, "maximum coloring of type (1) or (2)");
            obs["shaped"] = coloring_json(*s->coloring);
            obs["kind"] = to_string(s->kind);
            const auto prof = multiplicity_profile(g, *s->coloring);
            const bool shape_ok = (s->kind == StructureKind::weakly_type_1 && doubled_rest(prof, f->omega, 1)) ||
                                  (s->kind == StructureKind::weakly_type_2 && doubled_rest(prof, f->omega - 1, 0));
            if (!shape_ok || s->coloring->num_colors() != f->psi || !is_pseudocomplete(g, *s->coloring).ok)
                return failure({f->g6}, obs, "type (1): omega singletons, one triple; type (2): omega-1 singletons");
            if (!edges_ok || !s->edge_bound_satisfied)
                return failure({f->g6}, obs, "|E| >= (n+omega-1)(n+omega-3)/8");
            for (StructureKind k : s->kinds_found) {
                if (k == StructureKind::weakly_type_1) ++type1;
                if (k == StructureKind::weakly_type_2) ++type2;
            }
            return std::nullopt;
        });
    c.r.details["type_1_found"] = type1.load();
    c.r.details["type_2_found"] = type2.load();
}

json witness_json(const WitnessPair& w) {
    return {{"m1", w.m1.to_vector()},   {"m2", w.m2.to_vector()}, {"psi_m1", w.psi_m1},
            {"psi_m2", w.psi_m2},       {"psi_g", w.psi_g},       {"xi", w.xi},
            {"removable", w.removable_set.to_vector()}, {"coloring", coloring_json(w.coloring)}};
}

void check_witness(Ctx& c, WitnessKind kind) {
    const int cap = c.im.opts.subset_max_order;
    c.r.scope = order_range(c.corpus) + ", n <= " + std::to_string(cap);
    std::atomic<std::size_t> found{0};
    c.each_graph([&](std::size_t i) { return c.corpus[i].order() <= cap; }, [&](const Graph& g) -> Outcome {
        auto f = c.im.facts_of(g);
        auto w = c.im.witness_of(g, kind);
        const bool expect = kind == WitnessKind::not_critical ? !f->critical : !f->weakly;
        json obs = facts_json(*f);
        if (w->has_value()) obs["witness"] = witness_json(**w);
        if (w->has_value() != expect)
            return failure({f->g6}, obs, expect ? "witness exists" : "no witness exists");
        if (*w) {
            if (auto err = validate_witness(g, **w, c.im.opts.limits)) {
                obs["invalid"] = *err;
                return failure({f->g6}, obs, "witness invariants hold");
            }
            ++found;
        }
        return std::nullopt;
    });
    c.r.details["witnesses"] = found.load();
}

bool has_kind(const StructureReport& s, StructureKind k) {
    return std::find(s.kinds_found.begin(), s.kinds_found.end(), k) != s.kinds_found.end();
}

void check_additive_implies_weak(Ctx& c) {
    const int cap = c.im.opts.pair_max_order;
    const int wcap = c.im.opts.subset_max_order;
    c.r.scope = "pairs with n_G + n_H <= " + std::to_string(cap) + "; boost coloring on non-weakly-critical pairs with n <= " +
                std::to_string(wcap) + " each, from " + order_range(c.corpus);
    if (c.im.opts.type1_refinement) c.r.scope += "; type (1) refinement up to n = " + std::to_string(c.im.opts.structure_max_order);
    auto facts = c.warm();
    std::atomic<std::size_t> boosted{0};
    // Pairs of non-weakly-critical graphs are boosted regardless of combined order;
    // every other pair needs Psi of the join and is capped.
    std::vector<std::pair<std::size_t, std::size_t>> items;
    for (std::size_t i = 0; i < c.corpus.size(); ++i) {
        if (!facts[i] || c.corpus[i].order() < 1) continue;
        for (std::size_t j = i; j < c.corpus.size(); ++j) {
            if (!facts[j] || c.corpus[j].order() < 1) continue;
            const bool both_non_weak = !facts[i]->weakly && !facts[j]->weakly && facts[i]->n <= wcap && facts[j]->n <= wcap;
            if (both_non_weak || facts[i]->n + facts[j]->n <= cap) items.emplace_back(i, j);
        }
    }
    auto body = [&](const Graph& g, const Graph& h) -> Outcome {
        auto fg = c.im.facts_of(g);
        auto fh = c.im.facts_of(h);
        json obs{{"psi_g", fg->psi}, {"psi_h", fh->psi}, {"class_g", to_string(class_of(*fg))}, {"class_h", to_string(class_of(*fh))}};
        if (!fg->weakly && !fh->weakly && fg->n <= wcap && fh->n <= wcap) {
            auto wg = c.im.witness_of(g, WitnessKind::not_weakly_critical);
            auto wh = c.im.witness_of(h, WitnessKind::not_weakly_critical);
            if (!*wg || !*wh) return failure({fg->g6, fh->g6}, obs, "witnesses exist for non-weakly-critical operands");
            const Coloring boost = boost_coloring(g, h, **wg, **wh, c.im.opts.limits);
            obs["boost"] = coloring_json(boost);
            if (boost.num_colors() != fg->psi + fh->psi + 1 || !is_pseudocomplete(join(g, h), boost).ok)
                return failure({fg->g6, fh->g6}, obs, "boost coloring with Psi(G) + Psi(H) + 1 colors");
            ++boosted;
        }
        if (fg->n + fh->n > cap) return std::nullopt;
        const int pj = c.im.psi_of_join(g, h);
        obs["psi_join"] = pj;
        if (pj != fg->psi + fh->psi) return std::nullopt;
        if (!fg->weakly && !fh->weakly) return failure({fg->g6, fh->g6}, obs, "additive implies G or H weakly critical");
        const int scap = c.im.opts.structure_max_order;
        if (c.im.opts.type1_refinement && fg->n <= scap && fh->n <= scap) {
            auto sg = c.im.structure_of(g);
            auto sh = c.im.structure_of(h);
            const bool g1 = has_kind(*sg, StructureKind::weakly_type_1);
            const bool h1 = has_kind(*sh, StructureKind::weakly_type_1);
            if ((g1 && (!fh->weakly || h1)) || (h1 && !fg->weakly))
                return failure({fg->g6, fh->g6}, obs, "type (1) operand forces the other weakly critical without type (1)");
        }
        return std::nullopt;
    };
    c.im.run_items(
        c.r, items.size(), [&](std::size_t k) { return c.codes({&c.corpus[items[k].first], &c.corpus[items[k].second]}); },
        [&](std::size_t k) { return body(c.corpus[items[k].first], c.corpus[items[k].second]); }, c.workers);
    c.r.details["boosted"] = boosted.load();
}

void check_gg_2psi(Ctx& c) {
    const int cap = c.im.opts.pair_max_order;
    c.r.scope = "graphs with 2n <= " + std::to_string(cap) + " from " + order_range(c.corpus);
    c.each_graph([&](std::size_t i) { return 2 * c.corpus[i].order() <= cap; }, [&](const Graph& g) -> Outcome {
        auto f = c.im.facts_of(g);
        const int pj = c.im.psi_of_join(g, g);
        if ((pj == 2 * f->psi) == f->critical) return std::nullopt;
        json obs = facts_json(*f);
        obs["psi_join"] = pj;
        obs["critical"] = f->critical;
        return failure({f->g6}, obs, "critical iff Psi(G v G) = 2 Psi(G)");
    });
}

void check_gg_omega_plus_n(Ctx& c) {
    const int cap = c.im.opts.pair_max_order;
    c.r.scope = "graphs with 2n <= " + std::to_string(cap) + " from " + order_range(c.corpus) +
                ", mpd route up to 2n = " + std::to_string(c.im.opts.join_mpd_max_order);
    c.each_graph([&](std::size_t i) { return 2 * c.corpus[i].order() <= cap; }, [&](const Graph& g) -> Outcome {
        auto f = c.im.facts_of(g);
        const int pj = c.im.psi_of_join(g, g);
        json obs = facts_json(*f);
        obs["psi_join"] = pj;
        if (pj != f->omega + f->n) return failure({f->g6}, obs, "Psi(G v G) = omega + n");
        if (2 * f->n <= c.im.opts.join_mpd_max_order) {
            auto p = c.im.profile_of(join(g, g), 2 * f->n);
            if (!critical_by_profile(*p)) {
                obs["join_mpd"] = profile_json(*p);
                return failure({f->g6}, obs, "G v G critical by mpd");
            }
        }
        return std::nullopt;
    });
}

struct NablaFacts {
    int k = 0;
    int constructed = 0;
    std::shared_ptr<const Facts> f;
};

NablaFacts nabla_facts(Ctx& c, const Graph& g, int k) {
    const Graph big = nabla_k(g, k);
    const Coloring hint = nabla_k_coloring(g, k);
    return NablaFacts{k, hint.num_colors(), c.im.facts_of(big, hint)};
}

void check_nabla(Ctx& c, const std::function<Outcome(const Graph&, const Facts&, const NablaFacts&)>& pred,
                 const std::function<bool(const Graph&, int)>& applies = {}) {
    std::vector<std::pair<std::size_t, int>> items;
    for (std::size_t i = 0; i < c.corpus.size(); ++i)
        for (int k : c.im.opts.nabla_ks)
            if (k >= 2 && c.corpus[i].order() >= 1 && k * c.corpus[i].order() <= kMaxGraph6Vertices &&
                (!applies || applies(c.corpus[i], k)))
                items.emplace_back(i, k);
    json ks = c.im.opts.nabla_ks;
    c.r.scope = order_range(c.corpus) + ", k in " + ks.dump();
    c.im.run_items(
        c.r, items.size(), [&](std::size_t t) { return c.codes({&c.corpus[items[t].first]}); },
        [&](std::size_t t) -> Outcome {
            const Graph& g = c.corpus[items[t].first];
            auto f = c.im.facts_of(g);
            return pred(g, *f, nabla_facts(c, g, items[t].second));
        },
        c.workers);
}

json nabla_json(const Facts& f, const NablaFacts& nf) {
    json obs = facts_json(f);
    obs["k"] = nf.k;
    obs["psi_nabla"] = nf.f->psi;
    obs["omega_nabla"] = nf.f->omega;
    obs["constructed_colors"] = nf.constructed;
    return obs;
}

void check_nabla_parity(Ctx& c) {
    check_nabla(c, [&](const Graph& g, const Facts& f, const NablaFacts& nf) -> Outcome {
        const bool even = (nf.k * (f.omega + f.n)) % 2 == 0;
        if (nf.f->critical != even) return failure({f.g6}, nabla_json(f, nf), "nabla^k G critical iff k(omega+n) even");
        if (nf.k * f.n <= c.im.opts.join_mpd_max_order) {
            auto p = c.im.profile_of(nabla_k(g, nf.k), nf.k * f.n);
            if (critical_by_profile(*p) != even) {
                json obs = nabla_json(f, nf);
                obs["nabla_mpd"] = profile_json(*p);
                return failure({f.g6}, obs, "nabla^k G critical by mpd iff k(omega+n) even");
            }
        }
        return std::nullopt;
    });
}

void check_nabla_weak(Ctx& c) {
    check_nabla(c, [&](const Graph&, const Facts& f, const NablaFacts& nf) -> Outcome {
        const int expected = nf.k * (f.omega + f.n) / 2;
        if (nf.f->weakly && nf.constructed == expected && nf.f->psi == expected) return std::nullopt;
        return failure({f.g6}, nabla_json(f, nf), "nabla^k G weakly critical with floor(k(omega+n)/2) colors");
    });
}

void check_nabla_even(Ctx& c) {
    check_nabla(
        c,
        [&](const Graph&, const Facts& f, const NablaFacts& nf) -> Outcome {
            if ((nf.k * f.psi == nf.f->psi) == f.critical) return std::nullopt;
            return failure({f.g6}, nabla_json(f, nf), "G critical iff k Psi(G) = Psi(nabla^k G)");
        },
        [](const Graph& g, int k) { return (k * (clique_number(g).size + g.order())) % 2 == 0; });
}

void check_nabla_odd(Ctx& c) {
    check_nabla(
        c,
        [&](const Graph&, const Facts& f, const NablaFacts& nf) -> Outcome {
            if (f.critical) return failure({f.g6}, nabla_json(f, nf), "k(omega+n) odd forces G not critical");
            if ((nf.k * f.psi + nf.k / 2 == nf.f->psi) == f.weakly) return std::nullopt;
            return failure({f.g6}, nabla_json(f, nf), "G weakly critical iff k Psi(G) + floor(k/2) = Psi(nabla^k G)");
        },
        [](const Graph& g, int k) { return k >= 3 && (k * (clique_number(g).size + g.order())) % 2 == 1; });
}

using CheckFn = std::function<void(Ctx&)>;

const std::map<std::string, CheckFn>& check_table() {
    static const std::map<std::string, CheckFn> table = {
        {"lemma-2-upper-bound", check_upper_bound},
        {"corollary-4-join-superadditivity", check_superadditive},
        {"lemma-10-criticality-formula", check_criticality_formula},
        {"thm-join-bracket", check_join_bracket},
        {"thm-mpd-additivity-criterion", check_additivity_criterion},
        {"thm-additive-when-critical",
         [](Ctx& c) {
             check_additive_for(c, [](const Facts& a, const Facts& b) { return a.critical && b.critical; },
                                "Psi(G v H) = Psi(G) + Psi(H) for critical G, H");
         }},
        {"remark-p3-c8", check_named_p3_c8},
        {"thm-crit-join-crit", check_crit_join_crit},
        {"remark-p3-p3", check_named_p3_p3},
        {"thm-critical-structure+edge-bound", check_critical_structure},
        {"def-weak-crit-equivalence", check_weak_equivalence},
        {"cor-wc-plus-c",
         [](Ctx& c) {
             check_additive_for(
                 c, [](const Facts& a, const Facts& b) { return (a.critical && b.weakly) || (b.critical && a.weakly); },
                 "Psi(G v H) = Psi(G) + Psi(H) for critical G, weakly critical H");
         }},
        {"thm-weakly-critical-structure+edge-bound", check_weak_structure},
        {"thm-witness-iff-not-weakly-critical", [](Ctx& c) { check_witness(c, WitnessKind::not_weakly_critical); }},
        {"thm-witness-iff-not-critical", [](Ctx& c) { check_witness(c, WitnessKind::not_critical); }},
        {"thm-additive-implies-one-weakly-critical", check_additive_implies_weak},
        {"thm-gjoing-2psi-iff-critical", check_gg_2psi},
        {"eqn-psi-gjoing-omega-plus-n", check_gg_omega_plus_n},
        {"thm-nablak-critical-parity", check_nabla_parity},
        {"thm-nablak-always-weakly-critical", check_nabla_weak},
        {"thm-nablak-kpsi-even", check_nabla_even},
        {"thm-nablak-kpsi-odd", check_nabla_odd},
    };
    return table;
}

}  // namespace

CheckResult Verifier::run_check(const std::string& check_id, const std::vector<Graph>& corpus) {
    return run_check_with_workers(check_id, corpus, impl_->threads);
}

CheckResult Verifier::run_check_with_workers(const std::string& check_id, const std::vector<Graph>& corpus, int workers) {
    const auto& table = check_table();
    auto it = table.find(check_id);
    if (it == table.end()) throw std::invalid_argument("unknown check id: " + check_id);
    CheckResult r;
    r.check_id = check_id;
    const auto start = std::chrono::steady_clock::now();
    Ctx ctx{*impl_, corpus, r, workers};
    it->second(ctx);
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (r.failure_count > 0)
        r.status = CheckStatus::failed;
    else if (r.inconclusive > 0)
        r.status = CheckStatus::inconclusive;
    return r;
}

std::vector<CheckResult> Verifier::run_checks(const std::vector<std::string>& ids, const std::vector<Graph>& corpus) {
    std::vector<std::string> todo = ids;
    if (todo.empty())
        for (const auto& info : check_catalog()) todo.push_back(info.id);
    for (const auto& id : todo)
        if (!check_table().count(id)) throw std::invalid_argument("unknown check id: " + id);
    std::vector<CheckResult> out(todo.size());
    // Checks run side by side; each one walks its own items sequentially.
    parallel_for(todo.size(), impl_->threads, [&](std::size_t i) {
        out[i] = run_check_with_workers(todo[i], corpus, impl_->threads > 1 && todo.size() == 1 ? impl_->threads : 1);
    });
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    return out;
}

AdditiveScanReport Verifier::scan_additive_pairs(const std::vector<Graph>& corpus) {
    AdditiveScanReport report;
    std::vector<std::pair<std::size_t, std::size_t>> items;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j)
            if (corpus[i].order() >= 1 && corpus[j].order() >= 1) items.emplace_back(i, j);
    std::vector<std::optional<AdditivePairRecord>> records(items.size());
    parallel_for(items.size(), impl_->threads, [&](std::size_t k) {
        const Graph& g = corpus[items[k].first];
        const Graph& h = corpus[items[k].second];
        try {
            auto fg = impl_->facts_of(g);
            auto fh = impl_->facts_of(h);
            const int pj = impl_->psi_of_join(g, h);
            records[k] = AdditivePairRecord{fg->g6, fh->g6, pj == fg->psi + fh->psi, class_of(*fg), class_of(*fh)};
        } catch (const Inconclusive&) {
        }
    });
    for (auto& rec : records) {
        if (!rec) {
            ++report.inconclusive;
            continue;
        }
        std::string a = to_string(rec->class_g);
        std::string b = to_string(rec->class_h);
        if (b < a) std::swap(a, b);
        auto& cell = report.table[a + "/" + b];
        (rec->additive ? cell.first : cell.second)++;
        if (rec->additive && rec->class_g == CriticalityClass::not_weakly_critical &&
            rec->class_h == CriticalityClass::not_weakly_critical)
            report.violations.push_back(*rec);
        report.pairs.push_back(std::move(*rec));
    }
    return report;
}

CheckResult run_check(const std::string& check_id, const std::vector<Graph>& corpus, const VerifyOptions& options) {
    Verifier v(options);
    return v.run_check(check_id, corpus);
}

nlohmann::json to_json(const CheckResult& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"graphs", f.graphs}, {"observed", f.observed}, {"expected", f.expected}});
    return {{"check_id", r.check_id},
            {"scope", r.scope},
            {"passed", r.passed()},
            {"status", to_string(r.status)},
            {"evaluated", r.evaluated},
            {"inconclusive", r.inconclusive},
            {"failure_count", r.failure_count},
            {"failures", failures},
            {"details", r.details},
            {"runtime_ms", r.runtime_ms}};
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
    json checks = json::array();
    bool all = true;
    for (const auto& r : results) {
        checks.push_back(to_json(r));
        all = all && r.passed();
    }
    return {{"schema", "psi-lab/verify/1"}, {"passed", all}, {"checks", checks}};
}

nlohmann::json to_json(const AdditiveScanReport& r) {
    json pairs = json::array();
    auto rec = [](const AdditivePairRecord& p) {
        return json{{"g", p.g}, {"h", p.h}, {"additive", p.additive}, {"class_g", to_string(p.class_g)}, {"class_h", to_string(p.class_h)}};
    };
    for (const auto& p : r.pairs) pairs.push_back(rec(p));
    json violations = json::array();
    for (const auto& p : r.violations) violations.push_back(rec(p));
    json table = json::object();
    for (const auto& [k, v] : r.table) table[k] = {{"additive", v.first}, {"non_additive", v.second}};
    return {{"schema", "psi-lab/scan/1"},
            {"pairs", pairs},
            {"table", table},
            {"violations", violations},
            {"inconclusive", r.inconclusive},
            {"partial", r.inconclusive > 0}};
}

}  // namespace psilab
