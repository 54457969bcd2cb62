#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "psilab/graph.hpp"
#include "psilab/psi.hpp"

namespace psilab {

/// One graph (or pair) on which a check's predicate failed, with enough data to replay it.
struct CheckFailure {
    std::vector<std::string> graphs;  // graph6
    nlohmann::json observed;
    std::string expected;
};

enum class CheckStatus { passed, failed, inconclusive };

struct CheckResult {
    std::string check_id;
    std::string scope;
    CheckStatus status = CheckStatus::passed;
    /// Graphs, pairs or (graph, k) items on which the predicate was evaluated.
    std::size_t evaluated = 0;
    /// Items abandoned because a search ran out of budget.
    std::size_t inconclusive = 0;
    std::size_t failure_count = 0;
    /// The first few failures; failure_count has the total.
    std::vector<CheckFailure> failures;
    nlohmann::json details = nlohmann::json::object();
    double runtime_ms = 0.0;

    bool passed() const { return status == CheckStatus::passed; }
};

struct CheckInfo {
    std::string id;
    std::string claim;
};

/// Every check id run_check accepts, in catalog order.
const std::vector<CheckInfo>& check_catalog();

struct VerifyOptions {
    SearchLimits limits;
    /// Pair checks only consider n_G + n_H <= this. Also caps G v G checks at 2n.
    int pair_max_order = 10;
    /// Single-graph checks that need mpd profiles or witnesses skip larger graphs.
    int subset_max_order = 12;
    /// G v G criticality is also confirmed by the mpd route up to this order.
    int join_mpd_max_order = 10;
    /// Structure checks skip larger graphs.
    int structure_max_order = 8;
    std::vector<int> nabla_ks = {2, 3, 4, 5};
    /// Also test the type-(1) refinement of the additivity theorem (n <= structure_max_order).
    bool type1_refinement = false;
    /// Worker threads; 0 means hardware concurrency.
    int threads = 0;
    /// Replaces psi_upper_bound everywhere the verifier computes Psi. Used to
    /// confirm that the bound check is not vacuous.
    UpperBoundFn upper_bound;
    /// Failures kept per check.
    std::size_t max_failures_kept = 20;
};

enum class CriticalityClass { critical, weakly_critical, not_weakly_critical };
const char* to_string(CriticalityClass c);

struct AdditivePairRecord {
    std::string g;
    std::string h;
    bool additive = false;
    CriticalityClass class_g = CriticalityClass::critical;
    CriticalityClass class_h = CriticalityClass::critical;
};

struct AdditiveScanReport {
    std::vector<AdditivePairRecord> pairs;
    /// "class_g/class_h" (sorted) -> {additive count, non-additive count}.
    std::map<std::string, std::pair<std::size_t, std::size_t>> table;
    std::vector<AdditivePairRecord> violations;
    std::size_t inconclusive = 0;
};

/// Runs catalog checks over a corpus, caching per-graph facts across checks.
/// Safe to call from several threads.
class Verifier {
public:
    explicit Verifier(VerifyOptions options = {});
    ~Verifier();
    Verifier(const Verifier&) = delete;
    Verifier& operator=(const Verifier&) = delete;

    /// Throws std::invalid_argument for an unknown id.
    CheckResult run_check(const std::string& check_id, const std::vector<Graph>& corpus);
    /// Runs the given checks (all when empty) concurrently; results sorted by id.
    std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const std::vector<Graph>& corpus);
    AdditiveScanReport scan_additive_pairs(const std::vector<Graph>& corpus);

    const VerifyOptions& options() const { return options_; }

    struct Impl;

private:
    CheckResult run_check_with_workers(const std::string& check_id, const std::vector<Graph>& corpus, int workers);

    VerifyOptions options_;
    std::unique_ptr<Impl> impl_;
};

CheckResult run_check(const std::string& check_id, const std::vector<Graph>& corpus, const VerifyOptions& options = {});

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const std::vector<CheckResult>& results);
nlohmann::json to_json(const AdditiveScanReport& r);
const char* to_string(CheckStatus s);

}  // namespace psilab
