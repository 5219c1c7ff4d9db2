#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phibound/clique_chroma.hpp"
#include "phibound/degree_stats.hpp"
#include "phibound/delta_partition.hpp"
#include "phibound/graph.hpp"

namespace phibound {

struct AnalyzeOptions {
    int clique_limit = kDefaultCliqueLimit;
    int chromatic_limit = kDefaultChromaticLimit;
    /// Cross-check phi against the exhaustive oracle for n <= this value (0 disables).
    int oracle_max_n = 0;
};

/// One failed check. `check` is a short stable key (e.g. "eq416", "cor41").
struct Anomaly {
    std::string check;
    std::string detail;
};

/// Every invariant and inequality check for one graph. Optional fields are absent when an exact
/// solver hit its size limit; `skipped` then says which checks were dropped and why.
struct BoundReport {
    std::string graph_id;
    int n = 0;
    std::int64_t e = 0;
    BigInt sum_d;
    BigInt sum_d2;
    int phi = 0;
    std::optional<int> omega;
    std::optional<int> chi;
    int lb_ceil_15 = 0;
    int lb_ceil_16 = 0;
    bool eq16_equality = false;
    bool eq14_ok = false;
    std::optional<bool> eq13_ok;
    bool eq212_ok = false;
    bool eq213_ok = false;
    std::optional<bool> eq416_ok;
    std::optional<bool> eq416_equality;
    bool cor41_all_ok = false;
    bool cor42_all_ok = false;
    std::vector<int> witness_partition;

    // Not part of the CSV contract.
    bool eq14_equality = false;
    std::optional<bool> eq13_equality;
    std::optional<EqualityVerdict> verdict;
    std::optional<ExtremalClassification> extremal;
    std::optional<int> phi_oracle;
    /// Sequence corollaries with the bound relaxed to r + 1 (informational).
    bool cor41_next_all_ok = false;
    bool cor42_next_all_ok = false;
    std::vector<Anomaly> anomalies;
    std::vector<std::string> skipped;

    [[nodiscard]] bool clean() const noexcept { return anomalies.empty(); }
};

/// Throws OracleMismatch when the oracle is enabled and disagrees with phi_exact.
BoundReport analyze(const Graph& g, const AnalyzeOptions& options = {});

enum class SweepMode { exhaustive, random };

inline constexpr int kExhaustiveMaxOrder = 5;

struct SweepSpec {
    SweepMode mode = SweepMode::exhaustive;
    int n_min = 1;
    int n_max = 1;
    int count = 1;  ///< samples per order (random mode)
    std::uint64_t seed = 0;
    Probability p{1, 2};
    int oracle_max_n = 0;
    int clique_limit = kDefaultCliqueLimit;
    int chromatic_limit = kDefaultChromaticLimit;
};

/// Throws std::invalid_argument for specs violating the sweep invariants.
void validate(const SweepSpec& spec);

struct SweepSummary {
    std::int64_t reports = 0;
    std::int64_t anomalies = 0;
    std::int64_t eq16_equality_hits = 0;
    std::int64_t eq416_equality_hits = 0;
    std::optional<int> min_gap;  ///< min of phi - lb_ceil_16
    std::int64_t gap_total = 0;
    /// Anomaly count and first offending graph6 per check key.
    std::map<std::string, std::int64_t> anomalies_by_check;
    std::map<std::string, std::string> first_offender;

    [[nodiscard]] ExactRatio mean_gap() const
    {
        return reports == 0 ? ExactRatio(0) : ExactRatio(BigInt(gap_total), BigInt(reports));
    }
};

/// All labelled graphs on n vertices in mask order; bit k selects the k-th pair in graph6 order.
std::vector<Graph> exhaustive_graphs(int n);

/// The graphs a sweep visits, in emission order.
std::vector<Graph> sweep_graphs(const SweepSpec& spec);

using ReportSink = std::function<void(const BoundReport&)>;

/// Analyzes every graph of the sweep on `workers` threads and hands reports to `sink` in input
/// order. Unless `keep_going`, the first anomalous report (by input order) aborts with
/// TheoremFalsification carrying its graph6 string; otherwise anomalies are tallied.
SweepSummary run_sweep(const SweepSpec& spec, const ReportSink& sink, int workers = 1, bool keep_going = false);

/// Analyzes a fixed list of graphs with the same ordering and abort semantics as run_sweep.
SweepSummary run_reports(std::span<const Graph> graphs, const AnalyzeOptions& options, const ReportSink& sink,
                         int workers = 1, bool keep_going = false);

std::string csv_header();
std::string csv_row(const BoundReport& r);
std::string emit_csv(std::span<const BoundReport> reports);

/// Multi-line human-readable rendering.
std::string describe(const BoundReport& r);

}  // namespace phibound
