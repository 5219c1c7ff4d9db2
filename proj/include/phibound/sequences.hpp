#pragma once

#include <optional>
#include <random>
#include <vector>

#include "phibound/graph.hpp"

namespace phibound {

/// Intersection of the open neighbourhoods of `vs` (sorted).
VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> vs);

enum class SequenceKind { alpha, beta };

/// Result of one corollary test at a prefix of length r >= 2.
struct PrefixCheck {
    int length = 0;
    bool applicable = false;
    bool hypothesis_ok = false;  ///< delta-set hypothesis (alpha/beta) or degree-sum hypothesis (beta)
    bool bound_ok = true;        ///< r >= n / (n - dd); only meaningful when applicable
    /// r + 1 >= n / (n - dd). A nonempty delta-set common neighbourhood closes an (r+1)-part
    /// delta-partition, so this weaker form is what the hypothesis actually supports.
    bool next_bound_ok = true;
};

struct SequenceTrace {
    SequenceKind kind = SequenceKind::beta;
    std::vector<Vertex> vertices;
    /// common_nbhd_per_prefix[i] == N(v_1, ..., v_{i+1}).
    std::vector<VertexSet> common_nbhd_per_prefix;
    /// Filled by corollary_checks, one entry per prefix length 2..r.
    std::vector<PrefixCheck> cor41;
    std::vector<PrefixCheck> cor42;

    [[nodiscard]] int length() const noexcept { return static_cast<int>(vertices.size()); }
};

struct SequenceOptions {
    /// Stop after this many vertices even if the common neighbourhood is nonempty.
    std::optional<int> max_length;
    /// When set, ties among maximum-degree candidates are broken uniformly at random.
    std::mt19937_64* tie_break = nullptr;
};

/// Greedy maximal alpha- or beta-sequence. v_1 has maximum degree in G; each later vertex is
/// drawn from the current common neighbourhood C with maximum degree in G[C] (alpha) or in G (beta).
SequenceTrace build_sequence(const Graph& g, SequenceKind kind, const SequenceOptions& options = {});

/// Independently re-checks the defining conditions of `t` against `g`.
bool verify_sequence(const Graph& g, const SequenceTrace& t);

/// Fills cor41 (common neighbourhood is a nonempty delta-set) and, for beta-sequences, cor42
/// (sum of the first r degrees <= (r - 1) n). Throws std::invalid_argument on a trace/graph mismatch.
SequenceTrace corollary_checks(const Graph& g, SequenceTrace t);

/// True unless some applicable prefix violates its bound.
bool all_applicable_ok(std::span<const PrefixCheck> checks);
bool all_applicable_next_ok(std::span<const PrefixCheck> checks);

}  // namespace phibound
