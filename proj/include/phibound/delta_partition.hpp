#pragma once

#include <span>
#include <vector>

#include "phibound/degree_stats.hpp"
#include "phibound/graph.hpp"

namespace phibound {

/// True iff every v in vs has degree at most n - |vs|. Depends only on degrees and |vs|.
bool is_delta_set(const Graph& g, std::span<const Vertex> vs);

/// Ordered family of nonempty, pairwise disjoint delta-sets covering V(G).
class DeltaPartition {
public:
    /// Validates against `g`; throws std::invalid_argument on any violated invariant.
    DeltaPartition(const Graph& g, std::vector<VertexSet> parts);

    [[nodiscard]] const std::vector<VertexSet>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] std::vector<int> part_sizes() const;

private:
    std::vector<VertexSet> parts_;
};

enum class PhiMethod { greedy, brute_force };

struct PhiResult {
    int phi = 0;
    DeltaPartition witness;
    PhiMethod method = PhiMethod::greedy;
};

/// Minimum number of delta-sets partitioning V(G).
///
/// Vertices are taken in descending degree order (ties by ascending index). Each part is
/// opened by the highest remaining degree d and filled with the next n - d vertices.
PhiResult phi_exact(const Graph& g);

inline constexpr int kDefaultOracleMaxOrder = 12;

/// Exhaustive search over set partitions (restricted growth strings) by increasing block count.
PhiResult phi_oracle(const Graph& g, int max_order = kDefaultOracleMaxOrder);

struct PhiLowerBounds {
    /// Least r >= 1 with r * sum(d) <= n^2 (r - 1), the arithmetic-mean bound.
    int arithmetic = 1;
    /// Least r >= 1 with r^2 * sum(d^2) <= n^3 (r - 1)^2, the quadratic-mean bound.
    int quadratic = 1;
};

PhiLowerBounds phi_lower_bound_ceil(const DegreeStats& s);

/// r >= n / (n - dd) decided as r^2 * sum(d^2) <= n^3 (r - 1)^2, where dd is the quadratic mean degree.
bool satisfies_quadratic_bound(const DegreeStats& s, int r);
/// r == n / (n - dd) exactly.
bool attains_quadratic_bound(const DegreeStats& s, int r);

struct EqualityVerdict {
    bool equality_holds = false;
    bool divisibility_ok = false;
    bool regular_ok = false;
};

/// Decides equality in the quadratic-mean bound for phi and its structural characterization.
/// Throws TheoremFalsification if the two disagree.
EqualityVerdict equality_classifier(const Graph& g, int phi);

struct PartitionInequality {
    BigInt sum_d2;
    /// n * sigma_2 + 3 * sigma_3 over the part sizes.
    BigInt rhs_2_12;
    bool identity_ok = false;  ///< sum n_i (n - n_i)^2 == rhs_2_12
    bool sum_ok = false;       ///< sum_d2 <= rhs_2_12
    bool sigma2_ok = false;    ///< sigma_2 <= n^2 (r-1) / (2r)
    bool sigma3_ok = false;    ///< sigma_3 <= n^3 (r-1)(r-2) / (6 r^2)

    [[nodiscard]] bool all_ok() const noexcept { return identity_ok && sum_ok && sigma2_ok && sigma3_ok; }
};

PartitionInequality partition_inequality_check(const Graph& g, const DeltaPartition& p);

struct EdgeBoundCheck {
    bool turan_ok = false;         ///< 2 omega e <= n^2 (omega - 1)
    bool phi_bound_ok = false;     ///< 2 phi e <= n^2 (phi - 1)
    bool turan_equality = false;
    bool phi_bound_equality = false;
};

EdgeBoundCheck edge_bound_check(const Graph& g, int phi, int omega);

}  // namespace phibound
