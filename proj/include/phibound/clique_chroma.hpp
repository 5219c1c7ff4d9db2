#pragma once

#include <vector>

#include "phibound/graph.hpp"

namespace phibound {

inline constexpr int kDefaultCliqueLimit = 64;
inline constexpr int kDefaultChromaticLimit = 20;

struct CliqueResult {
    int omega = 0;
    VertexSet witness;  ///< sorted, pairwise adjacent, |witness| == omega
};

/// Maximum clique by branch and bound with greedy-colouring bounds over 64-bit vertex masks.
/// Throws SolverLimitExceeded when n > limit (limit is capped at 64).
CliqueResult clique_number(const Graph& g, int limit = kDefaultCliqueLimit);

struct ColoringResult {
    int chi = 0;
    std::vector<int> coloring;  ///< colour of each vertex, in 0..chi-1
};

/// Chromatic number by iterative deepening on the colour count with DSATUR-ordered backtracking.
ColoringResult chromatic_number(const Graph& g, int limit = kDefaultChromaticLimit);

struct CliqueChroma {
    int omega = 0;
    int chi = 0;
    VertexSet max_clique_witness;
    std::vector<int> coloring_witness;
};

CliqueChroma clique_chroma(const Graph& g, int clique_limit = kDefaultCliqueLimit,
                           int chromatic_limit = kDefaultChromaticLimit);

bool is_clique(const Graph& g, std::span<const Vertex> vs);
bool is_proper_coloring(const Graph& g, std::span<const int> coloring);

struct CliqueBoundCheck {
    bool bound_ok = false;  ///< omega^2 sum(d^2) <= n^3 (omega - 1)^2
    bool equality = false;
};

CliqueBoundCheck clique_bound_check(const Graph& g, int omega);

/// Part sizes if `g` is complete multipartite (complement is a disjoint union of cliques), else empty.
std::vector<int> complete_multipartite_parts(const Graph& g);

struct ExtremalClassification {
    bool eq417 = false;
    bool regular = false;
    /// Complete omega-partite with all parts of equal size.
    bool complete_multipartite = false;
};

/// Equality in the clique lower bound must force a regular, balanced complete omega-partite graph
/// with phi == chi == omega. Throws TheoremFalsification otherwise.
ExtremalClassification extremal_clique_classifier(const Graph& g, int omega, int phi, int chi);

}  // namespace phibound
