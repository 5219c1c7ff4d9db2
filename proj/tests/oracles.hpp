#pragma once

// Brute-force reference implementations used only by tests. They share nothing with the
// library's search code beyond the Graph accessors.

#include <cstdint>
#include <random>
#include <vector>

#include "phibound/degree_stats.hpp"
#include "phibound/graph.hpp"

namespace phibound::oracle {

/// Largest pairwise-adjacent subset, by trying all 2^n subsets.
inline int clique_by_subsets(const Graph& g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if (((mask >> u) & 1U) && ((mask >> v) & 1U) && !g.adjacent(u, v)) {
                    ok = false;
                }
            }
        }
        if (ok) {
            best = std::max(best, __builtin_popcount(mask));
        }
    }
    return best;
}

/// Smallest k admitting a proper colouring, trying every map V -> {0..k-1}.
inline int chromatic_by_assignments(const Graph& g)
{
    const int n = g.order();
    if (n == 0) {
        return 0;
    }
    const auto edges = g.edges();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        while (true) {
            bool proper = true;
            for (auto [u, v] : edges) {
                if (c[u] == c[v]) {
                    proper = false;
                    break;
                }
            }
            if (proper) {
                return k;
            }
            int i = 0;
            while (i < n && ++c[i] == k) {
                c[i++] = 0;
            }
            if (i == n) {
                break;
            }
        }
    }
    return n;
}

/// Fewest nonempty classes over every map V -> {0..n-1} whose classes are all delta-sets.
inline int phi_by_assignments(const Graph& g)
{
    const int n = g.order();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    int best = n;
    while (true) {
        std::vector<int> size(static_cast<std::size_t>(n), 0);
        std::vector<int> top(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            ++size[c[v]];
            top[c[v]] = std::max(top[c[v]], g.degree(v));
        }
        bool ok = true;
        int used = 0;
        for (int b = 0; b < n; ++b) {
            if (size[b] > 0) {
                ++used;
                ok = ok && top[b] <= n - size[b];
            }
        }
        if (ok) {
            best = std::min(best, used);
        }
        int i = 0;
        while (i < n && ++c[i] == n) {
            c[i++] = 0;
        }
        if (i == n) {
            break;
        }
    }
    return best;
}

/// sigma_s as a sum over all s-subsets.
inline BigInt sigma_by_subsets(const std::vector<BigInt>& xs, int s)
{
    const auto n = static_cast<int>(xs.size());
    BigInt total = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (__builtin_popcount(mask) != s) {
            continue;
        }
        BigInt term = 1;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) {
                term *= xs[i];
            }
        }
        total += term;
    }
    return total;
}

/// Random degree-preserving double edge swap; returns g unchanged when no swap applies.
inline Graph edge_swap(const Graph& g, std::mt19937& rng)
{
    auto edges = g.edges();
    if (edges.size() < 2) {
        return g;
    }
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    for (int attempt = 0; attempt < 20; ++attempt) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        if (i == j || a == c || a == d || b == c || b == d || g.adjacent(a, d) || g.adjacent(c, b)) {
            continue;
        }
        Graph::Builder builder(g.order());
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (k != i && k != j) {
                builder.add_edge(edges[k].first, edges[k].second);
            }
        }
        builder.add_edge(a, d).add_edge(c, b);
        return std::move(builder).build();
    }
    return g;
}

}  // namespace phibound::oracle
