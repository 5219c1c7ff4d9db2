#include "phibound/sequences.hpp"

#include <algorithm>
#include <stdexcept>

#include "phibound/degree_stats.hpp"
#include "phibound/delta_partition.hpp"

namespace phibound {

VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> vs)
{
    if (vs.empty()) {
        throw std::invalid_argument("common neighbourhood of an empty vertex list");
    }
    check_vertices(g, vs);
    auto first = g.neighbors(vs.front());
    VertexSet out(first.begin(), first.end());
    for (std::size_t i = 1; i < vs.size(); ++i) {
        std::erase_if(out, [&](Vertex u) { return !g.adjacent(u, vs[i]); });
    }
    return out;
}

namespace {

int degree_within(const Graph& g, Vertex v, const VertexSet& within)
{
    return static_cast<int>(std::count_if(within.begin(), within.end(), [&](Vertex u) { return g.adjacent(v, u); }));
}

// Score of each candidate at the current step; higher is preferred.
std::vector<int> scores(const Graph& g, SequenceKind kind, const VertexSet& candidates)
{
    std::vector<int> out;
    out.reserve(candidates.size());
    for (Vertex v : candidates) {
        out.push_back(kind == SequenceKind::alpha ? degree_within(g, v, candidates) : g.degree(v));
    }
    return out;
}

Vertex choose(const VertexSet& candidates, const std::vector<int>& score, std::mt19937_64* rng)
{
    const int top = *std::max_element(score.begin(), score.end());
    VertexSet tied;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (score[i] == top) {
            tied.push_back(candidates[i]);
        }
    }
    if (rng == nullptr) {
        return tied.front();
    }
    std::uniform_int_distribution<std::size_t> pick(0, tied.size() - 1);
    return tied[pick(*rng)];
}

}  // namespace

SequenceTrace build_sequence(const Graph& g, SequenceKind kind, const SequenceOptions& options)
{
    if (g.order() == 0) {
        throw std::invalid_argument("sequence of the null graph");
    }
    SequenceTrace t;
    t.kind = kind;

    VertexSet all(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        all[v] = v;
    }
    // The first vertex maximizes degree in G for both kinds.
    Vertex v = choose(all, scores(g, SequenceKind::beta, all), options.tie_break);
    VertexSet nbhd(g.neighbors(v).begin(), g.neighbors(v).end());
    t.vertices.push_back(v);
    t.common_nbhd_per_prefix.push_back(nbhd);

    while (!nbhd.empty() && (!options.max_length || t.length() < *options.max_length)) {
        v = choose(nbhd, scores(g, kind, nbhd), options.tie_break);
        std::erase_if(nbhd, [&](Vertex u) { return !g.adjacent(u, v); });
        t.vertices.push_back(v);
        t.common_nbhd_per_prefix.push_back(nbhd);
    }
    return t;
}

bool verify_sequence(const Graph& g, const SequenceTrace& t)
{
    if (t.vertices.empty() || t.common_nbhd_per_prefix.size() != t.vertices.size()) {
        return false;
    }
    for (Vertex v : t.vertices) {
        if (v < 0 || v >= g.order()) {
            return false;
        }
    }
    if (g.degree(t.vertices[0]) != g.max_degree()) {
        return false;
    }
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        const std::span<const Vertex> prefix(t.vertices.data(), i + 1);
        if (common_neighborhood(g, prefix) != t.common_nbhd_per_prefix[i]) {
            return false;
        }
        if (i == 0) {
            continue;
        }
        const VertexSet& candidates = t.common_nbhd_per_prefix[i - 1];
        const Vertex v = t.vertices[i];
        if (std::find(candidates.begin(), candidates.end(), v) == candidates.end()) {
            return false;
        }
        int best = 0;
        int mine = 0;
        for (Vertex u : candidates) {
            const int d = t.kind == SequenceKind::alpha ? degree_within(g, u, candidates) : g.degree(u);
            best = std::max(best, d);
            if (u == v) {
                mine = d;
            }
        }
        if (mine != best) {
            return false;
        }
    }
    return true;
}

SequenceTrace corollary_checks(const Graph& g, SequenceTrace t)
{
    if (!verify_sequence(g, t)) {
        throw std::invalid_argument("sequence trace does not belong to this graph");
    }
    const DegreeStats stats(g);
    const int n = g.order();
    t.cor41.clear();
    t.cor42.clear();
    long long degree_sum = g.degree(t.vertices[0]);
    for (int r = 2; r <= t.length(); ++r) {
        degree_sum += g.degree(t.vertices[r - 1]);
        const bool bound = satisfies_quadratic_bound(stats, r);
        const bool next_bound = satisfies_quadratic_bound(stats, r + 1);

        const VertexSet& common = t.common_nbhd_per_prefix[r - 1];
        PrefixCheck c41{r, false, false, true, true};
        c41.hypothesis_ok = !common.empty() && is_delta_set(g, common);
        c41.applicable = c41.hypothesis_ok;
        if (c41.applicable) {
            c41.bound_ok = bound;
            c41.next_bound_ok = next_bound;
        }
        t.cor41.push_back(c41);

        if (t.kind == SequenceKind::beta) {
            PrefixCheck c42{r, false, false, true, true};
            c42.hypothesis_ok = degree_sum <= static_cast<long long>(r - 1) * n;
            c42.applicable = c42.hypothesis_ok;
            if (c42.applicable) {
                c42.bound_ok = bound;
                c42.next_bound_ok = next_bound;
            }
            t.cor42.push_back(c42);
        }
    }
    return t;
}

bool all_applicable_ok(std::span<const PrefixCheck> checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const PrefixCheck& c) { return !c.applicable || c.bound_ok; });
}

bool all_applicable_next_ok(std::span<const PrefixCheck> checks)
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const PrefixCheck& c) { return !c.applicable || c.next_bound_ok; });
}

}  // namespace phibound
