#include "phibound/clique_chroma.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "phibound/degree_stats.hpp"
#include "phibound/delta_partition.hpp"
#include "phibound/errors.hpp"

namespace phibound {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g)
{
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex u : g.neighbors(v)) {
            adj[v] |= bit(u);
        }
    }
    return adj;
}

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    VertexSet run(int n)
    {
        const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
        if (n > 0) {
            expand(all);
        }
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(Mask cand)
    {
        std::vector<int> order;
        std::vector<int> bound;
        Mask uncoloured = cand;
        int colour = 0;
        while (uncoloured != 0) {
            ++colour;
            Mask q = uncoloured;
            while (q != 0) {
                const int v = std::countr_zero(q);
                q &= ~bit(v) & ~adj_[v];
                uncoloured &= ~bit(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (auto i = order.size(); i-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) {
                return;
            }
            const int v = order[i];
            current_.push_back(v);
            const Mask next = cand & adj_[v];
            if (next != 0) {
                expand(next);
            } else if (current_.size() > best_.size()) {
                best_ = current_;
            }
            current_.pop_back();
            cand &= ~bit(v);
        }
    }

    std::vector<Mask> adj_;
    VertexSet current_;
    VertexSet best_;
};

class ColouringSearch {
public:
    ColouringSearch(const Graph& g, int colours)
        : g_(g), n_(g.order()), k_(colours), colour_(static_cast<std::size_t>(n_), -1),
          forbidden_(static_cast<std::size_t>(n_), 0)
    {
    }

    bool run() { return extend(0, 0); }
    [[nodiscard]] const std::vector<int>& colouring() const { return colour_; }

private:
    // DSATUR pick: most distinct neighbour colours, then highest degree, then lowest index.
    int pick() const
    {
        int best = -1;
        int best_sat = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) {
                continue;
            }
            const int sat = std::popcount(forbidden_[v]);
            if (sat > best_sat || (sat == best_sat && g_.degree(v) > g_.degree(best))) {
                best = v;
                best_sat = sat;
            }
        }
        return best;
    }

    bool extend(int coloured, int used)
    {
        if (coloured == n_) {
            return true;
        }
        const int v = pick();
        const int top = std::min(used + 1, k_);
        for (int c = 0; c < top; ++c) {
            if ((forbidden_[v] >> c) & 1U) {
                continue;
            }
            colour_[v] = c;
            std::vector<std::pair<Vertex, std::uint32_t>> saved;
            for (Vertex u : g_.neighbors(v)) {
                if (colour_[u] < 0) {
                    saved.emplace_back(u, forbidden_[u]);
                    forbidden_[u] |= 1U << c;
                }
            }
            if (extend(coloured + 1, std::max(used, c + 1))) {
                return true;
            }
            for (auto [u, mask] : saved) {
                forbidden_[u] = mask;
            }
            colour_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    std::vector<int> colour_;
    std::vector<std::uint32_t> forbidden_;
};

}  // namespace

CliqueResult clique_number(const Graph& g, int limit)
{
    const int n = g.order();
    if (n > std::min(limit, 64)) {
        throw SolverLimitExceeded("clique solver limited to n <= " + std::to_string(std::min(limit, 64)) +
                                  ", got " + std::to_string(n));
    }
    VertexSet witness = MaxCliqueSearch(adjacency_masks(g)).run(n);
    return {static_cast<int>(witness.size()), std::move(witness)};
}

ColoringResult chromatic_number(const Graph& g, int limit)
{
    const int n = g.order();
    if (n > std::min(limit, 32)) {
        throw SolverLimitExceeded("chromatic solver limited to n <= " + std::to_string(std::min(limit, 32)) +
                                  ", got " + std::to_string(n));
    }
    if (n == 0) {
        return {0, {}};
    }
    for (int k = 1; k <= n; ++k) {
        ColouringSearch search(g, k);
        if (search.run()) {
            return {k, search.colouring()};
        }
    }
    throw std::logic_error("no colouring with n colours");
}

CliqueChroma clique_chroma(const Graph& g, int clique_limit, int chromatic_limit)
{
    auto clique = clique_number(g, clique_limit);
    auto colouring = chromatic_number(g, chromatic_limit);
    return {clique.omega, colouring.chi, std::move(clique.witness), std::move(colouring.coloring)};
}

bool is_clique(const Graph& g, std::span<const Vertex> vs)
{
    check_vertices(g, vs);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.adjacent(vs[i], vs[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_proper_coloring(const Graph& g, std::span<const int> coloring)
{
    if (coloring.size() != static_cast<std::size_t>(g.order())) {
        return false;
    }
    for (auto [u, v] : g.edges()) {
        if (coloring[u] == coloring[v]) {
            return false;
        }
    }
    return std::all_of(coloring.begin(), coloring.end(), [](int c) { return c >= 0; });
}

CliqueBoundCheck clique_bound_check(const Graph& g, int omega)
{
    const int n = g.order();
    if (n == 0 || omega < 1 || omega > n || (g.edge_count() > 0 && omega < 2)) {
        throw std::invalid_argument("omega=" + std::to_string(omega) + " inconsistent with graph");
    }
    const DegreeStats stats(g);
    return {satisfies_quadratic_bound(stats, omega), attains_quadratic_bound(stats, omega)};
}

std::vector<int> complete_multipartite_parts(const Graph& g)
{
    const Graph co = g.complement();
    const int n = co.order();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    for (Vertex s = 0; s < n; ++s) {
        if (component[s] >= 0) {
            continue;
        }
        const int id = static_cast<int>(sizes.size());
        VertexSet members{s};
        component[s] = id;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (Vertex u : co.neighbors(members[i])) {
                if (component[u] < 0) {
                    component[u] = id;
                    members.push_back(u);
                }
            }
        }
        if (!is_clique(co, members)) {
            return {};
        }
        sizes.push_back(static_cast<int>(members.size()));
    }
    return sizes;
}

ExtremalClassification extremal_clique_classifier(const Graph& g, int omega, int phi, int chi)
{
    const auto bound = clique_bound_check(g, omega);
    const auto parts = complete_multipartite_parts(g);

    ExtremalClassification out;
    out.eq417 = bound.equality;
    out.regular = g.is_regular();
    out.complete_multipartite = static_cast<int>(parts.size()) == omega &&
                                std::adjacent_find(parts.begin(), parts.end(), std::not_equal_to<>()) == parts.end();
    if (out.eq417 && !(out.regular && out.complete_multipartite && phi == omega && chi == omega)) {
        throw TheoremFalsification("clique-bound equality without balanced complete " + std::to_string(omega) +
                                   "-partite structure for graph6 " + encode_graph6(g));
    }
    return out;
}

}  // namespace phibound
