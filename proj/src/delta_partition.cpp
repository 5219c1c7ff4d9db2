#include "phibound/delta_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "phibound/errors.hpp"

namespace phibound {

bool is_delta_set(const Graph& g, std::span<const Vertex> vs)
{
    if (vs.empty()) {
        throw std::invalid_argument("delta-set test on an empty vertex set");
    }
    check_vertices(g, vs);
    const int limit = g.order() - static_cast<int>(vs.size());
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g.degree(v) <= limit; });
}

DeltaPartition::DeltaPartition(const Graph& g, std::vector<VertexSet> parts) : parts_(std::move(parts))
{
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    for (const auto& part : parts_) {
        if (part.empty()) {
            throw std::invalid_argument("delta partition contains an empty part");
        }
        check_vertices(g, part);
        for (Vertex v : part) {
            if (seen[v]++ != 0) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two parts");
            }
        }
        if (!is_delta_set(g, part)) {
            throw std::invalid_argument("part of size " + std::to_string(part.size()) + " is not a delta-set");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw std::invalid_argument("delta partition does not cover every vertex");
    }
}

std::vector<int> DeltaPartition::part_sizes() const
{
    std::vector<int> out;
    out.reserve(parts_.size());
    for (const auto& part : parts_) {
        out.push_back(static_cast<int>(part.size()));
    }
    return out;
}

PhiResult phi_exact(const Graph& g)
{
    const int n = g.order();
    if (n == 0) {
        throw std::invalid_argument("phi is undefined for the null graph");
    }
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::vector<VertexSet> parts;
    for (std::size_t i = 0; i < order.size();) {
        const auto capacity = static_cast<std::size_t>(n - g.degree(order[i]));
        const std::size_t end = std::min(order.size(), i + capacity);
        VertexSet part(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(end));
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
        i = end;
    }
    const int phi = static_cast<int>(parts.size());
    return {phi, DeltaPartition(g, std::move(parts)), PhiMethod::greedy};
}

namespace {

// Depth-first enumeration of restricted growth strings with exactly `blocks` distinct labels.
class RgsSearch {
public:
    RgsSearch(const Graph& g, int blocks)
        : g_(g), n_(g.order()), blocks_(blocks), label_(static_cast<std::size_t>(n_), 0)
    {
    }

    bool run() { return assign(0, 0); }

    [[nodiscard]] std::vector<VertexSet> parts() const
    {
        std::vector<VertexSet> out(static_cast<std::size_t>(blocks_));
        for (Vertex v = 0; v < n_; ++v) {
            out[label_[v]].push_back(v);
        }
        return out;
    }

private:
    bool assign(int i, int used)
    {
        if (i == n_) {
            return used == blocks_ && valid();
        }
        if (n_ - i < blocks_ - used) {
            return false;
        }
        const int top = std::min(used, blocks_ - 1);
        for (int b = 0; b <= top; ++b) {
            label_[i] = b;
            if (assign(i + 1, b == used ? used + 1 : used)) {
                return true;
            }
        }
        return false;
    }

    [[nodiscard]] bool valid() const
    {
        std::vector<int> size(static_cast<std::size_t>(blocks_), 0);
        std::vector<int> top(static_cast<std::size_t>(blocks_), 0);
        for (Vertex v = 0; v < n_; ++v) {
            ++size[label_[v]];
            top[label_[v]] = std::max(top[label_[v]], g_.degree(v));
        }
        for (int b = 0; b < blocks_; ++b) {
            if (top[b] > n_ - size[b]) {
                return false;
            }
        }
        return true;
    }

    const Graph& g_;
    int n_;
    int blocks_;
    std::vector<int> label_;
};

}  // namespace

PhiResult phi_oracle(const Graph& g, int max_order)
{
    const int n = g.order();
    if (n == 0) {
        throw std::invalid_argument("phi is undefined for the null graph");
    }
    if (n > max_order) {
        throw SolverLimitExceeded("phi oracle limited to n <= " + std::to_string(max_order) + ", got " +
                                  std::to_string(n));
    }
    for (int k = 1; k <= n; ++k) {
        RgsSearch search(g, k);
        if (search.run()) {
            return {k, DeltaPartition(g, search.parts()), PhiMethod::brute_force};
        }
    }
    // The all-singletons partition is always valid since every degree is at most n - 1.
    throw std::logic_error("phi oracle found no partition");
}

bool satisfies_quadratic_bound(const DegreeStats& s, int r)
{
    const BigInt n = s.count();
    return BigInt(r) * r * s.sum_squares() <= n * n * n * (r - 1) * (r - 1);
}

bool attains_quadratic_bound(const DegreeStats& s, int r)
{
    const BigInt n = s.count();
    return BigInt(r) * r * s.sum_squares() == n * n * n * (r - 1) * (r - 1);
}

PhiLowerBounds phi_lower_bound_ceil(const DegreeStats& s)
{
    const int n = s.count();
    if (n == 0) {
        throw std::invalid_argument("lower bound undefined for n = 0");
    }
    if (s.max_degree() >= n) {
        throw std::invalid_argument("degree " + std::to_string(s.max_degree()) + " impossible for n=" +
                                    std::to_string(n));
    }
    const BigInt nn = BigInt(n) * n;
    PhiLowerBounds out;
    out.arithmetic = 0;
    out.quadratic = 0;
    for (int r = 1; r <= n && (out.arithmetic == 0 || out.quadratic == 0); ++r) {
        if (out.arithmetic == 0 && BigInt(r) * s.sum() <= nn * (r - 1)) {
            out.arithmetic = r;
        }
        if (out.quadratic == 0 && satisfies_quadratic_bound(s, r)) {
            out.quadratic = r;
        }
    }
    return out;
}

EqualityVerdict equality_classifier(const Graph& g, int phi)
{
    const int n = g.order();
    if (n == 0 || phi != phi_exact(g).phi) {
        throw std::invalid_argument("phi=" + std::to_string(phi) + " is not phi of the supplied graph");
    }
    const DegreeStats stats(g);
    EqualityVerdict v;
    v.equality_holds = attains_quadratic_bound(stats, phi);
    v.divisibility_ok = n % phi == 0;
    if (v.divisibility_ok) {
        const int target = n / phi * (phi - 1);
        v.regular_ok = std::all_of(g.degrees().begin(), g.degrees().end(), [&](int d) { return d == target; });
    }
    if (v.equality_holds != (v.divisibility_ok && v.regular_ok)) {
        throw TheoremFalsification("equality characterization fails for graph6 " + encode_graph6(g));
    }
    return v;
}

PartitionInequality partition_inequality_check(const Graph& g, const DeltaPartition& p)
{
    const int n = g.order();
    const int r = p.size();
    std::size_t covered = 0;
    for (const auto& part : p.parts()) {
        covered += part.size();
    }
    if (covered != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("partition does not belong to this graph");
    }
    // Revalidate: the partition may have been built against a different graph.
    DeltaPartition(g, p.parts());

    const std::vector<BigInt> sizes = to_big(p.part_sizes());
    const BigInt sigma2 = elementary_symmetric_or_zero(sizes, 2);
    const BigInt sigma3 = elementary_symmetric_or_zero(sizes, 3);
    const BigInt bn = n;

    PartitionInequality out;
    out.sum_d2 = DegreeStats(g).sum_squares();
    out.rhs_2_12 = bn * sigma2 + 3 * sigma3;

    BigInt direct = 0;
    for (const BigInt& ni : sizes) {
        direct += ni * (bn - ni) * (bn - ni);
    }
    out.identity_ok = direct == out.rhs_2_12;
    out.sum_ok = out.sum_d2 <= out.rhs_2_12;
    out.sigma2_ok = 2 * BigInt(r) * sigma2 <= bn * bn * (r - 1);
    out.sigma3_ok = 6 * BigInt(r) * r * sigma3 <= bn * bn * bn * (r - 1) * (r - 2);
    return out;
}

EdgeBoundCheck edge_bound_check(const Graph& g, int phi, int omega)
{
    const int n = g.order();
    if (n == 0 || phi < 1 || omega < 1 || omega > n || phi > omega) {
        throw std::invalid_argument("inconsistent invariants: n=" + std::to_string(n) + " phi=" +
                                    std::to_string(phi) + " omega=" + std::to_string(omega));
    }
    const BigInt nn = BigInt(n) * n;
    const BigInt e = g.edge_count();
    auto lhs = [&](int r) { return 2 * BigInt(r) * e; };

    EdgeBoundCheck out;
    out.turan_ok = lhs(omega) <= nn * (omega - 1);
    out.turan_equality = lhs(omega) == nn * (omega - 1);
    out.phi_bound_ok = lhs(phi) <= nn * (phi - 1);
    out.phi_bound_equality = lhs(phi) == nn * (phi - 1);
    if (out.phi_bound_ok && !out.turan_ok) {
        throw TheoremFalsification("phi edge bound holds but the Turan bound fails for graph6 " + encode_graph6(g));
    }
    return out;
}

}  // namespace phibound
