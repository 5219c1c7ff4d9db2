#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phibound {

using Vertex = int;
using VertexSet = std::vector<Vertex>;

/// Raised for malformed graph6 or edge-list input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with a dense adjacency matrix.
/// Immutable once built; mutation goes through Graph::Builder.
class Graph {
public:
    class Builder {
    public:
        explicit Builder(int n);

        /// Adds {u,v}; repeated edges collapse. Throws on self-loops and bad indices.
        Builder& add_edge(Vertex u, Vertex v);
        Graph build() &&;

    private:
        int n_;
        std::vector<std::uint8_t> adj_;
    };

    Graph() = default;

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] std::int64_t edge_count() const noexcept { return edges_; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] int degree(Vertex v) const;
    [[nodiscard]] const std::vector<int>& degrees() const noexcept { return degrees_; }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;
    [[nodiscard]] bool is_regular() const noexcept;
    [[nodiscard]] int max_degree() const noexcept;

    /// Edges as (u,v) with u < v, ordered by v then u.
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

    [[nodiscard]] Graph complement() const;

    bool operator==(const Graph& other) const noexcept
    {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::int64_t edges_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degrees_;
    std::vector<std::vector<Vertex>> nbrs_;
};

struct InducedSubgraph {
    Graph graph;
    /// mapping[i] is the original index of new vertex i.
    std::vector<Vertex> mapping;
};

/// Induced subgraph on `vs`, relabelled 0..|vs|-1 in the order given (duplicates rejected).
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

/// Throws std::out_of_range unless every vertex lies in 0..n-1.
void check_vertices(const Graph& g, std::span<const Vertex> vs);

// graph6 ------------------------------------------------------------------

inline constexpr int kGraph6MaxOrder = 258047;

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// "n m" header followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

// generators --------------------------------------------------------------

enum class Family { complete, empty, cycle, path, star, turan, gnp };

struct Probability {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

/// Parses "num/den" (or a bare "0"/"1").
Probability parse_probability(std::string_view text);

struct FamilySpec {
    Family family = Family::empty;
    int n = 0;
    int r = 1;
    Probability p;
    std::uint64_t seed = 0;
};

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);
Graph turan_graph(int n, int r);
Graph gnp_graph(int n, Probability p, std::uint64_t seed);
/// Draws pairs in graph6 order from `engine`; sweeps use this to share one stream.
Graph gnp_graph(int n, Probability p, std::mt19937_64& engine);

}  // namespace phibound
