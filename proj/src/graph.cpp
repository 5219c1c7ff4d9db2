#include "phibound/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace phibound {

namespace {

std::size_t cell(int n, Vertex u, Vertex v)
{
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
}

void check_order(int n)
{
    if (n < 0) {
        throw std::invalid_argument("vertex count must be nonnegative");
    }
}

}  // namespace

// Graph::Builder ------------------------------------------------------------

Graph::Builder::Builder(int n) : n_(n)
{
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Builder& Graph::Builder::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    adj_[cell(n_, u, v)] = 1;
    adj_[cell(n_, v, u)] = 1;
    return *this;
}

Graph Graph::Builder::build() &&
{
    Graph g;
    g.n_ = n_;
    g.adj_ = std::move(adj_);
    g.degrees_.assign(static_cast<std::size_t>(n_), 0);
    g.nbrs_.resize(static_cast<std::size_t>(n_));
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = 0; v < n_; ++v) {
            if (g.adj_[cell(n_, u, v)] != 0) {
                g.nbrs_[u].push_back(v);
            }
        }
        g.degrees_[u] = static_cast<int>(g.nbrs_[u].size());
        g.edges_ += g.degrees_[u];
    }
    g.edges_ /= 2;
    return g;
}

// Graph ---------------------------------------------------------------------

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj_[cell(n_, u, v)] != 0;
}

int Graph::degree(Vertex v) const
{
    check_vertex(v);
    return degrees_[v];
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    check_vertex(v);
    return nbrs_[v];
}

bool Graph::is_regular() const noexcept
{
    return std::adjacent_find(degrees_.begin(), degrees_.end(), std::not_equal_to<>()) == degrees_.end();
}

int Graph::max_degree() const noexcept
{
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (Vertex v = 1; v < n_; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (adj_[cell(n_, u, v)] != 0) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph Graph::complement() const
{
    Builder b(n_);
    for (Vertex v = 1; v < n_; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (adj_[cell(n_, u, v)] == 0) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

void check_vertices(const Graph& g, std::span<const Vertex> vs)
{
    for (Vertex v : vs) {
        if (v < 0 || v >= g.order()) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(g.order()));
        }
    }
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs)
{
    check_vertices(g, vs);
    std::vector<Vertex> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate vertex in induced_subgraph");
    }
    const int k = static_cast<int>(vs.size());
    Graph::Builder b(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (g.adjacent(vs[i], vs[j])) {
                b.add_edge(i, j);
            }
        }
    }
    return {std::move(b).build(), std::vector<Vertex>(vs.begin(), vs.end())};
}

// graph6 --------------------------------------------------------------------

Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("graph6: empty input");
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw ParseError("graph6: character out of range 63..126");
        }
    }
    auto value = [&](std::size_t i) { return static_cast<int>(text[i]) - 63; };

    int n = 0;
    std::size_t pos = 0;
    if (value(0) < 63) {
        n = value(0);
        pos = 1;
    } else {
        if (text.size() >= 2 && value(1) == 63) {
            throw ParseError("graph6: 8-byte size header not supported");
        }
        if (text.size() < 4) {
            throw ParseError("graph6: truncated size header");
        }
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        if (n < 63) {
            throw ParseError("graph6: non-canonical 4-byte size header");
        }
        pos = 4;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 > 0 ? n - 1 : 0) / 2;
    const std::size_t chars = (bits + 5) / 6;
    if (text.size() - pos < chars) {
        throw ParseError("graph6: truncated adjacency data");
    }
    if (text.size() - pos > chars) {
        throw ParseError("graph6: trailing characters");
    }

    Graph::Builder b(n);
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++k) {
            const int chunk = value(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) {
                b.add_edge(u, v);
            }
        }
    }
    if (k % 6 != 0 && (value(pos + k / 6) & ((1 << (6 - k % 6)) - 1)) != 0) {
        throw ParseError("graph6: nonzero padding bits");
    }
    return std::move(b).build();
}

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw std::invalid_argument("graph6: order too large for 4-byte header");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    }
    return out;
}

// edge list -----------------------------------------------------------------

namespace {

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

long long to_integer(std::string_view tok)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("edge list: non-integer token '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<std::vector<std::string_view>> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto toks = split_tokens(text.substr(start, end - start));
        if (!toks.empty()) {
            lines.push_back(std::move(toks));
        }
        start = end + 1;
    }
    if (lines.empty() || lines.front().size() != 2) {
        throw ParseError("edge list: expected header line 'n m'");
    }
    const long long n = to_integer(lines[0][0]);
    const long long m = to_integer(lines[0][1]);
    if (n < 0 || m < 0 || n > kGraph6MaxOrder) {
        throw ParseError("edge list: invalid header");
    }
    if (static_cast<long long>(lines.size()) - 1 != m) {
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
    }
    Graph::Builder b(static_cast<int>(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != 2) {
            throw ParseError("edge list: line " + std::to_string(i + 1) + " must hold exactly two vertices");
        }
        const long long u = to_integer(lines[i][0]);
        const long long v = to_integer(lines[i][1]);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("edge list: vertex out of range on line " + std::to_string(i + 1));
        }
        if (u == v) {
            throw ParseError("edge list: self-loop on line " + std::to_string(i + 1));
        }
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return std::move(b).build();
}

std::string encode_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) {
        os << u << ' ' << v << '\n';
    }
    return os.str();
}

// generators ----------------------------------------------------------------

Probability parse_probability(std::string_view text)
{
    Probability p;
    const auto slash = text.find('/');
    auto parse_u64 = [](std::string_view tok) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("probability: expected num/den, got '" + std::string(tok) + "'");
        }
        return value;
    };
    if (slash == std::string_view::npos) {
        p.num = parse_u64(text);
        p.den = 1;
    } else {
        p.num = parse_u64(text.substr(0, slash));
        p.den = parse_u64(text.substr(slash + 1));
    }
    if (p.den == 0 || p.num > p.den) {
        throw std::invalid_argument("probability must lie in [0,1] with a positive denominator");
    }
    return p;
}

Family parse_family(std::string_view name)
{
    for (Family f : {Family::complete, Family::empty, Family::cycle, Family::path, Family::star, Family::turan,
                     Family::gnp}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::complete: return "complete";
    case Family::empty: return "empty";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::turan: return "turan";
    case Family::gnp: return "gnp";
    }
    return "unknown";
}

Graph generate(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::complete: return complete_graph(spec.n);
    case Family::empty: return empty_graph(spec.n);
    case Family::cycle: return cycle_graph(spec.n);
    case Family::path: return path_graph(spec.n);
    case Family::star: return star_graph(spec.n);
    case Family::turan: return turan_graph(spec.n, spec.r);
    case Family::gnp: return gnp_graph(spec.n, spec.p, spec.seed);
    }
    throw std::invalid_argument("unknown family");
}

Graph complete_graph(int n)
{
    Graph::Builder b(n);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph empty_graph(int n)
{
    return Graph::Builder(n).build();
}

Graph cycle_graph(int n)
{
    if (n != 0 && n < 3) {
        throw std::invalid_argument("cycle requires n >= 3");
    }
    Graph::Builder b(n);
    for (Vertex v = 0; v < n; ++v) {
        b.add_edge(v, (v + 1) % n);
    }
    return std::move(b).build();
}

Graph path_graph(int n)
{
    Graph::Builder b(n);
    for (Vertex v = 1; v < n; ++v) {
        b.add_edge(v - 1, v);
    }
    return std::move(b).build();
}

// Vertex 0 is the centre.
Graph star_graph(int n)
{
    Graph::Builder b(n);
    for (Vertex v = 1; v < n; ++v) {
        b.add_edge(0, v);
    }
    return std::move(b).build();
}

// Parts are contiguous index blocks; the first n mod r blocks get the extra vertex.
Graph turan_graph(int n, int r)
{
    check_order(n);
    if (r < 1 || r > n) {
        throw std::invalid_argument("turan requires 1 <= r <= n");
    }
    std::vector<int> part(static_cast<std::size_t>(n));
    const int base = n / r;
    const int extra = n % r;
    Vertex v = 0;
    for (int i = 0; i < r; ++i) {
        const int size = base + (i < extra ? 1 : 0);
        for (int k = 0; k < size; ++k) {
            part[v++] = i;
        }
    }
    Graph::Builder b(n);
    for (Vertex y = 1; y < n; ++y) {
        for (Vertex x = 0; x < y; ++x) {
            if (part[x] != part[y]) {
                b.add_edge(x, y);
            }
        }
    }
    return std::move(b).build();
}

Graph gnp_graph(int n, Probability p, std::mt19937_64& engine)
{
    check_order(n);
    if (p.den == 0 || p.num > p.den) {
        throw std::invalid_argument("probability must lie in [0,1] with a positive denominator");
    }
    // Unbiased draw in [0, den) by rejection; independent of the standard library's distributions.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % p.den;
    auto draw = [&] {
        std::uint64_t x = 0;
        do {
            x = engine();
        } while (x >= limit);
        return x % p.den;
    };
    Graph::Builder b(n);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (draw() < p.num) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

Graph gnp_graph(int n, Probability p, std::uint64_t seed)
{
    std::mt19937_64 engine(seed);
    return gnp_graph(n, p, engine);
}

}  // namespace phibound
