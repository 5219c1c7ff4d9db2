#include "phibound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <sstream>
#include <thread>

#include "phibound/errors.hpp"
#include "phibound/sequences.hpp"

namespace phibound {

namespace {

void expect(BoundReport& r, bool ok, const char* check, const std::string& what)
{
    if (!ok) {
        r.anomalies.push_back({check, what});
    }
}

}  // namespace

BoundReport analyze(const Graph& g, const AnalyzeOptions& options)
{
    if (g.order() == 0) {
        throw std::invalid_argument("analyze requires at least one vertex");
    }
    BoundReport r;
    r.graph_id = encode_graph6(g);
    r.n = g.order();
    r.e = g.edge_count();

    const DegreeStats stats(g);
    r.sum_d = stats.sum();
    r.sum_d2 = stats.sum_squares();
    expect(r, r.sum_d == 2 * BigInt(r.e), "handshake", "sum of degrees != 2e");

    const PhiResult phi = phi_exact(g);
    r.phi = phi.phi;
    r.witness_partition = phi.witness.part_sizes();
    if (r.n <= options.oracle_max_n) {
        r.phi_oracle = phi_oracle(g, options.oracle_max_n).phi;
        if (*r.phi_oracle != r.phi) {
            throw OracleMismatch("phi_exact=" + std::to_string(r.phi) + " but oracle=" +
                                 std::to_string(*r.phi_oracle) + " for graph6 " + r.graph_id);
        }
    }

    const PhiLowerBounds lb = phi_lower_bound_ceil(stats);
    r.lb_ceil_15 = lb.arithmetic;
    r.lb_ceil_16 = lb.quadratic;
    expect(r, r.lb_ceil_15 <= r.lb_ceil_16, "eq15_le_eq16", "arithmetic-mean bound exceeds quadratic-mean bound");
    expect(r, r.lb_ceil_16 <= r.phi, "eq16", "phi below the quadratic-mean lower bound");
    r.eq16_equality = attains_quadratic_bound(stats, r.phi);

    try {
        r.verdict = equality_classifier(g, r.phi);
    } catch (const TheoremFalsification& ex) {
        r.anomalies.push_back({"eq16_iff", ex.what()});
    }

    const BigInt nn = BigInt(r.n) * r.n;
    r.eq14_ok = 2 * BigInt(r.phi) * r.e <= nn * (r.phi - 1);
    r.eq14_equality = 2 * BigInt(r.phi) * r.e == nn * (r.phi - 1);
    expect(r, r.eq14_ok, "eq14", "phi edge bound violated");

    const PartitionInequality pi = partition_inequality_check(g, phi.witness);
    r.eq212_ok = pi.identity_ok && pi.sum_ok;
    r.eq213_ok = pi.sigma2_ok && pi.sigma3_ok;
    expect(r, r.eq212_ok, "eq212", "squared-degree sum exceeds n*sigma2 + 3*sigma3 on the witness");
    expect(r, r.eq213_ok, "eq213", "sigma2/sigma3 Maclaurin bound violated on the witness sizes");

    try {
        const CliqueResult clique = clique_number(g, options.clique_limit);
        r.omega = clique.omega;
        expect(r, is_clique(g, clique.witness), "clique_witness", "clique witness is not a clique");
        expect(r, r.phi <= *r.omega, "eq12", "phi exceeds the clique number");

        const EdgeBoundCheck eb = edge_bound_check(g, r.phi, *r.omega);
        r.eq13_ok = eb.turan_ok;
        r.eq13_equality = eb.turan_equality;
        expect(r, eb.turan_ok, "eq13", "Turan edge bound violated");

        const CliqueBoundCheck cb = clique_bound_check(g, *r.omega);
        r.eq416_ok = cb.bound_ok;
        r.eq416_equality = cb.equality;
        expect(r, cb.bound_ok, "eq416", "clique number below the quadratic-mean lower bound");
    } catch (const SolverLimitExceeded& ex) {
        r.skipped.push_back(std::string("omega and dependent checks: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        r.anomalies.push_back({"invariants", ex.what()});
    } catch (const TheoremFalsification& ex) {
        r.anomalies.push_back({"eq13_vs_eq14", ex.what()});
    }

    try {
        const ColoringResult colouring = chromatic_number(g, options.chromatic_limit);
        r.chi = colouring.chi;
        expect(r, is_proper_coloring(g, colouring.coloring), "coloring_witness", "colouring witness is not proper");
        if (r.omega) {
            expect(r, *r.omega <= *r.chi, "omega_le_chi", "clique number exceeds chromatic number");
        }
    } catch (const SolverLimitExceeded& ex) {
        r.skipped.push_back(std::string("chi: ") + ex.what());
    }

    if (r.omega && r.chi) {
        try {
            r.extremal = extremal_clique_classifier(g, *r.omega, r.phi, *r.chi);
        } catch (const TheoremFalsification& ex) {
            r.anomalies.push_back({"cor45", ex.what()});
        }
    } else {
        r.skipped.emplace_back("extremal clique classification needs omega and chi");
    }

    r.cor41_all_ok = true;
    r.cor42_all_ok = true;
    r.cor41_next_all_ok = true;
    r.cor42_next_all_ok = true;
    for (SequenceKind kind : {SequenceKind::alpha, SequenceKind::beta}) {
        const SequenceTrace t = corollary_checks(g, build_sequence(g, kind));
        r.cor41_all_ok = r.cor41_all_ok && all_applicable_ok(t.cor41);
        r.cor42_all_ok = r.cor42_all_ok && all_applicable_ok(t.cor42);
        r.cor41_next_all_ok = r.cor41_next_all_ok && all_applicable_next_ok(t.cor41);
        r.cor42_next_all_ok = r.cor42_next_all_ok && all_applicable_next_ok(t.cor42);
    }
    expect(r, r.cor41_all_ok, "cor41", "sequence length below the bound with a delta-set common neighbourhood");
    expect(r, r.cor42_all_ok, "cor42", "beta-sequence length below the bound under the degree-sum hypothesis");
    return r;
}

// sweeps --------------------------------------------------------------------

void validate(const SweepSpec& spec)
{
    if (spec.n_min < 1 || spec.n_max < spec.n_min) {
        throw std::invalid_argument("sweep needs 1 <= n_min <= n_max");
    }
    if (spec.mode == SweepMode::exhaustive && spec.n_max > kExhaustiveMaxOrder) {
        throw std::invalid_argument("exhaustive sweeps are limited to n <= " + std::to_string(kExhaustiveMaxOrder));
    }
    if (spec.mode == SweepMode::random) {
        if (spec.count < 1) {
            throw std::invalid_argument("random sweeps need count >= 1");
        }
        if (spec.p.den == 0 || spec.p.num > spec.p.den) {
            throw std::invalid_argument("probability must lie in [0,1]");
        }
    }
    if (spec.oracle_max_n < 0 || spec.oracle_max_n > kDefaultOracleMaxOrder) {
        throw std::invalid_argument("oracle_max_n must lie in 0.." + std::to_string(kDefaultOracleMaxOrder));
    }
}

std::vector<Graph> exhaustive_graphs(int n)
{
    if (n < 0 || n > 8) {
        throw std::invalid_argument("exhaustive enumeration supports 0 <= n <= 8");
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            pairs.emplace_back(u, v);
        }
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Graph> out;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph::Builder b(n);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if ((mask >> k) & 1U) {
                b.add_edge(pairs[k].first, pairs[k].second);
            }
        }
        out.push_back(std::move(b).build());
    }
    return out;
}

std::vector<Graph> sweep_graphs(const SweepSpec& spec)
{
    validate(spec);
    std::vector<Graph> out;
    if (spec.mode == SweepMode::exhaustive) {
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            auto batch = exhaustive_graphs(n);
            std::move(batch.begin(), batch.end(), std::back_inserter(out));
        }
    } else {
        std::mt19937_64 engine(spec.seed);
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            for (int i = 0; i < spec.count; ++i) {
                out.push_back(gnp_graph(n, spec.p, engine));
            }
        }
    }
    return out;
}

SweepSummary run_reports(std::span<const Graph> graphs, const AnalyzeOptions& options, const ReportSink& sink,
                         int workers, bool keep_going)
{
    workers = std::max(1, workers);
    SweepSummary summary;
    constexpr std::size_t kBatch = 256;

    std::vector<std::optional<BoundReport>> slots;
    std::vector<std::exception_ptr> errors;
    for (std::size_t begin = 0; begin < graphs.size(); begin += kBatch) {
        const std::size_t end = std::min(graphs.size(), begin + kBatch);
        slots.assign(end - begin, std::nullopt);
        errors.assign(end - begin, nullptr);
        std::atomic<std::size_t> next{begin};
        auto work = [&] {
            for (std::size_t i = next++; i < end; i = next++) {
                try {
                    slots[i - begin] = analyze(graphs[i], options);
                } catch (...) {
                    errors[i - begin] = std::current_exception();
                }
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back(work);
            }
        }
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (errors[i]) {
                std::rethrow_exception(errors[i]);
            }
            const BoundReport& r = *slots[i];
            ++summary.reports;
            if (!r.clean()) {
                ++summary.anomalies;
                for (const auto& a : r.anomalies) {
                    ++summary.anomalies_by_check[a.check];
                    summary.first_offender.try_emplace(a.check, r.graph_id);
                }
                if (!keep_going) {
                    std::string msg = "anomaly on graph6 " + r.graph_id + ":";
                    for (const auto& a : r.anomalies) {
                        msg += " [" + a.check + ": " + a.detail + "]";
                    }
                    throw TheoremFalsification(msg);
                }
            }
            summary.eq16_equality_hits += r.eq16_equality ? 1 : 0;
            summary.eq416_equality_hits += r.eq416_equality.value_or(false) ? 1 : 0;
            const int gap = r.phi - r.lb_ceil_16;
            summary.min_gap = summary.min_gap ? std::min(*summary.min_gap, gap) : gap;
            summary.gap_total += gap;
            if (sink) {
                sink(r);
            }
        }
    }
    return summary;
}

SweepSummary run_sweep(const SweepSpec& spec, const ReportSink& sink, int workers, bool keep_going)
{
    const auto graphs = sweep_graphs(spec);
    const AnalyzeOptions options{spec.clique_limit, spec.chromatic_limit, spec.oracle_max_n};
    return run_reports(graphs, options, sink, workers, keep_going);
}

// output --------------------------------------------------------------------

namespace {

template <typename T>
std::string field(const std::optional<T>& v)
{
    if (!v) {
        return "";
    }
    if constexpr (std::is_same_v<T, bool>) {
        return *v ? "1" : "0";
    } else {
        return std::to_string(*v);
    }
}

std::string flag(bool v) { return v ? "1" : "0"; }

std::string join_sizes(const std::vector<int>& sizes, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i > 0) {
            out.push_back(sep);
        }
        out += std::to_string(sizes[i]);
    }
    return out;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string csv_header()
{
    return "graph_id,n,e,sum_d,sum_d2,phi,omega,chi,lb_ceil_15,lb_ceil_16,eq16_equality,eq14_ok,eq13_ok,"
           "eq212_ok,eq213_ok,eq416_ok,eq416_equality,cor41_all_ok,cor42_all_ok,witness_partition\n";
}

std::string csv_row(const BoundReport& r)
{
    std::ostringstream os;
    os << quoted(r.graph_id) << ',' << r.n << ',' << r.e << ',' << r.sum_d << ',' << r.sum_d2 << ',' << r.phi << ','
       << field(r.omega) << ',' << field(r.chi) << ',' << r.lb_ceil_15 << ',' << r.lb_ceil_16 << ','
       << flag(r.eq16_equality) << ',' << flag(r.eq14_ok) << ',' << field(r.eq13_ok) << ',' << flag(r.eq212_ok) << ','
       << flag(r.eq213_ok) << ',' << field(r.eq416_ok) << ',' << field(r.eq416_equality) << ','
       << flag(r.cor41_all_ok) << ',' << flag(r.cor42_all_ok) << ',' << join_sizes(r.witness_partition, ';') << '\n';
    return os.str();
}

std::string emit_csv(std::span<const BoundReport> reports)
{
    std::string out = csv_header();
    for (const auto& r : reports) {
        out += csv_row(r);
    }
    return out;
}

std::string describe(const BoundReport& r)
{
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("n/a"); };
    auto yn = [](const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "n/a"; };
    std::ostringstream os;
    os << "graph6            " << r.graph_id << '\n'
       << "n, e              " << r.n << ", " << r.e << '\n'
       << "sum d, sum d^2    " << r.sum_d << ", " << r.sum_d2 << '\n'
       << "phi               " << r.phi << "  (witness sizes " << join_sizes(r.witness_partition, ',') << ")\n"
       << "omega             " << opt(r.omega) << '\n'
       << "chi               " << opt(r.chi) << '\n'
       << "lower bounds      mean " << r.lb_ceil_15 << ", quadratic mean " << r.lb_ceil_16 << '\n'
       << "phi bound tight   " << (r.eq16_equality ? "yes" : "no") << '\n'
       << "edge bounds       phi " << (r.eq14_ok ? "ok" : "FAIL") << ", Turan " << yn(r.eq13_ok) << '\n'
       << "witness checks    degree-square sum " << (r.eq212_ok ? "ok" : "FAIL") << ", sigma bounds "
       << (r.eq213_ok ? "ok" : "FAIL") << '\n'
       << "clique bound      " << yn(r.eq416_ok) << " (tight: " << yn(r.eq416_equality) << ")\n"
       << "sequence checks   delta-set " << (r.cor41_all_ok ? "ok" : "FAIL") << ", degree-sum "
       << (r.cor42_all_ok ? "ok" : "FAIL") << '\n';
    for (const auto& s : r.skipped) {
        os << "skipped           " << s << '\n';
    }
    for (const auto& a : r.anomalies) {
        os << "ANOMALY           " << a.check << ": " << a.detail << '\n';
    }
    return os.str();
}

}  // namespace phibound
