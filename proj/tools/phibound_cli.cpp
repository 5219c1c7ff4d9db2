// Command-line front end: analyze, generate, sweep, oracle-check.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 anomaly, 4 solver limit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "phibound/errors.hpp"
#include "phibound/harness.hpp"

namespace {

using namespace phibound;

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kAnomaly = 3, kLimit = 4 };

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& text, const std::string& format)
{
    if (format == "edgelist") {
        return parse_edge_list(text);
    }
    std::string_view line = text;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
        line.remove_suffix(1);
    }
    if (line.substr(0, 10) == ">>graph6<<") {
        line.remove_prefix(10);
    }
    return parse_graph6(line);
}

std::ostream& operator<<(std::ostream& os, const SweepSummary& s)
{
    const ExactRatio mean = s.mean_gap();
    os << "reports=" << s.reports << " anomalies=" << s.anomalies << " eq16_equality=" << s.eq16_equality_hits
              << " eq416_equality=" << s.eq416_equality_hits << " min_gap=" << (s.min_gap ? *s.min_gap : 0)
              << " mean_gap=" << mean << " (" << static_cast<double>(mean) << ")";
    for (const auto& [check, count] : s.anomalies_by_check) {
        os << "\n  " << check << ": " << count << " (first: " << s.first_offender.at(check) << ")";
    }
    return os;
}

int cmd_analyze(const std::string& path, const std::string& format, bool csv, const AnalyzeOptions& options)
{
    const Graph g = load_graph(read_input(path), format);
    const BoundReport r = analyze(g, options);
    if (csv) {
        std::cout << csv_header() << csv_row(r);
    } else {
        std::cout << describe(r);
    }
    if (!r.clean()) {
        return kAnomaly;
    }
    return r.skipped.empty() ? kOk : kLimit;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path, int workers, bool keep_going)
{
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot write " + out_path);
        }
        out = &file;
    }
    *out << csv_header();
    const SweepSummary summary =
        run_sweep(spec, [&](const BoundReport& r) { *out << csv_row(r); }, workers, keep_going);
    std::cerr << summary << '\n';
    return summary.anomalies == 0 ? kOk : kAnomaly;
}

int cmd_oracle_check(int max_n, std::uint64_t seed, int count)
{
    if (max_n < 1 || max_n > kDefaultOracleMaxOrder) {
        throw std::invalid_argument("--max-n must lie in 1.." + std::to_string(kDefaultOracleMaxOrder));
    }
    std::int64_t checked = 0;
    auto check = [&](const Graph& g) {
        const int greedy = phi_exact(g).phi;
        const int oracle = phi_oracle(g, max_n).phi;
        if (greedy != oracle) {
            throw OracleMismatch("phi_exact=" + std::to_string(greedy) + " oracle=" + std::to_string(oracle) +
                                 " for graph6 " + encode_graph6(g));
        }
        ++checked;
    };
    for (int n = 1; n <= std::min(max_n, kExhaustiveMaxOrder); ++n) {
        for (const Graph& g : exhaustive_graphs(n)) {
            check(g);
        }
    }
    std::mt19937_64 engine(seed);
    for (int n = kExhaustiveMaxOrder + 1; n <= max_n; ++n) {
        for (int i = 0; i < count; ++i) {
            check(gnp_graph(n, Probability{1, 2}, engine));
        }
    }
    std::cout << "oracle-check: " << checked << " graphs, 0 mismatches\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized chromatic number and degree-based lower bounds"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_options;
    std::string analyze_path;
    std::string analyze_format = "graph6";
    bool analyze_csv = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Print the bound report for one graph");
    analyze_cmd->add_option("input", analyze_path, "Input file, or - for stdin")->required();
    analyze_cmd->add_option("--format", analyze_format, "Input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    analyze_cmd->add_flag("--csv", analyze_csv, "Emit a CSV header and row instead of text");
    analyze_cmd->add_option("--oracle-max-n", analyze_options.oracle_max_n, "Cross-check phi by exhaustive search");
    analyze_cmd->add_option("--clique-limit", analyze_options.clique_limit, "Exact clique solver size limit");
    analyze_cmd->add_option("--chromatic-limit", analyze_options.chromatic_limit,
                            "Exact chromatic solver size limit");

    FamilySpec family;
    std::string family_name_arg;
    std::string prob_arg = "1/2";
    auto* generate_cmd = app.add_subcommand("generate", "Emit a graph from a named family as graph6");
    generate_cmd->add_option("--family", family_name_arg, "complete|empty|cycle|path|star|turan|gnp")->required();
    generate_cmd->add_option("--n", family.n, "Vertex count")->required();
    generate_cmd->add_option("--r", family.r, "Part count (turan)");
    generate_cmd->add_option("--p", prob_arg, "Edge probability num/den (gnp)");
    generate_cmd->add_option("--seed", family.seed, "Seed (gnp)");

    SweepSpec sweep;
    std::string mode = "exhaustive";
    std::string sweep_prob = "1/2";
    std::string out_path;
    std::optional<int> n_max;
    int workers = 1;
    bool keep_going = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "Analyze an exhaustive or seeded random ensemble, write CSV");
    sweep_cmd->add_option("--mode", mode, "exhaustive|random")->check(CLI::IsMember({"exhaustive", "random"}));
    sweep_cmd->add_option("--n", sweep.n_min, "Vertex count (or lower end of a range)")->required();
    sweep_cmd->add_option("--n-max", n_max, "Upper end of the vertex-count range");
    sweep_cmd->add_option("--count", sweep.count, "Samples per vertex count (random)");
    sweep_cmd->add_option("--p", sweep_prob, "Edge probability num/den (random)");
    sweep_cmd->add_option("--seed", sweep.seed, "Seed (random)");
    sweep_cmd->add_option("--oracle-max-n", sweep.oracle_max_n, "Cross-check phi by exhaustive search");
    sweep_cmd->add_option("--workers", workers, "Analysis threads; output is identical for any value");
    sweep_cmd->add_option("--out", out_path, "CSV path (default stdout)");
    sweep_cmd->add_flag("--keep-going", keep_going, "Tally anomalies instead of stopping at the first");

    int oracle_max_n = 8;
    std::uint64_t oracle_seed = 1;
    int oracle_count = 500;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare greedy phi with exhaustive search");
    oracle_cmd->add_option("--max-n", oracle_max_n, "Largest vertex count")->required();
    oracle_cmd->add_option("--seed", oracle_seed, "Seed for the random part (n > 5)");
    oracle_cmd->add_option("--count", oracle_count, "Random samples per vertex count above 5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze_cmd) {
            return cmd_analyze(analyze_path, analyze_format, analyze_csv, analyze_options);
        }
        if (*generate_cmd) {
            family.family = parse_family(family_name_arg);
            family.p = parse_probability(prob_arg);
            std::cout << encode_graph6(generate(family)) << '\n';
            return kOk;
        }
        if (*sweep_cmd) {
            sweep.mode = mode == "random" ? SweepMode::random : SweepMode::exhaustive;
            sweep.n_max = n_max.value_or(sweep.n_min);
            sweep.p = parse_probability(sweep_prob);
            return cmd_sweep(sweep, out_path, workers, keep_going);
        }
        if (*oracle_cmd) {
            return cmd_oracle_check(oracle_max_n, oracle_seed, oracle_count);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const TheoremFalsification& e) {
        std::cerr << "anomaly: " << e.what() << '\n';
        return kAnomaly;
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << '\n';
        return kAnomaly;
    } catch (const SolverLimitExceeded& e) {
        std::cerr << "solver limit: " << e.what() << '\n';
        return kLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
