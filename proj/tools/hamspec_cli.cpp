// Command-line surface: graph6 / edge-list codecs wired to the spectra,
// oracle, condition and harness layers. Exit codes: 0 clean, 1 anomalies or
// failed claims, 2 input/config errors.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamspec/codec.hpp"
#include "hamspec/conditions.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph.hpp"
#include "hamspec/harness.hpp"
#include "hamspec/oracle.hpp"
#include "hamspec/spectra.hpp"

namespace {

using namespace hamspec;

std::string fmt6(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

std::string fmt_evidence(double v) {
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        std::ostringstream os;
        os << static_cast<long long>(v);
        return os.str();
    }
    return fmt6(v);
}

std::string fmt_residual(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

// Graph sources shared by the per-graph verbs: graph6 lines from stdin or a
// file, or one edge-list file.
std::vector<Graph> read_graphs(const std::string& in_path, const std::string& edge_list_path) {
    std::vector<Graph> graphs;
    if (!edge_list_path.empty()) {
        std::ifstream f(edge_list_path);
        if (!f) throw std::invalid_argument("cannot open " + edge_list_path);
        std::stringstream text;
        text << f.rdbuf();
        graphs.push_back(from_edge_list(text.str()));
        return graphs;
    }
    std::ifstream file;
    if (!in_path.empty()) {
        file.open(in_path);
        if (!file) throw std::invalid_argument("cannot open " + in_path);
    }
    std::istream& in = in_path.empty() ? std::cin : file;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        graphs.push_back(from_graph6(line));
    }
    if (graphs.empty()) throw std::invalid_argument("no graphs on input");
    return graphs;
}

int cmd_spectra(const std::string& in_path, const std::string& edge_list_path) {
    for (const Graph& g : read_graphs(in_path, edge_list_path)) {
        SpectralResult rho = spectral_radius(g);
        SpectralResult q = signless_laplacian_radius(g);
        std::cout << "n=" << g.n << " m=" << g.edge_count() << " rho=" << fmt6(rho.value)
                  << " rho_residual=" << fmt_residual(rho.residual) << " q=" << fmt6(q.value)
                  << " q_residual=" << fmt_residual(q.residual) << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& in_path, const std::string& edge_list_path, double budget) {
    int worst = 0;
    for (const Graph& g : read_graphs(in_path, edge_list_path)) {
        auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(budget));
        try {
            HamiltonVerdict v = is_hamilton_connected(g, false, deadline);
            if (v.hamilton_connected) {
                std::cout << "hamilton-connected (n=" << g.n << " m=" << g.edge_count() << ")\n";
            } else {
                std::cout << "not hamilton-connected (no spanning path between "
                          << v.failing_pair->first << " and " << v.failing_pair->second << ")\n";
            }
        } catch (const oracle_timeout&) {
            std::cout << "oracle timeout after " << fmt6(budget) << "s\n";
            worst = 1;
        }
    }
    return worst;
}

int cmd_check(const std::string& in_path, const std::string& edge_list_path) {
    for (const Graph& g : read_graphs(in_path, edge_list_path)) {
        std::cout << "n=" << g.n << " m=" << g.edge_count() << " delta=" << g.min_degree()
                  << '\n';
        for (const Verdict& v : evaluate_all(g)) {
            std::ostringstream details;
            if (!v.exception_id.empty()) details << "exception=" << v.exception_id << ' ';
            for (const auto& [key, value] : v.evidence)
                if (key != "n" && key != "m") details << key << '=' << fmt_evidence(value) << ' ';
            if (!v.note.empty()) details << "(" << v.note << ")";
            std::cout << "  " << std::left << std::setw(12) << v.condition_id << std::setw(18)
                      << outcome_name(v.outcome) << details.str() << '\n';
        }
    }
    return 0;
}

int cmd_family(const std::vector<int>& s_args, const std::vector<int>& t_args,
               const std::vector<std::string>& variant_args, int np1_order,
               const std::vector<std::string>& sporadic_args,
               const std::vector<std::string>& deleted_args, bool dedup, long limit) {
    std::vector<Graph> out;
    if (!s_args.empty()) out.push_back(s_graph(s_args[0], s_args[1]));
    if (!t_args.empty()) out.push_back(t_graph(t_args[0], t_args[1]));
    if (!variant_args.empty()) {
        auto which = variant_by_name(variant_args[0]);
        if (!which) throw std::invalid_argument("unknown variant '" + variant_args[0] + "'");
        out.push_back(named_variant(*which, std::stoi(variant_args[1])));
    }
    if (!deleted_args.empty()) {
        char family = deleted_args[0].size() == 1 ? deleted_args[0][0] : '?';
        DeletedFamily spec{family, std::stoi(deleted_args[1]), std::stoi(deleted_args[2]),
                           std::stoi(deleted_args[3])};
        long emitted = 0;
        enumerate_deleted(spec, dedup, [&](const Graph& g) {
            out.push_back(g);
            return limit <= 0 || ++emitted < limit;
        });
    }
    if (np1_order > 0)
        for (const NamedGraph& ng : np1_graphs(np1_order)) out.push_back(ng.g);
    if (!sporadic_args.empty()) {
        const std::string& name = sporadic_args[0];
        std::optional<int> n;
        if (sporadic_args.size() > 1) n = std::stoi(sporadic_args[1]);
        bool found = false;
        for (Sporadic which : {Sporadic::S11_5, Sporadic::S13_6, Sporadic::K7_K2_K16,
                               Sporadic::Kn1_ee}) {
            if (sporadic_name(which) == name) {
                out.push_back(sporadic_exception(which, n));
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown sporadic '" + name + "'");
    }
    if (out.empty())
        throw std::invalid_argument("family needs at least one of --s/--t/--variant/--deleted/"
                                    "--np1/--sporadic");
    for (const Graph& g : out) std::cout << to_graph6(g) << '\n';
    return 0;
}

int cmd_verify(const std::string& config_path, const std::string& in_path,
               const std::string& jsonl_path, const std::string& summary_path) {
    std::ifstream config_file(config_path);
    if (!config_file) throw std::invalid_argument("cannot open " + config_path);
    CampaignConfig cfg = parse_campaign_config(config_file);

    std::ofstream jsonl_file;
    if (!jsonl_path.empty()) {
        jsonl_file.open(jsonl_path);
        if (!jsonl_file) throw std::invalid_argument("cannot open " + jsonl_path);
    }
    JsonlSink jsonl(jsonl_path.empty() ? std::cout : jsonl_file);
    SummarySink summary;
    MultiSink sink({&jsonl, &summary});

    RunStats stats;
    if (cfg.mode == "families") {
        stats = run_families(cfg, sink);
    } else if (cfg.mode == "random") {
        stats = run_random(cfg, sink);
    } else {
        std::ifstream corpus_file;
        if (!in_path.empty()) {
            corpus_file.open(in_path);
            if (!corpus_file) throw std::invalid_argument("cannot open " + in_path);
        }
        stats = run_ingest(in_path.empty() ? std::cin : corpus_file, cfg, sink);
    }

    if (!summary_path.empty()) {
        std::ofstream f(summary_path);
        if (!f) throw std::invalid_argument("cannot open " + summary_path);
        summary.write_csv(f);
    }
    for (const std::string& msg : stats.messages) std::cerr << msg << '\n';
    for (const std::string& msg : summary.samples()) std::cerr << "anomaly: " << msg << '\n';
    std::cerr << "records=" << stats.records << " anomalies=" << stats.anomalies
              << " parse_errors=" << stats.parse_errors << '\n';
    return stats.anomalies > 0 ? 1 : 0;
}

int cmd_reproduce(const std::string& out_path) {
    std::vector<ClaimRow> rows = reproduce_paper_numbers();
    long failures = 0;
    for (const ClaimRow& row : rows)
        if (!row.pass) ++failures;
    if (out_path.empty()) {
        write_claims_csv(rows, std::cout);
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open " + out_path);
        write_claims_csv(rows, f);
    }
    std::cerr << "claims=" << rows.size() << " failures=" << failures << '\n';
    return failures > 0 ? 1 : 0;
}

int cmd_convert(const std::string& to, const std::string& in_path) {
    std::ifstream file;
    if (!in_path.empty()) {
        file.open(in_path);
        if (!file) throw std::invalid_argument("cannot open " + in_path);
    }
    std::istream& in = in_path.empty() ? std::cin : file;
    if (to == "graph6") {
        std::stringstream text;
        text << in.rdbuf();
        std::cout << to_graph6(from_edge_list(text.str())) << '\n';
    } else {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::cout << to_edge_list(from_graph6(line));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral and edge-count Hamilton-connectedness toolkit"};
    app.require_subcommand(1);

    std::string in_path, edge_list_path;
    double budget = 10.0;

    auto* spectra = app.add_subcommand("spectra", "print rho and q with residuals");
    spectra->add_option("--in", in_path, "graph6 file (default stdin)");
    spectra->add_option("--edge-list", edge_list_path, "edge-list file for a single graph");

    auto* oracle = app.add_subcommand("oracle", "exact Hamilton-connectedness decision");
    oracle->add_option("--in", in_path, "graph6 file (default stdin)");
    oracle->add_option("--edge-list", edge_list_path, "edge-list file for a single graph");
    oracle->add_option("--budget", budget, "wall-clock seconds per graph");

    auto* check = app.add_subcommand("check", "evaluate every condition, print the verdicts");
    check->add_option("--in", in_path, "graph6 file (default stdin)");
    check->add_option("--edge-list", edge_list_path, "edge-list file for a single graph");

    auto* family = app.add_subcommand("family", "emit exception-family graphs as graph6");
    std::vector<int> s_args, t_args;
    std::vector<std::string> variant_args, sporadic_args, deleted_args;
    int np1_order = 0;
    bool dedup = false;
    long limit = 0;
    family->add_option("--s", s_args, "s_graph: N K")->expected(2);
    family->add_option("--t", t_args, "t_graph: N K")->expected(2);
    family->add_option("--variant", variant_args, "one-edge variant: NAME N")->expected(2);
    family->add_option("--deleted", deleted_args, "deletion class: S|T N K T")->expected(4);
    family->add_flag("--dedup", dedup, "one representative per isomorphism class");
    family->add_option("--limit", limit, "stop after this many graphs (0 = all)");
    family->add_option("--np1", np1_order, "every fixed exception of the order-N list");
    family->add_option("--sporadic", sporadic_args, "sporadic exception: NAME [N]")
        ->expected(1, 2);

    auto* verify = app.add_subcommand("verify", "run a harness campaign from a config file");
    std::string config_path, jsonl_path, summary_path;
    verify->add_option("--config", config_path, "key=value campaign config")->required();
    verify->add_option("--in", in_path, "graph6 corpus for ingest mode (default stdin)");
    verify->add_option("--jsonl", jsonl_path, "trial records file (default stdout)");
    verify->add_option("--summary", summary_path, "per-condition CSV summary file");

    auto* reproduce = app.add_subcommand("reproduce", "recompute the displayed numeric claims");
    std::string out_path;
    reproduce->add_option("--out", out_path, "claims CSV file (default stdout)");

    auto* convert = app.add_subcommand("convert", "translate between graph formats");
    std::string to;
    convert->add_option("--to", to, "target format")
        ->required()
        ->check(CLI::IsMember({"graph6", "edge-list"}));
    convert->add_option("--in", in_path, "input file (default stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spectra->parsed()) return cmd_spectra(in_path, edge_list_path);
        if (oracle->parsed()) return cmd_oracle(in_path, edge_list_path, budget);
        if (check->parsed()) return cmd_check(in_path, edge_list_path);
        if (family->parsed())
            return cmd_family(s_args, t_args, variant_args, np1_order, sporadic_args,
                              deleted_args, dedup, limit);
        if (verify->parsed()) return cmd_verify(config_path, in_path, jsonl_path, summary_path);
        if (reproduce->parsed()) return cmd_reproduce(out_path);
        if (convert->parsed()) return cmd_convert(to, in_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
