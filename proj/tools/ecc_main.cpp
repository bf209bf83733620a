// ecc - edge clique cover toolkit
//
// Subcommands: cover, ensemble, gen, verify, stats, maximal-cliques,
// and a hidden `oracle` used to produce test fixtures.
// Exit codes: 0 success, 2 invalid input, 3 timeout, 4 failed verification.

#include "ecc/experiment.hpp"
#include "ecc/fpt.hpp"
#include "ecc/graph.hpp"
#include "ecc/greedy.hpp"
#include "ecc/mce.hpp"
#include "ecc/oracle.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitVerifyFailed = 4;

struct CoverArgs {
    std::string graph_file;
    std::string algo = "ccsg";
    std::string order = "degree-ascending";
    std::string select = "largest";
    std::uint64_t seed = 0;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> time_limit_ms;
    std::string out;
    std::string stats_out;
    std::string search_stats_out;
    bool post_process = false;
};

void append_csv_row(const std::string& path, const std::string& header, const std::string& row) {
    bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open stats file: " + path);
    if (fresh) out << header << '\n';
    out << row << '\n';
}

void emit_cover(const ecc::Graph& g, const ecc::CliqueCover& cover, const std::string& path) {
    if (path.empty()) {
        ecc::write_cover(std::cout, g, cover);
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        ecc::write_cover(out, g, cover);
    }
}

std::string graph_basename(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

int run_cover(const CoverArgs& args) {
    ecc::Graph g = ecc::read_edge_list_file(args.graph_file);
    std::string name = graph_basename(args.graph_file);
    ecc::Deadline deadline = args.time_limit_ms
                                 ? ecc::Deadline::after(std::chrono::milliseconds(*args.time_limit_ms))
                                 : ecc::Deadline{};

    ecc::CliqueSelect select{ecc::parse_clique_select(args.select), args.seed};
    ecc::EdgeOrder order = ecc::parse_edge_order(args.order);

    try {
        if (args.algo == "basic" || args.algo == "ccsg" || args.algo == "ccsd") {
            auto [cover, stats] = [&] {
                if (args.algo == "basic")
                    return ecc::basic_greedy(g, order, select, {}, deadline);
                if (args.algo == "ccsg")
                    return ecc::improved_greedy(g, order, select, /*post_process=*/true, deadline);
                return ecc::degeneracy_greedy(g, select, args.post_process, deadline);
            }();
            stats.graph_name = name;
            emit_cover(g, cover, args.out);
            if (!args.stats_out.empty())
                append_csv_row(args.stats_out, ecc::RunStats::csv_header(), stats.csv_row());
            return kExitOk;
        }

        if (args.algo == "cfpt" || args.algo == "mfpt") {
            ecc::FptAlgo algo = ecc::parse_fpt_algo(args.algo);
            ecc::SearchOptions opts;
            opts.deadline = deadline;
            ecc::SearchStats search;
            std::optional<ecc::CliqueCover> cover;
            ecc::DecideStatus status;
            if (args.k) {
                ecc::DegeneracyView dv = ecc::degeneracy_ordering(g);
                auto res = algo == ecc::FptAlgo::Cfpt ? ecc::cfpt_decide(g, dv, *args.k, opts)
                                                      : ecc::mfpt_decide(g, dv, *args.k, opts);
                status = res.status;
                search = res.stats;
                search.k_found = status == ecc::DecideStatus::Found ? *args.k : 0;
                cover = std::move(res.cover);
            } else {
                auto res = ecc::minimum_cover(g, algo, opts);
                status = res.status;
                search = res.stats;
                cover = std::move(res.cover);
            }
            if (!args.search_stats_out.empty())
                append_csv_row(args.search_stats_out, ecc::SearchStats::csv_header(),
                               search.csv_row(name, args.algo));
            if (status == ecc::DecideStatus::Timeout) {
                std::cerr << "TIMEOUT\n";
                return kExitTimeout;
            }
            if (status == ecc::DecideStatus::None) {
                std::cout << "NONE\n";
                return kExitOk;
            }
            emit_cover(g, *cover, args.out);
            if (!args.stats_out.empty()) {
                ecc::DegeneracyView dv = ecc::degeneracy_ordering(g);
                ecc::RunStats rs;
                rs.graph_name = name;
                rs.n = g.vertex_count();
                rs.m = g.edge_count();
                rs.degeneracy = dv.degeneracy;
                rs.max_degree = g.max_degree();
                rs.algorithm = args.algo;
                rs.policy = "-";
                rs.cover_size = cover->size();
                rs.cover_size_nontrivial = cover->size() - ecc::trivial_clique_count(g, *cover);
                rs.weight = ecc::cover_weight(*cover);
                rs.ccs_max = search.peak_candidate_mass;
                rs.wall_ms = search.wall_ms;
                rs.seed = args.seed;
                append_csv_row(args.stats_out, ecc::RunStats::csv_header(), rs.csv_row());
            }
            return kExitOk;
        }

        if (args.algo == "am") {
            ecc::DegeneracyView dv = ecc::degeneracy_ordering(g);
            ecc::SearchOptions opts;
            opts.deadline = deadline;
            auto res = ecc::assignment_minimum(g, dv, opts);
            if (res.status == ecc::DecideStatus::Timeout) {
                std::cerr << "TIMEOUT\n";
                return kExitTimeout;
            }
            emit_cover(g, *res.cover, args.out);
            if (!args.search_stats_out.empty())
                append_csv_row(args.search_stats_out, ecc::SearchStats::csv_header(),
                               res.stats.csv_row(name, "am"));
            return kExitOk;
        }
    } catch (const ecc::Timeout&) {
        std::cerr << "TIMEOUT\n";
        return kExitTimeout;
    }
    throw std::invalid_argument("unknown algorithm: " + args.algo);
}

std::vector<ecc::AlgoSpec> parse_roster(const std::string& roster, ecc::EdgeOrder order,
                                        ecc::CliqueSelect select) {
    std::vector<ecc::AlgoSpec> specs;
    std::stringstream ss(roster);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        specs.push_back({item, order, select});
    }
    if (specs.empty()) throw std::invalid_argument("empty roster");
    return specs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge clique cover solvers, validators, and benchmark harness"};
    app.require_subcommand(1);

    // ---- cover ----
    CoverArgs cover_args;
    auto* cover = app.add_subcommand("cover", "run one solver on an edge-list file");
    cover->add_option("graph", cover_args.graph_file, "edge list file")->required();
    cover->add_option("--algo", cover_args.algo, "basic|ccsg|ccsd|cfpt|mfpt|am");
    cover->add_option("--order", cover_args.order, "degree-ascending|degeneracy|input");
    cover->add_option("--select", cover_args.select, "smallest|largest|earliest|random");
    cover->add_option("--seed", cover_args.seed, "seed for random clique selection");
    cover->add_option("--k", cover_args.k, "decision mode: ask for a cover with at most k cliques");
    cover->add_option("--time-limit-ms", cover_args.time_limit_ms, "wall-clock limit");
    cover->add_option("--out", cover_args.out, "cover output file (default stdout)");
    cover->add_option("--stats-out", cover_args.stats_out, "append a RunStats CSV row");
    cover->add_option("--search-stats-out", cover_args.search_stats_out,
                      "append a SearchStats CSV row (FPT solvers)");
    cover->add_flag("--post-process", cover_args.post_process,
                    "apply post-processing to ccsd output");

    // ---- ensemble ----
    struct {
        std::uint32_t n = 0;
        double p = 0.0;
        std::size_t count = 0;
        std::uint64_t base_seed = 1;
        std::vector<std::string> files;
        std::string roster = "ccsg,ccsd";
        std::string order = "degree-ascending";
        std::string select = "largest";
        std::uint64_t policy_seed = 0;
        std::optional<std::uint64_t> time_limit_ms;
        std::string baseline;
        std::size_t threads = 0;
        std::size_t oracle_limit = 12;
        std::string out;
    } ens;
    auto* ensemble = app.add_subcommand("ensemble", "run an algorithm roster over an ensemble");
    ensemble->add_option("--n", ens.n, "G(n,p) vertex count");
    ensemble->add_option("--p", ens.p, "G(n,p) edge probability");
    ensemble->add_option("--count", ens.count, "number of generated instances");
    ensemble->add_option("--base-seed", ens.base_seed, "seed of the first instance");
    ensemble->add_option("--files", ens.files, "edge list files instead of G(n,p)");
    ensemble->add_option("--roster", ens.roster, "comma separated algorithm list");
    ensemble->add_option("--order", ens.order, "edge order for greedy entries");
    ensemble->add_option("--select", ens.select, "clique selection for greedy entries");
    ensemble->add_option("--policy-seed", ens.policy_seed, "seed for random clique selection");
    ensemble->add_option("--time-limit-ms", ens.time_limit_ms, "per-run wall-clock limit");
    ensemble->add_option("--baseline", ens.baseline, "baseline algorithm for the size metrics");
    ensemble->add_option("--threads", ens.threads, "worker pool size (0 = hardware)");
    ensemble->add_option("--oracle-limit", ens.oracle_limit, "vertex cap for the oracle entry");
    ensemble->add_option("--out", ens.out, "CSV output file (default stdout)");

    // ---- gen ----
    struct {
        std::uint32_t n = 0;
        double p = 0.0;
        std::uint64_t seed = 1;
        std::string out;
    } gen;
    auto* gen_cmd = app.add_subcommand("gen", "emit a G(n,p) edge list");
    gen_cmd->add_option("--n", gen.n, "vertices")->required();
    gen_cmd->add_option("--p", gen.p, "edge probability")->required();
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    // ---- verify ----
    struct {
        std::string graph_file;
        std::string cover_file;
        bool minimal = false;
    } verify;
    auto* verify_cmd = app.add_subcommand("verify", "check a cover file against a graph");
    verify_cmd->add_option("graph", verify.graph_file)->required();
    verify_cmd->add_option("cover", verify.cover_file)->required();
    verify_cmd->add_flag("--minimal", verify.minimal,
                         "also run the local-minimality characterization checks");

    // ---- stats ----
    struct {
        std::string graph_file;
    } stats;
    auto* stats_cmd = app.add_subcommand("stats", "print n, m, d, max degree, trivial cliques");
    stats_cmd->add_option("graph", stats.graph_file)->required();

    // ---- maximal-cliques (debug) ----
    struct {
        std::string graph_file;
    } mc;
    auto* mc_cmd = app.add_subcommand("maximal-cliques", "list all maximal cliques (debug)");
    mc_cmd->add_option("graph", mc.graph_file)->required();

    // ---- oracle (hidden; test fixtures) ----
    struct {
        std::string graph_file;
        bool weight = false;
        std::size_t limit = 12;
    } oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force optimum on tiny graphs");
    oracle_cmd->add_option("graph", oracle.graph_file)->required();
    oracle_cmd->add_flag("--weight", oracle.weight, "assignment-minimum weight instead of size");
    oracle_cmd->add_option("--limit-n", oracle.limit, "vertex cap");
    oracle_cmd->group(""); // hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (cover->parsed()) return run_cover(cover_args);

        if (ensemble->parsed()) {
            ecc::ExperimentSpec spec;
            if (!ens.files.empty()) {
                spec.files = ens.files;
            } else {
                if (ens.n == 0 || ens.count == 0)
                    throw std::invalid_argument("ensemble needs --files or --n/--p/--count");
                spec.gnp = ecc::GnpEnsemble{ens.n, ens.p, ens.count, ens.base_seed};
            }
            spec.roster = parse_roster(ens.roster, ecc::parse_edge_order(ens.order),
                                       {ecc::parse_clique_select(ens.select), ens.policy_seed});
            if (ens.time_limit_ms)
                spec.time_limit = std::chrono::milliseconds(*ens.time_limit_ms);
            spec.baseline = ens.baseline;
            spec.threads = ens.threads;
            spec.oracle_limit = ens.oracle_limit;
            ecc::EnsembleReport report = ecc::run_ensemble(spec);
            if (ens.out.empty()) {
                report.write_csv(std::cout);
            } else {
                std::ofstream out(ens.out);
                if (!out) throw std::runtime_error("cannot open output file: " + ens.out);
                report.write_csv(out);
            }
            return kExitOk;
        }

        if (gen_cmd->parsed()) {
            ecc::Graph g = ecc::gnp_generate(gen.n, gen.p, gen.seed);
            std::ostringstream header;
            header << "# gnp n=" << gen.n << " p=" << gen.p << " seed=" << gen.seed << '\n';
            if (gen.out.empty()) {
                std::cout << header.str();
                ecc::write_edge_list(std::cout, g);
            } else {
                std::ofstream out(gen.out);
                if (!out) throw std::runtime_error("cannot open output file: " + gen.out);
                out << header.str();
                ecc::write_edge_list(out, g);
            }
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            ecc::Graph g = ecc::read_edge_list_file(verify.graph_file);
            ecc::CliqueCover c = ecc::read_cover_file(verify.cover_file, g);
            bool full;
            try {
                full = ecc::is_cover(g, c);
            } catch (const std::invalid_argument& ex) {
                std::cerr << "invalid cover: " << ex.what() << '\n';
                return kExitVerifyFailed;
            }
            if (!full) {
                std::cerr << "not a cover: some edge is uncovered\n";
                return kExitVerifyFailed;
            }
            std::cout << "valid cover: " << c.size() << " cliques, weight "
                      << ecc::cover_weight(c) << '\n';
            if (verify.minimal) {
                auto report = ecc::validate_locally_minimal_characterizations(g, c);
                std::cout << report.to_string() << '\n';
                if (!report.ok()) return kExitVerifyFailed;
            }
            return kExitOk;
        }

        if (stats_cmd->parsed()) {
            ecc::Graph g = ecc::read_edge_list_file(stats.graph_file);
            ecc::DegeneracyView dv = ecc::degeneracy_ordering(g);
            std::cout << "graph,n,m,d,max_degree,trivial_cliques\n"
                      << graph_basename(stats.graph_file) << ',' << g.vertex_count() << ','
                      << g.edge_count() << ',' << dv.degeneracy << ',' << g.max_degree() << ','
                      << ecc::trivial_cliques(g).size() << '\n';
            return kExitOk;
        }

        if (mc_cmd->parsed()) {
            ecc::Graph g = ecc::read_edge_list_file(mc.graph_file);
            for (const auto& clique : ecc::all_maximal_cliques(g)) {
                for (std::size_t i = 0; i < clique.size(); ++i)
                    std::cout << (i ? " " : "") << g.label(clique[i]);
                std::cout << '\n';
            }
            return kExitOk;
        }

        if (oracle_cmd->parsed()) {
            ecc::Graph g = ecc::read_edge_list_file(oracle.graph_file);
            ecc::OracleResult res = oracle.weight ? ecc::exact_minimum_weight(g, oracle.limit)
                                                  : ecc::exact_minimum_size(g, oracle.limit);
            std::cout << (oracle.weight ? "min_weight=" : "min_size=")
                      << (oracle.weight ? res.min_weight : res.min_size) << '\n';
            ecc::write_cover(std::cout, g, *res.witness);
            return kExitOk;
        }
    } catch (const ecc::Timeout&) {
        std::cerr << "TIMEOUT\n";
        return kExitTimeout;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitOk;
}
