#ifndef ECC_EXPERIMENT_HPP
#define ECC_EXPERIMENT_HPP

#include "ecc/fpt.hpp"
#include "ecc/graph.hpp"
#include "ecc/greedy.hpp"

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ecc {

// One roster entry: an algorithm name plus the policies the greedy solvers
// honor. Names: basic, ccsg, ccsd, cfpt, mfpt, am, oracle.
struct AlgoSpec {
    std::string name;
    EdgeOrder order = EdgeOrder::DegreeAscending;
    CliqueSelect select = CliqueSelect::largest();
};

struct GnpEnsemble {
    std::uint32_t n = 0;
    double p = 0.0;
    std::size_t count = 0;
    std::uint64_t base_seed = 0; // instance i uses base_seed + i
};

// Fully determines a reproducible run: same spec, same CSV modulo wall times.
struct ExperimentSpec {
    std::optional<GnpEnsemble> gnp;
    std::vector<std::string> files;
    std::vector<AlgoSpec> roster;
    std::optional<std::chrono::milliseconds> time_limit;
    std::string baseline;         // defaults to the first roster entry
    std::size_t threads = 0;      // 0 = hardware concurrency
    std::size_t oracle_limit = 12;
};

struct InstanceRun {
    std::string graph_name;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::string policy;
    std::string status; // "ok", "TIMEOUT", or "error: ..."
    RunStats run;
    SearchStats search;
    bool has_search = false;

    bool ok() const { return status == "ok"; }
};

struct SummaryRow {
    std::string algorithm; // algo, or "a/b" for pair metrics
    std::string metric;
    double value = 0.0;
};

struct EnsembleReport {
    std::vector<InstanceRun> rows; // (instance, roster) order
    std::vector<SummaryRow> summary;

    void write_csv(std::ostream& out) const;
    static std::string csv_header();
};

// Runs the roster over the generated or loaded instances in a worker pool
// (instances are independent; each run is single-threaded) and derives the
// summary metrics: completion rates, mean runtimes, geometric-mean runtime
// ratios per algorithm pair, mean search-tree nodes, mean cover sizes,
// relative reduction and size ratios vs. the baseline (trivial cliques
// excluded), and the cover-size agreement rate.
EnsembleReport run_ensemble(const ExperimentSpec& spec);

// Runs one algorithm on one graph under a deadline; never throws for
// timeouts, those come back as status "TIMEOUT".
InstanceRun run_algorithm(const Graph& g, const AlgoSpec& algo, const std::string& graph_name,
                          std::uint64_t seed, std::optional<std::chrono::milliseconds> time_limit,
                          std::size_t oracle_limit = 12);

// er_<n>_<p*1000 zero padded>[_s<seed>] naming for generated instances.
std::string gnp_name(std::uint32_t n, double p);
std::string gnp_instance_name(std::uint32_t n, double p, std::uint64_t seed);

} // namespace ecc

#endif // ECC_EXPERIMENT_HPP
