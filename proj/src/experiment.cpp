#include "ecc/experiment.hpp"

#include "ecc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ecc {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

RunStats shared_stats(const Graph& g, const std::string& name, const std::string& algorithm,
                      std::uint64_t seed) {
    RunStats s;
    s.graph_name = name;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    DegeneracyView dv = degeneracy_ordering(g);
    s.degeneracy = dv.degeneracy;
    s.max_degree = g.max_degree();
    s.algorithm = algorithm;
    s.policy = "-";
    s.seed = seed;
    return s;
}

void fill_cover_stats(const Graph& g, const CliqueCover& cover, RunStats& s) {
    s.cover_size = cover.size();
    s.cover_size_nontrivial = cover.size() - trivial_clique_count(g, cover);
    s.weight = cover_weight(cover);
}

} // namespace

std::string gnp_name(std::uint32_t n, double p) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "er_%u_%04d", n, static_cast<int>(std::lround(p * 1000)));
    return buf;
}

std::string gnp_instance_name(std::uint32_t n, double p, std::uint64_t seed) {
    return gnp_name(n, p) + "_s" + std::to_string(seed);
}

InstanceRun run_algorithm(const Graph& g, const AlgoSpec& algo, const std::string& graph_name,
                          std::uint64_t seed, std::optional<std::chrono::milliseconds> time_limit,
                          std::size_t oracle_limit) {
    InstanceRun row;
    row.graph_name = graph_name;
    row.seed = seed;
    row.algorithm = algo.name;
    row.policy = "-";
    row.status = "ok";

    Deadline deadline = time_limit ? Deadline::after(*time_limit) : Deadline{};
    SearchOptions fpt_opts;
    fpt_opts.deadline = deadline;

    try {
        deadline.check(); // a zero limit times out before any work
        if (algo.name == "basic" || algo.name == "ccsg" || algo.name == "ccsd") {
            std::pair<CliqueCover, RunStats> out = [&] {
                if (algo.name == "basic")
                    return basic_greedy(g, algo.order, algo.select, {}, deadline);
                if (algo.name == "ccsg")
                    return improved_greedy(g, algo.order, algo.select, true, deadline);
                return degeneracy_greedy(g, algo.select, false, deadline);
            }();
            row.run = std::move(out.second);
            row.run.graph_name = graph_name;
            row.policy = row.run.policy;
        } else if (algo.name == "cfpt" || algo.name == "mfpt") {
            MinimumCoverResult res =
                minimum_cover(g, algo.name == "cfpt" ? FptAlgo::Cfpt : FptAlgo::Mfpt, fpt_opts);
            row.search = res.stats;
            row.has_search = true;
            row.run = shared_stats(g, graph_name, algo.name, seed);
            if (res.status == DecideStatus::Timeout) {
                row.status = "TIMEOUT";
            } else {
                fill_cover_stats(g, *res.cover, row.run);
                row.run.ccs_max = res.stats.peak_candidate_mass;
                row.run.wall_ms = res.stats.wall_ms;
            }
        } else if (algo.name == "am") {
            DegeneracyView dv = degeneracy_ordering(g);
            AssignmentResult res = assignment_minimum(g, dv, fpt_opts);
            row.search = res.stats;
            row.has_search = true;
            row.run = shared_stats(g, graph_name, algo.name, seed);
            if (res.status == DecideStatus::Timeout) {
                row.status = "TIMEOUT";
            } else {
                fill_cover_stats(g, *res.cover, row.run);
                row.run.ccs_max = res.stats.peak_candidate_mass;
                row.run.wall_ms = res.stats.wall_ms;
            }
        } else if (algo.name == "oracle") {
            auto start = std::chrono::steady_clock::now();
            OracleResult res = exact_minimum_size(g, oracle_limit);
            row.run = shared_stats(g, graph_name, algo.name, seed);
            fill_cover_stats(g, *res.witness, row.run);
            row.run.wall_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        } else {
            throw std::invalid_argument("unknown algorithm: " + algo.name);
        }
    } catch (const Timeout&) {
        row.status = "TIMEOUT";
        if (row.run.graph_name.empty()) row.run = shared_stats(g, graph_name, algo.name, seed);
    }
    return row;
}

std::string EnsembleReport::csv_header() {
    return "kind,graph,n,m,d,max_degree,algorithm,policy,seed,status,cover_size,"
           "cover_size_nontrivial,weight,ccs_max,ccs_tsi,nodes,max_depth,max_branches,"
           "k_found,wall_ms,metric,value";
}

void EnsembleReport::write_csv(std::ostream& out) const {
    out << csv_header() << '\n';
    for (const InstanceRun& r : rows) {
        out << "result," << r.graph_name << ',' << r.run.n << ',' << r.run.m << ','
            << r.run.degeneracy << ',' << r.run.max_degree << ',' << r.algorithm << ','
            << r.policy << ',' << r.seed << ',' << r.status << ',';
        if (r.ok())
            out << r.run.cover_size << ',' << r.run.cover_size_nontrivial << ',' << r.run.weight
                << ',' << r.run.ccs_max << ',' << r.run.ccs_tsi << ',';
        else
            out << ",,,,,";
        if (r.has_search)
            out << r.search.nodes << ',' << r.search.max_depth << ',' << r.search.max_branches
                << ',' << r.search.k_found << ',';
        else
            out << ",,,,";
        out << fmt_double(r.run.wall_ms) << ",,\n";
    }
    for (const SummaryRow& s : summary)
        out << "summary,,,,,," << s.algorithm << ",,,,,,,,,,,,,," << s.metric << ','
            << fmt_double(s.value) << '\n';
}

namespace {

struct Accumulator {
    std::size_t total = 0;
    std::size_t completed = 0;
    double runtime_sum = 0.0;
    double cover_sum = 0.0;
    double nodes_sum = 0.0;
    std::size_t node_rows = 0;
};

} // namespace

EnsembleReport run_ensemble(const ExperimentSpec& spec) {
    if (spec.roster.empty()) throw std::invalid_argument("empty algorithm roster");
    const bool generated = spec.gnp.has_value();
    const std::size_t instance_count = generated ? spec.gnp->count : spec.files.size();
    if (instance_count == 0) throw std::invalid_argument("no instances to run");

    EnsembleReport report;
    report.rows.resize(instance_count * spec.roster.size());

    std::size_t workers = spec.threads ? spec.threads : std::thread::hardware_concurrency();
    workers = std::max<std::size_t>(1, std::min(workers, instance_count));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= instance_count) return;
            std::uint64_t seed = generated ? spec.gnp->base_seed + i : 0;
            Graph g;
            std::string name;
            try {
                if (generated) {
                    g = gnp_generate(spec.gnp->n, spec.gnp->p, seed);
                    name = gnp_instance_name(spec.gnp->n, spec.gnp->p, seed);
                } else {
                    g = read_edge_list_file(spec.files[i]);
                    auto slash = spec.files[i].find_last_of('/');
                    name = slash == std::string::npos ? spec.files[i]
                                                      : spec.files[i].substr(slash + 1);
                }
            } catch (const std::exception& ex) {
                for (std::size_t a = 0; a < spec.roster.size(); ++a) {
                    InstanceRun& row = report.rows[i * spec.roster.size() + a];
                    row.graph_name = spec.files.empty() ? "?" : spec.files[i];
                    row.algorithm = spec.roster[a].name;
                    row.status = std::string("error: ") + ex.what();
                }
                continue;
            }
            for (std::size_t a = 0; a < spec.roster.size(); ++a)
                report.rows[i * spec.roster.size() + a] = run_algorithm(
                    g, spec.roster[a], name, seed, spec.time_limit, spec.oracle_limit);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // ---- summary metrics ----
    const std::size_t algos = spec.roster.size();
    auto row_at = [&](std::size_t inst, std::size_t a) -> const InstanceRun& {
        return report.rows[inst * algos + a];
    };

    std::vector<Accumulator> acc(algos);
    for (std::size_t a = 0; a < algos; ++a) {
        for (std::size_t i = 0; i < instance_count; ++i) {
            const InstanceRun& r = row_at(i, a);
            ++acc[a].total;
            if (!r.ok()) continue;
            ++acc[a].completed;
            acc[a].runtime_sum += r.run.wall_ms;
            acc[a].cover_sum += static_cast<double>(r.run.cover_size);
            if (r.has_search) {
                acc[a].nodes_sum += static_cast<double>(r.search.nodes);
                ++acc[a].node_rows;
            }
        }
    }
    for (std::size_t a = 0; a < algos; ++a) {
        const std::string& name = spec.roster[a].name;
        report.summary.push_back(
            {name, "completion_rate", 100.0 * acc[a].completed / acc[a].total});
        if (acc[a].completed) {
            report.summary.push_back(
                {name, "mean_runtime_ms", acc[a].runtime_sum / acc[a].completed});
            report.summary.push_back(
                {name, "mean_cover_size", acc[a].cover_sum / acc[a].completed});
        }
        if (acc[a].node_rows)
            report.summary.push_back({name, "mean_search_nodes", acc[a].nodes_sum / acc[a].node_rows});
    }

    // Geometric-mean runtime ratios per pair, on instances both completed.
    for (std::size_t a = 0; a < algos; ++a) {
        for (std::size_t b = a + 1; b < algos; ++b) {
            double log_sum = 0.0;
            std::size_t count = 0;
            for (std::size_t i = 0; i < instance_count; ++i) {
                const InstanceRun& ra = row_at(i, a);
                const InstanceRun& rb = row_at(i, b);
                if (!ra.ok() || !rb.ok()) continue;
                double ta = std::max(ra.run.wall_ms, 1e-6);
                double tb = std::max(rb.run.wall_ms, 1e-6);
                log_sum += std::log(ta / tb);
                ++count;
            }
            if (count)
                report.summary.push_back({spec.roster[a].name + "/" + spec.roster[b].name,
                                          "geomean_runtime_ratio", std::exp(log_sum / count)});
        }
    }

    // Cover-quality metrics vs. the baseline, trivial cliques excluded.
    std::size_t base = 0;
    if (!spec.baseline.empty()) {
        for (std::size_t a = 0; a < algos; ++a)
            if (spec.roster[a].name == spec.baseline) base = a;
    }
    for (std::size_t b = 0; b < algos; ++b) {
        if (b == base) continue;
        double log_ratio_sum = 0.0, reduction_sum = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < instance_count; ++i) {
            const InstanceRun& ra = row_at(i, base);
            const InstanceRun& rb = row_at(i, b);
            if (!ra.ok() || !rb.ok()) continue;
            double a_size = static_cast<double>(ra.run.cover_size_nontrivial);
            double b_size = static_cast<double>(rb.run.cover_size_nontrivial);
            if (a_size == 0 || b_size == 0) continue;
            log_ratio_sum += std::log(b_size / a_size);
            reduction_sum += (1.0 - b_size / a_size) * 100.0;
            ++count;
        }
        if (count) {
            std::string pair = spec.roster[b].name + "/" + spec.roster[base].name;
            report.summary.push_back(
                {pair, "geomean_size_ratio", std::exp(log_ratio_sum / count)});
            report.summary.push_back({pair, "avg_relative_reduction", reduction_sum / count});
        }
    }

    // Agreement rate of cover sizes across all algorithms that completed.
    std::size_t agree = 0, comparable = 0;
    for (std::size_t i = 0; i < instance_count; ++i) {
        std::optional<std::size_t> size;
        bool all_equal = true;
        std::size_t ok_count = 0;
        for (std::size_t a = 0; a < algos; ++a) {
            const InstanceRun& r = row_at(i, a);
            if (!r.ok()) continue;
            ++ok_count;
            if (!size)
                size = r.run.cover_size;
            else if (*size != r.run.cover_size)
                all_equal = false;
        }
        if (ok_count >= 2) {
            ++comparable;
            if (all_equal) ++agree;
        }
    }
    if (comparable)
        report.summary.push_back(
            {"all", "size_agreement_rate", 100.0 * agree / comparable});

    return report;
}

} // namespace ecc
