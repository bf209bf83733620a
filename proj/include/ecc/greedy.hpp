#ifndef ECC_GREEDY_HPP
#define ECC_GREEDY_HPP

#include "ecc/cover.hpp"
#include "ecc/deadline.hpp"
#include "ecc/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ecc {

enum class EdgeOrder { DegreeAscending, DegeneracyOrder, InputOrder };

struct CliqueSelect {
    enum class Kind { Smallest, Largest, Earliest, Random };
    Kind kind = Kind::Largest;
    std::uint64_t seed = 0; // Random only; recorded in RunStats for replay

    static CliqueSelect smallest() { return {Kind::Smallest, 0}; }
    static CliqueSelect largest() { return {Kind::Largest, 0}; }
    static CliqueSelect earliest() { return {Kind::Earliest, 0}; }
    static CliqueSelect random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

std::string to_string(EdgeOrder order);
std::string to_string(CliqueSelect::Kind kind);
EdgeOrder parse_edge_order(const std::string& s);
CliqueSelect::Kind parse_clique_select(const std::string& s);

// One instrumentation record per solver run. CSV columns follow the harness
// contract: graph, n, m, d, max_degree, algorithm, policy, cover_size,
// cover_size_nontrivial, weight, ccs_max, ccs_tsi, wall_ms, seed.
struct RunStats {
    std::string graph_name;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t degeneracy = 0;
    std::size_t max_degree = 0;
    std::string algorithm;
    std::string policy;
    std::size_t cover_size = 0;
    std::size_t cover_size_nontrivial = 0;
    std::size_t weight = 0;
    std::size_t ccs_max = 0;   // peak Σ|S_x|
    std::size_t ccs_final = 0; // Σ|S_x| when the run ends (not in the CSV)
    std::uint64_t ccs_tsi = 0; // total intersection workload at the absorb test
    double wall_ms = 0.0;
    std::uint64_t seed = 0;

    static std::string csv_header();
    std::string csv_row() const;
};

// Edge processing sequence for a policy. Each edge appears once, oriented so
// that the first endpoint is the one whose turn emits it (for the degeneracy
// order that is the endpoint earlier in the ordering).
std::vector<std::pair<VertexId, VertexId>> edge_sequence(const Graph& g, EdgeOrder order,
                                                         const DegeneracyView* dv);

// Per-step view handed to a basic_greedy observer: the uncovered edge, its
// from-scratch candidate sets, their intersection, and the cover before the
// edge is absorbed or a new clique is started.
struct GreedyStep {
    VertexId x;
    VertexId y;
    const std::vector<std::size_t>& set_x;
    const std::vector<std::size_t>& set_y;
    const std::vector<std::size_t>& intersection;
    const CliqueCover& cover;
};
using GreedyObserver = std::function<void(const GreedyStep&)>;

// Basic greedy framework: candidate sets recomputed from scratch per edge.
// Output is a locally minimal cover.
std::pair<CliqueCover, RunStats> basic_greedy(const Graph& g, EdgeOrder order, CliqueSelect select,
                                              const GreedyObserver& observer = {},
                                              Deadline deadline = {});

// Improved greedy framework (CCSG): incremental candidate sets, identical
// cover to basic_greedy under identical policies, then post-processed into a
// minimal cover. Disable post_process to inspect the raw locally minimal one.
std::pair<CliqueCover, RunStats> improved_greedy(const Graph& g, EdgeOrder order,
                                                 CliqueSelect select, bool post_process = true,
                                                 Deadline deadline = {});

// Degeneracy-ordered variant (CCSD): edges processed along the degeneracy
// ordering, candidate propagation restricted to later neighbors, no
// post-processing by default. Every clique has size at most d+1.
std::pair<CliqueCover, RunStats> degeneracy_greedy(const Graph& g, CliqueSelect select,
                                                   bool post_process = false,
                                                   Deadline deadline = {});

// Kou-style post-process: drops every clique whose edges all appear in other
// cliques, scanning in creation order. Requires a full cover; the result is
// a minimal cover and a fixed point of this function.
CliqueCover post_process(const Graph& g, const CliqueCover& c);

} // namespace ecc

#endif // ECC_GREEDY_HPP
