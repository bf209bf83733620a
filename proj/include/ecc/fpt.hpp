#ifndef ECC_FPT_HPP
#define ECC_FPT_HPP

#include "ecc/cover.hpp"
#include "ecc/deadline.hpp"
#include "ecc/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ecc {

enum class DecideStatus { Found, None, Timeout };

enum class FptAlgo { Cfpt, Mfpt };

std::string to_string(FptAlgo algo);
FptAlgo parse_fpt_algo(const std::string& s);

// Search-tree instrumentation. Depth counts cover decisions on the path
// (root = 0); branches at a node are the alternatives it can try. The
// bound-violation counters compare against the structural guarantees
// (depth ≤ d·k and ⌊d²/4⌋+1 branches for CFPT, depth ≤ k and ⌈3^{d/3}⌉
// branches for MFPT) and stay zero on correct runs.
struct SearchStats {
    std::uint64_t nodes = 0;
    std::size_t max_depth = 0;
    std::size_t max_branches = 0;
    std::map<std::size_t, std::uint64_t> branch_histogram;
    std::uint64_t depth_bound_violations = 0;
    std::uint64_t branch_bound_violations = 0;
    std::size_t peak_candidate_mass = 0; // CFPT: peak Σ|S_x|
    std::size_t k_found = 0;
    double wall_ms = 0.0;

    double mean_branches() const;
    void merge(const SearchStats& other);

    static std::string csv_header();
    std::string csv_row(const std::string& graph, const std::string& algorithm) const;
};

struct SearchOptions {
    Deadline deadline{};
    // Turns on the debug machinery: the per-node structural invariants, the
    // naive-rescan check of edge selection, and sampled snapshot comparison
    // after failed branches. Intended for tests; throws std::logic_error on
    // any mismatch.
    bool check_invariants = false;
    std::uint32_t snapshot_stride = 64;
};

struct DecideResult {
    DecideStatus status = DecideStatus::None;
    std::optional<CliqueCover> cover;
    SearchStats stats;
};

// Candidate-clique-set search tree. Returns a cover with at most k cliques
// iff one exists. Branches over S_x ∩ S_y with Prepare/Restore undo logs,
// then over one new clique when budget remains. Trivial edges are emitted
// as their own cliques up front and k is reduced accordingly.
DecideResult cfpt_decide(const Graph& g, const DegeneracyView& dv, std::size_t k,
                         const SearchOptions& opts = {});

// Maximal-clique-enumeration search tree: one branch per maximal clique
// containing the selected edge within (N_d(x) ∩ N(y)) ∪ {x,y}.
DecideResult mfpt_decide(const Graph& g, const DegeneracyView& dv, std::size_t k,
                         const SearchOptions& opts = {});

struct MinimumCoverResult {
    DecideStatus status = DecideStatus::None; // Found or Timeout
    std::optional<CliqueCover> cover;
    SearchStats stats; // aggregated over all k iterations; k_found set on success
};

// Smallest k for which the decision solver succeeds, starting from
// max(1, number of trivial cliques).
MinimumCoverResult minimum_cover(const Graph& g, FptAlgo algo, const SearchOptions& opts = {});

struct AssignmentResult {
    DecideStatus status = DecideStatus::None;
    std::optional<CliqueCover> cover;
    std::size_t weight = 0;
    SearchStats stats;
};

// Exact assignment-minimum clique cover: the CFPT tree with budget m, no
// success short-circuits, every completed cover compared by total vertex
// count against the incumbent. First incumbent wins ties. Exhaustive;
// intended for small graphs.
AssignmentResult assignment_minimum(const Graph& g, const DegeneracyView& dv,
                                    const SearchOptions& opts = {});

} // namespace ecc

#endif // ECC_FPT_HPP
