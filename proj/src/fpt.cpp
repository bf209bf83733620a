#include "ecc/fpt.hpp"

#include "ecc/mce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ecc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t mfpt_branch_bound(std::size_t d) {
    return static_cast<std::uint64_t>(std::ceil(std::pow(3.0, static_cast<double>(d) / 3.0) - 1e-9));
}

// Structural snapshot used to verify that failed branches restore state
// bit-identically (cover, covered marks, and candidate sets).
struct Snapshot {
    std::vector<std::vector<VertexId>> cliques;
    std::vector<char> covered;
    std::vector<std::vector<std::size_t>> sets;

    static Snapshot take(const Graph& g, const CliqueCover& cover,
                         const CandidateCliqueSets* ccs) {
        Snapshot s;
        s.cliques.reserve(cover.size());
        for (const Clique& cl : cover.cliques()) s.cliques.push_back(cl.vertices);
        s.covered.resize(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) s.covered[e] = cover.edge_covered(e) ? 1 : 0;
        if (ccs) {
            s.sets.resize(g.vertex_count());
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                s.sets[v] = ccs->candidates_of(v);
                std::sort(s.sets[v].begin(), s.sets[v].end());
            }
        }
        return s;
    }

    bool operator==(const Snapshot& other) const = default;
};

// State shared by the two verbatim search trees: preseeded trivial cliques,
// covered-edge marks, and per-vertex counts of uncovered later edges that
// make the step-4/step-7 edge selection an amortized short scan.
struct SearchBase {
    const Graph& g;
    const DegeneracyView& dv;
    const SearchOptions& opts;
    CliqueCover cover;
    std::vector<std::uint32_t> uncovered_later; // per vertex: uncovered {x,y}, y ∈ N_d(x)
    SearchStats stats;
    std::size_t preseeded = 0;
    std::uint64_t tick = 0;

    SearchBase(const Graph& graph, const DegeneracyView& view, const SearchOptions& options)
        : g(graph), dv(view), opts(options), cover(graph) {}

    VertexId earlier_endpoint(EdgeId e) const {
        auto [u, v] = g.edge(e);
        return dv.precedes(u, v) ? u : v;
    }

    void preseed_trivial(CandidateCliqueSets* ccs) {
        for (EdgeId e : trivial_cliques(g)) {
            auto [x, y] = g.edge(e);
            std::size_t l = cover.start_clique(x, y);
            if (ccs) {
                ccs->push_clique();
                // A trivial edge has no common neighbor, so only its own
                // endpoints hold it as a candidate; no other clique can ever
                // absorb an edge into it.
                ccs->add(x, l);
                ccs->add(y, l);
            }
            ++preseeded;
        }
    }

    void init_uncovered_counts() {
        uncovered_later.assign(g.vertex_count(), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!cover.edge_covered(e)) ++uncovered_later[earlier_endpoint(e)];
    }

    void count_marks(const std::vector<EdgeId>& newly_covered) {
        for (EdgeId e : newly_covered) --uncovered_later[earlier_endpoint(e)];
    }

    void uncount_marks(const std::vector<EdgeId>& newly_covered) {
        for (EdgeId e : newly_covered) ++uncovered_later[earlier_endpoint(e)];
    }

    void heartbeat() {
        if ((++tick & 255) == 0 || opts.deadline.active()) opts.deadline.check();
    }

    // Selected edge: x at `pos`, y its earliest uncovered later neighbor.
    struct SelectedEdge {
        VertexId x;
        VertexId y;
        std::uint32_t pos;
    };

    VertexId first_uncovered_later(VertexId x) const {
        for (VertexId y : dv.later_neighbors[x])
            if (!cover.edge_covered(g.edge_index(x, y))) return y;
        throw std::logic_error("uncovered_later count out of sync");
    }

    // CFPT rule: x follows any other vertex with an uncovered later edge.
    SelectedEdge select_latest(std::uint32_t hint) const {
        for (std::uint32_t pos = hint + 1; pos-- > 0;) {
            VertexId x = dv.order[pos];
            if (uncovered_later[x] > 0) return {x, first_uncovered_later(x), pos};
        }
        throw std::logic_error("no uncovered edge although the cover is incomplete");
    }

    // MFPT rule: x precedes any other vertex with an uncovered later edge.
    SelectedEdge select_earliest(std::uint32_t hint) const {
        for (std::uint32_t pos = hint; pos < dv.order.size(); ++pos) {
            VertexId x = dv.order[pos];
            if (uncovered_later[x] > 0) return {x, first_uncovered_later(x), pos};
        }
        throw std::logic_error("no uncovered edge although the cover is incomplete");
    }

    void check_selection(const SelectedEdge& picked, bool latest) const {
        SelectedEdge naive = latest
                                 ? select_latest(static_cast<std::uint32_t>(dv.order.size()) - 1)
                                 : select_earliest(0);
        if (naive.x != picked.x || naive.y != picked.y)
            throw std::logic_error("incremental edge selection diverged from the naive scan");
    }

    void record_node(std::size_t depth, std::size_t branches, std::uint64_t branch_bound,
                     std::size_t depth_bound) {
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, depth);
        stats.max_branches = std::max(stats.max_branches, branches);
        ++stats.branch_histogram[branches];
        if (branches > branch_bound) ++stats.branch_bound_violations;
        if (depth > depth_bound) ++stats.depth_bound_violations;
    }

    bool want_snapshot() const {
        return opts.check_invariants && opts.snapshot_stride != 0 &&
               stats.nodes % opts.snapshot_stride == 0;
    }
};

// -------- CandidateCliqueFPT --------

struct CfptSearch : SearchBase {
    CandidateCliqueSets ccs;
    std::size_t root_budget = 0;

    CfptSearch(const Graph& graph, const DegeneracyView& view, const SearchOptions& options)
        : SearchBase(graph, view, options), ccs(graph.vertex_count()) {
        preseed_trivial(&ccs);
        init_uncovered_counts();
    }

    // W set plus the membership indicators; the absorb log keeps the latter.
    struct PrepareLog {
        std::vector<VertexId> moved;
    };

    PrepareLog prepare(std::size_t l, VertexId x, VertexId y) {
        PrepareLog log;
        for (VertexId z : ccs.holders_of(l)) {
            if (z == x || z == y) continue;
            if (!g.has_edge(z, x) || !g.has_edge(z, y)) log.moved.push_back(z);
        }
        for (VertexId z : log.moved) ccs.remove(z, l);
        return log;
    }

    void restore(std::size_t l, const PrepareLog& log) {
        for (VertexId z : log.moved) ccs.add(z, l);
    }

    void add_new_clique(VertexId x, VertexId y) {
        std::size_t l = cover.start_clique(x, y);
        ccs.push_clique();
        ccs.add(x, l);
        ccs.add(y, l);
        for (VertexId z : common_neighbors(g, x, y)) ccs.add(z, l);
        --uncovered_later[earlier_endpoint(g.edge_index(x, y))];
    }

    void remove_new_clique(VertexId x, VertexId y) {
        std::size_t l = cover.size() - 1;
        std::vector<VertexId> holders = ccs.holders_of(l);
        for (VertexId z : holders) ccs.remove(z, l);
        ccs.pop_clique();
        CliqueCover::CliqueLog log;
        log.newly_covered.push_back(g.edge_index(x, y));
        cover.pop_clique(log);
        ++uncovered_later[earlier_endpoint(g.edge_index(x, y))];
    }

    void check_clique_window(std::uint32_t pos) const {
        for (std::size_t l = preseeded; l < cover.size(); ++l)
            for (VertexId v : cover.clique(l).vertices)
                if (dv.position[v] < pos)
                    throw std::logic_error("CFPT invariant broken: clique reaches before u_i");
        if (!ccs.consistent())
            throw std::logic_error("candidate sets and reverse index diverged");
    }

    bool dfs(std::size_t budget, std::uint32_t hint, std::size_t depth) {
        heartbeat();
        if (cover.covers_all_edges()) return true;

        SelectedEdge sel = select_latest(hint);
        if (opts.check_invariants) {
            check_selection(sel, /*latest=*/true);
            check_clique_window(sel.pos);
        }

        std::vector<std::size_t> inter = ccs.intersect(sel.x, sel.y);
        std::size_t branches = inter.size() + (budget > 0 ? 1 : 0);
        record_node(depth, branches,
                    static_cast<std::uint64_t>(dv.degeneracy) * dv.degeneracy / 4 + 1,
                    dv.degeneracy * root_budget);
        stats.peak_candidate_mass = std::max(stats.peak_candidate_mass, ccs.peak_mass());

        std::optional<Snapshot> snap;
        if (want_snapshot()) snap = Snapshot::take(g, cover, &ccs);

        for (std::size_t l : inter) {
            PrepareLog plog = prepare(l, sel.x, sel.y);
            CliqueCover::AbsorbLog alog = cover.absorb_logged(l, sel.x, sel.y);
            count_marks(alog.newly_covered);
            if (dfs(budget, sel.pos, depth + 1)) return true;
            uncount_marks(alog.newly_covered);
            cover.undo_absorb(l, sel.x, sel.y, alog);
            restore(l, plog);
            if (snap && !(*snap == Snapshot::take(g, cover, &ccs)))
                throw std::logic_error("Restore left a different state than before the branch");
        }
        if (budget > 0) {
            add_new_clique(sel.x, sel.y);
            if (dfs(budget - 1, sel.pos, depth + 1)) return true;
            remove_new_clique(sel.x, sel.y);
            if (snap && !(*snap == Snapshot::take(g, cover, &ccs)))
                throw std::logic_error("RemoveNewClique left a different state");
        }
        return false;
    }
};

// -------- MaximalCliqueFPT --------

struct MfptSearch : SearchBase {
    std::size_t root_budget = 0;

    MfptSearch(const Graph& graph, const DegeneracyView& view, const SearchOptions& options)
        : SearchBase(graph, view, options) {
        preseed_trivial(nullptr);
        init_uncovered_counts();
    }

    void check_prefix_covered(std::uint32_t pos) const {
        for (std::uint32_t j = 0; j < pos; ++j)
            if (uncovered_later[dv.order[j]] != 0)
                throw std::logic_error("MFPT invariant broken: uncovered edge before u_i");
    }

    bool dfs(std::size_t budget, std::uint32_t hint, std::size_t depth) {
        heartbeat();
        if (cover.covers_all_edges()) return true;
        if (budget == 0) return false;

        SelectedEdge sel = select_earliest(hint);
        if (opts.check_invariants) {
            check_selection(sel, /*latest=*/false);
            check_prefix_covered(sel.pos);
        }

        InducedSubgraphSpec spec{sel.x, sel.y, later_common_neighbors(g, dv, sel.x, sel.y)};
        std::vector<std::vector<VertexId>> cliques = maximal_cliques_containing_edge(g, spec);
        record_node(depth, cliques.size(), mfpt_branch_bound(dv.degeneracy), root_budget);

        std::optional<Snapshot> snap;
        if (want_snapshot()) snap = Snapshot::take(g, cover, nullptr);

        for (auto& r : cliques) {
            CliqueCover::CliqueLog log = cover.add_clique_logged(r);
            count_marks(log.newly_covered);
            if (dfs(budget - 1, sel.pos, depth + 1)) return true;
            uncount_marks(log.newly_covered);
            cover.pop_clique(log);
            if (snap && !(*snap == Snapshot::take(g, cover, nullptr)))
                throw std::logic_error("MFPT rollback left a different state");
        }
        return false;
    }
};

} // namespace

std::string to_string(FptAlgo algo) {
    return algo == FptAlgo::Cfpt ? "cfpt" : "mfpt";
}

FptAlgo parse_fpt_algo(const std::string& s) {
    if (s == "cfpt") return FptAlgo::Cfpt;
    if (s == "mfpt") return FptAlgo::Mfpt;
    throw std::invalid_argument("unknown FPT algorithm: " + s);
}

double SearchStats::mean_branches() const {
    if (nodes == 0) return 0.0;
    long double total = 0;
    for (auto [branches, count] : branch_histogram)
        total += static_cast<long double>(branches) * count;
    return static_cast<double>(total / nodes);
}

void SearchStats::merge(const SearchStats& other) {
    nodes += other.nodes;
    max_depth = std::max(max_depth, other.max_depth);
    max_branches = std::max(max_branches, other.max_branches);
    for (auto [b, c] : other.branch_histogram) branch_histogram[b] += c;
    depth_bound_violations += other.depth_bound_violations;
    branch_bound_violations += other.branch_bound_violations;
    peak_candidate_mass = std::max(peak_candidate_mass, other.peak_candidate_mass);
    wall_ms += other.wall_ms;
}

std::string SearchStats::csv_header() {
    return "graph,algorithm,nodes,max_depth,max_branches,mean_branches,k_found,wall_ms";
}

std::string SearchStats::csv_row(const std::string& graph, const std::string& algorithm) const {
    std::ostringstream os;
    char buf[32];
    os << graph << ',' << algorithm << ',' << nodes << ',' << max_depth << ',' << max_branches
       << ',';
    std::snprintf(buf, sizeof buf, "%.3f", mean_branches());
    os << buf << ',' << k_found << ',';
    std::snprintf(buf, sizeof buf, "%.3f", wall_ms);
    os << buf;
    return os.str();
}

DecideResult cfpt_decide(const Graph& g, const DegeneracyView& dv, std::size_t k,
                         const SearchOptions& opts) {
    auto start = Clock::now();
    DecideResult result;
    if (g.edge_count() == 0) {
        result.status = DecideStatus::Found;
        result.cover = CliqueCover(g);
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }
    CfptSearch search(g, dv, opts);
    if (search.preseeded > k) {
        result.status = DecideStatus::None;
        result.stats = search.stats;
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }
    search.root_budget = k - search.preseeded;
    try {
        bool found = search.dfs(search.root_budget,
                                static_cast<std::uint32_t>(g.vertex_count()) - 1, 0);
        result.status = found ? DecideStatus::Found : DecideStatus::None;
        if (found) result.cover = std::move(search.cover);
    } catch (const Timeout&) {
        result.status = DecideStatus::Timeout;
    }
    result.stats = search.stats;
    result.stats.peak_candidate_mass = search.ccs.peak_mass();
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

DecideResult mfpt_decide(const Graph& g, const DegeneracyView& dv, std::size_t k,
                         const SearchOptions& opts) {
    auto start = Clock::now();
    DecideResult result;
    if (g.edge_count() == 0) {
        result.status = DecideStatus::Found;
        result.cover = CliqueCover(g);
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }
    MfptSearch search(g, dv, opts);
    if (search.preseeded > k) {
        result.status = DecideStatus::None;
        result.stats = search.stats;
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }
    search.root_budget = k - search.preseeded;
    try {
        bool found = search.dfs(search.root_budget, 0, 0);
        result.status = found ? DecideStatus::Found : DecideStatus::None;
        if (found) result.cover = std::move(search.cover);
    } catch (const Timeout&) {
        result.status = DecideStatus::Timeout;
    }
    result.stats = search.stats;
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

MinimumCoverResult minimum_cover(const Graph& g, FptAlgo algo, const SearchOptions& opts) {
    auto start = Clock::now();
    MinimumCoverResult result;
    if (g.edge_count() == 0) {
        result.status = DecideStatus::Found;
        result.cover = CliqueCover(g);
        result.stats.k_found = 0;
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }
    DegeneracyView dv = degeneracy_ordering(g);
    std::size_t k = std::max<std::size_t>(1, trivial_cliques(g).size());
    for (;; ++k) {
        DecideResult r = algo == FptAlgo::Cfpt ? cfpt_decide(g, dv, k, opts)
                                               : mfpt_decide(g, dv, k, opts);
        result.stats.merge(r.stats);
        if (r.status == DecideStatus::Timeout) {
            result.status = DecideStatus::Timeout;
            break;
        }
        if (r.status == DecideStatus::Found) {
            result.status = DecideStatus::Found;
            result.cover = std::move(r.cover);
            result.stats.k_found = k;
            break;
        }
    }
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

namespace {

// Assignment-minimum variant: CFPT tree with the success short-circuits
// removed; complete covers are compared by total vertex count.
struct AssignmentSearch : CfptSearch {
    using CfptSearch::CfptSearch;

    std::size_t best_weight = 0;
    bool have_best = false;
    std::vector<std::vector<VertexId>> best_cliques;

    void dfs(std::size_t budget, std::uint32_t hint, std::size_t depth) {
        heartbeat();
        if (cover.covers_all_edges()) {
            std::size_t w = cover_weight(cover);
            if (!have_best || w < best_weight) {
                have_best = true;
                best_weight = w;
                best_cliques.clear();
                for (const Clique& cl : cover.cliques()) best_cliques.push_back(cl.vertices);
            }
            return;
        }
        SelectedEdge sel = select_latest(hint);
        std::vector<std::size_t> inter = ccs.intersect(sel.x, sel.y);
        record_node(depth, inter.size() + (budget > 0 ? 1 : 0),
                    static_cast<std::uint64_t>(dv.degeneracy) * dv.degeneracy / 4 + 1,
                    dv.degeneracy * root_budget);

        for (std::size_t l : inter) {
            PrepareLog plog = prepare(l, sel.x, sel.y);
            CliqueCover::AbsorbLog alog = cover.absorb_logged(l, sel.x, sel.y);
            count_marks(alog.newly_covered);
            dfs(budget, sel.pos, depth + 1);
            uncount_marks(alog.newly_covered);
            cover.undo_absorb(l, sel.x, sel.y, alog);
            restore(l, plog);
        }
        if (budget > 0) {
            add_new_clique(sel.x, sel.y);
            dfs(budget - 1, sel.pos, depth + 1);
            remove_new_clique(sel.x, sel.y);
        }
    }
};

} // namespace

AssignmentResult assignment_minimum(const Graph& g, const DegeneracyView& dv,
                                    const SearchOptions& opts) {
    auto start = Clock::now();
    AssignmentResult result;
    if (g.edge_count() == 0) {
        result.status = DecideStatus::Found;
        result.cover = CliqueCover(g);
        result.weight = 0;
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }
    AssignmentSearch search(g, dv, opts);
    search.root_budget = g.edge_count() - search.preseeded;
    try {
        search.dfs(search.root_budget, static_cast<std::uint32_t>(g.vertex_count()) - 1, 0);
        CliqueCover best(g);
        for (auto& clique : search.best_cliques) best.add_clique(std::move(clique));
        result.status = DecideStatus::Found;
        result.weight = search.best_weight;
        result.cover = std::move(best);
    } catch (const Timeout&) {
        result.status = DecideStatus::Timeout;
    }
    result.stats = search.stats;
    result.stats.peak_candidate_mass = search.ccs.peak_mass();
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

} // namespace ecc
