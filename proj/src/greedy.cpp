#include "ecc/greedy.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ecc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t select_clique(const std::vector<std::size_t>& inter, const CliqueCover& cover,
                          const CliqueSelect& sel, std::mt19937_64& rng) {
    switch (sel.kind) {
        case CliqueSelect::Kind::Earliest:
            return inter.front();
        case CliqueSelect::Kind::Random:
            return inter[rng() % inter.size()];
        case CliqueSelect::Kind::Smallest: {
            std::size_t best = inter.front();
            for (std::size_t l : inter)
                if (cover.clique(l).size() < cover.clique(best).size()) best = l;
            return best;
        }
        case CliqueSelect::Kind::Largest: {
            std::size_t best = inter.front();
            for (std::size_t l : inter)
                if (cover.clique(l).size() > cover.clique(best).size()) best = l;
            return best;
        }
    }
    return inter.front();
}

// From-scratch candidate set of x: indices l with x ∈ C_l, or C_l ⊆ N(x).
void candidate_set_of(const Graph& g, const CliqueCover& cover, VertexId x,
                      std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t l = 0; l < cover.size(); ++l) {
        const Clique& cl = cover.clique(l);
        if (cl.contains(x)) {
            out.push_back(l);
            continue;
        }
        if (cl.size() > g.degree(x)) continue;
        bool inside = true;
        for (VertexId v : cl.vertices) {
            if (!g.has_edge(x, v)) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(l);
    }
}

RunStats make_stats(const Graph& g, const DegeneracyView& dv, const char* algorithm,
                    EdgeOrder order, const CliqueSelect& sel) {
    RunStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.degeneracy = dv.degeneracy;
    s.max_degree = g.max_degree();
    s.algorithm = algorithm;
    s.policy = to_string(order) + "/" + to_string(sel.kind);
    s.seed = sel.seed;
    return s;
}

void finish_stats(const Graph& g, const CliqueCover& cover, RunStats& s,
                  Clock::time_point start) {
    s.cover_size = cover.size();
    s.cover_size_nontrivial = cover.size() - trivial_clique_count(g, cover);
    s.weight = cover_weight(cover);
    s.wall_ms = elapsed_ms(start);
}

} // namespace

std::string to_string(EdgeOrder order) {
    switch (order) {
        case EdgeOrder::DegreeAscending: return "degree-ascending";
        case EdgeOrder::DegeneracyOrder: return "degeneracy";
        case EdgeOrder::InputOrder: return "input";
    }
    return "?";
}

std::string to_string(CliqueSelect::Kind kind) {
    switch (kind) {
        case CliqueSelect::Kind::Smallest: return "smallest";
        case CliqueSelect::Kind::Largest: return "largest";
        case CliqueSelect::Kind::Earliest: return "earliest";
        case CliqueSelect::Kind::Random: return "random";
    }
    return "?";
}

EdgeOrder parse_edge_order(const std::string& s) {
    if (s == "degree-ascending" || s == "degree") return EdgeOrder::DegreeAscending;
    if (s == "degeneracy") return EdgeOrder::DegeneracyOrder;
    if (s == "input") return EdgeOrder::InputOrder;
    throw std::invalid_argument("unknown edge order: " + s);
}

CliqueSelect::Kind parse_clique_select(const std::string& s) {
    if (s == "smallest") return CliqueSelect::Kind::Smallest;
    if (s == "largest") return CliqueSelect::Kind::Largest;
    if (s == "earliest") return CliqueSelect::Kind::Earliest;
    if (s == "random") return CliqueSelect::Kind::Random;
    throw std::invalid_argument("unknown clique selection: " + s);
}

std::string RunStats::csv_header() {
    return "graph,n,m,d,max_degree,algorithm,policy,cover_size,cover_size_nontrivial,"
           "weight,ccs_max,ccs_tsi,wall_ms,seed";
}

std::string RunStats::csv_row() const {
    std::ostringstream os;
    os << graph_name << ',' << n << ',' << m << ',' << degeneracy << ',' << max_degree << ','
       << algorithm << ',' << policy << ',' << cover_size << ',' << cover_size_nontrivial << ','
       << weight << ',' << ccs_max << ',' << ccs_tsi << ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", wall_ms);
    os << buf << ',' << seed;
    return os.str();
}

std::vector<std::pair<VertexId, VertexId>> edge_sequence(const Graph& g, EdgeOrder order,
                                                         const DegeneracyView* dv) {
    std::vector<std::pair<VertexId, VertexId>> seq;
    seq.reserve(g.edge_count());
    switch (order) {
        case EdgeOrder::DegreeAscending: {
            std::vector<VertexId> verts(g.vertex_count());
            std::iota(verts.begin(), verts.end(), 0);
            std::stable_sort(verts.begin(), verts.end(), [&](VertexId a, VertexId b) {
                return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
            });
            std::vector<std::uint32_t> rank(g.vertex_count());
            for (std::uint32_t i = 0; i < verts.size(); ++i) rank[verts[i]] = i;
            // Every edge is emitted at its earlier-ranked endpoint; by the
            // time the later endpoint's turn comes the edge is covered.
            for (VertexId v : verts)
                for (VertexId u : g.neighbors(v))
                    if (rank[u] > rank[v]) seq.emplace_back(v, u);
            break;
        }
        case EdgeOrder::DegeneracyOrder: {
            if (!dv) throw std::invalid_argument("degeneracy edge order needs a DegeneracyView");
            for (VertexId x : dv->order)
                for (VertexId y : dv->later_neighbors[x]) seq.emplace_back(x, y);
            break;
        }
        case EdgeOrder::InputOrder:
            seq = g.edges();
            break;
    }
    return seq;
}

std::pair<CliqueCover, RunStats> basic_greedy(const Graph& g, EdgeOrder order, CliqueSelect select,
                                              const GreedyObserver& observer, Deadline deadline) {
    auto start = Clock::now();
    DegeneracyView dv = degeneracy_ordering(g);
    RunStats stats = make_stats(g, dv, "basic", order, select);

    deadline.check();
    CliqueCover cover(g);
    std::mt19937_64 rng(select.seed);
    std::vector<std::size_t> sx, sy, inter;
    std::size_t steps = 0;
    for (auto [x, y] : edge_sequence(g, order, &dv)) {
        if ((++steps & 1023) == 0) deadline.check();
        if (cover.edge_covered(g.edge_index(x, y))) continue;

        candidate_set_of(g, cover, x, sx);
        candidate_set_of(g, cover, y, sy);
        inter.clear();
        std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                              std::back_inserter(inter));
        stats.ccs_tsi += std::min(sx.size(), sy.size());
        stats.ccs_max = std::max(stats.ccs_max, sx.size() + sy.size());
        if (observer) observer(GreedyStep{x, y, sx, sy, inter, cover});

        if (!inter.empty())
            cover.absorb(select_clique(inter, cover, select, rng), x, y);
        else
            cover.start_clique(x, y);
    }
    stats.ccs_final = candidate_sets_from_scratch(g, cover).mass();
    finish_stats(g, cover, stats, start);
    return {std::move(cover), std::move(stats)};
}

namespace {

// Shared core of the improved framework; the degeneracy variant swaps the
// edge order, the step-6 scan vertex and list, and the step-11 propagation.
std::pair<CliqueCover, RunStats> improved_core(const Graph& g, EdgeOrder order,
                                               CliqueSelect select, bool degeneracy_variant,
                                               bool run_post_process, Deadline deadline,
                                               const char* algorithm) {
    auto start = Clock::now();
    DegeneracyView dv = degeneracy_ordering(g);
    RunStats stats = make_stats(g, dv, algorithm, order, select);

    deadline.check();
    CliqueCover cover(g);
    CandidateCliqueSets ccs(g.vertex_count());
    std::mt19937_64 rng(select.seed);
    std::size_t steps = 0;

    for (auto [x, y] : edge_sequence(g, order, &dv)) {
        if ((++steps & 1023) == 0) deadline.check();
        if (cover.edge_covered(g.edge_index(x, y))) continue;

        stats.ccs_tsi += std::min(ccs.set_size(x), ccs.set_size(y));
        std::vector<std::size_t> inter = ccs.intersect(x, y);
        if (!inter.empty()) {
            std::size_t l = select_clique(inter, cover, select, rng);
            const Clique& cl = cover.clique(l);
            VertexId w;
            const std::vector<VertexId>* scan;
            if (degeneracy_variant) {
                // Earliest member in the degeneracy ordering; its N_d list
                // reaches every vertex that may still hold l as a candidate.
                w = cl.vertices[0];
                for (VertexId v : cl.vertices)
                    if (dv.precedes(v, w)) w = v;
                scan = &dv.later_neighbors[w];
            } else {
                w = cl.vertices[0];
                scan = &g.neighbors(w);
            }
            for (VertexId z : *scan) {
                if (z == x || z == y) continue;
                if (!g.has_edge(z, x) || !g.has_edge(z, y)) ccs.remove_if_present(z, l);
            }
            cover.absorb(l, x, y);
        } else {
            std::size_t l = cover.start_clique(x, y);
            ccs.push_clique();
            ccs.add(x, l);
            ccs.add(y, l);
            if (degeneracy_variant) {
                for (VertexId z : later_common_neighbors(g, dv, x, y)) ccs.add(z, l);
            } else {
                for (VertexId z : common_neighbors(g, x, y)) ccs.add(z, l);
            }
        }
    }
    stats.ccs_max = ccs.peak_mass();
    stats.ccs_final = ccs.mass();
    if (run_post_process) {
        CliqueCover minimal = post_process(g, cover);
        finish_stats(g, minimal, stats, start);
        return {std::move(minimal), std::move(stats)};
    }
    finish_stats(g, cover, stats, start);
    return {std::move(cover), std::move(stats)};
}

} // namespace

std::pair<CliqueCover, RunStats> improved_greedy(const Graph& g, EdgeOrder order,
                                                 CliqueSelect select, bool post_process,
                                                 Deadline deadline) {
    return improved_core(g, order, select, /*degeneracy_variant=*/false, post_process, deadline,
                         "ccsg");
}

std::pair<CliqueCover, RunStats> degeneracy_greedy(const Graph& g, CliqueSelect select,
                                                   bool post_process, Deadline deadline) {
    return improved_core(g, EdgeOrder::DegeneracyOrder, select, /*degeneracy_variant=*/true,
                         post_process, deadline, "ccsd");
}

CliqueCover post_process(const Graph& g, const CliqueCover& c) {
    // AppCount per edge; also validates that the input is a full cover of
    // cliques (edge_index throws on any non-edge pair).
    std::vector<std::uint32_t> app_count(g.edge_count(), 0);
    for (const Clique& cl : c.cliques()) {
        const auto& vs = cl.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                ++app_count[g.edge_index(vs[i], vs[j])];
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (app_count[e] == 0)
            throw std::invalid_argument("post_process requires a full cover (edge " +
                                        std::to_string(g.label(g.edge(e).first)) + "," +
                                        std::to_string(g.label(g.edge(e).second)) +
                                        " is uncovered)");

    CliqueCover result(g);
    for (const Clique& cl : c.cliques()) {
        const auto& vs = cl.vertices;
        bool redundant = true;
        for (std::size_t i = 0; i < vs.size() && redundant; ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (app_count[g.edge_index(vs[i], vs[j])] <= 1) {
                    redundant = false;
                    break;
                }
        // Size <2 cliques cover nothing and are always redundant.
        if (redundant) {
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    --app_count[g.edge_index(vs[i], vs[j])];
        } else {
            result.add_clique(vs);
        }
    }
    return result;
}

} // namespace ecc
