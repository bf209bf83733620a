#include "ecc/oracle.hpp"

#include "ecc/mce.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecc {

namespace {

struct SetCoverContext {
    const Graph& g;
    std::vector<std::vector<VertexId>> cliques;           // available cliques
    std::vector<std::vector<EdgeId>> clique_edges;        // edges inside each
    std::vector<std::vector<std::size_t>> edge_cliques;   // per edge: cliques containing it
    std::vector<std::uint32_t> cover_count;               // per edge
    std::size_t uncovered;

    explicit SetCoverContext(const Graph& graph) : g(graph) {
        cover_count.assign(g.edge_count(), 0);
        uncovered = g.edge_count();
    }

    void index_cliques() {
        clique_edges.resize(cliques.size());
        edge_cliques.assign(g.edge_count(), {});
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            const auto& vs = cliques[c];
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    EdgeId e = g.edge_index(vs[i], vs[j]);
                    clique_edges[c].push_back(e);
                    edge_cliques[e].push_back(c);
                }
        }
        // Biggest cliques first: the initial dive lands near the optimum and
        // the admissible bound then cuts most of the tree.
        for (auto& list : edge_cliques)
            std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
                return cliques[a].size() > cliques[b].size();
            });
    }

    void pick(std::size_t c) {
        for (EdgeId e : clique_edges[c])
            if (cover_count[e]++ == 0) --uncovered;
    }

    void unpick(std::size_t c) {
        for (EdgeId e : clique_edges[c])
            if (--cover_count[e] == 0) ++uncovered;
    }

    EdgeId first_uncovered() const {
        for (EdgeId e = 0; e < cover_count.size(); ++e)
            if (cover_count[e] == 0) return e;
        throw std::logic_error("no uncovered edge left");
    }
};

struct SizeSearch : SetCoverContext {
    using SetCoverContext::SetCoverContext;

    std::size_t best = 0;
    std::vector<std::size_t> chosen, best_chosen;

    void dfs() {
        if (uncovered == 0) {
            if (chosen.size() < best) {
                best = chosen.size();
                best_chosen = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best) return;
        EdgeId e = first_uncovered();
        for (std::size_t c : edge_cliques[e]) {
            pick(c);
            chosen.push_back(c);
            dfs();
            chosen.pop_back();
            unpick(c);
        }
    }
};

struct WeightSearch : SetCoverContext {
    using SetCoverContext::SetCoverContext;

    std::size_t best = 0;
    std::size_t weight_now = 0;
    std::vector<std::size_t> chosen, best_chosen;
    std::vector<std::uint32_t> uncovered_deg; // per vertex: incident uncovered edges

    void init_degrees() {
        uncovered_deg.assign(g.vertex_count(), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            ++uncovered_deg[u];
            ++uncovered_deg[v];
        }
    }

    std::size_t touched_vertices = 0; // vertices with >=1 uncovered incident edge

    void recount_touched() {
        touched_vertices = 0;
        for (auto d : uncovered_deg)
            if (d > 0) ++touched_vertices;
    }

    void pick_w(std::size_t c) {
        for (EdgeId e : clique_edges[c])
            if (cover_count[e]++ == 0) {
                --uncovered;
                auto [u, v] = g.edge(e);
                if (--uncovered_deg[u] == 0) --touched_vertices;
                if (--uncovered_deg[v] == 0) --touched_vertices;
            }
        weight_now += cliques[c].size();
    }

    void unpick_w(std::size_t c) {
        for (EdgeId e : clique_edges[c])
            if (--cover_count[e] == 0) {
                ++uncovered;
                auto [u, v] = g.edge(e);
                if (uncovered_deg[u]++ == 0) ++touched_vertices;
                if (uncovered_deg[v]++ == 0) ++touched_vertices;
            }
        weight_now -= cliques[c].size();
    }

    void dfs() {
        if (uncovered == 0) {
            if (weight_now < best) {
                best = weight_now;
                best_chosen = chosen;
            }
            return;
        }
        if (weight_now + touched_vertices >= best) return;
        EdgeId e = first_uncovered();
        for (std::size_t c : edge_cliques[e]) {
            pick_w(c);
            chosen.push_back(c);
            dfs();
            chosen.pop_back();
            unpick_w(c);
        }
    }
};

std::vector<std::vector<VertexId>> all_cliques_min2(const Graph& g) {
    // Grow cliques vertex by vertex in ascending order; n is capped, so the
    // subset explosion stays tame.
    std::vector<std::vector<VertexId>> result;
    std::vector<VertexId> current;
    auto extend = [&](auto&& self, VertexId from) -> void {
        for (VertexId v = from; v < g.vertex_count(); ++v) {
            bool ok = true;
            for (VertexId u : current)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            if (current.size() >= 2) result.push_back(current);
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return result;
}

CliqueCover witness_cover(const Graph& g, const std::vector<std::vector<VertexId>>& cliques,
                          const std::vector<std::size_t>& chosen) {
    CliqueCover cover(g);
    for (std::size_t c : chosen) cover.add_clique(cliques[c]);
    return cover;
}

} // namespace

OracleResult exact_minimum_size(const Graph& g, std::size_t limit_n) {
    if (g.vertex_count() > limit_n)
        throw std::invalid_argument("exact_minimum_size: graph has " +
                                    std::to_string(g.vertex_count()) +
                                    " vertices, cap is " + std::to_string(limit_n));
    OracleResult result;
    if (g.edge_count() == 0) {
        result.witness = CliqueCover(g);
        return result;
    }
    SizeSearch search(g);
    for (auto& c : all_maximal_cliques(g))
        if (c.size() >= 2) search.cliques.push_back(std::move(c));
    search.index_cliques();
    search.best = g.edge_count() + 1; // covering edge-by-edge always works
    search.dfs();
    result.min_size = search.best;
    result.witness = witness_cover(g, search.cliques, search.best_chosen);
    result.min_weight = cover_weight(*result.witness); // weight of this witness, not the optimum
    return result;
}

OracleResult exact_minimum_weight(const Graph& g, std::size_t limit_n) {
    if (g.vertex_count() > limit_n)
        throw std::invalid_argument("exact_minimum_weight: graph has " +
                                    std::to_string(g.vertex_count()) +
                                    " vertices, cap is " + std::to_string(limit_n));
    OracleResult result;
    if (g.edge_count() == 0) {
        result.witness = CliqueCover(g);
        return result;
    }
    WeightSearch search(g);
    search.cliques = all_cliques_min2(g);
    search.index_cliques();
    search.init_degrees();
    search.recount_touched();
    search.best = 2 * g.edge_count() + 1; // one 2-clique per edge always works
    search.dfs();
    result.min_weight = search.best;
    result.witness = witness_cover(g, search.cliques, search.best_chosen);
    result.min_size = search.best_chosen.size(); // size of this witness, not the optimum
    return result;
}

} // namespace ecc
