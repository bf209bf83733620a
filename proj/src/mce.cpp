#include "ecc/mce.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ecc {

namespace {

// Bron-Kerbosch with the classic worst-case-optimal pivot: a vertex of
// P ∪ X maximizing neighbors inside P, ties to the lowest id.
void bron_kerbosch(const Graph& g, std::vector<VertexId>& current, std::vector<VertexId> p,
                   std::vector<VertexId> x, std::vector<std::vector<VertexId>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(current);
        return;
    }
    VertexId pivot = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    auto consider = [&](VertexId u) {
        std::size_t cnt = 0;
        for (VertexId v : p)
            if (g.has_edge(u, v)) ++cnt;
        if (best == std::numeric_limits<std::size_t>::max() || cnt > best ||
            (cnt == best && u < pivot)) {
            best = cnt;
            pivot = u;
        }
    };
    for (VertexId u : p) consider(u);
    for (VertexId u : x) consider(u);

    std::vector<VertexId> ext;
    for (VertexId v : p)
        if (!g.has_edge(pivot, v)) ext.push_back(v);
    std::sort(ext.begin(), ext.end());

    for (VertexId v : ext) {
        std::vector<VertexId> np, nx;
        for (VertexId u : p)
            if (g.has_edge(u, v)) np.push_back(u);
        for (VertexId u : x)
            if (g.has_edge(u, v)) nx.push_back(u);
        current.push_back(v);
        bron_kerbosch(g, current, std::move(np), std::move(nx), out);
        current.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace

std::uint64_t moon_moser_bound(std::size_t s) {
    std::size_t e = (s + 2) / 3;
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (bound > std::numeric_limits<std::uint64_t>::max() / 3)
            return std::numeric_limits<std::uint64_t>::max();
        bound *= 3;
    }
    return bound;
}

std::vector<std::vector<VertexId>> maximal_cliques_containing_edge(
    const Graph& g, const InducedSubgraphSpec& spec) {
    if (!g.has_edge(spec.x, spec.y))
        throw std::invalid_argument("anchor pair (" + std::to_string(g.label(spec.x)) + "," +
                                    std::to_string(g.label(spec.y)) + ") is not an edge");
    for (VertexId c : spec.candidates)
        if (!g.has_edge(c, spec.x) || !g.has_edge(c, spec.y))
            throw std::invalid_argument("candidate " + std::to_string(g.label(c)) +
                                        " is not adjacent to both anchor endpoints");

    // All candidates are adjacent to x and y, so the enumeration runs on the
    // candidate set alone with {x,y} pre-selected; an empty extension means
    // the edge itself is maximal.
    std::vector<VertexId> p = spec.candidates;
    std::sort(p.begin(), p.end());
    std::vector<std::vector<VertexId>> extensions;
    std::vector<VertexId> scratch;
    bron_kerbosch(g, scratch, std::move(p), {}, extensions);

    std::vector<std::vector<VertexId>> cliques;
    cliques.reserve(extensions.size());
    for (auto& ext : extensions) {
        ext.push_back(spec.x);
        ext.push_back(spec.y);
        std::sort(ext.begin(), ext.end());
        cliques.push_back(std::move(ext));
    }
    std::sort(cliques.begin(), cliques.end());

    if (cliques.empty() || cliques.size() > moon_moser_bound(spec.candidates.size()))
        throw std::logic_error("maximal clique count violates the Moon-Moser bound");
    return cliques;
}

void visit_maximal_cliques_containing_edge(
    const Graph& g, const InducedSubgraphSpec& spec,
    const std::function<bool(const std::vector<VertexId>&)>& visit) {
    // The Moon-Moser bound keeps the materialized list small; sorting it is
    // what makes the delivery order deterministic.
    for (const auto& clique : maximal_cliques_containing_edge(g, spec))
        if (!visit(clique)) return;
}

std::vector<std::vector<VertexId>> all_maximal_cliques(const Graph& g) {
    std::vector<VertexId> p(g.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> scratch;
    bron_kerbosch(g, scratch, std::move(p), {}, out);
    for (auto& clique : out) std::sort(clique.begin(), clique.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ecc
