#include "ecc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ecc {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

Graph Graph::build(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs,
                   std::vector<Label> labels, AdjacencyMode mode) {
    Graph g;
    g.mode_ = mode;
    g.labels_ = std::move(labels);
    g.adjacency_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) g.label_to_id_.emplace(g.labels_[v], v);

    g.edges_.reserve(pairs.size());
    g.edge_ids_.reserve(pairs.size() * 2);
    for (const auto& [u, v] : pairs) {
        auto key = edge_key(u, v);
        if (g.edge_ids_.count(key)) continue;
        g.edge_ids_.emplace(key, static_cast<EdgeId>(g.edges_.size()));
        g.edges_.emplace_back(u, v);
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        g.max_degree_ = std::max(g.max_degree_, nbrs.size());
    }
    if (mode == AdjacencyMode::HashSet) {
        g.adj_sets_.resize(n);
        for (VertexId v = 0; v < n; ++v)
            g.adj_sets_[v].insert(g.adjacency_[v].begin(), g.adjacency_[v].end());
    }
    return g;
}

Graph Graph::from_edges(const std::vector<std::pair<Label, Label>>& edges, AdjacencyMode mode) {
    std::unordered_map<Label, VertexId> ids;
    std::vector<Label> labels;
    auto intern = [&](Label l) {
        auto [it, fresh] = ids.emplace(l, static_cast<VertexId>(labels.size()));
        if (fresh) labels.push_back(l);
        return it->second;
    };
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("self-loop edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") is not allowed");
        pairs.emplace_back(intern(a), intern(b));
    }
    return build(labels.size(), pairs, std::move(labels), mode);
}

Graph Graph::from_edges_dense(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                              AdjacencyMode mode) {
    std::vector<Label> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = v;
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("self-loop edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") is not allowed");
        if (a >= n || b >= n)
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") exceeds vertex count " + std::to_string(n));
    }
    return build(n, edges, std::move(labels), mode);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (mode_ == AdjacencyMode::HashSet) {
        const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adj_sets_[u] : adj_sets_[v];
        return a.count(adjacency_[u].size() <= adjacency_[v].size() ? v : u) > 0;
    }
    const auto& nbrs = adjacency_[degree(u) <= degree(v) ? u : v];
    VertexId probe = degree(u) <= degree(v) ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), probe);
}

EdgeId Graph::edge_index(VertexId u, VertexId v) const {
    auto it = edge_ids_.find(edge_key(u, v));
    if (it == edge_ids_.end())
        throw std::invalid_argument("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge");
    return it->second;
}

std::optional<EdgeId> Graph::try_edge_index(VertexId u, VertexId v) const {
    auto it = edge_ids_.find(edge_key(u, v));
    if (it == edge_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<VertexId> Graph::vertex_by_label(Label l) const {
    auto it = label_to_id_.find(l);
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
}

DegeneracyView degeneracy_ordering(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DegeneracyView dv;
    dv.order.reserve(n);
    dv.position.assign(n, 0);
    dv.later_neighbors.assign(n, {});
    if (n == 0) return dv;

    // Bucket queue indexed by current degree. Buckets are ordered sets so the
    // lowest id among minimum-degree vertices pops first.
    std::vector<std::size_t> deg(n);
    std::vector<std::set<VertexId>> buckets(g.max_degree() + 1);
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        buckets[deg[v]].insert(v);
    }
    std::vector<char> removed(n, 0);
    std::size_t min_deg = 0;

    for (std::size_t i = 0; i < n; ++i) {
        while (buckets[min_deg].empty()) ++min_deg;
        VertexId u = *buckets[min_deg].begin();
        buckets[min_deg].erase(buckets[min_deg].begin());
        removed[u] = 1;
        dv.position[u] = static_cast<std::uint32_t>(i);
        dv.order.push_back(u);
        dv.degeneracy = std::max(dv.degeneracy, min_deg);

        auto& later = dv.later_neighbors[u];
        for (VertexId w : g.neighbors(u)) {
            if (removed[w]) continue;
            later.push_back(w);
            buckets[deg[w]].erase(w);
            --deg[w];
            buckets[deg[w]].insert(w);
        }
        // A neighbor may have dropped one below the current minimum.
        if (min_deg > 0) --min_deg;
    }
    for (auto& later : dv.later_neighbors)
        std::sort(later.begin(), later.end(),
                  [&](VertexId a, VertexId b) { return dv.position[a] < dv.position[b]; });
    return dv;
}

Graph gnp_generate(std::uint32_t n, double p, std::uint64_t seed, AdjacencyMode mode) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            // 53-bit uniform in [0,1); fully determined by the mt19937_64 stream.
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges_dense(n, edges, mode);
}

std::vector<EdgeId> trivial_cliques(const Graph& g) {
    std::vector<EdgeId> result;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edge(e);
        const auto& smaller = g.degree(x) <= g.degree(y) ? g.neighbors(x) : g.neighbors(y);
        VertexId other = g.degree(x) <= g.degree(y) ? y : x;
        bool shared = false;
        for (VertexId z : smaller) {
            if (g.has_edge(z, other)) {
                shared = true;
                break;
            }
        }
        if (!shared) result.push_back(e);
    }
    return result;
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId x, VertexId y) {
    std::vector<VertexId> result;
    const auto& smaller = g.degree(x) <= g.degree(y) ? g.neighbors(x) : g.neighbors(y);
    VertexId other = g.degree(x) <= g.degree(y) ? y : x;
    for (VertexId z : smaller)
        if (g.has_edge(z, other)) result.push_back(z);
    return result;
}

std::vector<VertexId> later_common_neighbors(const Graph& g, const DegeneracyView& dv,
                                             VertexId x, VertexId y) {
    std::vector<VertexId> result;
    for (VertexId z : dv.later_neighbors[x])
        if (g.has_edge(z, y)) result.push_back(z);
    return result;
}

Graph read_edge_list(std::istream& in, AdjacencyMode mode) {
    std::vector<std::pair<Label, Label>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        Label u, v;
        if (!(ls >> u >> v))
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected two vertex ids, got '" + line + "'");
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": trailing content '" + extra + "'");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(edges, mode);
}

Graph read_edge_list_file(const std::string& path, AdjacencyMode mode) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in, mode);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

} // namespace ecc
