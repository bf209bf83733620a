#ifndef ECC_GRAPH_HPP
#define ECC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ecc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Label = std::uint64_t;

// Per-vertex neighbor membership. HashSet gives O(1) expected lookups;
// SortedList trades that for O(log deg) and lower memory.
enum class AdjacencyMode { HashSet, SortedList };

// Immutable undirected simple graph. Vertex ids are dense 0-based integers;
// the original input labels are kept in a remap table for output.
class Graph {
public:
    Graph() = default;

    // Builds a graph from labeled pairs. Distinct labels are remapped to
    // dense ids in order of first appearance; duplicate pairs collapse to
    // one edge. Throws std::invalid_argument on a self-loop, naming the pair.
    static Graph from_edges(const std::vector<std::pair<Label, Label>>& edges,
                            AdjacencyMode mode = AdjacencyMode::HashSet);

    // Same, but with a fixed vertex count and ids used directly as labels.
    // Ids >= n are rejected. Vertices touching no pair stay isolated.
    static Graph from_edges_dense(std::size_t n,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges,
                                  AdjacencyMode mode = AdjacencyMode::HashSet);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Neighbors sorted by ascending id.
    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    std::size_t max_degree() const { return max_degree_; }

    bool has_edge(VertexId u, VertexId v) const;

    // Canonical edge list in ingestion order; pair orientation as first seen.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    // Dense edge index of {u,v}; the edge must exist.
    EdgeId edge_index(VertexId u, VertexId v) const;
    std::optional<EdgeId> try_edge_index(VertexId u, VertexId v) const;
    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }

    Label label(VertexId v) const { return labels_[v]; }
    std::optional<VertexId> vertex_by_label(Label l) const;

private:
    static Graph build(std::size_t n,
                       const std::vector<std::pair<VertexId, VertexId>>& pairs,
                       std::vector<Label> labels, AdjacencyMode mode);

    std::vector<std::vector<VertexId>> adjacency_;          // sorted
    std::vector<std::unordered_set<VertexId>> adj_sets_;    // HashSet mode only
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::unordered_map<std::uint64_t, EdgeId> edge_ids_;
    std::vector<Label> labels_;
    std::unordered_map<Label, VertexId> label_to_id_;
    std::size_t max_degree_ = 0;
    AdjacencyMode mode_ = AdjacencyMode::HashSet;
};

// Degeneracy ordering produced by repeated minimum-degree peeling.
// order[i] is the i-th removed vertex u_{i+1}; later_neighbors[v] is
// N_d(v) = N(v) restricted to vertices after v, sorted by position.
struct DegeneracyView {
    std::vector<VertexId> order;
    std::vector<std::uint32_t> position;
    std::size_t degeneracy = 0;
    std::vector<std::vector<VertexId>> later_neighbors;

    bool precedes(VertexId a, VertexId b) const { return position[a] < position[b]; }
};

// Minimum-degree peeling with a bucket queue; among minimum-degree vertices
// the lowest id is removed first, so the ordering is reproducible.
DegeneracyView degeneracy_ordering(const Graph& g);

// G(n,p): each unordered pair joins independently with probability p.
// Identical (n, p, seed) yields a bit-identical edge set on any platform
// (mt19937_64 stream, 53-bit uniform draw per pair).
Graph gnp_generate(std::uint32_t n, double p, std::uint64_t seed,
                   AdjacencyMode mode = AdjacencyMode::HashSet);

// Edges whose end vertices share no common neighbor. Any clique cover must
// cover each of them with the edge itself.
std::vector<EdgeId> trivial_cliques(const Graph& g);

// Common neighborhood N(x) ∩ N(y), ascending ids.
std::vector<VertexId> common_neighbors(const Graph& g, VertexId x, VertexId y);

// N_d(x) ∩ N(y) relative to a degeneracy view, sorted by position.
std::vector<VertexId> later_common_neighbors(const Graph& g, const DegeneracyView& dv,
                                             VertexId x, VertexId y);

// Edge-list text: one `u v` pair per line, `#` comments, duplicates tolerated.
Graph read_edge_list(std::istream& in, AdjacencyMode mode = AdjacencyMode::HashSet);
Graph read_edge_list_file(const std::string& path,
                          AdjacencyMode mode = AdjacencyMode::HashSet);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace ecc

#endif // ECC_GRAPH_HPP
