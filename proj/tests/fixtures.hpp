#ifndef ECC_TESTS_FIXTURES_HPP
#define ECC_TESTS_FIXTURES_HPP

#include "ecc/graph.hpp"

#include <vector>

namespace ecc::tests {

// The six-vertex ten-edge example graph; labels match the figure (1..6).
inline Graph make_g6() {
    return Graph::from_edges({{1, 5}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
                              {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

inline Graph make_path(std::size_t k) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges_dense(k, edges);
}

inline Graph make_cycle(std::size_t k) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < k; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % k));
    return Graph::from_edges_dense(k, edges);
}

inline Graph make_complete(std::size_t k) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < k; ++i)
        for (VertexId j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return Graph::from_edges_dense(k, edges);
}

inline Graph make_grid(std::size_t rows, std::size_t cols) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    auto at = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
        }
    return Graph::from_edges_dense(rows * cols, edges);
}

inline VertexId vid(const Graph& g, Label label) { return *g.vertex_by_label(label); }

inline std::vector<VertexId> vids(const Graph& g, const std::vector<Label>& labels) {
    std::vector<VertexId> out;
    out.reserve(labels.size());
    for (Label l : labels) out.push_back(vid(g, l));
    return out;
}

} // namespace ecc::tests

#endif
