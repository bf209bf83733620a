#ifndef ECC_MCE_HPP
#define ECC_MCE_HPP

#include "ecc/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace ecc {

// Anchor edge plus the vertex set the enumeration is restricted to. Every
// candidate must be adjacent to both anchor endpoints.
struct InducedSubgraphSpec {
    VertexId x;
    VertexId y;
    std::vector<VertexId> candidates;
};

// 3^⌈s/3⌉, saturating.
std::uint64_t moon_moser_bound(std::size_t s);

// Maximal cliques containing {x,y} in the subgraph induced on
// candidates ∪ {x,y}: pivoting branch and bound with x,y pre-selected.
// Each clique is an ascending vertex list; the list of cliques is sorted
// lexicographically. Throws when the anchor pair is not an edge or a
// candidate misses an anchor.
std::vector<std::vector<VertexId>> maximal_cliques_containing_edge(const Graph& g,
                                                                   const InducedSubgraphSpec& spec);

// Callback form: cliques are delivered in the same deterministic order and
// enumeration stops as soon as the callback returns false.
void visit_maximal_cliques_containing_edge(
    const Graph& g, const InducedSubgraphSpec& spec,
    const std::function<bool(const std::vector<VertexId>&)>& visit);

// Whole-graph maximal clique listing (debug subcommand only; isolated
// vertices show up as singleton cliques).
std::vector<std::vector<VertexId>> all_maximal_cliques(const Graph& g);

} // namespace ecc

#endif // ECC_MCE_HPP
