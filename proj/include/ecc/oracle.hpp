#ifndef ECC_ORACLE_HPP
#define ECC_ORACLE_HPP

#include "ecc/cover.hpp"
#include "ecc/graph.hpp"

#include <cstddef>
#include <optional>

namespace ecc {

struct OracleResult {
    std::size_t min_size = 0;
    std::size_t min_weight = 0;
    std::optional<CliqueCover> witness;
};

// Exhaustive minimum clique cover size. Restricting to maximal cliques is
// sound here: any cover's cliques expand to maximal ones without changing
// the count. Rejects graphs above the cap.
OracleResult exact_minimum_size(const Graph& g, std::size_t limit_n = 12);

// Exhaustive minimum total vertex count. Enumerates ALL cliques of size >= 2,
// not just maximal ones, because shrinking a clique can lower the weight.
// Prunes with an admissible bound: every vertex touching an uncovered edge
// needs at least one more slot.
OracleResult exact_minimum_weight(const Graph& g, std::size_t limit_n = 9);

} // namespace ecc

#endif // ECC_ORACLE_HPP
