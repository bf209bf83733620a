#ifndef ECC_COVER_HPP
#define ECC_COVER_HPP

#include "ecc/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace ecc {

// A clique keeps its vertices in insertion order: the creation-time first
// vertex doubles as the default scan vertex for candidate-set maintenance.
struct Clique {
    std::vector<VertexId> vertices;

    bool contains(VertexId v) const;
    std::size_t size() const { return vertices.size(); }
};

// Ordered list of cliques plus per-edge covered tracking. Mutations are the
// primitives the solvers need; none of them validates cliqueness, that is
// is_cover's job.
class CliqueCover {
public:
    explicit CliqueCover(const Graph& g);

    const Graph& graph() const { return *graph_; }
    std::size_t size() const { return cliques_.size(); }
    const Clique& clique(std::size_t l) const { return cliques_[l]; }
    const std::vector<Clique>& cliques() const { return cliques_; }

    bool edge_covered(EdgeId e) const { return covered_[e] != 0; }
    std::size_t covered_edge_count() const { return covered_count_; }
    bool covers_all_edges() const { return covered_count_ == graph_->edge_count(); }

    // Appends the 2-clique {x,y} and marks its edge. Returns the new index.
    std::size_t start_clique(VertexId x, VertexId y);

    // Inserts the missing endpoints of {x,y} into clique l and marks every
    // edge between {x,y} and the clique members, plus {x,y} itself.
    void absorb(std::size_t l, VertexId x, VertexId y);

    // Appends an arbitrary clique and marks all edges inside it.
    std::size_t add_clique(std::vector<VertexId> vertices);

    // Appends a vertex list without requiring its pairs to be edges; only
    // existing edges get marked. Ingestion path; is_cover rejects non-cliques.
    std::size_t add_clique_unchecked(std::vector<VertexId> vertices);

    // Logged variants for backtracking solvers. Undo restores the cover to
    // a state bit-identical to the one before the call.
    struct AbsorbLog {
        bool added_x = false;
        bool added_y = false;
        std::vector<EdgeId> newly_covered;
    };
    AbsorbLog absorb_logged(std::size_t l, VertexId x, VertexId y);
    void undo_absorb(std::size_t l, VertexId x, VertexId y, const AbsorbLog& log);

    struct CliqueLog {
        std::vector<EdgeId> newly_covered;
    };
    CliqueLog add_clique_logged(std::vector<VertexId> vertices);
    void pop_clique(const CliqueLog& log);

    // Marks e covered; returns true when the mark is new.
    bool mark_covered(EdgeId e);
    void unmark_covered(EdgeId e);

private:
    const Graph* graph_;
    std::vector<Clique> cliques_;
    std::vector<char> covered_;
    std::size_t covered_count_ = 0;
};

// Builds a cover from plain vertex lists (e.g. a parsed cover file) and
// marks the edges they contain. Throws if a clique names an unknown vertex.
CliqueCover cover_from_cliques(const Graph& g, const std::vector<std::vector<VertexId>>& cliques);

// True iff every edge of g lies inside some clique of c. Throws
// std::invalid_argument naming the offending pair when a clique contains
// a vertex pair that is not an edge.
bool is_cover(const Graph& g, const CliqueCover& c);

// Σ|C_l| over all cliques.
std::size_t cover_weight(const CliqueCover& c);

// Number of cliques that are exactly a trivial edge (the counts the paper's
// relative-reduction metric excludes).
std::size_t trivial_clique_count(const Graph& g, const CliqueCover& c);

// Candidate clique sets S_x (Definition 3.4/3.5) with the reverse index
// R_l = {z | l ∈ S_z}. Both sides are kept mirrored on every mutation.
class CandidateCliqueSets {
public:
    explicit CandidateCliqueSets(std::size_t n_vertices);

    std::size_t clique_count() const { return holders_.size(); }
    void push_clique();
    void pop_clique(); // requires the last R_l to be empty

    bool contains(VertexId z, std::size_t l) const;
    void add(VertexId z, std::size_t l);
    void remove(VertexId z, std::size_t l);
    bool remove_if_present(VertexId z, std::size_t l);

    const std::vector<std::size_t>& candidates_of(VertexId x) const { return sets_[x]; }
    const std::vector<VertexId>& holders_of(std::size_t l) const { return holders_[l]; }

    std::size_t set_size(VertexId x) const { return sets_[x].size(); }

    // Sorted S_x ∩ S_y, probing the larger side.
    std::vector<std::size_t> intersect(VertexId x, VertexId y) const;

    // Σ|S_x| now / its peak over the lifetime of this object.
    std::size_t mass() const { return mass_; }
    std::size_t peak_mass() const { return peak_mass_; }

    bool consistent() const; // S/R mirror check, test use

private:
    // Unordered value sets with O(1) add/remove via position maps.
    std::vector<std::vector<std::size_t>> sets_;   // S_x: clique indices
    std::vector<std::unordered_map<std::size_t, std::uint32_t>> set_pos_;
    std::vector<std::vector<VertexId>> holders_;   // R_l: vertex ids
    std::vector<std::unordered_map<VertexId, std::uint32_t>> holder_pos_;
    std::size_t mass_ = 0;
    std::size_t peak_mass_ = 0;
};

// S computed from scratch by the two-condition test on every (vertex, clique)
// pair: l ∈ S_x iff x ∈ C_l, or x ∉ C_l and C_l ⊆ N(x).
CandidateCliqueSets candidate_sets_from_scratch(const Graph& g, const CliqueCover& c);

// Necessary conditions for local minimality: (a) each vertex x appears at
// most |N(x)| times, (b) no clique is contained in another, (c) every clique
// pair has a non-adjacent cross pair of distinct vertices. The converses
// fail, so a clean report does not certify local minimality.
struct MinimalityReport {
    std::vector<VertexId> vertex_budget_violations;                    // (a)
    std::vector<std::pair<std::size_t, std::size_t>> containments;     // (b) i ⊆ j
    std::vector<std::pair<std::size_t, std::size_t>> fully_adjacent;   // (c)

    bool ok() const {
        return vertex_budget_violations.empty() && containments.empty() && fully_adjacent.empty();
    }
    std::string to_string() const;
};

MinimalityReport validate_locally_minimal_characterizations(const Graph& g, const CliqueCover& c);

// Cover file format: header `# cliques=<k> weight=<w>`, then one clique per
// line as space-separated original vertex labels.
void write_cover(std::ostream& out, const Graph& g, const CliqueCover& c);
CliqueCover read_cover(std::istream& in, const Graph& g);
CliqueCover read_cover_file(const std::string& path, const Graph& g);

} // namespace ecc

#endif // ECC_COVER_HPP
