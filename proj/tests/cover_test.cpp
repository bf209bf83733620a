#include "ecc/cover.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace ecc;
using namespace ecc::tests;

namespace {

std::vector<std::size_t> sorted_set(const CandidateCliqueSets& ccs, VertexId x) {
    auto s = ccs.candidates_of(x);
    std::sort(s.begin(), s.end());
    return s;
}

// Remark-style case analysis: can some existing clique absorb the uncovered
// edge {x,y}? Checks the three cases exhaustively per clique.
bool absorbable_by_cases(const Graph& g, const CliqueCover& c, VertexId x, VertexId y) {
    for (std::size_t l = 0; l < c.size(); ++l) {
        const Clique& cl = c.clique(l);
        bool x_in = cl.contains(x);
        bool y_in = cl.contains(y);
        auto inside_neighborhood = [&](VertexId v) {
            for (VertexId z : cl.vertices)
                if (!g.has_edge(z, v)) return false;
            return true;
        };
        if (x_in && !y_in && inside_neighborhood(y)) return true;
        if (y_in && !x_in && inside_neighborhood(x)) return true;
        if (!x_in && !y_in && inside_neighborhood(x) && inside_neighborhood(y)) return true;
    }
    return false;
}

} // namespace

TEST_CASE("is_cover on the example graph") {
    Graph g = make_g6();
    CliqueCover full = cover_from_cliques(
        g, {vids(g, {1, 3, 5}), vids(g, {2, 3, 4}), vids(g, {3, 4, 5, 6})});
    CHECK(is_cover(g, full));

    CliqueCover partial = cover_from_cliques(g, {vids(g, {1, 3, 5}), vids(g, {2, 3, 4})});
    CHECK_FALSE(is_cover(g, partial)); // edge {5,6} uncovered

    Graph empty = Graph::from_edges({});
    CHECK(is_cover(empty, CliqueCover(empty)));
}

TEST_CASE("is_cover rejects non-cliques loudly") {
    Graph g = make_g6();
    CliqueCover bad = cover_from_cliques(g, {vids(g, {1, 3, 4})});
    CHECK_THROWS_WITH_AS(is_cover(g, bad), doctest::Contains("(1,4)"), std::invalid_argument);
}

TEST_CASE("candidate sets from scratch match the worked example") {
    Graph g = make_g6();
    CliqueCover c = cover_from_cliques(g, {vids(g, {1, 3, 5}), vids(g, {4, 5}), vids(g, {2, 4})});
    CandidateCliqueSets ccs = candidate_sets_from_scratch(g, c);
    CHECK(ccs.consistent());
    // Paper indices 1..3 are our creation indices 0..2.
    CHECK(sorted_set(ccs, vid(g, 3)) == std::vector<std::size_t>{0, 1, 2});
    CHECK(sorted_set(ccs, vid(g, 6)) == std::vector<std::size_t>{1});
}

TEST_CASE("candidate sets of an empty cover are empty") {
    Graph g = make_g6();
    CandidateCliqueSets ccs = candidate_sets_from_scratch(g, CliqueCover(g));
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(ccs.set_size(v) == 0);
    CHECK(ccs.mass() == 0);
}

TEST_CASE("cover weight") {
    Graph g = make_g6();
    CliqueCover c = cover_from_cliques(
        g, {vids(g, {1, 3, 5}), vids(g, {2, 3, 4}), vids(g, {3, 4, 5, 6})});
    CHECK(cover_weight(c) == 10);
    CHECK(cover_weight(CliqueCover(g)) == 0);

    Graph k3 = make_complete(3);
    CHECK(cover_weight(cover_from_cliques(k3, {{0, 1, 2}})) == 3);
}

TEST_CASE("local minimality characterizations") {
    Graph g = make_g6();
    CliqueCover minimal = cover_from_cliques(
        g, {vids(g, {1, 3, 5}), vids(g, {2, 3, 4}), vids(g, {4, 5, 6}), vids(g, {3, 6, 5})});
    REQUIRE(is_cover(g, minimal));
    CHECK(validate_locally_minimal_characterizations(g, minimal).ok());

    // Covering K3 edge by edge: every clique pair is fully adjacent.
    Graph k3 = make_complete(3);
    CliqueCover edges = cover_from_cliques(k3, {{0, 1}, {1, 2}, {0, 2}});
    auto report = validate_locally_minimal_characterizations(k3, edges);
    CHECK_FALSE(report.ok());
    CHECK(std::find(report.fully_adjacent.begin(), report.fully_adjacent.end(),
                    std::make_pair(std::size_t{0}, std::size_t{1})) != report.fully_adjacent.end());
    CHECK(report.containments.empty());

    // A contained clique violates check (b).
    CliqueCover contained = cover_from_cliques(
        g, {vids(g, {3, 4, 5, 6}), vids(g, {4, 5}), vids(g, {1, 3, 5}), vids(g, {2, 3, 4})});
    auto r2 = validate_locally_minimal_characterizations(g, contained);
    CHECK(std::find(r2.containments.begin(), r2.containments.end(),
                    std::make_pair(std::size_t{1}, std::size_t{0})) != r2.containments.end());

    // Repeating a clique overdraws the endpoint appearance budget (a).
    Graph path = make_path(3);
    CliqueCover repeated = cover_from_cliques(path, {{0, 1}, {0, 1}, {1, 2}});
    auto r3 = validate_locally_minimal_characterizations(path, repeated);
    CHECK(std::find(r3.vertex_budget_violations.begin(), r3.vertex_budget_violations.end(),
                    VertexId{0}) != r3.vertex_budget_violations.end());
}

TEST_CASE("candidate clique set mutations keep both indexes mirrored") {
    std::mt19937_64 rng(11);
    CandidateCliqueSets ccs(12);
    for (std::size_t l = 0; l < 8; ++l) ccs.push_clique();
    std::vector<std::pair<VertexId, std::size_t>> present;
    for (int step = 0; step < 2000; ++step) {
        VertexId z = static_cast<VertexId>(rng() % 12);
        std::size_t l = rng() % 8;
        if (rng() & 1) {
            ccs.add(z, l);
        } else {
            ccs.remove_if_present(z, l);
        }
        if ((step & 63) == 0) REQUIRE(ccs.consistent());
    }
    CHECK(ccs.consistent());
    CHECK(ccs.peak_mass() >= ccs.mass());
}

TEST_CASE("absorbable edges are exactly those with intersecting candidate sets") {
    // Both directions of the absorption characterization, brute forced on
    // random partial covers.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = gnp_generate(8, 0.45, rng());
        if (g.edge_count() == 0) continue;
        // Build a random partial cover greedily.
        CliqueCover cover(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (rng() % 3 == 0) continue; // leave some edges uncovered
            if (cover.edge_covered(e)) continue;
            auto [x, y] = g.edge(e);
            CandidateCliqueSets ccs = candidate_sets_from_scratch(g, cover);
            auto inter = ccs.intersect(x, y);
            if (!inter.empty() && (rng() & 1))
                cover.absorb(inter[rng() % inter.size()], x, y);
            else
                cover.start_clique(x, y);
        }
        CandidateCliqueSets ccs = candidate_sets_from_scratch(g, cover);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (cover.edge_covered(e)) continue;
            auto [x, y] = g.edge(e);
            bool via_sets = !ccs.intersect(x, y).empty();
            CHECK(via_sets == absorbable_by_cases(g, cover, x, y));
        }
    }
}

TEST_CASE("trivial clique counting in covers") {
    Graph path = make_path(3);
    CliqueCover c = cover_from_cliques(path, {{0, 1}, {1, 2}});
    CHECK(trivial_clique_count(path, c) == 2);

    Graph k3 = make_complete(3);
    CliqueCover t = cover_from_cliques(k3, {{0, 1, 2}});
    CHECK(trivial_clique_count(k3, t) == 0);
}

TEST_CASE("cover file round trip") {
    Graph g = make_g6();
    CliqueCover c = cover_from_cliques(
        g, {vids(g, {1, 3, 5}), vids(g, {2, 3, 4}), vids(g, {3, 4, 5, 6})});
    std::ostringstream out;
    write_cover(out, g, c);
    CHECK(out.str().rfind("# cliques=3 weight=10", 0) == 0);

    std::istringstream in(out.str());
    CliqueCover back = read_cover(in, g);
    CHECK(is_cover(g, back));
    REQUIRE(back.size() == c.size());
    for (std::size_t l = 0; l < c.size(); ++l)
        CHECK(back.clique(l).vertices == c.clique(l).vertices);

    std::istringstream unknown("9 99\n");
    CHECK_THROWS_AS(read_cover(unknown, g), std::runtime_error);
}

TEST_CASE("absorb marks exactly the edges between the pair and the clique") {
    Graph g = make_g6();
    CliqueCover c(g);
    std::size_t l = c.start_clique(vid(g, 3), vid(g, 4));
    CHECK(c.edge_covered(g.edge_index(vid(g, 3), vid(g, 4))));
    c.absorb(l, vid(g, 5), vid(g, 3));
    CHECK(c.edge_covered(g.edge_index(vid(g, 3), vid(g, 5))));
    CHECK(c.edge_covered(g.edge_index(vid(g, 4), vid(g, 5))));
    CHECK(c.clique(l).size() == 3);
    CHECK_FALSE(c.edge_covered(g.edge_index(vid(g, 5), vid(g, 6))));
}

TEST_CASE("logged mutations restore the cover exactly") {
    Graph g = make_g6();
    CliqueCover c(g);
    std::size_t l = c.start_clique(vid(g, 3), vid(g, 4));

    auto snapshot = [&] {
        std::vector<char> marks;
        for (EdgeId e = 0; e < g.edge_count(); ++e) marks.push_back(c.edge_covered(e));
        return std::make_pair(c.clique(l).vertices, marks);
    };
    auto before = snapshot();

    auto log = c.absorb_logged(l, vid(g, 5), vid(g, 6));
    CHECK(c.clique(l).size() == 4);
    c.undo_absorb(l, vid(g, 5), vid(g, 6), log);
    CHECK(snapshot() == before);

    auto clog = c.add_clique_logged(vids(g, {1, 3, 5}));
    CHECK(c.size() == 2);
    c.pop_clique(clog);
    CHECK(c.size() == 1);
    CHECK(snapshot() == before);
}
