#include "ecc/greedy.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace ecc;
using namespace ecc::tests;

namespace {

const std::vector<CliqueSelect> kSelects = {
    CliqueSelect::smallest(), CliqueSelect::largest(), CliqueSelect::earliest(),
    CliqueSelect::random(7)};

const std::vector<EdgeOrder> kOrders = {EdgeOrder::DegreeAscending, EdgeOrder::DegeneracyOrder,
                                        EdgeOrder::InputOrder};

std::vector<std::vector<VertexId>> normalized(const CliqueCover& c) {
    std::vector<std::vector<VertexId>> out;
    for (const Clique& cl : c.cliques()) {
        auto vs = cl.vertices;
        std::sort(vs.begin(), vs.end());
        out.push_back(std::move(vs));
    }
    return out;
}

} // namespace

TEST_CASE("complete graphs collapse to a single clique") {
    Graph k6 = make_complete(6);
    for (EdgeOrder order : kOrders)
        for (const CliqueSelect& sel : kSelects) {
            auto [cover, stats] = basic_greedy(k6, order, sel);
            REQUIRE(cover.size() == 1);
            CHECK(cover.clique(0).size() == 6);
            auto [icover, istats] = improved_greedy(k6, order, sel);
            CHECK(icover.size() == 1);
        }
    auto [dcover, dstats] = degeneracy_greedy(k6, CliqueSelect::largest());
    CHECK(dcover.size() == 1);
    // Property: on K_n the final candidate mass is n.
    CHECK(dstats.ccs_final == 6);
}

TEST_CASE("triangle-free graphs cover edge by edge") {
    Graph path = make_path(3);
    auto [cover, stats] = basic_greedy(path, EdgeOrder::DegreeAscending, CliqueSelect::largest());
    CHECK(cover.size() == 2);

    Graph grid = make_grid(5, 5);
    REQUIRE(grid.edge_count() == 40);
    auto [gcover, gstats] = degeneracy_greedy(grid, CliqueSelect::largest());
    CHECK(gcover.size() == 40);
    for (const Clique& cl : gcover.cliques()) CHECK(cl.size() == 2);
    // Property 3.1: Σ|S_x| = 2m exactly on triangle-free inputs.
    CHECK(gstats.ccs_final == 2 * grid.edge_count());
    auto [icover, istats] = improved_greedy(grid, EdgeOrder::DegreeAscending,
                                            CliqueSelect::largest(), /*post_process=*/false);
    CHECK(icover.size() == 40);
    CHECK(istats.ccs_final == 2 * grid.edge_count());
}

TEST_CASE("K3 ends as one triangle") {
    Graph k3 = make_complete(3);
    auto [cover, stats] = improved_greedy(k3, EdgeOrder::DegreeAscending, CliqueSelect::largest());
    REQUIRE(cover.size() == 1);
    CHECK(cover.clique(0).size() == 3);
}

TEST_CASE("example graph covers are small and locally minimal") {
    Graph g = make_g6();
    for (EdgeOrder order : kOrders)
        for (const CliqueSelect& sel : kSelects) {
            auto [cover, stats] = basic_greedy(g, order, sel);
            CHECK(is_cover(g, cover));
            CHECK(cover.size() >= 3);
            CHECK(cover.size() <= 4);
            CHECK(validate_locally_minimal_characterizations(g, cover).ok());
        }
    auto [cover, stats] =
        improved_greedy(g, EdgeOrder::DegreeAscending, CliqueSelect::largest());
    CHECK(cover.size() == 3);
    auto [dcover, dstats] = degeneracy_greedy(g, CliqueSelect::largest());
    CHECK(is_cover(g, dcover));
    for (const Clique& cl : dcover.cliques()) CHECK(cl.size() <= dstats.degeneracy + 1);
}

TEST_CASE("improved greedy equals basic greedy clique by clique") {
    std::mt19937_64 seeds(101);
    for (int i = 0; i < 20; ++i) {
        Graph g = gnp_generate(12, 0.3, seeds());
        for (const CliqueSelect& sel : kSelects) {
            auto [basic, bs] = basic_greedy(g, EdgeOrder::DegreeAscending, sel);
            auto [improved, is] = improved_greedy(g, EdgeOrder::DegreeAscending, sel,
                                                  /*post_process=*/false);
            CHECK(normalized(basic) == normalized(improved));
        }
    }
}

TEST_CASE("incremental candidate sets equal the from-scratch sets at the end") {
    std::mt19937_64 seeds(55);
    for (int i = 0; i < 10; ++i) {
        Graph g = gnp_generate(14, 0.35, seeds());
        auto [cover, stats] = improved_greedy(g, EdgeOrder::DegreeAscending,
                                              CliqueSelect::largest(), /*post_process=*/false);
        CandidateCliqueSets fresh = candidate_sets_from_scratch(g, cover);
        CHECK(fresh.mass() == stats.ccs_final);
    }
}

TEST_CASE("post process examples") {
    Graph k3 = make_complete(3);
    CliqueCover fixture = cover_from_cliques(k3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}});
    CliqueCover reduced = post_process(k3, fixture);
    REQUIRE(reduced.size() == 1);
    CHECK(reduced.clique(0).size() == 3);

    Graph g = make_g6();
    CliqueCover minimal = cover_from_cliques(
        g, {vids(g, {1, 3, 5}), vids(g, {2, 3, 4}), vids(g, {4, 5, 6}), vids(g, {3, 6, 5})});
    CliqueCover same = post_process(g, minimal);
    CHECK(normalized(same) == normalized(minimal));

    CliqueCover partial = cover_from_cliques(g, {vids(g, {1, 3, 5})});
    CHECK_THROWS_AS(post_process(g, partial), std::invalid_argument);
}

TEST_CASE("post process is idempotent and keeps covers valid") {
    std::mt19937_64 seeds(77);
    for (int i = 0; i < 10; ++i) {
        Graph g = gnp_generate(15, 0.4, seeds());
        if (g.edge_count() == 0) continue;
        auto [cover, stats] = improved_greedy(g, EdgeOrder::DegreeAscending,
                                              CliqueSelect::largest(), /*post_process=*/false);
        CliqueCover once = post_process(g, cover);
        CHECK(is_cover(g, once));
        CliqueCover twice = post_process(g, once);
        CHECK(normalized(once) == normalized(twice));
    }
}

TEST_CASE("locally minimal cover bounds on random ensembles") {
    std::mt19937_64 seeds(303);
    for (int i = 0; i < 30; ++i) {
        Graph g = gnp_generate(12 + static_cast<std::uint32_t>(i % 4), 0.35, seeds());
        auto [cover, stats] = basic_greedy(g, EdgeOrder::DegreeAscending, CliqueSelect::largest());

        // Lemma bound: Σ|C_l| ≤ 2m for locally minimal covers.
        CHECK(cover_weight(cover) <= 2 * g.edge_count());

        // Edge appearances bounded by Σ min(deg(x),deg(y)).
        std::size_t appearances = 0, bound = 0;
        for (const Clique& cl : cover.cliques()) {
            const auto& vs = cl.vertices;
            appearances += vs.size() * (vs.size() - 1) / 2;
        }
        for (auto [x, y] : g.edges()) bound += std::min(g.degree(x), g.degree(y));
        CHECK(appearances <= bound);

        // Redundancy needs at least three other cliques (checked for ≤ 12).
        if (cover.size() <= 12) {
            auto edge_set = [&](const Clique& cl) {
                std::set<EdgeId> es;
                for (std::size_t a = 0; a < cl.vertices.size(); ++a)
                    for (std::size_t b = a + 1; b < cl.vertices.size(); ++b)
                        es.insert(g.edge_index(cl.vertices[a], cl.vertices[b]));
                return es;
            };
            for (std::size_t l = 0; l < cover.size(); ++l) {
                auto target = edge_set(cover.clique(l));
                for (std::size_t i1 = 0; i1 < cover.size(); ++i1) {
                    if (i1 == l) continue;
                    auto u1 = edge_set(cover.clique(i1));
                    CHECK(!std::includes(u1.begin(), u1.end(), target.begin(), target.end()));
                    for (std::size_t i2 = i1 + 1; i2 < cover.size(); ++i2) {
                        if (i2 == l) continue;
                        auto u2 = edge_set(cover.clique(i2));
                        u2.insert(u1.begin(), u1.end());
                        CHECK(!std::includes(u2.begin(), u2.end(), target.begin(), target.end()));
                    }
                }
            }
        }
    }
}

TEST_CASE("candidate mass stays within the frozen constant bounds") {
    // Peak Σ|S_x| ≤ c1 (m + kΔ) for CCSG and ≤ c1 (m + kd) for CCSD, c1 = 2.
    const double c1 = 2.0;
    std::mt19937_64 seeds(404);
    for (int i = 0; i < 12; ++i) {
        Graph g = gnp_generate(40, 0.15, seeds());
        auto [icover, istats] = improved_greedy(g, EdgeOrder::DegreeAscending,
                                                CliqueSelect::largest(), /*post_process=*/false);
        double ibound =
            c1 * (static_cast<double>(g.edge_count()) + icover.size() * g.max_degree());
        CHECK(istats.ccs_max <= ibound);

        auto [dcover, dstats] = degeneracy_greedy(g, CliqueSelect::largest());
        double dbound = c1 * (static_cast<double>(g.edge_count()) +
                              dcover.size() * static_cast<double>(dstats.degeneracy));
        CHECK(dstats.ccs_max <= dbound);
    }
}

TEST_CASE("ccs instrumentation tracks the paper's empirical bounds") {
    std::mt19937_64 seeds(505);
    for (int i = 0; i < 3; ++i) {
        Graph g = gnp_generate(150, 0.10, seeds());
        auto [icover, istats] = improved_greedy(g, EdgeOrder::DegreeAscending,
                                                CliqueSelect::largest(), /*post_process=*/false);
        CHECK(istats.ccs_max <= 3 * g.edge_count());
        auto [dcover, dstats] = degeneracy_greedy(g, CliqueSelect::largest());
        CHECK(dstats.ccs_tsi <= static_cast<std::uint64_t>(g.edge_count()) * dstats.degeneracy);
    }
}

TEST_CASE("random selection replays with the same seed") {
    Graph g = gnp_generate(20, 0.3, 999);
    auto [a, sa] = improved_greedy(g, EdgeOrder::DegreeAscending, CliqueSelect::random(5));
    auto [b, sb] = improved_greedy(g, EdgeOrder::DegreeAscending, CliqueSelect::random(5));
    CHECK(normalized(a) == normalized(b));
    CHECK(sa.seed == 5);
}

TEST_CASE("observer sees every uncovered edge step") {
    Graph g = make_g6();
    std::size_t steps = 0;
    GreedyObserver obs = [&](const GreedyStep& step) {
        ++steps;
        CHECK_FALSE(step.cover.edge_covered(g.edge_index(step.x, step.y)));
        // The intersection is consistent with the two sets.
        for (std::size_t l : step.intersection) {
            CHECK(std::find(step.set_x.begin(), step.set_x.end(), l) != step.set_x.end());
            CHECK(std::find(step.set_y.begin(), step.set_y.end(), l) != step.set_y.end());
        }
    };
    auto [cover, stats] = basic_greedy(g, EdgeOrder::DegreeAscending, CliqueSelect::largest(), obs);
    CHECK(steps >= cover.size());
    CHECK(steps <= g.edge_count());
}

TEST_CASE("deadline aborts greedy runs") {
    Graph g = gnp_generate(60, 0.2, 3);
    CHECK_THROWS_AS(
        basic_greedy(g, EdgeOrder::DegreeAscending, CliqueSelect::largest(), {},
                     Deadline::after(std::chrono::milliseconds(0))),
        Timeout);
    CHECK_THROWS_AS(improved_greedy(g, EdgeOrder::DegreeAscending, CliqueSelect::largest(), true,
                                    Deadline::after(std::chrono::milliseconds(0))),
                    Timeout);
}

TEST_CASE("run stats CSV shape") {
    Graph g = make_g6();
    auto [cover, stats] = improved_greedy(g, EdgeOrder::DegreeAscending, CliqueSelect::largest());
    stats.graph_name = "g6";
    std::string header = RunStats::csv_header();
    std::string row = stats.csv_row();
    CHECK(std::count(header.begin(), header.end(), ',') ==
          std::count(row.begin(), row.end(), ','));
    CHECK(row.rfind("g6,6,10,3,5,ccsg,degree-ascending/largest,3,3,10,", 0) == 0);
}
