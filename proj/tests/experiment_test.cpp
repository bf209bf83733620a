#include "ecc/experiment.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace ecc;
using namespace ecc::tests;

namespace {

const SummaryRow* find_summary(const EnsembleReport& report, const std::string& algo,
                               const std::string& metric) {
    for (const SummaryRow& s : report.summary)
        if (s.algorithm == algo && s.metric == metric) return &s;
    return nullptr;
}

} // namespace

TEST_CASE("instance naming matches the paper's scheme") {
    CHECK(gnp_name(150, 0.100) == "er_150_0100");
    CHECK(gnp_name(1000, 0.035) == "er_1000_0035");
    CHECK(gnp_instance_name(150, 0.1, 7) == "er_150_0100_s7");
}

TEST_CASE("ensembles are reproducible modulo wall times") {
    ExperimentSpec spec;
    spec.gnp = GnpEnsemble{14, 0.3, 6, 42};
    spec.roster = {{"ccsg", EdgeOrder::DegreeAscending, CliqueSelect::largest()},
                   {"ccsd", EdgeOrder::DegeneracyOrder, CliqueSelect::largest()}};
    spec.threads = 3;

    EnsembleReport a = run_ensemble(spec);
    EnsembleReport b = run_ensemble(spec);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].graph_name == b.rows[i].graph_name);
        CHECK(a.rows[i].algorithm == b.rows[i].algorithm);
        CHECK(a.rows[i].status == b.rows[i].status);
        CHECK(a.rows[i].run.cover_size == b.rows[i].run.cover_size);
        CHECK(a.rows[i].run.weight == b.rows[i].run.weight);
        CHECK(a.rows[i].run.ccs_max == b.rows[i].run.ccs_max);
        CHECK(a.rows[i].run.ccs_tsi == b.rows[i].run.ccs_tsi);
    }
}

TEST_CASE("exact solvers and the oracle agree across an ensemble") {
    ExperimentSpec spec;
    spec.gnp = GnpEnsemble{8, 0.4, 6, 7};
    spec.roster = {{"cfpt"}, {"mfpt"}, {"oracle"}};
    spec.threads = 2;
    EnsembleReport report = run_ensemble(spec);

    const SummaryRow* agreement = find_summary(report, "all", "size_agreement_rate");
    REQUIRE(agreement != nullptr);
    CHECK(agreement->value == doctest::Approx(100.0));
    for (const InstanceRun& row : report.rows) CHECK(row.ok());
}

TEST_CASE("a zero time limit times out every run") {
    ExperimentSpec spec;
    spec.gnp = GnpEnsemble{12, 0.3, 4, 3};
    spec.roster = {{"ccsg"}, {"mfpt"}};
    spec.time_limit = std::chrono::milliseconds(0);
    EnsembleReport report = run_ensemble(spec);
    for (const InstanceRun& row : report.rows) CHECK(row.status == "TIMEOUT");
    const SummaryRow* rate = find_summary(report, "ccsg", "completion_rate");
    REQUIRE(rate != nullptr);
    CHECK(rate->value == doctest::Approx(0.0));
}

TEST_CASE("csv rows are rectangular") {
    ExperimentSpec spec;
    spec.gnp = GnpEnsemble{10, 0.35, 3, 11};
    spec.roster = {{"ccsg"}, {"ccsd"}, {"mfpt"}};
    spec.baseline = "mfpt";
    EnsembleReport report = run_ensemble(spec);

    std::ostringstream out;
    report.write_csv(out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    auto commas = std::count(line.begin(), line.end(), ',');
    CHECK(commas == 21);
    std::size_t lines = 1;
    while (std::getline(in, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == commas);
        ++lines;
    }
    CHECK(lines == 1 + report.rows.size() + report.summary.size());

    // Baseline metrics exist for the two greedy entries.
    CHECK(find_summary(report, "ccsg/mfpt", "geomean_size_ratio") != nullptr);
    CHECK(find_summary(report, "ccsd/mfpt", "avg_relative_reduction") != nullptr);
}

TEST_CASE("single algorithm runner handles greedy and exact entries") {
    Graph g = make_g6();
    InstanceRun greedy = run_algorithm(g, {"ccsd"}, "g6", 0, std::nullopt);
    CHECK(greedy.ok());
    CHECK(greedy.run.cover_size >= 3);

    InstanceRun exact = run_algorithm(g, {"mfpt"}, "g6", 0, std::nullopt);
    CHECK(exact.ok());
    CHECK(exact.run.cover_size == 3);
    CHECK(exact.has_search);

    InstanceRun am = run_algorithm(g, {"am"}, "g6", 0, std::nullopt);
    CHECK(am.ok());
    CHECK(am.run.weight == 10);

    CHECK_THROWS_AS(run_algorithm(g, {"nope"}, "g6", 0, std::nullopt), std::invalid_argument);
}

TEST_CASE("file-based ensembles load edge lists") {
    ExperimentSpec spec;
    spec.files = {"/nonexistent/graph.txt"};
    spec.roster = {{"ccsg"}};
    EnsembleReport report = run_ensemble(spec);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].status.rfind("error:", 0) == 0);
}
