#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "docsim/engine.hpp"
#include "docsim/errors.hpp"
#include "oracle_cases.hpp"
#include "test_support.hpp"

using namespace docsim;

TEST_CASE("engine worked examples") { testkit::check_module_examples("engine-cli"); }

TEST_CASE("invariants hold across random rounds") {
    const testkit::InvariantReport report = testkit::run_round_invariant_suite(300, 81);
    for (const auto& v : report.violations) INFO(v);
    CHECK(report.steps == 300);
    CHECK(report.violation_count == 0);
}

TEST_CASE("an empty round still emits metrics") {
    SimulationConfig c = SimulationConfig::defaults_for(ModelKind::classical);
    c.num_infected_per_round = 0;
    Simulation sim(c, 3);
    for (PatientState& p : sim.mutable_patients()) p.health_level = 1.0;
    const RoundMetrics m = sim.run_round(1);
    CHECK(m.round_index == 1);
    CHECK(m.treatments == 0);
    CHECK(m.infections == 0);
    CHECK(m.untreated_seekers == 0);
    CHECK(m.patient_fitness == doctest::Approx(1.0));
}

TEST_CASE("identical state and seed give identical rounds") {
    for (ModelKind model : {ModelKind::classical, ModelKind::css}) {
        const SimulationConfig c = SimulationConfig::paper_single(model);
        Simulation a(c, 12);
        Simulation b(c, 12);
        for (std::size_t r = 1; r <= 5; ++r) CHECK(a.run_round(r) == b.run_round(r));
        CHECK(a.doctors() == b.doctors());
        CHECK(a.patients() == b.patients());
        CHECK(a.ledger() == b.ledger());
    }
}

TEST_CASE("zero rounds returns the initial populations") {
    SimulationConfig c = SimulationConfig::defaults_for(ModelKind::css);
    c.num_rounds = 0;
    const RunResult r = run_simulation(c, 9);
    CHECK(r.metrics.empty());
    CHECK(r.doctors.size() == c.num_doctors);
    CHECK(r.patients.size() == c.num_patients);
    const Simulation fresh(c, 9);
    CHECK(r.doctors == fresh.doctors());
}

TEST_CASE("invalid configs fail before any work") {
    SimulationConfig c = SimulationConfig::defaults_for(ModelKind::classical);
    c.num_doctors = 0;
    CHECK_THROWS_AS(run_simulation(c, 1), ConfigError);
    c = SimulationConfig::defaults_for(ModelKind::classical);
    c.num_infected_per_round = c.num_patients + 1;
    CHECK_THROWS_AS(Simulation(c, 1), ConfigError);
    c = SimulationConfig::defaults_for(ModelKind::classical);
    c.tournament_size = c.num_doctors + 1;
    CHECK_THROWS_AS(Simulation(c, 1), ConfigError);
    c = SimulationConfig::defaults_for(ModelKind::classical);
    c.num_elites = c.num_doctors;
    CHECK_THROWS_AS(Simulation(c, 1), ConfigError);
    c = SimulationConfig::defaults_for(ModelKind::classical);
    c.mutation_chance = 1.5;
    CHECK_THROWS_AS(Simulation(c, 1), ConfigError);
}

TEST_CASE("snapshots follow the interval and exist only under css") {
    SimulationConfig c = SimulationConfig::paper_single(ModelKind::css);
    c.snapshot_every = 5;
    const RunResult r = run_simulation(c, 2);
    REQUIRE(r.snapshots.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.snapshots[i].round_index == 5 * (i + 1));
    for (const NetworkSnapshot& s : r.snapshots) {
        CHECK(s.nodes.size() == c.num_doctors + c.num_patients);
        for (const SnapshotEdge& e : s.edges) {
            CHECK(e.strength >= 0.0);
            CHECK(e.strength <= 1.0);
            const bool source = std::any_of(s.nodes.begin(), s.nodes.end(), [&](const auto& n) { return n.id == e.source; });
            const bool target = std::any_of(s.nodes.begin(), s.nodes.end(), [&](const auto& n) { return n.id == e.target; });
            CHECK(source);
            CHECK(target);
        }
    }

    SimulationConfig classical = SimulationConfig::paper_single(ModelKind::classical);
    classical.snapshot_every = 5;
    CHECK(run_simulation(classical, 2).snapshots.empty());
    CHECK_THROWS_AS(Simulation(classical, 2).snapshot(0), UsageError);
}

TEST_CASE("batch aggregation") {
    SUBCASE("one repeat equals the run with zero deviation") {
        SimulationConfig c = SimulationConfig::paper_single(ModelKind::classical);
        const BatchResult b = run_batch(c, 1);
        const RunResult r = run_simulation(c, derive_run_seed(c.base_seed, 0), 0);
        REQUIRE(b.rounds.size() == r.metrics.size());
        for (std::size_t i = 0; i < r.metrics.size(); ++i) {
            const auto values = r.metrics[i].values();
            for (std::size_t f = 0; f < values.size(); ++f) {
                CHECK(b.rounds[i].stats[f].mean == values[f]);
                CHECK(b.rounds[i].stats[f].stddev == 0.0);
            }
        }
    }
    SUBCASE("mean of constants is the constant") {
        std::vector<std::vector<RoundMetrics>> runs(7, std::vector<RoundMetrics>(3));
        for (auto& run : runs) {
            for (std::size_t r = 0; r < 3; ++r) {
                run[r].round_index = r + 1;
                run[r].doctor_fitness = 0.1;
                run[r].treatments = 4;
            }
        }
        const auto agg = aggregate_runs(runs);
        for (const auto& round : agg) {
            CHECK(round.stats[0].mean == doctest::Approx(0.1).epsilon(1e-15));
            CHECK(round.stats[12].mean == 4.0);
            CHECK(round.stats[12].stddev == 0.0);
        }
    }
    SUBCASE("aggregation is permutation invariant") {
        RngStream rng(82);
        std::vector<std::vector<RoundMetrics>> runs(9, std::vector<RoundMetrics>(2));
        for (auto& run : runs) {
            for (auto& m : run) {
                m.doctor_fitness = rng.uniform(0.0, 5.0);
                m.patient_fitness = rng.uniform();
                m.untreated_seekers = rng.index(50);
            }
        }
        const auto base = aggregate_runs(runs);
        for (int trial = 0; trial < 20; ++trial) {
            for (std::size_t i = runs.size() - 1; i > 0; --i) std::swap(runs[i], runs[rng.index(i + 1)]);
            const auto shuffled = aggregate_runs(runs);
            for (std::size_t r = 0; r < base.size(); ++r) {
                for (std::size_t f = 0; f < RoundMetrics::kFieldCount; ++f) {
                    CHECK(shuffled[r].stats[f].mean == base[r].stats[f].mean);
                    CHECK(shuffled[r].stats[f].stddev == base[r].stats[f].stddev);
                }
            }
        }
    }
    SUBCASE("thread count does not change results") {
        SimulationConfig c = SimulationConfig::paper_single(ModelKind::css);
        c.num_repeats = 6;
        const BatchResult one = run_batch(c, 1);
        const BatchResult many = run_batch(c, 4);
        for (std::size_t r = 0; r < c.num_repeats; ++r) CHECK(one.runs[r].metrics == many.runs[r].metrics);
    }
}
