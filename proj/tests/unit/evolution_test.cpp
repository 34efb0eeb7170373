#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "docsim/evolution.hpp"
#include "oracle_cases.hpp"
#include "test_support.hpp"

using namespace docsim;

TEST_CASE("evolution worked examples") { testkit::check_module_examples("evolution"); }

TEST_CASE("invariants hold across random evolution steps") {
    const testkit::InvariantReport report = testkit::run_evolution_invariant_suite(2000, 71);
    for (const auto& v : report.violations) INFO(v);
    CHECK(report.steps == 2000);
    CHECK(report.violation_count == 0);
}

TEST_CASE("tournament_select against a sort oracle") {
    RngStream rng(72);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + rng.index(15);
        std::vector<double> population(n);
        for (double& x : population) x = static_cast<double>(rng.index(5));  // many ties
        const std::size_t k = 1 + rng.index(n);
        const std::uint64_t seed = rng.index(1u << 20);

        RngStream twin(seed);
        std::vector<std::size_t> entrants = twin.sample(n, k);
        std::sort(entrants.begin(), entrants.end(), [&](std::size_t a, std::size_t b) {
            return population[a] != population[b] ? population[a] > population[b] : a < b;
        });

        RngStream draw(seed);
        const auto result = tournament_select(std::span<const double>(population), k, [](double x) { return x; }, draw);
        CHECK(result.winner == entrants.front());
        CHECK(result.loser == entrants.back());
        if (k >= 2) CHECK(result.winner != result.loser);
    }
}

TEST_CASE("no-op and full-elite steps leave the population untouched") {
    RngStream rng(73);
    std::vector<double> population{0.4, 0.1, 0.9, 0.3, 0.7, 0.2};
    const auto before = population;
    const auto mutate = [](double& x, RngStream&) { x += 1.0; };
    const auto cross = [](double& l, const double& w, RngStream&) { l = w; };
    const auto fitness = [](double x) { return x; };

    evolve_population(std::span<double>(population), GaParams{3, 1, 0.0, 0.0, 50}, fitness, mutate, cross, rng);
    CHECK(population == before);

    evolve_population(std::span<double>(population), GaParams{3, 6, 1.0, 1.0, 50}, fitness, mutate, cross, rng);
    CHECK(population == before);
}

TEST_CASE("evolution is a pure function of state and seed") {
    RngStream seed_rng(74);
    std::vector<DoctorState> doctors;
    for (std::uint32_t i = 0; i < 12; ++i) doctors.push_back(testkit::random_doctor(seed_rng, ModelKind::css, i, 12, 4));
    RatingLedger ledger;
    for (std::uint32_t d = 0; d < 12; ++d) ledger.add_rating(DoctorId{d}, PatientId{0}, testkit::random_rating(seed_rng, ModelKind::css));
    auto run = [&](std::vector<DoctorState> pop) {
        RngStream rng(5);
        for (int g = 0; g < 50; ++g) {
            evolve_population(
                std::span<DoctorState>(pop), GaParams{5, 1, 0.5, 0.5, 3},
                [&](const DoctorState& d) { return fitness_doctor(d, ledger); },
                [&](DoctorState& d, RngStream& r) { mutate_doctor_css(d, ledger, r); },
                [&](DoctorState& l, const DoctorState& w, RngStream& r) { crossover_doctor(l, w, r, ModelKind::css); },
                rng);
        }
        return pop;
    };
    CHECK(run(doctors) == run(doctors));
}

TEST_CASE("crossover moves averaged traits toward the winner") {
    RngStream rng(75);
    for (int trial = 0; trial < 2000; ++trial) {
        DoctorState loser = testkit::random_doctor(rng, ModelKind::css, 0, 3, 3);
        const DoctorState winner = testkit::random_doctor(rng, ModelKind::css, 1, 3, 3);
        const DoctorState before = loser;
        crossover_doctor(loser, winner, rng, ModelKind::css);
        CHECK(std::abs(loser.research_ability - winner.research_ability) <=
              std::abs(before.research_ability - winner.research_ability));
        CHECK(std::abs(loser.empathy - winner.empathy) <= std::abs(before.empathy - winner.empathy));
        CHECK(std::abs(loser.weight_wmrat - winner.weight_wmrat) <= std::abs(before.weight_wmrat - winner.weight_wmrat));
        loser.social_ties_patients.for_each([&](PatientId k, double s) {
            CHECK(std::abs(s - winner.social_ties_patients.at(k)) <=
                  std::abs(before.social_ties_patients.at(k) - winner.social_ties_patients.at(k)) + 1e-15);
        });
        // Credential and experience never travel with crossover.
        CHECK(loser.credential == before.credential);
        CHECK(loser.experience == before.experience);
    }
}

TEST_CASE("inner crossover gate fires about half the time") {
    RngStream rng(76);
    int fired = 0;
    for (int i = 0; i < 20000; ++i) {
        DoctorState loser = testkit::make_doctor(0, Credential::low, 0.2);
        crossover_doctor(loser, testkit::make_doctor(1, Credential::low, 0.6), rng, ModelKind::classical);
        if (loser.research_ability != 0.2) ++fired;
    }
    CHECK(std::abs(fired - 10000) < 400);
}

TEST_CASE("classical mutation spends personal resource and never overdraws") {
    RngStream rng(77);
    for (int trial = 0; trial < 5000; ++trial) {
        DoctorState d = testkit::random_doctor(rng, ModelKind::classical, 0, 1, 1);
        RatingLedger ledger;
        if (rng.uniform() < 0.5) ledger.add_rating(DoctorId{0}, PatientId{0}, static_cast<double>(rng.index(6)));
        const DoctorState before = d;
        mutate_doctor_classical(d, ledger, rng);
        const double spent = before.personal_resource - d.personal_resource;
        CHECK(spent >= 0.0);
        CHECK(d.personal_resource >= 0.0);
        const double moved = std::abs(d.research_ability - before.research_ability) + std::abs(d.empathy - before.empathy);
        CHECK(moved <= spent + 1e-12);
        CHECK(testkit::doctor_violations(d).empty());
    }
}

TEST_CASE("css mutation buckets are half-open fifths") {
    CHECK(css_mutation_target(0.0) == CssMutationTarget::research_ability);
    CHECK(css_mutation_target(0.19999999999999998) == CssMutationTarget::research_ability);
    CHECK(css_mutation_target(0.2) == CssMutationTarget::empathy);
    CHECK(css_mutation_target(0.4) == CssMutationTarget::weight_wmrat);
    CHECK(css_mutation_target(0.6) == CssMutationTarget::weight_mwres);
    CHECK(css_mutation_target(0.8) == CssMutationTarget::social_tie);
    CHECK(css_mutation_target(0.9999999999999999) == CssMutationTarget::social_tie);
}

TEST_CASE("css mutation with no resource leaves research and empathy alone") {
    RngStream rng(78);
    for (int trial = 0; trial < 3000; ++trial) {
        DoctorState d = testkit::random_doctor(rng, ModelKind::css, 0, 3, 3);
        d.personal_resource = 0.0;
        const DoctorState before = d;
        RatingLedger ledger;
        mutate_doctor_css(d, ledger, rng);
        CHECK(d.research_ability == before.research_ability);
        CHECK(d.empathy == before.empathy);
        CHECK(d.personal_resource == 0.0);
    }
}

TEST_CASE("single-tie patient mutation touches at most one tie") {
    RngStream rng(79);
    for (int trial = 0; trial < 2000; ++trial) {
        PatientState p = testkit::random_patient(rng, ModelKind::css, 0, 6, 6);
        const PatientState before = p;
        mutate_patient(p, ModelKind::css, rng, true);
        int changed = 0;
        p.social_ties_doctors.for_each([&](DoctorId k, double s) { changed += s != before.social_ties_doctors.at(k); });
        p.social_ties_patients.for_each([&](PatientId k, double s) { changed += s != before.social_ties_patients.at(k); });
        CHECK(changed <= 1);
        CHECK(testkit::patient_violations(p).empty());
    }
}

TEST_CASE("classical patient mutation leaves ties untouched") {
    RngStream rng(80);
    PatientState p = testkit::random_patient(rng, ModelKind::classical, 0, 3, 3);
    for (int i = 0; i < 100; ++i) mutate_patient(p, ModelKind::classical, rng);
    CHECK(p.social_ties_doctors.empty());
    CHECK(p.social_ties_patients.empty());
    CHECK(testkit::patient_violations(p).empty());
}
