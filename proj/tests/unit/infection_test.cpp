#include <algorithm>
#include <set>

#include "doctest.h"
#include "docsim/infection.hpp"
#include "docsim/init.hpp"
#include "oracle_cases.hpp"
#include "test_support.hpp"

using namespace docsim;

TEST_CASE("infection worked examples") { testkit::check_module_examples("infection"); }

TEST_CASE("spread_infection: counts, exhaustion and gap-free orders") {
    RngStream rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t np = 1 + rng.index(60);
        std::vector<PatientState> patients;
        for (std::uint32_t i = 0; i < np; ++i) {
            PatientState p = testkit::random_patient(rng, ModelKind::classical, i, 1, np);
            if (rng.uniform() < 0.2) {
                p.is_infected = true;
                p.infected_order = 0;
            }
            patients.push_back(p);
        }
        InfectionCounter counter;
        const std::size_t eligible =
            static_cast<std::size_t>(std::count_if(patients.begin(), patients.end(), infection_eligible));
        const std::size_t n = rng.index(np + 5);
        const std::uint64_t first = counter.peek();
        const auto before = patients;
        const std::size_t infected = spread_infection(patients, n, counter, rng);
        CHECK(infected == std::min(n, eligible));
        CHECK(counter.peek() == first + infected);

        std::set<std::uint64_t> orders;
        for (std::size_t i = 0; i < np; ++i) {
            if (patients[i] == before[i]) continue;
            CHECK(infection_eligible(before[i]));
            CHECK(patients[i].is_infected);
            CHECK(patients[i].health_level >= 0.0);
            CHECK(patients[i].health_level == doctest::Approx(std::max(0.0, before[i].health_level - 0.2)));
            orders.insert(*patients[i].infected_order);
        }
        CHECK(orders.size() == infected);
        if (!orders.empty()) {
            CHECK(*orders.begin() == first);
            CHECK(*orders.rbegin() == first + infected - 1);
        }
    }
}

TEST_CASE("n = 0 changes nobody") {
    RngStream rng(42);
    auto patients = init_populations(1, 30, ModelKind::classical, rng).patients;
    const auto before = patients;
    InfectionCounter counter;
    CHECK(spread_infection(patients, 0, counter, rng) == 0);
    CHECK(patients == before);
}

TEST_CASE("triage order is sorted by priority with id tie-break") {
    RngStream rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<PatientState> patients;
        const std::size_t np = 1 + rng.index(40);
        for (std::uint32_t i = 0; i < np; ++i) {
            PatientState p = testkit::make_patient(i, static_cast<double>(rng.index(4)) / 4.0);
            if (rng.uniform() < 0.5) {
                p.is_infected = true;
                p.infected_order = rng.index(10);
            }
            patients.push_back(p);
        }
        const auto order = triage_order(patients);
        REQUIRE(order.size() == np);
        for (std::size_t i = 1; i < order.size(); ++i) {
            const Priority a = priority(patients[order[i - 1]]);
            const Priority b = priority(patients[order[i]]);
            CHECK(a <= b);
            if (a == b) CHECK(order[i - 1] < order[i]);
        }
    }
}
