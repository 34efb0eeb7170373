#include <algorithm>

#include "doctest.h"
#include "docsim/classical_care.hpp"
#include "oracle_cases.hpp"
#include "test_support.hpp"

using namespace docsim;

TEST_CASE("classical-care worked examples") { testkit::check_module_examples("classical-care"); }

TEST_CASE("choose_doctor agrees with the exhaustive oracle") {
    for (ModelKind model : {ModelKind::classical, ModelKind::css}) {
        RngStream rng(model == ModelKind::classical ? 51 : 52);
        int loyalty_cases = 0;
        for (int i = 0; i < 1000; ++i) {
            const testkit::ChoiceInstance inst = testkit::random_choice_instance(rng, model);
            const auto chosen = choose_doctor(inst.patients[0], inst.doctors, inst.ledger, model);
            INFO("model " << to_string(model) << " instance " << i);
            CHECK(testkit::choice_matches_oracle(inst, chosen));
            if (inst.patients[0].last_doctor_id && chosen == inst.patients[0].last_doctor_id) ++loyalty_cases;
        }
        CHECK(loyalty_cases > 50);
    }
}

TEST_CASE("a busy loyal doctor falls back to the argmax") {
    std::vector<DoctorState> doctors{testkit::make_doctor(0, Credential::high), testkit::make_doctor(1, Credential::low)};
    doctors[0].is_busy = true;
    RatingLedger l;
    l.add_rating(DoctorId{0}, PatientId{0}, 5);
    PatientState p = testkit::make_patient(0, 0.3);
    p.last_doctor_id = DoctorId{0};
    CHECK(choose_doctor(p, doctors, l) == DoctorId{1});
}

TEST_CASE("loyalty needs exactly 5 from this patient for the last doctor") {
    std::vector<DoctorState> doctors{testkit::make_doctor(0, Credential::low), testkit::make_doctor(1, Credential::high)};
    RatingLedger l;
    l.add_rating(DoctorId{0}, PatientId{0}, 4);
    l.add_rating(DoctorId{1}, PatientId{0}, 5);
    PatientState p = testkit::make_patient(0, 0.3, 0.2, 1, 0, 0);
    p.last_doctor_id = DoctorId{0};
    // A 5 given to a different doctor does not trigger loyalty to the last one.
    CHECK(choose_doctor(p, doctors, l) == DoctorId{1});
}

TEST_CASE("healthy patients do not choose") {
    std::vector<DoctorState> doctors{testkit::make_doctor(0)};
    RatingLedger l;
    CHECK(!choose_doctor(testkit::make_patient(0, 0.6), doctors, l).has_value());
}

TEST_CASE("effectiveness stays in [0, 0.7] and credentials never regress") {
    RngStream rng(53);
    for (int i = 0; i < 2000; ++i) {
        DoctorState d = testkit::random_doctor(rng, ModelKind::classical, 0, 1, 1);
        const double e = treatment_effectiveness(d);
        CHECK(e >= 0.0);
        CHECK(e <= 0.7);
        for (int k = 0; k < 5; ++k) {
            const DoctorState before = d;
            d.research_ability = rng.uniform();
            d.is_busy = false;
            treat_patient(d);
            CHECK(testkit::doctor_progress_violations(before, d).empty());
        }
    }
}

TEST_CASE("rating is bounded and monotone in health") {
    int previous = -1;
    for (int i = 0; i <= 1000; ++i) {
        const double h = i / 1000.0;
        const int r = rate_doctor(h);
        CHECK(r >= 0);
        CHECK(r <= 5);
        CHECK(r >= previous);
        previous = r;
    }
}
