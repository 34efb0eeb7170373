#include "docsim/evolution.hpp"

#include <cmath>
#include <numeric>

namespace docsim {

namespace {

double clamp01(double x) { return std::max(0.0, std::min(1.0, x)); }

template <class Key>
void average_shared(TieMap<Key>& loser, const TieMap<Key>& winner) {
    loser.for_each_mut([&](Key key, double& strength) {
        if (const auto other = winner.find(key)) strength = (strength + *other) / 2.0;
    });
}

template <class Key>
void perturb_tie(TieMap<Key>& ties, double amount, RngStream& rng) {
    const Key key = ties.nth_key(rng.index(ties.size()));
    const double change = amount * rng.sign();
    ties.at(key) = clamp01(ties.at(key) + change);
}

template <class Key>
void jitter_ties(TieMap<Key>& ties, RngStream& rng, bool single_tie) {
    if (ties.empty()) return;
    if (single_tie) {
        const Key key = ties.nth_key(rng.index(ties.size()));
        ties.at(key) = clamp01(ties.at(key) + rng.uniform(-0.1, 0.1));
        return;
    }
    ties.for_each_mut([&](Key, double& strength) { strength = clamp01(strength + rng.uniform(-0.1, 0.1)); });
}

// Resource-gated step used by the first two CSS buckets: the move is dropped
// if it would leave [0, 1], and never exceeds the remaining resource.
void resource_gated_step(double& trait, double& personal_resource, double amount, RngStream& rng) {
    const int direction = rng.sign();
    const double change = amount * direction;
    if (trait + change < 0.0 || trait + change > 1.0) return;
    const double actual = std::min(std::abs(change), personal_resource);
    trait += actual * direction;
    personal_resource -= actual;
}

}  // namespace

double fitness_doctor(const DoctorState& doctor, const RatingLedger& ledger) { return ledger.mean_rating(doctor.id); }

double fitness_patient(const PatientState& patient) {
    if (patient.health_history.empty()) return patient.health_level;
    const double sum = std::accumulate(patient.health_history.begin(), patient.health_history.end(), 0.0);
    return sum / static_cast<double>(patient.health_history.size());
}

void mutate_doctor_classical(DoctorState& doctor, const RatingLedger& ledger, RngStream& rng) {
    const double factor = ledger.recent_feedback(doctor.id) < 3.0 ? 3.0 : 0.5;
    double amount = std::min(doctor.personal_resource, rng.uniform(0.0, 0.05)) * factor;
    // The factor can push the amount past what is left; the budget is a hard limit.
    amount = std::min(amount, doctor.personal_resource);

    const double trait_roll = rng.uniform();
    const double change = amount * rng.sign();
    if (trait_roll < 0.7) {
        doctor.research_ability = clamp01(doctor.research_ability + change);
    } else {
        doctor.empathy = clamp01(doctor.empathy + change);
    }
    doctor.personal_resource = std::max(0.0, doctor.personal_resource - amount);
}

CssMutationTarget css_mutation_target(double roll) {
    if (roll < 0.2) return CssMutationTarget::research_ability;
    if (roll < 0.4) return CssMutationTarget::empathy;
    if (roll < 0.6) return CssMutationTarget::weight_wmrat;
    if (roll < 0.8) return CssMutationTarget::weight_mwres;
    return CssMutationTarget::social_tie;
}

void mutate_doctor_css(DoctorState& doctor, const RatingLedger& ledger, RngStream& rng) {
    const double factor = ledger.recent_feedback(doctor.id) < 3.0 ? 1.5 : 0.5;
    const double amount = rng.uniform(0.0, 0.05) * factor;
    const double trait_roll = rng.uniform();

    switch (css_mutation_target(trait_roll)) {
        case CssMutationTarget::research_ability:
            if (doctor.personal_resource > 0.0) {
                resource_gated_step(doctor.research_ability, doctor.personal_resource, amount, rng);
            }
            break;
        case CssMutationTarget::empathy:
            if (doctor.personal_resource > 0.0) {
                resource_gated_step(doctor.empathy, doctor.personal_resource, amount, rng);
            }
            break;
        case CssMutationTarget::weight_wmrat:
            doctor.weight_wmrat = clamp01(doctor.weight_wmrat + amount * rng.sign());
            break;
        case CssMutationTarget::weight_mwres:
            doctor.weight_mwres = clamp01(doctor.weight_mwres + amount * rng.sign());
            break;
        case CssMutationTarget::social_tie:
            if (rng.uniform() < 0.5 && !doctor.social_ties_doctors.empty()) {
                perturb_tie(doctor.social_ties_doctors, amount, rng);
            } else if (!doctor.social_ties_patients.empty()) {
                perturb_tie(doctor.social_ties_patients, amount, rng);
            }
            break;
    }
    doctor.personal_resource = std::max(0.0, doctor.personal_resource);
}

void mutate_patient(PatientState& patient, ModelKind model, RngStream& rng, bool single_tie) {
    const double shift = rng.uniform(-0.05, 0.05);
    patient.cred_weight += shift;
    patient.mean_rating_weight += shift;
    patient.past_rating_weight -= 2.0 * shift;

    patient.resilience = std::max(0.1, std::min(patient.resilience + rng.uniform(-0.05, 0.05), 0.4));

    normalize_judgment_weights(patient);

    if (model != ModelKind::css) return;
    if (rng.uniform() < 0.5) {
        jitter_ties(patient.social_ties_doctors, rng, single_tie);
    } else {
        jitter_ties(patient.social_ties_patients, rng, single_tie);
    }
}

void crossover_doctor(DoctorState& loser, const DoctorState& winner, RngStream& rng, ModelKind model) {
    if (rng.uniform() >= 0.5) return;
    loser.research_ability = (loser.research_ability + winner.research_ability) / 2.0;
    loser.empathy = (loser.empathy + winner.empathy) / 2.0;
    if (model != ModelKind::css) return;
    loser.weight_wmrat = (loser.weight_wmrat + winner.weight_wmrat) / 2.0;
    loser.weight_mwres = (loser.weight_mwres + winner.weight_mwres) / 2.0;
    average_shared(loser.social_ties_doctors, winner.social_ties_doctors);
    average_shared(loser.social_ties_patients, winner.social_ties_patients);
}

void crossover_patient(PatientState& loser, const PatientState& winner, RngStream& rng, ModelKind model) {
    if (rng.uniform() >= 0.5) return;
    loser.resilience = (loser.resilience + winner.resilience) / 2.0;
    loser.cred_weight = (loser.cred_weight + winner.cred_weight) / 2.0;
    loser.mean_rating_weight = (loser.mean_rating_weight + winner.mean_rating_weight) / 2.0;
    loser.past_rating_weight = (loser.past_rating_weight + winner.past_rating_weight) / 2.0;
    normalize_judgment_weights(loser);
    if (model != ModelKind::css) return;
    average_shared(loser.social_ties_doctors, winner.social_ties_doctors);
    average_shared(loser.social_ties_patients, winner.social_ties_patients);
}

}  // namespace docsim
