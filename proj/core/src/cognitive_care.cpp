#include "docsim/cognitive_care.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "docsim/classical_care.hpp"

namespace docsim {

double mean_weighted_respects(const DoctorState& doctor, std::span<const DoctorState> all_doctors) {
    double weighted = 0.0;
    double strengths = 0.0;
    for (const DoctorState& other : all_doctors) {
        if (other.id == doctor.id) continue;
        const double respect = other.respect_for_colleagues.get_or_zero(doctor.id);
        const double strength = doctor.social_ties_doctors.get_or_zero(other.id);
        weighted += respect * strength;
        strengths += strength;
    }
    return strengths > 0.0 ? weighted / strengths : 0.0;
}

namespace {

TieMap<DoctorId> colleague_respects(const DoctorState& doctor, std::span<const DoctorState> all_doctors,
                                    const RatingLedger& ledger) {
    TieMap<DoctorId> respects = doctor.respect_for_colleagues;
    for (const DoctorState& other : all_doctors) {
        if (other.id == doctor.id) continue;
        const double valuation = ledger.weighted_valuation(other.id, doctor.social_ties_patients);
        const double strength = doctor.social_ties_doctors.get_or_zero(other.id);
        respects.set(other.id, strength * (treatment_factor(other.credential) + valuation));
    }
    return respects;
}

}  // namespace

void update_respect_for_colleagues(DoctorState& doctor, std::span<const DoctorState> all_doctors,
                                   const RatingLedger& ledger) {
    doctor.respect_for_colleagues = colleague_respects(doctor, all_doctors, ledger);
}

void update_confidence(DoctorState& doctor, const RatingLedger& ledger, std::span<const DoctorState> all_doctors) {
    const double ratings = ledger.mean_weighted_ratings(doctor.id, doctor.social_ties_patients);
    const double respects = mean_weighted_respects(doctor, all_doctors);
    doctor.confidence = doctor.weight_wmrat * ratings + doctor.weight_mwres * respects;
}

void refresh_social_standing(std::span<DoctorState> doctors, const RatingLedger& ledger) {
    std::vector<TieMap<DoctorId>> next_respects;
    next_respects.reserve(doctors.size());
    for (DoctorState& doctor : doctors) {
        update_confidence(doctor, ledger, doctors);
        next_respects.push_back(colleague_respects(doctor, doctors, ledger));
    }
    for (std::size_t i = 0; i < doctors.size(); ++i) doctors[i].respect_for_colleagues = std::move(next_respects[i]);
}

double treatment_effectiveness_css(const DoctorState& doctor, double cap) {
    const double raw = (treatment_factor(doctor.credential) + doctor.empathy + doctor.confidence) *
                       (1.0 - doctor.technological_resource_constraint);
    return std::min(raw, cap);
}

double treat_patient_css(DoctorState& doctor, double cap) {
    if (doctor.is_busy) return 0.0;
    doctor.is_busy = true;
    const double effectiveness = treatment_effectiveness_css(doctor, cap);
    ++doctor.experience;
    upgrade_credential(doctor);
    return effectiveness;
}

double judge_doctor_css(const PatientState& patient, const DoctorState& doctor, const RatingLedger& ledger) {
    const double credential_term = judgment_score(doctor.credential) * patient.social_ties_doctors.get_or_zero(doctor.id);

    // Peers are the patients this patient holds a tie to; iterating the
    // doctor's raters visits the same (rating, tie) pairs.
    double weighted = 0.0;
    double strengths = 0.0;
    ledger.for_each_rating(doctor.id, [&](PatientId rater, double rating) {
        if (const auto tie = patient.social_ties_patients.find(rater)) {
            weighted += rating * *tie;
            strengths += *tie;
        }
    });
    const double peer_mean = strengths > 0.0 ? weighted / strengths : 0.0;
    const double past = ledger.rating_by_patient(doctor.id, patient.id).value_or(0.0);

    return patient.cred_weight * credential_term + patient.mean_rating_weight * peer_mean +
           patient.past_rating_weight * past;
}

double rate_doctor_css(double health, double tie_to_doctor, double perfect_threshold) {
    const double base = health >= perfect_threshold ? 5.0 : std::max(0.0, 5.0 * (health / perfect_threshold));
    const double adjusted = base * (1.0 + 0.1 * tie_to_doctor);
    return std::min(5.0, std::round(adjusted * 10.0) / 10.0);
}

double receive_treatment_css(PatientState& patient, DoctorState& doctor, RatingLedger& ledger,
                             const CareThresholds& thresholds) {
    const double effectiveness =
        treat_patient_css(doctor, thresholds.effectiveness_cap) * (1.0 - patient.resilience);
    update_health_level(patient, effectiveness);
    patient.is_infected = false;
    const double rating = rate_doctor_css(patient.health_level, patient.social_ties_doctors.get_or_zero(doctor.id),
                                          thresholds.rating_perfect);
    ledger.add_rating(doctor.id, patient.id, rating);
    patient.last_doctor_id = doctor.id;
    return rating;
}

}  // namespace docsim
