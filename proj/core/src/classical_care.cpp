#include "docsim/classical_care.hpp"

#include <algorithm>
#include <cmath>

#include "docsim/cognitive_care.hpp"
#include "docsim/infection.hpp"

namespace docsim {

double treatment_factor(Credential credential) {
    switch (credential) {
        case Credential::low: return 0.1;
        case Credential::medium: return 0.2;
        case Credential::high: return 0.3;
    }
    return 0.1;
}

double judgment_score(Credential credential) {
    switch (credential) {
        case Credential::low: return 0.1;
        case Credential::medium: return 0.5;
        case Credential::high: return 1.0;
    }
    return 0.1;
}

double treatment_effectiveness(const DoctorState& doctor, double cap) {
    const double raw =
        (treatment_factor(doctor.credential) + doctor.empathy) * (1.0 - doctor.technological_resource_constraint);
    return std::min(raw, cap);
}

void upgrade_credential(DoctorState& doctor) {
    if (doctor.credential == Credential::low && doctor.research_ability >= 0.5 && doctor.experience >= 50) {
        doctor.credential = Credential::medium;
    } else if (doctor.credential == Credential::medium && doctor.research_ability >= 0.8 &&
               doctor.experience >= 80) {
        doctor.credential = Credential::high;
    }
}

double treat_patient(DoctorState& doctor, double cap) {
    if (doctor.is_busy) return 0.0;
    doctor.is_busy = true;
    const double effectiveness = treatment_effectiveness(doctor, cap);
    ++doctor.experience;
    upgrade_credential(doctor);
    return effectiveness;
}

double judge_doctor(const PatientState& patient, const DoctorState& doctor, const RatingLedger& ledger) {
    const double past = ledger.rating_by_patient(doctor.id, patient.id).value_or(0.0);
    return patient.cred_weight * judgment_score(doctor.credential) +
           patient.mean_rating_weight * ledger.mean_rating(doctor.id) + patient.past_rating_weight * past;
}

double judge(ModelKind model, const PatientState& patient, const DoctorState& doctor, const RatingLedger& ledger) {
    return model == ModelKind::css ? judge_doctor_css(patient, doctor, ledger)
                                   : judge_doctor(patient, doctor, ledger);
}

std::optional<DoctorId> choose_doctor(const PatientState& patient, std::span<const DoctorState> doctors,
                                      const RatingLedger& ledger, ModelKind model, double needs_doctor_threshold) {
    if (!needs_doctor(patient, needs_doctor_threshold)) return std::nullopt;

    if (patient.last_doctor_id && patient.last_doctor_id->index() < doctors.size()) {
        const DoctorState& last = doctors[patient.last_doctor_id->index()];
        if (!last.is_busy && ledger.rating_by_patient(last.id, patient.id) == 5.0) return last.id;
    }

    // Past this point no free doctor is both the last doctor and rated 5, so
    // excluding the loyal doctor from the candidates would change nothing.
    std::optional<DoctorId> best;
    double best_score = 0.0;
    for (const DoctorState& doctor : doctors) {
        if (doctor.is_busy) continue;
        const double score = judge(model, patient, doctor, ledger);
        if (!best || score > best_score) {
            best = doctor.id;
            best_score = score;
        }
    }
    return best;
}

void update_health_level(PatientState& patient, double effectiveness) {
    patient.health_level = std::max(0.1, std::min(1.0, patient.health_level + effectiveness));
    patient.health_history.push_back(patient.health_level);
}

int rate_doctor(double health, double perfect_threshold) {
    if (health >= perfect_threshold) return 5;
    return std::max(0, static_cast<int>(5.0 * (health / perfect_threshold)));
}

int receive_treatment(PatientState& patient, DoctorState& doctor, RatingLedger& ledger,
                      const CareThresholds& thresholds) {
    const double effectiveness = treat_patient(doctor, thresholds.effectiveness_cap) * (1.0 - patient.resilience);
    update_health_level(patient, effectiveness);
    patient.is_infected = false;
    const int rating = rate_doctor(patient.health_level, thresholds.rating_perfect);
    ledger.add_rating(doctor.id, patient.id, rating);
    patient.last_doctor_id = doctor.id;
    return rating;
}

}  // namespace docsim
