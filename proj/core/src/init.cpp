#include "docsim/init.hpp"

#include <algorithm>
#include <type_traits>

#include <fmt/format.h>

#include "docsim/errors.hpp"

namespace docsim {

namespace {

template <class Id>
void require_unique(Id id, std::span<const Id> ids, const char* kind) {
    const auto occurrences = std::count(ids.begin(), ids.end(), id);
    if (occurrences != 1) {
        throw InitError(fmt::format("{} id {} occurs {} times in its population", kind, id.value, occurrences));
    }
}

template <class Id>
std::size_t key_space(std::span<const Id> ids) {
    std::size_t space = 0;
    for (Id id : ids) space = std::max(space, id.index() + 1);
    return space;
}

template <class Id, class Self>
TieMap<Id> draw_ties(std::span<const Id> targets, const Self* self, RngStream& rng, bool zero) {
    TieMap<Id> ties(key_space(targets));
    for (Id target : targets) {
        if constexpr (std::is_same_v<Id, Self>) {
            if (self != nullptr && target == *self) continue;
        }
        ties.set(target, zero ? 0.0 : rng.uniform());
    }
    return ties;
}

}  // namespace

DoctorState init_doctor(DoctorId id, RngStream& rng, ModelKind model, std::span<const DoctorId> doctor_ids,
                        std::span<const PatientId> patient_ids, const InitOptions& options) {
    require_unique(id, doctor_ids, "doctor");

    DoctorState doctor;
    doctor.id = id;
    doctor.research_ability = rng.uniform(0.2, 0.6);
    doctor.empathy = rng.uniform(0.2, 0.7);
    doctor.personal_resource_constraint = 0.8;
    doctor.personal_resource = 0.2;  // 1 - constraint
    doctor.technological_resource_constraint = rng.uniform(0.2, 0.5);
    doctor.credential = static_cast<Credential>(rng.index(3));

    if (model == ModelKind::css) {
        doctor.social_ties_doctors = draw_ties(doctor_ids, &id, rng, options.zero_social_ties);
        doctor.social_ties_patients =
            draw_ties<PatientId, DoctorId>(patient_ids, nullptr, rng, options.zero_social_ties);
        doctor.respect_for_colleagues = TieMap<DoctorId>(key_space(doctor_ids));
        for (DoctorId other : doctor_ids) {
            if (other != id) doctor.respect_for_colleagues.set(other, 0.0);
        }
        doctor.weight_wmrat = options.initial_confidence_weight;
        doctor.weight_mwres = options.initial_confidence_weight;
    }
    return doctor;
}

PatientState init_patient(PatientId id, RngStream& rng, ModelKind model, std::span<const DoctorId> doctor_ids,
                          std::span<const PatientId> patient_ids, const InitOptions& options) {
    require_unique(id, patient_ids, "patient");

    PatientState patient;
    patient.id = id;
    patient.health_level = rng.uniform(0.5, 1.0);
    patient.resilience = rng.uniform(0.1, 0.4);
    patient.cred_weight = rng.uniform(0.0, 1.0);
    patient.mean_rating_weight = rng.uniform(0.0, 1.0);
    patient.past_rating_weight = rng.uniform(0.0, 2.0);
    normalize_judgment_weights(patient);

    if (model == ModelKind::css) {
        patient.social_ties_doctors =
            draw_ties<DoctorId, PatientId>(doctor_ids, nullptr, rng, options.zero_social_ties);
        patient.social_ties_patients = draw_ties(patient_ids, &id, rng, options.zero_social_ties);
    }
    return patient;
}

Populations init_populations(std::size_t num_doctors, std::size_t num_patients, ModelKind model, RngStream& rng,
                             const InitOptions& options) {
    std::vector<DoctorId> doctor_ids(num_doctors);
    for (std::size_t i = 0; i < num_doctors; ++i) doctor_ids[i] = DoctorId{static_cast<std::uint32_t>(i)};
    std::vector<PatientId> patient_ids(num_patients);
    for (std::size_t i = 0; i < num_patients; ++i) patient_ids[i] = PatientId{static_cast<std::uint32_t>(i)};

    Populations populations;
    populations.doctors.reserve(num_doctors);
    for (DoctorId id : doctor_ids) {
        populations.doctors.push_back(init_doctor(id, rng, model, doctor_ids, patient_ids, options));
    }
    populations.patients.reserve(num_patients);
    for (PatientId id : patient_ids) {
        populations.patients.push_back(init_patient(id, rng, model, doctor_ids, patient_ids, options));
    }
    return populations;
}

void normalize_judgment_weights(PatientState& patient) {
    patient.cred_weight = std::max(0.0, patient.cred_weight);
    patient.mean_rating_weight = std::max(0.0, patient.mean_rating_weight);
    patient.past_rating_weight = std::max(0.0, patient.past_rating_weight);
    const double total = patient.cred_weight + patient.mean_rating_weight + patient.past_rating_weight;
    if (total > 0.0) {
        patient.cred_weight /= total;
        patient.mean_rating_weight /= total;
        patient.past_rating_weight /= total;
    } else {
        patient.cred_weight = 1.0 / 3.0;
        patient.mean_rating_weight = 1.0 / 3.0;
        patient.past_rating_weight = 1.0 / 3.0;
    }
}

}  // namespace docsim
