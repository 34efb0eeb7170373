#pragma once

#include <span>
#include <vector>

#include "docsim/agents.hpp"
#include "docsim/rng.hpp"

namespace docsim {

struct InitOptions {
    /// CSS: ties start at 0 and consume no draws.
    bool zero_social_ties = false;
    double initial_confidence_weight = 0.5;
};

// Draw order (one stream per run, consumed in this exact sequence):
//   doctor:  research U(0.2,0.6), empathy U(0.2,0.7), tech constraint U(0.2,0.5),
//            credential index(3); CSS: doctor ties (ascending id, self skipped),
//            then patient ties (ascending id).
//   patient: health U(0.5,1), resilience U(0.1,0.4), raw weights U(0,1), U(0,1),
//            U(0,2); CSS: doctor ties, then patient ties (self skipped).
// Populations are initialized doctors first, then patients, each in id order.

/// `doctor_ids` is the whole doctor population (including `id`); `id` must
/// occur in it exactly once or InitError is thrown.
DoctorState init_doctor(DoctorId id, RngStream& rng, ModelKind model, std::span<const DoctorId> doctor_ids,
                        std::span<const PatientId> patient_ids, const InitOptions& options = {});

PatientState init_patient(PatientId id, RngStream& rng, ModelKind model, std::span<const DoctorId> doctor_ids,
                          std::span<const PatientId> patient_ids, const InitOptions& options = {});

struct Populations {
    std::vector<DoctorState> doctors;
    std::vector<PatientState> patients;
};

/// Dense populations: doctor i has DoctorId{i}, patient j has PatientId{j}.
Populations init_populations(std::size_t num_doctors, std::size_t num_patients, ModelKind model, RngStream& rng,
                             const InitOptions& options = {});

}  // namespace docsim
