#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "docsim/ties.hpp"

namespace docsim {

enum class ModelKind : std::uint8_t { classical, css };

std::string_view to_string(ModelKind model);
std::optional<ModelKind> parse_model(std::string_view text);

/// Doctor qualification; only ever moves low -> medium -> high.
enum class Credential : std::uint8_t { low = 0, medium = 1, high = 2 };

std::string_view to_string(Credential credential);

struct DoctorState {
    DoctorId id;
    std::uint32_t experience = 0;
    double research_ability = 0.0;
    double empathy = 0.0;
    double personal_resource_constraint = 0.8;
    double personal_resource = 0.2;
    double technological_resource_constraint = 0.0;
    Credential credential = Credential::low;
    bool is_busy = false;

    // Cognitive-social-system extensions; left empty / zero in the classical model.
    TieMap<DoctorId> social_ties_doctors;
    TieMap<PatientId> social_ties_patients;
    TieMap<DoctorId> respect_for_colleagues;
    double confidence = 0.0;
    double weight_wmrat = 0.0;
    double weight_mwres = 0.0;

    bool operator==(const DoctorState&) const = default;
};

struct PatientState {
    PatientId id;
    double health_level = 1.0;
    double resilience = 0.1;
    double cred_weight = 1.0 / 3.0;
    double mean_rating_weight = 1.0 / 3.0;
    double past_rating_weight = 1.0 / 3.0;
    bool is_infected = false;
    std::optional<std::uint64_t> infected_order;
    std::optional<DoctorId> last_doctor_id;
    std::vector<double> health_history;

    TieMap<DoctorId> social_ties_doctors;
    TieMap<PatientId> social_ties_patients;

    bool operator==(const PatientState&) const = default;
};

/// Rescale the three judgment weights to sum to 1. Negative components are
/// first floored at 0; a non-positive total resets all three to 1/3.
void normalize_judgment_weights(PatientState& patient);

}  // namespace docsim
