#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "docsim/agents.hpp"
#include "docsim/rng.hpp"

namespace docsim {

/// Global infection sequence for one run. Orders are handed out strictly
/// increasing and never reused.
class InfectionCounter {
public:
    std::uint64_t peek() const { return next_; }
    std::uint64_t take() { return next_++; }

private:
    std::uint64_t next_ = 0;
};

inline constexpr double kInfectionHealthFloor = 0.1;

/// True if `infect` would change the patient.
inline bool infection_eligible(const PatientState& patient) {
    return !patient.is_infected && patient.health_level > kInfectionHealthFloor;
}

/// Applies one infection of the given severity if eligible. Returns whether
/// the patient changed.
bool infect(PatientState& patient, std::uint64_t order, double severity = 0.2);

/// Infects min(n, #eligible) eligible patients sampled uniformly without
/// replacement, assigning consecutive counter orders in sample order.
/// Returns the number of patients infected.
std::size_t spread_infection(std::span<PatientState> patients, std::size_t n, InfectionCounter& counter,
                             RngStream& rng, double severity = 0.2);

/// Triage key: infected before healthy, earlier infection first, then lower
/// health. Sorting ascending on this triple yields treatment order.
struct Priority {
    static constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();

    bool not_infected = true;
    std::uint64_t order = kNever;
    double health = 0.0;

    auto operator<=>(const Priority&) const = default;
};

Priority priority(const PatientState& patient);

/// Patient indices in treatment order; equal priorities fall back to
/// ascending patient id.
std::vector<std::size_t> triage_order(std::span<const PatientState> patients);

inline bool needs_doctor(const PatientState& patient, double threshold = 0.6) {
    return patient.health_level < threshold;
}

}  // namespace docsim
