#include "docsim/infection.hpp"

#include <algorithm>
#include <numeric>

namespace docsim {

bool infect(PatientState& patient, std::uint64_t order, double severity) {
    if (!infection_eligible(patient)) return false;
    patient.health_level = std::max(0.0, patient.health_level - severity);
    patient.is_infected = true;
    patient.infected_order = order;
    return true;
}

std::size_t spread_infection(std::span<PatientState> patients, std::size_t n, InfectionCounter& counter,
                             RngStream& rng, double severity) {
    std::vector<std::size_t> eligible;
    eligible.reserve(patients.size());
    for (std::size_t i = 0; i < patients.size(); ++i) {
        if (infection_eligible(patients[i])) eligible.push_back(i);
    }
    std::size_t infected = 0;
    for (std::size_t pick : rng.sample(eligible.size(), n)) {
        if (infect(patients[eligible[pick]], counter.peek(), severity)) {
            counter.take();
            ++infected;
        }
    }
    return infected;
}

Priority priority(const PatientState& patient) {
    if (patient.is_infected) return Priority{false, patient.infected_order.value_or(0), patient.health_level};
    return Priority{true, Priority::kNever, patient.health_level};
}

std::vector<std::size_t> triage_order(std::span<const PatientState> patients) {
    std::vector<Priority> keys(patients.size());
    std::transform(patients.begin(), patients.end(), keys.begin(), priority);
    std::vector<std::size_t> order(patients.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return patients[a].id < patients[b].id;
    });
    return order;
}

}  // namespace docsim
