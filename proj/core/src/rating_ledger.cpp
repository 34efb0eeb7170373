#include "docsim/rating_ledger.hpp"

#include <cmath>

#include <fmt/format.h>

#include "docsim/errors.hpp"

namespace docsim {

void RatingLedger::add_rating(DoctorId doctor, PatientId patient, double rating) {
    if (!(rating >= kMinRating && rating <= kMaxRating)) {
        throw ContractViolation(fmt::format("rating {} for doctor {} by patient {} is outside [0, 5]", rating,
                                            doctor.value, patient.value));
    }
    if (doctor.index() >= by_doctor_.size()) by_doctor_.resize(doctor.index() + 1);
    DoctorRatings& entry = by_doctor_[doctor.index()];
    const auto [it, inserted] = entry.slot.try_emplace(patient.value, entry.latest.size());
    if (inserted) {
        entry.latest.emplace_back(patient, rating);
    } else {
        entry.latest[it->second].second = rating;
    }
    entry.recent = rating;
    log_.push_back(RatingEvent{doctor, patient, rating});
}

const RatingLedger::DoctorRatings* RatingLedger::find(DoctorId doctor) const {
    if (doctor.index() >= by_doctor_.size()) return nullptr;
    const DoctorRatings& entry = by_doctor_[doctor.index()];
    return entry.latest.empty() ? nullptr : &entry;
}

double RatingLedger::mean_rating(DoctorId doctor) const {
    const DoctorRatings* entry = find(doctor);
    if (entry == nullptr) return 0.0;
    double sum = 0.0;
    for (const auto& [patient, rating] : entry->latest) sum += rating;
    return sum / static_cast<double>(entry->latest.size());
}

std::optional<double> RatingLedger::rating_by_patient(DoctorId doctor, PatientId patient) const {
    const DoctorRatings* entry = find(doctor);
    if (entry == nullptr) return std::nullopt;
    const auto it = entry->slot.find(patient.value);
    if (it == entry->slot.end()) return std::nullopt;
    return entry->latest[it->second].second;
}

double RatingLedger::recent_feedback(DoctorId doctor) const {
    const DoctorRatings* entry = find(doctor);
    return entry != nullptr && entry->recent ? *entry->recent : kNeutralFeedback;
}

double RatingLedger::mean_weighted_ratings(DoctorId doctor, const TieMap<PatientId>& ties) const {
    const DoctorRatings* entry = find(doctor);
    if (entry == nullptr) return 0.0;
    double weighted = 0.0;
    double strengths = 0.0;
    for (const auto& [patient, rating] : entry->latest) {
        const double s = ties.get_or_zero(patient);
        if (s > 0.0) {
            weighted += rating * s;
            strengths += s;
        }
    }
    return strengths > 0.0 ? weighted / strengths : 0.0;
}

double RatingLedger::weighted_valuation(DoctorId doctor, const TieMap<PatientId>& evaluator_ties) const {
    const DoctorRatings* entry = find(doctor);
    if (entry == nullptr) return 0.0;
    double total = 0.0;
    for (const auto& [patient, rating] : entry->latest) total += rating * evaluator_ties.get_or_zero(patient);
    return total;
}

std::size_t RatingLedger::rating_count(DoctorId doctor) const {
    const DoctorRatings* entry = find(doctor);
    return entry == nullptr ? 0 : entry->latest.size();
}

}  // namespace docsim
