#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "docsim/ties.hpp"

namespace docsim {

struct RatingEvent {
    DoctorId doctor;
    PatientId patient;
    double rating = 0.0;

    bool operator==(const RatingEvent&) const = default;
};

/// Latest rating per (doctor, patient) plus an append-only arrival log.
///
/// A re-rating by the same patient overwrites that patient's entry for the
/// doctor but is still appended to the log; the log alone defines recency.
class RatingLedger {
public:
    static constexpr double kMinRating = 0.0;
    static constexpr double kMaxRating = 5.0;
    static constexpr double kNeutralFeedback = 3.0;

    /// Throws ContractViolation unless rating is in [0, 5].
    void add_rating(DoctorId doctor, PatientId patient, double rating);

    /// Mean of the doctor's current per-patient ratings; 0 when unrated.
    double mean_rating(DoctorId doctor) const;

    std::optional<double> rating_by_patient(DoctorId doctor, PatientId patient) const;

    /// Most recently logged rating for the doctor; 3 when unrated.
    double recent_feedback(DoctorId doctor) const;

    /// sum(r_i * s_i) / sum(s_i) over raters with s_i > 0; 0 if the
    /// denominator vanishes or the doctor is unrated.
    double mean_weighted_ratings(DoctorId doctor, const TieMap<PatientId>& ties) const;

    /// Unnormalized sum(r_i * s_i) over every rater of the doctor.
    double weighted_valuation(DoctorId doctor, const TieMap<PatientId>& evaluator_ties) const;

    std::size_t rating_count(DoctorId doctor) const;

    /// Visit (patient, rating) for the doctor's current ratings in first-rating order.
    template <class F>
    void for_each_rating(DoctorId doctor, F&& f) const {
        if (doctor.index() >= by_doctor_.size()) return;
        for (const auto& [patient, rating] : by_doctor_[doctor.index()].latest) f(patient, rating);
    }

    std::span<const RatingEvent> log() const { return log_; }

    bool operator==(const RatingLedger& other) const { return log_ == other.log_; }

private:
    struct DoctorRatings {
        std::vector<std::pair<PatientId, double>> latest;
        std::unordered_map<std::uint32_t, std::size_t> slot;
        std::optional<double> recent;
    };

    const DoctorRatings* find(DoctorId doctor) const;

    std::vector<DoctorRatings> by_doctor_;
    std::vector<RatingEvent> log_;
};

}  // namespace docsim
