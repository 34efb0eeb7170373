#pragma once

#include <span>

#include "docsim/agents.hpp"
#include "docsim/config.hpp"
#include "docsim/rating_ledger.hpp"

namespace docsim {

/// Tie-weighted mean of the respect colleagues hold for `doctor`, weighted by
/// `doctor`'s own ties to them; 0 when those ties sum to 0.
double mean_weighted_respects(const DoctorState& doctor, std::span<const DoctorState> all_doctors);

/// respect[j] <- S_j * (treatment_factor(credential_j) + weighted valuation of
/// j's ratings through this doctor's patient ties), for every colleague j.
void update_respect_for_colleagues(DoctorState& doctor, std::span<const DoctorState> all_doctors,
                                   const RatingLedger& ledger);

/// confidence <- w_wmrat * mean weighted ratings + w_mwres * mean weighted respects.
void update_confidence(DoctorState& doctor, const RatingLedger& ledger, std::span<const DoctorState> all_doctors);

/// Pre-round sweep over the whole doctor population in ascending id order.
/// Every confidence and every new respect value is computed from the
/// respects held at the start of the sweep; new respects are committed at
/// the end.
void refresh_social_standing(std::span<DoctorState> doctors, const RatingLedger& ledger);

double treatment_effectiveness_css(const DoctorState& doctor, double cap = 0.7);

/// treat_patient with confidence-aware effectiveness.
double treat_patient_css(DoctorState& doctor, double cap = 0.7);

double judge_doctor_css(const PatientState& patient, const DoctorState& doctor, const RatingLedger& ledger);

/// min(5, round_1(base * (1 + 0.1 * tie))), base = 5 above the threshold and
/// 5 * health / threshold below it. round_1 rounds half away from zero.
double rate_doctor_css(double health, double tie_to_doctor, double perfect_threshold = 0.8);

double receive_treatment_css(PatientState& patient, DoctorState& doctor, RatingLedger& ledger,
                             const CareThresholds& thresholds = {});

}  // namespace docsim
