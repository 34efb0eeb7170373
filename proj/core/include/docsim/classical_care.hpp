#pragma once

#include <optional>
#include <span>

#include "docsim/agents.hpp"
#include "docsim/config.hpp"
#include "docsim/rating_ledger.hpp"

namespace docsim {

/// Doctor-side credential factor used in effectiveness and respect: 0.1 / 0.2 / 0.3.
double treatment_factor(Credential credential);

/// Patient-side credential score used in judgment: 0.1 / 0.5 / 1.0.
double judgment_score(Credential credential);

double treatment_effectiveness(const DoctorState& doctor, double cap = 0.7);

/// At most one step: low -> medium at research >= 0.5 and experience >= 50,
/// medium -> high at research >= 0.8 and experience >= 80.
void upgrade_credential(DoctorState& doctor);

/// A doctor serves one patient per round: a busy doctor returns 0 untouched.
/// Otherwise marks the doctor busy (until the round-start reset), computes
/// effectiveness, bumps experience, and tries a credential upgrade.
double treat_patient(DoctorState& doctor, double cap = 0.7);

double judge_doctor(const PatientState& patient, const DoctorState& doctor, const RatingLedger& ledger);

/// Judgment routine selected by model.
double judge(ModelKind model, const PatientState& patient, const DoctorState& doctor, const RatingLedger& ledger);

/// Picks a free doctor for a patient that needs one.
///
/// Loyalty: if the patient's last doctor holds a stored rating of exactly 5
/// from this patient and is free, that doctor is returned. Otherwise the free
/// doctor with the highest judgment wins, ties going to the lower id.
/// `doctors` must be dense (doctors[i].id == i).
std::optional<DoctorId> choose_doctor(const PatientState& patient, std::span<const DoctorState> doctors,
                                      const RatingLedger& ledger, ModelKind model = ModelKind::classical,
                                      double needs_doctor_threshold = 0.6);

/// health <- clamp(health + effectiveness, 0.1, 1), appended to the history.
void update_health_level(PatientState& patient, double effectiveness);

/// 5 at or above the threshold, otherwise floor(5 * health / threshold).
int rate_doctor(double health, double perfect_threshold = 0.8);

/// Treats, heals, clears infection, rates, and records the rating.
int receive_treatment(PatientState& patient, DoctorState& doctor, RatingLedger& ledger,
                      const CareThresholds& thresholds = {});

}  // namespace docsim
