#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "docsim/agents.hpp"

namespace docsim {

/// Thresholds shared by the care operations. Defaults are the model's
/// published constants.
struct CareThresholds {
    double infection_severity = 0.2;
    double needs_doctor = 0.6;
    double rating_perfect = 0.8;
    double effectiveness_cap = 0.7;
};

/// Hyper-parameters of one microbial GA step over one population.
struct GaParams {
    std::size_t tournament_size = 5;
    std::size_t num_elites = 1;
    double mutation_chance = 0.5;
    double crossover_chance = 0.3;
    std::size_t tournaments_per_round = 1;
};

struct SimulationConfig {
    ModelKind model = ModelKind::classical;
    std::size_t num_doctors = 15;
    std::size_t num_patients = 100;
    std::size_t num_rounds = 20;
    std::size_t num_infected_per_round = 100;
    std::size_t num_repeats = 1;

    CareThresholds thresholds;

    double mutation_chance = 0.5;
    double crossover_chance = 0.3;
    std::size_t tournament_size = 5;
    std::size_t num_elites = 1;
    /// Unset means ceil(population / 10), computed per population.
    std::optional<std::size_t> tournaments_per_round;

    std::uint64_t base_seed = 0;

    /// Capture a network snapshot every k rounds (CSS only); 0 disables.
    std::size_t snapshot_every = 0;

    /// CSS: initialize every tie strength to 0 without consuming draws.
    bool zero_social_ties = false;
    /// CSS: starting value of both confidence weights.
    double initial_confidence_weight = 0.5;
    /// CSS: patient mutation perturbs one random tie of the chosen class
    /// instead of every tie.
    bool single_tie_patient_mutation = false;

    /// Throws ConfigError describing the first violated constraint.
    void validate() const;

    GaParams doctor_ga() const;
    GaParams patient_ga() const;

    /// Model-specific GA probabilities (0.5 / 0.3 classical, 0.01 / 0.5 CSS).
    static SimulationConfig defaults_for(ModelKind model);
    /// 100 doctors, 1000 patients, 100 rounds, 200 infections, 50 repeats.
    static SimulationConfig paper_full(ModelKind model);
    /// 15 doctors, 100 patients, 20 rounds, every patient infected, 1 repeat.
    static SimulationConfig paper_single(ModelKind model);
};

}  // namespace docsim
