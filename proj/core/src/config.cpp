#include "docsim/config.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "docsim/errors.hpp"

namespace docsim {

std::string_view to_string(ModelKind model) {
    return model == ModelKind::classical ? "classical" : "css";
}

std::optional<ModelKind> parse_model(std::string_view text) {
    if (text == "classical") return ModelKind::classical;
    if (text == "css") return ModelKind::css;
    return std::nullopt;
}

std::string_view to_string(Credential credential) {
    switch (credential) {
        case Credential::low: return "low";
        case Credential::medium: return "medium";
        case Credential::high: return "high";
    }
    return "low";
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

std::size_t default_tournaments(std::size_t population) { return (population + 9) / 10; }

}  // namespace

void SimulationConfig::validate() const {
    require(num_doctors > 0, "num_doctors must be positive");
    require(num_patients > 0, "num_patients must be positive");
    require(num_repeats > 0, "num_repeats must be positive");
    require(num_infected_per_round <= num_patients,
            fmt::format("num_infected_per_round ({}) exceeds num_patients ({})", num_infected_per_round,
                        num_patients));
    require(is_probability(mutation_chance), "mutation_chance must lie in [0, 1]");
    require(is_probability(crossover_chance), "crossover_chance must lie in [0, 1]");
    require(tournament_size > 0, "tournament_size must be positive");
    require(tournament_size <= num_doctors && tournament_size <= num_patients,
            fmt::format("tournament_size ({}) exceeds a population size", tournament_size));
    require(num_elites < num_doctors && num_elites < num_patients,
            fmt::format("num_elites ({}) must be smaller than each population", num_elites));
    require(!tournaments_per_round || *tournaments_per_round > 0, "tournaments_per_round must be positive");
    require(std::isfinite(thresholds.infection_severity) && thresholds.infection_severity >= 0.0,
            "infection_severity must be non-negative");
    require(std::isfinite(thresholds.needs_doctor), "needs_doctor_threshold must be finite");
    require(std::isfinite(thresholds.rating_perfect) && thresholds.rating_perfect > 0.0,
            "rating_perfect_threshold must be positive");
    require(std::isfinite(thresholds.effectiveness_cap) && thresholds.effectiveness_cap >= 0.0,
            "effectiveness_cap must be non-negative");
    require(is_probability(initial_confidence_weight), "initial_confidence_weight must lie in [0, 1]");
}

GaParams SimulationConfig::doctor_ga() const {
    return GaParams{tournament_size, num_elites, mutation_chance, crossover_chance,
                    tournaments_per_round.value_or(default_tournaments(num_doctors))};
}

GaParams SimulationConfig::patient_ga() const {
    return GaParams{tournament_size, num_elites, mutation_chance, crossover_chance,
                    tournaments_per_round.value_or(default_tournaments(num_patients))};
}

SimulationConfig SimulationConfig::defaults_for(ModelKind model) {
    SimulationConfig config;
    config.model = model;
    if (model == ModelKind::css) {
        config.mutation_chance = 0.01;
        config.crossover_chance = 0.5;
    }
    return config;
}

SimulationConfig SimulationConfig::paper_full(ModelKind model) {
    SimulationConfig config = defaults_for(model);
    config.num_doctors = 100;
    config.num_patients = 1000;
    config.num_rounds = 100;
    config.num_infected_per_round = 200;
    config.num_repeats = 50;
    return config;
}

SimulationConfig SimulationConfig::paper_single(ModelKind model) {
    SimulationConfig config = defaults_for(model);
    config.num_doctors = 15;
    config.num_patients = 100;
    config.num_rounds = 20;
    config.num_infected_per_round = 100;
    config.num_repeats = 1;
    return config;
}

}  // namespace docsim
