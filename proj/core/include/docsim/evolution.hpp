#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "docsim/agents.hpp"
#include "docsim/config.hpp"
#include "docsim/rating_ledger.hpp"
#include "docsim/rng.hpp"

namespace docsim {

/// Mean rating of the doctor; 0 when unrated.
double fitness_doctor(const DoctorState& doctor, const RatingLedger& ledger);

/// Mean of the health history; the current health level when the history is empty.
double fitness_patient(const PatientState& patient);

struct TournamentResult {
    std::size_t winner = 0;
    std::size_t loser = 0;
};

/// Samples k distinct members uniformly (k integer draws) and returns the
/// best and the worst under the (fitness descending, index ascending) order.
/// Precondition: 1 <= k <= population.size().
template <class T, class Fitness>
TournamentResult tournament_select(std::span<const T> population, std::size_t k, Fitness&& fitness,
                                   RngStream& rng) {
    std::vector<std::size_t> entrants = rng.sample(population.size(), k);
    std::vector<std::pair<double, std::size_t>> scored;
    scored.reserve(entrants.size());
    for (std::size_t i : entrants) scored.emplace_back(fitness(population[i]), i);
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    return TournamentResult{scored.front().second, scored.back().second};
}

/// Indices of the `count` fittest members under the same order as the tournament.
template <class T, class Fitness>
std::vector<std::size_t> select_elites(std::span<const T> population, std::size_t count, Fitness&& fitness) {
    std::vector<double> scores(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) scores[i] = fitness(population[i]);
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    count = std::min(count, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (scores[a] != scores[b]) return scores[a] > scores[b];
                          return a < b;
                      });
    order.resize(count);
    return order;
}

/// One microbial GA step over a population.
///
/// Elites are snapshotted first. Each tournament then draws its entrants,
/// one uniform for the crossover gate and one for the mutation gate; the
/// loser receives crossover(loser, winner) and/or mutate(loser). Elite
/// snapshots are written back verbatim at the end.
template <class T, class Fitness, class Mutate, class Crossover>
void evolve_population(std::span<T> population, const GaParams& params, Fitness&& fitness, Mutate&& mutate,
                       Crossover&& crossover, RngStream& rng) {
    if (population.empty()) return;
    const std::span<const T> view(population.data(), population.size());

    std::vector<std::pair<std::size_t, T>> elites;
    for (std::size_t i : select_elites(view, params.num_elites, fitness)) elites.emplace_back(i, population[i]);

    const std::size_t k = std::min(params.tournament_size, population.size());
    for (std::size_t t = 0; t < params.tournaments_per_round; ++t) {
        const TournamentResult result = tournament_select(view, k, fitness, rng);
        const bool do_crossover = rng.uniform() < params.crossover_chance;
        if (do_crossover && result.winner != result.loser) {
            crossover(population[result.loser], population[result.winner], rng);
        }
        const bool do_mutate = rng.uniform() < params.mutation_chance;
        if (do_mutate) mutate(population[result.loser], rng);
    }

    for (auto& [slot, snapshot] : elites) population[slot] = std::move(snapshot);
}

/// Classical doctor mutation: one of research ability (70%) or empathy moves
/// by a resource-limited amount, scaled by 3 after poor recent feedback
/// (< 3) and by 0.5 otherwise; the amount is drawn from personal resource.
void mutate_doctor_classical(DoctorState& doctor, const RatingLedger& ledger, RngStream& rng);

enum class CssMutationTarget : std::uint8_t { research_ability, empathy, weight_wmrat, weight_mwres, social_tie };

/// Half-open 20% buckets over [0, 1): [0, .2) research, [.2, .4) empathy,
/// [.4, .6) weight_wmrat, [.6, .8) weight_mwres, [.8, 1) one social tie.
CssMutationTarget css_mutation_target(double roll);

/// CSS doctor mutation over five equal buckets: research ability, empathy,
/// weight_wmrat, weight_mwres, or one social tie.
void mutate_doctor_css(DoctorState& doctor, const RatingLedger& ledger, RngStream& rng);

void mutate_patient(PatientState& patient, ModelKind model, RngStream& rng, bool single_tie = false);

void crossover_doctor(DoctorState& loser, const DoctorState& winner, RngStream& rng, ModelKind model);

void crossover_patient(PatientState& loser, const PatientState& winner, RngStream& rng, ModelKind model);

}  // namespace docsim
