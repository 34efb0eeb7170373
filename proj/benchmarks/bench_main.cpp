#include <benchmark/benchmark.h>

#include <span>

#include "docsim/classical_care.hpp"
#include "docsim/engine.hpp"
#include "docsim/evolution.hpp"

namespace {

using namespace docsim;

ModelKind model_arg(const benchmark::State& state) {
    return state.range(0) == 0 ? ModelKind::classical : ModelKind::css;
}

// A paper-full sized population that has already played a few rounds, so the
// ledger and health histories are populated.
Simulation warmed_simulation(ModelKind model, std::size_t warmup_rounds) {
    Simulation sim(SimulationConfig::paper_full(model), 42);
    for (std::size_t r = 1; r <= warmup_rounds; ++r) sim.run_round(r);
    return sim;
}

void BM_RunRound(benchmark::State& state) {
    Simulation sim = warmed_simulation(model_arg(state), 5);
    std::size_t round = 6;
    for (auto _ : state) benchmark::DoNotOptimize(sim.run_round(round++));
}
BENCHMARK(BM_RunRound)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_ChooseDoctor(benchmark::State& state) {
    const ModelKind model = model_arg(state);
    Simulation sim = warmed_simulation(model, 10);
    PatientState patient = sim.patients().front();
    patient.health_level = 0.3;
    patient.last_doctor_id.reset();
    for (auto _ : state) {
        benchmark::DoNotOptimize(choose_doctor(patient, sim.doctors(), sim.ledger(), model));
    }
}
BENCHMARK(BM_ChooseDoctor)->Arg(0)->Arg(1);

void BM_EvolveDoctors(benchmark::State& state) {
    const ModelKind model = model_arg(state);
    Simulation sim = warmed_simulation(model, 10);
    GaParams params = sim.config().doctor_ga();
    params.tournaments_per_round = 10;
    const RatingLedger& ledger = sim.ledger();
    const auto fitness = [&](const DoctorState& d) { return fitness_doctor(d, ledger); };
    for (auto _ : state) {
        evolve_population(
            std::span<DoctorState>(sim.mutable_doctors()), params, fitness,
            [&](DoctorState& d, RngStream& rng) {
                if (model == ModelKind::css) {
                    mutate_doctor_css(d, ledger, rng);
                } else {
                    mutate_doctor_classical(d, ledger, rng);
                }
            },
            [&](DoctorState& loser, const DoctorState& winner, RngStream& rng) {
                crossover_doctor(loser, winner, rng, model);
            },
            sim.rng());
    }
}
BENCHMARK(BM_EvolveDoctors)->Arg(0)->Arg(1);

void BM_PaperSingleRun(benchmark::State& state) {
    const SimulationConfig config = SimulationConfig::paper_single(model_arg(state));
    for (auto _ : state) benchmark::DoNotOptimize(run_simulation(config, 123));
}
BENCHMARK(BM_PaperSingleRun)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
