#include "docsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "docsim/classical_care.hpp"
#include "docsim/cognitive_care.hpp"
#include "docsim/errors.hpp"
#include "docsim/evolution.hpp"
#include "docsim/init.hpp"

namespace docsim {

const std::array<std::string_view, RoundMetrics::kFieldCount>& RoundMetrics::field_names() {
    static const std::array<std::string_view, kFieldCount> names = {
        "doctor_fitness",     "patient_fitness",    "research_ability", "empathy",
        "weight_wmrat",       "weight_mwres",       "cred_weight",      "mean_rating_weight",
        "past_rating_weight", "resilience",         "confidence",       "infections",
        "treatments",         "untreated_seekers"};
    return names;
}

std::array<double, RoundMetrics::kFieldCount> RoundMetrics::values() const {
    return {doctor_fitness,
            patient_fitness,
            research_ability,
            empathy,
            weight_wmrat,
            weight_mwres,
            cred_weight,
            mean_rating_weight,
            past_rating_weight,
            resilience,
            confidence,
            static_cast<double>(infections),
            static_cast<double>(treatments),
            static_cast<double>(untreated_seekers)};
}

std::string node_id(DoctorId id) { return fmt::format("d{}", id.value); }
std::string node_id(PatientId id) { return fmt::format("p{}", id.value); }

Simulation::Simulation(SimulationConfig config, std::uint64_t run_seed, std::size_t run_id)
    : config_(std::move(config)), run_id_(run_id), rng_(run_seed) {
    config_.validate();
    InitOptions options;
    options.zero_social_ties = config_.zero_social_ties;
    options.initial_confidence_weight = config_.initial_confidence_weight;
    Populations populations = init_populations(config_.num_doctors, config_.num_patients, config_.model, rng_, options);
    doctors_ = std::move(populations.doctors);
    patients_ = std::move(populations.patients);
}

RoundMetrics Simulation::run_round(std::size_t round_index) {
    const bool css = config_.model == ModelKind::css;
    const CareThresholds& thresholds = config_.thresholds;

    if (css) refresh_social_standing(doctors_, ledger_);

    const std::size_t infections = spread_infection(patients_, config_.num_infected_per_round, counter_, rng_,
                                                    thresholds.infection_severity);

    for (DoctorState& doctor : doctors_) doctor.is_busy = false;

    std::size_t treatments = 0;
    std::size_t untreated = 0;
    for (std::size_t index : triage_order(patients_)) {
        PatientState& patient = patients_[index];
        if (!needs_doctor(patient, thresholds.needs_doctor)) continue;
        const auto chosen = choose_doctor(patient, doctors_, ledger_, config_.model, thresholds.needs_doctor);
        if (!chosen || doctors_[chosen->index()].is_busy) {
            ++untreated;
            continue;
        }
        DoctorState& doctor = doctors_[chosen->index()];
        if (css) {
            receive_treatment_css(patient, doctor, ledger_, thresholds);
        } else {
            receive_treatment(patient, doctor, ledger_, thresholds);
        }
        ++treatments;
    }

    for (PatientState& patient : patients_) patient.health_history.push_back(patient.health_level);

    evolve();
    return measure(round_index, infections, treatments, untreated);
}

void Simulation::evolve() {
    const ModelKind model = config_.model;
    const bool single_tie = config_.single_tie_patient_mutation;

    evolve_population(
        std::span<PatientState>(patients_), config_.patient_ga(),
        [](const PatientState& p) { return fitness_patient(p); },
        [&](PatientState& p, RngStream& rng) { mutate_patient(p, model, rng, single_tie); },
        [&](PatientState& loser, const PatientState& winner, RngStream& rng) {
            crossover_patient(loser, winner, rng, model);
        },
        rng_);

    const RatingLedger& ledger = ledger_;
    evolve_population(
        std::span<DoctorState>(doctors_), config_.doctor_ga(),
        [&](const DoctorState& d) { return fitness_doctor(d, ledger); },
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
        rng_);
}

RoundMetrics Simulation::measure(std::size_t round_index, std::size_t infections, std::size_t treatments,
                                 std::size_t untreated) const {
    RoundMetrics m;
    m.run_id = run_id_;
    m.round_index = round_index;
    m.model = config_.model;
    m.infections = infections;
    m.treatments = treatments;
    m.untreated_seekers = untreated;

    for (const DoctorState& d : doctors_) {
        m.doctor_fitness += fitness_doctor(d, ledger_);
        m.research_ability += d.research_ability;
        m.empathy += d.empathy;
        m.weight_wmrat += d.weight_wmrat;
        m.weight_mwres += d.weight_mwres;
        m.confidence += d.confidence;
    }
    const auto nd = static_cast<double>(doctors_.size());
    m.doctor_fitness /= nd;
    m.research_ability /= nd;
    m.empathy /= nd;
    m.weight_wmrat /= nd;
    m.weight_mwres /= nd;
    m.confidence /= nd;

    for (const PatientState& p : patients_) {
        m.patient_fitness += fitness_patient(p);
        m.cred_weight += p.cred_weight;
        m.mean_rating_weight += p.mean_rating_weight;
        m.past_rating_weight += p.past_rating_weight;
        m.resilience += p.resilience;
    }
    const auto np = static_cast<double>(patients_.size());
    m.patient_fitness /= np;
    m.cred_weight /= np;
    m.mean_rating_weight /= np;
    m.past_rating_weight /= np;
    m.resilience /= np;
    return m;
}

namespace {

double quantize(double strength) { return std::round(strength * 1e6) / 1e6; }

template <class Key>
void collect_edges(const std::string& source, const TieMap<Key>& ties, std::vector<SnapshotEdge>& edges) {
    ties.for_each([&](Key target, double strength) {
        edges.push_back(SnapshotEdge{source, node_id(target), quantize(strength)});
    });
}

}  // namespace

NetworkSnapshot Simulation::snapshot(std::size_t round_index) const {
    if (config_.model != ModelKind::css) throw UsageError("network snapshots exist only under the css model");
    NetworkSnapshot snap;
    snap.round_index = round_index;
    snap.nodes.reserve(doctors_.size() + patients_.size());
    for (const DoctorState& d : doctors_) snap.nodes.push_back(SnapshotNode{node_id(d.id), "doctor"});
    for (const PatientState& p : patients_) snap.nodes.push_back(SnapshotNode{node_id(p.id), "patient"});
    for (const DoctorState& d : doctors_) {
        const std::string source = node_id(d.id);
        collect_edges(source, d.social_ties_doctors, snap.edges);
        collect_edges(source, d.social_ties_patients, snap.edges);
    }
    for (const PatientState& p : patients_) {
        const std::string source = node_id(p.id);
        collect_edges(source, p.social_ties_doctors, snap.edges);
        collect_edges(source, p.social_ties_patients, snap.edges);
    }
    return snap;
}

RunResult run_simulation(const SimulationConfig& config, std::uint64_t run_seed, std::size_t run_id,
                         const RunOptions& options) {
    Simulation sim(config, run_seed, run_id);
    RunResult result;
    result.metrics.reserve(config.num_rounds);
    const bool snapshots = config.model == ModelKind::css && config.snapshot_every > 0;
    for (std::size_t round = 1; round <= config.num_rounds; ++round) {
        result.metrics.push_back(sim.run_round(round));
        if (snapshots && round % config.snapshot_every == 0) {
            if (options.on_snapshot) {
                options.on_snapshot(run_id, sim.snapshot(round));
            } else {
                result.snapshots.push_back(sim.snapshot(round));
            }
        }
    }
    if (options.keep_populations) {
        result.doctors = sim.doctors();
        result.patients = sim.patients();
    }
    return result;
}

std::vector<AggregatedRound> aggregate_runs(const std::vector<std::vector<RoundMetrics>>& runs) {
    std::size_t rounds = 0;
    for (const auto& run : runs) rounds = std::max(rounds, run.size());

    std::vector<AggregatedRound> out(rounds);
    for (std::size_t r = 0; r < rounds; ++r) {
        // Sort each column before summing so the floating-point result is
        // independent of the order of the runs.
        std::array<std::vector<double>, RoundMetrics::kFieldCount> columns;
        for (const auto& run : runs) {
            if (r >= run.size()) continue;
            out[r].round_index = run[r].round_index;
            const auto values = run[r].values();
            for (std::size_t f = 0; f < values.size(); ++f) columns[f].push_back(values[f]);
        }
        for (std::size_t f = 0; f < columns.size(); ++f) {
            auto& column = columns[f];
            if (column.empty()) continue;
            std::sort(column.begin(), column.end());
            const auto n = static_cast<double>(column.size());
            double sum = 0.0;
            for (double v : column) sum += v;
            const double mean = sum / n;
            double squares = 0.0;
            for (double v : column) squares += (v - mean) * (v - mean);
            out[r].stats[f] = MetricStat{mean, std::sqrt(squares / n)};
        }
    }
    return out;
}

BatchResult run_batch(const SimulationConfig& config, unsigned threads, const RunOptions& options) {
    config.validate();
    BatchResult batch;
    batch.model = config.model;
    batch.runs.resize(config.num_repeats);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.num_repeats));

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(config.num_repeats);
    auto worker = [&] {
        for (std::size_t r = next++; r < config.num_repeats; r = next++) {
            try {
                batch.runs[r] = run_simulation(config, derive_run_seed(config.base_seed, r), r, options);
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }

    std::vector<std::vector<RoundMetrics>> series;
    series.reserve(batch.runs.size());
    for (const RunResult& run : batch.runs) series.push_back(run.metrics);
    batch.rounds = aggregate_runs(series);
    return batch;
}

}  // namespace docsim
