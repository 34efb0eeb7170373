#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "docsim/agents.hpp"
#include "docsim/config.hpp"
#include "docsim/infection.hpp"
#include "docsim/rating_ledger.hpp"
#include "docsim/rng.hpp"

namespace docsim {

/// Per-round population summary. Means are taken after the round's genetic
/// operations.
struct RoundMetrics {
    std::size_t run_id = 0;
    std::size_t round_index = 0;
    ModelKind model = ModelKind::classical;

    double doctor_fitness = 0.0;
    double patient_fitness = 0.0;
    double research_ability = 0.0;
    double empathy = 0.0;
    double weight_wmrat = 0.0;
    double weight_mwres = 0.0;
    double cred_weight = 0.0;
    double mean_rating_weight = 0.0;
    double past_rating_weight = 0.0;
    double resilience = 0.0;
    double confidence = 0.0;

    std::size_t infections = 0;
    std::size_t treatments = 0;
    std::size_t untreated_seekers = 0;

    static constexpr std::size_t kFieldCount = 14;
    static constexpr std::size_t kFirstCountField = 11;

    /// Column names of `values()`, in CSV order.
    static const std::array<std::string_view, kFieldCount>& field_names();
    std::array<double, kFieldCount> values() const;

    bool operator==(const RoundMetrics&) const = default;
};

struct SnapshotNode {
    std::string id;
    std::string kind;

    bool operator==(const SnapshotNode&) const = default;
};

struct SnapshotEdge {
    std::string source;
    std::string target;
    double strength = 0.0;

    bool operator==(const SnapshotEdge&) const = default;
};

/// Directed tie network at the end of a round. Strengths are quantized to
/// 1e-6 so the 6-decimal file form reproduces them exactly.
struct NetworkSnapshot {
    std::size_t round_index = 0;
    std::vector<SnapshotNode> nodes;
    std::vector<SnapshotEdge> edges;

    bool operator==(const NetworkSnapshot&) const = default;
};

std::string node_id(DoctorId id);
std::string node_id(PatientId id);

/// Full state of one run. Owns both populations, the ledger, the infection
/// counter and the run's single random stream.
class Simulation {
public:
    /// Validates the config (ConfigError) and initializes the populations.
    Simulation(SimulationConfig config, std::uint64_t run_seed, std::size_t run_id = 0);

    /// One round, in order: CSS standing sweep, infection spread, busy reset,
    /// triage, care, end-of-round health sampling, patient GA, doctor GA,
    /// metrics.
    RoundMetrics run_round(std::size_t round_index);

    RoundMetrics measure(std::size_t round_index, std::size_t infections, std::size_t treatments,
                         std::size_t untreated) const;

    /// Throws UsageError under the classical model.
    NetworkSnapshot snapshot(std::size_t round_index) const;

    const SimulationConfig& config() const { return config_; }
    const std::vector<DoctorState>& doctors() const { return doctors_; }
    const std::vector<PatientState>& patients() const { return patients_; }
    const RatingLedger& ledger() const { return ledger_; }

    std::vector<DoctorState>& mutable_doctors() { return doctors_; }
    std::vector<PatientState>& mutable_patients() { return patients_; }
    RatingLedger& mutable_ledger() { return ledger_; }
    RngStream& rng() { return rng_; }

private:
    void evolve();

    SimulationConfig config_;
    std::size_t run_id_;
    RngStream rng_;
    std::vector<DoctorState> doctors_;
    std::vector<PatientState> patients_;
    RatingLedger ledger_;
    InfectionCounter counter_;
};

struct RunResult {
    std::vector<RoundMetrics> metrics;
    std::vector<DoctorState> doctors;
    std::vector<PatientState> patients;
    std::vector<NetworkSnapshot> snapshots;
};

using SnapshotSink = std::function<void(std::size_t run_id, const NetworkSnapshot&)>;

struct RunOptions {
    /// Copy the final populations into RunResult.
    bool keep_populations = true;
    /// When set, snapshots are handed to the sink instead of being stored.
    /// Under run_batch the sink is called from worker threads.
    SnapshotSink on_snapshot;
};

/// Runs config.num_rounds rounds (1-based round indices). Under CSS, a
/// snapshot is taken after every round divisible by config.snapshot_every.
RunResult run_simulation(const SimulationConfig& config, std::uint64_t run_seed, std::size_t run_id = 0,
                         const RunOptions& options = {});

struct MetricStat {
    double mean = 0.0;
    double stddev = 0.0;
};

struct AggregatedRound {
    std::size_t round_index = 0;
    std::array<MetricStat, RoundMetrics::kFieldCount> stats{};
};

struct BatchResult {
    ModelKind model = ModelKind::classical;
    std::vector<RunResult> runs;          // indexed by repeat
    std::vector<AggregatedRound> rounds;  // mean and population stddev across repeats
};

/// Per-round mean and population standard deviation of every metric field.
/// The result does not depend on the order of `runs`.
std::vector<AggregatedRound> aggregate_runs(const std::vector<std::vector<RoundMetrics>>& runs);

/// num_repeats independent runs seeded by derive_run_seed(base_seed, r).
/// Runs execute on up to `threads` workers (0 = hardware concurrency).
/// Final populations are dropped unless options.keep_populations is set.
BatchResult run_batch(const SimulationConfig& config, unsigned threads = 0, const RunOptions& options = {false, {}});

}  // namespace docsim
