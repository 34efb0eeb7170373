#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <ostream>
#include <system_error>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "docsim/engine.hpp"
#include "docsim/errors.hpp"
#include "docsim/export.hpp"

namespace docsim::cli {

namespace fs = std::filesystem;

fs::path metrics_path(const fs::path& out_dir) { return out_dir / "metrics.csv"; }

fs::path summary_path(const fs::path& out_dir) { return out_dir / "metrics_summary.csv"; }

fs::path snapshot_path(const fs::path& out_dir, std::size_t run_id, std::size_t round) {
    return out_dir / "snapshots" / fmt::format("run{:03}_round{:04}.json", run_id, round);
}

void execute(const Invocation& invocation, std::ostream& log) {
    const SimulationConfig& config = invocation.config;
    config.validate();

    std::error_code ec;
    fs::create_directories(invocation.out_dir, ec);
    if (ec) throw IoError(fmt::format("cannot create '{}': {}", invocation.out_dir.string(), ec.message()));
    const bool snapshots = config.model == ModelKind::css && config.snapshot_every > 0;
    if (snapshots) {
        fs::create_directories(invocation.out_dir / "snapshots", ec);
        if (ec) throw IoError(fmt::format("cannot create '{}': {}", (invocation.out_dir / "snapshots").string(),
                                          ec.message()));
    }

    RunOptions options;
    options.keep_populations = false;
    if (snapshots) {
        const fs::path out_dir = invocation.out_dir;
        const ModelKind model = config.model;
        options.on_snapshot = [out_dir, model](std::size_t run_id, const NetworkSnapshot& snapshot) {
            export_network_snapshot(snapshot, model, snapshot_path(out_dir, run_id, snapshot.round_index));
        };
    }

    const BatchResult batch = run_batch(config, invocation.threads, options);

    std::vector<RoundMetrics> rows;
    rows.reserve(config.num_repeats * config.num_rounds);
    for (const RunResult& run : batch.runs) rows.insert(rows.end(), run.metrics.begin(), run.metrics.end());
    export_metrics_csv(rows, metrics_path(invocation.out_dir));
    export_summary_csv(config.model, batch.rounds, summary_path(invocation.out_dir));

    log << fmt::format("{}: {} repeat(s) x {} round(s), {} doctors, {} patients -> {}\n", to_string(config.model),
                       config.num_repeats, config.num_rounds, config.num_doctors, config.num_patients,
                       invocation.out_dir.string());
    if (!batch.rounds.empty()) {
        const AggregatedRound& last = batch.rounds.back();
        log << fmt::format("final round {}: doctor fitness {:.3f}, patient fitness {:.3f}\n", last.round_index,
                           last.stats[0].mean, last.stats[1].mean);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Agent-based doctor/patient co-evolution simulator", "docsim"};

    std::string model_name = "classical";
    std::string preset;
    std::optional<std::size_t> doctors, patients, rounds, repeats, infected, snapshot_every, tournaments, elites;
    std::optional<std::uint64_t> seed;
    std::optional<double> mutation_chance, crossover_chance;
    std::string out_dir = "docsim-out";
    unsigned threads = 0;

    app.add_option("--model", model_name, "Model variant")->check(CLI::IsMember({"classical", "css"}));
    app.add_option("--preset", preset, "Load a named parameter set before applying other flags")
        ->check(CLI::IsMember({"paper-full", "paper-single"}));
    app.add_option("--doctors", doctors, "Number of doctors");
    app.add_option("--patients", patients, "Number of patients");
    app.add_option("--rounds", rounds, "Rounds per run");
    app.add_option("--repeats", repeats, "Independent repeats");
    app.add_option("--infected", infected, "Patients infected per round");
    app.add_option("--seed", seed, "Base seed");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--snapshot-every", snapshot_every, "Network snapshot interval in rounds (css only, 0 = off)");
    app.add_option("--tournaments-per-round", tournaments, "GA tournaments per population per round");
    app.add_option("--elites", elites, "Elites kept per population");
    app.add_option("--mutation-chance", mutation_chance, "Mutation probability per tournament");
    app.add_option("--crossover-chance", crossover_chance, "Crossover probability per tournament");
    app.add_option("--threads", threads, "Worker threads for repeats (0 = hardware concurrency)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsageError;
    }

    const ModelKind model = *parse_model(model_name);
    Invocation invocation;
    if (preset == "paper-full") {
        invocation.config = SimulationConfig::paper_full(model);
    } else if (preset == "paper-single") {
        invocation.config = SimulationConfig::paper_single(model);
    } else {
        invocation.config = SimulationConfig::defaults_for(model);
    }
    SimulationConfig& config = invocation.config;
    if (doctors) config.num_doctors = *doctors;
    if (patients) config.num_patients = *patients;
    if (rounds) config.num_rounds = *rounds;
    if (repeats) config.num_repeats = *repeats;
    if (infected) config.num_infected_per_round = *infected;
    if (seed) config.base_seed = *seed;
    if (snapshot_every) config.snapshot_every = *snapshot_every;
    if (tournaments) config.tournaments_per_round = *tournaments;
    if (elites) config.num_elites = *elites;
    if (mutation_chance) config.mutation_chance = *mutation_chance;
    if (crossover_chance) config.crossover_chance = *crossover_chance;
    invocation.out_dir = out_dir;
    invocation.threads = threads;

    try {
        config.validate();
    } catch (const ConfigError& e) {
        err << "docsim: invalid configuration: " << e.what() << '\n';
        return kExitUsageError;
    }

    try {
        execute(invocation, out);
    } catch (const UsageError& e) {
        err << "docsim: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "docsim: " << e.what() << '\n';
        return kExitRuntimeError;
    }
    return kExitSuccess;
}

}  // namespace docsim::cli
