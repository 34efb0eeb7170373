#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>

#include "docsim/engine.hpp"

namespace docsim {

// Metrics CSV: UTF-8, comma separated, LF line endings. Columns are
//   model,run,round,statistic,<RoundMetrics::field_names()...>
// Per-run rows carry statistic "value" and integer counts; summary rows carry
// run "aggregate" and statistic "mean" or "std". Reals use 6 decimals.

void write_metrics_csv(std::ostream& out, std::span<const RoundMetrics> series);
void write_summary_csv(std::ostream& out, ModelKind model, std::span<const AggregatedRound> rounds);

/// Throws IoError naming the path when the file cannot be written.
void export_metrics_csv(std::span<const RoundMetrics> series, const std::filesystem::path& path);
void export_summary_csv(ModelKind model, std::span<const AggregatedRound> rounds, const std::filesystem::path& path);

/// {"edges":[{"source","strength","target"}...],"nodes":[{"id","kind"}...],"round":n}
/// with keys in sorted order and strengths printed with 6 decimals.
void write_network_snapshot(std::ostream& out, const NetworkSnapshot& snapshot);

/// Throws UsageError unless `model` is css, IoError on write failure.
void export_network_snapshot(const NetworkSnapshot& snapshot, ModelKind model, const std::filesystem::path& path);

/// Parses a snapshot file; throws IoError on unreadable or malformed input.
NetworkSnapshot read_network_snapshot(const std::filesystem::path& path);

}  // namespace docsim
