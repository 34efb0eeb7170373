#include "docsim/export.hpp"

#include <fstream>
#include <iterator>
#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include "json.hpp"

#include "docsim/errors.hpp"

namespace docsim {

namespace {

void write_header(std::ostream& out) {
    std::string line = "model,run,round,statistic";
    for (std::string_view name : RoundMetrics::field_names()) {
        line += ',';
        line += name;
    }
    line += '\n';
    out << line;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

}  // namespace

void write_metrics_csv(std::ostream& out, std::span<const RoundMetrics> series) {
    write_header(out);
    fmt::memory_buffer line;
    for (const RoundMetrics& m : series) {
        line.clear();
        fmt::format_to(std::back_inserter(line), "{},{},{},value", to_string(m.model), m.run_id, m.round_index);
        const auto values = m.values();
        for (std::size_t f = 0; f < values.size(); ++f) {
            if (f >= RoundMetrics::kFirstCountField) {
                fmt::format_to(std::back_inserter(line), ",{}", static_cast<std::size_t>(values[f]));
            } else {
                fmt::format_to(std::back_inserter(line), ",{:.6f}", values[f]);
            }
        }
        line.push_back('\n');
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
}

void write_summary_csv(std::ostream& out, ModelKind model, std::span<const AggregatedRound> rounds) {
    write_header(out);
    fmt::memory_buffer line;
    for (const AggregatedRound& round : rounds) {
        for (const bool is_mean : {true, false}) {
            line.clear();
            fmt::format_to(std::back_inserter(line), "{},aggregate,{},{}", to_string(model), round.round_index,
                           is_mean ? "mean" : "std");
            for (const MetricStat& stat : round.stats) {
                fmt::format_to(std::back_inserter(line), ",{:.6f}", is_mean ? stat.mean : stat.stddev);
            }
            line.push_back('\n');
            out.write(line.data(), static_cast<std::streamsize>(line.size()));
        }
    }
}

void export_metrics_csv(std::span<const RoundMetrics> series, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    write_metrics_csv(out, series);
    finish(out, path);
}

void export_summary_csv(ModelKind model, std::span<const AggregatedRound> rounds, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    write_summary_csv(out, model, rounds);
    finish(out, path);
}

void write_network_snapshot(std::ostream& out, const NetworkSnapshot& snapshot) {
    // Hand-written so strengths keep a fixed 6-decimal form; ids are
    // generated ("d3", "p17") and never need escaping.
    fmt::memory_buffer buf;
    auto it = std::back_inserter(buf);
    fmt::format_to(it, "{{\"edges\":[");
    for (std::size_t i = 0; i < snapshot.edges.size(); ++i) {
        const SnapshotEdge& e = snapshot.edges[i];
        fmt::format_to(it, "{}{{\"source\":\"{}\",\"strength\":{:.6f},\"target\":\"{}\"}}", i == 0 ? "" : ",",
                       e.source, e.strength, e.target);
    }
    fmt::format_to(it, "],\"nodes\":[");
    for (std::size_t i = 0; i < snapshot.nodes.size(); ++i) {
        const SnapshotNode& n = snapshot.nodes[i];
        fmt::format_to(it, "{}{{\"id\":\"{}\",\"kind\":\"{}\"}}", i == 0 ? "" : ",", n.id, n.kind);
    }
    fmt::format_to(it, "],\"round\":{}}}\n", snapshot.round_index);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void export_network_snapshot(const NetworkSnapshot& snapshot, ModelKind model, const std::filesystem::path& path) {
    if (model != ModelKind::css) throw UsageError("network snapshots are only defined for the css model");
    std::ofstream out = open_for_write(path);
    write_network_snapshot(out, snapshot);
    finish(out, path);
}

NetworkSnapshot read_network_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
    try {
        const nlohmann::json doc = nlohmann::json::parse(in);
        NetworkSnapshot snapshot;
        snapshot.round_index = doc.at("round").get<std::size_t>();
        for (const auto& node : doc.at("nodes")) {
            snapshot.nodes.push_back(SnapshotNode{node.at("id").get<std::string>(), node.at("kind").get<std::string>()});
        }
        for (const auto& edge : doc.at("edges")) {
            snapshot.edges.push_back(SnapshotEdge{edge.at("source").get<std::string>(),
                                                  edge.at("target").get<std::string>(),
                                                  edge.at("strength").get<double>()});
        }
        return snapshot;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(fmt::format("malformed snapshot '{}': {}", path.string(), e.what()));
    }
}

}  // namespace docsim
