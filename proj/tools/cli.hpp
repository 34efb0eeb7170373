#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "docsim/config.hpp"

namespace docsim::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsageError = 2;

struct Invocation {
    SimulationConfig config;
    std::filesystem::path out_dir = "docsim-out";
    unsigned threads = 0;
};

/// Layout under the output directory.
std::filesystem::path metrics_path(const std::filesystem::path& out_dir);
std::filesystem::path summary_path(const std::filesystem::path& out_dir);
std::filesystem::path snapshot_path(const std::filesystem::path& out_dir, std::size_t run_id, std::size_t round);

/// Runs the batch described by `invocation` and writes every output file.
void execute(const Invocation& invocation, std::ostream& log);

/// Parses `args` (without the program name), runs, and returns the exit
/// status. Diagnostics go to `err`, progress to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace docsim::cli
