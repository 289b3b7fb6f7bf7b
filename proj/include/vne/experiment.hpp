#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vne/config.hpp"
#include "vne/sim.hpp"

namespace vne {

// Normative per-run CSV column layout.
extern const char* const kMetricsCsvHeader;

struct RunOutput {
    Algorithm algorithm;
    std::uint64_t seed;
    std::string csv_path;
    SimulationResult result;
};

struct ExperimentOutput {
    std::vector<RunOutput> runs;
    std::string summary_path;
};

std::string metrics_to_csv(Algorithm algorithm, std::uint64_t seed,
                           const std::vector<MetricsRecord>& records);

// Executes every (algorithm x seed) pair from the config, writing one metrics
// CSV per run plus a cross-seed summary CSV, and prints a comparison table.
// Output files are written atomically; on failure, files created by this call
// are removed before the error propagates.
ExperimentOutput run_experiment(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace vne
