#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vne/sim.hpp"
#include "vne/topology.hpp"

namespace vne {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Experiment definition parsed from a JSON config file. The substrate and
// stream sections must be spelled out in full so a config file pins the whole
// experiment; algorithm parameters fall back to their standard defaults.
struct ExperimentConfig {
    SubstrateConfig substrate;
    VnrStreamConfig stream;
    LbhgaParams lbhga;
    TgaParams tga;
    int lbhga_retry_limit = 5;
    int tga_retry_limit = 1;
    std::vector<std::uint64_t> seeds;
    std::vector<Algorithm> algorithms;
    std::string out_dir = "results";
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace vne
