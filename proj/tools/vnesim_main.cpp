#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vne/config.hpp"
#include "vne/experiment.hpp"
#include "vne/instance_io.hpp"
#include "vne/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seeded virtual network embedding experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    std::string algorithm_override;
    std::int64_t seed_override = -1;

    auto* run = app.add_subcommand("run", "Run the configured experiment batch");
    run->add_option("--config", config_path, "Experiment config file")->required();
    run->add_option("--seed", seed_override, "Run a single seed instead of the configured list");
    run->add_option("--algorithm", algorithm_override, "Run a single algorithm (lbhga or tga)");
    run->add_option("--out", out_override, "Output directory override");

    std::string dump_out;
    std::int64_t dump_seed = 0;
    auto* dump = app.add_subcommand("dump-instance",
                                    "Write the generated substrate and request stream to a file");
    dump->add_option("--config", config_path, "Experiment config file")->required();
    dump->add_option("--seed", dump_seed, "Seed for the generators")->required();
    dump->add_option("--out", dump_out, "Destination file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        vne::ExperimentConfig cfg = vne::load_config(config_path);

        if (run->parsed()) {
            if (seed_override >= 0) cfg.seeds = {static_cast<std::uint64_t>(seed_override)};
            if (!algorithm_override.empty())
                cfg.algorithms = {vne::algorithm_from_name(algorithm_override)};
            if (!out_override.empty()) cfg.out_dir = out_override;
            vne::run_experiment(cfg, std::cout);
        } else {
            vne::Instance instance;
            instance.substrate =
                vne::generate_substrate(cfg.substrate, static_cast<std::uint64_t>(dump_seed));
            instance.vnrs =
                vne::generate_vnr_stream(cfg.stream, static_cast<std::uint64_t>(dump_seed));
            vne::save_instance(dump_out, instance);
            std::cout << "wrote " << dump_out << " (" << instance.substrate.node_count()
                      << " nodes, " << instance.substrate.link_count() << " links, "
                      << instance.vnrs.size() << " requests)\n";
        }
    } catch (const vne::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
