#include "vne/experiment.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace vne {

const char* const kMetricsCsvHeader =
    "bucket_end,algorithm,seed,link_load_variance,revenue,cost,revenue_cost_ratio,"
    "acceptance_ratio,avg_quotation,accepted,refused,total_runtime_ms,avg_runtime_ms";

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    fs::rename(tmp, path);
}

struct Welford {
    long long n = 0;
    double mean = 0.0, m2 = 0.0;
    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double sd() const { return n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0; }
};

}  // namespace

std::string metrics_to_csv(Algorithm algorithm, std::uint64_t seed,
                           const std::vector<MetricsRecord>& records) {
    std::ostringstream out;
    out << kMetricsCsvHeader << '\n';
    const std::string alg = algorithm_name(algorithm);
    for (const auto& r : records) {
        out << fmt(r.bucket_end) << ',' << alg << ',' << seed << ','
            << fmt(r.link_load_variance) << ',' << r.revenue << ',' << r.cost << ','
            << fmt(r.revenue_cost_ratio) << ',' << fmt(r.acceptance_ratio) << ','
            << fmt(r.avg_quotation) << ',' << r.accepted << ',' << r.refused << ','
            << fmt(r.total_runtime_ms) << ',' << fmt(r.avg_runtime_ms) << '\n';
    }
    return out.str();
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
    ExperimentOutput output;
    std::vector<std::string> created;
    try {
        fs::create_directories(cfg.out_dir);
        for (Algorithm alg : cfg.algorithms) {
            for (std::uint64_t seed : cfg.seeds) {
                SimParams params;
                params.algorithm = alg;
                params.lbhga = cfg.lbhga;
                params.tga = cfg.tga;
                params.lbhga_retry_limit = cfg.lbhga_retry_limit;
                params.tga_retry_limit = cfg.tga_retry_limit;

                RunOutput run;
                run.algorithm = alg;
                run.seed = seed;
                run.result = run_simulation(cfg.substrate, cfg.stream, params, seed);
                run.csv_path = (fs::path(cfg.out_dir) /
                                ("metrics_" + algorithm_name(alg) + "_seed" +
                                 std::to_string(seed) + ".csv"))
                                   .string();
                write_atomically(run.csv_path,
                                 metrics_to_csv(alg, seed, run.result.records));
                created.push_back(run.csv_path);
                log << "wrote " << run.csv_path << " (accepted " << run.result.accepted
                    << ", refused " << run.result.refused << ")\n";
                output.runs.push_back(std::move(run));
            }
        }

        // cross-seed summary: mean and standard deviation per metric per bucket
        struct Key {
            std::string alg;
            double bucket;
            bool operator<(const Key& o) const {
                return alg != o.alg ? alg < o.alg : bucket < o.bucket;
            }
        };
        static const char* metric_names[] = {
            "link_load_variance", "revenue",        "cost",
            "revenue_cost_ratio", "acceptance_ratio", "avg_quotation",
            "accepted",           "refused",          "total_runtime_ms",
            "avg_runtime_ms"};
        constexpr int kMetricCount = 10;
        std::map<Key, std::array<Welford, kMetricCount>> agg;
        for (const auto& run : output.runs) {
            for (const auto& r : run.result.records) {
                auto& cells = agg[{algorithm_name(run.algorithm), r.bucket_end}];
                const double values[kMetricCount] = {
                    r.link_load_variance,
                    static_cast<double>(r.revenue),
                    static_cast<double>(r.cost),
                    r.revenue_cost_ratio,
                    r.acceptance_ratio,
                    r.avg_quotation,
                    static_cast<double>(r.accepted),
                    static_cast<double>(r.refused),
                    r.total_runtime_ms,
                    r.avg_runtime_ms};
                for (int m = 0; m < kMetricCount; ++m) cells[static_cast<std::size_t>(m)].add(values[m]);
            }
        }
        std::ostringstream summary;
        summary << "algorithm,bucket_end";
        for (const char* name : metric_names) summary << ',' << name << "_mean," << name << "_sd";
        summary << '\n';
        for (const auto& [key, cells] : agg) {
            summary << key.alg << ',' << fmt(key.bucket);
            for (int m = 0; m < kMetricCount; ++m)
                summary << ',' << fmt(cells[static_cast<std::size_t>(m)].mean) << ','
                        << fmt(cells[static_cast<std::size_t>(m)].sd());
            summary << '\n';
        }
        output.summary_path = (fs::path(cfg.out_dir) / "summary.csv").string();
        write_atomically(output.summary_path, summary.str());
        created.push_back(output.summary_path);

        // final-bucket comparison table
        log << "\nalgorithm   accept_ratio  acc/ref    R/C     load_var      avg_quote   total_ms\n";
        for (Algorithm alg : cfg.algorithms) {
            Welford ar, rc, lv, aq, ms, prr;
            bool prr_defined = true;
            for (const auto& run : output.runs) {
                if (run.algorithm != alg || run.result.records.empty()) continue;
                const auto& last = run.result.records.back();
                ar.add(last.acceptance_ratio);
                rc.add(last.revenue_cost_ratio);
                aq.add(last.avg_quotation);
                ms.add(last.total_runtime_ms);
                double var_mean = 0.0;
                for (const auto& r : run.result.records) var_mean += r.link_load_variance;
                lv.add(var_mean / static_cast<double>(run.result.records.size()));
                if (last.refused > 0)
                    prr.add(static_cast<double>(last.accepted) /
                            static_cast<double>(last.refused));
                else
                    prr_defined = false;
            }
            char line[256];
            std::snprintf(line, sizeof(line), "%-10s  %8.4f     %7s  %7.4f  %12.2f  %10.2f  %9.1f\n",
                          algorithm_name(alg).c_str(), ar.mean,
                          prr_defined ? fmt(prr.mean).c_str() : "inf", rc.mean, lv.mean,
                          aq.mean, ms.mean);
            log << line;
        }
        return output;
    } catch (...) {
        for (const auto& path : created) {
            std::error_code ec;
            fs::remove(path, ec);
        }
        throw;
    }
}

}  // namespace vne
