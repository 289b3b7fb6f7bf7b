#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace vne {

// 64-bit mixer used to derive independent stream seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded generator with hand-rolled draws. std::mt19937_64 output is pinned by
// the standard; the std distributions are not, so the draws below are written
// out explicitly to keep runs reproducible across compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent stream for (master, salt); changing draws in one stream
    // never perturbs another.
    static Rng stream(std::uint64_t master, std::uint64_t salt) {
        return Rng(splitmix64(splitmix64(master) ^ salt));
    }

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [lo, hi], inclusive. Rejection sampling, no modulo bias.
    int uniform_int(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1ULL;
        const std::uint64_t threshold = (0ULL - range) % range;
        for (;;) {
            const std::uint64_t u = engine_();
            if (u >= threshold) return lo + static_cast<int>(u % range);
        }
    }

    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform_int(0, static_cast<int>(n) - 1));
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    double exponential(double rate) {
        return -std::log1p(-uniform01()) / rate;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from {0, ..., n-1} via partial Fisher-Yates.
    std::vector<int> sample_indices(int n, int k) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < k; ++i) {
            int j = uniform_int(i, n - 1);
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
        }
        idx.resize(static_cast<std::size_t>(k));
        return idx;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace vne
