#pragma once

// Deterministic Monte Carlo driver. The sample budget is partitioned into a
// fixed number of seed-derived streams; each stream owns its generator and
// accumulators, and the final reduction runs in stream order. Results are
// therefore bit-identical for any worker count.

#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace pairsing::detail {

inline constexpr int kStreams = 64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

struct McRng {
    std::mt19937_64 eng;

    explicit McRng(std::uint64_t seed) : eng(seed) {}

    // 53-bit uniform in [0,1); independent of library distribution internals
    double uniform01() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

struct McResult {
    double mean = 0.0;
    double std_error = 0.0;  // of the mean
    std::uint64_t samples = 0;
};

// F: callable(McRng&) -> double, one sample value.
template <typename F>
McResult run_streams(std::uint64_t samples, std::uint64_t seed, int workers, F&& f) {
    struct Accum {
        double sum = 0.0;
        double sumsq = 0.0;
    };
    std::vector<Accum> acc(kStreams);

    auto run_stream = [&](int s) {
        std::uint64_t count = samples / kStreams +
                              (static_cast<std::uint64_t>(s) < samples % kStreams ? 1 : 0);
        McRng rng(splitmix64(seed + 0x9E3779B97F4A7C15ull * (s + 1)));
        Accum a;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double v = f(rng);
            a.sum += v;
            a.sumsq += v * v;
        }
        acc[s] = a;
    };

    if (workers <= 1) {
        for (int s = 0; s < kStreams; ++s) run_stream(s);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int s = w; s < kStreams; s += workers) run_stream(s);
            });
        }
        for (auto& th : pool) th.join();
    }

    double sum = 0.0, sumsq = 0.0;
    for (const auto& a : acc) {  // fixed reduction order
        sum += a.sum;
        sumsq += a.sumsq;
    }
    McResult out;
    out.samples = samples;
    const double m = static_cast<double>(samples);
    out.mean = sum / m;
    double var = sumsq / m - out.mean * out.mean;
    if (var < 0) var = 0;
    out.std_error = std::sqrt(var / m);
    return out;
}

}  // namespace pairsing::detail
