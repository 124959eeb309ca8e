#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace qldyn {

// SplitMix64 finalizer; used to decorrelate per-run stream seeds.
std::uint64_t mix_seed(std::uint64_t x);

// Reproducible random source with a pinned bit stream: std::mt19937_64
// (whose output sequence is fixed by the C++ standard) seeded through
// mix_seed. Uniform doubles take the top 53 bits of one engine output, so
// results are identical across platforms and standard libraries.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : engine_(mix_seed(seed)) {}

    // Independent stream for run `run_index` of an ensemble with a shared
    // master seed.
    static RandomSource for_run(std::uint64_t master_seed, std::uint64_t run_index) {
        return RandomSource(master_seed ^ mix_seed(run_index + 1));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Samples an index from a probability vector by CDF inversion.
    int sample(std::span<const double> probabilities);

  private:
    std::mt19937_64 engine_;
};

}  // namespace qldyn
