#pragma once

#include <cstdint>
#include <random>

#include "sbvp/grid.hpp"

namespace sbvp {

/// Seed + stream pair. Identical (seed, stream_id) reproduces identical
/// ensembles within one build; Monte Carlo loops use stream_id = path index.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    RngSpec with_stream(std::uint64_t s) const { return RngSpec{seed, s}; }
};

/// Standard-normal generator: mt19937_64 seeded by a SplitMix64 mix of
/// (seed, stream_id), Box-Muller transform for the Gaussian.
class NormalRng {
public:
    explicit NormalRng(const RngSpec& spec);
    double next();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Wiener path on the grid: w_0 = 0, independent N(0, h) increments.
SamplePath sample_wiener(const Grid& grid, const RngSpec& rng);

}  // namespace sbvp
