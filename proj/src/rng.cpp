#include "sbvp/rng.hpp"

#include <cmath>

namespace sbvp {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

NormalRng::NormalRng(const RngSpec& spec) {
    std::uint64_t state = spec.seed;
    std::uint64_t a = splitmix64(state);
    state ^= spec.stream_id * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    gen_.seed(seq);
}

double NormalRng::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on uniforms from mt19937_64
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double inv = 1.0 / (static_cast<double>(gen_.max()) + 1.0);
    double u1;
    do {
        u1 = (static_cast<double>(gen_()) + 0.5) * inv;
    } while (u1 <= 0.0);
    const double u2 = (static_cast<double>(gen_()) + 0.5) * inv;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(two_pi * u2);
    has_spare_ = true;
    return r * std::cos(two_pi * u2);
}

SamplePath sample_wiener(const Grid& grid, const RngSpec& rng) {
    NormalRng gauss(rng);
    SamplePath path(grid);
    const double sqrt_h = std::sqrt(grid.h());
    for (int i = 1; i < grid.size(); ++i) path.w[i] = path.w[i - 1] + sqrt_h * gauss.next();
    return path;
}

}  // namespace sbvp
