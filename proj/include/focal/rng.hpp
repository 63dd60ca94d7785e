#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace focal {

/// Fixed documented default seed for every seeded computation.
inline constexpr std::uint64_t kDefaultSeed = 0xF0CA1;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Decorrelated per-unit seed so that work split across workers is
/// independent of the worker count.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

/// mt19937_64 with platform-independent uniform/gaussian draws (the standard
/// distributions are implementation-defined, so both are hand-rolled).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1].
    double uniform01_open0() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform01_open0();
        double v = uniform01();
        double rad = std::sqrt(-2.0 * std::log(u));
        double ang = 6.283185307179586476925286766559 * v;
        spare_ = rad * std::sin(ang);
        have_spare_ = true;
        return rad * std::cos(ang);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace focal
