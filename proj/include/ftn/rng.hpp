#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace ftn {

/// splitmix64 mixing step; used to derive independent stream seeds.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Seeded random stream with portable uniform/gaussian draws.
///
/// Gaussian samples come from an explicit Box-Muller transform instead of
/// std::normal_distribution so that a given seed produces the same sequence
/// on every standard library implementation.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : eng_(seed) {}

    /// Independent stream keyed by (master, a, b, c). Streams with different
    /// keys are decorrelated through splitmix64 chaining.
    static RngStream derive(uint64_t master, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
        uint64_t s = master;
        uint64_t h = splitmix64(s);
        s ^= a + 0x9e3779b97f4a7c15ull;
        h ^= splitmix64(s);
        s ^= b + 0xd1b54a32d192ed03ull;
        h ^= splitmix64(s);
        s ^= c + 0x8cb92ba72f3d8dd7ull;
        h ^= splitmix64(s);
        return RngStream(h);
    }

    uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Modulo bias is negligible for the
    /// small bounds used here (constellation sizes).
    uint32_t uniform_int(uint32_t bound) { return static_cast<uint32_t>(eng_() % bound); }

    /// Standard normal via Box-Muller; generates pairs, caches the second.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly symmetric complex gaussian with total variance `variance`.
    std::complex<double> cnormal(double variance) {
        const double s = std::sqrt(variance / 2.0);
        const double re = gaussian();
        const double im = gaussian();
        return {s * re, s * im};
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ftn
