#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace ftn {

inline bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 DFT. forward: X[k] = sum_n x[n] e^{-j2pi kn/N}.
/// inverse applies the conjugate kernel and the 1/N factor.
inline void fft_inplace(std::vector<std::complex<double>>& x, bool inverse = false) {
    const size_t n = x.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft: length must be a power of two");
    // bit reversal permutation
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * 3.141592653589793238462643383279 / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const auto u = x[i + k];
                const auto v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& v : x) v *= inv;
    }
}

inline std::vector<std::complex<double>> fft(std::vector<std::complex<double>> x) {
    fft_inplace(x, false);
    return x;
}

inline std::vector<std::complex<double>> ifft(std::vector<std::complex<double>> x) {
    fft_inplace(x, true);
    return x;
}

}  // namespace ftn
