#include "ftn/isi.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ftn/fft.hpp"

namespace ftn {

void FtnParams::validate() const {
    pulse.validate();
    if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("ftn: tau must be in (0, 1]");
    if (n_subcarriers < 2 || !is_power_of_two(static_cast<size_t>(n_subcarriers)))
        throw std::invalid_argument("ftn: subcarrier count must be a power of two >= 2");
}

double SubcarrierGains::min_abs() const {
    double m = std::abs(gains.at(0));
    for (double g : gains) m = std::min(m, std::abs(g));
    return m;
}

ChannelTaps composite_taps(double tau, const PulseSpec& pulse) {
    pulse.validate();
    if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("ftn: tau must be in (0, 1]");
    const int half = static_cast<int>(std::floor(pulse.span / tau));
    ChannelTaps out;
    out.center = half;
    out.taps.resize(2 * half + 1);
    for (int n = -half; n <= half; ++n)
        out.taps[half + n] = composite_time(pulse, n * tau * pulse.T);
    return out;
}

ChannelTaps composite_taps(const FtnParams& params) {
    params.validate();
    return composite_taps(params.tau, params.pulse);
}

SubcarrierGains subcarrier_gains(const ChannelTaps& taps, int n) {
    const int count = static_cast<int>(taps.taps.size());
    if (count > n)
        throw std::invalid_argument("subcarrier_gains: " + std::to_string(count) +
                                    " taps exceed " + std::to_string(n) +
                                    " bins; increase the DFT length");
    if (!is_power_of_two(static_cast<size_t>(n)))
        throw std::invalid_argument("subcarrier_gains: DFT length must be a power of two");
    // Center tap to index 0 (circular shift) so the DFT is real zero-phase.
    std::vector<std::complex<double>> buf(n, 0.0);
    for (int i = 0; i < count; ++i) {
        const int shift = i - taps.center;
        const int idx = (shift % n + n) % n;
        buf[idx] += taps.taps[i];
    }
    fft_inplace(buf, false);
    SubcarrierGains out;
    out.gains.resize(n);
    for (int i = 0; i < n; ++i) out.gains[i] = buf[i].real();
    return out;
}

double dtft_rc(double omega, double alpha, double tau, double T) {
    // Equivalent to the copy sum with frequency mapped by f = omega/(2 pi tau T).
    const double f = omega / (2.0 * 3.141592653589793238462643383279 * tau * T);
    return rc_aliased_sum(f, alpha, tau, T) * T / tau;
}

bool invertible(double alpha, double tau) { return (1.0 + alpha) * tau > 1.0; }

std::vector<double> toeplitz_matrix(const ChannelTaps& taps, int n) {
    if (n < 1) throw std::invalid_argument("toeplitz_matrix: n must be >= 1");
    std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
    const int count = static_cast<int>(taps.taps.size());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const int lag = c - r + taps.center;
            if (lag >= 0 && lag < count) m[static_cast<size_t>(r) * n + c] = taps.taps[lag];
        }
    }
    return m;
}

}  // namespace ftn
