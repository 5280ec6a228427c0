#pragma once

#include <vector>

#include "ftn/pulses.hpp"

namespace ftn {

/// Time-compressed signalling parameters: symbols spaced tau*T with a pulse
/// that is Nyquist w.r.t. T, mapped onto n_subcarriers OFDM bins.
struct FtnParams {
    double tau = 1.0;
    PulseSpec pulse;
    int n_subcarriers = 1024;

    void validate() const;  // throws std::invalid_argument
};

/// Real symmetric composite response h[n] sampled at n*tau*T, with h[center]
/// equal to 1 under the peak normalization.
struct ChannelTaps {
    std::vector<double> taps;
    int center = 0;
};

/// Zero-phase subcarrier gains: the N-point DFT of the taps with the center
/// tap rotated to index 0, which makes every coefficient real.
struct SubcarrierGains {
    std::vector<double> gains;

    double min_abs() const;
};

ChannelTaps composite_taps(const FtnParams& params);
ChannelTaps composite_taps(double tau, const PulseSpec& pulse);

/// Throws std::invalid_argument when the taps do not fit into n bins.
SubcarrierGains subcarrier_gains(const ChannelTaps& taps, int n);

/// DTFT of the raised cosine sampled at tau*T, via the aliased spectrum:
/// (1/(tau T)) sum_k H_RC((omega - 2 pi k) / (2 pi tau T)).
double dtft_rc(double omega, double alpha, double tau, double T);

/// Strict invertibility condition (1 + alpha) * tau > 1; the boundary case
/// touches zero at one frequency and counts as non-invertible.
bool invertible(double alpha, double tau);

/// Dense n x n symmetric banded Toeplitz matrix (row major) whose first row
/// is taken from the taps starting at the center.
std::vector<double> toeplitz_matrix(const ChannelTaps& taps, int n);

}  // namespace ftn
