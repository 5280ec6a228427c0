#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ftn {

using cplx = std::complex<double>;

enum class Scheme { kBpsk, kQpsk, kQam8, kQam16, kQam32, kQam64 };

constexpr int kSchemeCount = 6;

int bits_per_symbol(Scheme s);
const std::vector<Scheme>& all_schemes();
std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

/// Unit average energy constellation, indexed by bit label (MSB first).
/// Square constellations are Gray mapped per rail; 8QAM is a 4x2 grid with
/// Gray I levels; 32QAM is the 6x6-minus-corners cross labelled along a
/// serpentine Gray path (quasi-Gray, see the constellation dump for the
/// exact table).
const std::vector<cplx>& constellation(Scheme s);

/// Nearest constellation label for a received point. Ties resolve to the
/// lowest label value.
int nearest_label(cplx z, Scheme s);

/// Map bit groups (values 0/1, MSB first per symbol) onto symbols.
/// Throws std::invalid_argument if bits.size() is not a multiple of the
/// scheme's bits per symbol.
std::vector<cplx> modulate(const std::vector<uint8_t>& bits, Scheme s);

/// Minimum distance demodulation back to bits.
std::vector<uint8_t> demodulate(const std::vector<cplx>& symbols, Scheme s);

}  // namespace ftn
