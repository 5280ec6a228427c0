#include "ftn/modem.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ftn {
namespace {

constexpr int kBits[kSchemeCount] = {1, 2, 3, 4, 5, 6};
const char* kNames[kSchemeCount] = {"bpsk", "qpsk", "qam8", "qam16", "qam32", "qam64"};

int gray(int n) { return n ^ (n >> 1); }

// Gray-coded PAM rail: level index k (ascending, levels -M+1..M-1 step 2)
// carries label gray(k), so adjacent levels differ in one bit.
std::vector<double> pam_rail(int bits, std::vector<int>& label_of_index) {
    const int m = 1 << bits;
    std::vector<double> levels(m);
    label_of_index.resize(m);
    for (int k = 0; k < m; ++k) {
        levels[k] = 2.0 * k - (m - 1);
        label_of_index[k] = gray(k);
    }
    return levels;
}

std::vector<cplx> build_square(int half_bits, double scale) {
    std::vector<int> lab;
    const auto lv = pam_rail(half_bits, lab);
    const int m = 1 << half_bits;
    std::vector<cplx> pts(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int q = 0; q < m; ++q)
            pts[(lab[i] << half_bits) | lab[q]] = cplx(lv[i], lv[q]) * scale;
    return pts;
}

std::vector<cplx> build_bpsk() { return {cplx(-1.0, 0.0), cplx(1.0, 0.0)}; }

std::vector<cplx> build_qpsk() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<cplx> pts(4);
    for (int b = 0; b < 4; ++b) {
        const int bi = (b >> 1) & 1;  // first bit -> I sign
        const int bq = b & 1;         // second bit -> Q sign
        pts[b] = cplx((2 * bi - 1) * s, (2 * bq - 1) * s);
    }
    return pts;
}

// 4x2 grid: two Gray bits on a 4-PAM I rail, one bit on the Q sign.
std::vector<cplx> build_qam8() {
    std::vector<int> lab;
    const auto lv = pam_rail(2, lab);
    const double d = 1.0 / std::sqrt(6.0);
    std::vector<cplx> pts(8);
    for (int i = 0; i < 4; ++i)
        for (int q = 0; q < 2; ++q)
            pts[(lab[i] << 1) | q] = cplx(lv[i], 2.0 * q - 1.0) * d;
    return pts;
}

// Cross constellation: 6x6 grid minus the four corners. Labels follow a
// serpentine path through the columns with a 5-bit Gray sequence, so points
// adjacent along the path differ in exactly one bit (quasi-Gray).
std::vector<cplx> build_qam32() {
    const double lv[6] = {-5, -3, -1, 1, 3, 5};
    const double d = 1.0 / std::sqrt(20.0);
    std::vector<cplx> pts(32);
    int k = 0;
    for (int xi = 0; xi < 6; ++xi) {
        std::vector<int> col;
        for (int yi = 0; yi < 6; ++yi) {
            const bool corner = (xi == 0 || xi == 5) && (yi == 0 || yi == 5);
            if (!corner) col.push_back(yi);
        }
        if (xi % 2 == 1) std::reverse(col.begin(), col.end());
        for (int yi : col) pts[gray(k++)] = cplx(lv[xi], lv[yi]) * d;
    }
    return pts;
}

const std::array<std::vector<cplx>, kSchemeCount>& tables() {
    static const std::array<std::vector<cplx>, kSchemeCount> t = {
        build_bpsk(),
        build_qpsk(),
        build_qam8(),
        build_square(2, 1.0 / std::sqrt(10.0)),
        build_qam32(),
        build_square(3, 1.0 / std::sqrt(42.0)),
    };
    return t;
}

}  // namespace

int bits_per_symbol(Scheme s) { return kBits[static_cast<int>(s)]; }

const std::vector<Scheme>& all_schemes() {
    static const std::vector<Scheme> v = {Scheme::kBpsk,  Scheme::kQpsk,  Scheme::kQam8,
                                          Scheme::kQam16, Scheme::kQam32, Scheme::kQam64};
    return v;
}

std::string scheme_name(Scheme s) { return kNames[static_cast<int>(s)]; }

Scheme parse_scheme(const std::string& name) {
    for (int i = 0; i < kSchemeCount; ++i)
        if (name == kNames[i]) return static_cast<Scheme>(i);
    throw std::invalid_argument("unknown modulation scheme: " + name);
}

const std::vector<cplx>& constellation(Scheme s) { return tables()[static_cast<int>(s)]; }

int nearest_label(cplx z, Scheme s) {
    const auto& pts = constellation(s);
    int best = 0;
    double best_d = std::norm(z - pts[0]);
    for (size_t k = 1; k < pts.size(); ++k) {
        const double d = std::norm(z - pts[k]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(k);
        }
    }
    return best;
}

std::vector<cplx> modulate(const std::vector<uint8_t>& bits, Scheme s) {
    const int m = bits_per_symbol(s);
    if (bits.size() % static_cast<size_t>(m) != 0)
        throw std::invalid_argument("modulate: bit count " + std::to_string(bits.size()) +
                                    " is not a multiple of " + std::to_string(m));
    const auto& pts = constellation(s);
    std::vector<cplx> out(bits.size() / m);
    for (size_t i = 0; i < out.size(); ++i) {
        int label = 0;
        for (int b = 0; b < m; ++b) label = (label << 1) | (bits[i * m + b] & 1);
        out[i] = pts[label];
    }
    return out;
}

std::vector<uint8_t> demodulate(const std::vector<cplx>& symbols, Scheme s) {
    const int m = bits_per_symbol(s);
    std::vector<uint8_t> bits(symbols.size() * m);
    for (size_t i = 0; i < symbols.size(); ++i) {
        const int label = nearest_label(symbols[i], s);
        for (int b = 0; b < m; ++b) bits[i * m + b] = static_cast<uint8_t>((label >> (m - 1 - b)) & 1);
    }
    return bits;
}

}  // namespace ftn
