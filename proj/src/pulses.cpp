#include "ftn/pulses.hpp"

#include <cmath>
#include <stdexcept>

namespace ftn {
namespace {

constexpr double kPi = 3.141592653589793238462643383279;

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

}  // namespace

std::string pulse_family_name(PulseFamily f) {
    switch (f) {
        case PulseFamily::kSrrc: return "srrc";
        case PulseFamily::kRc: return "rc";
        case PulseFamily::kRect: return "rect";
        case PulseFamily::kTri: return "tri";
    }
    return "?";
}

PulseFamily parse_pulse_family(const std::string& name) {
    if (name == "srrc") return PulseFamily::kSrrc;
    if (name == "rc") return PulseFamily::kRc;
    if (name == "rect") return PulseFamily::kRect;
    if (name == "tri") return PulseFamily::kTri;
    throw std::invalid_argument("unknown pulse family: " + name);
}

void PulseSpec::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("pulse: alpha must be in [0, 1]");
    if (!(T > 0.0)) throw std::invalid_argument("pulse: T must be positive");
    if (!(span >= 1.0)) throw std::invalid_argument("pulse: span must be >= 1");
}

double rc_ctft(double f, double alpha, double T) {
    const double af = std::abs(f);
    const double lo = (1.0 - alpha) / (2.0 * T);
    const double hi = (1.0 + alpha) / (2.0 * T);
    if (alpha == 0.0) {
        if (af < lo) return T;
        if (af == lo) return 0.5 * T;  // midpoint convention at the brick edge
        return 0.0;
    }
    if (af <= lo) return T;
    if (af >= hi) return 0.0;
    return 0.5 * T * (1.0 + std::cos(kPi * T / alpha * (af - lo)));
}

double tri_ctft(double f, double T) {
    const double s = sinc(f * T);
    return s * s;
}

double srrc_time(double t, double alpha, double T) {
    const double scale = 1.0 / std::sqrt(T);
    if (alpha == 0.0) return scale * sinc(t / T);
    const double x = t / T;
    if (std::abs(x) < 1e-12) return scale * (1.0 - alpha + 4.0 * alpha / kPi);
    const double fourax = 4.0 * alpha * x;
    const double denom = 1.0 - fourax * fourax;
    if (std::abs(denom) < 1e-10) {
        const double a = kPi / (4.0 * alpha);
        return scale * (alpha / std::sqrt(2.0)) *
               ((1.0 + 2.0 / kPi) * std::sin(a) + (1.0 - 2.0 / kPi) * std::cos(a));
    }
    const double num = std::sin(kPi * (1.0 - alpha) * x) + fourax * std::cos(kPi * (1.0 + alpha) * x);
    return scale * num / (kPi * x * denom);
}

double rc_time(double t, double alpha, double T) {
    const double x = t / T;
    if (alpha == 0.0) return sinc(x);
    const double twoax = 2.0 * alpha * x;
    const double denom = 1.0 - twoax * twoax;
    if (std::abs(denom) < 1e-10) return (kPi / 4.0) * sinc(1.0 / (2.0 * alpha));
    return sinc(x) * std::cos(kPi * alpha * x) / denom;
}

double tri_time(double t, double T) {
    const double a = 1.0 - std::abs(t) / T;
    return a > 0.0 ? a : 0.0;
}

double composite_time(const PulseSpec& p, double t) {
    switch (p.family) {
        case PulseFamily::kSrrc:
        case PulseFamily::kRc: return rc_time(t, p.alpha, p.T);
        case PulseFamily::kRect:
        case PulseFamily::kTri: return tri_time(t, p.T);
    }
    return 0.0;
}

NyquistCheck nyquist_check(const PulseSpec& p, double period, double tolerance) {
    p.validate();
    if (p.is_square_root())
        throw std::invalid_argument(
            "nyquist_check: applies to the composite pulse (rc or tri), not a square-root pulse");
    if (period <= 0.0) period = p.T;
    NyquistCheck result;
    const int n_max = static_cast<int>(std::ceil(p.span * p.T / period)) + 1;
    for (int n = 1; n <= n_max; ++n) {
        const double v = std::abs(composite_time(p, n * period));
        if (v > result.max_off_center) result.max_off_center = v;
    }
    result.ok = result.max_off_center < tolerance;
    return result;
}

double rc_aliased_sum(double f, double alpha, double tau, double T) {
    const double band = (1.0 + alpha) / (2.0 * T);
    const double step = 1.0 / (tau * T);
    // copies centered at k*step contribute only when |f - k*step| <= band
    const int k_lo = static_cast<int>(std::ceil((f - band) / step));
    const int k_hi = static_cast<int>(std::floor((f + band) / step));
    double sum = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) sum += rc_ctft(f - k * step, alpha, T);
    return sum / T;
}

double tri_aliased_sum(double f, double tau, double T) {
    // Poisson summation: the copy sum equals tau * DTFT of the sampled
    // triangle, which has finitely many nonzero samples (|n| tau < 1).
    double acc = 1.0;
    for (int n = 1; n * tau < 1.0; ++n)
        acc += 2.0 * (1.0 - n * tau) * std::cos(2.0 * kPi * f * n * tau * T);
    return tau * acc / T;
}

}  // namespace ftn
