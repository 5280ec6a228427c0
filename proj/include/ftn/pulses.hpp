#pragma once

#include <string>

namespace ftn {

enum class PulseFamily { kSrrc, kRc, kRect, kTri };

std::string pulse_family_name(PulseFamily f);
PulseFamily parse_pulse_family(const std::string& name);

/// Modulating pulse description. SRRC and RECT are square-root pulses whose
/// matched composites are RC and TRI respectively; alpha only applies to the
/// raised cosine family. Time-domain evaluation is truncated to |t| <= span*T.
struct PulseSpec {
    PulseFamily family = PulseFamily::kSrrc;
    double alpha = 0.3;
    double T = 1.0;
    double span = 16.0;

    void validate() const;  // throws std::invalid_argument
    bool is_square_root() const { return family == PulseFamily::kSrrc || family == PulseFamily::kRect; }
};

/// Raised cosine spectrum: T on the flat band, cosine rolloff out to
/// (1+alpha)/2T, zero beyond. Even in f.
double rc_ctft(double f, double alpha, double T);

/// Normalized sinc^2(fT); the 1/T scale that pairs it with rc_ctft lives in
/// the capacity integrands.
double tri_ctft(double f, double T);

/// Unit-energy square-root raised cosine, so (h*h)(0) = 1. For alpha = 0 it
/// degenerates to sinc(t/T)/sqrt(T).
double srrc_time(double t, double alpha, double T);

/// Raised cosine time pulse with peak 1 (the SRRC autocorrelation).
double rc_time(double t, double alpha, double T);

/// Unit-peak triangle of half-width T (the RECT autocorrelation).
double tri_time(double t, double T);

/// Post-matched-filter composite of the spec's family, peak 1 at t = 0.
double composite_time(const PulseSpec& p, double t);

struct NyquistCheck {
    bool ok = false;
    double max_off_center = 0.0;
};

/// Zero-ISI check on a composite pulse (RC or TRI): samples at n*period must
/// vanish for n != 0. Rejects square-root families, the criterion applies to
/// the composite. period defaults to p.T when <= 0.
NyquistCheck nyquist_check(const PulseSpec& p, double period = 0.0, double tolerance = 1e-6);

/// sum_k (1/T) H_RC(f - k/(tau T)). The RC spectrum is bandlimited so only
/// the copies overlapping f contribute; evaluated exactly.
double rc_aliased_sum(double f, double alpha, double tau, double T);

/// sum_k (1/T) H_tri(f - k/(tau T)) evaluated in closed form as the DTFT of
/// the sampled triangle (a finite cosine series), avoiding the slowly
/// converging tail of the direct copy sum.
double tri_aliased_sum(double f, double tau, double T);

}  // namespace ftn
