#ifndef FPADE_LOG_SCALE_HPP
#define FPADE_LOG_SCALE_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace fpade {

using Cplx = std::complex<double>;

inline double wrap_phase(double t) {
    // Reduce to (-pi, pi].
    t = std::remainder(t, 2.0 * M_PI);
    if (t <= -M_PI) t += 2.0 * M_PI;
    return t;
}

// A nonzero complex number stored as exp(log_mag + i*phase).  Products and
// quotients of many factors (Vandermonde determinants, factorials, gamma
// products for m ~ 200) stay exact additions here where the linear-scale
// value would overflow or underflow.  Zero is log_mag = -infinity.
struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;  // radians in (-pi, pi]

    static LogComplex from(Cplx w) {
        LogComplex r;
        if (w == Cplx(0.0, 0.0)) return r;
        r.log_mag = std::log(std::abs(w));
        r.phase = std::arg(w);
        return r;
    }
    static LogComplex from_polar(double log_mag, double phase) {
        return LogComplex{log_mag, wrap_phase(phase)};
    }
    static LogComplex one() { return LogComplex{0.0, 0.0}; }
    static LogComplex zero() { return LogComplex{}; }

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

    LogComplex operator*(const LogComplex& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return from_polar(log_mag + o.log_mag, phase + o.phase);
    }
    LogComplex operator/(const LogComplex& o) const {
        if (is_zero()) return zero();
        return from_polar(log_mag - o.log_mag, phase - o.phase);
    }
    LogComplex pow(long long n) const {
        if (is_zero()) return n == 0 ? one() : zero();
        return from_polar(log_mag * static_cast<double>(n),
                          phase * static_cast<double>(n));
    }
    LogComplex negated() const {
        if (is_zero()) return zero();
        return from_polar(log_mag, phase + M_PI);
    }

    double abs() const { return std::exp(log_mag); }

    // Linear-scale view; saturates to 0 / inf outside double range.
    Cplx value() const {
        if (is_zero()) return Cplx(0.0, 0.0);
        return std::polar(std::exp(log_mag), phase);
    }
};

// Log-scale interval [exp(log_lo), exp(log_hi)] with saturating linear views.
// Used for the operator-norm brackets, where |log| can exceed double range
// for large m.
struct LogBracket {
    double log_lo = 0.0;
    double log_hi = 0.0;

    bool representable() const {
        return std::fabs(log_lo) < 700.0 && std::fabs(log_hi) < 700.0;
    }
    double lo() const { return std::exp(log_lo); }
    double hi() const { return std::exp(log_hi); }
};

}  // namespace fpade

#endif
