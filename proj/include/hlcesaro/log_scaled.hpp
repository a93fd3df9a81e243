#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace hlcesaro {

inline double reduce_phase(double phi) {
    double r = std::remainder(phi, 2.0 * std::numbers::pi);
    return r <= -std::numbers::pi ? r + 2.0 * std::numbers::pi : r;
}

// w = exp(log_magnitude) * exp(i phase); zero has log_magnitude = -inf.
struct LogScaled {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    static LogScaled one() { return {0.0, 0.0}; }
    static LogScaled from_log(std::complex<double> log_w) { return {log_w.real(), reduce_phase(log_w.imag())}; }
    static LogScaled from_complex(std::complex<double> w) {
        if (w == 0.0) return {};
        return {std::log(std::abs(w)), std::arg(w)};
    }
    static LogScaled from_real(double x) { return from_complex({x, 0.0}); }

    bool is_zero() const { return log_magnitude == -std::numeric_limits<double>::infinity(); }
    double magnitude() const { return std::exp(log_magnitude); }
    std::complex<double> to_complex() const { return is_zero() ? 0.0 : std::polar(std::exp(log_magnitude), phase); }
    std::complex<double> log() const { return {log_magnitude, phase}; }

    LogScaled& operator*=(const LogScaled& o) {
        log_magnitude += o.log_magnitude;
        phase = reduce_phase(phase + o.phase);
        return *this;
    }
    LogScaled& operator/=(const LogScaled& o) {
        log_magnitude -= o.log_magnitude;
        phase = reduce_phase(phase - o.phase);
        return *this;
    }
    LogScaled conj() const { return {log_magnitude, phase == std::numbers::pi ? phase : -phase}; }
};

inline LogScaled operator*(LogScaled a, const LogScaled& b) { return a *= b; }
inline LogScaled operator/(LogScaled a, const LogScaled& b) { return a /= b; }

// a^w for real a > 0.
inline LogScaled real_power(double a, std::complex<double> w) {
    double la = std::log(a);
    return LogScaled::from_log(w * la);
}

}  // namespace hlcesaro
