#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "log_scaled.hpp"

namespace hlcesaro {

namespace detail {

using cld = std::complex<long double>;

// Stirling series for log Gamma, |z| >= 15 and Re z > 0.
inline cld log_gamma_stirling(cld z) {
    static constexpr long double coeff[] = {
        1.0L / 12, -1.0L / 360, 1.0L / 1260, -1.0L / 1680, 1.0L / 1188,
        -691.0L / 360360, 1.0L / 156, -3617.0L / 122400, 43867.0L / 244188, -174611.0L / 125400,
    };
    const long double half_log_2pi = 0.918938533204672741780329736405617639861L;
    cld w = 1.0L / z;
    cld w2 = w * w;
    cld series = 0.0L;
    for (int j = 9; j >= 0; --j) series = series * w2 + coeff[j];
    series *= w;
    return (z - 0.5L) * std::log(z) - z + half_log_2pi + series;
}

inline cld log_gamma_right(cld s) {
    cld shift = 0.0L;
    while (std::abs(s) < 15.0L) {
        shift += std::log(s);
        s += 1.0L;
    }
    return log_gamma_stirling(s) - shift;
}

// log sin(pi z) without overflow for large |Im z|.
inline cld log_sin_pi(cld z) {
    const long double pi = std::numbers::pi_v<long double>;
    long double y = z.imag();
    if (std::abs(y) < 20.0L) return std::log(std::sin(pi * z));
    bool flip = y < 0.0L;
    if (flip) z = std::conj(z);
    // sin(pi z) = exp(-i pi z) (1 - exp(2 i pi z)) i / 2
    const cld i(0.0L, 1.0L);
    cld r = -i * pi * z + std::log(1.0L - std::exp(2.0L * i * pi * z)) + std::log(i / 2.0L);
    return flip ? std::conj(r) : r;
}

inline cld log_gamma_ld(cld s) {
    if (s.imag() == 0.0L && s.real() <= 0.0L && s.real() == std::floor(s.real()))
        throw pole_error("Gamma has a pole at " + std::to_string(static_cast<long long>(s.real())));
    if (s.real() >= 0.5L) return log_gamma_right(s);
    const long double log_pi = 1.144729885849400174143427351353058711647L;
    return log_pi - log_sin_pi(s) - log_gamma_right(1.0L - s);
}

inline LogScaled to_log_scaled(cld r) {
    long double ph = std::remainder(r.imag(), 2.0L * std::numbers::pi_v<long double>);
    return {static_cast<double>(r.real()), reduce_phase(static_cast<double>(ph))};
}

}  // namespace detail

// log Gamma(s). For Re s >= 1/2 this is the branch continuous from the positive
// real axis; for Re s < 1/2 the imaginary part is fixed only modulo 2 pi.
inline std::complex<double> log_gamma(std::complex<double> s) {
    auto r = detail::log_gamma_ld({s.real(), s.imag()});
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

inline LogScaled gamma_ratio(std::complex<double> num, std::complex<double> den) {
    return detail::to_log_scaled(detail::log_gamma_ld({num.real(), num.imag()}) - detail::log_gamma_ld({den.real(), den.imag()}));
}

inline LogScaled gamma_scaled(std::complex<double> s) { return detail::to_log_scaled(detail::log_gamma_ld({s.real(), s.imag()})); }

}  // namespace hlcesaro
