#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "errors.hpp"
#include "gamma.hpp"
#include "log_scaled.hpp"
#include "quadrature.hpp"
#include "summation.hpp"

namespace hlcesaro {

enum class BesselMethod { AscendingSeries, PoissonQuadrature, Asymptotic, Auto };

inline const char* to_string(BesselMethod m) {
    switch (m) {
        case BesselMethod::AscendingSeries: return "series";
        case BesselMethod::PoissonQuadrature: return "quadrature";
        case BesselMethod::Asymptotic: return "asymptotic";
        default: return "auto";
    }
}

struct BesselConfig {
    // Series zone: u <= u_small * max(1, |nu|).
    double u_small = 12.0;
    // Asymptotic zone: u >= u_large * max(1, |nu|^2).
    double u_large = 1.0;
    // Relative error estimate a method must reach to be accepted by Auto.
    double target = 1e-10;
    // Fallback acceptance when no method reaches target.
    double accept = 1e-6;
    // Series in extended precision; 0 keeps binary64, negative picks digits automatically.
    int series_digits = 0;
    // Gauss-Legendre phase budget per 20-point panel.
    double phase_per_panel = 6.0 * std::numbers::pi;
    // Hankel expansion length; 0 = adaptive, 1 = leading term only.
    int asymptotic_terms = 0;
};

struct BesselResult {
    LogScaled value;
    BesselMethod method = BesselMethod::Auto;
    double error_estimate = 0.0;  // relative
    double log_abs_error = -std::numeric_limits<double>::infinity();
    std::complex<double> to_complex() const { return value.to_complex(); }
};

namespace detail {

struct SeriesSum {
    std::complex<double> sum;
    double max_term = 0.0;
    int terms = 0;
};

// S = sum_m (-u^2/4)^m / (m! (nu+1)_m), so J = (u/2)^nu / Gamma(nu+1) * S.
template <class Real>
SeriesSum normalized_series(double nu_re, double nu_im, double u, double eps) {
    using std::abs;
    const Real q = Real(u) * Real(u) / 4;
    const Real nr(nu_re), ni(nu_im);
    Real tr(1), ti(0), sr(1), si(0);
    double max_term = 1.0;
    int small = 0;
    for (int m = 1; m <= 10000; ++m) {
        Real dr = m * (nr + m), di = m * ni;
        Real f = -q / (dr * dr + di * di);
        Real ar = tr * dr + ti * di, ai = ti * dr - tr * di;
        tr = ar * f;
        ti = ai * f;
        sr += tr;
        si += ti;
        double mag = std::hypot(static_cast<double>(tr), static_cast<double>(ti));
        double smag = std::hypot(static_cast<double>(sr), static_cast<double>(si));
        if (!std::isfinite(mag) || !std::isfinite(smag)) break;
        max_term = std::max(max_term, mag);
        if (mag < eps * smag) {
            if (++small >= 3) return {{static_cast<double>(sr), static_cast<double>(si)}, max_term, m};
        } else {
            small = 0;
        }
    }
    throw method_failure("ascending series did not converge");
}

// log10 of the largest series term, from magnitudes only.
inline double series_peak_log10(std::complex<double> nu, double u) {
    double q = 0.25 * u * u, lt = 0.0, peak = 0.0;
    for (int m = 1; m <= 10000; ++m) {
        lt += std::log(q) - std::log(m * std::abs(nu + static_cast<double>(m)));
        peak = std::max(peak, lt);
        if (m > u && lt < peak - 50.0) break;
    }
    return peak / std::numbers::ln10;
}

inline LogScaled series_prefactor(std::complex<double> nu, double u) {
    return LogScaled::from_log(nu * std::log(0.5 * u)) / gamma_scaled(nu + 1.0);
}

inline BesselResult make_result(LogScaled value, BesselMethod m, double log_abs_error) {
    double rel = value.is_zero() ? std::numeric_limits<double>::infinity() : std::exp(log_abs_error - value.log_magnitude);
    return {value, m, std::max(rel, std::numeric_limits<double>::epsilon()), log_abs_error};
}

// Oscillation amplitude sqrt(2/(pi u)) cosh(pi Im nu / 2), the scale of J past the turning point.
inline double log_amplitude(std::complex<double> nu, double u) {
    double y = 0.5 * std::numbers::pi * std::abs(nu.imag());
    return 0.5 * std::log(2.0 / (std::numbers::pi * u)) + y + std::log1p(std::exp(-2.0 * y)) - std::numbers::ln2;
}

inline bool check_zero_argument(std::complex<double> nu, double u, BesselResult& out, BesselMethod m) {
    if (u < 0.0 || !std::isfinite(u)) throw invalid_argument("Bessel argument must be finite and >= 0");
    if (u > 0.0) return false;
    if (nu == 0.0) out = {LogScaled::one(), m, 0.0};
    else if (nu.real() > 0.0) out = {LogScaled{}, m, 0.0};
    else throw domain_error("J_nu(0) is undefined for Re nu <= 0, nu != 0");
    return true;
}

}  // namespace detail

// Ascending series; digits > 0 evaluates the normalized sum with MPFR at that precision,
// digits < 0 chooses the precision from the size of the largest term.
inline BesselResult bessel_j_series(std::complex<double> nu, double u, int digits = 0) {
    if (!(nu.real() > -1.0)) throw domain_error("series requires Re nu > -1");
    BesselResult out;
    if (detail::check_zero_argument(nu, u, out, BesselMethod::AscendingSeries)) return out;
    detail::SeriesSum s;
    double eps;
    if (digits == 0) {
        eps = std::numeric_limits<double>::epsilon();
        s = detail::normalized_series<double>(nu.real(), nu.imag(), u, eps);
    } else {
        using boost::multiprecision::mpfr_float;
        if (digits < 0) digits = 30 + static_cast<int>(std::ceil(detail::series_peak_log10(nu, u)));
        unsigned old = mpfr_float::default_precision();
        mpfr_float::default_precision(static_cast<unsigned>(digits));
        eps = std::pow(10.0, -digits);
        try {
            s = detail::normalized_series<mpfr_float>(nu.real(), nu.imag(), u, std::max(eps, 1e-18));
        } catch (...) {
            mpfr_float::default_precision(old);
            throw;
        }
        mpfr_float::default_precision(old);
    }
    LogScaled pre = detail::series_prefactor(nu, u);
    double log_abs = std::log(4.0 * eps * s.max_term * std::sqrt(static_cast<double>(s.terms))) + pre.log_magnitude;
    return detail::make_result(pre * LogScaled::from_complex(s.sum), BesselMethod::AscendingSeries, log_abs);
}

// I(u) = int_0^1 (1-t^2)^(nu-1/2) cos(u t) dt on a node set resolving every u <= u_max.
// [0, 1/2] uses panels in t; [1/2, 1) uses 1-t = exp(-v) so the endpoint power
// becomes an exponential; the remainder near t = 1 is integrated analytically.
class PoissonIntegral {
public:
    PoissonIntegral(std::complex<double> nu, double u_max, double phase_per_panel = 6.0 * std::numbers::pi)
        : nu_(nu), u_max_(u_max) {
        if (!(nu.real() > -0.5)) throw domain_error("Poisson integral requires Re nu > -1/2");
        if (!(u_max >= 0.0) || !std::isfinite(u_max)) throw invalid_argument("u_max must be finite and >= 0");
        const std::complex<double> alpha = nu - 0.5;
        const double gamma = std::abs(nu.imag());
        const double beta = nu.real() + 0.5;
        const double phi = phase_per_panel;

        double rate_a = u_max + 4.0 / 3.0 * gamma;
        int panels_a = std::max(1, static_cast<int>(std::ceil(0.5 * rate_a / phi)));
        for (int p = 0; p < panels_a; ++p) {
            double a = 0.5 * p / panels_a, b = 0.5 * (p + 1) / panels_a;
            for_each_node<20>(a, b, [&](double t, double w) {
                push(t, std::exp(alpha * std::log1p(-t * t)) * w);
            });
        }

        const double w_tail = 1e-8 / std::max({1.0, u_max, std::abs(nu)});
        const double amp_cut = 1e-18 / std::max(1.0, std::pow(2.0, alpha.real()));
        double v = std::numbers::ln2;
        bool analytic_tail = false;
        for (long panels = 0;; ++panels) {
            if (panels > 20000000) throw method_failure("Poisson integral panel budget exhausted");
            double w0 = std::exp(-v);
            double rate = gamma * (1.0 + w0 / (2.0 - w0)) + u_max * w0;
            double h = std::min({phi / std::max(rate, 1e-300), 6.0 / beta, 2.0});
            for_each_node<20>(v, v + h, [&](double vv, double wv) {
                double w = std::exp(-vv);
                std::complex<double> lg = -vv + std::log(2.0 - w);
                push(1.0 - w, std::exp(alpha * lg) * (w * wv));
            });
            v += h;
            double w = std::exp(-v);
            if (w <= w_tail) { analytic_tail = true; break; }
            if (std::pow(w, beta) < amp_cut) break;
        }
        if (analytic_tail) {
            std::complex<double> p2 = std::exp(alpha * std::numbers::ln2);
            std::complex<double> wa = std::exp(-(nu + 0.5) * v) / (nu + 0.5);
            std::complex<double> wb = std::exp(-(nu + 1.5) * v) / (nu + 1.5);
            tail_cos_ = p2 * wa - alpha * 0.5 * p2 * wb;
            tail_usin_ = p2 * wb;
        }
    }

    std::complex<double> nu() const { return nu_; }
    double u_max() const { return u_max_; }
    std::size_t size() const { return t_.size(); }
    // Sum of |integrand * weight|; the rounding scale of any evaluation.
    double scale() const { return scale_; }

    std::complex<double> operator()(double u) const {
        if (u > u_max_ * (1.0 + 1e-12)) throw invalid_argument("u exceeds the resolved range of this node set");
        ComplexAccumulator acc;
        for (std::size_t j = 0; j < t_.size(); ++j) acc += std::complex<double>(fr_[j], fi_[j]) * std::cos(u * t_[j]);
        return acc.value() + tail(u);
    }

    // out[l-1] = I(l * u1) for l = 1..L, with cos(l x) from the Chebyshev recurrence.
    void harmonics(double u1, int L, std::vector<std::complex<double>>& out) const {
        if (L * u1 > u_max_ * (1.0 + 1e-12)) throw invalid_argument("harmonics exceed the resolved range of this node set");
        const std::size_t n = t_.size();
        std::vector<double> prev(n, 1.0), cur(n), two_c(n);
        for (std::size_t j = 0; j < n; ++j) {
            cur[j] = std::cos(u1 * t_[j]);
            two_c[j] = 2.0 * cur[j];
        }
        out.assign(L, 0.0);
        const double* fr = fr_.data();
        const double* fi = fi_.data();
        for (int l = 1; l <= L; ++l) {
            double sr = 0.0, si = 0.0;
            double* c = cur.data();
            double* p = prev.data();
            const double* tc = two_c.data();
            if (l == 1) {
#pragma omp simd reduction(+ : sr, si)
                for (std::size_t j = 0; j < n; ++j) {
                    sr += fr[j] * c[j];
                    si += fi[j] * c[j];
                }
            } else {
#pragma omp simd reduction(+ : sr, si)
                for (std::size_t j = 0; j < n; ++j) {
                    double nx = tc[j] * c[j] - p[j];
                    p[j] = c[j];
                    c[j] = nx;
                    sr += fr[j] * nx;
                    si += fi[j] * nx;
                }
            }
            out[l - 1] = std::complex<double>(sr, si) + tail(l * u1);
        }
    }

private:
    void push(double t, std::complex<double> f) {
        t_.push_back(t);
        fr_.push_back(f.real());
        fi_.push_back(f.imag());
        scale_ += std::abs(f);
    }
    std::complex<double> tail(double u) const { return tail_cos_ * std::cos(u) + tail_usin_ * (u * std::sin(u)); }

    std::complex<double> nu_;
    double u_max_;
    std::vector<double> t_, fr_, fi_;
    std::complex<double> tail_cos_{0.0}, tail_usin_{0.0};
    double scale_ = 0.0;
};

// 2 (u/2)^nu / (sqrt(pi) Gamma(nu + 1/2)), the factor turning I(u) into J_nu(u).
inline LogScaled poisson_prefactor(std::complex<double> nu, double u) {
    const double log2_over_sqrtpi = std::numbers::ln2 - 0.5 * std::log(std::numbers::pi);
    return LogScaled::from_log(nu * std::log(0.5 * u) + log2_over_sqrtpi) / gamma_scaled(nu + 0.5);
}

inline BesselResult bessel_j_quadrature(std::complex<double> nu, double u, double target = 1e-10,
                                        double phase_per_panel = 6.0 * std::numbers::pi) {
    if (!(nu.real() > -0.5)) throw domain_error("quadrature requires Re nu > -1/2");
    BesselResult out;
    if (detail::check_zero_argument(nu, u, out, BesselMethod::PoissonQuadrature)) return out;
    const double eps = std::numeric_limits<double>::epsilon();
    PoissonIntegral coarse(nu, u, phase_per_panel);
    std::complex<double> prev = coarse(u);
    double phi = phase_per_panel;
    double err = std::numeric_limits<double>::infinity(), disc = err, abs_err = err;
    std::complex<double> value = prev;
    for (int refine = 0; refine < 3; ++refine) {
        phi *= 0.5;
        PoissonIntegral fine(nu, u, phi);
        value = fine(u);
        double mag = std::abs(value);
        disc = std::abs(value - prev) / fine.scale();
        double rounding = 8.0 * eps * fine.scale() * std::sqrt(static_cast<double>(fine.size()));
        abs_err = std::abs(value - prev) + rounding;
        err = mag > 0.0 ? abs_err / mag : std::numeric_limits<double>::infinity();
        if (err <= target) break;
        prev = value;
    }
    if (disc > 1e-8) throw method_failure("Poisson quadrature did not converge");
    LogScaled pre = poisson_prefactor(nu, u);
    return detail::make_result(pre * LogScaled::from_complex(value), BesselMethod::PoissonQuadrature, std::log(abs_err) + pre.log_magnitude);
}

inline double asymptotic_threshold(std::complex<double> nu, double u_large = 1.0) {
    return u_large * std::max(1.0, std::norm(nu));
}

// Hankel expansion J = sqrt(2/(pi u)) (P cos chi - Q sin chi), chi = u - nu pi/2 - pi/4,
// summed until the terms stop decreasing; terms = 1 keeps only the leading cosine.
inline BesselResult bessel_j_asymptotic(std::complex<double> nu, double u, int terms = 0, double u_large = 1.0) {
    if (!(u >= asymptotic_threshold(nu, u_large)))
        throw domain_error("asymptotic expansion needs u >= " + std::to_string(asymptotic_threshold(nu, u_large)));
    const std::complex<double> mu = 4.0 * nu * nu;
    const std::complex<double> I(0.0, 1.0);
    // P + iQ = sum_j i^j a_j u^-j;  P - iQ = sum_j (-i)^j a_j u^-j
    std::complex<double> a = 1.0, plus = 1.0, minus = 1.0, ip = 1.0;
    double last = 1.0, err = 0.0;
    int max_terms = terms > 0 ? terms : 200;
    for (int j = 1;; ++j) {
        std::complex<double> next = a * (mu - std::pow(2.0 * j - 1.0, 2)) / (8.0 * j * u);
        double mag = std::abs(next);
        if (j >= max_terms) { err = mag; break; }
        if (mag == 0.0) { err = std::numeric_limits<double>::epsilon(); break; }
        if (mag > last) { err = last; break; }
        a = next;
        ip *= I;
        plus += ip * a;
        minus += std::conj(ip) * a;
        last = mag;
        if (mag < 1e-17) { err = mag; break; }
    }
    // chi has imaginary part -pi Im(nu)/2; factor out the dominant exponential.
    // reduce u mod 2 pi in long double so the phase keeps full double accuracy
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const double u_red = static_cast<double>(std::fmod(static_cast<long double>(u), two_pi));
    const std::complex<double> chi = u_red - nu * (0.5 * std::numbers::pi) - 0.25 * std::numbers::pi;
    const bool upper = nu.imag() >= 0.0;
    std::complex<double> lead = upper ? I * chi : -I * chi;
    std::complex<double> mantissa = upper ? plus + std::exp(-2.0 * I * chi) * minus : minus + std::exp(2.0 * I * chi) * plus;
    LogScaled scale = LogScaled::from_log(lead + 0.5 * std::log(2.0 / (std::numbers::pi * u)) - std::numbers::ln2);
    err += u * std::numeric_limits<long double>::epsilon();
    double log_abs = std::log(2.0 * std::max(err, std::numeric_limits<double>::epsilon())) + scale.log_magnitude;
    return detail::make_result(scale * LogScaled::from_complex(mantissa), BesselMethod::Asymptotic, log_abs);
}

inline BesselResult bessel_j(std::complex<double> nu, double u, BesselMethod method = BesselMethod::Auto,
                             const BesselConfig& cfg = {}) {
    switch (method) {
        case BesselMethod::AscendingSeries: return bessel_j_series(nu, u, cfg.series_digits);
        case BesselMethod::PoissonQuadrature: return bessel_j_quadrature(nu, u, cfg.target, cfg.phase_per_panel);
        case BesselMethod::Asymptotic: return bessel_j_asymptotic(nu, u, cfg.asymptotic_terms, cfg.u_large);
        case BesselMethod::Auto: break;
    }
    if (!(nu.real() > -0.5)) throw domain_error("Auto dispatch requires Re nu > -1/2");
    BesselResult zero;
    if (detail::check_zero_argument(nu, u, zero, BesselMethod::Auto)) return zero;

    // Past the turning point accuracy is judged against the oscillation amplitude,
    // so values near a zero of J are not rejected for their relative error.
    const double anu = std::abs(nu);
    const bool oscillatory = u >= std::max(1.0, anu);
    const double log_amp = detail::log_amplitude(nu, u);
    auto effective = [&](const BesselResult& r) {
        if (!oscillatory) return r.error_estimate;
        return std::exp(r.log_abs_error - std::max(r.value.is_zero() ? log_amp : r.value.log_magnitude, log_amp));
    };
    std::ostringstream diag;
    BesselResult best;
    double best_err = std::numeric_limits<double>::infinity();
    auto consider = [&](BesselMethod m, auto&& eval) {
        try {
            BesselResult r = eval();
            double e = effective(r);
            diag << to_string(m) << ": est " << e << "; ";
            if (e < best_err) best = r, best_err = e;
            return e <= cfg.target;
        } catch (const std::exception& e) {
            diag << to_string(m) << ": " << e.what() << "; ";
            return false;
        }
    };
    if (u >= asymptotic_threshold(nu, cfg.u_large) &&
        consider(BesselMethod::Asymptotic, [&] { return bessel_j_asymptotic(nu, u, cfg.asymptotic_terms, cfg.u_large); }))
        return best;
    if (u <= cfg.u_small * std::max(1.0, anu) &&
        consider(BesselMethod::AscendingSeries, [&] { return bessel_j_series(nu, u, cfg.series_digits); }))
        return best;
    if (consider(BesselMethod::PoissonQuadrature, [&] { return bessel_j_quadrature(nu, u, cfg.target, cfg.phase_per_panel); }))
        return best;
    if (best_err <= cfg.accept) return best;
    std::ostringstream msg;
    msg << "no Bessel method reached tolerance for nu = " << nu << ", u = " << u << " (" << diag.str() << ")";
    throw evaluation_error(msg.str());
}

}  // namespace hlcesaro
