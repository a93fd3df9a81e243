#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gamma.hpp"
#include "log_scaled.hpp"
#include "quadrature.hpp"
#include "sieve.hpp"
#include "summation.hpp"
#include "zeros.hpp"

namespace hlcesaro {

struct HalfPlanePoint {
    double a = 1.0;
    double y = 0.0;
    HalfPlanePoint(double a_, double y_ = 0.0) : a(a_), y(y_) {
        if (!(a > 0.0)) throw invalid_argument("half-plane point needs a > 0");
    }
    explicit HalfPlanePoint(std::complex<double> z) : HalfPlanePoint(z.real(), z.imag()) {}
    std::complex<double> z() const { return {a, y}; }
};

// omega_2(z) = sum_{m>=1} exp(-m^2 z); Auto stops once exp(-m^2 a) < 1e-18.
inline std::complex<double> omega2_direct(HalfPlanePoint p, std::optional<int> terms = {}) {
    const std::complex<double> z = p.z();
    int M = terms ? *terms : static_cast<int>(std::floor(std::sqrt(18.0 * std::numbers::ln10 / p.a))) + 1;
    ComplexAccumulator acc;
    for (int m = 1; m <= M; ++m) acc += std::exp(-static_cast<double>(m) * m * z);
    return acc.value();
}

struct SeriesValue {
    std::complex<double> value;
    double tail_estimate = 0.0;
};

// S~(z) = sum_{m>=1} Lambda(m) exp(-m z) up to m = 40/a, with the dropped tail bounded.
inline SeriesValue s_tilde_direct(HalfPlanePoint p, const VonMangoldtTable& table, const std::vector<double>* lambdas = nullptr) {
    const auto M = static_cast<std::uint64_t>(std::ceil(40.0 / p.a));
    if (table.limit() < M) throw out_of_range("S~ at a = " + std::to_string(p.a) + " needs a sieve limit of at least " + std::to_string(M));
    std::vector<double> local;
    if (!lambdas) {
        local = table.lambda_values();
        lambdas = &local;
    }
    const std::complex<double> z = p.z();
    const std::complex<double> step = std::exp(-z);
    ComplexAccumulator acc;
    std::complex<double> e;
    for (std::uint64_t m = 1; m <= M; ++m) {
        // re-anchor the geometric recurrence every 64 terms
        e = (m % 64 == 1) ? std::exp(-static_cast<double>(m) * z) : e * step;
        double l = (*lambdas)[m];
        if (l != 0.0) acc += l * e;
    }
    double ea = std::exp(-p.a * static_cast<double>(M + 1));
    return {acc.value(), std::log(static_cast<double>(M + 1)) * ea / (1.0 - std::exp(-p.a)) * 1.1};
}

// |omega_2(z) - [ (pi/z)^(1/2)/2 - 1/2 + (pi/z)^(1/2) omega_2(pi^2/z) ]|
inline double check_theta_modularity(HalfPlanePoint p) {
    const std::complex<double> z = p.z();
    const std::complex<double> r = std::sqrt(std::numbers::pi / z);
    const std::complex<double> dual = omega2_direct(HalfPlanePoint(std::numbers::pi * std::numbers::pi / z));
    return std::abs(omega2_direct(p) - (0.5 * r - 0.5 + r * dual));
}

// (1/2 pi) int_{-span}^{span} exp(i D y) (a + i y)^(-s) dy, which tends to
// D^(s-1) exp(-a D) / Gamma(s) for D > 0 and to 0 for D < 0.
inline std::complex<double> laplace_line_integral(std::complex<double> s, double a, double D, double span) {
    if (!(s.real() > 0.0)) throw domain_error("Laplace line integral needs Re s > 0");
    if (!(a > 0.0) || !(span > 0.0)) throw invalid_argument("Laplace line integral needs a > 0 and span > 0");
    const double freq = std::max(std::abs(D), 1.0);
    const std::complex<double> I(0.0, 1.0);
    ComplexAccumulator acc;
    auto f = [&](double y) { return std::exp(I * (D * y) - s * std::log(std::complex<double>(a, y))); };
    for (int side : {1, -1}) {
        double y = 0.0;
        while (y < span) {
            double h = std::min({2.0 * std::numbers::pi / freq, 0.5 * std::max(a, y), span - y});
            for_each_node<20>(y, y + h, [&](double t, double w) { acc += w * f(side * t); });
            y += h;
        }
        // Beyond the span: repeated integration by parts of e^(iDy) g(y), g = (a+iy)^-s.
        // Without oscillation (D = 0) the symmetric truncation is a principal value.
        if (D != 0.0) {
            const double Y = side * span;
            std::complex<double> deriv = std::exp(-s * std::log(std::complex<double>(a, Y)));  // g^(j)(Y)
            std::complex<double> tail = 0.0, iD = I * D;
            for (int j = 0; j < 6; ++j) {
                tail += ((j % 2 == 0) ? -1.0 : 1.0) * deriv / std::pow(iD, j + 1);
                deriv *= (-s - static_cast<double>(j)) * I / std::complex<double>(a, Y);
            }
            // from +span to +inf adds tail; from -inf to -span subtracts the same expression at -span
            acc += static_cast<double>(side) * std::exp(iD * Y) * tail;
        }
    }
    return acc.value() / (2.0 * std::numbers::pi);
}

// |(1/2 pi i) int_(a) v^-s e^v dv - 1/Gamma(s)| with the line truncated at |Im v| <= span.
inline double check_laplace_identity(std::complex<double> s, double a, double span) {
    std::complex<double> q = std::exp(a) * laplace_line_integral(s, a, 1.0, span);
    std::complex<double> target = std::exp(-log_gamma(s));
    return std::abs(q - target);
}

struct LinnikResult {
    double residual = 0.0;
    double shape = 0.0;   // |z|^(1/2) (1 + log^2(|y|/a)) for |y| > a, else |z|^(1/2)
};

// |S~(z) - 1/z + sum_rho Gamma(rho) z^-rho| over the first Z conjugate pairs.
inline LinnikResult check_linnik_expansion(HalfPlanePoint p, const ZeroList& zeros, const VonMangoldtTable& table,
                                           std::size_t Z = std::numeric_limits<std::size_t>::max()) {
    if (!(p.a <= 1.0)) throw invalid_argument("Linnik check needs a in (0, 1]");
    const std::complex<double> z = p.z(), lz = std::log(z);
    ComplexAccumulator zsum;
    for (std::size_t j = 0; j < std::min(Z, zeros.count()); ++j) {
        for (double g : {zeros.gammas[j], -zeros.gammas[j]}) {
            std::complex<double> rho(0.5, g);
            zsum += (gamma_scaled(rho) * LogScaled::from_log(-rho * lz)).to_complex();
        }
    }
    LinnikResult r;
    r.residual = std::abs(s_tilde_direct(p, table).value - 1.0 / z + zsum.value());
    double ratio = std::abs(p.y) / p.a;
    r.shape = std::sqrt(std::abs(z)) * (ratio > 1.0 ? 1.0 + std::pow(std::log(ratio), 2) : 1.0);
    return r;
}

// |z^-w| = |z|^-Re(w) exp(Im(w) arctan(y/a)) against the direct principal power.
inline double check_power_magnitude_law(HalfPlanePoint p, std::complex<double> w) {
    double law = std::pow(std::abs(p.z()), -w.real()) * std::exp(w.imag() * std::atan(p.y / p.a));
    double direct = std::abs(std::pow(p.z(), -w));
    return std::abs(law - direct) / direct;
}

// Re(1/z) = N / (1 + N^2 y^2) at a = 1/N.
inline double check_real_part_law(double N, double y) {
    double direct = (1.0 / std::complex<double>(1.0 / N, y)).real();
    double law = N / (1.0 + N * N * y * y);
    return std::abs(direct - law) / std::abs(law);
}

struct LineIntegralResult {
    double integral = 0.0;        // scaled-normalization LHS from the line integral
    double lhs = 0.0;             // sieve value, scaled normalization
    double relative_residual = 0.0;
    double span = 0.0;
};

// (1/2 pi i) int_(1/N) e^(N z) z^(-k-1) S~(z) omega_2(z) dz against the sieved LHS.
inline LineIntegralResult lhs_line_integral_check(const CesaroQuery& query, const VonMangoldtTable& table, double tol = 1e-5) {
    CesaroQuery q = query;
    q.normalization = Normalization::ScaledByNk;
    validate(q);
    if (q.N > 200) throw invalid_argument("line-integral check is limited to N <= 200");
    const double N = static_cast<double>(q.N), a = 1.0 / N, k = q.k;
    const auto M = static_cast<std::uint64_t>(std::ceil(40.0 * N));
    if (table.limit() < M) throw out_of_range("line-integral check needs a sieve limit of at least " + std::to_string(M));
    const auto lam = table.lambda_values();

    LineIntegralResult r;
    r.lhs = cesaro_lhs(q, table);
    auto integrand = [&](double y) {
        HalfPlanePoint p(a, y);
        std::complex<double> z = p.z();
        std::complex<double> st = s_tilde_direct(p, table, &lam).value;
        return std::exp(N * z - (k + 1.0) * std::log(z)) * st * omega2_direct(p);
    };
    // integrand(-y) = conj(integrand(y)); the tail beyond Y is bounded by the envelope
    // e S~(a) omega_2(a) y^(-k-1).
    const double env = std::exp(1.0) * s_tilde_direct(HalfPlanePoint(a), table, &lam).value.real() * omega2_direct(HalfPlanePoint(a)).real();
    const double h_max = 6.0 * std::numbers::pi / static_cast<double>(M);
    Accumulator acc;
    double y = 0.0;
    for (;;) {
        double h = h_max;
        for_each_node<20>(y, y + h, [&](double t, double w) { acc += w * integrand(t).real(); });
        y += h;
        double tail = env * std::pow(y, -k) / (k * std::numbers::pi);
        if (tail < tol * std::abs(r.lhs)) break;
        if (y > 1e4) throw method_failure("line integral span exceeded 1e4");
    }
    r.span = y;
    r.integral = acc.value() / std::numbers::pi;
    r.relative_residual = std::abs(r.integral - r.lhs) / std::abs(r.lhs);
    return r;
}

}  // namespace hlcesaro
