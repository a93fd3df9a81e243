#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bessel.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "log_scaled.hpp"
#include "sieve.hpp"
#include "summation.hpp"
#include "zeros.hpp"

namespace hlcesaro {

struct TruncationConfig {
    std::size_t zero_count = 10000;                      // Z
    std::optional<int> ell_max;                          // empty = Auto
    std::optional<std::size_t> double_sum_zero_count;    // Z2; empty = min(Z, 2000)
    double term_floor = 1e-16;                           // relative to |T1| + |T2|
    double tail_rtol = 1e-8;                             // total l-tail budget of the double sum, relative to |T1| + |T2|
    double ell_scale = 1.0;                              // multiplies every Auto L
    bool tail_report = true;
    bool explicit_conjugates = false;                    // sum rho and conj(rho) separately
    BesselConfig bessel;

    std::size_t z2(const ZeroList& zeros) const {
        std::size_t z = std::min(zero_count, zeros.count());
        return std::min(z, double_sum_zero_count.value_or(std::min<std::size_t>(zero_count, 2000)));
    }
};

inline void validate(const TruncationConfig& cfg) {
    if (cfg.double_sum_zero_count && *cfg.double_sum_zero_count > cfg.zero_count)
        throw invalid_argument("double_sum_zero_count must not exceed zero_count");
    if (cfg.ell_max && *cfg.ell_max < 0) throw invalid_argument("ell_max must be >= 0");
    if (!(cfg.term_floor >= 0.0) || !(cfg.tail_rtol > 0.0)) throw invalid_argument("term_floor must be >= 0 and tail_rtol > 0");
    if (!(cfg.ell_scale >= 1.0)) throw invalid_argument("ell_scale must be >= 1");
}

struct TermValue {
    double value = 0.0;
    double imag_residue = 0.0;
    double tail_estimate = 0.0;   // +inf when unknown
    bool imag_ok() const { return imag_residue <= 1e-8 * std::max(1.0, std::abs(value)); }
};

struct TermBreakdown {
    std::array<TermValue, 6> terms{};
    double total = 0.0;
    std::size_t zeros_used = 0;          // pairs in T3, T4
    std::size_t double_sum_zeros = 0;    // pairs in T6
    int l_max_t5 = 0;
    int l_max_t6 = 0;                    // largest per-zero L in T6
    std::uint64_t bessel_terms_t6 = 0;   // (rho, l) pairs evaluated

    const TermValue& operator[](int i) const { return terms[i - 1]; }
    TermValue& operator[](int i) { return terms[i - 1]; }
    int l_max() const { return std::max(l_max_t5, l_max_t6); }
    double tail_total() const {
        double s = 0.0;
        for (const auto& t : terms) s += t.tail_estimate;
        return s;
    }
    bool imag_ok() const {
        return std::all_of(terms.begin(), terms.end(), [](const TermValue& t) { return t.imag_ok(); });
    }
};

namespace detail {

inline double normalization_factor(double N, double k, Normalization norm) {
    return norm == Normalization::ScaledByNk ? std::pow(N, k) : 1.0;
}

inline void scale_term(TermValue& t, double f) {
    t.value *= f;
    t.imag_residue *= f;
    t.tail_estimate *= f;
}

// sum over zeros beyond height G of coeff * gamma^-a, against the density log(gamma/2pi)/2pi.
inline double zero_tail_envelope(double G, double a, double coeff) {
    double b = a - 1.0;
    double lg = std::max(std::log(G / (2.0 * std::numbers::pi)), 0.0);
    return coeff / (2.0 * std::numbers::pi) * std::pow(G, -b) * (lg / b + 1.0 / (b * b));
}

// -sqrt(pi)/2 * sum_rho Gamma(rho)/Gamma(c + rho) N^(e + rho) style sums.
inline TermValue zero_sum(double N, double c, double e, double coeff, const ZeroList& zeros, std::size_t Z,
                          bool explicit_conjugates) {
    TermValue out;
    Accumulator paired;
    ComplexAccumulator both;
    for (std::size_t j = 0; j < Z; ++j) {
        std::complex<double> rho(0.5, zeros.gammas[j]);
        std::complex<double> rb = std::conj(rho);
        std::complex<double> a = (gamma_ratio(rho, c + rho) * real_power(N, e + rho)).to_complex();
        std::complex<double> b = (gamma_ratio(rb, c + rb) * real_power(N, e + rb)).to_complex();
        paired += 2.0 * a.real();
        both += a + b;
    }
    out.value = coeff * (explicit_conjugates ? both.value().real() : paired.value());
    out.imag_residue = std::abs(coeff * both.value().imag());
    return out;
}

}  // namespace detail

// T1 = sqrt(pi)/2 N^(3/2) / Gamma(k + 5/2),  T2 = -N / (2 Gamma(k + 2)).
inline std::pair<double, double> main_terms(double N, double k, Normalization norm = Normalization::Divided) {
    if (!(k > 0.5)) throw invalid_argument("main terms need k > 1/2");
    if (!(N > 0.0)) throw invalid_argument("N must be positive");
    double f = detail::normalization_factor(N, k, norm);
    double t1 = 0.5 * std::sqrt(std::numbers::pi) * std::exp(1.5 * std::log(N) - std::lgamma(k + 2.5));
    double t2 = -N / (2.0 * std::tgamma(k + 2.0));
    return {t1 * f, t2 * f};
}

inline double main_scale(double N, double k) {
    auto [t1, t2] = main_terms(N, k);
    return std::abs(t1) + std::abs(t2);
}

// T3 = -(sqrt(pi)/2) sum_rho Gamma(rho)/Gamma(k+3/2+rho) N^(1/2+rho).
inline TermValue zero_sum_primary(double N, double k, const ZeroList& zeros, const TruncationConfig& cfg,
                                  Normalization norm = Normalization::Divided) {
    if (!(k > -0.5)) throw domain_error("zero_sum_primary needs k > -1/2");
    std::size_t Z = std::min(cfg.zero_count, zeros.count());
    TermValue t = detail::zero_sum(N, k + 1.5, 0.5, -0.5 * std::sqrt(std::numbers::pi), zeros, Z, cfg.explicit_conjugates);
    t.tail_estimate = Z == 0 ? std::numeric_limits<double>::infinity()
                             : detail::zero_tail_envelope(zeros.gammas[Z - 1], k + 1.5, std::sqrt(std::numbers::pi) * N);
    detail::scale_term(t, detail::normalization_factor(N, k, norm));
    return t;
}

// T4 = (1/2) sum_rho Gamma(rho)/Gamma(k+1+rho) N^rho.
inline TermValue zero_sum_secondary(double N, double k, const ZeroList& zeros, const TruncationConfig& cfg,
                                    Normalization norm = Normalization::Divided) {
    if (!(k > 0.0)) throw domain_error("zero_sum_secondary needs k > 0");
    std::size_t Z = std::min(cfg.zero_count, zeros.count());
    TermValue t = detail::zero_sum(N, k + 1.0, 0.0, 0.5, zeros, Z, cfg.explicit_conjugates);
    t.tail_estimate = Z == 0 ? std::numeric_limits<double>::infinity()
                             : detail::zero_tail_envelope(zeros.gammas[Z - 1], k + 1.0, std::sqrt(N));
    detail::scale_term(t, detail::normalization_factor(N, k, norm));
    return t;
}

struct EllSumResult {
    TermValue term;
    int L = 0;
};

// T5 = N^(3/4-k/2) / pi^(k+1) sum_l J_(k+3/2)(2 pi l sqrt(N)) / l^(k+3/2).
inline EllSumResult bessel_ell_sum(double N, double k, const TruncationConfig& cfg,
                                   Normalization norm = Normalization::Divided) {
    if (!(k > -1.0)) throw domain_error("bessel_ell_sum needs k > -1");
    const double nu = k + 1.5;
    const double pref = std::exp((0.75 - 0.5 * k) * std::log(N) - (k + 1.0) * std::log(std::numbers::pi));
    const double u1 = 2.0 * std::numbers::pi * std::sqrt(N);
    const double floor_abs = cfg.term_floor * main_scale(N, k);
    auto envelope = [&](double l) { return pref * std::sqrt(2.0 / (std::numbers::pi * u1 * l)) * std::pow(l, -nu); };

    int L;
    if (cfg.ell_max) {
        L = *cfg.ell_max;
    } else {
        L = 1;
        while (envelope(L) >= floor_abs && L < 10000000) ++L;
        L = static_cast<int>(std::ceil(L * cfg.ell_scale));
    }
    Accumulator re;
    double im = 0.0;
    for (int l = 1; l <= L; ++l) {
        BesselResult r = bessel_j(nu, u1 * l, BesselMethod::Auto, cfg.bessel);
        std::complex<double> j = r.to_complex();
        double w = pref * std::pow(static_cast<double>(l), -nu);
        re += w * j.real();
        im += w * std::abs(j.imag());
    }
    EllSumResult out;
    out.L = L;
    out.term.value = re.value();
    out.term.imag_residue = im;
    out.term.tail_estimate = L == 0 ? std::numeric_limits<double>::infinity()
                                    : pref / (std::numbers::pi * std::pow(N, 0.25)) * std::pow(L, -(k + 1.0)) / (k + 1.0);
    detail::scale_term(out.term, detail::normalization_factor(N, k, norm));
    return out;
}

struct DoubleSumResult {
    TermValue term;
    std::size_t zeros = 0;
    int l_max = 0;
    std::uint64_t bessel_terms = 0;
    std::vector<double> pair_magnitudes;   // |contribution| of each conjugate pair
    std::vector<int> pair_L;
};

namespace detail {

// Gamma(rho) N^(rho/2) pi^-rho * [2 (u/2)^nu / (sqrt(pi) Gamma(nu+1/2))] / l^nu, which is
// independent of l because (u_l/2)^nu / l^nu = (pi sqrt(N))^nu.
inline LogScaled double_sum_zero_factor(double N, double k, std::complex<double> rho) {
    const std::complex<double> nu = k + 0.5 + rho;
    const double lpi = std::log(std::numbers::pi), lN = std::log(N);
    std::complex<double> lg = rho * (0.5 * lN) - rho * lpi + nu * (lpi + 0.5 * lN) + std::numbers::ln2 - 0.5 * lpi;
    return gamma_scaled(rho) * LogScaled::from_log(lg) / gamma_scaled(nu + 0.5);
}

}  // namespace detail

// T6 = -N^(1/4-k/2)/pi^k sum_rho Gamma(rho) N^(rho/2) pi^-rho sum_l J_(k+1/2+rho)(2 pi l sqrt N) / l^(k+1/2+rho).
// Per zero, one Poisson-integral node set serves every l; Auto L grows until the
// modelled l-tail (terms decay like l^-(k+3/2)) is within the per-zero budget.
inline DoubleSumResult bessel_double_sum(double N, double k, const ZeroList& zeros, const TruncationConfig& cfg,
                                         Normalization norm = Normalization::Divided, bool exploratory = false) {
    if (!(k > 1.0) && !exploratory) throw domain_error("bessel_double_sum needs k > 1");
    DoubleSumResult out;
    const std::size_t Z2 = cfg.z2(zeros);
    out.zeros = Z2;
    const double common = -std::exp((0.25 - 0.5 * k) * std::log(N) - k * std::log(std::numbers::pi));
    const double u1 = 2.0 * std::numbers::pi * std::sqrt(N);
    const double scale = main_scale(N, k);
    const double budget = cfg.tail_rtol * scale / std::max<std::size_t>(Z2, 1);
    const double decay = k + 1.5;
    Accumulator total;
    ComplexAccumulator both;
    double ell_tail = 0.0;
    std::vector<std::complex<double>> I, Ib;
    if (cfg.ell_max && *cfg.ell_max == 0) {
        out.term.tail_estimate = std::numeric_limits<double>::infinity();
        return out;
    }
    for (std::size_t j = 0; j < Z2; ++j) {
        const double g = zeros.gammas[j];
        const std::complex<double> rho(0.5, g), nu = k + 0.5 + rho;
        const LogScaled zf = detail::double_sum_zero_factor(N, k, rho);
        const LogScaled zfb = detail::double_sum_zero_factor(N, k, std::conj(rho));
        const double mag = std::abs(common) * zf.magnitude();

        auto run = [&](int L) {
            try {
                PoissonIntegral pi(nu, L * u1, cfg.bessel.phase_per_panel);
                pi.harmonics(u1, L, I);
                if (cfg.explicit_conjugates) {
                    PoissonIntegral pib(std::conj(nu), L * u1, cfg.bessel.phase_per_panel);
                    pib.harmonics(u1, L, Ib);
                } else {
                    Ib.resize(I.size());
                    std::transform(I.begin(), I.end(), Ib.begin(), [](auto z) { return std::conj(z); });
                }
                out.bessel_terms += static_cast<std::uint64_t>(L) * (cfg.explicit_conjugates ? 2 : 1);
            } catch (const std::exception& e) {
                std::ostringstream msg;
                msg << "double sum failed at zero #" << (j + 1) << " (gamma = " << g << "), l <= " << L << ": " << e.what();
                throw evaluation_error(msg.str());
            }
        };
        // Sum over l > L of terms decaying like l^-decay, scaled from the largest of the last quarter.
        auto tail_of = [&](int L) {
            double m = 0.0;
            for (int l = (3 * L) / 4 + 1; l <= L; ++l) m = std::max(m, std::abs(I[l - 1]));
            return 2.0 * mag * m * L / (decay - 1.0);
        };

        int L;
        double tail;
        if (cfg.ell_max) {
            L = *cfg.ell_max;
            run(L);
            tail = tail_of(L);
        } else {
            double l0 = g / (std::numbers::pi * std::sqrt(N));
            L = std::max(4, static_cast<int>(std::ceil(2.0 * l0)) + 2);
            run(L);
            tail = tail_of(L);
            while (tail > budget && L < (1 << 16)) {
                double grow = std::pow(tail / budget, 1.0 / (decay - 1.0)) * 1.15;
                L = static_cast<int>(std::ceil(L * std::clamp(grow, 1.25, 64.0)));
                run(L);
                tail = tail_of(L);
            }
            if (cfg.ell_scale > 1.0) {
                L = static_cast<int>(std::ceil(L * cfg.ell_scale));
                run(L);
                tail = tail_of(L);
            }
        }
        out.l_max = std::max(out.l_max, L);
        out.pair_L.push_back(L);

        ComplexAccumulator s, sb;
        for (int l = 0; l < L; ++l) {
            s += I[l];
            sb += Ib[l];
        }
        std::complex<double> a = common * (zf * LogScaled::from_complex(s.value())).to_complex();
        std::complex<double> b = common * (zfb * LogScaled::from_complex(sb.value())).to_complex();
        total += 2.0 * a.real();
        both += a + b;
        out.pair_magnitudes.push_back(2.0 * std::abs(a));
        ell_tail += tail;
    }
    out.term.value = cfg.explicit_conjugates ? both.value().real() : total.value();
    out.term.imag_residue = std::abs(both.value().imag());
    double zero_tail = Z2 == 0 ? std::numeric_limits<double>::infinity()
                               : 2.0 * detail::zero_tail_envelope(zeros.gammas[Z2 - 1], k + 1.5, std::sqrt(std::numbers::pi) * N);
    out.term.tail_estimate = ell_tail + zero_tail;
    detail::scale_term(out.term, detail::normalization_factor(N, k, norm));
    return out;
}

// The same double sum term by term through the Bessel dispatcher, for cross-checks.
inline std::complex<double> bessel_double_sum_direct(double N, double k, const ZeroList& zeros, std::size_t Z2, int L,
                                                     const BesselConfig& bcfg = {}) {
    const double common = -std::exp((0.25 - 0.5 * k) * std::log(N) - k * std::log(std::numbers::pi));
    const double u1 = 2.0 * std::numbers::pi * std::sqrt(N);
    ComplexAccumulator acc;
    for (std::size_t j = 0; j < std::min(Z2, zeros.count()); ++j) {
        for (std::complex<double> rho : {std::complex<double>(0.5, zeros.gammas[j]), std::complex<double>(0.5, -zeros.gammas[j])}) {
            const std::complex<double> nu = k + 0.5 + rho;
            LogScaled zf = gamma_scaled(rho) * real_power(N, 0.5 * rho) * real_power(std::numbers::pi, -rho);
            for (int l = 1; l <= L; ++l) {
                BesselResult J = bessel_j(nu, u1 * l, BesselMethod::Auto, bcfg);
                acc += common * (zf * J.value / real_power(l, nu)).to_complex();
            }
        }
    }
    return acc.value();
}

inline TermBreakdown evaluate_rhs(const CesaroQuery& q, const ZeroList& zeros, const TruncationConfig& cfg,
                                  std::map<std::string, double>* timings = nullptr) {
    validate(q);
    validate(cfg);
    using clock = std::chrono::steady_clock;
    auto lap = [&, t0 = clock::now()](const char* name) mutable {
        auto t = clock::now();
        if (timings) (*timings)[name] = std::chrono::duration<double>(t - t0).count();
        t0 = t;
    };
    const double N = static_cast<double>(q.N), k = q.k;
    TermBreakdown b;
    auto [t1, t2] = main_terms(N, k, q.normalization);
    b[1].value = t1;
    b[2].value = t2;
    lap("main_terms");
    b[3] = zero_sum_primary(N, k, zeros, cfg, q.normalization);
    b[4] = zero_sum_secondary(N, k, zeros, cfg, q.normalization);
    b.zeros_used = std::min(cfg.zero_count, zeros.count());
    lap("zero_sums");
    auto t5 = bessel_ell_sum(N, k, cfg, q.normalization);
    b[5] = t5.term;
    b.l_max_t5 = t5.L;
    lap("bessel_ell_sum");
    auto t6 = bessel_double_sum(N, k, zeros, cfg, q.normalization, q.exploratory);
    b[6] = t6.term;
    b.double_sum_zeros = t6.zeros;
    b.l_max_t6 = t6.l_max;
    b.bessel_terms_t6 = t6.bessel_terms;
    lap("bessel_double_sum");
    Accumulator tot;
    for (const auto& t : b.terms) tot += t.value;
    b.total = tot.value();
    return b;
}

struct VerificationReport {
    CesaroQuery query;
    TruncationConfig config;
    double lhs = 0.0;
    TermBreakdown breakdown;
    double residual = 0.0;
    std::size_t zeros_loaded = 0;
    std::string zeros_path;
    std::string zeros_digest;
    int zeros_min_decimals = 0;
    bool zeros_low_precision = false;
    bool zeros_anchor_ok = true;
    std::map<std::string, double> timings;   // seconds; outside the determinism contract
};

inline VerificationReport verify(const CesaroQuery& q, const ZeroList& zeros, const TruncationConfig& cfg,
                                 const VonMangoldtTable* table = nullptr) {
    validate(q);
    validate(cfg);
    VerificationReport r;
    r.query = q;
    r.config = cfg;
    auto t0 = std::chrono::steady_clock::now();
    VonMangoldtTable local;
    if (!table || table->limit() < q.N) {
        local = sieve_von_mangoldt(q.N);
        table = &local;
    }
    auto t1 = std::chrono::steady_clock::now();
    r.timings["sieve"] = std::chrono::duration<double>(t1 - t0).count();
    r.lhs = cesaro_lhs(q, *table);
    r.timings["lhs"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    r.breakdown = evaluate_rhs(q, zeros, cfg, &r.timings);
    r.residual = r.lhs - r.breakdown.total;
    r.zeros_loaded = zeros.count();
    r.zeros_path = zeros.source_path;
    r.zeros_digest = zeros.source_digest;
    r.zeros_min_decimals = zeros.min_decimals;
    r.zeros_low_precision = zeros.low_precision();
    r.zeros_anchor_ok = passes_anchor(zeros);
    return r;
}

}  // namespace hlcesaro
