#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "summation.hpp"

namespace hlcesaro {

// Lambda(m) stored as the prime base p of m = p^j (0 when m is not a prime power).
class VonMangoldtTable {
public:
    VonMangoldtTable() = default;
    explicit VonMangoldtTable(std::vector<std::uint32_t> base) : base_(std::move(base)) {}

    std::uint64_t limit() const { return base_.empty() ? 0 : base_.size() - 1; }
    std::uint32_t prime_base(std::uint64_t m) const {
        if (m > limit()) throw out_of_range("von Mangoldt table limit " + std::to_string(limit()) + " < " + std::to_string(m));
        return base_[m];
    }
    double lambda(std::uint64_t m) const {
        auto p = prime_base(m);
        return p ? std::log(static_cast<double>(p)) : 0.0;
    }
    // Lambda(0..limit) as doubles, for inner loops.
    std::vector<double> lambda_values() const {
        std::vector<double> out(base_.size(), 0.0);
        for (std::size_t m = 0; m < base_.size(); ++m)
            if (base_[m]) out[m] = std::log(static_cast<double>(base_[m]));
        return out;
    }

private:
    std::vector<std::uint32_t> base_;
};

inline VonMangoldtTable sieve_von_mangoldt(std::uint64_t limit) {
    if (limit == 0) throw invalid_argument("sieve limit must be >= 1");
    if (limit > 4000000000ULL) throw invalid_argument("sieve limit too large");
    std::vector<std::uint32_t> base(limit + 1, 0);
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
        for (std::uint64_t q = p; q <= limit; q *= p) {
            base[q] = static_cast<std::uint32_t>(p);
            if (q > limit / p) break;
        }
    }
    return VonMangoldtTable(std::move(base));
}

// Sum of Lambda(n - m^2) over 1 <= m, m^2 < n.
inline double r_hl(std::uint64_t n, const VonMangoldtTable& table) {
    if (n > table.limit()) throw out_of_range("r_hl(" + std::to_string(n) + ") exceeds table limit " + std::to_string(table.limit()));
    Accumulator acc;
    for (std::uint64_t m = 1; m * m < n; ++m) acc += table.lambda(n - m * m);
    return acc.value();
}

namespace detail {

inline double lambda_trial_division(std::uint64_t m) {
    if (m < 2) return 0.0;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) { p = d; break; }
    if (p == 0) return std::log(static_cast<double>(m));
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

}  // namespace detail

// Slow reference path: enumerate m1 + m2^2 = n with trial-division Lambda.
inline double r_hl_bruteforce(std::uint64_t n) {
    Accumulator acc;
    for (std::uint64_t m2 = 1; m2 * m2 < n; ++m2) acc += detail::lambda_trial_division(n - m2 * m2);
    return acc.value();
}

enum class Normalization { ScaledByNk, Divided };

inline const char* to_string(Normalization n) { return n == Normalization::Divided ? "divided" : "scaled"; }

struct CesaroQuery {
    std::uint64_t N = 0;
    double k = 2.0;
    Normalization normalization = Normalization::Divided;
    // Allows 1/2 < k <= 1, where the double Bessel sum is not known to converge.
    bool exploratory = false;
};

inline void validate(const CesaroQuery& q) {
    if (q.N < 2) throw invalid_argument("N must be >= 2");
    if (!std::isfinite(q.k)) throw invalid_argument("k must be finite");
    if (q.exploratory ? !(q.k > 0.5) : !(q.k > 1.0))
        throw invalid_argument(q.exploratory ? "k must exceed 1/2" : "k must exceed 1 (use exploratory mode for 1/2 < k <= 1)");
}

// Weighted count sum_{n<N} r_HL(n) w(n) / Gamma(k+1), w = (1-n/N)^k or (N-n)^k.
inline double cesaro_lhs(const CesaroQuery& q, const VonMangoldtTable& table) {
    validate(q);
    if (table.limit() < q.N) throw out_of_range("table limit " + std::to_string(table.limit()) + " < N = " + std::to_string(q.N));
    const auto lam = table.lambda_values();
    const double Nd = static_cast<double>(q.N);
    Accumulator total;
    for (std::uint64_t n = 3; n < q.N; ++n) {
        Accumulator r;
        for (std::uint64_t m = 1; m * m < n; ++m) r += lam[n - m * m];
        double rn = r.value();
        if (rn == 0.0) continue;
        double d = static_cast<double>(q.N - n);
        double w = q.normalization == Normalization::Divided ? std::pow(d / Nd, q.k) : std::pow(d, q.k);
        total += rn * w;
    }
    return total.value() / std::tgamma(q.k + 1.0);
}

}  // namespace hlcesaro
