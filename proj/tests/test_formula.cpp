#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <hlcesaro/formula.hpp>

#include "reference_values.hpp"

using namespace hlcesaro;

namespace {

const ZeroList& bundled() {
    static const ZeroList z = load_zeros(HLCESARO_DEFAULT_ZEROS);
    return z;
}

ZeroList first_zero() { return parse_zeros("14.134725141735\n"); }

TruncationConfig with_zeros(std::size_t Z, std::optional<std::size_t> Z2 = {}, std::optional<int> L = {}) {
    TruncationConfig c;
    c.zero_count = Z;
    c.double_sum_zero_count = Z2;
    c.ell_max = L;
    return c;
}

}  // namespace

TEST(MainTerms, ClosedForms) {
    auto [t1, t2] = main_terms(1.0, 2.0);
    EXPECT_NEAR(t1, ref::t1_n1, 1e-16);
    EXPECT_NEAR(t2, -1.0 / 12.0, 1e-16);
    auto [u1, u2] = main_terms(1e4, 2.0);
    EXPECT_NEAR(u1, ref::t1_n1 * 1e6, 1e-9);
    EXPECT_NEAR(u1, 76190.476190476, 1e-6);
    EXPECT_NEAR(u2, -1e4 / 12.0, 1e-10);
    auto [s1, s2] = main_terms(1e4, 2.0, Normalization::ScaledByNk);
    EXPECT_NEAR(s1, u1 * 1e8, 1e-14 * s1);
    EXPECT_NEAR(s2, u2 * 1e8, 1e-15 * std::abs(s2));
    EXPECT_THROW(main_terms(10.0, 0.5), invalid_argument);
}

TEST(ZeroSums, SingleZeroReference) {
    auto z = first_zero();
    auto cfg = with_zeros(1);
    auto t3 = zero_sum_primary(100.0, 2.0, z, cfg);
    auto t4 = zero_sum_secondary(100.0, 2.0, z, cfg);
    EXPECT_NEAR(t3.value, ref::t3_z1_n100, 1e-13 * std::abs(ref::t3_z1_n100));
    EXPECT_NEAR(t4.value, ref::t4_z1_n100, 1e-13 * std::abs(ref::t4_z1_n100));
    EXPECT_TRUE(t3.imag_ok());
    EXPECT_TRUE(t4.imag_ok());
}

TEST(ZeroSums, NoZerosMeansZeroValueAndUnknownTail) {
    ZeroList none;
    auto t3 = zero_sum_primary(100.0, 2.0, none, with_zeros(10));
    EXPECT_EQ(t3.value, 0.0);
    EXPECT_TRUE(std::isinf(t3.tail_estimate));
}

TEST(ZeroSums, ExplicitConjugatesAgree) {
    auto cfg = with_zeros(500);
    auto cfg2 = cfg;
    cfg2.explicit_conjugates = true;
    for (double N : {100.0, 1e4}) {
        auto a = zero_sum_primary(N, 2.0, bundled(), cfg);
        auto b = zero_sum_primary(N, 2.0, bundled(), cfg2);
        EXPECT_NEAR(a.value, b.value, 1e-13 * std::abs(a.value) + 1e-15);
        EXPECT_LE(b.imag_residue, 1e-12 * std::max(1.0, std::abs(b.value)));
    }
}

TEST(EllSum, SingleTermReference) {
    auto t5 = bessel_ell_sum(1.0, 2.0, with_zeros(0, {}, 1));
    EXPECT_EQ(t5.L, 1);
    EXPECT_NEAR(t5.term.value, ref::t5_n1_l1, 1e-14);
}

TEST(EllSum, ZeroCutoff) {
    auto t5 = bessel_ell_sum(100.0, 2.0, with_zeros(0, {}, 0));
    EXPECT_EQ(t5.term.value, 0.0);
    EXPECT_TRUE(std::isinf(t5.term.tail_estimate));
}

TEST(EllSum, ScaledMagnitudeBound) {
    // |T5 (scaled)| <= C N^((k+1)/2) with a measured C
    double c = 0.0;
    for (double N : {10.0, 100.0, 1e3, 1e4, 1e5}) {
        auto t = bessel_ell_sum(N, 2.0, {}, Normalization::ScaledByNk);
        c = std::max(c, std::abs(t.term.value) / std::pow(N, 1.5));
    }
    RecordProperty("fitted_C", std::to_string(c));
    EXPECT_LT(c, 0.1);
}

TEST(DoubleSum, FirstTermReference) {
    auto t6 = bessel_double_sum(100.0, 2.0, first_zero(), with_zeros(1, 1, 1));
    EXPECT_EQ(t6.zeros, 1u);
    EXPECT_EQ(t6.l_max, 1);
    EXPECT_NEAR(t6.term.value, ref::t6_first_n100, 1e-11 * std::abs(ref::t6_first_n100));
}

TEST(DoubleSum, PreparedAndDirectRoutesAgree) {
    auto z = bundled().prefix(5);
    for (double N : {100.0, 1000.0}) {
        auto prepared = bessel_double_sum(N, 2.0, z, with_zeros(5, 5, 6));
        std::complex<double> direct = bessel_double_sum_direct(N, 2.0, z, 5, 6);
        EXPECT_NEAR(prepared.term.value, direct.real(), 1e-10 * std::abs(direct.real())) << N;
        EXPECT_LT(std::abs(direct.imag()), 1e-12 * std::abs(direct.real())) << N;
    }
}

TEST(DoubleSum, ExplicitConjugatesAgree) {
    auto z = bundled().prefix(20);
    auto cfg = with_zeros(20, 20);
    auto cfg2 = cfg;
    cfg2.explicit_conjugates = true;
    auto a = bessel_double_sum(300.0, 2.0, z, cfg);
    auto b = bessel_double_sum(300.0, 2.0, z, cfg2);
    EXPECT_NEAR(a.term.value, b.term.value, 1e-11 * std::abs(a.term.value));
    EXPECT_LE(b.term.imag_residue, 1e-10 * std::abs(b.term.value));
}

TEST(DoubleSum, RequiresKAboveOneUnlessExploratory) {
    auto z = first_zero();
    EXPECT_THROW(bessel_double_sum(100.0, 1.0, z, with_zeros(1, 1, 3)), domain_error);
    EXPECT_NO_THROW(bessel_double_sum(100.0, 1.0, z, with_zeros(1, 1, 3), Normalization::Divided, true));
}

TEST(Config, Validation) {
    auto bad = with_zeros(10, 20);
    EXPECT_THROW(validate(bad), invalid_argument);
    auto neg = with_zeros(10, {}, -1);
    EXPECT_THROW(validate(neg), invalid_argument);
    TruncationConfig s;
    s.ell_scale = 0.5;
    EXPECT_THROW(validate(s), invalid_argument);
    EXPECT_EQ(TruncationConfig{}.z2(bundled()), 2000u);
    EXPECT_EQ(with_zeros(300).z2(bundled()), 300u);
}

TEST(Normalization, EveryTermScalesByNk) {
    auto z = bundled().prefix(30);
    auto cfg = with_zeros(30, 10);
    for (double k : {1.5, 2.0, 3.0}) {
        CesaroQuery d{200, k, Normalization::Divided};
        CesaroQuery s{200, k, Normalization::ScaledByNk};
        auto bd = evaluate_rhs(d, z, cfg);
        auto bs = evaluate_rhs(s, z, cfg);
        double f = std::pow(200.0, k);
        for (int i = 1; i <= 6; ++i)
            EXPECT_NEAR(bs[i].value, f * bd[i].value, 1e-12 * std::abs(f * bd[i].value) + 1e-300) << "t" << i << " k=" << k;
    }
}

TEST(Truncation, SingleSumsChangeLessThanTail) {
    for (double N : {1e2, 1e3, 1e4}) {
        for (double k : {1.5, 2.0, 3.0}) {
            for (std::size_t Z : {100u, 1000u, 5000u}) {
                auto a3 = zero_sum_primary(N, k, bundled(), with_zeros(Z));
                auto b3 = zero_sum_primary(N, k, bundled(), with_zeros(2 * Z));
                EXPECT_LE(std::abs(a3.value - b3.value), a3.tail_estimate) << N << " " << k << " " << Z;
                EXPECT_LE(b3.tail_estimate, a3.tail_estimate);
                auto a4 = zero_sum_secondary(N, k, bundled(), with_zeros(Z));
                auto b4 = zero_sum_secondary(N, k, bundled(), with_zeros(2 * Z));
                EXPECT_LE(std::abs(a4.value - b4.value), a4.tail_estimate) << N << " " << k << " " << Z;
            }
            auto a5 = bessel_ell_sum(N, k, {});
            TruncationConfig dbl;
            dbl.ell_scale = 2.0;
            auto b5 = bessel_ell_sum(N, k, dbl);
            EXPECT_GE(b5.L, 2 * a5.L - 1);
            EXPECT_LE(std::abs(a5.term.value - b5.term.value), a5.term.tail_estimate) << N << " " << k;
        }
    }
}

TEST(Truncation, DoubleSumChangesLessThanTail) {
    for (double k : {1.5, 2.0, 3.0}) {
        const auto& z = bundled();
        // automatic L grows like sqrt(Z2) at k = 1.5, so that case uses fewer zeros
        const std::size_t z2 = k < 2.0 ? 25 : 200;
        auto base = bessel_double_sum(100.0, k, z, with_zeros(400, z2));
        auto more_zeros = bessel_double_sum(100.0, k, z, with_zeros(400, 2 * z2));
        auto cfgL = with_zeros(400, z2);
        cfgL.ell_scale = 2.0;
        auto more_l = bessel_double_sum(100.0, k, z, cfgL);
        EXPECT_LE(std::abs(more_zeros.term.value - base.term.value), base.term.tail_estimate) << k;
        EXPECT_LE(std::abs(more_l.term.value - base.term.value), base.term.tail_estimate) << k;
        EXPECT_GE(more_l.l_max, 2 * base.l_max - 1);
    }
}

TEST(Verify, SmallNWithoutZeros) {
    TruncationConfig cfg = with_zeros(0, {}, 0);
    auto r = verify({4, 2.0}, ZeroList{}, cfg);
    EXPECT_NEAR(r.lhs, std::log(2.0) / 32.0, 1e-17);
    for (int i = 3; i <= 6; ++i) EXPECT_EQ(r.breakdown[i].value, 0.0);
    auto [t1, t2] = main_terms(4.0, 2.0);
    EXPECT_NEAR(r.breakdown.total, t1 + t2, 1e-15);
    EXPECT_NEAR(r.residual, r.lhs - t1 - t2, 1e-15);
}

TEST(Verify, Deterministic) {
    auto z = bundled().prefix(200);
    auto cfg = with_zeros(200, 50);
    auto a = verify({500, 2.0}, z, cfg);
    auto b = verify({500, 2.0}, z, cfg);
    EXPECT_EQ(a.lhs, b.lhs);
    for (int i = 1; i <= 6; ++i) EXPECT_EQ(a.breakdown[i].value, b.breakdown[i].value);
    EXPECT_EQ(a.residual, b.residual);
}

TEST(Verify, ResidualTracksMissingConstant) {
    // The residual is dominated by -(log 2 pi / Gamma(k+1)) sum_{1<=m<sqrt N} (1 - m^2/N)^k.
    auto r = verify({3000, 2.0}, bundled(), with_zeros(3000, 1000));
    double pred = 0.0;
    for (int m = 1; m * m < 3000; ++m) pred += std::pow(1.0 - m * m / 3000.0, 2.0);
    pred *= -std::log(2.0 * std::numbers::pi) / 2.0;
    EXPECT_NEAR(r.residual / pred, 1.0, 0.01);
    EXPECT_TRUE(r.breakdown.imag_ok());
}
