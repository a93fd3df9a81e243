#pragma once

#include <array>
#include <cstddef>

#include <boost/math/quadrature/gauss.hpp>

namespace hlcesaro {

// Full n-point Gauss-Legendre rule on [-1, 1] built from Boost's half-rule.
template <unsigned Points>
struct GaussLegendre {
    std::array<double, Points> x{};
    std::array<double, Points> w{};

    static const GaussLegendre& get() {
        static const GaussLegendre rule = build();
        return rule;
    }

private:
    static GaussLegendre build() {
        using gauss = boost::math::quadrature::gauss<double, Points>;
        const auto& abs = gauss::abscissa();
        const auto& wts = gauss::weights();
        GaussLegendre r;
        std::size_t n = 0;
        for (std::size_t i = abs.size(); i-- > 0;) {
            if (abs[i] == 0.0) continue;
            r.x[n] = -abs[i];
            r.w[n++] = wts[i];
        }
        for (std::size_t i = 0; i < abs.size(); ++i) {
            r.x[n] = abs[i];
            r.w[n++] = wts[i];
        }
        return r;
    }
};

// Nodes and weights of the rule mapped to [a, b], appended through a callback.
template <unsigned Points, class F>
void for_each_node(double a, double b, F&& f) {
    const auto& rule = GaussLegendre<Points>::get();
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (unsigned i = 0; i < Points; ++i) f(c + h * rule.x[i], h * rule.w[i]);
}

}  // namespace hlcesaro
