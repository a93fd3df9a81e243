#pragma once

#include <cmath>
#include <complex>

namespace hlcesaro {

// Neumaier compensated sum.
class Accumulator {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_ += std::abs(x);
    }
    Accumulator& operator+=(double x) { add(x); return *this; }
    double value() const { return sum_ + comp_; }
    // Sum of magnitudes of everything added; a scale for rounding estimates.
    double magnitude() const { return abs_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
};

class ComplexAccumulator {
public:
    void add(std::complex<double> z) { re_.add(z.real()); im_.add(z.imag()); }
    ComplexAccumulator& operator+=(std::complex<double> z) { add(z); return *this; }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }
    double magnitude() const { return std::hypot(re_.magnitude(), im_.magnitude()); }

private:
    Accumulator re_, im_;
};

}  // namespace hlcesaro
