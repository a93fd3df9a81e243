// Evaluates both sides of the explicit formula at N = 1000, k = 2 and prints the term table.
// Usage: basic_verify [zeros-file]

#include <iostream>

#include <hlcesaro.hpp>

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : HLCESARO_DEFAULT_ZEROS;
    hlcesaro::ZeroList zeros;
    try {
        zeros = hlcesaro::load_zeros(path);
    } catch (const hlcesaro::data_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }

    hlcesaro::CesaroQuery q{1000, 2.0};
    hlcesaro::TruncationConfig cfg;
    cfg.zero_count = 10000;

    auto report = hlcesaro::verify(q, zeros, cfg);
    std::cout << hlcesaro::text_report(report);
    std::cout << "residual / t1 = " << report.residual / report.breakdown[1].value << "\n";
}
