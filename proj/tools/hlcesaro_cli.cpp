// Command-line front end: verify, sweep, oracle-suite.
//
// Exit codes: 0 success, 1 failed check or evaluation, 2 configuration error, 3 data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hlcesaro.hpp>

#ifndef HLCESARO_DEFAULT_ZEROS
#define HLCESARO_DEFAULT_ZEROS ""
#endif

namespace {

using namespace hlcesaro;

constexpr std::uint64_t max_n = 100'000'000;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> n_list;
    double k = 2.0;
    std::string zeros_file;
    std::size_t zero_count = 10000;
    std::optional<int> ell_max;
    std::optional<std::size_t> double_sum_zero_count;
    Normalization normalization = Normalization::Divided;
    std::string format = "table";
    std::string plot;
    PrecisionMode precision = PrecisionMode::Double;
    double ell_scale = 1.0;
    bool exploratory = false;
    bool explicit_conjugates = false;
    std::string only;
};

std::string resolve_zeros_path(const RunOptions& o) {
    if (!o.zeros_file.empty()) return o.zeros_file;
    if (const char* env = std::getenv("HLCESARO_ZEROS"); env && *env) return env;
    return HLCESARO_DEFAULT_ZEROS;
}

ZeroList load_for(const RunOptions& o, std::size_t count) {
    if (count == 0) return {};
    std::string path = resolve_zeros_path(o);
    if (path.empty()) throw ConfigError("no zeros file: pass --zeros or set HLCESARO_ZEROS");
    return load_zeros(path, count);
}

TruncationConfig truncation(const RunOptions& o) {
    TruncationConfig c;
    c.zero_count = o.zero_count;
    c.ell_max = o.ell_max;
    c.double_sum_zero_count = o.double_sum_zero_count;
    c.ell_scale = o.ell_scale;
    c.explicit_conjugates = o.explicit_conjugates;
    c.bessel.series_digits = o.precision == PrecisionMode::Extended ? -1 : 0;
    validate(c);
    return c;
}

CesaroQuery query(const RunOptions& o, std::uint64_t n) {
    if (n > max_n) throw ConfigError("N = " + std::to_string(n) + " exceeds the sieve limit of 1e8");
    CesaroQuery q{n, o.k, o.normalization, o.exploratory};
    validate(q);
    return q;
}

void warn_zeros(const ZeroList& z) {
    if (z.empty()) return;
    if (!passes_anchor(z)) std::cerr << "warning: first ordinate " << z.gammas.front() << " does not match 14.134725\n";
    if (z.low_precision())
        std::cerr << "warning: zeros file has only " << z.min_decimals << " decimals (recommended " << ZeroList::recommended_decimals << ")\n";
}

void write_plot(const std::string& path, const std::vector<VerificationReport>& rows) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw data_error("cannot write plot file: " + path);
    out << residual_plot_svg(rows);
}

int emit(const RunOptions& o, const std::vector<VerificationReport>& rows, const ZeroList& zeros, bool sweep) {
    if (o.format == "json") {
        if (!sweep) {
            std::cout << report_json(rows.front(), &zeros).dump(2) << "\n";
        } else {
            nlohmann::ordered_json j;
            j["schema_version"] = report_schema_version;
            j["reports"] = nlohmann::ordered_json::array();
            for (const auto& r : rows) j["reports"].push_back(report_json(r, &zeros));
            std::cout << j.dump(2) << "\n";
        }
    } else if (o.format == "csv") {
        std::cout << csv_header << "\n";
        for (const auto& r : rows) std::cout << csv_row(r) << "\n";
    } else if (sweep) {
        std::cout << text_table(rows);
    } else {
        std::cout << text_report(rows.front());
    }
    write_plot(o.plot, rows);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.breakdown.imag_ok();
    if (!ok) std::cerr << "imaginary residue above tolerance\n";
    return ok ? 0 : 1;
}

int run_verify(const RunOptions& o, const std::vector<std::uint64_t>& ns, bool sweep) {
    if (ns.empty()) throw ConfigError("no N given");
    TruncationConfig cfg = truncation(o);
    std::vector<CesaroQuery> qs;
    for (auto n : ns) qs.push_back(query(o, n));
    ZeroList zeros = load_for(o, cfg.zero_count);
    warn_zeros(zeros);
    std::uint64_t nmax = 0;
    for (const auto& q : qs) nmax = std::max(nmax, q.N);
    auto table = sieve_von_mangoldt(nmax);
    std::vector<VerificationReport> rows;
    for (const auto& q : qs) rows.push_back(verify(q, zeros, cfg, &table));
    return emit(o, rows, zeros, sweep);
}

int run_oracles(const RunOptions& o) {
    SuiteOptions s;
    if (!o.only.empty()) s.only = o.only;
    ZeroList zeros;
    if (!s.only || *s.only == "linnik") {
        zeros = load_for(o, 2 * suite_limits::linnik_pairs);
        warn_zeros(zeros);
        s.zeros = &zeros;
    }
    auto checks = run_oracle_suite(s);
    std::cout << oracle_table(checks);
    std::size_t failed = 0;
    for (const auto& c : checks) failed += !c.passed;
    if (failed) {
        std::cerr << failed << " check(s) failed:\n";
        for (const auto& c : checks)
            if (!c.passed) std::cerr << "  " << c.family << ": " << c.name << "\n";
    }
    return failed ? 1 : 0;
}

void add_common(CLI::App* cmd, RunOptions& o) {
    std::map<std::string, Normalization> norms{{"divided", Normalization::Divided}, {"scaled", Normalization::ScaledByNk}};
    std::map<std::string, PrecisionMode> precs{{"double", PrecisionMode::Double}, {"extended", PrecisionMode::Extended}};
    cmd->add_option("--k", o.k, "Cesaro weight exponent (k > 1)")->capture_default_str();
    cmd->add_option("--zeros", o.zeros_file, "zeros file (default: $HLCESARO_ZEROS, then the bundled table)");
    cmd->add_option("--zero-count", o.zero_count, "zero pairs in the single zero sums")->capture_default_str();
    cmd->add_option("--ell-max", o.ell_max, "fixed l cutoff for the Bessel sums (default: automatic)");
    cmd->add_option("--double-sum-zero-count", o.double_sum_zero_count, "zero pairs in the Bessel double sum (default: min(Z, 2000))");
    cmd->add_option("--normalization", o.normalization, "divided or scaled")->transform(CLI::CheckedTransformer(norms, CLI::ignore_case));
    cmd->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();
    cmd->add_option("--plot", o.plot, "write an SVG residual plot to this path");
    cmd->add_option("--precision", o.precision, "double or extended Bessel series")->transform(CLI::CheckedTransformer(precs, CLI::ignore_case));
    cmd->add_option("--ell-scale", o.ell_scale, "multiplier on automatic l cutoffs (>= 1)")->capture_default_str();
    cmd->add_flag("--exploratory", o.exploratory, "allow 1/2 < k <= 1");
    cmd->add_flag("--explicit-conjugates", o.explicit_conjugates, "sum rho and its conjugate separately");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cesaro-weighted Hardy-Littlewood explicit formula checker"};
    app.require_subcommand(1);
    RunOptions o;

    auto* verify_cmd = app.add_subcommand("verify", "evaluate both sides at one N");
    verify_cmd->add_option("--n", o.n, "N (2 <= N <= 1e8)")->required();
    add_common(verify_cmd, o);

    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate both sides over a list of N");
    sweep_cmd->add_option("--n-list", o.n_list, "comma-separated N values")->delimiter(',')->required();
    add_common(sweep_cmd, o);

    auto* oracle_cmd = app.add_subcommand("oracle-suite", "run the identity checks");
    oracle_cmd->add_option("--only", o.only, "run one family")->check(CLI::IsMember(oracle_families()));
    oracle_cmd->add_option("--zeros", o.zeros_file, "zeros file for the linnik family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify_cmd) return run_verify(o, {o.n}, false);
        if (*sweep_cmd) return run_verify(o, o.n_list, true);
        return run_oracles(o);
    } catch (const data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "evaluation failed: " << e.what() << "\n";
        return 1;
    }
}
