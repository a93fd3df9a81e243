#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "formula.hpp"
#include "oracle_suite.hpp"

namespace hlcesaro {

inline constexpr int report_schema_version = 1;

enum class PrecisionMode { Double, Extended };

inline const char* to_string(PrecisionMode p) { return p == PrecisionMode::Double ? "double" : "extended"; }

namespace detail {
// Folds -0 into 0 so zero terms print uniformly.
inline double clean(double v) { return v == 0.0 ? 0.0 : v; }

inline nlohmann::ordered_json finite_or_null(double v) {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

inline std::string fmt_g(double v, int digits = 15) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}
}  // namespace detail

// Everything except timings; identical inputs give identical bodies.
inline nlohmann::ordered_json report_body(const VerificationReport& r, const ZeroList* zeros = nullptr) {
    using nlohmann::ordered_json;
    using detail::finite_or_null;
    const auto& b = r.breakdown;
    const auto& c = r.config;
    ordered_json j;
    j["schema_version"] = report_schema_version;
    j["query"] = {{"N", r.query.N}, {"k", r.query.k}, {"normalization", to_string(r.query.normalization)},
                  {"exploratory", r.query.exploratory}};
    j["lhs"] = r.lhs;
    ordered_json terms, imag, tails;
    for (int i = 1; i <= 6; ++i) {
        std::string key = "t" + std::to_string(i);
        terms[key] = detail::clean(b[i].value);
        imag[key] = detail::clean(b[i].imag_residue);
        tails[key] = finite_or_null(b[i].tail_estimate);
    }
    terms["total"] = b.total;
    tails["total"] = finite_or_null(b.tail_total());
    j["terms"] = terms;
    j["imag_residues"] = imag;
    j["tail_estimates"] = tails;
    j["residual"] = r.residual;
    j["residual_over_sqrt_n"] = r.residual / std::sqrt(static_cast<double>(r.query.N));
    j["zeros"] = {{"count", r.zeros_loaded},
                  {"used", b.zeros_used},
                  {"double_sum_used", b.double_sum_zeros},
                  {"digest", r.zeros_digest},
                  {"path", r.zeros_path},
                  {"min_decimals", r.zeros_min_decimals},
                  {"low_precision", r.zeros_low_precision},
                  {"anchor_ok", r.zeros_anchor_ok},
                  {"assumption", "all zeros on Re s = 1/2"}};
    ordered_json cfg;
    cfg["zero_count"] = c.zero_count;
    cfg["ell_max"] = c.ell_max ? ordered_json(*c.ell_max) : ordered_json("auto");
    cfg["double_sum_zero_count"] = zeros ? ordered_json(c.z2(*zeros)) : ordered_json(b.double_sum_zeros);
    cfg["term_floor"] = c.term_floor;
    cfg["tail_rtol"] = c.tail_rtol;
    cfg["ell_scale"] = c.ell_scale;
    cfg["explicit_conjugates"] = c.explicit_conjugates;
    cfg["precision"] = c.bessel.series_digits == 0 ? "double" : "extended";
    cfg["bessel"] = {{"u_small", c.bessel.u_small},
                     {"u_large", c.bessel.u_large},
                     {"target", c.bessel.target},
                     {"accept", c.bessel.accept},
                     {"phase_per_panel", c.bessel.phase_per_panel}};
    j["config"] = cfg;
    j["diagnostics"] = {{"l_max_t5", b.l_max_t5},
                        {"l_max_t6", b.l_max_t6},
                        {"bessel_terms_t6", b.bessel_terms_t6},
                        {"imag_ok", b.imag_ok()}};
    return j;
}

inline nlohmann::ordered_json report_json(const VerificationReport& r, const ZeroList* zeros = nullptr) {
    auto j = report_body(r, zeros);
    nlohmann::ordered_json t;
    for (const auto& [k, v] : r.timings) t[k] = v;
    j["timings"] = t;
    return j;
}

inline const char* csv_header = "N,k,lhs,t1,t2,t3,t4,t5,t6,residual,zeros_used,l_max";

inline std::string csv_row(const VerificationReport& r) {
    using detail::fmt_g;
    std::ostringstream o;
    o << r.query.N << ',' << fmt_g(r.query.k) << ',' << fmt_g(r.lhs, 17);
    for (int i = 1; i <= 6; ++i) o << ',' << fmt_g(detail::clean(r.breakdown[i].value), 17);
    o << ',' << fmt_g(r.residual, 17) << ',' << r.breakdown.zeros_used << ',' << r.breakdown.l_max();
    return o.str();
}

inline std::string text_report(const VerificationReport& r) {
    using detail::fmt_g;
    std::ostringstream o;
    const auto& b = r.breakdown;
    o << "N = " << r.query.N << ", k = " << fmt_g(r.query.k) << ", normalization = " << to_string(r.query.normalization) << "\n";
    o << "zeros: " << r.zeros_loaded << " loaded, " << b.zeros_used << " used, " << b.double_sum_zeros
      << " in double sum" << (r.zeros_low_precision ? " (low precision file)" : "") << (r.zeros_anchor_ok ? "" : " (anchor mismatch)") << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "  %-6s %24s %12s %12s\n", "term", "value", "imag", "tail");
    o << line;
    for (int i = 1; i <= 6; ++i) {
        std::snprintf(line, sizeof line, "  t%-5d %24.15g %12.3g %12s\n", i, detail::clean(b[i].value), detail::clean(b[i].imag_residue),
                      fmt_g(b[i].tail_estimate, 3).c_str());
        o << line;
    }
    std::snprintf(line, sizeof line, "  %-6s %24.15g %12s %12s\n", "total", b.total, "", fmt_g(b.tail_total(), 3).c_str());
    o << line;
    std::snprintf(line, sizeof line, "  %-6s %24.15g\n  %-6s %24.15g\n", "lhs", r.lhs, "resid", r.residual);
    o << line;
    o << "  L(t5) = " << b.l_max_t5 << ", max L(t6) = " << b.l_max_t6 << ", bessel evaluations = " << b.bessel_terms_t6 << "\n";
    return o.str();
}

inline std::string text_table(const std::vector<VerificationReport>& rows) {
    std::ostringstream o;
    char line[200];
    std::snprintf(line, sizeof line, "%12s %6s %22s %22s %22s %12s %6s\n", "N", "k", "lhs", "rhs", "residual", "resid/sqrtN", "L");
    o << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%12llu %6g %22.15g %22.15g %22.15g %12.5g %6d\n",
                      static_cast<unsigned long long>(r.query.N), r.query.k, r.lhs, r.breakdown.total, r.residual,
                      r.residual / std::sqrt(static_cast<double>(r.query.N)), r.breakdown.l_max());
        o << line;
    }
    return o.str();
}

inline std::string oracle_table(const std::vector<CheckResult>& checks) {
    std::ostringstream o;
    char line[200];
    for (const auto& c : checks) {
        std::snprintf(line, sizeof line, "%-4s %-17s %-28s %12.4g <= %-10.3g\n", c.passed ? "PASS" : "FAIL",
                      c.family.c_str(), c.name.c_str(), c.value, c.tolerance);
        o << line;
    }
    return o.str();
}

// Self-contained SVG of |residual| and |residual|/sqrt(N) against N on log-log axes.
inline std::string residual_plot_svg(const std::vector<VerificationReport>& rows) {
    const double W = 640, H = 420, ml = 70, mr = 20, mt = 30, mb = 50;
    std::vector<double> xs, y1, y2;
    for (const auto& r : rows) {
        double n = static_cast<double>(r.query.N), a = std::abs(r.residual);
        if (a <= 0.0) continue;
        xs.push_back(std::log10(n));
        y1.push_back(std::log10(a));
        y2.push_back(std::log10(a / std::sqrt(n)));
    }
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (xs.empty()) {
        o << "<text x=\"" << W / 2 << "\" y=\"" << H / 2 << "\" text-anchor=\"middle\">no nonzero residuals</text>\n</svg>\n";
        return o.str();
    }
    auto [xmn, xmx] = std::minmax_element(xs.begin(), xs.end());
    double x0 = std::floor(*xmn), x1 = std::ceil(*xmx);
    if (x1 <= x0) x1 = x0 + 1;
    double ylo = std::min(*std::min_element(y1.begin(), y1.end()), *std::min_element(y2.begin(), y2.end()));
    double yhi = std::max(*std::max_element(y1.begin(), y1.end()), *std::max_element(y2.begin(), y2.end()));
    double y0 = std::floor(ylo), yy1 = std::ceil(yhi);
    if (yy1 <= y0) yy1 = y0 + 1;
    auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - y0) / (yy1 - y0) * (H - mt - mb); };
    o << "<g stroke=\"#ccc\">\n";
    for (double x = x0; x <= x1; x += 1)
        o << "<line x1=\"" << px(x) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x) << "\" y2=\"" << py(yy1) << "\"/>\n";
    for (double y = y0; y <= yy1; y += 1)
        o << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(y) << "\"/>\n";
    o << "</g>\n";
    for (double x = x0; x <= x1; x += 1)
        o << "<text x=\"" << px(x) << "\" y=\"" << py(y0) + 18 << "\" text-anchor=\"middle\">1e" << x << "</text>\n";
    for (double y = y0; y <= yy1; y += 1)
        o << "<text x=\"" << px(x0) - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">1e" << y << "</text>\n";
    o << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">N</text>\n";
    auto series = [&](const std::vector<double>& ys, const char* color, const char* label, double ly) {
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) o << px(xs[i]) << ',' << py(ys[i]) << ' ';
        o << "\"/>\n";
        for (std::size_t i = 0; i < xs.size(); ++i)
            o << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i]) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        o << "<text x=\"" << ml + 10 << "\" y=\"" << ly << "\" fill=\"" << color << "\">" << label << "</text>\n";
    };
    series(y1, "#1f77b4", "|residual|", mt - 10);
    series(y2, "#d62728", "|residual| / sqrt(N)", mt + 6);
    o << "</svg>\n";
    return o.str();
}

}  // namespace hlcesaro
