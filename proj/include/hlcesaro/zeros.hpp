#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

#include "errors.hpp"

namespace hlcesaro {

inline std::string sha256_hex(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream out;
    for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return out.str();
}

// Ordinates gamma > 0 of zeros 1/2 + i gamma; conjugates are implicit.
struct ZeroList {
    std::vector<double> gammas;
    std::string source_path;
    std::string source_digest;     // sha256 of the file bytes
    int min_decimals = 0;          // fewest decimals seen on any data line
    bool beta_is_half = true;      // evaluation assumption, not a property of the data

    std::size_t count() const { return gammas.size(); }
    bool empty() const { return gammas.empty(); }
    // Files with fewer decimals than this are flagged in reports.
    static constexpr int recommended_decimals = 9;
    bool low_precision() const { return !gammas.empty() && min_decimals < recommended_decimals; }

    ZeroList prefix(std::size_t n) const {
        ZeroList z = *this;
        if (n < z.gammas.size()) z.gammas.resize(n);
        return z;
    }
};

inline constexpr double first_zero_anchor = 14.134725;

// Parses the zeros text format: one gamma per line, '#' comments, blank lines, LF or CRLF.
inline ZeroList parse_zeros(std::string_view text, std::size_t max_count = std::numeric_limits<std::size_t>::max()) {
    ZeroList z;
    z.min_decimals = std::numeric_limits<int>::max();
    std::size_t line_no = 0, pos = 0;
    while (pos < text.size() && z.gammas.size() < max_count) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        double g = 0.0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), g);
        if (ec != std::errc() || ptr != line.data() + line.size() || !std::isfinite(g))
            throw data_error("unparseable zero ordinate '" + std::string(line) + "'", line_no);
        if (g <= 0.0) throw data_error("non-positive zero ordinate", line_no);
        if (!z.gammas.empty() && g <= z.gammas.back()) throw data_error("zero ordinates not strictly increasing", line_no);
        auto dot = line.find('.');
        int decimals = 0;
        if (dot != std::string_view::npos) {
            auto exp = line.find_first_of("eE", dot);
            decimals = static_cast<int>((exp == std::string_view::npos ? line.size() : exp) - dot - 1);
        }
        z.min_decimals = std::min(z.min_decimals, decimals);
        z.gammas.push_back(g);
    }
    if (z.gammas.empty()) z.min_decimals = 0;
    return z;
}

inline ZeroList load_zeros(const std::string& path, std::size_t max_count = std::numeric_limits<std::size_t>::max()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open zeros file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    ZeroList z = parse_zeros(text, max_count);
    z.source_path = path;
    z.source_digest = sha256_hex(text);
    return z;
}

// True when the first ordinate matches the first zeta zero.
inline bool passes_anchor(const ZeroList& z, double tol = 1e-3) {
    return z.empty() || std::abs(z.gammas.front() - first_zero_anchor) <= tol;
}

inline std::string serialize_zeros(const ZeroList& z) {
    std::string out;
    char buf[64];
    for (double g : z.gammas) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g);
        out.append(buf, ptr);
        out.push_back('\n');
    }
    return out;
}

// Riemann-von Mangoldt main term for the number of zeros with 0 < gamma <= T.
inline double zero_count_estimate(double T) {
    const double two_pi = 2.0 * 3.14159265358979323846;
    return T / two_pi * std::log(T / (two_pi * 2.718281828459045235)) + 0.875;
}

inline std::size_t count_below(const ZeroList& z, double T) {
    return static_cast<std::size_t>(std::upper_bound(z.gammas.begin(), z.gammas.end(), T) - z.gammas.begin());
}

}  // namespace hlcesaro
