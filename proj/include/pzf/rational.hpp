#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pzf {

// Exact rational arithmetic. All chain probabilities and expected values are
// ratios of integers, so we keep them exact end to end and only convert to
// binary64 at output or simulation boundaries.
using Rat = mpq_class;

inline Rat frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// Canonical "p/q" (or plain "p" when q == 1).
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

// Accepts "p/q", an integer, or a decimal such as "0.95" (read exactly as
// 95/100). Used for alpha values so confidence comparisons stay exact.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto decimal = [&](const std::string& s) {
        mpz_class z;
        if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational: '" + text + "'");
        return z;
    };
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpz_class den = decimal(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        Rat r(decimal(text.substr(0, slash)), den);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rat(decimal(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t places = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad rational: " + text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    Rat r(decimal(digits), den);
    r.canonicalize();
    return r;
}

}  // namespace pzf
