#pragma once

#include <gmpxx.h>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace plab {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Exact rational square root of a reduced fraction, if one exists.
inline std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    if (!is_square(num) || !is_square(den)) return std::nullopt;
    return make_rat(isqrt(num), isqrt(den));
}

// Multiplicative height max(|num|, den) of a reduced fraction.
inline Int rat_height(const Rat& x) {
    Int n = abs(x.get_num());
    return n > x.get_den() ? n : x.get_den();
}

// Naive logarithmic height h(x) = log max(|num|, den).
inline double log_height(const Rat& x) {
    Int h = rat_height(x);
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, h.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

// p-adic valuation of a nonzero integer.
inline long int_val(const Int& n, unsigned long p) {
    if (n == 0) throw std::invalid_argument("int_val: zero");
    Int q, r = abs(n);
    long v = 0;
    Int pz(static_cast<long>(p));
    while (true) {
        Int quo = r / pz;
        if (quo * pz != r) break;
        r = quo;
        ++v;
    }
    return v;
}

inline long rat_val(const Rat& x, unsigned long p) {
    if (x == 0) throw std::invalid_argument("rat_val: zero");
    return int_val(x.get_num(), p) - int_val(x.get_den(), p);
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace plab
