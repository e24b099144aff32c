#pragma once

#include <optional>
#include <string>

#include "plab/rational.hpp"
#include "plab/unipoly.hpp"

namespace plab {

// Truncated p-adic number: unit * p^val + O(p^{val+prec}) with p ∤ unit,
// or a zero known only up to O(p^{abs}). Precision propagates pessimistically:
// products take the min relative precision, sums the min absolute precision.
// A default-constructed value is the exact zero (absorbing additive identity).
struct Padic {
    static constexpr long kInfPrec = 1L << 40;

    long p = 0;  // 0 marks the exact zero with no prime attached yet
    bool zero = true;
    long val = kInfPrec;  // for zero values: absolute precision O(p^val)
    long prec = 0;        // relative precision of the unit (nonzero values)
    Int unit;             // 0 <= unit < p^prec, p ∤ unit

    Padic() = default;
    Padic(long p_, const Int& value, long rel_prec);  // from integer
    static Padic from_rat(long p, const Rat& x, long rel_prec);
    static Padic zero_abs(long p, long abs_prec);  // 0 + O(p^abs_prec)
    static Padic one(long p, long rel_prec) { return Padic(p, 1, rel_prec); }

    bool is_exact_zero() const { return zero && val >= kInfPrec; }
    long abs_prec() const { return zero ? val : val + prec; }
    // valuation is only known to be >= abs_prec for zero values
    long known_val() const {
        if (zero) throw std::domain_error("Padic: valuation of (apparent) zero");
        return val;
    }

    Int lift() const;            // representative integer (val >= 0)
    long residue_mod_p() const;  // reduce a val >= 0 value mod p
    std::string str() const;

    friend Padic operator+(const Padic& a, const Padic& b);
    friend Padic operator-(const Padic& a, const Padic& b);
    friend Padic operator*(const Padic& a, const Padic& b);
    friend Padic operator/(const Padic& a, const Padic& b);
    Padic operator-() const;

    Padic inv() const;
    // Hensel square root for odd p; nullopt when no root exists.
    std::optional<Padic> sqrt() const;
};

// Checks a == b to the common available precision.
bool padic_eq(const Padic& a, const Padic& b);

// Unique Hensel lift mod p^k of a simple root r0 of f mod p.
// Errors if f(r0) != 0 mod p or f'(r0) == 0 mod p.
Int hensel_lift_root(const ZPoly& f, const Int& r0, long p, long k);

// Element a + b*sqrt(d) of a quadratic extension of Q_p (d a non-square).
struct QuadPadic {
    Padic a, b;
    Padic d;  // the fixed non-square (shared by both operands in arithmetic)

    QuadPadic conj() const { return {a, -b, d}; }
    friend QuadPadic operator+(const QuadPadic& x, const QuadPadic& y);
    friend QuadPadic operator-(const QuadPadic& x, const QuadPadic& y);
    friend QuadPadic operator*(const QuadPadic& x, const QuadPadic& y);
};

}  // namespace plab
