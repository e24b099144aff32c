#include "plab/padic.hpp"

#include <sstream>

namespace plab {

namespace {

Int ppow(long p, long k) {
    if (k < 0) throw std::logic_error("ppow: negative exponent");
    return pow_int(Int(p), static_cast<unsigned long>(k));
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: not invertible");
    return r;
}

}  // namespace

Padic::Padic(long p_, const Int& value, long rel_prec) : p(p_) {
    if (rel_prec <= 0) throw std::invalid_argument("Padic: precision must be positive");
    if (value == 0) {
        zero = true;
        val = kInfPrec;
        return;
    }
    long v = int_val(value, p_);
    zero = false;
    val = v;
    prec = rel_prec;
    Int u = value / ppow(p_, v);
    Int m = ppow(p_, rel_prec);
    unit = ((u % m) + m) % m;
}

Padic Padic::from_rat(long p, const Rat& x, long rel_prec) {
    if (x == 0) return Padic(p, 0, rel_prec);
    long vnum = int_val(x.get_num(), p);
    long vden = int_val(x.get_den(), p);
    Padic r;
    r.p = p;
    r.zero = false;
    r.val = vnum - vden;
    r.prec = rel_prec;
    Int m = ppow(p, rel_prec);
    Int nu = x.get_num() / ppow(p, vnum);
    Int de = x.get_den() / ppow(p, vden);
    Int u = nu % m * mod_inverse(de % m, m) % m;
    r.unit = ((u % m) + m) % m;
    return r;
}

Padic Padic::zero_abs(long p, long abs_prec) {
    Padic r;
    r.p = p;
    r.zero = true;
    r.val = abs_prec;
    return r;
}

Int Padic::lift() const {
    if (zero) return 0;
    if (val < 0) throw std::domain_error("Padic::lift: negative valuation");
    return unit * ppow(p, val);
}

long Padic::residue_mod_p() const {
    if (zero) {
        if (val < 1) throw std::domain_error("Padic: residue imprecise");
        return 0;
    }
    if (val < 0) throw std::domain_error("Padic: residue of negative valuation");
    if (val > 0) return 0;
    return mpz_fdiv_ui(unit.get_mpz_t(), static_cast<unsigned long>(p));
}

std::string Padic::str() const {
    std::ostringstream os;
    if (zero) {
        os << "O(" << p << "^" << (val >= kInfPrec ? std::string("inf") : std::to_string(val)) << ")";
        return os.str();
    }
    os << unit.get_str() << "*" << p << "^" << val << " + O(" << p << "^" << val + prec << ")";
    return os.str();
}

Padic operator+(const Padic& a, const Padic& b) {
    if (a.is_exact_zero() && a.p == 0) return b;
    if (b.is_exact_zero() && b.p == 0) return a;
    if (a.p != b.p) throw std::invalid_argument("Padic: mixed primes");
    long abs = std::min(a.abs_prec(), b.abs_prec());
    if (a.zero && b.zero) return Padic::zero_abs(a.p, abs);
    long m = a.zero ? b.val : (b.zero ? a.val : std::min(a.val, b.val));
    m = std::min(m, abs);
    // units scaled to the common valuation m, modulo p^{abs-m}
    Int mod = ppow(a.p, abs - m);
    Int s = 0;
    if (!a.zero) s += a.unit * ppow(a.p, a.val - m);
    if (!b.zero) s += b.unit * ppow(a.p, b.val - m);
    s = ((s % mod) + mod) % mod;
    if (s == 0) return Padic::zero_abs(a.p, abs);
    long v = int_val(s, a.p);
    Padic r;
    r.p = a.p;
    r.zero = false;
    r.val = m + v;
    r.prec = abs - m - v;
    r.unit = s / ppow(a.p, v);
    return r;
}

Padic Padic::operator-() const {
    if (zero) return *this;
    Padic r = *this;
    Int m = ppow(p, prec);
    r.unit = (m - unit) % m;
    return r;
}

Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

Padic operator*(const Padic& a, const Padic& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) {
        Padic r;
        r.p = a.p ? a.p : b.p;
        return r;
    }
    if (a.p != b.p) throw std::invalid_argument("Padic: mixed primes");
    if (a.zero || b.zero) {
        // O(p^A) * (unit p^v + ...) = O(p^{A+v}); O(p^A) * O(p^B) = O(p^{A+B})
        return Padic::zero_abs(a.p, std::min(a.val + b.val, Padic::kInfPrec));
    }
    Padic r;
    r.p = a.p;
    r.zero = false;
    r.val = a.val + b.val;
    r.prec = std::min(a.prec, b.prec);
    Int m = ppow(a.p, r.prec);
    r.unit = a.unit * b.unit % m;
    return r;
}

Padic Padic::inv() const {
    if (zero) throw std::domain_error("Padic::inv: zero (to available precision)");
    Padic r;
    r.p = p;
    r.zero = false;
    r.val = -val;
    r.prec = prec;
    r.unit = mod_inverse(unit, ppow(p, prec));
    return r;
}

Padic operator/(const Padic& a, const Padic& b) { return a * b.inv(); }

std::optional<Padic> Padic::sqrt() const {
    if (zero) throw std::domain_error("Padic::sqrt: zero to precision");
    if (p == 2) throw std::invalid_argument("Padic::sqrt: p = 2 unsupported");
    if (val % 2 != 0) return std::nullopt;
    // Hensel on x^2 = unit
    long u0 = mpz_fdiv_ui(unit.get_mpz_t(), static_cast<unsigned long>(p));
    long s0 = -1;
    for (long x = 1; x < p; ++x)
        if (x * x % p == u0) {
            s0 = x;
            break;
        }
    if (s0 < 0) return std::nullopt;
    Int s(s0);
    long k = 1;
    while (k < prec) {
        k = std::min(2 * k, prec);
        Int m = ppow(p, k);
        Int inv2s = mod_inverse(2 * s % m, m);
        s = (s + (unit % m - s * s % m) * inv2s) % m;
        s = ((s % m) + m) % m;
    }
    Padic r;
    r.p = p;
    r.zero = false;
    r.val = val / 2;
    r.prec = prec;
    r.unit = s;
    return r;
}

bool padic_eq(const Padic& a, const Padic& b) {
    Padic d = a - b;
    return d.zero;
}

Int hensel_lift_root(const ZPoly& f, const Int& r0, long p, long k) {
    if (k < 1) throw std::invalid_argument("hensel_lift_root: k >= 1");
    Int pz(p);
    Int fr = f.eval(r0) % pz;
    if (fr != 0) throw std::domain_error("hensel_lift_root: not a root mod p");
    ZPoly df = f.derivative();
    Int dfr = df.eval(r0) % pz;
    if (dfr == 0) throw std::domain_error("hensel_lift_root: non-simple root (derivative vanishes mod p)");
    Int r = ((r0 % pz) + pz) % pz;
    long cur = 1;
    while (cur < k) {
        cur = std::min(2 * cur, k);
        Int m = ppow(p, cur);
        Int u = mod_inverse(((df.eval(r) % m) + m) % m, m);
        r = r - f.eval(r) % m * u;
        r = ((r % m) + m) % m;
    }
    return r;
}

QuadPadic operator+(const QuadPadic& x, const QuadPadic& y) { return {x.a + y.a, x.b + y.b, x.d}; }
QuadPadic operator-(const QuadPadic& x, const QuadPadic& y) { return {x.a - y.a, x.b - y.b, x.d}; }
QuadPadic operator*(const QuadPadic& x, const QuadPadic& y) {
    return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
}

}  // namespace plab
