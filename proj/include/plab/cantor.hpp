#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace plab {

// Polynomial helpers over a small field object F (see QField / PrimeField).
namespace fpoly {

template <class F>
using Poly = std::vector<typename F::El>;

template <class F>
void trim(const F& K, Poly<F>& v) {
    while (!v.empty() && K.is_zero(v.back())) v.pop_back();
}

template <class F>
int deg(const F& K, const Poly<F>& v) {
    for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d)
        if (!K.is_zero(v[d])) return d;
    return -1;
}

template <class F>
Poly<F> add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = K.add(r[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    trim(K, r);
    return r;
}

template <class F>
Poly<F> sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = K.add(r[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
    trim(K, r);
    return r;
}

template <class F>
Poly<F> mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    trim(K, r);
    return r;
}

template <class F>
Poly<F> scale(const F& K, const typename F::El& s, const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& v : r) v = K.mul(s, v);
    trim(K, r);
    return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const F& K, Poly<F> a, const Poly<F>& b) {
    int db = deg(K, b);
    if (db < 0) throw std::domain_error("fpoly::divrem: division by zero");
    trim(K, a);
    Poly<F> q(std::max<size_t>(1, a.size()), K.zero());
    while (deg(K, a) >= db) {
        int da = deg(K, a);
        typename F::El f = K.div(a[da], b[db]);
        q[da - db] = K.add(q[da - db], f);
        for (int j = 0; j <= db; ++j) a[da - db + j] = K.sub(a[da - db + j], K.mul(f, b[j]));
        trim(K, a);
    }
    trim(K, q);
    return {q, a};
}

template <class F>
Poly<F> pmod(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return divrem(K, a, b).second;
}

template <class F>
Poly<F> monic(const F& K, Poly<F> a) {
    trim(K, a);
    if (a.empty()) return a;
    typename F::El inv = K.div(K.one(), a.back());
    for (auto& v : a) v = K.mul(inv, v);
    return a;
}

// extended gcd: returns (g, s, t) with s a + t b = g, g monic
template <class F>
std::array<Poly<F>, 3> exgcd(const F& K, Poly<F> a, Poly<F> b) {
    Poly<F> s0{K.one()}, s1, t0, t1{K.one()};
    trim(K, a);
    trim(K, b);
    while (deg(K, b) >= 0) {
        auto [q, r] = divrem(K, a, b);
        a = b;
        b = r;
        Poly<F> s2 = sub(K, s0, mul(K, q, s1));
        Poly<F> t2 = sub(K, t0, mul(K, q, t1));
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (deg(K, a) < 0) return {a, s0, t0};
    typename F::El lead = a[deg(K, a)];
    typename F::El inv = K.div(K.one(), lead);
    return {scale(K, inv, a), scale(K, inv, s0), scale(K, inv, t0)};
}

template <class F>
typename F::El eval(const F& K, const Poly<F>& a, const typename F::El& x) {
    typename F::El r = K.zero();
    for (size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
    return r;
}

}  // namespace fpoly

template <class F>
struct Mumford {
    std::vector<typename F::El> a, b;
};

template <class F>
Mumford<F> cantor_identity(const F& K) {
    return {{K.one()}, {}};
}

template <class F>
bool cantor_is_valid(const F& K, const std::vector<typename F::El>& f, const Mumford<F>& D) {
    using namespace fpoly;
    if (deg(K, D.a) < 0) return false;
    if (!K.eq(D.a[deg(K, D.a)], K.one())) return false;
    if (deg(K, D.b) >= deg(K, D.a)) return false;
    Poly<F> r = pmod(K, sub(K, mul(K, D.b, D.b), f), D.a);
    return deg(K, r) < 0;
}

template <class F>
Mumford<F> cantor_neg(const F& K, const Mumford<F>& D) {
    Mumford<F> r = D;
    for (auto& v : r.b) v = K.neg(v);
    return r;
}

template <class F>
bool cantor_eq(const F& K, const Mumford<F>& D1, const Mumford<F>& D2) {
    using namespace fpoly;
    return deg(K, sub(K, D1.a, D2.a)) < 0 && deg(K, sub(K, D1.b, D2.b)) < 0;
}

// Cantor composition + reduction on y^2 = f with deg f = 2g+1 (here g = 2).
template <class F>
Mumford<F> cantor_add(const F& K, const std::vector<typename F::El>& f, const Mumford<F>& D1,
                      const Mumford<F>& D2) {
    using namespace fpoly;
    const int g = (deg(K, f) - 1) / 2;
    // composition
    auto [d0, e1, e2] = exgcd(K, D1.a, D2.a);
    auto [d, c1, c2] = exgcd(K, d0, add(K, D1.b, D2.b));
    Poly<F> s1 = mul(K, c1, e1), s2 = mul(K, c1, e2), s3 = c2;
    Poly<F> a = mul(K, D1.a, D2.a);
    {
        auto [q, r] = divrem(K, a, mul(K, d, d));
        if (deg(K, r) >= 0) throw std::logic_error("cantor_add: composition division not exact");
        a = q;
    }
    // b = (s1 a1 b2 + s2 a2 b1 + s3 (b1 b2 + f)) / d  mod a
    Poly<F> num = add(K, add(K, mul(K, mul(K, s1, D1.a), D2.b), mul(K, mul(K, s2, D2.a), D1.b)),
                      mul(K, s3, add(K, mul(K, D1.b, D2.b), f)));
    auto [bq, br] = divrem(K, num, d);
    if (deg(K, br) >= 0) throw std::logic_error("cantor_add: b-division not exact");
    Poly<F> b = pmod(K, bq, a);
    // reduction
    while (deg(K, a) > g) {
        Poly<F> anew;
        {
            auto [q, r] = divrem(K, sub(K, f, mul(K, b, b)), a);
            if (deg(K, r) >= 0) throw std::logic_error("cantor_add: reduction division not exact");
            anew = q;
        }
        anew = monic(K, anew);
        Poly<F> bnew = pmod(K, scale(K, K.neg(K.one()), b), anew);
        a = anew;
        b = bnew;
    }
    a = monic(K, a);
    b = pmod(K, b, a);
    return {a, b};
}

template <class F>
Mumford<F> cantor_mul(const F& K, const std::vector<typename F::El>& f, long n, const Mumford<F>& D) {
    Mumford<F> base = D, acc = cantor_identity(K);
    bool negate = n < 0;
    unsigned long m = negate ? -static_cast<unsigned long>(n) : n;
    while (m) {
        if (m & 1) acc = cantor_add(K, f, acc, base);
        base = cantor_add(K, f, base, base);
        m >>= 1;
    }
    return negate ? cantor_neg(K, acc) : acc;
}

}  // namespace plab
