#pragma once

#include <stdexcept>
#include <vector>

#include "plab/primes.hpp"
#include "plab/rational.hpp"

namespace plab {

// Dense univariate polynomial over a commutative ring R (ascending coefficients).
// R needs +, -, *, ==, and construction from int.
template <class R>
struct UniPoly {
    std::vector<R> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<R> coeffs) : c(std::move(coeffs)) { trim(); }
    static UniPoly x() { return UniPoly(std::vector<R>{R(0), R(1)}); }
    static UniPoly constant(const R& v) { return UniPoly(std::vector<R>{v}); }

    void trim() {
        while (!c.empty() && c.back() == R(0)) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const R& operator[](size_t i) const {
        static const R zero = R(0);
        return i < c.size() ? c[i] : zero;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<R> r(std::max(a.c.size(), b.c.size()), R(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<R> r(std::max(a.c.size(), b.c.size()), R(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<R> r(a.c.size() + b.c.size() - 1, R(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const R& s, const UniPoly& a) {
        std::vector<R> r = a.c;
        for (auto& v : r) v = s * v;
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

    R eval(const R& x) const {
        R r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    UniPoly derivative() const {
        std::vector<R> r;
        for (size_t i = 1; i < c.size(); ++i) r.push_back(R(static_cast<long>(i)) * c[i]);
        return UniPoly(std::move(r));
    }

    UniPoly compose(const UniPoly& g) const {
        UniPoly r;
        for (size_t i = c.size(); i-- > 0;) r = r * g + constant(c[i]);
        return r;
    }
};

template <class R>
UniPoly<R> powpoly(const UniPoly<R>& f, int n) {
    UniPoly<R> r = UniPoly<R>::constant(R(1));
    for (int i = 0; i < n; ++i) r = r * f;
    return r;
}

// quotient/remainder over a field (or when b is monic over a ring)
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> unipoly_divrem(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.is_zero()) throw std::domain_error("unipoly_divrem: division by zero");
    UniPoly<R> rem = a, quo;
    int db = b.deg();
    quo.c.assign(std::max(0, a.deg() - db + 1), R(0));
    while (rem.deg() >= db) {
        R f = rem.c[rem.deg()] / b.c[db];
        int shift = rem.deg() - db;
        quo.c[shift] = f;
        for (int j = 0; j <= db; ++j) rem.c[shift + j] = rem.c[shift + j] - f * b.c[j];
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

template <class R>
UniPoly<R> unipoly_gcd(UniPoly<R> a, UniPoly<R> b) {
    while (!b.is_zero()) {
        auto [q, r] = unipoly_divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        R lead = a.c[a.deg()];
        for (auto& v : a.c) v = v / lead;
    }
    return a;
}

using ZPoly = UniPoly<Int>;
using QPoly = UniPoly<Rat>;

inline ZPoly zpoly_from_q(const QPoly& f) {
    Int lcm = 1;
    for (const auto& v : f.c) lcm = lcm / gcd(lcm, v.get_den()) * v.get_den();
    std::vector<Int> c;
    for (const auto& v : f.c) c.push_back(Int(v.get_num() * (lcm / v.get_den())));
    return ZPoly(std::move(c));
}

// Divisors of |n| by trial division; intended for the modest constants in scope.
inline std::vector<Int> int_divisors(Int n) {
    n = abs(n);
    if (n == 0) throw std::invalid_argument("int_divisors: zero");
    std::vector<std::pair<Int, int>> fac;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<Int> divs{1};
    for (auto& [p, e] : fac) {
        size_t sz = divs.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

// All rational roots of a nonzero integer polynomial (rational root theorem
// for the candidates, exact evaluation for the verdict).
inline std::vector<Rat> rational_roots(const ZPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rat> roots;
    size_t v = 0;
    while (v < f.c.size() && f.c[v] == 0) ++v;
    if (v > 0) roots.push_back(Rat(0));
    std::vector<Int> stripped(f.c.begin() + v, f.c.end());
    if (stripped.size() <= 1) return roots;
    ZPoly g{std::vector<Int>(stripped)};
    for (const Int& r : int_divisors(g.c.front())) {
        for (const Int& s : int_divisors(g.c.back())) {
            if (gcd(r, s) != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand = make_rat(sign * r, s);
                Rat val(0);
                for (size_t i = g.c.size(); i-- > 0;) val = val * cand + Rat(g.c[i]);
                if (val == 0) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) { return a < b; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace plab
