#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "plab/rational.hpp"

namespace plab {

// Sparse multivariate polynomial over R; exponent vectors have fixed length nvars.
// Term order used for leading-term logic is lex on the exponent vector.
template <class R>
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, R> terms;  // exponent -> nonzero coefficient

    MultiPoly() = default;
    explicit MultiPoly(int n) : nvars(n) {}

    static MultiPoly constant(int n, const R& v) {
        MultiPoly f(n);
        if (!(v == R(0))) f.terms[std::vector<int>(n, 0)] = v;
        return f;
    }
    static MultiPoly var(int n, int i, int power = 1) {
        MultiPoly f(n);
        std::vector<int> e(n, 0);
        e[i] = power;
        f.terms[e] = R(1);
        return f;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<int>& e, const R& v) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!(v == R(0))) terms[e] = v;
        } else {
            it->second = it->second + v;
            if (it->second == R(0)) terms.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, v] : b.terms) r.add_term(e, v);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, v] : b.terms) r.add_term(e, R(0) - v);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars);
        for (const auto& [ea, va] : a.terms)
            for (const auto& [eb, vb] : b.terms) {
                std::vector<int> e(a.nvars);
                for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, va * vb);
            }
        return r;
    }
    friend MultiPoly operator*(const R& s, const MultiPoly& a) {
        MultiPoly r(a.nvars);
        for (const auto& [e, v] : a.terms) r.add_term(e, s * v);
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms == b.terms; }

    int deg_in(int var) const {
        int d = -1;
        for (const auto& [e, v] : terms) d = std::max(d, e[var]);
        return d;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r(nvars);
        for (const auto& [e, v] : terms) {
            if (e[var] == 0) continue;
            std::vector<int> e2 = e;
            e2[var] -= 1;
            r.add_term(e2, R(static_cast<long>(e[var])) * v);
        }
        return r;
    }

    // substitute variable var by g
    MultiPoly subst(int var, const MultiPoly& g) const {
        int d = deg_in(var);
        if (d <= 0 && deg_in(var) < 0) return *this;
        // collect coefficients of var^k
        std::vector<MultiPoly> coef(std::max(d + 1, 1), MultiPoly(nvars));
        for (const auto& [e, v] : terms) {
            std::vector<int> e2 = e;
            int k = e2[var];
            e2[var] = 0;
            coef[k].add_term(e2, v);
        }
        MultiPoly r(nvars);
        for (int k = d; k >= 0; --k) r = r * g + coef[k];
        return r;
    }

    // evaluate with a coefficient map and per-variable values in a ring S
    template <class S, class Hom>
    S eval(const std::vector<S>& vals, Hom hom, const S& zero) const {
        S acc = zero;
        for (const auto& [e, v] : terms) {
            S t = hom(v);
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * vals[i];
            acc = acc + t;
        }
        return acc;
    }
};

// Exact division f / g (throws if not exact). Uses lex leading terms; the
// coefficient quotient must be exact in R (ring_divexact).
template <class R>
R ring_divexact(const R& a, const R& b);

template <>
inline Int ring_divexact<Int>(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0) throw std::domain_error("ring_divexact: not divisible");
    return a / b;
}

template <>
inline Rat ring_divexact<Rat>(const Rat& a, const Rat& b) {
    if (b == 0) throw std::domain_error("ring_divexact: zero divisor");
    return a / b;
}

template <class R>
MultiPoly<R> multipoly_divexact(MultiPoly<R> f, const MultiPoly<R>& g) {
    if (g.is_zero()) throw std::domain_error("multipoly_divexact: zero divisor");
    MultiPoly<R> q(f.nvars);
    const auto& glt = *g.terms.rbegin();  // lex-largest
    while (!f.is_zero()) {
        const auto& flt = *f.terms.rbegin();
        std::vector<int> e(f.nvars);
        for (int i = 0; i < f.nvars; ++i) {
            e[i] = flt.first[i] - glt.first[i];
            if (e[i] < 0) throw std::domain_error("multipoly_divexact: not divisible (monomial)");
        }
        R c = ring_divexact(flt.second, glt.second);
        MultiPoly<R> t(f.nvars);
        t.terms[e] = c;
        f = f - t * g;
        q.add_term(e, c);
    }
    return q;
}

// Reduce f modulo m, where m is monic in variable var (unit leading coefficient
// as a polynomial in var). Result has deg_in(var) < deg_in(var) of m.
template <class R>
MultiPoly<R> reduce_mod_monic(MultiPoly<R> f, const MultiPoly<R>& m, int var) {
    int d = m.deg_in(var);
    if (d < 0) throw std::domain_error("reduce_mod_monic: zero modulus");
    while (true) {
        // highest var-exponent term
        int best = -1;
        std::vector<int> be;
        R bc(0);
        for (const auto& [e, v] : f.terms)
            if (e[var] > best) {
                best = e[var];
                be = e;
                bc = v;
            }
        if (best < d) break;
        std::vector<int> shift = be;
        shift[var] -= d;
        MultiPoly<R> t(f.nvars);
        t.terms[shift] = bc;
        f = f - t * m;
    }
    return f;
}

}  // namespace plab
