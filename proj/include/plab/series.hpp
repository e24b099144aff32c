#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace plab {

// Truncated power series: coefficients a[0..n-1] represent sum a_i T^i + O(T^n).
// Arithmetic truncates to the shorter operand.
template <class C>
struct Series {
    std::vector<C> a;

    Series() = default;
    explicit Series(std::vector<C> coeffs) : a(std::move(coeffs)) {}
    size_t order() const { return a.size(); }

    friend Series operator+(const Series& x, const Series& y) {
        size_t n = std::min(x.a.size(), y.a.size());
        Series r;
        r.a.reserve(n);
        for (size_t i = 0; i < n; ++i) r.a.push_back(x.a[i] + y.a[i]);
        return r;
    }
    friend Series operator-(const Series& x, const Series& y) {
        size_t n = std::min(x.a.size(), y.a.size());
        Series r;
        r.a.reserve(n);
        for (size_t i = 0; i < n; ++i) r.a.push_back(x.a[i] - y.a[i]);
        return r;
    }
    friend Series operator*(const Series& x, const Series& y) {
        size_t n = std::min(x.a.size(), y.a.size());
        Series r;
        r.a.assign(n, C());
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; i + j < n && j < y.a.size(); ++j) r.a[i + j] = r.a[i + j] + x.a[i] * y.a[j];
        return r;
    }
    friend Series operator*(const C& s, const Series& x) {
        Series r = x;
        for (auto& v : r.a) v = s * v;
        return r;
    }

    // composition x(g) for g with zero constant term
    Series compose(const Series& g) const {
        size_t n = std::min(a.size(), g.a.size());
        Series r;
        r.a.assign(n, C());
        for (size_t i = a.size(); i-- > 0;) {
            // r = r * g + a_i
            Series t = r * g;
            r = t;
            if (!r.a.empty()) r.a[0] = r.a[0] + a[i];
        }
        return r;
    }

    C eval(const C& t) const {
        C r = C();
        for (size_t i = a.size(); i-- > 0;) r = r * t + a[i];
        return r;
    }
};

// Formal integral with zero constant term; from_long supplies ring scalars.
template <class C>
Series<C> series_integrate(const Series<C>& f, const std::function<C(long)>& from_long) {
    Series<C> r;
    r.a.assign(f.a.size() + 1, C());
    for (size_t i = 0; i < f.a.size(); ++i) r.a[i + 1] = f.a[i] / from_long(static_cast<long>(i + 1));
    return r;
}

// Multiplicative inverse; requires an invertible constant term.
template <class C>
Series<C> series_inverse(const Series<C>& f) {
    if (f.a.empty()) throw std::domain_error("series_inverse: empty");
    Series<C> r;
    r.a.assign(f.a.size(), C());
    r.a[0] = (f.a[0] / f.a[0]) / f.a[0];  // 1/a0
    for (size_t n = 1; n < f.a.size(); ++n) {
        C s = C();
        for (size_t k = 1; k <= n && k < f.a.size(); ++k) s = s + f.a[k] * r.a[n - k];
        r.a[n] = (C() - s) / f.a[0];
    }
    return r;
}

}  // namespace plab
