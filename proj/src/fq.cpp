#include "plab/fq.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "plab/primes.hpp"

namespace plab {

namespace {

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

uint32_t p_inv(uint32_t a, uint32_t p) {
    int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("p_inv: not invertible");
    int64_t v = t % static_cast<int64_t>(p);
    if (v < 0) v += p;
    return static_cast<uint32_t>(v);
}

}  // namespace

static bool modulus_irreducible(uint32_t p, int e, const std::vector<uint32_t>& m);

FqCtx::FqCtx(uint32_t p_, int e_) : p(p_), e(e_) {
    if (e < 1) throw std::invalid_argument("FqCtx: e >= 1 required");
    if (!is_prime_u64(p)) throw std::invalid_argument("FqCtx: p not prime");
    q = ipow(p, e);
    if (e == 1) {
        modulus = {0, 1};  // x
        return;
    }
    // sieve monic polynomials; (a_{e-1},...,a_0) read as base-p digits, smallest first
    uint64_t total = ipow(p, e);
    for (uint64_t enc = 0; enc < total; ++enc) {
        std::vector<uint32_t> m(e + 1, 0);
        uint64_t x = enc;
        for (int i = 0; i < e; ++i) {
            m[i] = static_cast<uint32_t>(x % p);
            x /= p;
        }
        m[e] = 1;
        if (modulus_irreducible(p, e, m)) {
            modulus = m;
            return;
        }
    }
    throw std::logic_error("FqCtx: no irreducible modulus found");
}

FqCtx::FqCtx(uint32_t p_, std::vector<uint32_t> explicit_modulus) : p(p_), modulus(std::move(explicit_modulus)) {
    if (!is_prime_u64(p)) throw std::invalid_argument("FqCtx: p not prime");
    e = static_cast<int>(modulus.size()) - 1;
    if (e < 1 || modulus[e] != 1) throw std::invalid_argument("FqCtx: modulus must be monic of degree >= 1");
    q = ipow(p, e);
    if (e > 1 && !modulus_irreducible(p, e, modulus))
        throw std::invalid_argument("FqCtx: modulus reducible");
}

std::string FqCtx::modulus_str() const {
    std::ostringstream os;
    for (size_t i = 0; i < modulus.size(); ++i) {
        if (i) os << ',';
        os << modulus[i];
    }
    return os.str();
}

Fq fq_zero(const FqCtx& F) { return Fq(F.e, 0); }

Fq fq_one(const FqCtx& F) {
    Fq a(F.e, 0);
    a[0] = 1;
    return a;
}

Fq fq_from_int(const FqCtx& F, long n) {
    long v = n % static_cast<long>(F.p);
    if (v < 0) v += F.p;
    Fq a(F.e, 0);
    a[0] = static_cast<uint32_t>(v);
    return a;
}

Fq fq_from_index(const FqCtx& F, uint64_t idx) {
    Fq a(F.e, 0);
    for (int i = 0; i < F.e; ++i) {
        a[i] = static_cast<uint32_t>(idx % F.p);
        idx /= F.p;
    }
    return a;
}

uint64_t fq_index(const FqCtx& F, const Fq& a) {
    uint64_t idx = 0;
    for (int i = F.e - 1; i >= 0; --i) idx = idx * F.p + a[i];
    return idx;
}

bool fq_is_zero(const Fq& a) {
    for (uint32_t c : a)
        if (c) return false;
    return true;
}

Fq fq_add(const FqCtx& F, const Fq& a, const Fq& b) {
    Fq r(F.e);
    for (int i = 0; i < F.e; ++i) {
        uint32_t s = a[i] + b[i];
        r[i] = s >= F.p ? s - F.p : s;
    }
    return r;
}

Fq fq_sub(const FqCtx& F, const Fq& a, const Fq& b) {
    Fq r(F.e);
    for (int i = 0; i < F.e; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + F.p - b[i];
    return r;
}

Fq fq_neg(const FqCtx& F, const Fq& a) { return fq_sub(F, fq_zero(F), a); }

Fq fq_mul(const FqCtx& F, const Fq& a, const Fq& b) {
    const int e = F.e;
    const uint64_t p = F.p;
    std::vector<uint64_t> acc(2 * e - 1, 0);
    for (int i = 0; i < e; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < e; ++j) acc[i + j] += static_cast<uint64_t>(a[i]) * b[j];
    }
    // fold x^k = -(m_0 + ... + m_{e-1} x^{e-1}) x^{k-e}
    for (int k = 2 * e - 2; k >= e; --k) {
        uint64_t c = acc[k] % p;
        if (!c) continue;
        uint64_t cneg = p - c;
        for (int j = 0; j < e; ++j) acc[k - e + j] += cneg * F.modulus[j] % p;
    }
    Fq r(e);
    for (int i = 0; i < e; ++i) r[i] = static_cast<uint32_t>(acc[i] % p);
    return r;
}

Fq fq_pow(const FqCtx& F, Fq a, uint64_t n) {
    Fq r = fq_one(F);
    while (n) {
        if (n & 1) r = fq_mul(F, r, a);
        a = fq_mul(F, a, a);
        n >>= 1;
    }
    return r;
}

Fq fq_inv(const FqCtx& F, const Fq& a) {
    if (fq_is_zero(a)) throw std::domain_error("fq_inv: zero");
    if (F.e == 1) return Fq{p_inv(a[0], F.p)};
    // extended Euclid in F_p[x] against the modulus
    std::vector<uint32_t> r0 = F.modulus, r1(a);
    r1.resize(F.e + 1, 0);
    std::vector<uint32_t> t0(F.e + 1, 0), t1(F.e + 1, 0);
    t1[0] = 1;
    auto deg = [](const std::vector<uint32_t>& f) {
        for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
            if (f[d]) return d;
        return -1;
    };
    const uint64_t p = F.p;
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) throw std::domain_error("fq_inv: zero divisor");
        if (d1 == 0) break;
        int d0 = deg(r0);
        while (d0 >= d1) {
            uint64_t f = static_cast<uint64_t>(r0[d0]) * p_inv(r1[d1], F.p) % p;
            for (int j = 0; j <= d1; ++j) {
                r0[d0 - d1 + j] = static_cast<uint32_t>((r0[d0 - d1 + j] + (p - f) * r1[j]) % p);
                t0[d0 - d1 + j] = static_cast<uint32_t>((t0[d0 - d1 + j] + (p - f) * t1[j]) % p);
            }
            d0 = deg(r0);
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    uint64_t lead_inv = p_inv(r1[0], F.p);
    Fq out(F.e);
    for (int i = 0; i < F.e; ++i) out[i] = static_cast<uint32_t>(t1[i] * lead_inv % p);
    return out;
}

bool fq_is_square(const FqCtx& F, const Fq& a) {
    if (fq_is_zero(a)) throw std::domain_error("fq_is_square: zero");
    return fq_pow(F, a, (F.q - 1) / 2) == fq_one(F);
}

FqPoly fqp_trim(const FqCtx&, FqPoly f) {
    while (!f.empty() && fq_is_zero(f.back())) f.pop_back();
    return f;
}

int fqp_deg(const FqPoly& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (!fq_is_zero(f[d])) return d;
    return -1;
}

FqPoly fqp_add(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), fq_zero(F));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fq_add(F, r[i], b[i]);
    return fqp_trim(F, r);
}

FqPoly fqp_sub(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), fq_zero(F));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fq_sub(F, r[i], b[i]);
    return fqp_trim(F, r);
}

FqPoly fqp_mul(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
    if (fqp_deg(a) < 0 || fqp_deg(b) < 0) return {};
    FqPoly r(a.size() + b.size() - 1, fq_zero(F));
    for (size_t i = 0; i < a.size(); ++i) {
        if (fq_is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fq_add(F, r[i + j], fq_mul(F, a[i], b[j]));
    }
    return fqp_trim(F, r);
}

// quotient with remainder; b nonzero
static std::pair<FqPoly, FqPoly> fqp_divrem(const FqCtx& F, FqPoly a, const FqPoly& b) {
    int db = fqp_deg(b);
    if (db < 0) throw std::domain_error("fqp_divrem: division by zero");
    Fq lead_inv = fq_inv(F, b[db]);
    int da = fqp_deg(a);
    FqPoly quo(std::max(0, da - db + 1), fq_zero(F));
    while (da >= db) {
        Fq f = fq_mul(F, a[da], lead_inv);
        quo[da - db] = f;
        for (int j = 0; j <= db; ++j)
            a[da - db + j] = fq_sub(F, a[da - db + j], fq_mul(F, f, b[j]));
        da = fqp_deg(a);
    }
    return {fqp_trim(F, quo), fqp_trim(F, a)};
}

FqPoly fqp_rem(const FqCtx& F, FqPoly a, const FqPoly& b) {
    return fqp_divrem(F, std::move(a), b).second;
}

FqPoly fqp_monic(const FqCtx& F, FqPoly f) {
    int d = fqp_deg(f);
    if (d < 0) return f;
    f.resize(d + 1);
    Fq inv = fq_inv(F, f[d]);
    for (auto& c : f) c = fq_mul(F, c, inv);
    return f;
}

FqPoly fqp_gcd(const FqCtx& F, FqPoly a, FqPoly b) {
    a = fqp_trim(F, std::move(a));
    b = fqp_trim(F, std::move(b));
    while (fqp_deg(b) >= 0) {
        FqPoly r = fqp_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fqp_monic(F, std::move(a));
}

FqPoly fqp_derivative(const FqCtx& F, const FqPoly& f) {
    FqPoly r;
    for (size_t i = 1; i < f.size(); ++i) {
        Fq c = fq_zero(F);
        for (size_t k = 0; k < i % F.p; ++k) c = fq_add(F, c, f[i]);
        r.push_back(c);
    }
    return fqp_trim(F, r);
}

Fq fqp_eval(const FqCtx& F, const FqPoly& f, const Fq& x) {
    Fq r = fq_zero(F);
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) r = fq_add(F, fq_mul(F, r, x), f[i]);
    return r;
}

FqPoly fqp_xpow_mod(const FqCtx& F, uint64_t n, const FqPoly& f) {
    if (fqp_deg(f) < 1) throw std::domain_error("fqp_xpow_mod: modulus must have degree >= 1");
    FqPoly r{fq_one(F)};
    FqPoly base = fqp_rem(F, FqPoly{fq_zero(F), fq_one(F)}, f);
    while (n) {
        if (n & 1) r = fqp_rem(F, fqp_mul(F, r, base), f);
        base = fqp_rem(F, fqp_mul(F, base, base), f);
        n >>= 1;
    }
    return r;
}

int fq_root_count(const FqCtx& F, const FqPoly& f) {
    if (fqp_deg(f) < 0) throw std::invalid_argument("fq_root_count: zero polynomial");
    if (fqp_deg(f) == 0) return 0;
    FqPoly xq = fqp_xpow_mod(F, F.q, f);
    FqPoly x{fq_zero(F), fq_one(F)};
    FqPoly g = fqp_gcd(F, fqp_sub(F, xq, x), f);
    return fqp_deg(g);
}

namespace {

FqPoly powmod(const FqCtx& F, FqPoly base, uint64_t n, const FqPoly& mod) {
    FqPoly r{fq_one(F)};
    base = fqp_rem(F, std::move(base), mod);
    while (n) {
        if (n & 1) r = fqp_rem(F, fqp_mul(F, r, base), mod);
        base = fqp_rem(F, fqp_mul(F, base, base), mod);
        n >>= 1;
    }
    return r;
}

// f squarefree, all irreducible factors of degree d; split completely
void edf(const FqCtx& F, const FqPoly& f, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    int n = fqp_deg(f);
    if (n == d) {
        out.push_back(fqp_monic(F, f));
        return;
    }
    uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= F.q;
    const uint64_t exp = (qd - 1) / 2;
    while (true) {
        FqPoly a(n, fq_zero(F));
        for (int i = 0; i < n; ++i) a[i] = fq_from_index(F, rng() % F.q);
        if (fqp_deg(a) < 1) continue;
        FqPoly r = powmod(F, a, exp, f);
        FqPoly g = fqp_gcd(F, fqp_sub(F, r, FqPoly{fq_one(F)}), f);
        int dg = fqp_deg(g);
        if (dg > 0 && dg < n) {
            edf(F, g, d, rng, out);
            edf(F, fqp_divrem(F, f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<FqPoly, int>> fq_factor(const FqCtx& F, FqPoly f, uint64_t seed) {
    std::vector<std::pair<FqPoly, int>> result;
    f = fqp_trim(F, std::move(f));
    if (fqp_deg(f) < 1) return result;
    f = fqp_monic(F, std::move(f));
    std::mt19937_64 rng(seed);

    FqPoly d = fqp_derivative(F, f);
    if (fqp_deg(d) < 0) {
        // f = g(x)^p: deflate and recurse
        FqPoly defl;
        for (size_t i = 0; i < f.size(); i += F.p) defl.push_back(fq_pow(F, f[i], F.q / F.p));
        for (auto& [h, m] : fq_factor(F, fqp_trim(F, defl), seed)) result.emplace_back(h, m * F.p);
        return result;
    }

    // squarefree part carries every factor whose multiplicity is prime to p
    FqPoly g = fqp_gcd(F, f, d);
    FqPoly sqfree = fqp_divrem(F, f, g).first;

    // distinct-degree decomposition of sqfree, then equal-degree splitting
    FqPoly w = sqfree;
    FqPoly xq{fq_zero(F), fq_one(F)};
    std::vector<FqPoly> irreducibles;
    int dd = 1;
    while (fqp_deg(w) > 0) {
        if (fqp_deg(w) < 2 * dd) {
            irreducibles.push_back(fqp_monic(F, w));
            break;
        }
        xq = powmod(F, fqp_rem(F, std::move(xq), w), F.q, w);
        FqPoly x{fq_zero(F), fq_one(F)};
        FqPoly gd = fqp_gcd(F, fqp_sub(F, xq, x), w);
        if (fqp_deg(gd) > 0) {
            edf(F, gd, dd, rng, irreducibles);
            w = fqp_divrem(F, w, gd).first;
        }
        ++dd;
    }

    // multiplicities in f by repeated exact division; leftover is a p-th power
    FqPoly rest = f;
    for (const auto& h : irreducibles) {
        int mult = 0;
        while (true) {
            auto [quo, rem] = fqp_divrem(F, rest, h);
            if (fqp_deg(rem) >= 0) break;
            rest = quo;
            ++mult;
        }
        result.emplace_back(h, mult);
    }
    if (fqp_deg(rest) > 0) {
        for (auto& [h, m] : fq_factor(F, rest, seed + 1)) {
            bool merged = false;
            for (auto& [h0, m0] : result)
                if (h0 == h) {
                    m0 += m;
                    merged = true;
                    break;
                }
            if (!merged) result.emplace_back(h, m);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        for (size_t i = a.first.size(); i-- > 0;)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return false;
    });
    return result;
}

std::vector<Fq> fq_roots(const FqCtx& F, const FqPoly& f, uint64_t seed) {
    std::vector<Fq> roots;
    for (auto& [h, m] : fq_factor(F, f, seed))
        if (fqp_deg(h) == 1) roots.push_back(fq_neg(F, h[0]));
    return roots;
}

bool fq_poly_irreducible(const FqCtx& F, const FqPoly& f) {
    int n = fqp_deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    auto factors = fq_factor(F, f, 7);
    return factors.size() == 1 && factors[0].second == 1;
}

static bool modulus_irreducible(uint32_t p, int e, const std::vector<uint32_t>& m) {
    // Rabin irreducibility test over F_p
    FqCtx Fp(p, 1);
    FqPoly f;
    for (uint32_t c : m) f.push_back(Fq{c});
    f = fqp_trim(Fp, f);
    if (fqp_deg(f) != e) return false;
    uint64_t n = 1;
    for (int i = 0; i < e; ++i) n *= p;
    FqPoly x{fq_zero(Fp), fq_one(Fp)};
    if (fqp_deg(fqp_sub(Fp, fqp_xpow_mod(Fp, n, f), x)) >= 0) return false;
    for (int ell : {2, 3, 5, 7, 11, 13}) {
        if (e % ell) continue;
        uint64_t ne = 1;
        for (int i = 0; i < e / ell; ++i) ne *= p;
        FqPoly g = fqp_gcd(Fp, fqp_sub(Fp, fqp_xpow_mod(Fp, ne, f), x), f);
        if (fqp_deg(g) > 0) return false;
    }
    return true;
}

}  // namespace plab
