#include "plab/count_kernel.hpp"

#include <cstring>
#include <stdexcept>

namespace plab {

namespace {

constexpr int kMaxDeg = 32;  // 2^N, N <= 5
constexpr int kMaxE = 6;

// Dense working image of a polynomial of degree < 2*kMaxDeg over F_{p^e},
// with unreduced uint64 accumulators in both the degree and coordinate
// directions. All products are < p^2 < 2^24 and fan-in stays far below 2^64.
struct Slab {
    uint64_t a[2 * kMaxDeg - 1][2 * kMaxE - 1];

    void clear(int slots, int width) {
        for (int s = 0; s < slots; ++s) std::memset(a[s], 0, sizeof(uint64_t) * width);
    }
};

struct Kernel {
    const FqCtx& F;
    int e;
    uint64_t p;
    const uint32_t* mod;  // modulus coefficients 0..e (monic)

    explicit Kernel(const FqCtx& ctx) : F(ctx), e(ctx.e), p(ctx.p), mod(ctx.modulus.data()) {}

    // reduce one accumulator row to a proper F_q element (coords 0..e-1 < p)
    void normalize_slot(uint64_t* row) const {
        for (int k = 2 * e - 2; k >= e; --k) {
            uint64_t c = row[k] % p;
            row[k] = 0;
            if (!c) continue;
            uint64_t cneg = p - c;
            for (int j = 0; j < e; ++j) row[k - e + j] += cneg * mod[j] % p;
        }
        for (int j = 0; j < e; ++j) row[j] %= p;
    }

    // poly (uint32 slots, reduced) squared into slab, then folded mod f
    // (monic of degree d, coefficients f[0..d-1]); result back into poly.
    void square_mod(uint32_t poly[][kMaxE], int d, const uint32_t f[][kMaxE], Slab& slab) const {
        const int slots = 2 * d - 1;
        slab.clear(slots, 2 * e - 1);
        for (int i = 0; i < d; ++i) {
            bool zi = true;
            for (int u = 0; u < e; ++u) zi = zi && !poly[i][u];
            if (zi) continue;
            // diagonal term
            for (int u = 0; u < e; ++u) {
                if (!poly[i][u]) continue;
                for (int v = 0; v < e; ++v)
                    slab.a[2 * i][u + v] += static_cast<uint64_t>(poly[i][u]) * poly[i][v];
            }
            for (int j = i + 1; j < d; ++j) {
                for (int u = 0; u < e; ++u) {
                    if (!poly[i][u]) continue;
                    uint64_t two_piu = 2ull * poly[i][u];
                    for (int v = 0; v < e; ++v)
                        slab.a[i + j][u + v] += two_piu * poly[j][v];
                }
            }
        }
        fold(slab, slots, d, f);
        for (int s = 0; s < d; ++s)
            for (int u = 0; u < e; ++u) poly[s][u] = static_cast<uint32_t>(slab.a[s][u]);
    }

    // multiply poly by x, fold mod f
    void shift_mod(uint32_t poly[][kMaxE], int d, const uint32_t f[][kMaxE]) const {
        uint32_t top[kMaxE];
        for (int u = 0; u < e; ++u) top[u] = poly[d - 1][u];
        for (int s = d - 1; s >= 1; --s)
            for (int u = 0; u < e; ++u) poly[s][u] = poly[s - 1][u];
        for (int u = 0; u < e; ++u) poly[0][u] = 0;
        bool zt = true;
        for (int u = 0; u < e; ++u) zt = zt && !top[u];
        if (zt) return;
        // poly -= top * f  (i.e. += (p - c) * f)
        uint64_t row[2 * kMaxE - 1];
        for (int s = 0; s < d; ++s) {
            std::memset(row, 0, sizeof(row));
            for (int u = 0; u < e; ++u) row[u] = poly[s][u];
            for (int u = 0; u < e; ++u) {
                if (!top[u]) continue;
                uint64_t tneg = p - top[u];
                for (int v = 0; v < e; ++v) row[u + v] += tneg * f[s][v];
            }
            normalize_slot(row);
            for (int u = 0; u < e; ++u) poly[s][u] = static_cast<uint32_t>(row[u]);
        }
    }

    void fold(Slab& slab, int slots, int d, const uint32_t f[][kMaxE]) const {
        for (int s = slots - 1; s >= 0; --s) {
            normalize_slot(slab.a[s]);
            if (s < d) continue;
            // subtract coeff * f * x^{s-d}
            for (int u = 0; u < e; ++u) {
                uint64_t c = slab.a[s][u];
                if (!c) continue;
                uint64_t cneg = p - c;
                for (int j = 0; j < d; ++j) {
                    for (int v = 0; v < e; ++v)
                        slab.a[s - d + j][u + v] += cneg * f[j][v];
                }
            }
            std::memset(slab.a[s], 0, sizeof(uint64_t) * (2 * e - 1));
        }
    }
};

}  // namespace

uint64_t count_affine_range(const FqCtx& F, int N, uint32_t a_res, uint64_t c_lo, uint64_t c_hi) {
    if (N < 2 || N > 5) throw std::invalid_argument("count_affine_range: N in [2,5]");
    if (F.e > kMaxE) throw std::invalid_argument("count_affine_range: e too large");
    if (F.p == 2) throw std::invalid_argument("count_affine_range: p = 2 excluded");
    Kernel K(F);
    const int e = F.e;
    const int D = 1 << N;
    Slab slab;
    uint64_t total = 0;

    uint32_t g[kMaxDeg][kMaxE];   // working polynomial (monic part implicit during build)
    uint32_t f[kMaxDeg][kMaxE];   // f_c^N(x) - a lower coefficients (degree D monic)
    uint32_t r[kMaxDeg][kMaxE];   // x^q accumulator mod f

    for (uint64_t ci = c_lo; ci < c_hi; ++ci) {
        Fq c = fq_from_index(F, ci);
        // build f = f_c^N(x) - a: start with x^2 + c (monic), square-and-add-c.
        // g holds coefficients 0..deg-1 of the current monic iterate.
        int deg = 2;
        std::memset(g, 0, sizeof(g));
        for (int u = 0; u < e; ++u) g[0][u] = c[u];
        while (deg < D) {
            // (x^deg + g)^2 = x^{2deg} + 2 g x^{deg} + g^2; then + c
            slab.clear(2 * deg + 1, 2 * e - 1);
            for (int i = 0; i < deg; ++i)
                for (int u = 0; u < e; ++u) {
                    if (!g[i][u]) continue;
                    for (int j = 0; j < deg; ++j)
                        for (int v = 0; v < e; ++v)
                            slab.a[i + j][u + v] += static_cast<uint64_t>(g[i][u]) * g[j][v];
                }
            for (int i = 0; i < deg; ++i)
                for (int u = 0; u < e; ++u)
                    slab.a[deg + i][u] += 2ull * g[i][u];
            for (int s = 0; s < 2 * deg; ++s) K.normalize_slot(slab.a[s]);
            std::memset(g, 0, sizeof(g));
            for (int s = 0; s < 2 * deg; ++s)
                for (int u = 0; u < e; ++u) g[s][u] = static_cast<uint32_t>(slab.a[s][u]);
            // + c
            uint64_t row0[2 * kMaxE - 1];
            std::memset(row0, 0, sizeof(row0));
            for (int u = 0; u < e; ++u) row0[u] = g[0][u] + c[u];
            K.normalize_slot(row0);
            for (int u = 0; u < e; ++u) g[0][u] = static_cast<uint32_t>(row0[u]);
            deg *= 2;
        }
        std::memcpy(f, g, sizeof(g));
        // subtract a (constant)
        if (a_res) {
            f[0][0] = f[0][0] >= a_res ? f[0][0] - a_res : f[0][0] + F.p - a_res;
        }

        // r = x^q mod f by square-and-multiply over the bits of q
        std::memset(r, 0, sizeof(r));
        r[1][0] = 1;  // x  (D >= 4 so x is already reduced)
        int topbit = 63;
        while (topbit > 0 && !((F.q >> topbit) & 1)) --topbit;
        for (int b = topbit - 1; b >= 0; --b) {
            K.square_mod(r, D, f, slab);
            if ((F.q >> b) & 1) K.shift_mod(r, D, f);
        }

        // gcd(r - x, f) via the general F_q routines (cheap relative to powering)
        FqPoly rp(D, fq_zero(F)), fp(D + 1, fq_zero(F));
        for (int s = 0; s < D; ++s)
            for (int u = 0; u < e; ++u) rp[s][u] = r[s][u];
        for (int s = 0; s < D; ++s)
            for (int u = 0; u < e; ++u) fp[s][u] = f[s][u];
        fp[D] = fq_one(F);
        FqPoly x{fq_zero(F), fq_one(F)};
        total += static_cast<uint64_t>(fqp_deg(fqp_gcd(F, fqp_sub(F, rp, x), fp)));
    }
    return total;
}

uint64_t count_affine_brute(const FqCtx& F, int N, uint32_t a_res) {
    uint64_t total = 0;
    Fq a = fq_from_int(F, a_res);
    for (uint64_t ci = 0; ci < F.q; ++ci) {
        Fq c = fq_from_index(F, ci);
        for (uint64_t xi = 0; xi < F.q; ++xi) {
            Fq v = fq_from_index(F, xi);
            for (int i = 0; i < N; ++i) v = fq_add(F, fq_mul(F, v, v), c);
            if (v == a) ++total;
        }
    }
    return total;
}

}  // namespace plab
