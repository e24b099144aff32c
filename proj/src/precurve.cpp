#include "plab/precurve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "plab/dynamics.hpp"
#include "plab/unipoly.hpp"

namespace plab {

MultiPoly<Rat> affine_polynomial(const CurveSpec& spec) {
    if (spec.N < 1) throw std::invalid_argument("affine_polynomial: N >= 1");
    // vars: 0 = x, 1 = c
    MultiPoly<Rat> f = MultiPoly<Rat>::var(2, 0);
    MultiPoly<Rat> c = MultiPoly<Rat>::var(2, 1);
    for (int i = 0; i < spec.N; ++i) f = f * f + c;
    return f - MultiPoly<Rat>::constant(2, spec.a);
}

QuadricModel quadric_model(const CurveSpec& spec) {
    if (spec.N < 2) throw std::invalid_argument("quadric_model: N >= 2 required");
    QuadricModel M;
    M.N = spec.N;
    M.a = spec.a;
    int nv = spec.N + 1;
    auto Z = [&](int i) { return MultiPoly<Rat>::var(nv, i); };
    for (int i = 1; i <= spec.N - 1; ++i) {
        MultiPoly<Rat> q = Z(spec.N - 1) * Z(spec.N - 1) + Z(i) * Z(spec.N) - Z(i - 1) * Z(i - 1) -
                           spec.a * (Z(spec.N) * Z(spec.N));
        M.quadrics.push_back(q);
    }
    return M;
}

ProjPointQ embed_point(const Rat& x, const Rat& c, int N) {
    ProjPointQ P;
    Rat v = x;
    P.push_back(v);
    for (int i = 1; i <= N - 1; ++i) {
        v = v * v + c;
        P.push_back(v);
    }
    P.push_back(Rat(1));
    return P;
}

bool proj_eq(const ProjPointQ& P, const ProjPointQ& Q) {
    if (P.size() != Q.size()) return false;
    // find first nonzero of P
    size_t i0 = P.size();
    for (size_t i = 0; i < P.size(); ++i)
        if (P[i] != 0) { i0 = i; break; }
    if (i0 == P.size()) throw std::invalid_argument("proj_eq: zero vector");
    if (Q[i0] == 0) return false;
    Rat s = P[i0] / Q[i0];
    for (size_t i = 0; i < P.size(); ++i)
        if (P[i] != s * Q[i]) return false;
    return true;
}

bool is_on_curve(const ProjPointQ& P, const QuadricModel& M) {
    if (static_cast<int>(P.size()) != M.N + 1) throw std::invalid_argument("is_on_curve: wrong dimension");
    bool nonzero = false;
    for (const Rat& v : P) nonzero = nonzero || v != 0;
    if (!nonzero) throw std::invalid_argument("is_on_curve: zero vector");
    for (const auto& q : M.quadrics) {
        Rat val = q.eval<Rat>(P, [](const Rat& r) { return r; }, Rat(0));
        if (val != 0) return false;
    }
    return true;
}

std::vector<ProjPointQ> points_at_infinity(int N) {
    if (N < 2) throw std::invalid_argument("points_at_infinity: N >= 2");
    std::vector<ProjPointQ> out;
    for (long mask = 0; mask < (1L << (N - 1)); ++mask) {
        ProjPointQ P(N + 1, Rat(0));
        P[0] = 1;
        for (int i = 1; i <= N - 1; ++i) P[i] = (mask >> (i - 1)) & 1 ? Rat(-1) : Rat(1);
        P[N] = 0;
        out.push_back(P);
    }
    return out;
}

namespace {

int rank_q(std::vector<std::vector<Rat>> m) {
    int rank = 0;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (static_cast<int>(r) == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int jacobian_rank_at(const ProjPointQ& P, const QuadricModel& M) {
    if (!is_on_curve(P, M)) throw std::invalid_argument("jacobian_rank_at: point not on curve");
    std::vector<std::vector<Rat>> J;
    for (const auto& q : M.quadrics) {
        std::vector<Rat> row;
        for (int j = 0; j <= M.N; ++j)
            row.push_back(q.derivative(j).eval<Rat>(P, [](const Rat& r) { return r; }, Rat(0)));
        J.push_back(row);
    }
    return rank_q(std::move(J));
}

Fq multipoly_eval_fq(const FqCtx& F, const MultiPoly<Rat>& f, const std::vector<Fq>& vals) {
    Fq acc = fq_zero(F);
    for (const auto& [e, v] : f.terms) {
        // coefficient: num * den^{-1} mod p
        Int num = v.get_num() % Int(static_cast<long>(F.p));
        Int den = v.get_den() % Int(static_cast<long>(F.p));
        if (den == 0) throw std::domain_error("multipoly_eval_fq: coefficient denominator divisible by p");
        long n = num.get_si();
        Fq t = fq_from_int(F, n);
        Fq d = fq_from_int(F, den.get_si());
        t = fq_mul(F, t, fq_inv(F, d));
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t = fq_mul(F, t, vals[i]);
        acc = fq_add(F, acc, t);
    }
    return acc;
}

int jacobian_rank_at_fq(const FqCtx& F, const std::vector<Fq>& P, const QuadricModel& M) {
    for (const auto& q : M.quadrics)
        if (!fq_is_zero(multipoly_eval_fq(F, q, P)))
            throw std::invalid_argument("jacobian_rank_at_fq: point not on curve");
    // Gaussian elimination over F_q
    std::vector<std::vector<Fq>> m;
    for (const auto& q : M.quadrics) {
        std::vector<Fq> row;
        for (int j = 0; j <= M.N; ++j) row.push_back(multipoly_eval_fq(F, q.derivative(j), P));
        m.push_back(row);
    }
    int rank = 0;
    size_t rows = m.size(), cols = m[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!fq_is_zero(m[r][c])) { piv = r; break; }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < rows; ++r) {
            if (static_cast<int>(r) == rank || fq_is_zero(m[r][c])) continue;
            Fq f = fq_mul(F, m[r][c], fq_inv(F, m[rank][c]));
            for (size_t k = c; k < cols; ++k) m[r][k] = fq_sub(F, m[r][k], fq_mul(F, f, m[rank][k]));
        }
        ++rank;
    }
    return rank;
}

ProjPointQ delta_map(const ProjPointQ& P, const QuadricModel& M) {
    if (M.N < 2) throw std::invalid_argument("delta_map: N >= 2");
    if (!is_on_curve(P, M)) throw std::invalid_argument("delta_map: point not on curve");
    ProjPointQ Q(P.begin() + 1, P.end());
    if (M.N - 1 >= 2) {
        QuadricModel M2 = quadric_model({M.N - 1, M.a});
        if (!is_on_curve(Q, M2)) throw std::logic_error("delta_map: image off X(N-1,a)");
    }
    return Q;
}

long genus(int N) {
    if (N < 1) throw std::invalid_argument("genus: N >= 1");
    if (N == 1) return 0;
    return (N - 3) * (1L << (N - 2)) + 1;
}

long gonality(int N) {
    if (N < 2) throw std::invalid_argument("gonality: N >= 2");
    return 1L << (N - 2);
}

namespace {

// exact square chains for a = 0: walk m_k^2 = d*m_{k+1} + e^2 down to m_0
void descend_chain(const Int& d, const Int& e, const Int& mk, int steps_left, const Int& bound,
                   std::set<std::pair<Rat, Rat>>& found, const Rat& c) {
    if (steps_left == 0) {
        if (abs(mk) > bound) return;
        found.insert({make_rat(mk, d), c});
        return;
    }
    Int rhs = d * mk + e * e;
    if (rhs < 0 || !is_square(rhs)) return;
    Int r = isqrt(rhs);
    descend_chain(d, e, r, steps_left - 1, bound, found, c);
    if (r != 0) descend_chain(d, e, -r, steps_left - 1, bound, found, c);
}

}  // namespace

PointSearchResult search_rational_points(const CurveSpec& spec, const Int& height_bound) {
    PointSearchResult res;
    if (spec.N >= 2) res.at_infinity = points_at_infinity(spec.N);

    if (spec.N == 1) {
        // x^2 + c = a: every x gives exactly one c
        for (const Rat& x : bounded_rationals(height_bound.get_si()))
            res.affine.push_back({x, spec.a - x * x});
        return res;
    }

    if (spec.a == 0) {
        std::set<std::pair<Rat, Rat>> found;
        // c = 0: only x = 0
        found.insert({Rat(0), Rat(0)});
        // c = -e^2/d^2 with e = alpha^2, e ± d = beta^2, gcd(alpha, beta) = 1
        Int amax = isqrt(2 * height_bound) + 2;
        Int bmax = isqrt(3 * height_bound) + 2;
        for (Int alpha = 1; alpha <= amax; ++alpha) {
            for (Int beta = 1; beta <= bmax; ++beta) {
                if (alpha == beta || gcd(alpha, beta) != 1) continue;
                Int e = alpha * alpha;
                Int b2 = beta * beta;
                Int d = abs(b2 - e);
                if (d == 0 || d > height_bound) continue;
                if (gcd(e, d) != 1) continue;
                Rat c = -make_rat(e * e, d * d);
                Int m = alpha * beta;  // m_{N-2} = ±alpha*beta
                for (int sg : {1, -1}) {
                    if (m == 0 && sg < 0) continue;
                    descend_chain(d, e, sg * m, spec.N - 2, height_bound, found, c);
                }
            }
        }
        // the degenerate case e*(e±d) = 0 with e >= 1 forces (d, e) = (1, 1), c = -1
        {
            Rat c(-1);
            descend_chain(Int(1), Int(1), Int(0), spec.N - 2, height_bound, found, c);
        }
        for (const auto& [x, c] : found) {
            if (iterate(c, x, spec.N) != 0) continue;  // exact verification
            if (rat_height(x) > height_bound) continue;
            res.affine.push_back({x, c});
        }
        std::sort(res.affine.begin(), res.affine.end(), [](const AffinePoint& u, const AffinePoint& v) {
            return u.x < v.x || (u.x == v.x && u.c < v.c);
        });
        return res;
    }

    // generic a: enumerate x of bounded height, solve the monic-in-c polynomial exactly
    long B = height_bound.get_si();
    MultiPoly<Rat> f = affine_polynomial(spec);
    int dc = f.deg_in(1);
    for (const Rat& x : bounded_rationals(B)) {
        // g(c) = f_c^N(x) - a as a rational univariate polynomial in c
        std::vector<Rat> coef(dc + 1, Rat(0));
        for (const auto& [ex, v] : f.terms) {
            Rat xp(1);
            for (int k = 0; k < ex[0]; ++k) xp *= x;
            coef[ex[1]] += v * xp;
        }
        QPoly g{std::vector<Rat>(coef)};
        if (g.is_zero()) continue;
        for (const Rat& c : rational_roots(zpoly_from_q(g)))
            if (iterate(c, x, spec.N) == spec.a) res.affine.push_back({x, c});
    }
    std::sort(res.affine.begin(), res.affine.end(), [](const AffinePoint& u, const AffinePoint& v) {
        return u.x < v.x || (u.x == v.x && u.c < v.c);
    });
    res.affine.erase(std::unique(res.affine.begin(), res.affine.end(),
                                 [](const AffinePoint& u, const AffinePoint& v) {
                                     return u.x == v.x && u.c == v.c;
                                 }),
                     res.affine.end());
    return res;
}

}  // namespace plab
