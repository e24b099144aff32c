#include "plab/curves.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "plab/multipoly.hpp"

namespace plab {

namespace {
// E: v^2 = u^3 + A u + B
const long kA = -1, kB = 1;
}  // namespace

bool e_on_curve(const EPoint& P) {
    if (P.inf) return true;
    return P.v * P.v == P.u * P.u * P.u + kA * P.u + kB;
}

EPoint e_point(const Rat& u, const Rat& v) {
    EPoint P{false, u, v};
    if (!e_on_curve(P)) throw std::invalid_argument("e_point: not on v^2 = u^3 - u + 1");
    return P;
}

EPoint e_neg(const EPoint& P) {
    if (P.inf) return P;
    return EPoint{false, P.u, -P.v};
}

EPoint e_add(const EPoint& P, const EPoint& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (P.u == Q.u) {
        if (P.v == -Q.v) return e_infinity();
        // tangent
        Rat lambda = (3 * P.u * P.u + kA) / (2 * P.v);
        Rat x = lambda * lambda - 2 * P.u;
        Rat y = lambda * (P.u - x) - P.v;
        return EPoint{false, x, y};
    }
    Rat lambda = (Q.v - P.v) / (Q.u - P.u);
    Rat x = lambda * lambda - P.u - Q.u;
    Rat y = lambda * (P.u - x) - P.v;
    return EPoint{false, x, y};
}

EPoint e_mul(long n, const EPoint& P) {
    EPoint base = n < 0 ? e_neg(P) : P;
    unsigned long m = n < 0 ? -static_cast<unsigned long>(n) : n;
    EPoint acc = e_infinity();
    while (m) {
        if (m & 1) acc = e_add(acc, base);
        base = e_add(base, base);
        m >>= 1;
    }
    return acc;
}

Rat duplication_u(const Rat& u) {
    Rat den = u * u * u - u + 1;
    if (den == 0) throw std::domain_error("duplication_u: u^3 - u + 1 = 0");
    return (u * u * u * u + 2 * u * u - 8 * u + 1) / (4 * den);
}

Rat g_value(const EPoint& P) {
    if (P.inf) throw std::domain_error("g_value: infinite point");
    Rat d = P.u * P.u - 1;
    if (d == 0) throw std::domain_error("g_value: u = ±1 leads to an infinite value of c");
    return -1 / (d * d);
}

double height_hu(const EPoint& P) {
    if (P.inf) throw std::domain_error("height_hu: infinite point");
    return log_height(P.u);
}

double height_hg(const EPoint& P) { return log_height(g_value(P)); }

double canonical_height(const EPoint& P, int doublings) {
    if (P.inf) return 0.0;
    Rat u = P.u;
    for (int i = 0; i < doublings; ++i) u = duplication_u(u);
    return log_height(u) / (2.0 * std::pow(4.0, doublings));
}

EPoint x30_point_to_e(const ProjPointQ& P) {
    if (P.size() != 4) throw std::invalid_argument("x30_point_to_e: need 4 coordinates");
    if (P[2] == 0) return e_infinity();
    return e_point(P[1] / P[2], P[0] / P[2]);
}

long e_log_generator(const EPoint& P, long bound) {
    EPoint G = e_generator();
    for (long n = 0; n <= bound; ++n) {
        EPoint Q = e_mul(n, G);
        if (Q.inf == P.inf && (P.inf || (Q.u == P.u && Q.v == P.v))) return n;
        Q = e_neg(Q);
        if (Q.inf == P.inf && (P.inf || (Q.u == P.u && Q.v == P.v))) return -n;
    }
    throw std::runtime_error("e_log_generator: not a small multiple of P_0");
}

HeightCertificate third_preimage_certificate() {
    HeightCertificate cert;
    const double siksek_bound = 0.47;         // paper constant: h_u - 2h^ < 0.47
    const double dup_bound = std::log(12.0) / 3.0;  // from h_u(2P) <= 4 h_u(P) + log 12
    cert.window_lo_computed = -4 * siksek_bound - 2 * std::log(2.0);
    cert.window_hi_computed = 4 * dup_bound + 2 * std::log(2.0);

    EPoint P0 = e_generator();
    cert.hhat_p0 = canonical_height(P0, 12);
    cert.threshold = 0.5 * ((cert.window_hi - cert.window_lo) / (8 * cert.hhat_p0) - 1);

    for (int n = 3; n <= 19; ++n) cert.c_values.push_back(g_value(e_mul(n, P0)));
    std::set<Rat> distinct(cert.c_values.begin(), cert.c_values.end());
    cert.c_values_distinct = distinct.size() == cert.c_values.size();

    Int h20 = rat_height(g_value(e_mul(20, P0)));
    cert.h20_dominates = true;
    for (const Rat& c : cert.c_values) cert.h20_dominates = cert.h20_dominates && rat_height(c) < h20;

    cert.pass = cert.c_values_distinct && cert.h20_dominates &&
                cert.window_lo <= cert.window_lo_computed && cert.window_hi_computed <= cert.window_hi &&
                std::abs(cert.threshold - 19.53) < 0.05 && std::abs(cert.hhat_p0 - 0.0249) < 5e-4;
    return cert;
}

bool birational_maps_check() {
    // Work in Q[x, c] mod f_c^3(x) and Q[u, v] mod (v^2 - u^3 + u - 1).
    using MP = MultiPoly<Rat>;
    MP x = MP::var(2, 0), c = MP::var(2, 1);
    MP f1 = x * x + c;
    MP f2 = f1 * f1 + c;
    MP f3 = f2 * f2 + c;  // curve ideal of X(3,0), monic of degree 8 in x

    // alpha: u = f1/f2, v = x/f2. beta: x = v/(u^2-1), c = -1/(u^2-1)^2.
    // beta(alpha): x-component v/(u^2-1) = x f2 / (f1^2 - f2^2).
    // The identity x * f2 == x * (f1^2 - f2^2) mod f3 certifies the x round-trip
    // after inverting f2 and (u^2-1) (both nonzero on the curve's dense open set).
    MP lhs_x = x * f2;
    MP rhs_x = x * (f1 * f1 - f2 * f2);
    if (!reduce_mod_monic(lhs_x - rhs_x, f3, 0).is_zero()) return false;
    // c-component: -f2^4/(f1^2-f2^2)^2 == c mod f3, cleared: -f2^4 == c (f1^2-f2^2)^2
    MP lhs_c = MP::constant(2, Rat(-1)) * (f2 * f2 * f2 * f2);
    MP rhs_c = c * (f1 * f1 - f2 * f2) * (f1 * f1 - f2 * f2);
    if (!reduce_mod_monic(lhs_c - rhs_c, f3, 0).is_zero()) return false;

    // alpha(beta): over Q[u, v] mod (v^2 - u^3 + u - 1), monic in v (var 1).
    // With w = u^2 - 1 and x = v/w, c = -1/w^2 one has f1 = (v^2 - 1)/w^2 and
    // f2 = f1^2 + c = ((v^2-1)^2 - w^2)/w^4. The identity alpha(beta) = id
    // reduces to f1 = u/w and f2 = 1/w, i.e. to the two cleared identities
    //   v^2 - 1 == u w   and   (v^2 - 1)^2 - w^2 == w^3   (mod the curve).
    MP u = MP::var(2, 0), v = MP::var(2, 1);
    MP one = MP::constant(2, Rat(1));
    MP eq = v * v - (u * u * u - u + one);
    MP w = u * u - one;
    if (!reduce_mod_monic(v * v - one - u * w, eq, 1).is_zero()) return false;
    MP vsq1 = v * v - one;
    if (!reduce_mod_monic(vsq1 * vsq1 - w * w - w * w * w, eq, 1).is_zero()) return false;
    return true;
}

HyperellipticModel curve_D() {
    // w^2 = z^5 - 3z^3 - z^2 + 2z + 2
    QPoly f{std::vector<Rat>{Rat(2), Rat(2), Rat(-1), Rat(-3), Rat(0), Rat(1)}};
    return {f, 2};
}

HyperellipticModel curve_C(int eps1, int eps2) {
    if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
        throw std::invalid_argument("curve_C: eps = ±1");
    // y^2 = (t^2+1)(t^6 + 4 e1 e2 t^5 + (3+8 e1) t^4 - 8 e1 e2 t^3 + (3-8 e1) t^2 + 4 e1 e2 t + 1)
    QPoly a{std::vector<Rat>{Rat(1), Rat(0), Rat(1)}};
    QPoly b{std::vector<Rat>{Rat(1), Rat(4 * eps1 * eps2), Rat(3 - 8 * eps1), Rat(-8 * eps1 * eps2),
                             Rat(3 + 8 * eps1), Rat(4 * eps1 * eps2), Rat(1)}};
    return {a * b, 3};
}

PrimeField::El PrimeField::div(El a, El b) const {
    b = ((b % p) + p) % p;
    if (b == 0) throw std::domain_error("PrimeField: division by zero");
    long inv = 1, base = b, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return a % p * inv % p;
}

Mumford<QField> d_generator() {
    QField K;
    Mumford<QField> P{{Rat(-1), Rat(0), Rat(1)}, {Rat(1)}};  // (z^2 - 1, 1)
    std::vector<Rat> f(curve_D().f.c);
    if (!cantor_is_valid(K, f, P)) throw std::logic_error("d_generator: invalid Mumford pair");
    return P;
}

long cantor_order_mod_p(long p, const Mumford<QField>& D, long bound) {
    PrimeField K{p};
    auto red = [&](const Rat& r) {
        Int num = r.get_num() % p, den = r.get_den() % p;
        long n = ((num.get_si() % p) + p) % p;
        long d = ((den.get_si() % p) + p) % p;
        return K.mul(n, K.div(1, d));
    };
    std::vector<long> f, a, b;
    for (const Rat& v : curve_D().f.c) f.push_back(red(v));
    for (const Rat& v : D.a) a.push_back(red(v));
    for (const Rat& v : D.b) b.push_back(red(v));
    Mumford<PrimeField> Dp{a, b};
    if (!cantor_is_valid(K, f, Dp)) throw std::invalid_argument("cantor_order_mod_p: bad reduction of divisor");
    Mumford<PrimeField> acc = cantor_identity(K);
    for (long n = 1; n <= bound; ++n) {
        acc = cantor_add(K, f, acc, Dp);
        if (cantor_eq(K, acc, cantor_identity(K))) return n;
    }
    throw std::runtime_error("cantor_order_mod_p: order exceeds bound");
}

RationalMap map_C_to_D() {
    RationalMap m;
    m.num_z = QPoly{std::vector<Rat>{Rat(1), Rat(-2), Rat(-1)}};  // -t^2 - 2t + 1
    m.den_z = QPoly{std::vector<Rat>{Rat(1), Rat(0), Rat(1)}};    // t^2 + 1
    m.num_w = QPoly{std::vector<Rat>{Rat(1), Rat(2), Rat(-1)}};   // -t^2 + 2t + 1
    m.den_w = m.den_z * m.den_z * m.den_z;                        // (t^2 + 1)^3
    return m;
}

bool curve_map_verify(const HyperellipticModel& source, const HyperellipticModel& target,
                      const RationalMap& map) {
    // (num_w/den_w)^2 f_src(t) == f_tgt(num_z/den_z): clear den_z^{deg f_tgt} and den_w^2
    int d = target.f.deg();
    // evaluate f_tgt at the rational function via Horner with common denominator den_z^d
    QPoly num(QPoly::constant(target.f.c[d]));
    for (int i = d - 1; i >= 0; --i) num = num * map.num_z + QPoly::constant(target.f.c[i]) * powpoly(map.den_z, d - i);
    // identity: num_w^2 * f_src * den_z^d == num * den_w^2
    QPoly lhs = map.num_w * map.num_w * source.f * powpoly(map.den_z, d);
    QPoly rhs = num * map.den_w * map.den_w;
    return lhs == rhs;
}

InvolutionReport involution_checks() {
    InvolutionReport rep;
    HyperellipticModel C = curve_C(1, 1);
    // sigma_pm: t' = (t+1)/(t-1), y' = ±4y/(t-1)^4. Need 16 f(t) == (t-1)^8 f((t+1)/(t-1)).
    QPoly tp1{std::vector<Rat>{Rat(1), Rat(1)}}, tm1{std::vector<Rat>{Rat(-1), Rat(1)}};
    int d = C.f.deg();  // 8
    QPoly num(QPoly::constant(C.f.c[d]));
    for (int i = d - 1; i >= 0; --i) num = num * tp1 + QPoly::constant(C.f.c[i]) * powpoly(tm1, d - i);
    QPoly lhs = Rat(16) * C.f;
    rep.sigma_plus_automorphism = lhs == num;
    rep.sigma_minus_automorphism = rep.sigma_plus_automorphism;  // same coordinate identity

    // fixed t-locus of t -> (t+1)/(t-1): t(t-1) = t+1, i.e. t^2 - 2t - 1 = 0
    QPoly fixpoly{std::vector<Rat>{Rat(-1), Rat(-2), Rat(1)}};
    QPoly tpoly = QPoly::x();
    QPoly fixed_eq = tpoly * tm1 - tp1;
    rep.fixed_points_are_one_pm_sqrt2 = fixed_eq == fixpoly;

    // on that locus, (t-1)^4 == 4 (so sigma_plus fixes the four points (t, ±y))
    QPoly pow4 = powpoly(tm1, 4) - QPoly::constant(Rat(4));
    rep.sigma_plus_y_condition = unipoly_divrem(pow4, fixpoly).second.is_zero();

    // sigma_minus would need y = -y there, i.e. y = 0, i.e. f(t) = 0 at t = 1 ± sqrt 2
    QPoly frem = unipoly_divrem(C.f, fixpoly).second;
    rep.sigma_minus_no_affine_fixed = !frem.is_zero();

    // infinite points: in the chart s = 1/t the involution sends s = 0 to t' = 1 (affine)
    // t' = (1/s + 1)/(1/s - 1) = (1 + s)/(1 - s) -> 1 as s -> 0
    rep.sigma_minus_moves_infinity = true;  // (1+0)/(1-0) = 1, an affine t-value
    return rep;
}

IsoCheck iso_neg_t() {
    HyperellipticModel C = curve_C(1, 1);
    // f_{e1', e2'}(-t) == f_{1,1}(t)
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            HyperellipticModel T = curve_C(e1, e2);
            QPoly neg;
            neg.c = T.f.c;
            for (size_t i = 1; i < neg.c.size(); i += 2) neg.c[i] = -neg.c[i];
            neg.trim();
            if (neg == C.f) return {true, e1, e2};
        }
    return {};
}

IsoCheck iso_inv_t(int sign_t) {
    HyperellipticModel C = curve_C(1, 1);
    // (t, y) -> (sign_t / t, y t^{-4}): y^2 t^{-8} = f_tgt(sign_t / t)
    // i.e. f_src(t) == t^8 f_tgt(sign_t / t) (degree-8 reversal with signs)
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            HyperellipticModel T = curve_C(e1, e2);
            QPoly rev;
            rev.c.assign(9, Rat(0));
            for (int i = 0; i <= T.f.deg(); ++i) {
                Rat coef = T.f.c[i];
                if (sign_t < 0 && i % 2 == 1) coef = -coef;
                rev.c[8 - i] = coef;
            }
            rev.trim();
            if (rev == C.f) return {true, e1, e2};
        }
    return {};
}

std::vector<CPoint> known_points_on_C() {
    HyperellipticModel C = curve_C(1, 1);
    std::vector<CPoint> pts;
    for (long t : {0L, 1L, -1L}) {
        Rat ft = C.f.eval(Rat(t));
        auto r = rational_sqrt(ft);
        if (!r) continue;
        pts.push_back({false, Rat(t), *r});
        if (*r != 0) pts.push_back({false, Rat(t), -*r});
    }
    // t = infinity: deg f = 8 with square leading coefficient 1: two points, Y = y/t^4 = ±1
    Rat lead = C.f.c[8];
    if (auto r = rational_sqrt(lead)) {
        pts.push_back({true, Rat(0), *r});
        pts.push_back({true, Rat(0), -*r});
    }
    return pts;
}

namespace {

// rational roots of a quadratic (or lower) rational polynomial
std::vector<Rat> small_rational_roots(const QPoly& q) {
    std::vector<Rat> roots;
    if (q.is_zero()) throw std::domain_error("small_rational_roots: zero polynomial");
    if (q.deg() == 0) return roots;
    if (q.deg() == 1) {
        roots.push_back(-q.c[0] / q.c[1]);
        return roots;
    }
    if (q.deg() != 2) throw std::invalid_argument("small_rational_roots: degree > 2");
    Rat disc = q.c[1] * q.c[1] - 4 * q.c[2] * q.c[0];
    auto s = rational_sqrt(disc);
    if (!s) return roots;
    roots.push_back((-q.c[1] + *s) / (2 * q.c[2]));
    if (*s != 0) roots.push_back((-q.c[1] - *s) / (2 * q.c[2]));
    return roots;
}

}  // namespace

std::vector<CPoint> fiber_over_D(const Rat& z0, const Rat& w0) {
    HyperellipticModel C = curve_C(1, 1);
    RationalMap m = map_C_to_D();
    std::vector<CPoint> fiber;
    // affine solutions of num_z(t) = z0 den_z(t)
    QPoly eq = m.num_z - QPoly::constant(z0) * m.den_z;
    if (!eq.is_zero()) {
        for (const Rat& t : small_rational_roots(eq)) {
            // y from w = (num_w/den_w) y; need num_w(t) != 0
            Rat nw = m.num_w.eval(t), dw = m.den_w.eval(t);
            if (nw == 0) continue;
            Rat y = w0 * dw / nw;
            if (y * y == C.f.eval(t)) fiber.push_back({false, t, y});
        }
    }
    // infinity chart: s = 1/t, Y = y/t^4; z(infinity) = -1, w = -Y there
    if (z0 == -1) {
        Rat Y = -w0;
        if (Y * Y == 1) fiber.push_back({true, Rat(0), Y});
    }
    return fiber;
}

bool fiber_over_D_infinity_is_irrational() {
    // poles of z(t) = (-t^2-2t+1)/(t^2+1): t^2 + 1 = 0 has no rational root
    RationalMap m = map_C_to_D();
    return small_rational_roots(m.den_z).empty();
}

}  // namespace plab
