#pragma once

#include <array>
#include <optional>
#include <vector>

#include "plab/cantor.hpp"
#include "plab/precurve.hpp"
#include "plab/rational.hpp"
#include "plab/unipoly.hpp"

namespace plab {

// ---------- the elliptic curve E: v^2 = u^3 - u + 1 ----------

struct EPoint {
    bool inf = true;
    Rat u, v;
};

bool e_on_curve(const EPoint& P);
EPoint e_point(const Rat& u, const Rat& v);  // validates
inline EPoint e_infinity() { return EPoint{}; }
EPoint e_neg(const EPoint& P);
EPoint e_add(const EPoint& P, const EPoint& Q);
EPoint e_mul(long n, const EPoint& P);
inline EPoint e_generator() { return e_point(Rat(1), Rat(1)); }  // P_0 = (1,1)

// u(2P) = (u^4 + 2u^2 - 8u + 1) / (4(u^3 - u + 1))
Rat duplication_u(const Rat& u);

// g(P) = -(u(P)^2 - 1)^{-2}, the c-parameter of the third pre-image family
Rat g_value(const EPoint& P);  // error on u = ±1 or infinity

double height_hu(const EPoint& P);  // log max(|num|, den) of u
double height_hg(const EPoint& P);  // h(g(P))
// canonical height w.r.t. the divisor (infinity): lim 4^{-n} h_u(2^n P) / 2
double canonical_height(const EPoint& P, int doublings = 12);

// X(3,0) quadric-model point (Z0:Z1:Z2:Z3) -> point of E
// (u = Z1/Z2, v = Z0/Z2; Z2 = 0 is the group origin)
EPoint x30_point_to_e(const ProjPointQ& P);

// n with P = n * P_0; searches |n| <= bound
long e_log_generator(const EPoint& P, long bound = 64);

struct HeightCertificate {
    double hhat_p0 = 0;
    double window_lo = -3.27, window_hi = 4.71;          // paper constants
    double window_lo_computed = 0, window_hi_computed = 0;  // -4*0.47 - 2log2, 4*log(12)/3 + 2log2
    double threshold = 0;                                // (7.98 / (8 hhat) - 1) / 2
    std::vector<Rat> c_values;                           // g(nP_0), n = 3..19
    bool c_values_distinct = false;
    bool h20_dominates = false;
    bool pass = false;
};

HeightCertificate third_preimage_certificate();

// alpha: X(3,0) -> E, (x,c) |-> (f_c(x)/f_c^2(x), x/f_c^2(x))
// beta:  E -> X(3,0), (u,v) |-> (v/(u^2-1), -1/(u^2-1)^2)
// verified symbolically modulo the curve ideals
bool birational_maps_check();

// ---------- hyperelliptic models ----------

struct HyperellipticModel {
    QPoly f;  // right-hand side y^2 = f
    int genus = 0;
};

HyperellipticModel curve_D();                    // w^2 = z^5 - 3z^3 - z^2 + 2z + 2
HyperellipticModel curve_C(int eps1, int eps2);  // genus-3 family of Prop on 2nd/3rd pre-images

// generic coefficient fields for Cantor arithmetic
struct QField {
    using El = Rat;
    El zero() const { return Rat(0); }
    El one() const { return Rat(1); }
    El add(const El& a, const El& b) const { return a + b; }
    El sub(const El& a, const El& b) const { return a - b; }
    El mul(const El& a, const El& b) const { return a * b; }
    El div(const El& a, const El& b) const { return a / b; }
    El neg(const El& a) const { return -a; }
    bool is_zero(const El& a) const { return a == 0; }
    bool eq(const El& a, const El& b) const { return a == b; }
};

struct PrimeField {
    long p;
    using El = long;
    El zero() const { return 0; }
    El one() const { return 1; }
    El add(El a, El b) const { return (a + b) % p; }
    El sub(El a, El b) const { return ((a - b) % p + p) % p; }
    El mul(El a, El b) const { return a * b % p; }
    El div(El a, El b) const;
    El neg(El a) const { return (p - a % p) % p; }
    bool is_zero(El a) const { return a % p == 0; }
    bool eq(El a, El b) const { return ((a - b) % p + p) % p == 0; }
};

// the generator class P = [(1,1) - (-1,-1)] of J_D(Q), as (z^2 - 1, 1)
Mumford<QField> d_generator();

// order of the reduction of D in J_D(F_p); brute-force bound guards
long cantor_order_mod_p(long p, const Mumford<QField>& D, long bound = 10000);

// ---------- maps between the auxiliary curves ----------

struct RationalMap {
    // coordinate map (t, y) -> (num_z/den_z, (num_w/den_w) * y)
    QPoly num_z, den_z, num_w, den_w;
};

RationalMap map_C_to_D();

// target equation pulled back along the map vanishes modulo the source ideal
bool curve_map_verify(const HyperellipticModel& source, const HyperellipticModel& target,
                      const RationalMap& map);

// (t,y) -> (-t, y), (1/t, y/t^4), (-1/t, y/t^4): which (eps1, eps2) each lands on
struct IsoCheck {
    bool ok = false;
    int eps1 = 0, eps2 = 0;
};
IsoCheck iso_neg_t();       // t -> -t
IsoCheck iso_inv_t(int sign_t);  // t -> sign_t / t, y -> y t^{-4}

struct InvolutionReport {
    bool sigma_plus_automorphism = false;
    bool sigma_minus_automorphism = false;
    bool fixed_points_are_one_pm_sqrt2 = false;  // fixed t-locus of sigma_plus is t^2-2t-1
    bool sigma_plus_y_condition = false;         // (t-1)^4 = 4 on that locus
    bool sigma_minus_no_affine_fixed = false;    // y = 0 impossible there
    bool sigma_minus_moves_infinity = false;     // infinite points land over t = 1
};
InvolutionReport involution_checks();

struct CPoint {
    bool at_infinity = false;
    Rat t, y;  // for infinity: y = limit of y/t^4 (the two branches)
};
std::vector<CPoint> known_points_on_C();  // the 8 points with t in {0, ±1, inf}

// fibers of map_C_to_D over a point (z0, w0) of D; exact rational solutions
std::vector<CPoint> fiber_over_D(const Rat& z0, const Rat& w0);
// fiber over the point at infinity of D: t^2 + 1 = 0, no rational points
bool fiber_over_D_infinity_is_irrational();

}  // namespace plab
