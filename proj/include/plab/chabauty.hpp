#pragma once

#include <array>
#include <vector>

#include "plab/padic.hpp"
#include "plab/precurve.hpp"
#include "plab/rational.hpp"
#include "plab/series.hpp"

namespace plab {

// The ten known rational points of X(4,0) in the paper's order:
// P_1..P_8 the points at infinity (signs ordered with the last flipping fastest),
// P_9 = psi(0,0), P_10 = psi(0,-1).
std::vector<ProjPointQ> x40_known_points();

struct X40Census {
    std::vector<std::vector<uint32_t>> points;  // normalized reps over F_3
    bool bijection_ok = false;                  // census == reductions of P_1..P_10
};

X40Census x40_f3_census();

// Paper indices j (1..10) with sum_i H[i] * Pbar_j[i] = 0 mod 3.
std::vector<int> hyperplane_vanishing_pattern(const std::array<long, 5>& H);

// Residue-disk branch of X(4,0)/Q_3 at one of the points at infinity P_j.
// Chart Z_0 = 1; the uniformizer is T = z_k - z_k(P) for the lowest coordinate
// k whose complementary 3x3 Jacobian minor is a 3-adic unit. Coefficients are
// exact rationals (3-integral), so the curve equations hold to O(T^terms)
// exactly, which is the correctness oracle for every disk computation.
struct ResidueDisk {
    int paper_index = 0;
    int coord = 0;                  // uniformizer coordinate (1..4)
    Rat center_T = Rat(0);          // nonzero after recentering
    std::array<Series<Rat>, 5> z;   // z_0 = 1, z_1..z_4 along the branch
    Series<Rat> jac;                // det of the complementary minor along the branch
    int terms = 0;
};

ResidueDisk branch_expand(int paper_index, int terms = 12);
bool disk_residual_ok(const ResidueDisk& disk);
// re-expand the same branch around T = T0 (3 | T0): lifted base point moves
// within the residue class
ResidueDisk recenter_disk(const ResidueDisk& disk, const Rat& T0);

// Mod-3 Coleman integrals lambda_1, lambda_2 of eta_1 = w_1 + 32 w_3 + 35 w_4
// and eta_2 = w_2 - 7 w_3 - 34 w_4 on the disk, after T = 3 tau and division
// by 3^nu. Coefficients ascending in F_3[tau].
struct LambdaPair {
    std::vector<long> l1, l2;
    long nu1 = 0, nu2 = 0;
};

LambdaPair coleman_lambda(const ResidueDisk& disk);

std::vector<long> f3_gcd(std::vector<long> a, std::vector<long> b);

// ---- mod-3 Chabauty data for the genus-2 curve D ----

struct AnnihilatorResult {
    long v_dzw = 0;              // 3-adic valuation of <9P, dz/w>
    long v_zdzw = 0;             // valuation (or attained precision) of <9P, z dz/w>
    bool zdzw_below_precision = false;  // pairing with z dz/w vanishes to working precision
    bool direction_is_zdzw = false;     // kernel direction = (0 : 1), i.e. z dz/w mod 3
    long order_mod_3 = 0;               // order of the reduced generator (expect 9)
};

// Computes 9P on J_D over Q, factors its Mumford a-polynomial over Q_3 (here:
// the unramified quadratic extension), and evaluates the two tiny Coleman
// integrals against dz/w and z dz/w by symmetric evaluation in Q_3(sqrt(d)).
AnnihilatorResult d_annihilator(long precision);

struct DCertificate {
    int d_f3_count = 0;                  // expect 5
    long generator_order_mod3 = 0;       // expect 9
    bool omega_nonvanishing = false;     // z dz/w at every point of D(F_3)
    bool two_torsion_ok = false;         // (z^2-2, 0) doubles to the identity
    std::vector<std::pair<Rat, Rat>> known_affine;  // (±1, ±1)
    bool has_infinity_point = true;
    int recovered_C_points = 0;          // fibers over the five points, expect 8
    bool fibers_match_known = false;
    bool infinity_fiber_irrational = false;
    bool annihilator_ok = false;
    bool pass = false;
};

DCertificate d_rational_points_certificate(long precision = 10);

// #D(F_{p^e}) on the smooth model (affine + one point at infinity)
long d_count_points(long p, int e);

}  // namespace plab
