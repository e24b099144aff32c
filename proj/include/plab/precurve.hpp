#pragma once

#include <vector>

#include "plab/fq.hpp"
#include "plab/multipoly.hpp"
#include "plab/rational.hpp"

namespace plab {

struct CurveSpec {
    int N = 1;
    Rat a = Rat(0);
};

// f_c^N(x) - a as a polynomial in variables {0: x, 1: c}
MultiPoly<Rat> affine_polynomial(const CurveSpec& spec);

// The N-1 quadrics Z_{N-1}^2 + Z_i Z_N - Z_{i-1}^2 - a Z_N^2 in Z_0..Z_N.
struct QuadricModel {
    int N = 0;
    Rat a;
    std::vector<MultiPoly<Rat>> quadrics;
};

QuadricModel quadric_model(const CurveSpec& spec);

using ProjPointQ = std::vector<Rat>;  // N+1 homogeneous coordinates, not all zero

// psi(x, c) = (x : f_c(x) : ... : f_c^{N-1}(x) : 1)
ProjPointQ embed_point(const Rat& x, const Rat& c, int N);

bool proj_eq(const ProjPointQ& P, const ProjPointQ& Q);
bool is_on_curve(const ProjPointQ& P, const QuadricModel& M);

// all (1 : e_1 : ... : e_{N-1} : 0), e_i = ±1; 2^{N-1} points
std::vector<ProjPointQ> points_at_infinity(int N);

// rank of the (N-1) x (N+1) matrix of partials at P; P must lie on the curve
int jacobian_rank_at(const ProjPointQ& P, const QuadricModel& M);

// same over F_q (coordinates given as Fq elements); used at bad primes
int jacobian_rank_at_fq(const FqCtx& F, const std::vector<Fq>& P, const QuadricModel& M);

// evaluate a quadric-model polynomial at an F_q point
Fq multipoly_eval_fq(const FqCtx& F, const MultiPoly<Rat>& f, const std::vector<Fq>& vals);

// (Z_0 : ... : Z_N) -> (Z_1 : ... : Z_N), landing on X(N-1, a)
ProjPointQ delta_map(const ProjPointQ& P, const QuadricModel& M);

long genus(int N);
long gonality(int N);

struct AffinePoint {
    Rat x, c;
};

struct PointSearchResult {
    std::vector<AffinePoint> affine;
    std::vector<ProjPointQ> at_infinity;
};

// All affine (x, c) on X(N, a) with max(|num|, den) of x <= bound, plus the
// points at infinity. For a = 0 the search walks the exact square chains of
// denominators; for other a it enumerates x and solves for c.
PointSearchResult search_rational_points(const CurveSpec& spec, const Int& height_bound);

}  // namespace plab
