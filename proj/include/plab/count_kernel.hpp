#pragma once

#include <cstdint>

#include "plab/fq.hpp"

namespace plab {

// Sum over c in the index range [c_lo, c_hi) of the number of distinct roots
// of f_c^N(x) - a in F_q, computed as deg gcd(x^q - x mod f, f).
// a_res is the residue of a in F_p. Requires 2 <= N <= 5, e <= 6, p odd.
uint64_t count_affine_range(const FqCtx& F, int N, uint32_t a_res, uint64_t c_lo, uint64_t c_hi);

// Brute-force oracle: enumerate (x, c) pairs; only sensible for small q.
uint64_t count_affine_brute(const FqCtx& F, int N, uint32_t a_res);

}  // namespace plab
