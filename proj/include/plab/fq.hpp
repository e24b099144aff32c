#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plab {

// Context for F_{p^e} with a fixed monic irreducible modulus of degree e.
// The default modulus is the lowest-lexicographic monic irreducible, where
// coefficient tuples (a_{e-1},...,a_1,a_0) are compared as base-p integers.
// It is recorded in all cache entries so counts are reproducible.
struct FqCtx {
    uint32_t p = 0;
    int e = 1;
    uint64_t q = 0;
    std::vector<uint32_t> modulus;  // ascending coefficients, size e+1, monic

    FqCtx() = default;
    FqCtx(uint32_t p_, int e_);
    FqCtx(uint32_t p_, std::vector<uint32_t> explicit_modulus);

    std::string modulus_str() const;  // "a0,a1,...,1"
};

using Fq = std::vector<uint32_t>;  // e coordinates, ascending powers of the generator

Fq fq_zero(const FqCtx& F);
Fq fq_one(const FqCtx& F);
Fq fq_from_int(const FqCtx& F, long n);
Fq fq_from_index(const FqCtx& F, uint64_t idx);  // base-p digits
uint64_t fq_index(const FqCtx& F, const Fq& a);
bool fq_is_zero(const Fq& a);
Fq fq_add(const FqCtx& F, const Fq& a, const Fq& b);
Fq fq_sub(const FqCtx& F, const Fq& a, const Fq& b);
Fq fq_neg(const FqCtx& F, const Fq& a);
Fq fq_mul(const FqCtx& F, const Fq& a, const Fq& b);
Fq fq_inv(const FqCtx& F, const Fq& a);
Fq fq_pow(const FqCtx& F, Fq a, uint64_t n);
bool fq_is_square(const FqCtx& F, const Fq& a);  // a != 0

// Dense polynomials over F_q, ascending coefficients.
using FqPoly = std::vector<Fq>;

FqPoly fqp_trim(const FqCtx& F, FqPoly f);
int fqp_deg(const FqPoly& f);  // -1 for zero
FqPoly fqp_add(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_sub(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mul(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_rem(const FqCtx& F, FqPoly a, const FqPoly& b);
FqPoly fqp_monic(const FqCtx& F, FqPoly f);
FqPoly fqp_gcd(const FqCtx& F, FqPoly a, FqPoly b);
FqPoly fqp_derivative(const FqCtx& F, const FqPoly& f);
Fq fqp_eval(const FqCtx& F, const FqPoly& f, const Fq& x);
// x^n mod f by square-and-multiply
FqPoly fqp_xpow_mod(const FqCtx& F, uint64_t n, const FqPoly& f);

// Number of distinct roots of f in F_q, as deg gcd(x^q - x mod f, f).
int fq_root_count(const FqCtx& F, const FqPoly& f);
// All roots of f in F_q (each once).
std::vector<Fq> fq_roots(const FqCtx& F, const FqPoly& f, uint64_t seed = 1);

// Monic irreducible factors with multiplicities (Cantor-Zassenhaus).
std::vector<std::pair<FqPoly, int>> fq_factor(const FqCtx& F, FqPoly f, uint64_t seed = 1);

bool fq_poly_irreducible(const FqCtx& F, const FqPoly& f);

}  // namespace plab
