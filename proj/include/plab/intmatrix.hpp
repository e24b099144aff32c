#pragma once

#include <vector>

#include "plab/rational.hpp"

namespace plab {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}
    static IntMat identity(int n);

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend IntMat operator*(const IntMat& x, const IntMat& y);
    friend bool operator==(const IntMat& x, const IntMat& y);
    std::vector<Int> apply(const std::vector<Int>& v) const;  // M * v
    Int det() const;                                          // exact, fraction-free
};

// U * M * V = D with U, V unimodular, D diagonal with d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
    IntMat D, U, V, Vinv;
    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMat& M);

// Basis (as columns) of the integer kernel lattice {x : M x = 0}; saturated.
IntMat integer_kernel(const IntMat& M);

}  // namespace plab
