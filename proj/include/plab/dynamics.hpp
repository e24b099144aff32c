#pragma once

#include <array>
#include <vector>

#include "plab/rational.hpp"

namespace plab {

// f_c(x) = x^2 + c over Q
struct QuadraticMap {
    Rat c;
    Rat operator()(const Rat& x) const { return x * x + c; }
};

Rat iterate(const Rat& c, const Rat& x, int n);

struct PreimageTree {
    Rat c, a;
    std::vector<std::vector<Rat>> levels;  // levels[k] = f_c^{-(k+1)}(a)(Q), sorted
    std::vector<Rat> union_set;            // deduplicated union over all levels, sorted

    size_t union_size() const { return union_set.size(); }
};

PreimageTree preimage_tree(const Rat& c, const Rat& a, int nmax);

struct SecondPreimageFamily {
    Rat t, c;
    std::array<Rat, 4> roots;  // the four rational second pre-images of 0
};

// c(t) = -(t^2+1)^4 / (16 t^2 (t^2-1)^2); t outside {0, 1, -1}
SecondPreimageFamily second_preimage_family(const Rat& t);

struct KappaEntry {
    Rat c;
    size_t count;
    bool from_family = false;
    Rat t;  // parameter when from_family
};

struct KappaResult {
    Rat best_c;
    size_t best_count = 0;
    std::vector<KappaEntry> profile;  // all candidates in enumeration order
};

// Maximize the union size of preimage_tree(c, a, nmax) over all c with
// max(|num|, den) <= height_bound (Farey order), plus the Prop-5.1 family
// over parameters t of the same bounded height.
KappaResult kappa_search(const Rat& a, long height_bound, int nmax, int threads = 1);

// fractions with max(|num|, den) <= bound, Farey/Stern-Brocot order by height
std::vector<Rat> bounded_rationals(long bound);

}  // namespace plab
