#include "plab/dynamics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace plab {

Rat iterate(const Rat& c, const Rat& x, int n) {
    if (n < 0) throw std::invalid_argument("iterate: n >= 0");
    Rat v = x;
    for (int i = 0; i < n; ++i) v = v * v + c;
    return v;
}

PreimageTree preimage_tree(const Rat& c, const Rat& a, int nmax) {
    if (nmax < 1) throw std::invalid_argument("preimage_tree: nmax >= 1");
    PreimageTree tree;
    tree.c = c;
    tree.a = a;
    std::set<Rat> all;
    std::vector<Rat> current{a};  // level 0
    for (int n = 1; n <= nmax; ++n) {
        std::set<Rat> next;
        for (const Rat& s : current) {
            // x^2 + c = s
            Rat rhs = s - c;
            if (rhs == 0) {
                next.insert(Rat(0));
                continue;
            }
            if (auto r = rational_sqrt(rhs)) {
                next.insert(*r);
                next.insert(-*r);
            }
        }
        tree.levels.emplace_back(next.begin(), next.end());
        all.insert(next.begin(), next.end());
        current.assign(next.begin(), next.end());
    }
    tree.union_set.assign(all.begin(), all.end());
    return tree;
}

SecondPreimageFamily second_preimage_family(const Rat& t) {
    if (t == 0 || t == 1 || t == -1)
        throw std::invalid_argument("second_preimage_family: t must avoid {0, 1, -1}");
    SecondPreimageFamily fam;
    fam.t = t;
    Rat t2 = t * t;
    Rat s = t2 + 1;
    Rat w = 4 * t * (t2 - 1);
    fam.c = -(s * s * s * s) / (16 * t2 * (t2 - 1) * (t2 - 1));
    int k = 0;
    for (int sign_out : {1, -1})
        for (int sign_in : {1, -1}) {
            Rat inner = t2 + 2 * sign_in * t - 1;
            fam.roots[k++] = Rat(sign_out) * s * inner / w;
        }
    for (const Rat& r : fam.roots)
        if (iterate(fam.c, r, 2) != 0)
            throw std::logic_error("second_preimage_family: root fails f_c^2 = 0");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (fam.roots[i] == fam.roots[j])
                throw std::logic_error("second_preimage_family: roots not distinct");
    return fam;
}

std::vector<Rat> bounded_rationals(long bound) {
    std::vector<Rat> out;
    out.push_back(Rat(0));
    for (long h = 1; h <= bound; ++h) {
        // |num| = h, den <= h
        for (long d = 1; d <= h; ++d) {
            if (gcd(Int(h), Int(d)) != 1) continue;
            out.push_back(make_rat(h, d));
            out.push_back(make_rat(-h, d));
        }
        // den = h, |num| < h
        for (long n = 1; n < h; ++n) {
            if (gcd(Int(n), Int(h)) != 1) continue;
            out.push_back(make_rat(n, h));
            out.push_back(make_rat(-n, h));
        }
    }
    return out;
}

KappaResult kappa_search(const Rat& a, long height_bound, int nmax, int threads) {
    if (height_bound < 1 || nmax < 1) throw std::invalid_argument("kappa_search: positive bounds required");
    std::vector<KappaEntry> entries;
    for (const Rat& c : bounded_rationals(height_bound)) entries.push_back({c, 0, false, Rat(0)});
    for (const Rat& t : bounded_rationals(height_bound)) {
        if (t == 0 || t == 1 || t == -1) continue;
        auto fam = second_preimage_family(t);
        entries.push_back({fam.c, 0, true, t});
    }

    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            entries[i].count = preimage_tree(entries[i].c, a, nmax).union_size();
    };
    int nt = std::max(1, threads);
    if (nt == 1) {
        work(0, entries.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (entries.size() + nt - 1) / nt;
        for (int t = 0; t < nt; ++t) {
            size_t lo = t * chunk, hi = std::min(entries.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    KappaResult res;
    res.profile = std::move(entries);
    for (const auto& e : res.profile)
        if (e.count > res.best_count) {
            res.best_count = e.count;
            res.best_c = e.c;
        }
    return res;
}

}  // namespace plab
